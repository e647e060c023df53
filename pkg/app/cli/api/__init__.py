# app.cli.api package
