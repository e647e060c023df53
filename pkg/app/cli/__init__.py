# app.cli package
