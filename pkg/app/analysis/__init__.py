# app.analysis package
