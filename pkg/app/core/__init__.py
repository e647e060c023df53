# app.core package
