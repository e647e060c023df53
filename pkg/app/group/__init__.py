# app.group package
