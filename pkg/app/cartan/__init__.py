# app.cartan package
