# app.screener package
