# app.braiding package
