# app.reps package
