# pkg package

