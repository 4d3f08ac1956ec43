# Polynomial package
