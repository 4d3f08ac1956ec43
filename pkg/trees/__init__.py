# Trees package
