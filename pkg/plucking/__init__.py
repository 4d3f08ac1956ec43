# Plucking package
