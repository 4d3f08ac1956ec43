# Search package
