"""VANET connectivity graphs and their Laplacian matrices."""
