# Computational toolkit for WZW modular categories and their auto-equivalences
