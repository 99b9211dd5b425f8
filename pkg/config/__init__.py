# Configuration package for the tutte-sign settings
