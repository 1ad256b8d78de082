"""cutleg: Gegenbauer and Ferrers special functions with identity checks."""
