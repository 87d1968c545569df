"""coxlab: exact Cox-ring presentations of Del Pezzo surfaces (r = 4, 5, 6).

Constructs the conic-relation ideals Q_r from blown-up point coordinates,
computes Groebner bases and multigraded Hilbert data under weight-refined
monomial orders, and verifies the quadratic-generation statements at desk
scale.
"""

__version__ = "0.1.0"
