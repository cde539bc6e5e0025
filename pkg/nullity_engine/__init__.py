"""
Nullity engine.

Constructions of Cantor and Swiss-cheese sets, nullity classification,
Fourier-side norms of characteristic functions and grid capacities.
"""
