"""
Utility helpers shared by the engine: number conversions and serialization.
"""
