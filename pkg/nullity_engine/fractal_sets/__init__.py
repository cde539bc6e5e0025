"""
Cantor and Swiss-cheese set constructions with exact interval arithmetic.
"""

from nullity_engine.fractal_sets.cantor import (
    CantorSpec,
    MeasureLimit,
    gap,
    length,
    level_set,
    log2_inverse_length,
    make_cantor,
    measure_limit,
    validate,
)
from nullity_engine.fractal_sets.families import CantorFamily, GrowthProfile, ZOO_FAMILIES
from nullity_engine.fractal_sets.intervals import (
    IntervalSet,
    shift,
    symmetric_difference,
    total_length,
)
from nullity_engine.fractal_sets.swiss_cheese import (
    Ball,
    BallCloud,
    Box,
    fat_cantor_cheese,
    make_swiss_cheese,
)

__all__ = [
    'Ball',
    'BallCloud',
    'Box',
    'CantorFamily',
    'CantorSpec',
    'GrowthProfile',
    'IntervalSet',
    'MeasureLimit',
    'ZOO_FAMILIES',
    'fat_cantor_cheese',
    'gap',
    'length',
    'level_set',
    'log2_inverse_length',
    'make_cantor',
    'make_swiss_cheese',
    'measure_limit',
    'shift',
    'symmetric_difference',
    'total_length',
    'validate',
]
