"""
Decision rules for (s,p)-nullity: elementary facts, dimension thresholds,
the Cantor series criterion, certificates and product bounds.
"""

from nullity_engine.classification.basic import (
    BoundaryRegularity,
    SetFlag,
    ThresholdCurve,
    basic_verdict,
    boundary_verdict,
    dimension_verdict,
    embedding_implies,
    hausdorff_threshold,
    threshold_curve,
    threshold_transfer,
    union_verdict,
)
from nullity_engine.classification.cantor_classifier import (
    cantor_log2_term,
    cantor_term,
    classify_cantor,
)
from nullity_engine.classification.certificates import (
    CheeseSums,
    SuperFatParameters,
    cheese_certificate,
    cheese_sums,
    cheese_verdict,
    fat_beta_range,
    fat_cheese_sum,
    fat_threshold,
    superfat_params,
)
from nullity_engine.classification.index import SobolevIndex, compare
from nullity_engine.classification.products import (
    NullityTransfer,
    ProductBounds,
    factor_nullity_transfer,
    product_bounds,
    tensor_lower,
    tensor_upper,
)
from nullity_engine.classification.series import profile_series_outcome, series_probe
from nullity_engine.classification.verdicts import (
    ConvergenceOutcome,
    ConvergenceVerdict,
    Justification,
    NullityVerdict,
    Verdict,
)

__all__ = [
    'BoundaryRegularity',
    'CheeseSums',
    'ConvergenceOutcome',
    'ConvergenceVerdict',
    'Justification',
    'NullityTransfer',
    'NullityVerdict',
    'ProductBounds',
    'SetFlag',
    'SobolevIndex',
    'SuperFatParameters',
    'ThresholdCurve',
    'Verdict',
    'basic_verdict',
    'boundary_verdict',
    'cantor_log2_term',
    'cantor_term',
    'cheese_certificate',
    'cheese_sums',
    'cheese_verdict',
    'classify_cantor',
    'compare',
    'dimension_verdict',
    'embedding_implies',
    'factor_nullity_transfer',
    'fat_beta_range',
    'fat_cheese_sum',
    'fat_threshold',
    'hausdorff_threshold',
    'product_bounds',
    'profile_series_outcome',
    'series_probe',
    'superfat_params',
    'tensor_lower',
    'tensor_upper',
    'threshold_curve',
    'threshold_transfer',
    'union_verdict',
]
