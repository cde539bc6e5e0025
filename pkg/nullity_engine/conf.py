"""
Access to the numerical configuration dicts declared in settings.

Each dict in settings overrides the defaults below key by key, so a project
may set only what it changes.
"""

from django.conf import settings

DEFAULTS = {
    'FRACTAL_CONFIG': {
        'precision_bits': 128,
        'max_level_depth': 32,
        'j0_scan_limit': 10**6,
        'max_exact_exponent_bits': 1 << 16,
    },
    'CLASSIFIER_CONFIG': {
        'threshold_atol': 1e-12,
    },
    'SERIES_PROBE_CONFIG': {
        'max_index': 4096,
        'window': 16,
        'ratio_tolerance': 1e-6,
    },
    'QUADRATURE_CONFIG': {
        'cutoff': 2.0**20,
        'points_per_panel': 64,
        'rule': 'gauss-legendre',
        'tail_estimate': True,
        'small_xi_threshold': 1e-4,
        'chunk_size': 1 << 15,
    },
    'CAPACITY_CONFIG': {
        'half_width': 16.0,
        'points': 2**14,
        'padding': 1,
        'kkt_tolerance': 1e-8,
        'cg_tolerance': 1e-10,
        'max_iterations': 10**5,
        'max_active_set_rounds': 500,
        'workers': 1,
    },
    'EXPERIMENT_CONFIG': {
        'golden_table': None,
        'threads': 1,
    },
}


def get_config(name):
    """
    Return the effective configuration dict ``name``.

    Args:
        name (str): One of the keys of ``DEFAULTS``

    Returns:
        dict: Defaults overlaid with the values found in settings
    """
    merged = dict(DEFAULTS[name])
    merged.update(getattr(settings, name, {}) or {})
    return merged
