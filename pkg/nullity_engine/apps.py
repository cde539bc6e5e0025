import logging

import mpmath
from django.apps import AppConfig

logger = logging.getLogger(__name__)


class NullityEngineConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'nullity_engine'

    def ready(self):
        """
        Set the working precision used for float-backed Cantor lengths and
        log-space series terms.
        """
        from nullity_engine.conf import get_config

        bits = get_config('FRACTAL_CONFIG')['precision_bits']
        mpmath.mp.prec = bits
        logger.debug(f"mpmath working precision set to {bits} bits")
