"""
WSGI entry point serving the nullity API (classification, thresholds,
certificates and the exact interval-norm demonstration).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sobolev_nullity_service.settings')

application = get_wsgi_application()
