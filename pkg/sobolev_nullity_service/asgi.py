"""
ASGI entry point for the nullity API.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sobolev_nullity_service.settings')

application = get_asgi_application()
