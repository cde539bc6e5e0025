import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sobolev_nullity_service.settings')
django.setup()
