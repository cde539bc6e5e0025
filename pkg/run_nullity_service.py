#!/usr/bin/env python
"""
Run script for the Sobolev nullity HTTP API on the configured port
"""
import os

if __name__ == "__main__":
    # Set Django settings
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sobolev_nullity_service.settings')

    import django
    from django.conf import settings
    from django.core.management import execute_from_command_line

    django.setup()
    execute_from_command_line(['manage.py', 'runserver', f'0.0.0.0:{settings.PORT}'])
