import os
from unittest.mock import patch

from django.conf import settings
from django.test import SimpleTestCase

from sobolev_nullity_service.settings import env


class SettingsTestCase(SimpleTestCase):
    """Test case for the environment-driven settings"""

    def test_environment_is_read_by_django_environ(self):
        with patch.dict(os.environ, {'NULLITY_PRECISION_BITS': '96'}):
            self.assertEqual(env.int('NULLITY_PRECISION_BITS', default=128), 96)
        self.assertEqual(env.int('NULLITY_UNSET_VARIABLE', default=128), 128)

    def test_manifest_has_no_separate_dotenv_loader(self):
        requirements = (settings.BASE_DIR / 'requirements.txt').read_text(encoding='utf-8')
        packages = {line.split('==')[0].strip().lower() for line in requirements.splitlines() if line.strip()}
        self.assertIn('django-environ', packages)
        self.assertNotIn('python-dotenv', packages)
