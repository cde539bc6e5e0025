"""
Django settings for sobolev_nullity_service project.

Generated by 'django-admin startproject' using Django 5.2.

For more information on this file, see
https://docs.djangoproject.com/en/5.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import environ

# Initialize environ
env = environ.Env()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Read .env file
environ.Env.read_env(BASE_DIR / '.env')

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env('SECRET_KEY', default='insecure-development-key-change-me')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = env.bool('DEBUG', default=True)

ALLOWED_HOSTS = env.list('ALLOWED_HOSTS', default=['localhost', '127.0.0.1', 'testserver'])


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'api',
    'nullity_engine',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'sobolev_nullity_service.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'sobolev_nullity_service.wsgi.application'


# Database
# Nothing is persisted; the sqlite file only satisfies Django's checks.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Server Port
PORT = env.int('PORT', default=8001)

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': ['rest_framework.permissions.AllowAny'],
    'DEFAULT_RENDERER_CLASSES': ['rest_framework.renderers.JSONRenderer'],
    'UNAUTHENTICATED_USER': None,
}

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
        'nullity_engine': {
            'handlers': ['console'],
            'level': env('NULLITY_LOG_LEVEL', default='INFO'),
            'propagate': False,
        },
        'api': {
            'handlers': ['console'],
            'level': env('NULLITY_LOG_LEVEL', default='INFO'),
            'propagate': False,
        },
    },
}

# Cantor constructions and interval arithmetic
FRACTAL_CONFIG = {
    'precision_bits': env.int('NULLITY_PRECISION_BITS', default=128),
    'max_level_depth': 32,
    'j0_scan_limit': 10**6,
    'max_exact_exponent_bits': 1 << 16,
}

# Verdict comparisons at a threshold
CLASSIFIER_CONFIG = {
    'threshold_atol': 1e-12,
}

# Numeric series probe
SERIES_PROBE_CONFIG = {
    'max_index': 4096,
    'window': 16,
    'ratio_tolerance': 1e-6,
}

# Fourier-side norms
QUADRATURE_CONFIG = {
    'cutoff': 2.0**20,
    'points_per_panel': 64,
    'rule': 'gauss-legendre',
    'tail_estimate': True,
    'small_xi_threshold': 1e-4,
    'chunk_size': 1 << 15,
}

# Grid capacity solvers
CAPACITY_CONFIG = {
    'half_width': 16.0,
    'points': 2**14,
    'padding': 1,
    'kkt_tolerance': 1e-8,
    'cg_tolerance': 1e-10,
    'max_iterations': 10**5,
    'max_active_set_rounds': 500,
    'workers': env.int('NULLITY_FFT_WORKERS', default=1),
}

# Batch experiments
EXPERIMENT_CONFIG = {
    'golden_table': BASE_DIR / 'nullity_engine' / 'data' / 'zoo_golden.csv',
    'threads': env.int('NULLITY_THREADS', default=1),
}
