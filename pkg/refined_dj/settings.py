"""
Django settings for refined_dj project.

The project has no database and no HTTP surface; it exists to host the
``oracles`` app and its management commands.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY',
    'django-insecure-q7m$0r4cle-c0mp1ler-dev-only-k3y-9v2x#p8d!w',
)

DEBUG = os.environ.get('DJANGO_DEBUG', '0') == '1'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'oracles',
]


# Nothing is persisted beyond plain files written by the commands.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


def _env(name, default, cast):
    value = os.environ.get(f'REFINED_DJ_{name}')
    if value is None or value == '':
        return default
    return cast(value)


def _optional_int(value):
    return None if value.lower() == 'none' else int(value)


# Numerics and command defaults. Domain modules take these as arguments;
# only the management commands read them.
REFINED_DJ = {
    'TOLERANCE': _env('TOLERANCE', 1e-9, float),
    'SEED': _env('SEED', 0, int),
    'SHOTS': _env('SHOTS', None, _optional_int),
    'ENUMERATION_MAX_QUBITS': _env('ENUMERATION_MAX_QUBITS', 4, int),
    'JSON_INDENT': _env('JSON_INDENT', 2, int),
}


REST_FRAMEWORK = {
    'UNICODE_JSON': True,
    'COMPACT_JSON': False,
    'STRICT_JSON': True,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
}


# Logging goes to stderr only; stdout carries command output.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'bracketed': {
            'format': '[{levelname}] {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'bracketed',
        },
    },
    'loggers': {
        'oracles': {
            'handlers': ['console'],
            'level': os.environ.get('REFINED_DJ_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
