"""
Django settings for app project.

Every value that differs between machines lives in config.py
(copy config_example.py to start).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

from pathlib import Path
import os

try:
    import config
except ImportError:
    # fresh checkout without a local config.py
    import config_example as config

BASE_DIR = Path(__file__).resolve().parent.parent
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = getattr(config, 'SECRET_KEY', 'nca-local-3q!k8v#w1m_2z9@r5t$y7u&p0x*e4c')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config.DEBUG
ALLOWED_HOSTS = ["*"]

PROJECT_NAME = config.PROJECT_NAME


# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',
    'rest_framework',
    'django_rq',
    'automata',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'app.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
                'django.contrib.auth.context_processors.auth',
                'django.contrib.messages.context_processors.messages',
            ],
        },
    },
]

WSGI_APPLICATION = 'app.wsgi.application'


# Database
# https://docs.djangoproject.com/en/5.1/ref/settings/#databases

DATABASES = config.DATABASE


# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

CACHES = config.CACHES

# Static files (CSS, JavaScript, Images)
# https://docs.djangoproject.com/en/5.1/howto/static-files/

STATIC_URL = '/static/'
STATIC_ROOT = os.path.join(BASE_DIR, 'staticfiles')

RQ_QUEUES = config.RQ_QUEUES

# Automata
NCA_DEFAULT_WIDTH = config.NCA_DEFAULT_WIDTH
NCA_MIN_PARTICLE_LIFETIME = config.NCA_MIN_PARTICLE_LIFETIME
NCA_BACKGROUND_COVER = config.NCA_BACKGROUND_COVER
NCA_SWEEP_PROCESSES = config.NCA_SWEEP_PROCESSES
NCA_RENDER_CELL_SIZE = config.NCA_RENDER_CELL_SIZE
NCA_CLASSIFY_CACHE_SECONDS = config.NCA_CLASSIFY_CACHE_SECONDS
NCA_SUITE_SEEDS = config.NCA_SUITE_SEEDS

LOGGING = config.LOGGING
