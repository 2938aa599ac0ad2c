# Project Settings
PROJECT_NAME = 'NominalCA'
DEBUG = True

# Database
# Runs, classifications and verifications are small records; SQLite is enough
# for a desk setup. Point this at PostgreSQL for a shared deployment.
DATABASE = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': 'nominalca.sqlite3',
    }
}

# Redis (cache and job queues)
REDIS_URL = 'redis://127.0.0.1:6379'

CACHES = {
    'default': {
        'BACKEND': 'django_redis.cache.RedisCache',
        'LOCATION': f'{REDIS_URL}/1',
        'OPTIONS': {
            'CLIENT_CLASS': 'django_redis.client.DefaultClient',
            # a missing Redis only costs cache misses
            'IGNORE_EXCEPTIONS': True,
        }
    },
}

RQ_QUEUES = {
    'default': {
        'HOST': 'localhost',
        'PORT': 6379,
        'DB': 0,
        'DEFAULT_TIMEOUT': 360,
    },
    'high': {
        'HOST': 'localhost',
        'PORT': 6379,
        'DB': 0,
        'DEFAULT_TIMEOUT': 360,
    },
    'low': {
        'HOST': 'localhost',
        'PORT': 6379,
        'DB': 0,
        'DEFAULT_TIMEOUT': 3600,
    }
}

# Automata
NCA_DEFAULT_WIDTH = 12  # cells used by bare `uniform` / `distinct` inits
NCA_MIN_PARTICLE_LIFETIME = 3  # periods
NCA_BACKGROUND_COVER = 0.5  # static share of a row above which it is background
NCA_SWEEP_PROCESSES = 1  # >1 fans classification/verification sweeps over a pool
NCA_RENDER_CELL_SIZE = 4  # pixels per cell
NCA_CLASSIFY_CACHE_SECONDS = 60 * 60 * 24
NCA_SUITE_SEEDS = [1, 2, 3, 4, 5]

# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'level': 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'ERROR',
            'class': 'logging.FileHandler',
            'filename': 'error.log',
            'delay': True,
        },
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'level': 'ERROR',
            'propagate': True,
        },
        'automata': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}
