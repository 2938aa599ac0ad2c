"""
Pytest wiring for the Django test suite: configure settings and create the
test database the same way `python manage.py test` does.
"""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
django.setup()

from django.test.runner import DiscoverRunner  # noqa: E402

_runner = DiscoverRunner(verbosity=0, interactive=False)
_state = {}


def pytest_sessionstart(session):
    _runner.setup_test_environment()
    _state['old_config'] = _runner.setup_databases()


def pytest_sessionfinish(session, exitstatus):
    if 'old_config' in _state:
        _runner.teardown_databases(_state.pop('old_config'))
        _runner.teardown_test_environment()
