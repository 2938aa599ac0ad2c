import hashlib
import logging
import time
from multiprocessing.pool import ThreadPool

from django.conf import settings
from django.core.cache import cache

logger = logging.getLogger(__name__)


class Utils:
    @staticmethod
    def fan_out(func, items, processes=None):
        """
        Map func over items, in order.

        Uses a thread pool of NCA_SWEEP_PROCESSES workers when that is above 1,
        otherwise a plain loop. The result order always matches items, so
        callers can merge deterministically.
        """
        items = list(items)
        processes = processes or settings.NCA_SWEEP_PROCESSES

        if processes <= 1 or len(items) <= 1:
            return [func(item) for item in items]

        with ThreadPool(processes=processes) as pool:
            return pool.map(func, items)

    @staticmethod
    def cache_key(*parts):
        raw = ':'.join(str(p) for p in parts)
        return 'nca:%s' % hashlib.md5(raw.encode()).hexdigest()

    @staticmethod
    def clear_cache():
        cache.clear()

    @staticmethod
    def get_from_cache(key):
        return cache.get(key)

    @staticmethod
    def set_to_cache(key, value, exp=60 * 60 * 24 * 30):
        cache.set(key, value, timeout=exp)

    @staticmethod
    def elapsed(start):
        return round(time.perf_counter() - start, 3)
