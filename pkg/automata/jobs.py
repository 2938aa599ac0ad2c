import logging

import django_rq

from automata.models.verification import Verification
from automata.suites import run_suite

logger = logging.getLogger(__name__)


@django_rq.job('low')
def run_suite_job(name):
    result = run_suite(name)
    verification, errors = Verification.register_result(result)
    logger.info('recorded %s (%s)', verification, errors)
    return verification.id


def enqueue_suite(name):
    return django_rq.get_queue('low').enqueue(run_suite_job, name)
