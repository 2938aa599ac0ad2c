from django.core.management import BaseCommand, CommandError

from automata.jobs import enqueue_suite
from automata.models.verification import Verification
from automata.suites import SUITES, run_suite


class Command(BaseCommand):
    help = 'Run a reproducibility suite; fails unless every check passes'

    def add_arguments(self, parser):
        parser.add_argument('--suite', choices=list(SUITES), required=True)
        parser.add_argument('--save', action='store_true')
        parser.add_argument('--enqueue', action='store_true', help='run on the low RQ queue instead')

    def handle(self, *args, **options):
        name = options.get('suite')

        if options.get('enqueue'):
            job = enqueue_suite(name)
            self.stdout.write('Suite %s queued: %s' % (name, job.id))
            return

        result = run_suite(name)

        for line in result.details:
            self.stdout.write(line)

        if options.get('save'):
            Verification.register_result(result)

        if not result.passed:
            raise CommandError('suite %s failed' % name)

        self.stdout.write(self.style.SUCCESS('suite %s passed in %ss' % (name, result.duration)))
