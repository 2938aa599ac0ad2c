from django.core.management import BaseCommand, CommandError

from automata.engine import EcaRule
from automata.simulation import VARIANTS, compare_simulation


class Command(BaseCommand):
    help = 'Run an ECA next to its nominal simulator and compare them cell by cell'

    def add_arguments(self, parser):
        parser.add_argument('--eca', type=int, required=True)
        parser.add_argument('--variant', choices=VARIANTS, required=True)
        parser.add_argument('--width-bits', type=int, dest='width_bits', required=True)
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--seed', type=int, default=0)

    def handle(self, *args, **options):
        try:
            results = compare_simulation(
                EcaRule(options.get('eca')),
                options.get('width_bits'),
                options.get('steps'),
                options.get('seed'),
                options.get('variant'),
            )
        except ValueError as e:
            raise CommandError(str(e))

        for result in results:
            if result.matched:
                self.stdout.write(self.style.SUCCESS('MATCH %s' % result.simulator))
            else:
                t, i = result.divergence
                self.stdout.write(self.style.ERROR(
                    'MISMATCH %s first divergence at step %s, bit %s' % (result.simulator, t, i)
                ))
