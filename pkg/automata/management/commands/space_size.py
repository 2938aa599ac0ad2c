from django.core.management import BaseCommand, CommandError

from automata.rules import classical_space_size, space_size


class Command(BaseCommand):
    help = 'Print the exact number of nominal rules of diameter d'

    def add_arguments(self, parser):
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--compare-colors', type=int, dest='compare_colors', metavar='K',
                            help='also print K^(K^d), the number of classical K-color rules')

    def handle(self, *args, **options):
        d = options.get('d')

        try:
            size = space_size(d)
            classical = None
            if options.get('compare_colors') is not None:
                classical = classical_space_size(options.get('compare_colors'), d)
        except ValueError as e:
            raise CommandError(str(e))

        self.stdout.write('SpaceSize(%s) = %s' % (d, size))
        self.stdout.write('%s digits' % len(str(size)))

        if classical is not None:
            self.stdout.write('%s-color rules: %s (%s digits)' % (
                options.get('compare_colors'), classical, len(str(classical))
            ))
