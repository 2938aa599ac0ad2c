import re

from django.conf import settings
from django.core.management import BaseCommand, CommandError

from app.utils import Utils
from automata.analysis import class_count_sweep, classify
from automata.engine import parse_init
from automata.models.classification import Classification

T_RANGE = re.compile(r'^(\d+)\.\.(\d+)$')

ENCA_RULES = range(216)


class Command(BaseCommand):
    help = 'Group the 216 elementary nominal rules by behaviour up to renaming'

    def add_arguments(self, parser):
        parser.add_argument('--init', required=True, help='uniform[:N], two-runs:A,B, distinct[:N] or random:N')
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--t-range', dest='t_range', metavar='A..B',
                            help='also report the class count for every T in A..B')
        parser.add_argument('--save', action='store_true')
        parser.add_argument('--no-cache', action='store_true', dest='no_cache')

    def handle(self, *args, **options):
        try:
            init = parse_init(options.get('init'), options.get('seed'))
            t_range = self.parse_t_range(options.get('t_range'))
            classes = self.get_classes(init, options)
            sweep = class_count_sweep(ENCA_RULES, init, *t_range) if t_range else None
        except ValueError as e:
            raise CommandError(str(e))

        self.stdout.write('%s classes (%s, T=%s)' % (len(classes), options.get('init'), options.get('steps')))
        self.stdout.write('%6s %5s  members' % ('label', 'size'))
        for item in classes:
            self.stdout.write('%6s %5s  %s' % (item.label, item.size, ' '.join(str(x) for x in item.members)))

        if sweep:
            for t, count in sweep.counts.items():
                self.stdout.write('T=%s: %s classes' % (t, count))
            self.stdout.write('stable count %s from T=%s' % (sweep.stable_count, sweep.stable_from))

        if options.get('save'):
            saved, msg = Classification.register_classification(
                options.get('init'), init.width, options.get('steps'), classes
            )
            if saved:
                self.stdout.write(self.style.SUCCESS('Classification saved: %s' % saved.id))
            else:
                self.stdout.write(self.style.ERROR('Classification not saved: %s' % msg))

    @staticmethod
    def get_classes(init, options):
        # bare uniform/distinct take their width from settings, so key on the cells themselves
        key = Utils.cache_key('classify', init.cells.tobytes().hex(), options.get('steps'))

        if not options.get('no_cache'):
            cached = Utils.get_from_cache(key)
            if cached is not None:
                return cached

        classes = classify(ENCA_RULES, init, options.get('steps'))
        Utils.set_to_cache(key, classes, settings.NCA_CLASSIFY_CACHE_SECONDS)
        return classes

    @staticmethod
    def parse_t_range(text):
        if not text:
            return None

        match = T_RANGE.match(text.strip())
        if not match:
            raise ValueError('expected --t-range A..B, got %r' % text)

        return int(match.group(1)), int(match.group(2))
