from django.core.management import BaseCommand, CommandError

from automata.analysis import CLASSICAL, NOMINAL, detect_classical_particles, detect_nominal_particles
from automata.engine import parse_init, run
from automata.rules import format_rule, load_rule

BOTH = 'both'


class Command(BaseCommand):
    help = 'List classical and nominal particles of a run'

    def add_arguments(self, parser):
        rule = parser.add_mutually_exclusive_group(required=True)
        rule.add_argument('--rule', type=int)
        rule.add_argument('--rule-record', dest='rule_record', help='e.g. "d=3 L=1 digits=0,0,0,2,0"')
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--init', required=True)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--wmax', type=int, required=True)
        parser.add_argument('--pmax', type=int, required=True)
        parser.add_argument('--kind', choices=(CLASSICAL, NOMINAL, BOTH), default=BOTH)
        parser.add_argument('--background', action='store_true', help='keep background structures')

    def handle(self, *args, **options):
        kind = options.get('kind')
        detectors = []
        if kind in (CLASSICAL, BOTH):
            detectors.append(detect_classical_particles)
        if kind in (NOMINAL, BOTH):
            detectors.append(detect_nominal_particles)

        try:
            rule = load_rule(options.get('rule'), options.get('d'), options.get('rule_record'))
            diagram = run(parse_init(options.get('init'), options.get('seed')), rule, options.get('steps'))
            found = [
                particle
                for detect in detectors
                for particle in detect(
                    diagram, options.get('wmax'), options.get('pmax'), include_background=options.get('background')
                )
            ]
        except ValueError as e:
            raise CommandError(str(e))

        self.stdout.write('%s particles in %s (%s)' % (len(found), diagram.rule_id, format_rule(rule)))

        for p in found:
            flags = []
            if p.properly_nominal:
                flags.append('properly nominal')
            if p.background:
                flags.append('background')

            self.stdout.write('%-9s t=%s i=%s width=%s period=%s drift=%+d lifetime=%s%s' % (
                p.kind, p.start, p.origin, p.width, p.period, p.drift, p.lifetime,
                ' (%s)' % ', '.join(flags) if flags else ''
            ))
