from django.core.management import BaseCommand, CommandError

from automata.engine import parse_init, run
from automata.models.run import SpacetimeRun
from automata.rendering import FORMATS, PALETTES, RAMP, RenderSpec, name_matrix, render
from automata.rules import encode_rule, format_rule, load_rule
from automata.serializers import dump


class Command(BaseCommand):
    help = 'Run a numbered nominal rule and write its spacetime diagram'

    def add_arguments(self, parser):
        rule = parser.add_mutually_exclusive_group(required=True)
        rule.add_argument('--rule', type=int)
        rule.add_argument('--rule-record', dest='rule_record', help='e.g. "d=3 L=1 digits=0,2,1,0,3"')
        parser.add_argument('--d', type=int, default=3)
        parser.add_argument('--init', required=True, help='uniform[:N], two-runs:A,B, distinct[:N] or random:N')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--out', help='diagram JSON')
        parser.add_argument('--png')
        parser.add_argument('--pgm')
        parser.add_argument('--palette', choices=PALETTES, default=RAMP)
        parser.add_argument('--cell-size', type=int, dest='cell_size')
        parser.add_argument('--matrix', action='store_true', help='print the names, one row per step')
        parser.add_argument('--describe', action='store_true', help='print the reaction of every pattern')
        parser.add_argument('--save', action='store_true', help='store the run in the database')

    def handle(self, *args, **options):
        try:
            rule = load_rule(options.get('rule'), options.get('d'), options.get('rule_record'))
            init = parse_init(options.get('init'), options.get('seed'))
            diagram = run(init, rule, options.get('steps'))
        except ValueError as e:
            raise CommandError(str(e))

        self.stdout.write('%s on %s cells, %s steps, fresh counter %s' % (
            diagram.rule_id, diagram.width, diagram.steps, diagram.fresh_counter
        ))
        self.stdout.write('rule %s' % format_rule(rule))

        if options.get('describe'):
            for line in rule.describe():
                self.stdout.write(line)

        if options.get('out'):
            with open(options.get('out'), 'w') as f:
                f.write(dump(diagram))
            self.stdout.write('Diagram written to %s' % options.get('out'))

        for fmt in FORMATS:
            path = options.get(fmt)
            if not path:
                continue

            spec = RenderSpec(palette=options.get('palette'), cell_size=options.get('cell_size'), format=fmt)
            try:
                image = render(diagram, spec)
            except ValueError as e:
                raise CommandError(str(e))

            with open(path, 'wb') as f:
                f.write(image)
            self.stdout.write('%s image written to %s' % (fmt.upper(), path))

        if options.get('matrix'):
            self.stdout.write(name_matrix(diagram))

        if options.get('save'):
            saved, msg = SpacetimeRun.register_run(
                diagram, options.get('init'), rule_number=encode_rule(rule), diameter=rule.diameter
            )
            if saved:
                self.stdout.write(self.style.SUCCESS('Run saved: %s' % saved.id))
            else:
                self.stdout.write(self.style.ERROR('Run not saved: %s' % msg))
