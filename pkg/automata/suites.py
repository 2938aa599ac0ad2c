"""
Reproducibility suites behind `manage.py verify`. Each suite returns a
SuiteResult whose details list one line per check, failed checks first
marked with 'FAIL'.
"""
import logging
import time
from dataclasses import dataclass, field

from django.conf import settings

from app.utils import Utils
from automata.analysis import MAXIMAL, UNBOUNDED, class_count_sweep, classify, first_creative_rule, name_lifetimes
from automata.engine import EcaRule, make_init, run
from automata.patterns import bell, enumerate_patterns
from automata.rules import decode_rule, encode_rule, space_size
from automata.simulation import D9, D12, DIRECT, compare_simulation, directly_simulable

logger = logging.getLogger(__name__)

SPACE_SIZES = {
    2: 6,
    3: 216,
    4: 89579520,
    5: 1893214811085172899840000000000,
}
SPACE_SIZE_DIGITS = {6: 128, 7: 585, 8: 2900}
BELL_NUMBERS = (1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570)
DIRECT_ECAS = frozenset((142, 150, 170, 178, 204, 212, 232, 240))
TWO_RUNS_REFERENCE = 93
FIRST_CREATORS = {UNBOUNDED: 8, MAXIMAL: 11}
LONG_LIVED = (145, 157, 169)


@dataclass
class SuiteResult:
    suite: str
    passed: bool = True
    details: list = field(default_factory=list)
    duration: float = 0

    def check(self, ok, message):
        self.details.append(message if ok else 'FAIL %s' % message)
        self.passed = self.passed and bool(ok)

    def note(self, message):
        self.details.append(message)


def table1(result):
    for d, expected in SPACE_SIZES.items():
        size = space_size(d)
        result.check(size == expected, 'space size d=%s: %s' % (d, size))

    for d, digits in SPACE_SIZE_DIGITS.items():
        got = len(str(space_size(d)))
        result.check(got == digits, 'space size d=%s has %s digits' % (d, got))

    for d in range(1, 13):
        count = len(enumerate_patterns(d))
        result.check(count == bell(d), 'bell(%s) = %s patterns' % (d, count))

    listed = tuple(bell(d) for d in range(1, 12))
    result.check(listed == BELL_NUMBERS, 'bell(1..11) = %s' % (listed, ))

    digits = decode_rule(87, 3).digits()
    result.check(digits == (0, 2, 1, 0, 3), 'rule 87 digits %s' % (digits, ))

    round_trip = all(encode_rule(decode_rule(number, 3)) == number for number in range(216))
    result.check(round_trip and space_size(3) == 216, 'codec identity on 0..215')


def direct8(result):
    found = frozenset(n for n in range(256) if directly_simulable(EcaRule(n)))
    result.check(found == DIRECT_ECAS, 'directly simulable ECAs %s' % sorted(found))

    for number in sorted(found):
        results = [
            r
            for seed in settings.NCA_SUITE_SEEDS
            for r in compare_simulation(EcaRule(number), 64, 64, seed, DIRECT)
        ]
        failed = sorted({r.simulator for r in results if not r.matched})
        result.check(not failed, 'ECA %s via %s' % (
            number, ', '.join(sorted({r.simulator for r in results})) if not failed else ', '.join(failed)
        ))


def d12_all(result):
    seeds = settings.NCA_SUITE_SEEDS[:3]

    def matched(number):
        return all(
            r.matched
            for seed in seeds
            for r in compare_simulation(EcaRule(number), 8, 16, seed, D12)
        )

    outcomes = Utils.fan_out(matched, range(256))
    failed = [number for number, ok in enumerate(outcomes) if not ok]
    result.check(not failed, 'd12 coding for 256 ECAs, %s seeds%s' % (
        len(seeds), ': mismatches %s' % failed if failed else ''
    ))


def d9_110(result):
    for seed in settings.NCA_SUITE_SEEDS:
        outcome = compare_simulation(EcaRule(110), 16, 32, seed, D9)[0]
        result.check(outcome.matched, 'ECA 110 at diameter 9, seed %s' % seed)


def _shift_families():
    return [
        tuple(range(108 + offset, 216, 4))
        for offset in range(4)
    ]


def classes(result):
    rules = range(216)

    uniform = make_init('uniform', n=12)
    sweep = class_count_sweep(rules, uniform, 4, 24)
    counts = set(sweep.counts.values())
    result.check(counts == {5}, 'uniform(12), T=4..24: %s classes' % sorted(counts))

    expected = [tuple(range(108))] + _shift_families()
    found = [c.members for c in classify(rules, uniform, 12)]
    result.check(found == expected, 'uniform(12) class memberships')

    distinct = classify(rules, make_init('all_distinct', n=12), 12)
    result.check(len(distinct) == 4, 'distinct(12): %s classes' % len(distinct))

    sweep = class_count_sweep(rules, make_init('two_runs', len0=13, len1=13), 13, 30)
    result.note('two-runs(13,13): %s classes, stable from T=%s (reference %s)%s' % (
        sweep.stable_count, sweep.stable_from, TWO_RUNS_REFERENCE,
        '' if sweep.stable_count == TWO_RUNS_REFERENCE else ', differs',
    ))


def creation(result):
    inits = [make_init('random_bits', n=64, seed=seed) for seed in settings.NCA_SUITE_SEEDS]

    for kind, expected in FIRST_CREATORS.items():
        found = first_creative_rule(kind, inits, 64)
        result.check(found == expected, 'first %s name creator: %s' % (kind, found))

    for number in LONG_LIVED:
        diagram = run(inits[0], decode_rule(number, 3), 64)
        lifetimes = name_lifetimes(diagram)
        born = set(lifetimes) - set(diagram.rows[0].tolist())
        result.note('ENCA %s: %s names created, longest lived %s rows' % (
            number, len(born), max((lifetimes[x] for x in born), default=0)
        ))


SUITES = {
    'table1': table1,
    'direct8': direct8,
    'd12-all': d12_all,
    'd9-110': d9_110,
    'classes': classes,
    'creation': creation,
}


def run_suite(name):
    if name not in SUITES:
        raise ValueError('unknown suite %r' % name)

    start = time.perf_counter()
    result = SuiteResult(suite=name)
    SUITES[name](result)
    result.duration = Utils.elapsed(start)

    logger.info('suite %s: %s in %ss', name, 'pass' if result.passed else 'FAIL', result.duration)
    return result
