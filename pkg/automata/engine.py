"""
Synchronous evolution of nominal cellular automata on circular arrays, and
the classical elementary CA engine used as the reference side of every
simulation check.

All cells of a step read the old row. Fresh names come from one counter per
run and are handed out left to right, so identical inputs always give
identical diagrams and every fresh name differs from every name seen so far.
"""
import logging
import re
from dataclasses import dataclass
from typing import Optional

import numpy as np
from django.conf import settings

from automata.patterns import canonicalize_rows
from automata.rules import FRESH

logger = logging.getLogger(__name__)

INIT_SPEC = re.compile(r'^(uniform|distinct|two-runs|random)(?::([\d,\s]+))?$')


def _frozen(values, dtype=np.int64):
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Configuration:
    cells: np.ndarray
    fresh_counter: int
    seed: Optional[int] = None

    def __post_init__(self):
        cells = _frozen(self.cells)
        object.__setattr__(self, 'cells', cells)

        if cells.ndim != 1 or not len(cells):
            raise ValueError('configuration needs at least one cell')

        if cells.min() < 0:
            raise ValueError('names are non-negative integers')

        if self.fresh_counter <= cells.max():
            raise ValueError('fresh counter %s is not above every name present' % self.fresh_counter)

    @classmethod
    def from_names(cls, names, fresh_counter=None, seed=None):
        names = np.asarray(names, dtype=np.int64)
        if fresh_counter is None and len(names):
            fresh_counter = int(names.max()) + 1
        return cls(names, fresh_counter or 0, seed=seed)

    @property
    def width(self):
        return len(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (
            np.array_equal(self.cells, other.cells)
            and self.fresh_counter == other.fresh_counter
            and self.seed == other.seed
        )


@dataclass(frozen=True, eq=False)
class Diagram:
    rows: np.ndarray
    rule_id: str
    fresh_counter: int
    seed: Optional[int] = None

    def __post_init__(self):
        rows = _frozen(self.rows)
        object.__setattr__(self, 'rows', rows)

        if rows.ndim != 2 or rows.shape[0] < 1 or rows.shape[1] < 1:
            raise ValueError('diagram needs at least one non-empty row')

    @property
    def width(self):
        return self.rows.shape[1]

    @property
    def height(self):
        return self.rows.shape[0]

    @property
    def steps(self):
        return self.height - 1

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            np.array_equal(self.rows, other.rows)
            and self.rule_id == other.rule_id
            and self.fresh_counter == other.fresh_counter
            and self.seed == other.seed
        )


@dataclass(frozen=True)
class EcaRule:
    number: int

    def __post_init__(self):
        if not 0 <= self.number <= 255:
            raise ValueError('ECA rule number must be in [0, 255]')

    @property
    def octet(self):
        """(b1, ..., b8): outputs for (1,1,1), (1,1,0), ..., (0,0,0)."""
        return tuple(int(b) for b in format(self.number, '08b'))

    @property
    def table(self):
        bits = np.unpackbits(np.array([self.number], dtype=np.uint8), bitorder='little')
        return bits.reshape(2, 2, 2)

    def f(self, left, center, right):
        return (self.number >> (4 * left + 2 * center + right)) & 1


# Initial conditions

def make_init(kind, n=None, len0=None, len1=None, seed=None):
    if kind == 'uniform':
        _check_length(n)
        return Configuration.from_names(np.zeros(n, dtype=np.int64))

    if kind == 'two_runs':
        _check_length(len0)
        _check_length(len1)
        return Configuration.from_names(np.repeat([0, 1], [len0, len1]))

    if kind == 'all_distinct':
        _check_length(n)
        return Configuration.from_names(np.arange(n))

    if kind == 'random_bits':
        _check_length(n)
        seed = 0 if seed is None else seed
        return Configuration.from_names(random_bits(n, seed), seed=seed)

    raise ValueError('unknown initial condition %r' % kind)


def _check_length(n):
    if n is None or n < 1:
        raise ValueError('initial condition needs a positive length')


def random_bits(n, seed):
    """
    Uniform bits from numpy's PCG64 generator seeded with `seed`; the seed is
    carried into the diagram so the row can be regenerated.
    """
    return np.random.default_rng(seed).integers(0, 2, size=n).astype(np.int64)


def parse_init(text, seed=None):
    """CLI grammar: uniform[:N], distinct[:N], two-runs:A,B, random:N."""
    match = INIT_SPEC.match(text.strip())
    if not match:
        raise ValueError('unknown initial condition %r' % text)

    kind, args = match.group(1), match.group(2)
    numbers = [int(x) for x in args.split(',') if x.strip()] if args else []

    if kind in ('uniform', 'distinct'):
        if len(numbers) > 1:
            raise ValueError('%s takes one length' % kind)
        n = numbers[0] if numbers else settings.NCA_DEFAULT_WIDTH
        return make_init('uniform' if kind == 'uniform' else 'all_distinct', n=n)

    if kind == 'two-runs':
        if len(numbers) != 2:
            raise ValueError('two-runs needs two lengths, e.g. two-runs:13,13')
        return make_init('two_runs', len0=numbers[0], len1=numbers[1])

    if len(numbers) != 1:
        raise ValueError('random needs one length, e.g. random:64')
    return make_init('random_bits', n=numbers[0], seed=seed)


# Nominal engine

def context_windows(cells, d, anchor):
    """(n, d) array whose row i is the circular context of cell i."""
    n = len(cells)
    index = (np.arange(n)[:, None] - anchor + np.arange(d)[None, :]) % n
    return np.asarray(cells)[index]


def step(config, rule):
    n = config.width
    if n < rule.diameter:
        raise ValueError('array shorter than diameter')

    windows = context_windows(config.cells, rule.diameter, rule.anchor)
    rgs = canonicalize_rows(windows)
    codes = rule.codes_for(rgs)

    # Copy(k) reads the position where the k-th distinct name first occurs
    source = (rgs == codes[:, None]).argmax(axis=1)
    cells = windows[np.arange(n), source]

    fresh = codes == FRESH
    count = int(fresh.sum())
    cells[fresh] = config.fresh_counter + np.arange(count)

    return Configuration(cells, config.fresh_counter + count, seed=config.seed)


def run(init, rule, T):
    if T < 0:
        raise ValueError('number of steps must be non-negative')

    rows = np.empty((T + 1, init.width), dtype=np.int64)
    rows[0] = init.cells
    config = init

    for t in range(T):
        config = step(config, rule)
        rows[t + 1] = config.cells

    logger.debug('ran %s for %s steps on %s cells', rule.label, T, init.width)
    return Diagram(rows, rule_id=rule.label, fresh_counter=config.fresh_counter, seed=init.seed)


# Classical engine

def eca_step(bits, rule):
    bits = np.asarray(bits, dtype=np.uint8)
    if len(bits) < 3:
        raise ValueError('array shorter than diameter')

    wrapped = np.pad(bits, 1, mode='wrap')
    return rule.table[wrapped[:-2], wrapped[1:-1], wrapped[2:]]


def run_eca(bits, rule, T):
    rows = np.empty((T + 1, len(bits)), dtype=np.uint8)
    rows[0] = bits

    for t in range(T):
        rows[t + 1] = eca_step(rows[t], rule)

    return rows
