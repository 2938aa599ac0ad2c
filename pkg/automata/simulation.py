"""
Bridges between elementary CAs (ECAs) and nominal CAs.

Three ways for a nominal rule to reproduce an ECA computation:

direct  8 ECAs are reproduced bit for bit by 4 elementary nominal rules each,
        with no coding of the initial row.
d12     any ECA: code every bit b as (b, 0, 1, p) with p fresh and run a
        procedural diameter-12 rule; the bits are read back from every 4th column.
d9      ECA 110 only: code every bit as (b, 0, p) and run a diameter-9 rule;
        bits are read back from every 3rd column.

The coded rules locate their reading frame through the 'trident': three
names that occur once each in the context, at the coding period from one
another. Every decision is taken on the equality pattern alone.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from automata.engine import Configuration, Diagram, EcaRule, random_bits, run, run_eca
from automata.rules import Reaction, Rule, decode_rule, digits_to_number

logger = logging.getLogger(__name__)

DIRECT = 'direct'
D12 = 'd12'
D9 = 'd9'
VARIANTS = (DIRECT, D12, D9)

# memoized patterns per coded rule
BODY_CACHE_SIZE = 4096


@dataclass(frozen=True)
class CodedConfiguration:
    cells: Configuration
    period: int

    @property
    def bit_columns(self):
        return tuple(range(0, self.cells.width, self.period))


@dataclass(frozen=True)
class SimulationResult:
    eca: int
    variant: str
    width_bits: int
    steps: int
    seed: int
    simulator: str
    divergence: Optional[tuple] = None

    @property
    def matched(self):
        return self.divergence is None


# Direct simulation

def directly_simulable(eca):
    """Octet of the form (1, b2, b3, b4, b4', b3', b2', 0), prime being bit flip."""
    b = eca.octet
    return (
        b[0] == 1 and b[7] == 0
        and b[4] == 1 - b[3]
        and b[5] == 1 - b[2]
        and b[6] == 1 - b[1]
    )


def enca_simulators(eca):
    """
    The 4 elementary nominal rules with digits (b8, b7, b6, b5, z): (a,a,a),
    (a,a,b), (a,b,a), (a,b,b) behave like the ECA on (0,0,0), (0,0,1),
    (0,1,0), (0,1,1), and z is free because (a,b,c) never shows up in a bit row.
    """
    if not directly_simulable(eca):
        raise ValueError('ECA %s cannot be simulated directly' % eca.number)

    b = eca.octet
    head = (b[7], b[6], b[5], b[4])
    return frozenset(digits_to_number(head + (z,), 3) for z in range(4))


# Coding

def encode(bits, period):
    bits = np.asarray(bits, dtype=np.int64)
    if bits.ndim != 1 or not len(bits) or not np.isin(bits, (0, 1)).all():
        raise ValueError('expected a non-empty row of bits')

    m = len(bits)
    cells = np.empty(m * period, dtype=np.int64)
    cells[0::period] = bits
    cells[1::period] = 0
    if period == 4:
        cells[2::period] = 1
    cells[period - 1::period] = 2 + np.arange(m)

    return CodedConfiguration(Configuration(cells, fresh_counter=2 + m), period)


def well_formed(row, period):
    row = np.asarray(row)
    if not len(row) or len(row) % period:
        return False

    markers = row[period - 1::period]
    return bool(
        np.isin(row[0::period], (0, 1)).all()
        and (row[1::period] == 0).all()
        and (period == 3 or (row[2::period] == 1).all())
        and (markers > 1).all()
        and len(np.unique(markers)) == len(markers)
    )


def decode(diagram, period):
    rows = diagram.rows if isinstance(diagram, Diagram) else np.atleast_2d(diagram)

    for t, row in enumerate(rows):
        if not well_formed(row, period):
            logger.warning('row %s breaks the period-%s coding', t, period)
            raise ValueError('coding invariant violated')

    return rows[:, 0::period].astype(np.uint8)


def encode12(bits):
    return encode(bits, 4)


def decode12(diagram):
    return decode(diagram, 4)


def encode9(bits):
    return encode(bits, 3)


def decode9(diagram):
    return decode(diagram, 3)


# Coded rules

def _singletons(pattern):
    counts = Counter(pattern)
    return [counts[x] == 1 for x in pattern]


def find_trident(pattern, spacing, starts):
    """First start s (in the given order) with singleton names at s, s+spacing, s+2*spacing."""
    single = _singletons(pattern)
    for start in starts:
        if all(single[start + j * spacing] for j in range(3)):
            return start
    return None


def build_rule12(eca):
    """
    Diameter-12 rule reproducing `eca` on period-4 coded rows. The updated
    cell sits at context index 4 (the fifth cell), so the trident position
    tells which column of the block the cell belongs to.
    """

    @lru_cache(maxsize=BODY_CACHE_SIZE)
    def body(pattern):
        start = find_trident(pattern, 4, (3, 2, 1, 0))

        if start == 3:
            # bits at 0, 4, 8; 0-marker at 1, 1-marker at 2
            zero, one = pattern[1], pattern[2]
            left, center, right = (0 if pattern[k] == zero else 1 for k in (0, 4, 8))
            return Reaction.copy(one if eca.f(left, center, right) else zero)

        if start in (2, 1):
            # index 0 holds a 0-marker (start 2) or a 1-marker (start 1), like the cell itself
            return Reaction.copy(pattern[0])

        if start == 0:
            return Reaction.fresh()

        return Reaction.copy(0)

    return Rule(diameter=12, anchor=4, body=body, label='eca%s/d12' % eca.number)


def build_rule9_110():
    """
    Diameter-9 rule reproducing ECA 110 on period-3 coded rows, with the
    updated cell at context index 3. A 1 can only be copied from a bit that
    is 1; every triple on which rule 110 outputs 1 contains one.
    """
    eca = EcaRule(110)

    @lru_cache(maxsize=BODY_CACHE_SIZE)
    def body(pattern):
        start = find_trident(pattern, 3, (2, 1, 0))

        if start == 2:
            zero = pattern[1]
            bits = [(k, 0 if pattern[k] == zero else 1) for k in (0, 3, 6)]
            if not eca.f(*(bit for _, bit in bits)):
                return Reaction.copy(zero)
            k = next(k for k, bit in bits if bit)
            return Reaction.copy(pattern[k])

        if start == 1:
            return Reaction.copy(pattern[0])

        if start == 0:
            return Reaction.fresh()

        return Reaction.copy(0)

    return Rule(diameter=9, anchor=3, body=body, label='eca110/d9')


# Verification

def _first_divergence(decoded, reference):
    mismatch = np.argwhere(decoded != reference)
    return None if not len(mismatch) else tuple(int(x) for x in mismatch[0])


def check_preconditions(eca, width_bits, variant):
    if variant not in VARIANTS:
        raise ValueError('unknown variant %r' % variant)

    if variant == DIRECT and not directly_simulable(eca):
        raise ValueError('ECA %s cannot be simulated directly' % eca.number)

    if variant == D9 and eca.number != 110:
        raise ValueError('the diameter-9 construction only simulates ECA 110')

    if width_bits < 3:
        raise ValueError('need at least 3 bits')


def compare_simulation(eca, width_bits, T, seed, variant, simulators=None):
    """
    Run the ECA and its nominal simulator(s) from the same random bit row and
    compare cell by cell. Returns one result per simulating rule.
    """
    check_preconditions(eca, width_bits, variant)

    bits = random_bits(width_bits, seed)
    reference = run_eca(bits, eca, T)
    results = []

    if variant == DIRECT:
        for number in sorted(simulators or enca_simulators(eca)):
            diagram = run(Configuration.from_names(bits, seed=seed), decode_rule(number, 3), T)
            results.append(SimulationResult(
                eca.number, variant, width_bits, T, seed, 'enca%s' % number,
                _first_divergence(diagram.rows, reference),
            ))
    else:
        if variant == D12:
            coded, rule = encode12(bits), build_rule12(eca)
        else:
            coded, rule = encode9(bits), build_rule9_110()

        diagram = run(coded.cells, rule, T)
        try:
            decoded = decode(diagram, coded.period)
            divergence = _first_divergence(decoded, reference)
        except ValueError:
            divergence = (int(np.argmin([well_formed(r, coded.period) for r in diagram.rows])), 0)

        results.append(SimulationResult(eca.number, variant, width_bits, T, seed, rule.label, divergence))

    for result in results:
        if not result.matched:
            logger.warning('ECA %s via %s diverges at %s', eca.number, result.simulator, result.divergence)

    return results


def verify_simulation(eca, width_bits, T, seed, variant):
    return all(result.matched for result in compare_simulation(eca, width_bits, T, seed, variant))
