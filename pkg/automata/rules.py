"""
Rules, reactions and the mixed-radix rule numbering.

A rule maps every equality pattern of its diameter to a reaction: copy the
k-th distinct name of the context (first-occurrence order) or create a fresh
name. Explicit rules keep one reaction per enumerated pattern and can be
numbered; procedural rules compute the reaction on demand.

Numbering reads the reaction of pattern i as a digit in base
distinct_count(pattern_i) + 1 (Copy(k) -> k, Fresh -> distinct_count), the
first enumerated pattern being the most significant digit. For diameter 3 the
bases are (2, 3, 3, 3, 4) and 0..215 number the 216 elementary rules.
"""
import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from automata.patterns import (
    canonicalize, check_diameter, distinct_count, enumerate_patterns, pattern_index
)

# Numbers past this diameter have thousands of digits.
MAX_NUMBERED_DIAMETER = 8

FRESH = -1

RULE_RECORD = re.compile(r'^d=(\d+)\s+L=(\d+)\s+digits=([\d,\s]*)$')


@dataclass(frozen=True)
class Reaction:
    index: Optional[int] = None  # None is Fresh

    @classmethod
    def copy(cls, k):
        return cls(int(k))

    @classmethod
    def fresh(cls):
        return cls(None)

    @classmethod
    def from_code(cls, code):
        return cls.fresh() if code == FRESH else cls.copy(code)

    @property
    def is_fresh(self):
        return self.index is None

    @property
    def code(self):
        return FRESH if self.index is None else self.index

    def is_legal_for(self, pattern):
        return self.is_fresh or 0 <= self.index < distinct_count(pattern)

    def letter(self):
        return 'n' if self.is_fresh else 'abcdefghijklm'[self.index]

    def __str__(self):
        return 'Fresh' if self.is_fresh else 'Copy(%s)' % self.index


@dataclass(frozen=True, eq=False)
class Rule:
    diameter: int
    anchor: int
    codes: Optional[np.ndarray] = None
    body: Optional[Callable] = field(default=None, repr=False)
    label: str = ''

    def __post_init__(self):
        if self.diameter < 1:
            raise ValueError('diameter out of range')

        if not 0 <= self.anchor <= self.diameter - 1:
            raise ValueError('anchor out of range')

        if (self.codes is None) == (self.body is None):
            raise ValueError('a rule needs exactly one of an explicit table or a procedural body')

        if self.codes is not None:
            self._check_table()

    def _check_table(self):
        patterns = enumerate_patterns(self.diameter)
        codes = np.array(self.codes, dtype=np.int64)

        if codes.shape != (len(patterns),):
            raise ValueError('explicit table must cover all %s patterns' % len(patterns))

        alphas = patterns.max(axis=1).astype(np.int64) + 1

        if np.any((codes != FRESH) & ((codes < 0) | (codes >= alphas))):
            raise ValueError('illegal reaction in explicit table')

        codes.setflags(write=False)
        object.__setattr__(self, 'codes', codes)

    @property
    def is_procedural(self):
        return self.body is not None

    def reaction_for_pattern(self, pattern):
        pattern = tuple(int(x) for x in pattern)

        if self.body is not None:
            reaction = self.body(pattern)
            if not reaction.is_legal_for(pattern):
                raise ValueError('procedural rule returned %s for pattern %s' % (reaction, pattern))
            return reaction

        index = int(pattern_index(np.array([pattern]))[0])
        return Reaction.from_code(int(self.codes[index]))

    def codes_for(self, rgs_rows):
        """Reaction codes for a batch of RGS rows (Copy index, or FRESH)."""
        if self.codes is not None:
            return self.codes[pattern_index(rgs_rows)]

        unique, inverse = np.unique(rgs_rows, axis=0, return_inverse=True)
        resolved = np.array([self.reaction_for_pattern(row).code for row in unique], dtype=np.int64)
        return resolved[inverse.reshape(-1)]

    def digits(self):
        if self.codes is None:
            raise ValueError('procedural rules are not numbered')

        alphas = enumerate_patterns(self.diameter).max(axis=1).astype(np.int64) + 1
        return tuple(int(x) for x in np.where(self.codes == FRESH, alphas, self.codes))

    def describe(self):
        """One line per pattern, names as letters, e.g. 'a a b -> n'."""
        if self.codes is None:
            return ['procedural rule %s' % (self.label or '')]

        letters = 'abcdefghijklm'
        return [
            '%s -> %s' % (' '.join(letters[x] for x in pattern), Reaction.from_code(int(code)).letter())
            for pattern, code in zip(enumerate_patterns(self.diameter), self.codes)
        ]


def default_anchor(d):
    return (d - 1) // 2


@lru_cache(maxsize=None)
def radix_bases(d):
    check_diameter(d, MAX_NUMBERED_DIAMETER)
    return tuple(int(x) + 2 for x in enumerate_patterns(d).max(axis=1))


@lru_cache(maxsize=None)
def space_size(d):
    """Product over patterns of (distinct names + 1), exact."""
    size = 1
    for base, count in zip(*np.unique(radix_bases(d), return_counts=True)):
        size *= int(base) ** int(count)
    return size


def classical_space_size(colors, d):
    if colors < 2 or d < 1:
        raise ValueError('need at least 2 colors and diameter 1')
    return colors ** (colors ** d)


def rule_from_digits(digits, d, anchor=None, label=''):
    bases = radix_bases(d)
    digits = tuple(int(x) for x in digits)

    if len(digits) != len(bases):
        raise ValueError('expected %s digits for diameter %s' % (len(bases), d))

    if any(not 0 <= g < base for g, base in zip(digits, bases)):
        raise ValueError('digit out of range')

    codes = np.array([FRESH if g == base - 1 else g for g, base in zip(digits, bases)], dtype=np.int64)
    return Rule(
        diameter=d,
        anchor=default_anchor(d) if anchor is None else anchor,
        codes=codes,
        label=label,
    )


def decode_rule(number, d, anchor=None):
    if not 0 <= number < space_size(d):
        raise ValueError('rule number out of range')

    digits = []
    rest = int(number)
    for base in reversed(radix_bases(d)):
        rest, digit = divmod(rest, base)
        digits.append(digit)

    return rule_from_digits(reversed(digits), d, anchor=anchor, label='%s/d%s' % (number, d))


def digits_to_number(digits, d):
    number = 0
    for digit, base in zip(digits, radix_bases(d)):
        number = number * base + digit
    return number


def encode_rule(rule):
    return digits_to_number(rule.digits(), rule.diameter)


def enca_digits(number):
    return decode_rule(number, 3).digits()


def reaction_for(rule, context):
    if len(context) != rule.diameter:
        raise ValueError('context length %s does not match diameter %s' % (len(context), rule.diameter))
    return rule.reaction_for_pattern(canonicalize(context))


def format_rule(rule):
    return 'd=%s L=%s digits=%s' % (rule.diameter, rule.anchor, ','.join(str(g) for g in rule.digits()))


def parse_rule(text):
    match = RULE_RECORD.match(text.strip())
    if not match:
        raise ValueError('malformed rule record: %r' % text)

    d, anchor, digits = int(match.group(1)), int(match.group(2)), match.group(3)
    digits = [int(x) for x in digits.replace(' ', '').split(',') if x]
    rule = rule_from_digits(digits, d, anchor=anchor)
    return replace(rule, label='%s/d%s' % (encode_rule(rule), d))


def load_rule(number=None, d=3, record=None):
    """A numbered rule at diameter d, or the rule a `d=.. L=.. digits=..` record spells out."""
    if record:
        return parse_rule(record)

    if number is None:
        raise ValueError('need a rule number or a rule record')

    return decode_rule(number, d)
