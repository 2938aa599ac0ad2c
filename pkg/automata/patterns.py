"""
Names and equality patterns.

A name is an opaque non-negative integer: only equality, copying and fresh
creation mean anything. A context of names is therefore reduced to its
equality pattern, written as the restricted-growth string (RGS) that numbers
names 0, 1, 2, ... in order of first occurrence. Two contexts share an RGS
exactly when one is a renaming of the other.

Patterns of a given diameter are enumerated in plain lexicographic order of
their digits; for diameter 3 this is (a,a,a), (a,a,b), (a,b,a), (a,b,b), (a,b,c).
"""
from functools import lru_cache

import numpy as np

# Bell(12) = 4,213,597 patterns; larger diameters only exist as procedural rules.
MAX_ENUMERATION_DIAMETER = 12


def canonicalize(context):
    """Return the RGS of a tuple of names, e.g. (38, 4, 4, 7, 11, 7) -> (0, 1, 1, 2, 3, 2)."""
    if len(context) == 0:
        raise ValueError('empty context')

    seen = {}
    return tuple(seen.setdefault(name, len(seen)) for name in context)


def canonicalize_rows(windows):
    """
    Row-wise canonicalize for a 2-D array of contexts, shape (m, d).

    eq[r, j, k] tells whether names j and k of row r are equal; the first k
    that matches j is where j's name first occurs, and numbering the first
    occurrences left to right gives the RGS digit.
    """
    windows = np.asarray(windows)
    d = windows.shape[1]
    eq = windows[:, :, None] == windows[:, None, :]
    first = eq.argmax(axis=2)
    is_new = first == np.arange(d)
    rank = np.cumsum(is_new, axis=1) - 1
    return np.take_along_axis(rank, first, axis=1)


def is_rgs(rgs):
    if not len(rgs) or rgs[0] != 0:
        return False

    top = 0
    for digit in rgs[1:]:
        if digit < 0 or digit > top + 1:
            return False
        top = max(top, digit)

    return True


def distinct_count(pattern):
    return 1 + max(pattern)


def check_diameter(d, upper=MAX_ENUMERATION_DIAMETER):
    if not isinstance(d, (int, np.integer)) or not 1 <= d <= upper:
        raise ValueError('diameter out of range')


@lru_cache(maxsize=8)
def enumerate_patterns(d):
    """
    All Bell(d) patterns of length d as a read-only int8 array, one per row,
    in lexicographic order.

    Built one column at a time: a prefix whose largest digit is m has children
    with next digit 0..m+1, and expanding every prefix in place keeps the rows
    sorted.
    """
    check_diameter(d)

    rows = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)

    for _ in range(1, d):
        fan = top.astype(np.int64) + 2
        parent = np.repeat(np.arange(len(rows)), fan)
        starts = np.cumsum(fan) - fan
        digit = (np.arange(int(fan.sum())) - np.repeat(starts, fan)).astype(np.int8)
        rows = np.column_stack([rows[parent], digit])
        top = np.maximum(top[parent], digit)

    rows.setflags(write=False)
    return rows


def pattern_weights(d):
    # digits of a length-d RGS are below d, so base d keeps keys ordered like the rows
    return d ** np.arange(d - 1, -1, -1, dtype=np.int64)


def pattern_keys_of(rgs_rows):
    rgs_rows = np.asarray(rgs_rows, dtype=np.int64)
    return rgs_rows @ pattern_weights(rgs_rows.shape[1])


@lru_cache(maxsize=8)
def pattern_keys(d):
    keys = pattern_keys_of(enumerate_patterns(d))
    keys.setflags(write=False)
    return keys


def pattern_index(rgs_rows):
    """Positions of RGS rows within enumerate_patterns(d)."""
    rgs_rows = np.asarray(rgs_rows)
    keys = pattern_keys_of(rgs_rows)
    return np.searchsorted(pattern_keys(rgs_rows.shape[1]), keys)


@lru_cache(maxsize=None)
def bell(d):
    """Bell numbers by Bell(n+1) = sum_k C(n, k) Bell(k), binomials from Pascal's triangle."""
    if d < 0:
        raise ValueError('diameter out of range')

    bells = [1]
    row = [1]

    for _ in range(d):
        bells.append(sum(c * b for c, b in zip(row, bells)))
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]

    return bells[d]
