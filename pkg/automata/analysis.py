"""
Behaviour analysis up to renaming.

Diagrams are compared through their canonical form: names renumbered by
first occurrence in a row-major scan, so two diagrams are equivalent exactly
when a bijection of names maps one onto the other.

Particles are searched by brute force over windows (start, origin, width),
periods and drifts. A window is followed along its chain
(t, o) -> (t + period, o + drift):

classical  the window contents repeat name for name;
nominal    the pair (window at t, window at t + period), read as one tuple,
           keeps the same equality pattern from one period to the next.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from django.conf import settings

from app.utils import Utils
from automata.engine import Diagram, run
from automata.patterns import canonicalize_rows
from automata.rules import decode_rule

logger = logging.getLogger(__name__)

CLASSICAL = 'classical'
NOMINAL = 'nominal'


@dataclass(frozen=True, eq=False)
class CanonicalDiagram:
    rows: np.ndarray

    @property
    def width(self):
        return self.rows.shape[1]

    @property
    def height(self):
        return self.rows.shape[0]

    def fingerprint(self):
        return b'%d:%d:' % self.rows.shape + self.rows.tobytes()

    def __eq__(self, other):
        if not isinstance(other, CanonicalDiagram):
            return NotImplemented
        return np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash(self.fingerprint())


def canonical_rows(rows):
    rows = np.asarray(rows)
    _, first, inverse = np.unique(rows.ravel(), return_index=True, return_inverse=True)

    # rank each distinct name by where it first shows up
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    canon = rank[inverse.reshape(-1)].reshape(rows.shape)
    canon.setflags(write=False)
    return canon


def canonical(diagram):
    rows = diagram.rows if isinstance(diagram, (Diagram, CanonicalDiagram)) else diagram
    return CanonicalDiagram(canonical_rows(rows))


# Classification

@dataclass(frozen=True)
class BehaviourClass:
    label: int
    members: tuple

    @property
    def size(self):
        return len(self.members)


@dataclass(frozen=True)
class ClassCountSweep:
    counts: dict
    stable_count: int
    stable_from: int


def _canonical_runs(rules, init, T, d):
    def canonical_run(number):
        return canonical(run(init, decode_rule(number, d), T)).rows

    numbers = sorted(rules)
    return numbers, Utils.fan_out(canonical_run, numbers)


def _group(numbers, fingerprints):
    groups = {}
    for number, fingerprint in zip(numbers, fingerprints):
        groups.setdefault(fingerprint, []).append(number)

    return sorted(
        (BehaviourClass(label=min(members), members=tuple(sorted(members))) for members in groups.values()),
        key=lambda c: c.label,
    )


def classify(rules, init, T, d=3):
    """Partition rule numbers by canonical diagram from `init`; classes carry their smallest rule."""
    numbers, canon = _canonical_runs(rules, init, T, d)
    classes = _group(numbers, [CanonicalDiagram(rows).fingerprint() for rows in canon])
    logger.info('%s rules from %s cells over %s steps: %s classes', len(numbers), init.width, T, len(classes))
    return classes


def class_count_sweep(rules, init, t_from, t_to, d=3):
    """
    Class counts for every T in [t_from, t_to]. The canonical form of a
    prefix is the prefix of the canonical form, so one run per rule is enough.
    """
    if not 0 <= t_from <= t_to:
        raise ValueError('empty step range')

    numbers, canon = _canonical_runs(rules, init, t_to, d)
    counts = {
        T: len(_group(numbers, [CanonicalDiagram(rows[:T + 1]).fingerprint() for rows in canon]))
        for T in range(t_from, t_to + 1)
    }

    stable_from = t_to
    while stable_from > t_from and counts[stable_from - 1] == counts[t_to]:
        stable_from -= 1

    return ClassCountSweep(counts=counts, stable_count=counts[t_to], stable_from=stable_from)


# Names as trajectories

@dataclass(frozen=True)
class Trajectory:
    name: int
    points: frozenset
    height: int

    def occupancy(self):
        counts = [0] * self.height
        for t, _ in self.points:
            counts[t] += 1
        return counts

    @property
    def branches(self):
        return any(count > 1 for count in self.occupancy())

    @property
    def lifetime(self):
        """Rows holding the name; a name that leaves the row never comes back."""
        return sum(1 for count in self.occupancy() if count)


def track_name(diagram, name):
    points = frozenset((int(t), int(i)) for t, i in np.argwhere(diagram.rows == name))
    return Trajectory(name=name, points=points, height=diagram.height)


def name_lifetimes(diagram):
    return {int(name): track_name(diagram, int(name)).lifetime for name in np.unique(diagram.rows)}


# Name creation

UNBOUNDED = 'unbounded'
MAXIMAL = 'maximal'


@dataclass(frozen=True)
class CreationProfile:
    rule_id: str
    width: int
    fresh_per_step: tuple  # entry t: names first seen in row t + 1

    @property
    def total(self):
        return sum(self.fresh_per_step)

    def creates_after(self, t):
        """Some row below row t holds a name never seen before."""
        return any(self.fresh_per_step[t:])

    def all_fresh_from(self, t):
        """Every cell of every row from row t on is a new name."""
        if t < 1:
            raise ValueError('row 0 is the initial condition')

        tail = self.fresh_per_step[t - 1:]
        return bool(tail) and all(count == self.width for count in tail)


def creation_profile(diagram):
    # a fresh name is born in exactly one cell, so new names per row count Fresh reactions
    _, first = np.unique(diagram.rows, return_index=True)
    born = np.bincount(first // diagram.width, minlength=diagram.height)
    return CreationProfile(
        rule_id=diagram.rule_id,
        width=diagram.width,
        fresh_per_step=tuple(int(x) for x in born[1:]),
    )


def _unbounded(profile):
    return profile.creates_after(len(profile.fresh_per_step) // 2)


def _maximal(profile):
    return profile.all_fresh_from(max(1, 3 * len(profile.fresh_per_step) // 4))


CREATION_KINDS = {
    UNBOUNDED: _unbounded,
    MAXIMAL: _maximal,
}


def first_creative_rule(kind, inits, T, rules=range(216), d=3):
    """
    Smallest rule number showing `kind` creation from every init over T steps,
    or None. Unbounded: still creating names in the second half of the run.
    Maximal: every cell fresh on every step of the last quarter.
    """
    if kind not in CREATION_KINDS:
        raise ValueError('unknown creation kind %r' % kind)

    test = CREATION_KINDS[kind]
    for number in sorted(rules):
        rule = decode_rule(number, d)
        if all(test(creation_profile(run(init, rule, T))) for init in inits):
            logger.info('first %s creator: %s', kind, rule.label)
            return number

    return None


# Particles

@dataclass(frozen=True)
class Particle:
    kind: str
    start: int
    origin: int
    width: int
    period: int
    drift: int
    lifetime: int  # periods
    row_width: int
    properly_nominal: bool = False
    background: bool = False

    @property
    def end(self):
        return self.start + self.lifetime * self.period

    def window_at(self, k):
        """(step, cells) covered after k periods."""
        origin = self.origin + k * self.drift
        return self.start + k * self.period, tuple((origin + j) % self.row_width for j in range(self.width))

    def covers(self, other):
        if (self.width, self.period, self.drift, self.row_width) != \
                (other.width, other.period, other.drift, other.row_width):
            return False

        offset = other.start - self.start
        if offset < 0 or offset % self.period:
            return False

        k = offset // self.period
        if k + other.lifetime > self.lifetime:
            return False

        return (self.origin + k * self.drift - other.origin) % self.row_width == 0


def _windows(rows, w):
    n = rows.shape[1]
    index = (np.arange(n)[:, None] + np.arange(w)[None, :]) % n
    return rows[:, index]


def _chain_runs(match, period, drift):
    """runs[t, o]: consecutive True values along (t, o) -> (t + period, o + drift)."""
    runs = np.zeros(match.shape, dtype=np.int64)

    for t in range(match.shape[0] - 1, -1, -1):
        if t + period < match.shape[0]:
            runs[t] = np.where(match[t], 1 + np.roll(runs[t + period], -drift), 0)
        else:
            runs[t] = match[t]

    return runs


def _chain_starts(match, period, drift):
    starts = match.copy()
    for t in range(period, match.shape[0]):
        starts[t] &= ~np.roll(match[t - period], drift)
    return starts


def _background_cells(rows, cover):
    static = rows[:-1] == rows[1:]
    busy = static.mean(axis=1) > cover
    return static & busy[:, None]


class _Search:
    """Chain statistics shared by both detectors for one (width, period, drift)."""

    def __init__(self, rows, background, w, p, v):
        self.p, self.v = p, v
        windows = _windows(rows, w)
        following = np.roll(windows[p:], -v, axis=1)
        current = windows[:-p]

        self.classical = (current == following).all(axis=2)
        self.classical_runs = _chain_runs(self.classical, p, v)

        self.background_runs = _chain_runs(_windows(background, w).all(axis=2), p, v)

        self._pairs = (current, following)

    def nominal(self):
        current, following = self._pairs
        h, n, w = current.shape
        pairs = np.concatenate([current, following], axis=2).reshape(h * n, 2 * w)
        patterns = canonicalize_rows(pairs).reshape(h, n, 2 * w)
        return (patterns[:-self.p] == np.roll(patterns[self.p:], -self.v, axis=1)).all(axis=2)

    def is_background(self, t, o, lifetime):
        return t < len(self.background_runs) and self.background_runs[t, o] >= lifetime


def _check_limits(diagram, w_max, p_max):
    if w_max < 1 or p_max < 1:
        raise ValueError('window width and period bounds must be at least 1')

    if w_max > diagram.width:
        raise ValueError('window wider than the diagram')


def _detect(diagram, w_max, p_max, kind, include_background, min_lifetime):
    _check_limits(diagram, w_max, p_max)
    rows = diagram.rows
    n = diagram.width
    min_lifetime = min_lifetime or settings.NCA_MIN_PARTICLE_LIFETIME
    background = _background_cells(rows, settings.NCA_BACKGROUND_COVER)
    found = []

    for w in range(1, w_max + 1):
        for p in range(1, p_max + 1):
            if 2 * p >= diagram.height and kind == NOMINAL or p >= diagram.height:
                continue

            for v in range(-w_max, w_max + 1):
                search = _Search(rows, background, w, p, v)

                if kind == CLASSICAL:
                    match, extra = search.classical, 0
                else:
                    match, extra = search.nominal(), 1

                runs = _chain_runs(match, p, v)
                starts = _chain_starts(match, p, v) & (runs + extra >= min_lifetime)

                for t, o in np.argwhere(starts):
                    lifetime = int(runs[t, o]) + extra
                    proper = kind == NOMINAL and search.classical_runs[t, o] < lifetime
                    is_background = not proper and search.is_background(t, o, lifetime)

                    if is_background and not include_background:
                        continue

                    found.append(Particle(
                        kind=kind, start=int(t), origin=int(o), width=w, period=p, drift=v,
                        lifetime=lifetime, row_width=n, properly_nominal=bool(proper),
                        background=bool(is_background),
                    ))

    found.sort(key=lambda x: (x.start, x.origin, x.width, x.period, x.drift))
    logger.info('%s %s particles (w<=%s, p<=%s)', len(found), kind, w_max, p_max)
    return found


def detect_classical_particles(diagram, w_max, p_max, include_background=False, min_lifetime=None):
    return _detect(diagram, w_max, p_max, CLASSICAL, include_background, min_lifetime)


def detect_nominal_particles(diagram, w_max, p_max, include_background=False, min_lifetime=None):
    return _detect(diagram, w_max, p_max, NOMINAL, include_background, min_lifetime)


def names_along(diagram, particle):
    """Names met by a width-1 particle, one per period."""
    names = []
    for k in range(particle.lifetime + 1):
        t, cells = particle.window_at(k)
        names.append(int(diagram.rows[t, cells[0]]))
    return names
