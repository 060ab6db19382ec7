# orbit.py - orbit simulation, empirical homology directions and oracles
"""orbit.py -- long almost-closed orbits of the subshift.

random_orbit() walks the transition digraph with a seeded generator.
Closed walks are cut out of the orbit at returns, and their classes,
divided by their lengths, give empirical homology directions. Those
directions must stay inside the homology cone and settle down as the
orbit gets longer; convergence_report() measures both.

brute_force_cone() and verify_minimal_loops() are the oracles: the hull
over all periodic strings up to some length is already spanned by the
minimal loops, and every periodic class is a nonnegative integer
combination of minimal-loop classes.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import logging

import networkx as nx
import numpy as np

from .cone import OUTSIDE, cone_equal, cone_from_generators, membership
from .errors import (BadLength, CertificateError, NoReturn,
                     ProductTypeSystem)
from .foliation import homology_cone
from .markov import (class_of, decompose_into_minimal_loops,
                     enumerate_periodic_strings, is_minimal, minimal_loops)
from .misc import max_norm, vec_add, vec_scale, vec_sub, vec_sum, zero_vector
from .options import opts

logger = logging.getLogger(__name__)

CLOSE_MODES = ('initial', 'any')


@dataclass(frozen=True)
class OrbitPath(object):
    "T steps of an orbit; sums[t] is the sum of the first t labels"
    letters: tuple
    labels: tuple
    sums: tuple
    seed: int

    @property
    def steps(self):
        "Number of transitions T"
        return len(self.labels)


@dataclass(frozen=True)
class ClosedWalk(object):
    "letters[start:end] of an orbit, with letters[start] == letters[end]"
    start: int
    end: int
    length: int
    cls: tuple
    word: tuple


@dataclass(frozen=True)
class EmpiricalDirection(object):
    "cls / q"
    vector: tuple
    q: int


def _cycle_letters(system):
    "Letters lying on some cycle"
    g = system.graph
    on_cycle = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1:
            on_cycle |= comp
    on_cycle |= set(i for i in g.nodes if g.has_edge(i, i))
    return on_cycle


def random_orbit(system, steps, seed):
    """Walk steps transitions from the least letter on a cycle, choosing
    uniformly among the successors that can still reach a cycle."""
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise BadLength('steps must be a positive integer, got %r' % (steps,))
    on_cycle = _cycle_letters(system)
    if not on_cycle:
        raise ProductTypeSystem('%s has no cycles to follow' % system.name)
    alive = set(on_cycle)
    for i in on_cycle:
        alive |= nx.ancestors(system.graph, i)

    rng = np.random.default_rng(seed)
    cur = min(on_cycle)
    letters = [cur]
    labels = []
    sums = [zero_vector(system.rank)]
    for _ in range(steps):
        choices = [j for j in system.successors(cur) if j in alive]
        nxt = choices[int(rng.integers(len(choices)))]
        label = system.label(cur, nxt)
        labels.append(label)
        sums.append(vec_add(sums[-1], label))
        letters.append(nxt)
        cur = nxt
    return OrbitPath(tuple(letters), tuple(labels), tuple(sums), seed)


def _walk(path, start, end):
    return ClosedWalk(start, end, end - start,
                      vec_sub(path.sums[end], path.sums[start]),
                      path.letters[start:end])


def close_at_returns(path, mode=None):
    """Cut an orbit into closed walks, in order.

    In 'initial' mode the walks run between successive returns to the
    first letter. In 'any' mode a walk is cut out at the first repeated
    letter of any kind, and the search starts afresh at its end.
    Raises NoReturn when nothing closes up.
    """
    if mode is None:
        mode = opts['close_mode']
    if mode not in CLOSE_MODES:
        raise ValueError('unknown close mode %r' % (mode,))
    walks = []
    if 'initial' == mode:
        first = path.letters[0]
        returns = [t for t, a in enumerate(path.letters) if a == first]
        for s, e in zip(returns, returns[1:]):
            walks.append(_walk(path, s, e))
    else:
        seen = {}
        for t, a in enumerate(path.letters):
            if a in seen:
                walks.append(_walk(path, seen[a], t))
                seen = {}
            seen[a] = t
    if not walks:
        raise NoReturn('orbit of %d steps never closes up' % path.steps)
    return walks


def close_by_extension(system, path):
    """Close the whole orbit with a shortest admissible path from its last
    letter back to its first."""
    first = path.letters[0]
    last = path.letters[-1]
    try:
        tail = nx.shortest_path(system.graph, last, first)
    except nx.NetworkXNoPath:
        raise NoReturn('no path from %s back to %s' %
                       (system.letters[last].name,
                        system.letters[first].name))
    cls = path.sums[-1]
    for a, b in zip(tail, tail[1:]):
        cls = vec_add(cls, system.label(a, b))
    word = path.letters[:-1] + tuple(tail[:-1])
    return ClosedWalk(0, len(word), len(word), cls, word)


def _close_tail(system, path, walks):
    """Close the rest of the orbit after the last walk by extension, or
    None when nothing is left over. The walk ends at the last step but is
    longer than end - start by the closing path."""
    start = walks[-1].end if walks else 0
    if start == path.steps:
        return None
    base = path.sums[start]
    tail = OrbitPath(path.letters[start:], path.labels[start:],
                     tuple(vec_sub(s, base) for s in path.sums[start:]),
                     path.seed)
    w = close_by_extension(system, tail)
    return ClosedWalk(start, path.steps, w.length, w.cls, w.word)


def empirical_direction(w):
    "Exact direction cls / q of a closed walk"
    if w.length < 1:
        raise BadLength('a closed walk has length at least 1')
    return EmpiricalDirection(tuple(Fraction(c, w.length) for c in w.cls),
                              w.length)


@dataclass(frozen=True)
class SimulationConfig(object):
    "Parameters of convergence_report(); trial k uses seed + k"
    steps: int
    trials: int = 1
    seed: int = 0
    window: int = 10
    mode: str = 'initial'
    # close the leftover tail with close_by_extension()
    extend: bool = False

    def __post_init__(self):
        if self.steps < 1:
            raise BadLength('steps must be at least 1')
        if self.trials < 1:
            raise BadLength('trials must be at least 1')
        if self.window < 0:
            raise BadLength('window must be nonnegative')
        if self.mode not in CLOSE_MODES:
            raise ValueError('unknown close mode %r' % (self.mode,))


@dataclass(frozen=True)
class TrialReport(object):
    "One seeded orbit, its closed walks and its checkpoints"
    index: int
    seed: int
    walks: int
    verdicts: tuple
    outside: int
    checkpoints: tuple
    statistic: Fraction
    direction: tuple
    multiplicities: tuple
    no_return: str = None


@dataclass(frozen=True)
class ConvergenceReport(object):
    "Merged trials of convergence_report(), keyed by trial index"
    name: str
    config: SimulationConfig
    trials: tuple

    @property
    def statistic(self):
        "Worst convergence statistic over the trials"
        stats = [t.statistic for t in self.trials if t.statistic is not None]
        return max(stats) if stats else None

    @property
    def contained(self):
        "True if no closed walk fell outside the homology cone"
        return all(0 == t.outside for t in self.trials)


def _checkpoints(steps):
    t = 1
    while t <= steps:
        yield t
        t *= 2


def _run_trial(system, config, index, verdict_of, loops):
    seed = config.seed + index
    path = random_orbit(system, config.steps, seed)
    try:
        try:
            walks = close_at_returns(path, config.mode)
        except NoReturn:
            if not config.extend:
                raise
            walks = []
        if config.extend:
            try:
                last = _close_tail(system, path, walks)
            except NoReturn as err:
                if not walks:
                    raise
                logger.info("trial %d: tail left open: %s", index, err)
                last = None
            if last is not None:
                walks.append(last)
    except NoReturn as err:
        logger.warning("trial %d: %s", index, err)
        return TrialReport(index, seed, 0, (), 0, (), None, None, (),
                           no_return=err.msg)

    tally = Counter()
    pieces = Counter()
    for w in walks:
        tally[verdict_of(w.cls)] += 1
        pieces.update(decompose_into_minimal_loops(system, w.word))

    # the cumulative direction uses every walk finished by time t
    points = []
    k = 0
    cls = zero_vector(system.rank)
    q = 0
    for t in _checkpoints(config.steps):
        while k < len(walks) and walks[k].end <= t:
            cls = vec_add(cls, walks[k].cls)
            q += walks[k].length
            k += 1
        if q:
            points.append((t, tuple(Fraction(c, q) for c in cls)))
    cls = vec_sum([w.cls for w in walks], system.rank)
    q = sum(w.length for w in walks)

    exhibited = vec_sum([vec_scale(n, l.cls) for l, n in pieces.items()],
                        system.rank)
    if exhibited != cls:
        raise CertificateError('trial %d: loop multiplicities miss the '
                               'walk class' % index)

    late = [v for t, v in points if t >= 2 ** config.window]
    statistic = None
    if len(late) > 1:
        statistic = max(max_norm(vec_sub(b, a))
                        for a, b in zip(late, late[1:]))
    mult = tuple((l, pieces[l]) for l in loops if pieces[l])
    logger.info("trial %d seed %d: %d walks, statistic %s", index, seed,
                len(walks), statistic)
    return TrialReport(index, seed, len(walks), tuple(sorted(tally.items())),
                       tally[OUTSIDE], tuple(points), statistic,
                       tuple(Fraction(c, q) for c in cls), mult)


def convergence_report(system, config):
    """Run config.trials seeded orbits and check every closed-walk class
    exactly against the homology cone.

    Each trial records the cumulative empirical direction at the dyadic
    checkpoints 1, 2, 4, ...; its statistic is the largest max-norm step
    between successive checkpoints from 2**window on.
    """
    hcone = homology_cone(system)
    loops = minimal_loops(system)

    @lru_cache(maxsize=None)
    def verdict_of(cls):
        return membership(hcone, cls).verdict

    trials = tuple(_run_trial(system, config, k, verdict_of, loops)
                   for k in range(config.trials))
    return ConvergenceReport(system.name, config, trials)


def brute_force_cone(system, max_len, cap=None):
    "Hull of the classes of every periodic string of length <= max_len"
    if max_len < system.size:
        raise BadLength('length %d is below the letter count %d' %
                        (max_len, system.size))
    strings = enumerate_periodic_strings(system, max_len, cap)
    return cone_from_generators([class_of(system, p) for p in strings],
                                system.rank)


def integer_combination(loops, cls, length, bound=8):
    """Search for multiplicities c_k <= bound with sum c_k loops[k].cls =
    cls and sum c_k len(loops[k]) = length. Returns a tuple or None."""
    loops = list(loops)
    n = len(loops)

    def search(k, rest, left):
        if k == n:
            if 0 == left and all(0 == a for a in rest):
                return ()
            return None
        size = loops[k].length
        for c in range(0, min(bound, left // size) + 1):
            found = search(k + 1, vec_sub(rest, vec_scale(c, loops[k].cls)),
                           left - c * size)
            if found is not None:
                return (c,) + found
        return None

    return search(0, tuple(cls), length)


@dataclass(frozen=True)
class OracleReport(object):
    "Results of verify_minimal_loops()"
    max_len: int
    integer_max_len: int
    homology_cone: object
    brute_cone: object
    cones_equal: bool
    strings: int
    failures: tuple = field(default=())

    @property
    def ok(self):
        "True if every check passed"
        return self.cones_equal and not self.failures


def verify_minimal_loops(system, max_len=10, integer_max_len=6, bound=8,
                         cap=None):
    """Check that minimal loops span every periodic class, as a cone and
    as nonnegative integer combinations, and that every periodic string
    without a repeated letter is one of the minimal loops."""
    hcone = homology_cone(system)
    brute = brute_force_cone(system, max(max_len, system.size), cap)
    loops = minimal_loops(system)
    words = set(l.word for l in loops)
    failures = []
    strings = enumerate_periodic_strings(system, integer_max_len, cap)
    for p in strings:
        if is_minimal(p.word) and p.word not in words:
            failures.append((p, 'missing minimal loop'))
            continue
        cls = class_of(system, p)
        pieces = decompose_into_minimal_loops(system, p)
        total = vec_sum([vec_scale(n, l.cls) for l, n in pieces.items()],
                        system.rank)
        if total != cls or \
           sum(n * l.length for l, n in pieces.items()) != len(p):
            failures.append((p, 'decomposition'))
        elif integer_combination(loops, cls, len(p), bound) is None:
            failures.append((p, 'coefficient search'))
    logger.info("%s: %d strings checked, %d failures", system.name,
                len(strings), len(failures))
    return OracleReport(max_len, integer_max_len, hcone, brute,
                        cone_equal(hcone, brute), len(strings),
                        tuple(failures))
