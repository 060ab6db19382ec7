# fake.py - fixture systems and seeded random inputs for the oracle tests
"""
fake.py -- a controlled supply of Markov systems and vector sets.

The oracle tests compare the exact engine against brute force on many
inputs. Every input here comes either from a fixed fixture or from
numpy.random.default_rng(seed), so a failing case can always be rebuilt
from its seed alone.

Fixtures:

gm_system()
    Two letters a, b with a -> a labelled (1,0), a -> b labelled (0,1)
    and b -> a labelled (1,0). Minimal loops (a) of class (1,0) and (a,b)
    of class (1,1).

negated_system(system)
    The same letters and matrix with every label negated; its foliation
    cone is the negative of the original.

self_loop_system(d)
    One letter with a self-loop labelled e_1; its foliation cone is the
    half-space x_1 >= 0.

cycle_system(n)
    Letters l0 .. l(n-1) on a single cycle, the k-th transition labelled
    e_k; every orbit is forced.

product_system(d)
    Two letters with a single transition and no cycle.

gordan_system()
    Two self-loops with opposite classes; no class is positive on both.

random_system(seed) draws an alphabet of at most MAX_LETTERS letters,
a rank of at most MAX_RANK and labels in [-LABEL_BOUND, LABEL_BOUND],
redrawing until no circuit has class zero.
"""

import logging

import numpy as np

from .errors import ZeroClassLoop
from .markov import validate_system

logger = logging.getLogger(__name__)

MAX_LETTERS = 5
MAX_RANK = 4
LABEL_BOUND = 3
# probability that a given transition is allowed
DENSITY = 0.4
# redraws before random_system() gives up
MAX_REDRAWS = 10000


def _document(name, rank, letters, transitions):
    return {
        'name': name,
        'rank': rank,
        'letters': list(letters),
        'transitions': [{'from': a, 'to': b, 'class': list(c)}
                        for a, b, c in transitions],
    }


def gm_document():
    "The two-letter fixture as a raw document"
    return _document('gm', 2, 'ab', [('a', 'a', (1, 0)),
                                      ('a', 'b', (0, 1)),
                                      ('b', 'a', (1, 0))])


def gm_system():
    "The two-letter fixture"
    return validate_system(gm_document())


def negated_system(system, name=None):
    "Same letters and matrix, every label negated"
    letters = [l.name for l in system.letters]
    transitions = [(letters[i], letters[j], tuple(-c for c in cls))
                   for (i, j), cls in sorted(system.transitions.items())]
    return validate_system(_document(name or system.name + '-negated',
                                     system.rank, letters, transitions))


def renamed_system(system, names, name=None):
    "Same matrix and labels, letters renamed in order"
    old = [l.name for l in system.letters]
    rename = dict(zip(old, names))
    transitions = [(rename[old[i]], rename[old[j]], cls)
                   for (i, j), cls in sorted(system.transitions.items())]
    return validate_system(_document(name or system.name + '-renamed',
                                     system.rank, [rename[a] for a in old],
                                     transitions))


def self_loop_system(d=2):
    "One letter, one self-loop of class e_1"
    return validate_system(_document(
        'selfloop', d, 'a', [('a', 'a', (1,) + (0,) * (d - 1))]))


def cycle_system(n=3):
    "A single n-cycle, transition k labelled e_k"
    letters = ['l%d' % k for k in range(n)]
    transitions = []
    for k in range(n):
        cls = tuple(1 if j == k else 0 for j in range(n))
        transitions.append((letters[k], letters[(k + 1) % n], cls))
    return validate_system(_document('cycle%d' % n, n, letters, transitions))


def product_system(d=2):
    "No cycles at all"
    return validate_system(_document('product', d, 'ab',
                                     [('a', 'b', (1,) + (0,) * (d - 1))]))


def gordan_system():
    "Two self-loops of opposite class"
    return validate_system(_document('bad', 2, 'ab', [('a', 'a', (1, 0)),
                                                      ('b', 'b', (-1, 0)),
                                                      ('a', 'b', (0, 1))]))


def random_system(seed, max_letters=MAX_LETTERS, max_rank=MAX_RANK,
                  bound=LABEL_BOUND):
    "A random system without zero-class circuits, reproducible from seed"
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_REDRAWS):
        n = int(rng.integers(1, max_letters + 1))
        d = int(rng.integers(1, max_rank + 1))
        letters = ['x%d' % k for k in range(n)]
        transitions = []
        for a in letters:
            for b in letters:
                if rng.random() < DENSITY:
                    cls = tuple(int(c) for c in
                                rng.integers(-bound, bound + 1, size=d))
                    transitions.append((a, b, cls))
        try:
            return validate_system(_document('random%d' % seed, d, letters,
                                             transitions))
        except ZeroClassLoop:
            continue
    raise RuntimeError('seed %d: no system without zero-class circuits '
                       'after %d draws' % (seed, MAX_REDRAWS))


def random_vectors(seed, max_rank=5, max_count=8, bound=LABEL_BOUND,
                   nonzero=False):
    """(d, vectors) with 1 <= d <= max_rank and 1 <= count <= max_count
    integer vectors with entries in [-bound, bound]."""
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, max_rank + 1))
    count = int(rng.integers(1, max_count + 1))
    vecs = []
    while len(vecs) < count:
        v = tuple(int(c) for c in rng.integers(-bound, bound + 1, size=d))
        if nonzero and all(0 == c for c in v):
            continue
        vecs.append(v)
    return d, vecs
