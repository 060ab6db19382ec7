# markov.py - Markov systems, periodic strings and minimal loops
"""markov.py -- symbolic dynamics of a Markov partition.

A Markov system is an alphabet of letters (one per rectangle of the
partition), the 0/1 transition structure saying which letter may follow
which, and an integer homology label on every allowed transition. The
class of a periodic string is the sum of the labels along its wrap-around
transitions; closing arcs inside a rectangle contribute nothing.

Minimal loops are the periodic strings with pairwise distinct letters,
i.e. the elementary circuits of the transition digraph. Every periodic
string splits, by cutting at the first repeated letter, into minimal
loops whose classes add up to its class.

Words are tuples of letter indices. Letter order is alphabet order, and
every cyclic word is stored in its lexicographically least rotation.
"""

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
import logging
import re

import networkx as nx

from .errors import (BadLength, BadLetterName, BadRank, BudgetExceeded,
                     DanglingTransition, DuplicateLetter,
                     DuplicateTransition, EmptyWord, IllegalTransition,
                     SchemaError, ZeroClassLoop)
from .misc import is_zero, vec_add, zero_vector
from .options import opts

logger = logging.getLogger(__name__)

LETTER_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


@dataclass(frozen=True, order=True)
class Letter(object):
    "One rectangle of the Markov partition"
    index: int
    name: str


@dataclass(frozen=True)
class MarkovSystem(object):
    """Validated Markov system.

    transitions maps an ordered pair of letter indices (i, j) to the
    homology label of the transition i -> j; a pair is present exactly
    when the matrix entry A[i][j] is 1. Labels are tuples of rank ints.
    """
    rank: int
    letters: tuple
    transitions: dict = field(hash=False)
    name: str = 'system'
    product_type: bool = False

    @cached_property
    def graph(self):
        "The transition digraph on letter indices"
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.letters)))
        g.add_edges_from(sorted(self.transitions))
        return g

    @property
    def size(self):
        "Number of letters"
        return len(self.letters)

    def letter_index(self, name):
        "Index of the letter called name."
        for letter in self.letters:
            if letter.name == name:
                return letter.index
        raise DanglingTransition('unknown letter %r' % (name,))

    def allowed(self, i, j):
        "True if letter j may follow letter i."
        return (i, j) in self.transitions

    def label(self, i, j):
        "Homology label of the transition i -> j"
        try:
            return self.transitions[(i, j)]
        except KeyError:
            raise IllegalTransition('%s -> %s is not an allowed transition'
                                    % (self.letters[i].name,
                                       self.letters[j].name))

    def successors(self, i):
        "Letters that may follow letter i, in alphabet order"
        return sorted(self.graph.successors(i))

    def names(self, word):
        "Letter names of a word"
        return tuple(self.letters[i].name for i in word)

    def indices(self, names):
        "Letter indices of a sequence of names"
        return tuple(self.letter_index(n) for n in names)

    def same_data(self, other):
        "True if both systems carry the same letters, matrix and labels."
        return (self.rank == other.rank and
                self.letters == other.letters and
                self.transitions == other.transitions)

    @cached_property
    def loops(self):
        "Minimal loops, computed once"
        return _elementary_loops(self)


@dataclass(frozen=True, order=True)
class PeriodicString(object):
    "A nonempty admissible cyclic word, in the rotation it was given"
    word: tuple

    @property
    def length(self):
        "The period q"
        return len(self.word)

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True, order=True)
class MinimalLoop(object):
    "An elementary circuit in canonical rotation, with its class"
    string: PeriodicString
    cls: tuple

    @property
    def word(self):
        "Letter indices of the loop"
        return self.string.word

    @property
    def length(self):
        "Number of letters in the loop"
        return len(self.string.word)


def _records(raw):
    "Pull (name, rank, letters, transition records) out of raw input."
    if isinstance(raw, Mapping):
        name = raw.get('name', 'system')
        rank = raw.get('rank')
        letters = raw.get('letters')
        records = []
        for k, t in enumerate(raw.get('transitions') or []):
            try:
                records.append((t['from'], t['to'], t['class']))
            except (KeyError, TypeError):
                raise SchemaError('transitions[%d]' % k,
                                  'needs "from", "to" and "class"')
        return name, rank, letters, records
    records = [(t.source, t.target, t.cls) for t in raw.transitions]
    return raw.name, raw.rank, raw.letters, records


def validate_system(raw):
    """Validate a raw system description and return a MarkovSystem.

    raw is either a SystemDocument from sysfile.parse_system_file() or a
    mapping in the same shape as the JSON system file.
    """
    name, rank, names, records = _records(raw)

    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise BadRank('rank must be a positive integer, got %r' % (rank,))
    if not names:
        raise BadLetterName('a system needs at least one letter')

    letters = []
    seen = set()
    for i, letter_name in enumerate(names):
        if not isinstance(letter_name, str) or \
           not LETTER_RE.match(letter_name):
            raise BadLetterName('bad letter name %r' % (letter_name,))
        if letter_name in seen:
            raise DuplicateLetter('letter %r appears twice' % letter_name)
        seen.add(letter_name)
        letters.append(Letter(i, letter_name))
    index = dict((l.name, l.index) for l in letters)

    transitions = {}
    for k, (src, dst, cls) in enumerate(records):
        for end in (src, dst):
            if end not in index:
                raise DanglingTransition(
                    'transitions[%d] references unknown letter %r' %
                    (k, end))
        if not isinstance(cls, (list, tuple)) or len(cls) != rank:
            raise BadRank('transitions[%d] class must have length %d' %
                          (k, rank))
        for c in cls:
            if isinstance(c, bool) or not isinstance(c, int):
                raise SchemaError('transitions[%d].class' % k,
                                  'coordinates must be integers')
        pair = (index[src], index[dst])
        if pair in transitions:
            raise DuplicateTransition('transition %s -> %s given twice' %
                                      (src, dst))
        transitions[pair] = tuple(cls)

    system = MarkovSystem(rank=rank, letters=tuple(letters),
                          transitions=transitions, name=name)
    product = nx.is_directed_acyclic_graph(system.graph)
    system = MarkovSystem(rank=rank, letters=tuple(letters),
                          transitions=transitions, name=name,
                          product_type=product)

    # every elementary circuit must carry a nonzero class
    for loop in system.loops:
        if is_zero(loop.cls):
            raise ZeroClassLoop('loop (%s) has zero class' %
                                ','.join(system.names(loop.word)),
                                word=loop.word)
    logger.debug("validated %s: %d letters, %d transitions, %d loops%s",
                 name, len(letters), len(transitions), len(system.loops),
                 ', product type' if product else '')
    return system


def canonical_rotation(word):
    "Lexicographically least rotation of a nonempty word."
    word = tuple(word)
    if not word:
        raise EmptyWord('empty word has no rotation')
    return min(word[k:] + word[:k] for k in range(len(word)))


def rotate(word, k):
    "Rotate a word left by k places."
    word = tuple(word)
    if not word:
        return word
    k %= len(word)
    return word[k:] + word[:k]


def _word(p):
    if isinstance(p, PeriodicString):
        return p.word
    return tuple(p)


def class_of(system, p):
    """Homology class of a periodic string: the sum of the labels of its
    q wrap-around transitions."""
    word = _word(p)
    if not word:
        raise EmptyWord('empty periodic string')
    cls = zero_vector(system.rank)
    q = len(word)
    for k in range(q):
        cls = vec_add(cls, system.label(word[k], word[(k + 1) % q]))
    return cls


def loop_of(system, word):
    "The MinimalLoop of an elementary cyclic word."
    word = canonical_rotation(word)
    return MinimalLoop(PeriodicString(word), class_of(system, word))


def _elementary_loops(system):
    loops = []
    # Johnson's algorithm; nodes are letter indices in input order
    for cycle in nx.simple_cycles(system.graph):
        loops.append(loop_of(system, cycle))
    loops.sort(key=lambda l: l.word)
    return tuple(loops)


def minimal_loops(system):
    """All elementary circuits of the transition digraph, canonically
    rotated, sorted, each with its class."""
    return list(system.loops)


def enumerate_periodic_strings(system, max_len, cap=None):
    """All admissible periodic strings of length <= max_len, one canonical
    rotation per cyclic word, sorted.

    Raises BudgetExceeded once more than cap strings have been found.
    """
    if max_len < 1:
        raise BadLength('max_len must be at least 1, got %r' % (max_len,))
    if cap is None:
        cap = opts['enum_cap']
    found = []
    succ = dict((i, system.successors(i)) for i in range(system.size))

    # a canonical word starts with its least letter, so a walk from start
    # never visits a smaller letter
    for start in range(system.size):
        stack = [(start,)]
        while stack:
            word = stack.pop()
            last = word[-1]
            if start in succ[last] and canonical_rotation(word) == word:
                found.append(PeriodicString(word))
                if len(found) > cap:
                    raise BudgetExceeded(
                        'more than %d periodic strings of length <= %d' %
                        (cap, max_len), cap=cap)
            if len(word) < max_len:
                for nxt in succ[last]:
                    if nxt >= start:
                        stack.append(word + (nxt,))
    found.sort()
    logger.debug("%d periodic strings of length <= %d", len(found), max_len)
    return found


def decompose_into_minimal_loops(system, p):
    """Split a periodic string into minimal loops.

    Walk the closed word and cut out a loop each time a letter repeats.
    Returns a Counter mapping MinimalLoop to multiplicity; the classes
    with multiplicity sum to class_of(system, p) and the loop lengths
    sum to len(p).
    """
    word = _word(p)
    # validates admissibility
    class_of(system, word)

    pieces = Counter()
    path = []
    where = {}
    for letter in word + word[:1]:
        if letter in where:
            pos = where[letter]
            cycle = path[pos:]
            for gone in cycle:
                del where[gone]
            del path[pos:]
            pieces[loop_of(system, cycle)] += 1
        where[letter] = len(path)
        path.append(letter)
    return pieces


def is_minimal(word):
    "Minimality criterion: pairwise distinct letters."
    return len(set(word)) == len(word)
