# cone.py - exact polyhedral cones with both representations
"""cone.py -- exact polyhedral cones with vertex at the origin.

A Cone carries its generator representation (extreme rays modulo the
lineality space, plus a basis of the lineality space) and its inequality
representation (inward facet normals, plus the implicit equations as
pairs of opposite normals). Both are kept in canonical form:

  - lineality and equation bases are the reduced row echelon bases of
    their subspaces, scaled to primitive integer vectors;
  - generators are projected onto the orthogonal complement of the
    lineality space, facets onto the span of the cone;
  - every vector is primitive and every list is sorted.

Equal point sets therefore compare equal structurally.

Conversions between the two representations are done by double
description (cddlib, exact fractions). Membership combinations and the
Gordan alternative are exact linear programs, also solved by cddlib.
Every certificate re-verifies itself by exact arithmetic.
"""

from dataclasses import dataclass, field
import logging

import cdd

from .errors import (BadRank, CertificateError, DegenerateInput,
                     FolconeError, RankMismatch, ZeroVectorInput)
from .misc import (as_fraction, dot, is_zero, negate, primitive,
                   project_out, row_basis, unit_vector, vec_add, vec_scale,
                   zero_vector)
from .options import opts

logger = logging.getLogger(__name__)

INTERIOR = 'Interior'
BOUNDARY = 'Boundary'
OUTSIDE = 'Outside'

SHARED_INTERIOR = 'SharedInterior'
DISJOINT_INTERIORS = 'DisjointInteriors'


@dataclass(frozen=True)
class Cone(object):
    "A polyhedral cone in canonical form"
    rank: int
    generators: tuple
    lineality: tuple
    facets: tuple
    equations: tuple
    provenance: str = field(default='generators', compare=False)

    @property
    def is_zero(self):
        "True for the cone {0}"
        return not self.generators and not self.lineality

    @property
    def is_whole_space(self):
        "True for the whole space"
        return not self.facets

    @property
    def is_full_dimensional(self):
        "True if the cone has nonempty interior"
        return not self.equations

    @property
    def is_pointed(self):
        "True if the cone contains no line"
        return not self.lineality

    @property
    def dimension(self):
        "Dimension of the linear span"
        return self.rank - len(self.equations)

    @property
    def proper_facets(self):
        "Facet normals that are not halves of an implicit equation"
        eq = set(self.equations) | set(negate(e) for e in self.equations)
        return tuple(f for f in self.facets if f not in eq)

    def contains(self, x):
        "True if the rational vector x lies in the cone."
        return all(dot(f, x) >= 0 for f in self.facets)


def _check_rank(d):
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise BadRank('rank must be a positive integer, got %r' % (d,))
    if d > opts['max_rank']:
        raise BadRank('rank %d exceeds the cap %d (FOLCONE_MAX_RANK)' %
                      (d, opts['max_rank']))


def _check_vectors(vecs, d):
    out = []
    for v in vecs:
        v = tuple(v)
        if len(v) != d:
            raise BadRank('vector %r does not have length %d' % (v, d))
        out.append(tuple(as_fraction(a) for a in v))
    return out


def ray_vector(coords, d):
    "Validate a rational vector of length d."
    return _check_vectors([coords], d)[0]


def _canonical(d, rays, lines, ineqs, eqs, provenance):
    "Put both representations of a cone into canonical form."
    lin = row_basis(list(lines), d)
    eqb = row_basis(list(eqs), d)
    gens = set()
    for r in rays:
        r = primitive(project_out(r, lin))
        if not is_zero(r):
            gens.add(r)
    facets = set()
    for f in ineqs:
        f = primitive(project_out(f, eqb))
        if not is_zero(f):
            facets.add(f)
    for e in eqb:
        facets.add(e)
        facets.add(negate(e))
    return Cone(rank=d, generators=tuple(sorted(gens)),
                lineality=tuple(sorted(lin)), facets=tuple(sorted(facets)),
                equations=tuple(sorted(eqb)), provenance=provenance)


def zero_cone(d):
    "The cone {0} of rank d"
    _check_rank(d)
    return _canonical(d, [], [], [], [unit_vector(d, i) for i in range(d)],
                      'zero')


def whole_space(d):
    "The whole space of rank d as a cone"
    _check_rank(d)
    return _canonical(d, [], [unit_vector(d, i) for i in range(d)], [], [],
                      'whole')


def _matrix(rows, linear_rows=()):
    "Build an exact cdd matrix; rows and linear_rows are not both empty."
    rows = [list(r) for r in rows]
    linear_rows = [list(r) for r in linear_rows]
    if rows:
        mat = cdd.Matrix(rows, number_type='fraction')
        if linear_rows:
            mat.extend(linear_rows, linear=True)
    else:
        mat = cdd.Matrix(linear_rows, linear=True, number_type='fraction')
    return mat


def _generators_to_inequalities(d, rays, lines):
    "Double description from (rays, lines) to (inequalities, equations)."
    # the origin is the only vertex of a cone
    rows = [[1] + [0] * d] + [[0] + list(r) for r in rays]
    mat = _matrix(rows, [[0] + list(l) for l in lines])
    mat.rep_type = cdd.RepType.GENERATOR
    out = cdd.Polyhedron(mat).get_inequalities()
    ineqs = []
    eqs = []
    for i in range(out.row_size):
        row = [as_fraction(a) for a in out[i]]
        normal = tuple(row[1:])
        if is_zero(normal):
            # the trivial inequality 1 >= 0
            continue
        if row[0] != 0:
            raise FolconeError('double description returned an affine '
                               'inequality for a cone: %r' % (row,))
        if i in out.lin_set:
            eqs.append(normal)
        else:
            ineqs.append(normal)
    logger.debug("dd: %d rays + %d lines -> %d facets + %d equations",
                 len(rays), len(lines), len(ineqs), len(eqs))
    return ineqs, eqs


def _inequalities_to_generators(d, ineqs, eqs):
    "Double description from (inequalities, equations) to (rays, lines)."
    mat = _matrix([[0] + list(f) for f in ineqs],
                  [[0] + list(e) for e in eqs])
    mat.rep_type = cdd.RepType.INEQUALITY
    out = cdd.Polyhedron(mat).get_generators()
    rays = []
    lines = []
    for i in range(out.row_size):
        row = [as_fraction(a) for a in out[i]]
        if row[0] != 0:
            # a vertex, which for a cone is the origin
            continue
        vec = tuple(row[1:])
        if is_zero(vec):
            continue
        if i in out.lin_set:
            lines.append(vec)
        else:
            rays.append(vec)
    logger.debug("dd: %d facets + %d equations -> %d rays + %d lines",
                 len(ineqs), len(eqs), len(rays), len(lines))
    return rays, lines


def _nonzero_sorted(vecs):
    return sorted(set(primitive(v) for v in vecs if not is_zero(v)))


def cone_from_generators(vecs, d):
    "Canonical cone of all nonnegative combinations of vecs."
    _check_rank(d)
    gens = _nonzero_sorted(_check_vectors(vecs, d))
    if not gens:
        return zero_cone(d)
    ineqs, eqs = _generators_to_inequalities(d, gens, [])
    if not ineqs and not eqs:
        return whole_space(d)
    rays, lines = _inequalities_to_generators(d, ineqs, eqs)
    return _canonical(d, rays, lines, ineqs, eqs, 'generators')


def cone_from_inequalities(normals, d):
    "Canonical cone {x : <f, x> >= 0 for every normal f}."
    _check_rank(d)
    normals = _nonzero_sorted(_check_vectors(normals, d))
    if not normals:
        return whole_space(d)
    rays, lines = _inequalities_to_generators(d, normals, [])
    if not rays and not lines:
        return zero_cone(d)
    ineqs, eqs = _generators_to_inequalities(d, rays, lines)
    return _canonical(d, rays, lines, ineqs, eqs, 'inequalities')


def dualize(c):
    """The dual cone {y : <y, x> >= 0 for all x in c}.

    Facets of the dual are the generators of c, its equations span the
    lineality of c, and the other way round."""
    return _canonical(c.rank, c.proper_facets, c.equations, c.generators,
                      c.lineality, 'dual')


def cone_equal(a, b):
    "True if both cones are the same point set."
    return a == b


# certificates

@dataclass(frozen=True)
class MembershipCombo(object):
    """x = sum generator_coeffs[i] * generators[i]
         + sum lineality_coeffs[j] * lineality[j],
    with every generator coefficient nonnegative"""
    generators: tuple
    generator_coeffs: tuple
    lineality: tuple
    lineality_coeffs: tuple
    point: tuple
    variant = 'MembershipCombo'

    def verify(self):
        "Re-check the combination exactly."
        d = len(self.point)
        total = zero_vector(d)
        for c, g in zip(self.generator_coeffs, self.generators):
            if c < 0:
                raise CertificateError('negative generator coefficient')
            total = vec_add(total, vec_scale(c, g))
        for c, l in zip(self.lineality_coeffs, self.lineality):
            total = vec_add(total, vec_scale(c, l))
        if total != tuple(self.point):
            raise CertificateError('combination does not sum to the point')
        return True


@dataclass(frozen=True)
class SeparatingFunctional(object):
    "<normal, .> is >= 0 on the cone and < 0 on the point"
    normal: tuple
    cone: Cone
    point: tuple
    variant = 'SeparatingFunctional'

    def verify(self):
        "Re-check the separation exactly."
        if self.normal not in self.cone.facets:
            raise CertificateError('separating normal is not a facet')
        if not dot(self.normal, self.point) < 0:
            raise CertificateError('normal does not separate the point')
        return True


@dataclass(frozen=True)
class GordanDual(object):
    "Nonnegative coefficients, not all zero, with sum coeffs[i] * vectors[i] = 0"
    vectors: tuple
    coeffs: tuple
    variant = 'GordanDual'

    def verify(self):
        "Re-check the vanishing combination exactly."
        if not self.vectors:
            raise CertificateError('empty Gordan certificate')
        d = len(self.vectors[0])
        if any(c < 0 for c in self.coeffs) or all(c == 0 for c in self.coeffs):
            raise CertificateError('Gordan coefficients must be nonnegative '
                                   'and not all zero')
        total = zero_vector(d)
        for c, v in zip(self.coeffs, self.vectors):
            total = vec_add(total, vec_scale(c, v))
        if not is_zero(total):
            raise CertificateError('Gordan combination is not zero')
        return True


@dataclass(frozen=True)
class PositiveWitness(object):
    "A point pairing strictly positively with every vector"
    vectors: tuple
    point: tuple
    variant = 'PositiveWitness'

    def verify(self):
        "Re-check every pairing exactly."
        for v in self.vectors:
            if not dot(v, self.point) > 0:
                raise CertificateError('witness pairs %s with %r' %
                                       (dot(v, self.point), v))
        return True


@dataclass(frozen=True)
class Membership(object):
    "Verdict of membership() with its certificate"
    verdict: str
    certificate: object
    pairings: tuple


@dataclass(frozen=True)
class Overlap(object):
    "Verdict of interiors_overlap() with its certificate"
    verdict: str
    certificate: object

    @property
    def shared(self):
        "True for SharedInterior"
        return SHARED_INTERIOR == self.verdict


@dataclass(frozen=True)
class Containment(object):
    "Verdict of cone_contains(); violation is (vector, facet) or None"
    contained: bool
    violation: tuple = None


# exact linear programs

def _solve_lp(ineq_rows, eq_rows, objective, maximize=False):
    """Solve an exact LP in cdd form: rows are [b, a] meaning b + a.z >= 0
    (= 0 for eq_rows). Returns (primal solution, value) or None."""
    mat = _matrix(ineq_rows, eq_rows)
    mat.rep_type = cdd.RepType.INEQUALITY
    if maximize:
        mat.obj_type = cdd.LPObjType.MAX
    else:
        mat.obj_type = cdd.LPObjType.MIN
    mat.obj_func = tuple(objective)
    lp = cdd.LinProg(mat)
    lp.solve()
    if lp.status != cdd.LPStatusType.OPTIMAL:
        logger.debug("lp status %s", lp.status)
        return None
    primal = tuple(as_fraction(a) for a in lp.primal_solution)
    return primal, as_fraction(lp.obj_value)


def _membership_combo(c, x):
    gens = c.generators
    lins = c.lineality
    m = len(gens)
    k = len(lins)
    if 0 == m + k:
        return MembershipCombo((), (), (), (), tuple(x))
    ineq_rows = []
    for j in range(m):
        ineq_rows.append([0] + [1 if i == j else 0 for i in range(m + k)])
    eq_rows = []
    for i in range(c.rank):
        eq_rows.append([-x[i]] + [g[i] for g in gens] + [l[i] for l in lins])
    # least total generator weight, so the answer is bounded and definite
    sol = _solve_lp(ineq_rows, eq_rows, [0] + [1] * m + [0] * k)
    if sol is None:
        raise CertificateError('point %r passed every facet but has no '
                               'generator combination' % (tuple(x),))
    z = sol[0]
    combo = MembershipCombo(gens, z[:m], lins, z[m:], tuple(x))
    combo.verify()
    return combo


def membership(c, x):
    """Classify x against the cone: Interior when every facet pairing is
    positive (vacuously for the whole space), Boundary when all are
    nonnegative and one vanishes, Outside otherwise."""
    x = ray_vector(x, c.rank)
    pairings = tuple(dot(f, x) for f in c.facets)
    for f, p in zip(c.facets, pairings):
        if p < 0:
            cert = SeparatingFunctional(f, c, x)
            cert.verify()
            return Membership(OUTSIDE, cert, pairings)
    if all(p > 0 for p in pairings):
        verdict = INTERIOR
    else:
        verdict = BOUNDARY
    return Membership(verdict, _membership_combo(c, x), pairings)


def strictly_positive_functional(vecs, d):
    """Gordan's alternative for vecs: either a PositiveWitness y with
    <v, y> > 0 for every v, or a GordanDual proving none exists."""
    _check_rank(d)
    vecs = tuple(tuple(v) for v in _check_vectors(vecs, d))
    for v in vecs:
        if is_zero(v):
            raise ZeroVectorInput('zero vector in Gordan input')
    if not vecs:
        return PositiveWitness((), zero_vector(d))

    # maximize t subject to <v, y> >= t, t <= 1, -1 <= y_i <= 1
    rows = []
    for v in vecs:
        rows.append([0] + list(v) + [-1])
    rows.append([1] + [0] * d + [-1])
    for i in range(d):
        e = [1 if j == i else 0 for j in range(d)]
        rows.append([1] + e + [0])
        rows.append([1] + [-a for a in e] + [0])
    sol = _solve_lp(rows, [], [0] * (d + 1) + [1], maximize=True)
    if sol is None:
        raise FolconeError('Gordan LP unexpectedly failed')
    point, value = sol
    if value > 0:
        witness = PositiveWitness(vecs, primitive(point[:d]))
        witness.verify()
        return witness

    # otherwise find lambda >= 0, sum lambda = 1, sum lambda_i v_i = 0
    m = len(vecs)
    rows = [[0] + [1 if i == j else 0 for i in range(m)] for j in range(m)]
    eqs = [[-1] + [1] * m]
    for i in range(d):
        eqs.append([0] + [v[i] for v in vecs])
    sol = _solve_lp(rows, eqs, [0] * (m + 1))
    if sol is None:
        raise FolconeError('Gordan alternative found neither branch')
    cert = GordanDual(vecs, primitive(sol[0]))
    cert.verify()
    return cert


def interiors_overlap(a, b):
    """SharedInterior with a witness when some point is strictly positive
    on both facet lists, else DisjointInteriors with a Gordan certificate
    over the combined facet normals."""
    if a.rank != b.rank:
        raise RankMismatch('cones of rank %d and %d' % (a.rank, b.rank))
    if not a.is_full_dimensional or not b.is_full_dimensional:
        raise DegenerateInput('interiors_overlap needs full-dimensional cones')
    combined = list(a.facets) + list(b.facets)
    cert = strictly_positive_functional(combined, a.rank)
    if isinstance(cert, PositiveWitness):
        return Overlap(SHARED_INTERIOR, cert)
    return Overlap(DISJOINT_INTERIORS, cert)


def cone_contains(a, b):
    "Is b a subset of a? The violation is a (vector of b, facet of a) pair."
    if a.rank != b.rank:
        raise RankMismatch('cones of rank %d and %d' % (a.rank, b.rank))
    vecs = list(b.generators) + list(b.lineality) + \
        [negate(l) for l in b.lineality]
    for v in vecs:
        for f in a.facets:
            if dot(f, v) < 0:
                return Containment(False, (v, f))
    return Containment(True, None)
