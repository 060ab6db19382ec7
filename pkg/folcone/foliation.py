# foliation.py - homology cones, foliation cones and ray classification
"""foliation.py -- the cones of a Markov system and what they classify.

The homology cone of a system is the cone spanned by its minimal-loop
classes. The foliation cone is its dual: the classes pairing
nonnegatively with every minimal loop. Rational rays in the interior of
the foliation cone are proper foliated rays; rays on its boundary are
not. A system without cycles is a foliated product, whose foliation cone
is the whole space with 0 as a degenerate interior ray.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import logging

from .cone import (BOUNDARY, INTERIOR, GordanDual, cone_contains, cone_equal,
                   cone_from_generators, dualize, interiors_overlap,
                   membership, ray_vector, strictly_positive_functional,
                   whole_space)
from .errors import (BadFacet, BadHeight, BadRank, BudgetExceeded,
                     CertificateError, DegenerateInput, FamilyViolation,
                     NoTransverseClass, RankMismatch, ZeroRay)
from .markov import MarkovSystem, minimal_loops
from .misc import dot, is_zero, max_norm, primitive, zero_vector
from .options import opts

logger = logging.getLogger(__name__)

# facet_lattice_rays' keyword argument shadows the function
_primitive = primitive

PROPER_FOLIATED_RAY = 'ProperFoliatedRay'
BOUNDARY_RAY = 'BoundaryRay'
OUTSIDE_RAY = 'OutsideRay'
DEGENERATE_PRODUCT_RAY = 'DegenerateProductRay'

_RAY_VERDICTS = {
    INTERIOR: PROPER_FOLIATED_RAY,
    BOUNDARY: BOUNDARY_RAY,
}

CONTAINED = 'Contained'
DISJOINT = 'Disjoint'
CONTRADICTION = 'Contradiction'


@dataclass(frozen=True)
class FacetRecord(object):
    "A facet normal of the foliation cone and the loops defining it"
    normal: tuple
    loops: tuple


@dataclass(frozen=True)
class FoliationConeReport(object):
    "The foliation cone of a system with its salience witness"
    system: MarkovSystem = field(compare=False, repr=False)
    name: str
    loops: tuple
    homology_cone: object
    foliation_cone: object
    witness: tuple
    facets: tuple

    @property
    def rank(self):
        "Rank of the homology model"
        return self.system.rank


@dataclass(frozen=True)
class RayClassification(object):
    "Verdict of classify_ray()"
    vector: tuple
    representative: tuple
    verdict: str
    certificate: object
    pairings: tuple


def homology_cone(system):
    "Cone spanned by the minimal-loop classes; {0} for product systems."
    classes = [loop.cls for loop in minimal_loops(system)]
    return cone_from_generators(classes, system.rank)


def _facet_records(loops, cone):
    records = []
    for f in cone.proper_facets:
        defining = tuple(k for k, loop in enumerate(loops)
                         if primitive(loop.cls) == f)
        records.append(FacetRecord(f, defining))
    return tuple(records)


def foliation_cone(system):
    """Dualize the homology cone and find a class strictly positive on
    every minimal loop.

    Raises NoTransverseClass, carrying a GordanDual certificate, when no
    such class exists.
    """
    loops = tuple(minimal_loops(system))
    d = system.rank
    hcone = homology_cone(system)
    if system.product_type:
        fcone = whole_space(d)
        witness = zero_vector(d)
    else:
        cert = strictly_positive_functional([l.cls for l in loops], d)
        if isinstance(cert, GordanDual):
            raise NoTransverseClass(
                '%s: no class is positive on every minimal loop' %
                system.name, certificate=cert)
        witness = cert.point
        fcone = dualize(hcone)
    logger.info("%s: %d loops, foliation cone with %d facets",
                system.name, len(loops), len(fcone.proper_facets))
    return FoliationConeReport(system=system, name=system.name, loops=loops,
                               homology_cone=hcone, foliation_cone=fcone,
                               witness=tuple(witness),
                               facets=_facet_records(loops, fcone))


def classify_ray(system, x, report=None):
    """Classify the rational ray through x against the foliation cone.

    x is reduced to its primitive integer representative first.
    """
    x = ray_vector(x, system.rank)
    if report is None:
        report = foliation_cone(system)
    fcone = report.foliation_cone
    pairings = tuple(dot(loop.cls, x) for loop in report.loops)
    if is_zero(x):
        if fcone.is_whole_space:
            return RayClassification(x, primitive(x), DEGENERATE_PRODUCT_RAY,
                                     membership(fcone, x).certificate,
                                     pairings)
        raise ZeroRay('the zero vector spans no ray')
    rep = primitive(x)
    found = membership(fcone, rep)
    verdict = _RAY_VERDICTS.get(found.verdict, OUTSIDE_RAY)
    return RayClassification(x, rep, verdict, found.certificate, pairings)


# disk decompositions

@dataclass(frozen=True)
class DiskBasis(object):
    """Minimal-loop classes expressed in the basis dual to the disks.

    rows[k] is the coordinate vector of loop k; n is the number of disks.
    """
    n: int
    rows: tuple

    @classmethod
    def from_system(cls, system):
        "Take the ambient basis as the disk-dual basis."
        return cls(system.rank,
                   tuple(tuple(l.cls) for l in minimal_loops(system)))


@dataclass(frozen=True)
class DiskViolation(object):
    "A loop with a negative disk coordinate; disk is numbered from 1"
    loop: object
    loop_index: int
    disk: int
    value: int


@dataclass(frozen=True)
class DiskVerdict(object):
    "Verdict of verify_disk_subcone()"
    subcone: bool
    violation: DiskViolation = None


def disk_decomposition_cone(n):
    "The simplicial cone of n disks: the nonnegative orthant of rank n."
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise BadRank('number of disks must be positive, got %r' % (n,))
    return cone_from_generators(
        [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)], n)


def verify_disk_subcone(system, basis):
    """Is the disk orthant a subcone of the foliation cone?

    The disk duals are the ambient basis, so row k must be the class of
    minimal loop k; DegenerateInput otherwise.
    """
    loops = minimal_loops(system)
    if basis.n != system.rank:
        raise RankMismatch('%d disks for a system of rank %d' %
                           (basis.n, system.rank))
    if len(basis.rows) != len(loops):
        raise RankMismatch('%d rows for %d minimal loops' %
                           (len(basis.rows), len(loops)))
    for k, (loop, row) in enumerate(zip(loops, basis.rows)):
        if len(row) != basis.n:
            raise RankMismatch('row %d has length %d, expected %d' %
                               (k, len(row), basis.n))
        if tuple(row) != tuple(loop.cls):
            raise DegenerateInput('row %d is %s, but loop %d has class %s' %
                                  (k, tuple(row), k, tuple(loop.cls)))
        for j, value in enumerate(row):
            if value < 0:
                return DiskVerdict(False,
                                   DiskViolation(loop, k, j + 1, value))
    return DiskVerdict(True, None)


# families of cones

@dataclass(frozen=True)
class FamilyFlag(object):
    "An off-diagonal SharedInterior entry"
    i: int
    j: int
    coincident: bool
    distinct: bool


@dataclass(frozen=True)
class ConeFamilyReport(object):
    "Pairwise interior overlaps of a family of foliation cones"
    reports: tuple
    matrix: tuple
    flags: tuple

    @property
    def violations(self):
        "Flags between different systems whose cones differ"
        return tuple(f for f in self.flags if f.distinct and not f.coincident)

    def check(self):
        "Raise FamilyViolation when distinct cones share interior points."
        bad = self.violations
        if bad:
            raise FamilyViolation(
                'foliation cones of distinct systems overlap: %s' %
                ', '.join('%s/%s' % (self.reports[f.i].name,
                                     self.reports[f.j].name) for f in bad),
                pairs=[(f.i, f.j) for f in bad])
        return self


def family_report(systems):
    """Compare the interiors of the foliation cones of several systems.

    Every entry carries its certificate; off-diagonal SharedInterior
    entries are flagged, and marked coincident when the cones are equal.
    """
    systems = list(systems)
    if systems:
        d = systems[0].rank
        for s in systems:
            if s.rank != d:
                raise RankMismatch('systems of rank %d and %d' % (d, s.rank))
    reports = [foliation_cone(s) for s in systems]
    n = len(reports)
    cells = {}
    for i in range(n):
        for j in range(i, n):
            cells[(i, j)] = interiors_overlap(reports[i].foliation_cone,
                                              reports[j].foliation_cone)
            cells[(j, i)] = cells[(i, j)]
    matrix = tuple(tuple(cells[(i, j)] for j in range(n)) for i in range(n))
    flags = []
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j].shared:
                flags.append(FamilyFlag(
                    i, j,
                    cone_equal(reports[i].foliation_cone,
                               reports[j].foliation_cone),
                    not systems[i].same_data(systems[j])))
    logger.info("family of %d cones, %d flagged pairs", n, len(flags))
    return ConeFamilyReport(tuple(reports), matrix, tuple(flags))


# lattice rays on facets

def facet_lattice_rays(report, facet_index, height=None, primitive=True):
    """Lattice points in the relative interior of one facet, in the box of
    max-norm <= height, ordered by max-norm and then lexicographically.

    With primitive False every nonzero lattice point is returned, not only
    the primitive ones.
    """
    fcone = report.foliation_cone
    facets = fcone.proper_facets
    if isinstance(facet_index, bool) or not isinstance(facet_index, int) \
       or not 0 <= facet_index < len(facets):
        raise BadFacet('facet index %r out of range 0..%d' %
                       (facet_index, len(facets) - 1))
    if height is None:
        height = opts['facet_height']
    if isinstance(height, bool) or not isinstance(height, int) or height < 1:
        raise BadHeight('height must be a positive integer, got %r' %
                        (height,))
    d = fcone.rank
    box = (2 * height + 1) ** d
    if box > opts['enum_cap']:
        raise BudgetExceeded('lattice box of %d points exceeds the cap %d' %
                             (box, opts['enum_cap']), cap=opts['enum_cap'])

    chosen = facets[facet_index]
    others = [f for k, f in enumerate(facets) if k != facet_index]
    found = []
    for x in itertools.product(range(-height, height + 1), repeat=d):
        if dot(chosen, x) != 0 or is_zero(x):
            continue
        if any(dot(e, x) != 0 for e in fcone.equations):
            continue
        if any(dot(f, x) <= 0 for f in others):
            continue
        if primitive and _primitive(x) != x:
            continue
        found.append(x)
    found.sort(key=lambda x: (max_norm(x), x))
    return found


# maximality

@dataclass(frozen=True)
class BoundaryRayInInterior(object):
    """A lattice ray on the boundary of the reference cone inside the
    interior of the candidate cone"""
    ray: tuple
    facet: tuple

    def verify(self, reference, candidate):
        "Re-check both memberships exactly."
        if membership(reference, self.ray).verdict != BOUNDARY:
            raise CertificateError('ray is not on the reference boundary')
        if membership(candidate, self.ray).verdict != INTERIOR:
            raise CertificateError('ray is not in the candidate interior')
        return True


@dataclass(frozen=True)
class MaximalityVerdict(object):
    "Contained, Disjoint, or Contradiction, with a certificate"
    verdict: str
    certificate: object


def _boundary_crossing(reference, inside, outside):
    """Where the segment from inside (interior of both cones) towards
    outside first leaves the reference cone."""
    best = None
    for f in reference.facets:
        b = dot(f, outside)
        if b >= 0:
            continue
        a = dot(f, inside)
        t = Fraction(a) / (a - b)
        if best is None or t < best[0]:
            best = (t, f)
    t, facet = best
    point = tuple((1 - t) * u + t * v for u, v in zip(inside, outside))
    return _primitive(point), facet


def maximality_verdict(reference, candidate):
    """Either the candidate foliation cone lies inside the reference cone,
    or its interior misses the reference cone.

    Anything else is a Contradiction, certified by a lattice ray on the
    reference boundary inside the candidate interior.
    """
    if not isinstance(reference, FoliationConeReport):
        reference = foliation_cone(reference)
    if not isinstance(candidate, FoliationConeReport):
        candidate = foliation_cone(candidate)
    a = reference.foliation_cone
    b = candidate.foliation_cone
    contained = cone_contains(a, b)
    if contained.contained:
        return MaximalityVerdict(CONTAINED, contained)
    overlap = interiors_overlap(a, b)
    if not overlap.shared:
        return MaximalityVerdict(DISJOINT, overlap.certificate)
    vec, facet = contained.violation
    ray, facet = _boundary_crossing(a, overlap.certificate.point, vec)
    cert = BoundaryRayInInterior(ray, facet)
    cert.verify(a, b)
    logger.warning("%s is neither inside nor outside %s",
                   candidate.name, reference.name)
    return MaximalityVerdict(CONTRADICTION, cert)


def subset_cone_contains(system, subset, report=None):
    """The cone dual to the hull of some minimal loops contains the
    foliation cone. subset holds loop indices or MinimalLoop objects."""
    if report is None:
        report = foliation_cone(system)
    classes = []
    for item in subset:
        if isinstance(item, int):
            item = report.loops[item]
        classes.append(item.cls)
    dual = dualize(cone_from_generators(classes, system.rank))
    return cone_contains(dual, report.foliation_cone)
