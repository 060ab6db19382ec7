# test_cone.py - exact cones, duality, membership and Gordan certificates

from fractions import Fraction
import itertools

import numpy as np
import pytest

import folcone
from folcone import fake
from folcone.cone import (BOUNDARY, DISJOINT_INTERIORS, INTERIOR, OUTSIDE,
                          SHARED_INTERIOR, GordanDual, MembershipCombo,
                          PositiveWitness, SeparatingFunctional,
                          cone_contains, cone_equal, cone_from_generators,
                          cone_from_inequalities, dualize,
                          interiors_overlap, membership,
                          strictly_positive_functional, whole_space,
                          zero_cone)
from folcone.misc import dot, negate


def test_gm_homology_cone():
    c = cone_from_generators([(1, 0), (1, 1)], 2)
    assert c.generators == ((1, 0), (1, 1))
    assert c.facets == ((0, 1), (1, -1))
    assert c.lineality == () and c.equations == ()
    assert c.is_pointed and c.is_full_dimensional


def test_generators_are_reduced():
    c = cone_from_generators([(2, 0), (3, 3), (1, 0), (5, 1), (0, 0)], 2)
    assert c == cone_from_generators([(1, 0), (1, 1)], 2)


def test_gm_foliation_cone_from_both_sides():
    dual = dualize(cone_from_generators([(1, 0), (1, 1)], 2))
    assert dual.generators == ((0, 1), (1, -1))
    assert dual.facets == ((1, 0), (1, 1))
    assert dual == cone_from_inequalities([(1, 0), (1, 1)], 2)
    assert cone_equal(dual, cone_from_generators([(0, 1), (1, -1)], 2))


def test_ray_and_half_space():
    ray = cone_from_generators([(1, 0)], 2)
    assert ray.generators == ((1, 0),)
    assert ray.equations == ((0, 1),)
    assert ray.proper_facets == ((1, 0),)
    assert not ray.is_full_dimensional
    half = dualize(ray)
    assert half.facets == ((1, 0),)
    assert half.lineality == ((0, 1),)
    assert half.generators == ((1, 0),)
    assert not half.is_pointed
    assert dualize(half) == ray


def test_zero_and_whole_space():
    z = zero_cone(3)
    w = whole_space(3)
    assert z.is_zero and not z.is_whole_space
    assert w.is_whole_space and not w.is_zero
    assert dualize(z) == w
    assert dualize(w) == z
    assert cone_from_generators([], 3) == z
    assert cone_from_inequalities([], 3) == w
    assert cone_from_generators([(1, 0), (-1, 0), (0, 1), (0, -1)], 2) == \
        whole_space(2)
    assert cone_from_inequalities([(1, 0), (-1, 0), (0, 1), (0, -1)], 2) == \
        zero_cone(2)


def test_line_cone():
    line = cone_from_generators([(1, 1), (-1, -1)], 2)
    assert line.generators == ()
    assert line.lineality == ((1, 1),)
    assert line.equations == ((1, -1),)


def test_rational_input():
    c = cone_from_generators([('1/2', 0), (Fraction(1, 3), '1/3')], 2)
    assert c == cone_from_generators([(1, 0), (1, 1)], 2)


def test_bad_rank(fresh_opts):
    with pytest.raises(folcone.BadRank):
        cone_from_generators([(1, 0, 0)], 2)
    with pytest.raises(folcone.BadRank):
        cone_from_generators([], 0)
    fresh_opts['max_rank'] = 3
    with pytest.raises(folcone.BadRank):
        cone_from_generators([(1, 0, 0, 0)], 4)


def test_double_dual_random():
    for seed in range(200):
        d, vecs = fake.random_vectors(seed, max_rank=5, max_count=8)
        c = cone_from_generators(vecs, d)
        assert dualize(dualize(c)) == c, seed
        # generator and inequality sides describe the same set
        for g in c.generators + c.lineality:
            assert all(dot(f, g) >= 0 for f in c.facets)


def test_double_dual_from_inequalities():
    for seed in range(200):
        d, vecs = fake.random_vectors(seed, max_rank=5, max_count=8)
        c = cone_from_inequalities(vecs, d)
        assert dualize(dualize(c)) == c, seed
        assert c == dualize(cone_from_generators(vecs, d)), seed


def test_representations_agree_on_grid():
    # facet side against generator side: y is in the cone iff adding it
    # to the generators leaves the cone unchanged
    for seed in range(40):
        d, vecs = fake.random_vectors(seed, max_rank=3, max_count=5)
        c = cone_from_generators(vecs, d)
        spanning = list(c.generators) + list(c.lineality) + \
            [negate(v) for v in c.lineality]
        for y in itertools.product(range(-2, 3), repeat=d):
            by_facets = all(dot(f, y) >= 0 for f in c.facets)
            by_generators = cone_from_generators(spanning + [y], d) == c
            assert by_facets == by_generators, (seed, y)


def test_membership_is_scale_invariant():
    for seed in range(30):
        d, vecs = fake.random_vectors(seed, max_rank=3, max_count=6)
        c = cone_from_generators(vecs, d)
        for y in itertools.product(range(-1, 2), repeat=d):
            verdict = membership(c, y).verdict
            for k in (2, Fraction(1, 3), 7):
                assert membership(c, [k * a for a in y]).verdict == verdict


def test_membership_verdicts():
    c = cone_from_inequalities([(1, 0), (1, 1)], 2)
    inside = membership(c, (1, 1))
    assert inside.verdict == INTERIOR
    assert isinstance(inside.certificate, MembershipCombo)
    assert inside.certificate.generator_coeffs == (2, 1)
    assert inside.certificate.verify()

    edge = membership(c, (1, -1))
    assert edge.verdict == BOUNDARY
    assert edge.pairings == (1, 0)
    assert edge.certificate.verify()

    out = membership(c, (-1, 0))
    assert out.verdict == OUTSIDE
    assert isinstance(out.certificate, SeparatingFunctional)
    assert out.certificate.normal == (1, 0)
    assert out.certificate.verify()


def test_membership_with_lineality():
    half = cone_from_inequalities([(1, 0)], 2)
    m = membership(half, (2, -5))
    assert m.verdict == INTERIOR
    assert m.certificate.verify()
    assert membership(half, (0, 3)).verdict == BOUNDARY
    assert membership(whole_space(2), (0, 0)).verdict == INTERIOR


def test_broken_certificate_is_caught():
    bad = MembershipCombo(((1, 0),), (-1,), (), (), (-1, 0))
    with pytest.raises(folcone.CertificateError):
        bad.verify()
    with pytest.raises(folcone.CertificateError):
        GordanDual(((1, 0), (0, 1)), (1, 1)).verify()
    with pytest.raises(folcone.CertificateError):
        PositiveWitness(((1, 0), (0, 1)), (1, 0)).verify()


def test_gordan_pair():
    cert = strictly_positive_functional([(1, 0), (-1, 0)], 2)
    assert isinstance(cert, GordanDual)
    assert cert.coeffs == (1, 1)
    assert cert.variant == 'GordanDual'
    assert cert.verify()


def test_positive_witness():
    cert = strictly_positive_functional([(1, 0), (1, 1)], 2)
    assert isinstance(cert, PositiveWitness)
    assert cert.verify()
    assert all(dot(v, cert.point) > 0 for v in [(1, 0), (1, 1)])


def test_gordan_edge_cases():
    assert strictly_positive_functional([], 3).point == (0, 0, 0)
    with pytest.raises(folcone.ZeroVectorInput):
        strictly_positive_functional([(1, 0), (0, 0)], 2)


# every rational in [-1, 1] with denominator <= 8, scaled by lcm(1..8)
GRID_SCALE = 840
GRID = sorted(set(int(Fraction(a, b) * GRID_SCALE) for b in range(1, 9)
                  for a in range(-b, b + 1)))


def _has_grid_witness(vecs, d):
    "Is some point of the rational grid strictly positive on vecs?"
    points = np.array(list(itertools.product(GRID, repeat=d)),
                      dtype=np.int64)
    values = points @ np.array(vecs, dtype=np.int64).T
    return bool((values > 0).all(axis=1).any())


def test_gordan_dichotomy_random():
    for seed in range(200):
        d, vecs = fake.random_vectors(seed, max_rank=4, max_count=6,
                                      nonzero=True)
        cert = strictly_positive_functional(vecs, d)
        assert isinstance(cert, (PositiveWitness, GordanDual))
        assert cert.verify()
        if d in (2, 3) and _has_grid_witness(vecs, d):
            # a grid point is a witness, so no Gordan certificate exists
            assert isinstance(cert, PositiveWitness), seed


def test_interiors_overlap():
    a = cone_from_inequalities([(1, 0), (1, 1)], 2)
    b = cone_from_inequalities([(-1, 0), (-1, -1)], 2)
    same = interiors_overlap(a, a)
    assert same.verdict == SHARED_INTERIOR and same.shared
    assert same.certificate.verify()
    apart = interiors_overlap(a, b)
    assert apart.verdict == DISJOINT_INTERIORS and not apart.shared
    assert isinstance(apart.certificate, GordanDual)
    assert apart.certificate.verify()


def test_interiors_overlap_errors():
    a = cone_from_inequalities([(1, 0), (1, 1)], 2)
    with pytest.raises(folcone.RankMismatch):
        interiors_overlap(a, whole_space(3))
    with pytest.raises(folcone.DegenerateInput):
        interiors_overlap(a, cone_from_generators([(1, 0)], 2))


def test_cone_contains():
    big = cone_from_inequalities([(1, 0)], 2)
    small = cone_from_inequalities([(1, 0), (1, 1)], 2)
    assert cone_contains(big, small).contained
    found = cone_contains(small, big)
    assert not found.contained
    vec, facet = found.violation
    assert dot(facet, vec) < 0
    assert facet in small.facets
    with pytest.raises(folcone.RankMismatch):
        cone_contains(big, whole_space(3))
