# misc.py - exact vector arithmetic and rational linear algebra
"exact vector arithmetic and rational linear algebra"
#
# Vectors are tuples of int or fractions.Fraction. Nothing in here ever
# touches floating point; sympy does the row reduction.

from fractions import Fraction
from functools import reduce
import math
import re

import sympy

RATIONAL_RE = re.compile(r'^-?\d+(/\d+)?$')


def as_fraction(x):
    "Convert int, Fraction, sympy Rational or 'p/q' string to Fraction."
    if isinstance(x, bool):
        raise TypeError('boolean is not a rational: %r' % (x,))
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    if hasattr(x, 'numerator') and hasattr(x, 'denominator'):
        # gmpy mpq and friends
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError('not an exact rational: %r' % (x,))


def parse_rational(s):
    "Parse 'p', '-p' or 'p/q' into a Fraction, rejecting decimals."
    s = s.strip()
    if not RATIONAL_RE.match(s):
        raise ValueError('not a rational: %r' % s)
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError('zero denominator: %r' % s)


def fmt_rational(q):
    "Render a rational as 'p/q', or as a bare integer string when q = 1."
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return '%d/%d' % (q.numerator, q.denominator)


def plain(q):
    "Return an int when the rational is integral, else the Fraction."
    q = Fraction(q)
    if q.denominator == 1:
        return q.numerator
    return q


def zero_vector(d):
    "The zero vector of length d"
    return (0,) * d


def vec_add(u, v):
    "Coordinatewise sum"
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    "Coordinatewise difference"
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    "Scalar multiple"
    return tuple(c * a for a in v)


def vec_sum(vecs, d):
    "Sum of a (possibly empty) list of length d vectors"
    return reduce(vec_add, vecs, zero_vector(d))


def dot(u, v):
    "Exact pairing of two vectors"
    return sum(a * b for a, b in zip(u, v))


def is_zero(v):
    "True if every coordinate vanishes"
    return all(a == 0 for a in v)


def max_norm(v):
    "Largest absolute coordinate"
    return max([abs(a) for a in v] or [0])


def primitive(v):
    """Scale a rational vector by a positive rational to a primitive
    integer vector (coordinate gcd 1). The zero vector stays zero."""
    v = [Fraction(a) for a in v]
    den = reduce(lambda a, b: a * b // math.gcd(a, b),
                 [a.denominator for a in v], 1)
    ints = [int(a * den) for a in v]
    g = reduce(math.gcd, [abs(a) for a in ints], 0)
    if 0 == g:
        return tuple(ints)
    return tuple(a // g for a in ints)


def negate(v):
    "Pointwise negation"
    return tuple(-a for a in v)


def unit_vector(d, i):
    "The i-th standard basis vector of length d"
    return tuple(1 if j == i else 0 for j in range(d))


def _to_sympy(rows, d):
    data = [[sympy.Rational(Fraction(a).numerator, Fraction(a).denominator)
             for a in row] for row in rows]
    if not data:
        return sympy.zeros(0, d)
    return sympy.Matrix(data)


def rank(rows, d):
    "Rank of a list of length d vectors"
    if not rows:
        return 0
    return _to_sympy(rows, d).rank()


def row_basis(rows, d):
    """Canonical basis of the span of rows: the nonzero rows of the reduced
    row echelon form, each scaled to a primitive integer vector."""
    if not rows:
        return []
    reduced, pivots = _to_sympy(rows, d).rref()
    basis = []
    for i in range(len(pivots)):
        basis.append(primitive([as_fraction(a) for a in reduced.row(i)]))
    return basis


def orthogonal_basis(rows, d):
    "Canonical basis of {x : <r, x> = 0 for all rows r}"
    if not rows:
        return [unit_vector(d, i) for i in range(d)]
    null = _to_sympy(rows, d).nullspace()
    vecs = [[as_fraction(a) for a in col] for col in null]
    return row_basis(vecs, d)


def project_out(v, basis):
    """Subtract from v its orthogonal projection onto span(basis); basis
    must be linearly independent."""
    if not basis:
        return tuple(Fraction(a) for a in v)
    d = len(v)
    b = _to_sympy(basis, d)
    col = _to_sympy([v], d).T
    coeffs = (b * b.T).LUsolve(b * col)
    proj = b.T * coeffs
    return tuple(Fraction(a) - as_fraction(p) for a, p in zip(v, proj))


def solve_combination(vecs, target):
    """Exact coefficients c with sum c_i vecs_i = target when vecs are
    linearly independent, else None."""
    d = len(target)
    if not vecs:
        return [] if is_zero(target) else None
    m = _to_sympy(vecs, d).T
    rhs = _to_sympy([target], d).T
    try:
        sol, params = m.gauss_jordan_solve(rhs)
    except ValueError:
        # inconsistent system
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [as_fraction(a) for a in sol]

# End
