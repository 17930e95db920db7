"""Finite-dimensional commutative unital algebras over Q.

An algebra is presented by structure constants ``table[i, j, k]`` with
``e_i * e_j = sum_k table[i, j, k] e_k`` and an explicit unit vector.
"""

import itertools
from fractions import Fraction
from math import comb

import numpy as np

from .linalg import rank, to_rational

__all__ = [
    "Algebra",
    "build_quotient_poly_univar",
    "build_truncated_poly",
    "exact",
    "is_etale",
    "multiply",
    "rational_array",
    "validate",
]


def exact(x):
    """Normalise a rational: integral values become ``int``, others ``Fraction``.

    Object arrays of Python ints are an order of magnitude faster than
    arrays of Fractions, and the two mix exactly.
    """
    q = to_rational(x)
    return q.numerator if q.denominator == 1 else q


def rational_array(data, shape=None):
    """Numpy object array of exact rationals (ints where integral)."""
    arr = np.array(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = exact(x)
    return out


def zeros(shape):
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


class Algebra:
    """Commutative unital Q-algebra given by structure constants.

    Instances are treated as immutable; ``table`` and ``unit`` are numpy
    object arrays of ``Fraction`` and should not be written to.
    """

    def __init__(self, table, unit, labels=None, name=None, defining_poly=None):
        table = rational_array(table)
        if table.ndim != 3 or len(set(table.shape)) != 1:
            raise ValueError(f"structure constants must be m x m x m, got {table.shape}")
        m = table.shape[0]
        unit = rational_array(unit)
        if unit.shape != (m,):
            raise ValueError(f"unit must have length {m}, got {unit.shape}")
        self.dim = m
        self.table = table
        self.unit = unit
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(m)]
        if len(self.labels) != m:
            raise ValueError("one label per basis element required")
        self.name = name
        # ascending coefficients of f for Q[t]/(f); None for other constructions
        self.defining_poly = None if defining_poly is None else tuple(defining_poly)

    def __repr__(self):
        label = self.name or "x".join(self.labels)
        return f"Algebra({label!r}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.labels == other.labels
            and np.array_equal(self.unit, other.unit)
            and np.array_equal(self.table, other.table)
        )

    __hash__ = None

    def basis_vector(self, i):
        v = zeros(self.dim)
        v[i] = 1
        return v

    def element(self, coords):
        v = rational_array(coords)
        if v.shape != (self.dim,):
            raise ValueError(f"element of a {self.dim}-dimensional algebra expected")
        return v

    def multiply(self, a, b):
        return multiply(self, a, b)

    def left_mult_matrix(self, a):
        """Matrix of ``x -> a x`` (rows = output coordinate)."""
        return np.einsum("i,ijk->kj", self.element(a), self.table)


def multiply(A, a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    if a.shape != (A.dim,) or b.shape != (A.dim,):
        raise ValueError(
            f"dimension mismatch: algebra has dim {A.dim}, got {a.shape} and {b.shape}"
        )
    return np.einsum("i,j,ijk->k", a, b, A.table)


def validate(A):
    """List of violated algebra axioms; empty when ``A`` is valid."""
    m = A.dim
    c = A.table
    problems = []
    for i in range(m):
        for j in range(i + 1, m):
            if not np.array_equal(c[i, j], c[j, i]):
                problems.append(f"commutativity fails at ({i},{j})")
    # (e_i e_j) e_k versus e_i (e_j e_k)
    left = np.einsum("ijl,lkr->ijkr", c, c)
    right = np.einsum("jkl,ilr->ijkr", c, c)
    for i, j, k in itertools.product(range(m), repeat=3):
        if not np.array_equal(left[i, j, k], right[i, j, k]):
            problems.append(f"associativity fails at ({i},{j},{k})")
    u = A.unit
    for i in range(m):
        e = A.basis_vector(i)
        if not np.array_equal(multiply(A, u, e), e):
            problems.append(f"unit law fails at {i}")
        if not np.array_equal(multiply(A, e, u), e):
            problems.append(f"right unit law fails at {i}")
    return problems


def _poly_label(var, k):
    if k == 0:
        return "1"
    return var if k == 1 else f"{var}^{k}"


def build_quotient_poly_univar(f_coeffs, var="t", name=None):
    """Q[t]/(f) in the basis 1, t, ..., t^(d-1).

    ``f_coeffs`` lists the coefficients of f in ascending degree and must
    end in 1 (monic, degree >= 1).
    """
    f = [to_rational(x) for x in f_coeffs]
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    d = len(f) - 1
    if d < 1:
        raise ValueError("f must have degree >= 1")
    if f[-1] != 1:
        raise ValueError(f"f must be monic, leading coefficient is {f[-1]}")

    # reduce t^k, 0 <= k <= 2d-2, modulo f
    powers = []
    cur = [Fraction(0)] * d
    cur[0] = Fraction(1)
    for _ in range(2 * d - 1):
        powers.append(list(cur))
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [x - top * f[i] for i, x in enumerate(cur)]
    table = zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            table[i, j] = powers[i + j]
    unit = [Fraction(int(i == 0)) for i in range(d)]
    labels = [_poly_label(var, k) for k in range(d)]
    return Algebra(table, unit, labels, name=name, defining_poly=f)


def _monomials(n_vars, degree_bound):
    out = []
    for deg in range(degree_bound):
        for exps in sorted(
            (e for e in itertools.product(range(deg + 1), repeat=n_vars) if sum(e) == deg),
            reverse=True,
        ):
            out.append(exps)
    return out


def build_truncated_poly(n_vars, degree_bound, names=None, name=None):
    """Q[x_1..x_k] modulo all monomials of total degree >= ``degree_bound``."""
    if n_vars < 1 or degree_bound < 1:
        raise ValueError("need n_vars >= 1 and degree_bound >= 1")
    if names is None:
        names = "xyzw"[:n_vars] if n_vars <= 4 else [f"x{i + 1}" for i in range(n_vars)]
    monos = _monomials(n_vars, degree_bound)
    assert len(monos) == comb(n_vars + degree_bound - 1, n_vars)
    index = {e: i for i, e in enumerate(monos)}
    m = len(monos)
    table = zeros((m, m, m))
    for (i, a), (j, b) in itertools.product(enumerate(monos), repeat=2):
        s = tuple(x + y for x, y in zip(a, b))
        if s in index:
            table[i, j, index[s]] = Fraction(1)

    def label(e):
        parts = [
            (v if k == 1 else f"{v}^{k}") for v, k in zip(names, e) if k
        ]
        return "*".join(parts) or "1"

    unit = [Fraction(int(i == 0)) for i in range(m)]
    return Algebra(table, unit, [label(e) for e in monos], name=name)


def _poly_gcd_degree(f, g):
    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    f, g = trim(f), trim(g)
    while g:
        r = list(f)
        while len(r) >= len(g) and r:
            q = r[-1] / g[-1]
            shift = len(r) - len(g)
            for i, x in enumerate(g):
                r[shift + i] -= q * x
            r = trim(r)
        f, g = g, r
    return len(f) - 1


def is_etale(A):
    """True iff the trace form ``Tr(L_a L_b)`` is nondegenerate.

    Over a field of characteristic zero this characterises finite products
    of field extensions (the 0-dimensional smooth case).  For univariate
    quotients the answer is cross-checked against squarefreeness of f.
    """
    mats = [A.left_mult_matrix(A.basis_vector(i)) for i in range(A.dim)]
    gram = [[np.trace(mats[i].dot(mats[j])) for j in range(A.dim)] for i in range(A.dim)]
    etale = rank(gram) == A.dim
    if A.defining_poly is not None:
        f = A.defining_poly
        df = [k * c for k, c in enumerate(f)][1:]
        squarefree = _poly_gcd_degree(f, df) == 0
        if squarefree != etale:
            raise AssertionError("trace-form and discriminant criteria disagree")
    return etale
