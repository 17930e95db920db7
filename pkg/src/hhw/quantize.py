"""Maurer-Cartan versus associativity, and truncated Moyal-type star products."""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .algebra import exact, rational_array
from .hochschild import Cochain, gerstenhaber_bracket, hochschild_d, insert
from .linalg import rref
from .poisson import poisson_bracket
from .poly import PolyCoeff, PolyMultivector

__all__ = [
    "MC_KAPPA",
    "ConstantBivector",
    "FormalPoly",
    "assoc_defect",
    "gauge_transform",
    "mc_defect",
    "mc_equiv_check",
    "moyal_star",
    "random_gauge",
    "star_assoc_check",
]

# dγ + ½[γ,γ] = MC_KAPPA · assoc_defect(m + γ), fixed by calibration
MC_KAPPA = 1


def _arity2(A, mu):
    if mu.arity != 2:
        raise ValueError(f"expected a 2-cochain, got arity {mu.arity}")
    if mu.algebra is not A and mu.algebra != A:
        raise ValueError("cochain belongs to a different algebra")


def assoc_defect(A, mu):
    """``(a, b, c) -> μ(μ(a, b), c) - μ(a, μ(b, c))``."""
    _arity2(A, mu)
    return insert(mu, 0, mu) - insert(mu, 1, mu)


def mc_defect(A, gamma):
    """``dγ + ½ [γ, γ]``."""
    _arity2(A, gamma)
    return hochschild_d(gamma) + gerstenhaber_bracket(gamma, gamma) * exact("1/2")


def _invert(g):
    n = len(g)
    aug = [list(g[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, r, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [[exact(x) for x in row[n:]] for row in R[:n]]


def random_gauge(A, rng):
    """Random integer matrix with unit diagonal, triangular, then conjugated by a
    random permutation so that zero patterns are not preserved."""
    m = A.dim
    g = np.eye(m, dtype=int)
    for i in range(m):
        for j in range(i):
            g[i, j] = int(rng.integers(-2, 3))
    perm = rng.permutation(m)
    g = g[np.ix_(perm, perm)]
    return [[int(x) for x in row] for row in g]


def gauge_transform(A, g):
    """Structure cochain of ``(a, b) -> g⁻¹ m(g a, g b)``; g acts on coordinates."""
    G = rational_array(g)
    Ginv = rational_array(_invert(g))
    coeffs = np.einsum("ai,bj,abc,kc->ijk", G, G, A.table, Ginv)
    return Cochain(A, coeffs)


def mc_equiv_check(A, trials, seed, rng=None):
    """Compare ``mc_defect(γ)`` with ``assoc_defect(m + γ)`` on random γ.

    Returns a report dict: the proportionality constant observed in every
    trial (None when both sides vanish), whether it equals ``MC_KAPPA``
    throughout, and the first failing γ if any.
    """
    rng = rng if rng is not None else np.random.default_rng(seed)
    m = Cochain.multiplication(A)
    kappas = set()
    failure = None
    for t in range(trials):
        gamma = Cochain.random(A, 2, rng)
        lhs = mc_defect(A, gamma)
        rhs = assoc_defect(A, m + gamma)
        kappa = _ratio(lhs, rhs)
        if kappa is not None:
            kappas.add(kappa)
        if kappa is False or (kappa is not None and kappa != MC_KAPPA):
            if failure is None:
                failure = {"trial": t, "gamma": gamma, "ratio": kappa}
    gauge = []
    for _ in range(3):
        mu = gauge_transform(A, random_gauge(A, rng))
        gamma = mu - m
        gauge.append(mc_defect(A, gamma).is_zero() and assoc_defect(A, mu).is_zero())
    return {
        "trials": trials,
        "seed": seed,
        "kappas": sorted(k for k in kappas if k is not False),
        "consistent": failure is None,
        "gauge_ok": all(gauge),
        "failure": failure,
        "passed": failure is None and all(gauge),
    }


def _ratio(a, b):
    """c with a = c·b, None if both vanish, False if not proportional."""
    x, y = a.flat(), b.flat()
    c = None
    for u, v in zip(x, y):
        if v:
            c = Fraction(u) / Fraction(v)
            break
    if c is None:
        return None if not any(x) else False
    c = exact(c)
    return c if all(u == c * v for u, v in zip(x, y)) else False


# -- formal polynomials ----------------------------------------------------------

class FormalPoly:
    """Polynomial in coordinates and h, truncated above ``h^order``.

    ``terms`` maps ``(exponent tuple, h power)`` to a rational.
    """

    __slots__ = ("n_vars", "order", "terms")

    def __init__(self, n_vars, order, terms=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.n_vars = n_vars
        self.order = order
        out = {}
        for (e, k), c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n_vars or k < 0:
                raise ValueError(f"bad term {(e, k)}")
            if k > order:
                continue
            c = exact(c)
            out[(e, k)] = out.get((e, k), 0) + c
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def from_poly(cls, f, order, h_power=0):
        return cls(f.n_vars, order, {(e, h_power): c for e, c in f.terms.items()})

    def coefficient(self, k):
        """The coefficient of h^k as a :class:`PolyCoeff`."""
        return PolyCoeff(self.n_vars, {e: c for (e, j), c in self.terms.items() if j == k})

    def _check(self, other):
        if other.n_vars != self.n_vars:
            raise ValueError(f"n_vars mismatch: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return FormalPoly(self.n_vars, min(self.order, other.order), out)

    def __neg__(self):
        return FormalPoly(self.n_vars, self.order, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        return FormalPoly(self.n_vars, self.order, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, FormalPoly)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return f"FormalPoly(n_vars={self.n_vars}, order={self.order}, terms={len(self.terms)})"


@dataclass(frozen=True)
class ConstantBivector:
    n_vars: int
    matrix: tuple

    def __init__(self, matrix):
        M = tuple(tuple(exact(x) for x in row) for row in matrix)
        n = len(M)
        if any(len(r) != n for r in M):
            raise ValueError("bivector matrix must be square")
        for i in range(n):
            for j in range(n):
                if M[i][j] != -M[j][i]:
                    raise ValueError(f"matrix not antisymmetric at ({i},{j})")
        object.__setattr__(self, "n_vars", n)
        object.__setattr__(self, "matrix", M)

    @classmethod
    def canonical(cls, pairs=1):
        """Darboux form on (x_1..x_k, p_1..p_k) with Π^{x_i p_i} = 1."""
        n = 2 * pairs
        M = [[0] * n for _ in range(n)]
        for i in range(pairs):
            M[i][pairs + i] = 1
            M[pairs + i][i] = -1
        return cls(M)

    @classmethod
    def random(cls, n_vars, rng, values=(-2, -1, 0, 1, 2)):
        M = [[0] * n_vars for _ in range(n_vars)]
        for i, j in itertools.combinations(range(n_vars), 2):
            c = int(rng.choice(values))
            M[i][j], M[j][i] = c, -c
        return cls(M)

    def as_multivector(self):
        terms = {
            (i, j): self.matrix[i][j]
            for i, j in itertools.combinations(range(self.n_vars), 2)
            if self.matrix[i][j]
        }
        return PolyMultivector(self.n_vars, 2, terms)

    def pairs(self):
        return [
            (i, j, c)
            for i, row in enumerate(self.matrix)
            for j, c in enumerate(row)
            if c
        ]


def _bidiff_power(f_terms, g_terms, pairs, k):
    """Apply ``(Σ Π^{ij} ∂_i ⊗ ∂_j)^k`` to ``f ⊗ g`` (monomial pair dicts)."""
    cur = {}
    for (a, x), (b, y) in itertools.product(f_terms.items(), g_terms.items()):
        cur[(a, b)] = cur.get((a, b), 0) + x * y
    for _ in range(k):
        nxt = {}
        for (a, b), c in cur.items():
            for i, j, p in pairs:
                if a[i] and b[j]:
                    a2 = a[:i] + (a[i] - 1,) + a[i + 1:]
                    b2 = b[:j] + (b[j] - 1,) + b[j + 1:]
                    key = (a2, b2)
                    nxt[key] = nxt.get(key, 0) + c * p * a[i] * b[j]
        cur = {key: v for key, v in nxt.items() if v}
        if not cur:
            break
    out = {}
    for (a, b), c in cur.items():
        e = tuple(x + y for x, y in zip(a, b))
        out[e] = out.get(e, 0) + c
    return out


def moyal_star(f, g, Pi, N):
    """``f ★ g = Σ_{k<=N} h^k/k! Π^{i1 j1}…Π^{ik jk} ∂_{i1..ik} f ∂_{j1..jk} g``.

    ``f`` and ``g`` may be :class:`PolyCoeff` (h-free) or :class:`FormalPoly`;
    the product is bilinear over h and truncated above ``h^N``.
    """
    if isinstance(f, PolyCoeff):
        f = FormalPoly.from_poly(f, N)
    if isinstance(g, PolyCoeff):
        g = FormalPoly.from_poly(g, N)
    if not (f.n_vars == g.n_vars == Pi.n_vars):
        raise ValueError(f"n_vars mismatch: {f.n_vars}, {g.n_vars}, {Pi.n_vars}")
    pairs = Pi.pairs()
    out = {}
    for a in range(N + 1):
        fa = {e: c for (e, j), c in f.terms.items() if j == a}
        if not fa:
            continue
        for b in range(N + 1 - a):
            gb = {e: c for (e, j), c in g.terms.items() if j == b}
            if not gb:
                continue
            for k in range(N + 1 - a - b):
                for e, c in _bidiff_power(fa, gb, pairs, k).items():
                    key = (e, a + b + k)
                    out[key] = out.get(key, 0) + Fraction(c, factorial(k))
    return FormalPoly(f.n_vars, N, out)


def star_assoc_check(Pi, N, trials, max_poly_degree, seed, rng=None):
    """Randomised associativity of ★ modulo h^{N+1}, plus the first-order check.

    The first-order check compares the h-coefficient of ``f★g - g★f`` with
    ``2{f, g}``.  Returns a report dict with the first failing triple.
    """
    if N < 0:
        raise ValueError("N >= 0 required")
    rng = rng if rng is not None else np.random.default_rng(seed)
    gamma = Pi.as_multivector()
    n = Pi.n_vars
    failure = None
    first_order_ok = True
    for t in range(trials):
        f, g, h = (PolyCoeff.random(n, rng, max_poly_degree) for _ in range(3))
        left = moyal_star(moyal_star(f, g, Pi, N), h, Pi, N)
        right = moyal_star(f, moyal_star(g, h, Pi, N), Pi, N)
        if left != right and failure is None:
            failure = {"trial": t, "f": f, "g": g, "h": h, "defect": left - right}
        if N >= 1:
            comm = moyal_star(f, g, Pi, N) - moyal_star(g, f, Pi, N)
            if comm.coefficient(1) != 2 * poisson_bracket(gamma, f, g):
                first_order_ok = False
                if failure is None:
                    failure = {"trial": t, "f": f, "g": g, "h": h, "first_order": True}
    return {
        "order": N,
        "trials": trials,
        "seed": seed,
        "associative": failure is None or "defect" not in failure,
        "first_order_ok": first_order_ok,
        "failure": failure,
        "passed": failure is None,
    }
