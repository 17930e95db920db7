"""Hochschild cohomology, its Hodge refinement, and the d'-acyclicity check."""

from fractions import Fraction
from math import lcm

import numpy as np

from .hochschild import (
    Cochain,
    check_bound,
    d_prime,
    hochschild_d,
    insert,
)
from .linalg import EchelonBasis, kernel_basis
from .shuffle import eulerian_idempotents, group_operator_matrix

__all__ = [
    "Bicomplex",
    "cohomology_dims",
    "cohomology_representatives",
    "cocycle_basis",
    "dprime_cohomology_check",
    "hodge_cohomology_dims",
    "skew_multiderivations",
]

DEFAULT_BOUND = 3000


def integral(vec):
    """Scale a rational vector to coprime-free integer entries (same span)."""
    vals = [Fraction(x) for x in vec]
    den = lcm(*(x.denominator for x in vals)) if vals else 1
    return [int(x * den) for x in vals]


def _rank_of(vectors):
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return eb.rank


def operator_rank(op, algebra, n, bound=DEFAULT_BOUND):
    check_bound(algebra, n, bound)
    eb = EchelonBasis()
    for i in range(algebra.dim ** (n + 1)):
        eb.add(op(Cochain.basis(algebra, n, i)).flat())
    return eb.rank


def cohomology_dims(algebra, n_max, bound=DEFAULT_BOUND):
    """``[dim H^n(A, A) for n in range(n_max)]`` by exact ranks of d."""
    if n_max < 1:
        raise ValueError("n_max >= 1 required")
    check_bound(algebra, n_max, bound)
    m = algebra.dim
    ranks = [operator_rank(hochschild_d, algebra, n, bound) for n in range(n_max)]
    dims = []
    for n in range(n_max):
        into = ranks[n - 1] if n else 0
        dims.append(m ** (n + 1) - ranks[n] - into)
    return dims


def _operator_matrix(op, algebra, n):
    """Rows = output coordinates, columns = basis cochains of C^n."""
    cols = [op(Cochain.basis(algebra, n, i)).flat() for i in range(algebra.dim ** (n + 1))]
    if not cols:
        return []
    return [list(r) for r in zip(*cols)]


def cocycle_basis(algebra, n, bound=DEFAULT_BOUND):
    """Basis of ker(d: C^n -> C^{n+1}) as cochains."""
    check_bound(algebra, n + 1, bound)
    M = _operator_matrix(hochschild_d, algebra, n)
    return [
        Cochain.from_flat(algebra, n, v)
        for v in kernel_basis(M, algebra.dim ** (n + 1))
    ]


def skew_multiderivations(algebra, p):
    """Basis of alternating p-cochains that are derivations in each slot."""
    if p < 1:
        raise ValueError("p >= 1 required")
    A = algebra
    m = Cochain.multiplication(A)

    def defect(phi):
        parts = []
        # Leibniz in the first slot; alternation transports it to the others
        leib = insert(phi, 0, m) - insert(m, 1, phi)
        leib = leib - Cochain(A, np.swapaxes(insert(m, 1, phi).coeffs, 0, 1))
        parts.extend(leib.flat())
        for i in range(p - 1):
            parts.extend((phi.coeffs + np.swapaxes(phi.coeffs, i, i + 1)).reshape(-1))
        return parts

    cols = [defect(Cochain.basis(A, p, i)) for i in range(A.dim ** (p + 1))]
    M = [list(r) for r in zip(*cols)]
    return [Cochain.from_flat(A, p, integral(v)) for v in kernel_basis(M, A.dim ** (p + 1))]


def cohomology_representatives(algebra, n, bound=DEFAULT_BOUND):
    """Cocycles whose classes form a basis of H^n(A, A).

    Skew multiderivations are preferred as representatives; the remaining
    classes are filled from a kernel basis of d in a fixed order.
    """
    check_bound(algebra, n + 1, bound)
    eb = EchelonBasis()
    if n >= 1:
        for i in range(algebra.dim ** n):
            eb.add(hochschild_d(Cochain.basis(algebra, n - 1, i)).flat())
    reps = []
    candidates = skew_multiderivations(algebra, n) if n >= 1 else []
    candidates += cocycle_basis(algebra, n, bound)
    for phi in candidates:
        if hochschild_d(phi).is_zero() and eb.add(phi.flat()):
            reps.append(phi)
    return reps


def dprime_cohomology_check(algebra, n_max, bound=DEFAULT_BOUND):
    """Degree-wise exactness of d'.

    Returns ``{n: {"kernel": .., "image": .., "exact": bool}}`` for
    ``n < n_max`` where ``image`` is the rank of d': C^{n+1} -> C^n.
    """
    check_bound(algebra, n_max, bound)
    m = algebra.dim
    ranks = {0: 0}
    for n in range(1, n_max + 1):
        ranks[n] = operator_rank(d_prime, algebra, n, bound)
    out = {}
    for n in range(n_max):
        kernel = m ** (n + 1) - ranks[n]
        image = ranks[n + 1]
        out[n] = {"kernel": kernel, "image": image, "exact": kernel == image}
    return out


class Bicomplex:
    """Bases of the Hodge pieces C^{p,q} and the ranks of d, d' on them.

    Everything is computed lazily and cached per instance; use one
    instance per algebra when several reports need the same pieces.
    """

    def __init__(self, algebra, bound=DEFAULT_BOUND):
        self.algebra = algebra
        self.bound = bound
        self._pieces = {}
        self._ranks = {}

    def piece(self, p, q):
        """Integral basis cochains of C^{p,q}, the image of φ -> φ∘e^(p)."""
        if p < 0 or q < 0:
            return []
        key = (p, q)
        if key not in self._pieces:
            n = p + q
            check_bound(self.algebra, n, self.bound)
            if n == 0:
                basis = [Cochain.basis(self.algebra, 0, i) for i in range(self.algebra.dim)]
            elif p == 0:
                basis = []
            else:
                basis = self._projector_rows(n, p)
            self._pieces[key] = basis
        return self._pieces[key]

    def _projector_rows(self, n, p):
        # (φ∘e)(e_I) = Σ_J E[J, I] φ(e_J): the coefficient rows of the pieces
        # are the rows of the projector matrix, one copy per output slot
        m = self.algebra.dim
        E = group_operator_matrix(eulerian_idempotents(n)[p - 1], m, n)
        eb = EchelonBasis(m ** n)
        eb.extend(E)
        basis = []
        for w in eb.rows():
            w = integral(w)
            for k in range(m):
                v = [0] * (m ** (n + 1))
                for idx, x in enumerate(w):
                    if x:
                        v[idx * m + k] = x
                basis.append(Cochain.from_flat(self.algebra, n, v))
        return basis

    def dim(self, p, q):
        return len(self.piece(p, q))

    def rank(self, which, p, q):
        """Rank of ``which`` ("d" or "d'") restricted to C^{p,q}."""
        key = (which, p, q)
        if key not in self._ranks:
            if which == "d":
                check_bound(self.algebra, p + q + 1, self.bound)
                op = hochschild_d
            elif which == "d'":
                op = d_prime
            else:
                raise ValueError(which)
            basis = self.piece(p, q)
            if which == "d'" and p + q == 0:
                r = 0
            else:
                r = _rank_of(op(phi).flat() for phi in basis)
            self._ranks[key] = r
        return self._ranks[key]

    def row_cohomology(self, p, q):
        """dim H^q(C^{p,•}, d)."""
        return self.dim(p, q) - self.rank("d", p, q) - (self.rank("d", p, q - 1) if q else 0)

    def column_cohomology(self, p, q):
        """dim of the d'-cohomology at C^{p,q}."""
        into = self.rank("d'", p + 1, q)
        return self.dim(p, q) - self.rank("d'", p, q) - into


def hodge_cohomology_dims(algebra, n_max, bound=DEFAULT_BOUND, bicomplex=None):
    """``{(p, q): dim H^{p,q}(A, A)}`` for p + q < n_max."""
    if n_max < 1:
        raise ValueError("n_max >= 1 required")
    bc = bicomplex or Bicomplex(algebra, bound)
    check_bound(algebra, n_max, bound)
    out = {}
    for n in range(n_max):
        for p in range(0, n + 1):
            if n > 0 and p == 0:
                continue
            out[(p, n - p)] = bc.row_cohomology(p, n - p)
    return out
