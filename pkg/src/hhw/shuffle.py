"""Signed shuffles, the shuffle filtration of A^{⊗n}, and Eulerian projectors.

Permutations are tuples ``s`` with ``s[i]`` the image of ``i`` (0-based).
A permutation acts on tensors by moving the factor in slot ``i`` to slot
``s[i]``; elements of Q[S_n] are dicts ``{perm: Fraction}``.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import zeros
from .linalg import EchelonBasis

__all__ = [
    "EulerianSplit",
    "Tensor",
    "component_dims",
    "eulerian_split",
    "eulerian_idempotents",
    "eigenvalue",
    "sh_basis",
    "shuffle_element",
    "shuffle_product",
    "signed_shuffle_operator",
]


# -- permutations and the group algebra -------------------------------------

def identity_perm(n):
    return tuple(range(n))


def compose(s, t):
    """``s ∘ t`` (apply t first)."""
    return tuple(s[i] for i in t)


def inverse(s):
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def sign(s):
    seen = [False] * len(s)
    parity = 0
    for i in range(len(s)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = s[j]
                length += 1
            parity += length - 1
    return -1 if parity % 2 else 1


def ga_mul(x, y):
    out = {}
    for s, a in x.items():
        for t, b in y.items():
            st = compose(s, t)
            out[st] = out.get(st, 0) + a * b
    return {k: v for k, v in out.items() if v}


def ga_add(x, y, scale=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + scale * v
    return {k: v for k, v in out.items() if v}


def ga_scale(x, c):
    return {k: c * v for k, v in x.items() if c * v}


@lru_cache(maxsize=None)
def shuffle_element(parts):
    """Signed multi-shuffle of consecutive blocks with sizes ``parts``.

    Each term places block ``k`` (kept in order) on a set of output slots;
    blocks are interleaved in every possible way.  For two blocks this is
    the sum over (r, s)-shuffles of sgn(σ) σ.
    """
    parts = tuple(parts)
    n = sum(parts)
    starts = list(itertools.accumulate((0,) + parts[:-1]))
    out = {}
    # a word assigns each output slot to a block
    for word in set(itertools.permutations(
        [k for k, size in enumerate(parts) for _ in range(size)]
    )):
        s = [0] * n
        seen = [0] * len(parts)
        for slot, k in enumerate(word):
            s[starts[k] + seen[k]] = slot
            seen[k] += 1
        s = tuple(s)
        out[s] = Fraction(sign(s))
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def total_shuffle_element(n):
    """Sum over deconcatenations of the shuffle of the two halves."""
    out = {}
    for r in range(1, n):
        out = ga_add(out, shuffle_element((r, n - r)))
    return out


def eigenvalue(j):
    return 2 ** j - 2


@lru_cache(maxsize=None)
def eulerian_idempotents(n):
    """Group-algebra idempotents ``e^(1..n)`` by Lagrange interpolation on S.

    Raises if ``prod_j (S - λ_j)`` does not vanish, i.e. if the signed
    shuffle operator does not have the expected spectrum.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    one = {identity_perm(n): Fraction(1)}
    S = total_shuffle_element(n)
    lams = [eigenvalue(j) for j in range(1, n + 1)]
    ann = dict(one)
    for lam in lams:
        ann = ga_mul(ann, ga_add(S, one, -lam))
    if ann:
        raise ArithmeticError(
            f"signed shuffle operator on {n} slots is not annihilated by "
            f"prod (S - (2^j - 2)); sign convention broken"
        )
    idems = []
    for j, lj in enumerate(lams):
        e = dict(one)
        for k, lk in enumerate(lams):
            if k != j:
                e = ga_scale(ga_mul(e, ga_add(S, one, -lk)), Fraction(1, lj - lk))
        idems.append(e)
    return tuple(idems)


def act_on_array(g, arr, n):
    """Apply ``g ∈ Q[S_n]`` to the first ``n`` axes of a tensor array."""
    out = zeros(arr.shape)
    rest = tuple(range(n, arr.ndim))
    for s, c in g.items():
        out = out + c * np.transpose(arr, inverse(s) + rest)
    return out


def precompose_array(g, arr, n):
    """Coefficients of ``φ ∘ g`` given the coefficient array of φ.

    ``arr`` has ``n`` argument axes followed by output axes.
    """
    out = zeros(arr.shape)
    rest = tuple(range(n, arr.ndim))
    for s, c in g.items():
        out = out + c * np.transpose(arr, tuple(s) + rest)
    return out


def _basis_image(g, m, n, flat_index):
    """Sparse vector of ``g · e_a`` for the basis tuple with given index."""
    a = np.unravel_index(flat_index, (m,) * n) if n else ()
    out = {}
    for s, c in g.items():
        b = [0] * n
        for i in range(n):
            b[s[i]] = a[i]
        idx = int(np.ravel_multi_index(b, (m,) * n)) if n else 0
        out[idx] = out.get(idx, 0) + c
    return {k: v for k, v in out.items() if v}


def group_operator_matrix(g, m, n):
    """Dense matrix (list of rows) of ``g`` acting on A^{⊗n}."""
    N = m ** n
    M = [[Fraction(0)] * N for _ in range(N)]
    for col in range(N):
        for row, v in _basis_image(g, m, n, col).items():
            M[row][col] += v
    return M


# -- tensors -----------------------------------------------------------------

@dataclass(eq=False)
class Tensor:
    """Element of A^{⊗n} stored as an ``(m,)*n`` object array."""

    algebra: object
    coords: np.ndarray = field(repr=False)

    @property
    def arity(self):
        return self.coords.ndim

    @classmethod
    def pure(cls, algebra, *factors):
        """``a_1 ⊗ ... ⊗ a_n`` from element coordinate vectors."""
        arr = np.array(Fraction(1), dtype=object)
        for a in factors:
            arr = np.multiply.outer(arr, algebra.element(a))
        return cls(algebra, np.asarray(arr, dtype=object))

    @classmethod
    def basis(cls, algebra, *indices):
        return cls.pure(algebra, *(algebra.basis_vector(i) for i in indices))

    def flat(self):
        return list(self.coords.reshape(-1))

    def __add__(self, other):
        return Tensor(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        return Tensor(self.algebra, self.coords - other.coords)

    def __rmul__(self, c):
        return Tensor(self.algebra, c * self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, Tensor)
            and self.algebra is other.algebra
            and np.array_equal(self.coords, other.coords)
        )

    def is_zero(self):
        return not any(x for x in self.coords.flat)


def shuffle_product(u, v):
    """Signed shuffle product of ``u ∈ A^{⊗r}`` and ``v ∈ A^{⊗s}``."""
    if u.algebra is not v.algebra:
        raise ValueError("tensors belong to different algebras")
    r, s = u.arity, v.arity
    if r < 1 or s < 1:
        raise ValueError("shuffle factors must have positive arity")
    outer = np.multiply.outer(u.coords, v.coords)
    return Tensor(u.algebra, act_on_array(shuffle_element((r, s)), outer, r + s))


def signed_shuffle_operator(algebra, n):
    """The operator ``u -> sum_i sh(u_1..u_i, u_{i+1}..u_n)`` on A^{⊗n}.

    Returned as a callable on :class:`Tensor`; its group-algebra element is
    available as ``.element`` and its matrix via ``.matrix()``.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    g = total_shuffle_element(n)

    def op(u):
        if u.arity != n:
            raise ValueError(f"expected a tensor of arity {n}")
        return Tensor(u.algebra, act_on_array(g, u.coords, n))

    op.element = g
    op.matrix = lambda: group_operator_matrix(g, algebra.dim, n)
    return op


# -- filtration and splitting --------------------------------------------------

def compositions(n, p):
    """Ordered tuples of ``p`` positive integers summing to ``n``."""
    if p == 0:
        return [()] if n == 0 else []
    return [
        tuple(b - a for a, b in zip((0,) + cut, cut + (n,)))
        for cut in itertools.combinations(range(1, n), p - 1)
    ]


@lru_cache(maxsize=None)
def _sh_basis_cached(m, n, p):
    N = m ** n
    if p == 0 or (p == 1 and n >= 1):
        return tuple(
            tuple(Fraction(int(i == j)) for i in range(N)) for j in range(N)
        )
    if p > n:
        return ()
    eb = EchelonBasis(N)
    for parts in compositions(n, p):
        g = shuffle_element(parts)
        for a in range(N):
            eb.add(_basis_image(g, m, n, a))
    return tuple(tuple(r) for r in eb.rows(N))


def sh_basis(algebra, n, p):
    """Basis (list of length-m^n vectors) of Sh^p ∩ A^{⊗n}."""
    if p < 0 or n < 0:
        raise ValueError("n and p must be non-negative")
    return [list(v) for v in _sh_basis_cached(algebra.dim, n, p)]


@dataclass(eq=False)
class EulerianSplit:
    """Eulerian projectors ``e^(1..n)`` acting on A^{⊗n}.

    ``elements[j-1]`` is the group-algebra idempotent ``e^(j)``.
    """

    algebra: object
    n: int
    elements: tuple

    def projector(self, j):
        return self.elements[j - 1]

    def apply(self, j, u):
        return Tensor(u.algebra, act_on_array(self.projector(j), u.coords, self.n))

    def matrix(self, j):
        return group_operator_matrix(self.projector(j), self.algebra.dim, self.n)

    def image_basis(self, j):
        """Basis of the image of ``e^(j)`` in A^{⊗n}."""
        m = self.algebra.dim
        eb = EchelonBasis(m ** self.n)
        g = self.projector(j)
        for a in range(m ** self.n):
            eb.add(_basis_image(g, m, self.n, a))
        return eb.rows()


def eulerian_split(algebra, n):
    if n < 1:
        raise ValueError("n >= 1 required")
    return EulerianSplit(algebra, n, eulerian_idempotents(n))


def component_dims(algebra, n):
    """``[dim C^{p, n-p} for p = 0..n]``."""
    m = algebra.dim
    dims = [len(_sh_basis_cached(m, n, p)) for p in range(n + 2)]
    return [m * (dims[p] - dims[p + 1]) for p in range(n + 1)]
