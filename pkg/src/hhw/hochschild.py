"""Hochschild cochains C^n(A, A) with d, d', the Gerstenhaber bracket and k.

A cochain of arity n is stored as an object array of shape ``(m,)*n + (m,)``:
``coeffs[i_1, ..., i_n, k]`` is the e_k-coordinate of φ(e_{i_1}, ..., e_{i_n}).
Flattening that array gives the coordinate vector used for rank computations.
"""

from fractions import Fraction

import numpy as np

from .algebra import exact, rational_array, zeros
from .shuffle import eulerian_idempotents, precompose_array

__all__ = [
    "Cochain",
    "ResourceBoundError",
    "averaged_homotopy_k",
    "bracket_sign",
    "circle_product",
    "d_prime",
    "evaluate",
    "gerstenhaber_bracket",
    "hochschild_d",
    "standard_hochschild_d",
    "hodge_components",
    "homotopy_k",
    "insert",
    "D_SIGN",
    "DPRIME_SIGN",
]


class ResourceBoundError(RuntimeError):
    """A cochain space would exceed the configured ambient dimension."""

    def __init__(self, m, n, bound):
        super().__init__(
            f"C^{n}(A,A) for dim A = {m} has dimension {m ** (n + 1)} > bound {bound}"
        )
        self.m, self.n, self.bound = m, n, bound


def check_bound(algebra, n, bound):
    if bound is not None and algebra.dim ** (n + 1) > bound:
        raise ResourceBoundError(algebra.dim, n, bound)


class Cochain:
    """Multilinear map A^{⊗n} -> A with exact rational coefficients."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        coeffs = np.asarray(coeffs, dtype=object)
        if coeffs.ndim < 1 or any(s != algebra.dim for s in coeffs.shape):
            raise ValueError(
                f"coefficient array of shape {coeffs.shape} does not fit dim {algebra.dim}"
            )
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def arity(self):
        return self.coeffs.ndim - 1

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, algebra, n):
        return cls(algebra, zeros((algebra.dim,) * (n + 1)))

    @classmethod
    def element(cls, algebra, a):
        """An element of A as a 0-cochain."""
        return cls(algebra, algebra.element(a))

    @classmethod
    def unit(cls, algebra):
        return cls(algebra, algebra.unit.copy())

    @classmethod
    def multiplication(cls, algebra):
        return cls(algebra, algebra.table.copy())

    @classmethod
    def identity(cls, algebra):
        m = algebra.dim
        arr = zeros((m, m))
        for i in range(m):
            arr[i, i] = 1
        return cls(algebra, arr)

    @classmethod
    def basis(cls, algebra, n, index):
        """Basis cochain number ``index`` in the flattened coordinates."""
        arr = zeros(algebra.dim ** (n + 1))
        arr[index] = 1
        return cls(algebra, arr.reshape((algebra.dim,) * (n + 1)))

    @classmethod
    def from_flat(cls, algebra, n, values):
        return cls(algebra, rational_array(list(values), (algebra.dim,) * (n + 1)))

    @classmethod
    def random(cls, algebra, n, rng, values=(-2, -1, 0, 1, 2)):
        """Coefficients drawn uniformly from ``values`` (small exact integers)."""
        picks = rng.integers(0, len(values), size=(algebra.dim,) * (n + 1))
        arr = np.empty(picks.shape, dtype=object)
        for idx, k in np.ndenumerate(picks):
            arr[idx] = values[k]
        return cls(algebra, arr)

    # arithmetic -------------------------------------------------------------
    def _check(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("cochains over different algebras")
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check(other)
        return Cochain(self.algebra, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return Cochain(self.algebra, self.coeffs - other.coeffs)

    def __neg__(self):
        return Cochain(self.algebra, -self.coeffs)

    def __rmul__(self, c):
        return Cochain(self.algebra, exact(c) * self.coeffs)

    def __mul__(self, c):
        return self.__rmul__(c)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.arity == other.arity
            and np.array_equal(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def is_zero(self):
        return not any(x for x in self.coeffs.flat)

    def flat(self):
        return list(self.coeffs.reshape(-1))

    def __call__(self, *args):
        return evaluate(self, *args)

    def __repr__(self):
        nz = sum(1 for x in self.coeffs.flat if x)
        return f"Cochain(arity={self.arity}, nonzero={nz})"


def evaluate(phi, *args):
    if len(args) != phi.arity:
        raise ValueError(f"cochain of arity {phi.arity} given {len(args)} arguments")
    out = phi.coeffs
    for a in args:
        a = phi.algebra.element(a)
        out = np.tensordot(a, out, axes=([0], [0]))
    return out


def insert(phi, slot, psi):
    """``φ(a_1, ..., ψ(a_slot, ..., a_{slot+q-1}), ...)`` with 0-based slot."""
    p, q = phi.arity, psi.arity
    if not 0 <= slot < p:
        raise ValueError(f"slot {slot} out of range for arity {p}")
    arr = np.tensordot(psi.coeffs, phi.coeffs, axes=([q], [slot]))
    # axes now: ψ-arguments, φ-arguments before slot, after slot, output
    arr = np.moveaxis(arr, list(range(q)), list(range(slot, slot + q)))
    return Cochain(phi.algebra, arr)


def _fill_unit(phi, slot):
    """φ with the unit substituted in the given 0-based argument slot."""
    arr = np.tensordot(phi.coeffs, phi.algebra.unit, axes=([slot], [0]))
    return Cochain(phi.algebra, arr)


def standard_hochschild_d(phi):
    """The textbook Hochschild coboundary C^n -> C^{n+1}.

    (δφ)(a_1..a_{n+1}) = a_1 φ(a_2..) + Σ_i (-1)^i φ(.., a_i a_{i+1}, ..)
                         + (-1)^{n+1} φ(a_1..a_n) a_{n+1}

    It commutes with :func:`d_prime`; see :func:`hochschild_d` for the
    sign-twisted version that anticommutes with it.
    """
    n = phi.arity
    m = Cochain.multiplication(phi.algebra)
    out = insert(m, 1, phi)
    for i in range(1, n + 1):
        term = insert(phi, i - 1, m)
        out = out - term if i % 2 else out + term
    last = insert(m, 0, phi)
    return out + last if (n + 1) % 2 == 0 else out - last


def hochschild_d(phi):
    """Hochschild differential in bracket form, ``dφ = [m, φ]``.

    Equals ``(-1)^{n+1} δφ`` on C^n with δ the textbook coboundary, so it
    has the same kernels and images, satisfies d(id) = m, and
    anticommutes with d'.
    """
    out = standard_hochschild_d(phi)
    return out if phi.arity % 2 else -out


def d_prime(phi):
    """Insertion of the unit: C^n -> C^{n-1}.

    (d'φ)(a_1..a_{n-1}) = φ(a_1..a_{n-1}, 1) - φ(a_1..a_{n-2}, 1, a_{n-1})
                          + ... + (-1)^{n-1} φ(1, a_1..a_{n-1})
    """
    n = phi.arity
    if n == 0:
        raise ValueError("d' of a 0-cochain lands in C^{-1} = 0")
    out = None
    for slot in range(n):
        term = _fill_unit(phi, slot)
        if (n - 1 - slot) % 2:
            term = -term
        out = term if out is None else out + term
    return out


def bracket_sign(i, q):
    """Sign of inserting a q-cochain into (1-based) slot i."""
    return -1 if ((i - 1) * (q - 1)) % 2 else 1


def circle_product(phi, psi):
    """``φ∘ψ = Σ_i (-1)^{(i-1)(q-1)} φ(.., ψ(a_i, ..), ..)``, arity p+q-1."""
    p, q = phi.arity, psi.arity
    if phi.algebra is not psi.algebra:
        raise ValueError("cochains over different algebras")
    if p + q - 1 < 0:
        raise ValueError("circle product of two 0-cochains lands in C^{-1} = 0")
    if p == 0:
        return Cochain.zero(phi.algebra, q - 1)
    out = None
    for i in range(1, p + 1):
        term = insert(phi, i - 1, psi)
        if bracket_sign(i, q) < 0:
            term = -term
        out = term if out is None else out + term
    return out


def gerstenhaber_bracket(phi, psi):
    """``[φ, ψ] = φ∘ψ - (-1)^{(p-1)(q-1)} ψ∘φ``."""
    p, q = phi.arity, psi.arity
    a = circle_product(phi, psi)
    b = circle_product(psi, phi)
    return a - b if ((p - 1) * (q - 1)) % 2 == 0 else a + b


# hochschild_d = D_SIGN * [m, ·] and d_prime = DPRIME_SIGN * [1, ·] in every arity
D_SIGN = 1
DPRIME_SIGN = -1


def homotopy_k(phi):
    """Contracting homotopy for d': ``(kφ)(a_1..a_{n+1}) = φ(a_1..a_n) a_{n+1}``.

    Satisfies ``k d' + d' k = id`` on every C^n and maps cochains vanishing
    on Sh^r to cochains vanishing on Sh^{r+1}.
    """
    m = Cochain.multiplication(phi.algebra)
    return insert(m, 0, phi)


def averaged_homotopy_k(phi):
    """``(kφ)(a_1..a_{n+1}) = 1/(n+1) Σ_i (-1)^{i-1} a_i φ(a_1..â_i..a_{n+1})``.

    The symmetrised variant of :func:`homotopy_k`.  It preserves the shuffle
    filtration in the same way, but ``k d' + d' k`` is *not* the identity
    for n >= 1 (on C^1 it equals ``φ -> 2 φ(1)·a - φ``).
    """
    A = phi.algebra
    n = phi.arity
    # base[i_a, rest..., k] = a φ(rest)
    base = np.tensordot(A.table, phi.coeffs, axes=([1], [n]))  # (i_a, k, rest...)
    base = np.moveaxis(base, 1, -1)
    out = zeros(base.shape)
    for i in range(n + 1):
        term = np.moveaxis(base, 0, i)
        out = out - term if i % 2 else out + term
    return Cochain(A, out * Fraction(1, n + 1))


def hodge_components(phi):
    """Split φ ∈ C^n as ``{(p, n-p): φ ∘ e^(p)}``; pieces sum to φ.

    Zero pieces are kept so the keys always cover p = 1..n (or (0, 0)).
    """
    n = phi.arity
    if n == 0:
        return {(0, 0): phi}
    out = {}
    for p, e in enumerate(eulerian_idempotents(n), start=1):
        out[(p, n - p)] = Cochain(phi.algebra, precompose_array(e, phi.coeffs, n))
    return out


def hodge_part(phi, p):
    """The single component φ ∘ e^(p) (zero when p is out of range)."""
    n = phi.arity
    if n == 0:
        return phi if p == 0 else Cochain.zero(phi.algebra, 0)
    if not 1 <= p <= n:
        return Cochain.zero(phi.algebra, n)
    e = eulerian_idempotents(n)[p - 1]
    return Cochain(phi.algebra, precompose_array(e, phi.coeffs, n))


def precompose(phi, g):
    """φ ∘ g for a group-algebra element g acting on the arguments."""
    return Cochain(phi.algebra, precompose_array(g, phi.coeffs, phi.arity))


def vanishes_on(phi, vectors):
    """True iff φ kills every tensor in ``vectors`` (flat length-m^n lists)."""
    n = phi.arity
    M = phi.coeffs.reshape(-1, phi.algebra.dim)
    for v in vectors:
        w = np.asarray(v, dtype=object)
        if any(x for x in w.dot(M)):
            return False
    return True


def basis_images(op, algebra, n, bound=None):
    """Flattened images of all basis cochains of C^n under ``op``."""
    check_bound(algebra, n, bound)
    return [op(Cochain.basis(algebra, n, i)).flat() for i in range(algebra.dim ** (n + 1))]
