"""Polynomials over Q and polynomial-coefficient multivector fields."""

import itertools

from .algebra import exact

__all__ = ["PolyCoeff", "PolyMultivector", "sort_sign"]


def _clean(terms):
    return {k: v for k, v in terms.items() if v}


class PolyCoeff:
    """Polynomial in ``n_vars`` variables: ``{exponent tuple: rational}``."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars, terms=None):
        self.n_vars = n_vars
        out = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n_vars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {n_vars} variables")
            c = exact(c)
            if c:
                out[e] = out.get(e, 0) + c
        self.terms = _clean(out)

    @classmethod
    def constant(cls, n_vars, c):
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def var(cls, n_vars, i):
        e = [0] * n_vars
        e[i] = 1
        return cls(n_vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def random(cls, n_vars, rng, max_degree, n_terms=3, values=(-2, -1, 1, 2)):
        terms = {}
        for _ in range(n_terms):
            deg = int(rng.integers(0, max_degree + 1))
            cuts = sorted(int(x) for x in rng.integers(0, deg + 1, size=n_vars - 1))
            e = tuple(b - a for a, b in zip([0] + cuts, cuts + [deg]))
            terms[e] = terms.get(e, 0) + int(rng.choice(values))
        return cls(n_vars, terms)

    def _check(self, other):
        if not isinstance(other, PolyCoeff):
            raise TypeError(f"expected PolyCoeff, got {type(other).__name__}")
        if other.n_vars != self.n_vars:
            raise ValueError(f"n_vars mismatch: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return PolyCoeff(self.n_vars, out)

    def __neg__(self):
        return PolyCoeff(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolyMultivector):
            return NotImplemented
        if not isinstance(other, PolyCoeff):
            return PolyCoeff(self.n_vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for (a, x), (b, y) in itertools.product(self.terms.items(), other.terms.items()):
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, 0) + x * y
        return PolyCoeff(self.n_vars, out)

    def __rmul__(self, c):
        return self * c

    def __eq__(self, other):
        return (
            isinstance(other, PolyCoeff)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def deriv(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return PolyCoeff(self.n_vars, out)

    def __call__(self, point):
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * exact(x) ** k
            total += term
        return exact(total)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def sort_sign(dirs):
    """``(sign, sorted tuple)`` for a wedge of coordinate directions; sign 0 on repeats."""
    dirs = list(dirs)
    if len(set(dirs)) != len(dirs):
        return 0, None
    sign = 1
    for i in range(len(dirs)):
        for j in range(len(dirs) - 1 - i):
            if dirs[j] > dirs[j + 1]:
                dirs[j], dirs[j + 1] = dirs[j + 1], dirs[j]
                sign = -sign
    return sign, tuple(dirs)


class PolyMultivector:
    """``Σ f_I ∂_{i1} ∧ … ∧ ∂_{ip}`` with I strictly increasing.

    Degree 0 is a function, stored under the empty direction tuple.
    """

    __slots__ = ("n_vars", "degree", "terms")

    def __init__(self, n_vars, degree, terms=None):
        self.n_vars = n_vars
        self.degree = degree
        out = {}
        for dirs, f in (terms or {}).items():
            dirs = tuple(dirs)
            if len(dirs) != degree:
                raise ValueError(f"direction tuple {dirs} does not have length {degree}")
            if any(not 0 <= i < n_vars for i in dirs):
                raise ValueError(f"direction out of range in {dirs}")
            if not isinstance(f, PolyCoeff):
                f = PolyCoeff.constant(n_vars, f)
            f._check(PolyCoeff(n_vars))
            s, key = sort_sign(dirs)
            if not s:
                continue
            out[key] = out[key] + s * f if key in out else s * f
        self.terms = {k: v for k, v in out.items() if not v.is_zero()}

    @classmethod
    def function(cls, f):
        return cls(f.n_vars, 0, {(): f})

    @classmethod
    def coordinate(cls, n_vars, dirs, f=1):
        return cls(n_vars, len(dirs), {tuple(dirs): f})

    @classmethod
    def zero(cls, n_vars, degree):
        return cls(n_vars, degree)

    @classmethod
    def random(cls, n_vars, degree, rng, max_degree, density=0.7):
        terms = {}
        for dirs in itertools.combinations(range(n_vars), degree):
            if rng.random() < density:
                terms[dirs] = PolyCoeff.random(n_vars, rng, max_degree)
        return cls(n_vars, degree, terms)

    def component(self, dirs):
        """Coefficient of ∂_{dirs} for directions in any order (antisymmetric)."""
        s, key = sort_sign(dirs)
        if not s or key not in self.terms:
            return PolyCoeff(self.n_vars)
        return s * self.terms[key]

    def _check(self, other):
        if other.n_vars != self.n_vars:
            raise ValueError(f"n_vars mismatch: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add multivectors of different degree")
        out = dict(self.terms)
        for k, f in other.terms.items():
            out[k] = out[k] + f if k in out else f
        return PolyMultivector(self.n_vars, self.degree, out)

    def __neg__(self):
        return PolyMultivector(self.n_vars, self.degree, {k: -f for k, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        if isinstance(c, PolyCoeff):
            return PolyMultivector(self.n_vars, self.degree, {k: c * f for k, f in self.terms.items()})
        return PolyMultivector(self.n_vars, self.degree, {k: f * c for k, f in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, PolyMultivector)
            and self.n_vars == other.n_vars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def wedge(self, other):
        self._check(other)
        out = {}
        for (I, f), (J, g) in itertools.product(self.terms.items(), other.terms.items()):
            s, key = sort_sign(I + J)
            if s:
                h = s * (f * g)
                out[key] = out[key] + h if key in out else h
        return PolyMultivector(self.n_vars, self.degree + other.degree, out)

    def __repr__(self):
        if not self.terms:
            return f"PolyMultivector(0, degree={self.degree})"
        parts = [f"({f})" + "".join(f"d{i}" for i in k) for k, f in sorted(self.terms.items())]
        return " + ".join(parts)
