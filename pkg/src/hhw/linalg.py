"""Exact linear algebra over the rationals.

Matrices are given as sequences of rows; vectors as sequences (or numpy
object arrays) of anything :func:`to_rational` accepts.  Elimination runs on
sparse ``{column: gmpy2.mpq}`` rows, public results are ``Fraction``.
"""

from fractions import Fraction

import gmpy2

__all__ = [
    "EchelonBasis",
    "intersection_basis",
    "kernel_basis",
    "rank",
    "rref",
    "subspace_dims",
    "to_rational",
]

_ZERO = gmpy2.mpq(0)


def to_rational(x):
    """Coerce ``x`` (int, Fraction, mpq, or a ``"p/q"`` string) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if type(x).__name__ == "mpq":
        return Fraction(int(x.numerator), int(x.denominator))
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _mpq(x):
    if isinstance(x, Fraction):
        return gmpy2.mpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return gmpy2.mpq(x)
    return gmpy2.mpq(to_rational(x).numerator, to_rational(x).denominator)


def _sparse(vec):
    """Dense sequence or ``{index: value}`` mapping -> sparse mpq dict."""
    items = vec.items() if isinstance(vec, dict) else enumerate(vec)
    out = {}
    for j, x in items:
        if x:
            out[j] = _mpq(x)
    return out


class EchelonBasis:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    Rows are kept fully reduced (pivot entry 1, zero in every other pivot
    column), so reducing a vector is a single pass over its pivot columns.
    Pivots are chosen as the leftmost nonzero entry in insertion order,
    which makes every result deterministic.
    """

    def __init__(self, ambient=None):
        self.ambient = ambient
        self._rows = {}  # pivot column -> row dict

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def _reduce(self, v):
        for c in sorted(c for c in v if c in self._rows):
            a = v.get(c)
            if not a:
                continue
            for j, b in self._rows[c].items():
                s = v.get(j, _ZERO) - a * b
                if s:
                    v[j] = s
                else:
                    v.pop(j, None)
        return v

    def reduce(self, vec):
        """Residual of ``vec`` modulo the span, as a sparse Fraction dict."""
        v = self._reduce(_sparse(vec))
        return {j: to_rational(x) for j, x in sorted(v.items())}

    def contains(self, vec):
        return not self._reduce(_sparse(vec))

    def add(self, vec):
        """Insert ``vec``; return True iff it enlarged the span."""
        v = self._reduce(_sparse(vec))
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {j: x * inv for j, x in v.items()}
        for row in self._rows.values():
            a = row.get(p)
            if a:
                for j, b in v.items():
                    s = row.get(j, _ZERO) - a * b
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
        self._rows[p] = v
        return True

    def extend(self, vectors):
        """Insert many vectors; return the indices of those that were new."""
        return [i for i, v in enumerate(vectors) if self.add(v)]

    def rows(self, ncols=None):
        """Dense Fraction rows ordered by pivot column."""
        ncols = self.ambient if ncols is None else ncols
        if ncols is None:
            ncols = 1 + max((max(r) for r in self._rows.values()), default=-1)
        out = []
        for p in sorted(self._rows):
            row = [Fraction(0)] * ncols
            for j, x in self._rows[p].items():
                row[j] = to_rational(x)
            out.append(row)
        return out

    def sparse_rows(self):
        return [
            {j: to_rational(x) for j, x in sorted(self._rows[p].items())}
            for p in sorted(self._rows)
        ]


def _shape(M):
    rows = [list(r) for r in M]
    ncols = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    return rows, ncols


def rref(M):
    """Reduced row-echelon form.

    Returns ``(R, rank, pivot_cols)``; ``R`` has the shape of ``M`` with the
    zero rows at the bottom.
    """
    rows, ncols = _shape(M)
    eb = EchelonBasis(ncols)
    eb.extend(rows)
    R = eb.rows(ncols)
    R += [[Fraction(0)] * ncols for _ in range(len(rows) - eb.rank)]
    return R, eb.rank, eb.pivots


def rank(M):
    eb = EchelonBasis()
    for r in M:
        eb.add(r)
    return eb.rank


def kernel_basis(M, ncols=None):
    """Basis of ``{x : M x = 0}`` as a list of dense column vectors."""
    rows = [list(r) for r in M]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(rows[0])
    eb = EchelonBasis(ncols)
    eb.extend(rows)
    reduced = {p: r for p, r in zip(eb.pivots, eb.sparse_rows())}
    free = [j for j in range(ncols) if j not in reduced]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for p, r in reduced.items():
            if f in r:
                x[p] = -r[f]
        basis.append(x)
    return basis


def _independent(vectors):
    eb = EchelonBasis()
    return [vectors[i] for i in eb.extend(vectors)]


def intersection_basis(span_A, span_B):
    """Basis of span(A) ∩ span(B), read off from the kernel of ``[A | B]``."""
    A = _independent([list(v) for v in span_A])
    B = _independent([list(v) for v in span_B])
    if not A or not B:
        return []
    n = len(A[0])
    # rows of [A | B] are ambient coordinates; unknowns are the combination
    stacked = [[v[i] for v in A] + [v[i] for v in B] for i in range(n)]
    out = []
    for x in kernel_basis(stacked, len(A) + len(B)):
        w = [sum((x[k] * A[k][i] for k in range(len(A))), Fraction(0)) for i in range(n)]
        out.append(w)
    return out


def subspace_dims(span_A, span_B, ambient=None):
    """``(dim A, dim B, dim A∩B, dim A+B)`` for spans given by column lists."""
    span_A = [list(v) for v in span_A]
    span_B = [list(v) for v in span_B]
    lengths = {len(v) for v in span_A + span_B}
    if ambient is not None:
        lengths.add(ambient)
    if len(lengths) > 1:
        raise ValueError(f"ambient dimension mismatch: {sorted(lengths)}")
    return (
        rank(span_A),
        rank(span_B),
        len(intersection_basis(span_A, span_B)),
        rank(span_A + span_B),
    )
