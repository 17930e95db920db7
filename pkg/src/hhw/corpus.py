"""The default algebra and bivector corpus."""

from .algebra import Algebra, build_quotient_poly_univar, build_truncated_poly
from .poly import PolyCoeff, PolyMultivector

__all__ = ["ALGEBRAS", "BIVECTORS", "ETALE", "algebra", "bivector", "corpus", "matrix_algebra"]

# name -> constructor; every entry is also shipped as fixtures/<name>.json
ALGEBRAS = {
    "rationals": lambda: build_quotient_poly_univar([0, 1], "t", name="Q"),
    "dual_numbers": lambda: build_quotient_poly_univar([0, 0, 1], "x", name="Q[x]/(x^2)"),
    "truncated_x3": lambda: build_quotient_poly_univar([0, 0, 0, 1], "x", name="Q[x]/(x^3)"),
    "etale_2": lambda: build_quotient_poly_univar([0, -1, 1], "t", name="Q[t]/(t^2-t)"),
    "etale_3": lambda: build_quotient_poly_univar([0, -1, 0, 1], "t", name="Q[t]/(t^3-t)"),
    "truncated_xy": lambda: build_truncated_poly(2, 2, name="Q[x,y]/(deg>=2)"),
}

ETALE = ("rationals", "etale_2", "etale_3")


def algebra(name):
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus algebra {name!r}; known: {sorted(ALGEBRAS)}") from None


def corpus():
    return {name: make() for name, make in ALGEBRAS.items()}


def matrix_algebra():
    """2x2 matrices (e11, e12, e21, e22): associative, unital, not commutative."""
    m = 4
    idx = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    table = [[[0] * m for _ in range(m)] for _ in range(m)]
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                table[i][j][idx[(a, d)]] = 1
    return Algebra(table, [1, 0, 0, 1], ["e11", "e12", "e21", "e22"], name="M_2(Q)")


def _x(n, i):
    return PolyCoeff.var(n, i)


def bivector(name):
    """Named bivectors: canonical, so3 (linear), mixed (x d_y^d_z + d_z^d_x),
    non_poisson (y d_x^d_y + x d_y^d_z)."""
    if name == "canonical":
        return PolyMultivector(2, 2, {(0, 1): 1})
    if name == "so3":
        n = 3
        return PolyMultivector(n, 2, {(0, 1): _x(n, 2), (1, 2): _x(n, 0), (2, 0): _x(n, 1)})
    if name == "mixed":
        n = 3
        return PolyMultivector(n, 2, {(1, 2): _x(n, 0), (2, 0): 1})
    if name == "non_poisson":
        n = 3
        return PolyMultivector(n, 2, {(0, 1): _x(n, 1), (1, 2): _x(n, 0)})
    raise KeyError(f"unknown bivector {name!r}")


BIVECTORS = ("canonical", "so3", "mixed", "non_poisson")
