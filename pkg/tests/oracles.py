"""Slow, independent reference implementations used only by the tests.

Nothing here calls into the hhw differentials or brackets: cochains are
plain dicts ``{argument index tuple: [m output coordinates]}``, products are
computed from the structure table by explicit loops, and ranks come from
sympy.
"""

import itertools
from fractions import Fraction
from math import comb, factorial

import sympy


def table_of(A):
    m = A.dim
    return [[[Fraction(A.table[i, j, k]) for k in range(m)] for j in range(m)] for i in range(m)]


def mult(T, a, b):
    m = len(T)
    out = [Fraction(0)] * m
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                for k in range(m):
                    out[k] += x * y * T[i][j][k]
    return out


def basis_vec(m, i):
    return [Fraction(int(i == j)) for j in range(m)]


def to_dict(phi):
    """Cochain -> {index tuple: list of Fractions}."""
    m = phi.algebra.dim
    n = phi.arity
    out = {}
    for idx in itertools.product(range(m), repeat=n):
        out[idx] = [Fraction(phi.coeffs[idx + (k,)]) for k in range(m)]
    return out


def from_dict(A, n, d):
    """Inverse of :func:`to_dict` as a flat coordinate list."""
    m = A.dim
    flat = []
    for idx in itertools.product(range(m), repeat=n):
        flat.extend(d[idx])
    return flat


def apply_multilinear(phi_d, m, args):
    """φ(v_1, ..., v_n) for arbitrary (non-basis) vectors by expanding."""
    out = [Fraction(0)] * m
    for idx in itertools.product(range(m), repeat=len(args)):
        c = Fraction(1)
        for v, i in zip(args, idx):
            c *= v[i]
            if not c:
                break
        if c:
            for k, x in enumerate(phi_d[idx]):
                out[k] += c * x
    return out


def textbook_coboundary(A, phi_d, n):
    """δφ(a_1..a_{n+1}) = a_1 φ(a_2..) + Σ (-1)^i φ(..a_i a_{i+1}..) + (-1)^{n+1} φ(a_1..a_n) a_{n+1}."""
    T = table_of(A)
    m = A.dim
    out = {}
    for idx in itertools.product(range(m), repeat=n + 1):
        a = [basis_vec(m, i) for i in idx]
        val = mult(T, a[0], apply_multilinear(phi_d, m, a[1:]))
        for i in range(1, n + 1):
            args = a[: i - 1] + [mult(T, a[i - 1], a[i])] + a[i + 1:]
            term = apply_multilinear(phi_d, m, args)
            s = (-1) ** i
            val = [x + s * y for x, y in zip(val, term)]
        last = mult(T, apply_multilinear(phi_d, m, a[:n]), a[n])
        s = (-1) ** (n + 1)
        out[idx] = [x + s * y for x, y in zip(val, last)]
    return out


def textbook_dprime(A, phi_d, n):
    """Σ_j (-1)^{n-1-j} φ with the unit in (0-based) slot j."""
    m = A.dim
    one = [Fraction(A.unit[i]) for i in range(m)]
    out = {}
    for idx in itertools.product(range(m), repeat=n - 1):
        a = [basis_vec(m, i) for i in idx]
        val = [Fraction(0)] * m
        for j in range(n):
            args = a[:j] + [one] + a[j:]
            term = apply_multilinear(phi_d, m, args)
            s = (-1) ** (n - 1 - j)
            val = [x + s * y for x, y in zip(val, term)]
        out[idx] = val
    return out


def textbook_circle(A, phi_d, p, psi_d, q):
    """(φ∘ψ)(a..) = Σ_i (-1)^{(i-1)(q-1)} φ(a_1.., ψ(a_i..a_{i+q-1}), ..)."""
    m = A.dim
    n = p + q - 1
    out = {}
    for idx in itertools.product(range(m), repeat=n):
        a = [basis_vec(m, i) for i in idx]
        val = [Fraction(0)] * m
        for i in range(1, p + 1):
            inner = apply_multilinear(psi_d, m, a[i - 1: i - 1 + q])
            args = a[: i - 1] + [inner] + a[i - 1 + q:]
            term = apply_multilinear(phi_d, m, args)
            s = (-1) ** ((i - 1) * (q - 1))
            val = [x + s * y for x, y in zip(val, term)]
        out[idx] = val
    return out


def sympy_rank(rows):
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction)
                          else sympy.Integer(x) for x in r] for r in rows]).rank()


def hochschild_dims_bruteforce(A, n_max):
    """dim H^n for n < n_max from the textbook coboundary and sympy ranks."""
    m = A.dim
    ranks = []
    for n in range(n_max):
        cols = []
        for b in range(m ** (n + 1)):
            flat = [Fraction(int(j == b)) for j in range(m ** (n + 1))]
            phi = {}
            for t, idx in enumerate(itertools.product(range(m), repeat=n)):
                phi[idx] = flat[t * m:(t + 1) * m]
            cols.append(from_dict(A, n + 1, textbook_coboundary(A, phi, n)))
        ranks.append(sympy_rank([list(r) for r in zip(*cols)]))
    return [m ** (n + 1) - ranks[n] - (ranks[n - 1] if n else 0) for n in range(n_max)]


def univariate_periodic_dims(f_coeffs, n_max):
    """HH^n(A, A) for A = Q[t]/(f) from the 2-periodic resolution.

    Applying Hom(-, A) to ... -> A^e -> A^e -> A^e gives
    A --0--> A --f'(t)--> A --0--> A --f'(t)--> ..., so with r the rank of
    multiplication by f'(t) on A: H^0 = d, H^odd = d - r, H^even>0 = d - r.
    The rank is computed in sympy as a polynomial computation, independent
    of any structure table.
    """
    t = sympy.Symbol("t")
    f = sum(sympy.Rational(c) * t ** i for i, c in enumerate(f_coeffs))
    d = sympy.degree(f, t)
    fp = sympy.diff(f, t)
    cols = []
    for k in range(d):
        r = sympy.rem(sympy.expand(fp * t ** k), f, t)
        cols.append([sympy.Poly(r, t).coeff_monomial(t ** j) for j in range(d)])
    r = sympy.Matrix(cols).T.rank()
    return [d] + [d - r] * (n_max - 1)


# -- multivectors and star products in sympy --------------------------------------

def sym_vars(n):
    return sympy.symbols(f"x0:{n}")


def poly_to_sympy(f, xs):
    return sum((sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction)
                else sympy.Integer(c)) * sympy.prod([x ** e for x, e in zip(xs, exps)])
               for exps, c in f.terms.items()) if f.terms else sympy.Integer(0)


def bivector_matrix(gamma, xs):
    n = gamma.n_vars
    M = sympy.zeros(n, n)
    for (i, j), f in gamma.terms.items():
        g = poly_to_sympy(f, xs)
        M[i, j] += g
        M[j, i] -= g
    return M


def sympy_poisson(M, xs, f, g):
    n = len(xs)
    return sympy.expand(sum(M[i, j] * sympy.diff(f, xs[i]) * sympy.diff(g, xs[j])
                            for i in range(n) for j in range(n)))


def sympy_jacobi_components(gamma):
    """{(i,j,k): {x_i,{x_j,x_k}} + cyclic} for i < j < k."""
    xs = sym_vars(gamma.n_vars)
    M = bivector_matrix(gamma, xs)
    out = {}
    for i, j, k in itertools.combinations(range(gamma.n_vars), 3):
        P = lambda a, b: sympy_poisson(M, xs, a, b)  # noqa: E731
        out[(i, j, k)] = sympy.expand(P(xs[i], P(xs[j], xs[k])) + P(xs[j], P(xs[k], xs[i]))
                                      + P(xs[k], P(xs[i], xs[j])))
    return out, xs


def sympy_moyal_canonical(f, g, order):
    """Moyal-type product on Q[x, p] with Π^{xp} = 1, Π^{px} = -1, in sympy."""
    x, p, h = sympy.symbols("x0 x1 h")
    total = 0
    for k in range(order + 1):
        s = 0
        for a in range(k + 1):
            # choose a factors of -∂_p⊗∂_x and k - a factors of ∂_x⊗∂_p
            s += comb(k, a) * (-1) ** a * (
                sympy.diff(f, x, k - a, p, a) * sympy.diff(g, x, a, p, k - a)
            )
        total += h ** k / factorial(k) * s
    return sympy.expand(total), (x, p, h)
