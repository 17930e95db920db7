"""Verification batteries.  Each suite returns a list of check records

    {"name": str, "status": "pass" | "fail" | "skipped", "witness": ..., "detail": ...}

and draws randomness from generators derived from (seed, check name), so
a suite's output depends only on its arguments.
"""

import zlib
from fractions import Fraction

import numpy as np

from .algebra import exact
from .cohomology import Bicomplex, cohomology_dims, dprime_cohomology_check, hodge_cohomology_dims
from .hochschild import (
    D_SIGN,
    DPRIME_SIGN,
    Cochain,
    check_bound,
    d_prime,
    gerstenhaber_bracket,
    hochschild_d,
    hodge_components,
    hodge_part,
    homotopy_k,
)
from .linalg import EchelonBasis
from .poisson import SN_JACOBI_CONSTANT, is_poisson, jacobiator, poisson_bracket, sn_bracket
from .poly import PolyCoeff, PolyMultivector
from .quantize import ConstantBivector, mc_equiv_check, moyal_star, star_assoc_check
from .shuffle import (
    _basis_image,
    eulerian_idempotents,
    ga_add,
    ga_mul,
    identity_perm,
    sh_basis,
    total_shuffle_element,
    eigenvalue,
)
from .spectral import (
    first_page_first_filtration,
    first_page_second_filtration,
    smooth_collapse_check,
    total_z2_cohomology,
)

__all__ = ["SUITES", "rng_for", "run_suite"]


def rng_for(seed, name):
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def _check(name, ok, witness=None, detail=None):
    rec = {"name": name, "status": "pass" if ok else "fail"}
    if not ok and witness is not None:
        rec["witness"] = witness
    if detail is not None:
        rec["detail"] = detail
    return rec


def _skip(name, reason):
    return {"name": name, "status": "skipped", "detail": reason}


def cochain_sample(A, n, trials, rng, full_basis_upto=2):
    """Every basis cochain when dim A <= ``full_basis_upto``, else ``trials`` random ones."""
    if A.dim <= full_basis_upto:
        return [Cochain.basis(A, n, i) for i in range(A.dim ** (n + 1))]
    return [Cochain.random(A, n, rng) for _ in range(trials)]


# -- bicomplex ----------------------------------------------------------------

def suite_bicomplex(algebras, N, trials, seed, bound):
    out = []
    for name, A in algebras.items():
        bad = {"d^2": None, "d'^2": None, "dd'+d'd": None}
        for n in range(N + 1):
            check_bound(A, n + 2, bound)
            for phi in cochain_sample(A, n, trials, rng_for(seed, f"bicomplex/{name}/{n}")):
                dphi = hochschild_d(phi)
                if bad["d^2"] is None and not hochschild_d(dphi).is_zero():
                    bad["d^2"] = phi
                if n >= 1:
                    dp = d_prime(phi)
                    if n >= 2 and bad["d'^2"] is None and not d_prime(dp).is_zero():
                        bad["d'^2"] = phi
                    if bad["dd'+d'd"] is None and not (hochschild_d(dp) + d_prime(dphi)).is_zero():
                        bad["dd'+d'd"] = phi
                elif bad["dd'+d'd"] is None and not d_prime(dphi).is_zero():
                    bad["dd'+d'd"] = phi
        for ident, w in bad.items():
            out.append(_check(f"{ident} = 0 [{name}]", w is None, w, {"max_arity": N}))
    return out


# -- homotopy -------------------------------------------------------------------

def suite_homotopy(algebras, N, trials, seed, bound):
    out = []
    for name, A in algebras.items():
        bad = None
        for n in range(N + 1):
            check_bound(A, n + 1, bound)
            for phi in cochain_sample(A, n, trials, rng_for(seed, f"homotopy/{name}/{n}")):
                lhs = d_prime(homotopy_k(phi))
                if n:
                    lhs = lhs + homotopy_k(d_prime(phi))
                if lhs != phi:
                    bad = phi
                    break
            if bad is not None:
                break
        out.append(_check(f"kd'+d'k = id [{name}]", bad is None, bad, {"max_arity": N}))
        report = dprime_cohomology_check(A, N, bound)
        out.append(_check(f"d'-cohomology vanishes [{name}]",
                          all(r["exact"] for r in report.values()),
                          {n: r for n, r in report.items() if not r["exact"]}, report))
        page = first_page_second_filtration(A, N, bound)
        nonzero = {k: v for k, v in page.entries.items() if v}
        out.append(_check(f"second-filtration E1 = 0 [{name}]", not nonzero, nonzero,
                          page.to_json()))
    return out


# -- bracket ----------------------------------------------------------------------

def _random_arities(rng, count, total_max, low=0):
    while True:
        ar = [int(x) for x in rng.integers(low, total_max + 1, size=count)]
        if sum(ar) - (count - 1) <= total_max and sum(ar) >= 1 + (count - 2):
            return ar


def suite_bracket(algebras, N, trials, seed, bound):
    out = []
    for name, A in algebras.items():
        m = Cochain.multiplication(A)
        one = Cochain.unit(A)
        out.append(_check(f"[m,1] = 0 [{name}]", gerstenhaber_bracket(m, one).is_zero()))

        rng = rng_for(seed, f"bracket/{name}")
        anti = jac = der = cal_d = cal_dp = None
        for _ in range(trials):
            p, q = _random_arities(rng, 2, N, low=1)
            phi, psi = Cochain.random(A, p, rng), Cochain.random(A, q, rng)
            s = (p - 1) * (q - 1)
            lhs = gerstenhaber_bracket(phi, psi)
            rhs = gerstenhaber_bracket(psi, phi)
            if anti is None and lhs != (rhs * (1 if s % 2 else -1)):
                anti = {"phi": phi, "psi": psi}
            # d'[φ,ψ] = [d'φ,ψ] + (-1)^{p-1}[φ,d'ψ]
            left = d_prime(lhs) if p + q - 1 >= 1 else None
            if left is not None:
                right = gerstenhaber_bracket(d_prime(phi), psi)
                other = gerstenhaber_bracket(phi, d_prime(psi))
                right = right + other if (p - 1) % 2 == 0 else right - other
                if der is None and left != right:
                    der = {"phi": phi, "psi": psi}
            if cal_d is None and hochschild_d(phi) != gerstenhaber_bracket(m, phi) * D_SIGN:
                cal_d = phi
            if cal_dp is None and d_prime(phi) != gerstenhaber_bracket(one, phi) * DPRIME_SIGN:
                cal_dp = phi
        # zero-arity calibration for d
        for i in range(A.dim):
            a = Cochain.basis(A, 0, i)
            if cal_d is None and hochschild_d(a) != gerstenhaber_bracket(m, a) * D_SIGN:
                cal_d = a
        out.append(_check(f"graded antisymmetry [{name}]", anti is None, anti))
        out.append(_check(f"d' derives the bracket [{name}]", der is None, der))
        out.append(_check(f"d = {D_SIGN:+d}[m,.] [{name}]", cal_d is None, cal_d))
        out.append(_check(f"d' = {DPRIME_SIGN:+d}[1,.] [{name}]", cal_dp is None, cal_dp))

        for _ in range(max(1, trials // 4)):
            p, q, r = _random_arities(rng, 3, N, low=1)
            x, y, z = (Cochain.random(A, k, rng) for k in (p, q, r))
            B = gerstenhaber_bracket
            # [x,[y,z]] = [[x,y],z] + (-1)^{(p-1)(q-1)} [y,[x,z]]
            lhs = B(x, B(y, z))
            rhs = B(B(x, y), z)
            t = B(y, B(x, z))
            rhs = rhs + t if ((p - 1) * (q - 1)) % 2 == 0 else rhs - t
            if lhs != rhs:
                jac = {"x": x, "y": y, "z": z}
                break
        out.append(_check(f"graded Jacobi [{name}]", jac is None, jac))
    return out


# -- hodge ------------------------------------------------------------------------

def _ga_equal(x, y):
    return not ga_add(x, y, -1)


def suite_hodge(algebras, N, trials, seed, bound):
    out = []
    # group-algebra identities do not depend on the algebra
    for n in range(1, N + 1):
        es = eulerian_idempotents(n)
        ok = all(_ga_equal(ga_mul(es[i], es[j]), es[i] if i == j else {})
                 for i in range(n) for j in range(n))
        total = {}
        for e in es:
            total = ga_add(total, e)
        ok = ok and _ga_equal(total, {identity_perm(n): 1})
        ann = {identity_perm(n): 1}
        S = total_shuffle_element(n)
        for j in range(1, n + 1):
            ann = ga_mul(ann, ga_add(S, {identity_perm(n): 1}, -eigenvalue(j)))
        out.append(_check(f"Eulerian idempotents, n={n}", ok))
        out.append(_check(f"prod (S - (2^j-2)) = 0, n={n}", not ann))

    for name, A in algebras.items():
        m = A.dim
        bc = Bicomplex(A, bound)
        bad_nest = bad_span = bad_sum = bad_dims = bad_grade = None
        dims_table = {}
        for n in range(N + 1):
            check_bound(A, n + 1, bound)
            levels = [sh_basis(A, n, p) for p in range(n + 2)]
            if len(levels[0]) != m ** n or levels[n + 1]:
                bad_nest = {"n": n}
            for p in range(n + 1):
                eb = EchelonBasis(m ** n)
                eb.extend(levels[p])
                if any(not eb.contains(v) for v in levels[p + 1]):
                    bad_nest = {"n": n, "p": p}
            if n >= 1:
                es = eulerian_idempotents(n)
                for p in range(1, n + 1):
                    img = EchelonBasis(m ** n)
                    for j in range(p, n + 1):
                        for a in range(m ** n):
                            img.add(_basis_image(es[j - 1], m, n, a))
                    sh = EchelonBasis(m ** n)
                    sh.extend(levels[p])
                    same = img.rank == sh.rank and all(img.contains(v) for v in levels[p])
                    if not same:
                        bad_span = {"n": n, "p": p, "image_rank": img.rank, "sh_rank": sh.rank}
            dims = [bc.dim(p, n - p) for p in range(n + 1)]
            dims_table[n] = dims
            if sum(dims) != m ** (n + 1):
                bad_dims = {"n": n, "dims": dims}
            rng = rng_for(seed, f"hodge/{name}/{n}")
            for phi in [Cochain.random(A, n, rng) for _ in range(max(1, trials // 10))]:
                comps = hodge_components(phi)
                total = Cochain.zero(A, n)
                for c in comps.values():
                    total = total + c
                if total != phi:
                    bad_sum = phi
                for (p, q), c in comps.items():
                    if n + 1 <= N:
                        dc = hochschild_d(c)
                        if hodge_part(dc, p) != dc:
                            bad_grade = {"op": "d", "piece": [p, q], "cochain": c}
                    if n >= 1 and p >= 1:
                        dc = d_prime(c)
                        if hodge_part(dc, p - 1) != dc:
                            bad_grade = {"op": "d'", "piece": [p, q], "cochain": c}
        out.append(_check(f"filtration nesting and endpoints [{name}]", bad_nest is None, bad_nest))
        out.append(_check(f"projector images span Sh^p [{name}]", bad_span is None, bad_span))
        out.append(_check(f"sum_p dim C^(p,n-p) = m^(n+1) [{name}]", bad_dims is None, bad_dims,
                          dims_table))
        out.append(_check(f"Hodge components sum to the cochain [{name}]", bad_sum is None, bad_sum))
        out.append(_check(f"d has bidegree (0,1), d' has (-1,0) [{name}]", bad_grade is None,
                          bad_grade))

        h = cohomology_dims(A, N, bound)
        hpq = hodge_cohomology_dims(A, N, bound, bc)
        sums = [sum(v for (p, q), v in hpq.items() if p + q == n) for n in range(N)]
        interior = range(max(0, N - 1))
        out.append(_check(f"sum_(p+q=n) H^(p,q) = H^n [{name}]",
                          all(sums[n] == h[n] for n in interior),
                          {"H": h, "sums": sums}, {"H": h, "Hpq": hpq}))
        try:
            page = first_page_first_filtration(A, N, bound, bc)
            out.append(_check(f"first page: filtration path = projector path [{name}]", True,
                              detail=page.to_json()))
        except ArithmeticError as e:
            out.append(_check(f"first page: filtration path = projector path [{name}]", False,
                              str(e)))

        label = f"smooth collapse [{name}]"
        if N < 3:
            out.append(_skip(label, "window N >= 3 required"))
            continue
        collapse = smooth_collapse_check(A, N, bound)
        total = total_z2_cohomology(A, N, bound, bc)
        detail = {"collapse": collapse, "total": total.to_json()}
        if collapse["etale"]:
            ok = collapse["status"] == "pass" and (total.dims_even, total.dims_odd) == (A.dim, 0)
            out.append(_check(label, ok, detail, detail))
        else:
            out.append(_skip(label, detail))
    return out


# -- mc ----------------------------------------------------------------------------

def suite_mc(algebras, N, trials, seed, bound):
    out = []
    kappas = set()
    for name, A in algebras.items():
        r = mc_equiv_check(A, trials, seed, rng=rng_for(seed, f"mc/{name}"))
        kappas.update(r["kappas"])
        out.append(_check(f"mc_defect = kappa * assoc_defect(m+gamma) [{name}]",
                          r["consistent"], r["failure"], {"kappas": r["kappas"]}))
        out.append(_check(f"gauge-transformed products are MC [{name}]", r["gauge_ok"]))
    out.append(_check("single global kappa", len(kappas) <= 1, sorted(kappas),
                      {"kappas": sorted(kappas)}))
    return out


# -- star ---------------------------------------------------------------------------

def suite_star(order, n_vars, trials, seed, max_poly_degree=4):
    out = []
    Pi = ConstantBivector.canonical()
    x, p = PolyCoeff.var(2, 0), PolyCoeff.var(2, 1)
    comm = moyal_star(x, p, Pi, order) - moyal_star(p, x, Pi, order)
    expected = {((0, 0), 1): 2} if order >= 1 else {}
    out.append(_check("x*p - p*x = 2h", comm.terms == expected, comm))
    sq = moyal_star(x * x, p * p, Pi, order)
    want = {((2, 2), 0): 1, ((1, 1), 1): 4, ((0, 0), 2): 2}
    want = {k: v for k, v in want.items() if k[1] <= order}
    out.append(_check("x^2*p^2 expansion", sq.terms == want, sq))
    cases = [("canonical", Pi)]
    rng = rng_for(seed, "star/pi")
    cases.append((f"random {n_vars}-variable", ConstantBivector.random(n_vars, rng)))
    for label, P in cases:
        r = star_assoc_check(P, order, trials, max_poly_degree, seed,
                             rng=rng_for(seed, f"star/{label}"))
        out.append(_check(f"associativity mod h^{order + 1} [{label} Pi]", r["associative"],
                          r["failure"]))
        out.append(_check(f"h^1 of f*g - g*f = 2{{f,g}} [{label} Pi]", r["first_order_ok"],
                          r["failure"]))
        # the h^1 coefficient itself is the Poisson bracket
        gamma = P.as_multivector()
        bad = None
        for _ in range(min(trials, 20)):
            f, g = (PolyCoeff.random(P.n_vars, rng, max_poly_degree) for _ in range(2))
            if moyal_star(f, g, P, max(order, 1)).coefficient(1) != poisson_bracket(gamma, f, g):
                bad = {"f": f, "g": g}
                break
        out.append(_check(f"h^1 coefficient = {{f,g}} [{label} Pi]", bad is None, bad))
    return out


# -- schouten -------------------------------------------------------------------------

def _random_field(n_vars, degree, rng, max_degree=2):
    if degree == 0:
        return PolyMultivector.function(PolyCoeff.random(n_vars, rng, max_degree))
    return PolyMultivector.random(n_vars, degree, rng, max_degree)


def _proportional(a, b):
    """c with a = c·b for multivectors (None if both zero, False otherwise)."""
    c = None
    for k, f in b.terms.items():
        for e, v in f.terms.items():
            c = exact(Fraction(a.component(k).terms.get(e, 0)) / v)
            break
        if c is not None:
            break
    if c is None:
        return None if a.is_zero() else False
    return c if a == c * b else False


def schouten_suite(bivectors, trials, seed, n_vars=3):
    out = []
    rng = rng_for(seed, "schouten/axioms")
    anti = jac = None
    for _ in range(trials):
        p, q = (int(x) for x in rng.integers(0, 4, size=2))
        if p + q == 0:
            continue
        u, w = _random_field(n_vars, p, rng), _random_field(n_vars, q, rng)
        a, b = sn_bracket(u, w), sn_bracket(w, u)
        sgn = -1 if ((p - 1) * (q - 1)) % 2 == 0 else 1
        if a != sgn * b:
            anti = {"u": u, "w": w}
            break
    for _ in range(max(1, trials // 5)):
        p, q, r = (int(x) for x in rng.integers(0, 3, size=3))
        u, v, w = (_random_field(n_vars, k, rng, 1) for k in (p, q, r))
        lhs = sn_bracket(u, sn_bracket(v, w))
        rhs = sn_bracket(sn_bracket(u, v), w)
        t = sn_bracket(v, sn_bracket(u, w))
        rhs = rhs + t if ((p - 1) * (q - 1)) % 2 == 0 else rhs - t
        if lhs != rhs:
            jac = {"u": u, "v": v, "w": w}
            break
    out.append(_check("Schouten graded antisymmetry", anti is None, anti))
    out.append(_check("Schouten graded Jacobi", jac is None, jac))

    consts, disagree = set(), None
    table = {}
    for label, g in bivectors.items():
        sn, J = sn_bracket(g, g), jacobiator(g)
        c = _proportional(sn, J)
        if c is False or (c is not None and c != SN_JACOBI_CONSTANT):
            disagree = {"bivector": label, "sn": sn, "jacobiator": J}
        if c not in (None, False):
            consts.add(c)
        ok, witness = is_poisson(g)
        table[label] = {"poisson": ok, "witness": witness}
    out.append(_check("[g,g] = c * jacobiator(g) with one constant", disagree is None, disagree,
                      {"constants": sorted(consts), "expected": SN_JACOBI_CONSTANT,
                       "bivectors": table}))
    bad = None
    rng = rng_for(seed, "schouten/poisson")
    for _ in range(min(trials, 20)):
        g = PolyMultivector.random(n_vars, 2, rng, 2)
        f, a, b = (PolyCoeff.random(n_vars, rng, 2) for _ in range(3))
        if poisson_bracket(g, f, a * b) != poisson_bracket(g, f, a) * b + a * poisson_bracket(g, f, b):
            bad = {"gamma": g, "f": f, "g": a, "h": b}
            break
    out.append(_check("{f, gh} = {f,g}h + g{f,h}", bad is None, bad))
    return out


def default_bivectors(seed, count=20, max_vars=4):
    from .corpus import BIVECTORS, bivector

    out = {name: bivector(name) for name in BIVECTORS}
    rng = rng_for(seed, "schouten/random-bivectors")
    for i in range(count):
        n = int(rng.integers(2, max_vars + 1))
        out[f"random-{i}"] = PolyMultivector.random(n, 2, rng, 2)
    return out


SUITES = ("bicomplex", "homotopy", "bracket", "hodge", "mc", "star", "schouten")


def run_suite(suite, algebras=None, N=4, trials=100, seed=0, bound=3000, bivectors=None,
              n_vars=4):
    if suite == "star":
        return suite_star(N, n_vars, trials, seed)
    if suite == "schouten":
        return schouten_suite(bivectors or default_bivectors(seed), trials, seed)
    fn = {
        "bicomplex": suite_bicomplex,
        "homotopy": suite_homotopy,
        "bracket": suite_bracket,
        "hodge": suite_hodge,
        "mc": suite_mc,
    }.get(suite)
    if fn is None:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return fn(algebras, N, trials, seed, bound)
