"""Poisson bivectors, the Schouten bracket and a truncated Moyal product."""

from hhw.corpus import bivector
from hhw.poisson import SN_JACOBI_CONSTANT, is_poisson, jacobiator, sn_bracket
from hhw.poly import PolyCoeff
from hhw.quantize import ConstantBivector, moyal_star, star_assoc_check

for name in ("canonical", "so3", "mixed", "non_poisson"):
    g = bivector(name)
    ok, witness = is_poisson(g)
    print(f"{name:12s} {g}")
    print(f"{'':12s} Poisson: {ok}", "" if ok else f"(triple {witness['triple']}: {witness['value']})")

g = bivector("non_poisson")
print("\n[g, g] =", sn_bracket(g, g))
print("J(g)   =", jacobiator(g))
print("[g, g] == %d J(g):" % SN_JACOBI_CONSTANT, sn_bracket(g, g) == SN_JACOBI_CONSTANT * jacobiator(g))

Pi = ConstantBivector.canonical()
x, p = PolyCoeff.var(2, 0), PolyCoeff.var(2, 1)
xp, px = moyal_star(x, p, Pi, 4), moyal_star(p, x, Pi, 4)
print("\nx*p - p*x terms:", (xp - px).terms)
sq = moyal_star(x * x, p * p, Pi, 4)
for k in range(3):
    print(f"  h^{k} coefficient of x^2 * p^2:", sq.coefficient(k))

r = star_assoc_check(Pi, 4, trials=20, max_poly_degree=4, seed=1)
print("associative mod h^5 on 20 random triples:", r["associative"])
