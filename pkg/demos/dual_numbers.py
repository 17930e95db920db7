"""Walk through Q[x]/(x^2): cochains, both differentials, cohomology and its
Hodge pieces, and what goes wrong with the smooth-collapse checks."""

from hhw.cohomology import Bicomplex, cohomology_dims, hodge_cohomology_dims
from hhw.corpus import algebra
from hhw.hochschild import Cochain, d_prime, hochschild_d, homotopy_k
from hhw.spectral import smooth_collapse_check, total_z2_cohomology

A = algebra("dual_numbers")
print(A, "basis", A.labels)

m = Cochain.multiplication(A)
ident = Cochain.identity(A)
print("d(id) == m:", hochschild_d(ident) == m)

# x d/dx is a derivation, so a 1-cocycle; it is not a coboundary since A is commutative
D = Cochain.from_flat(A, 1, [0, 0, 0, 1])
print("x d/dx is a cocycle:", hochschild_d(D).is_zero())
print("d'(x d/dx) = value at 1 =", list(d_prime(D).coeffs))
print("kd' + d'k on it gives it back:", d_prime(homotopy_k(D)) + homotopy_k(d_prime(D)) == D)

print("\ndim H^n, n = 0..4:", cohomology_dims(A, 5))

bc = Bicomplex(A)
print("piece dims for n = 2 (p = 1, 2):", bc.dim(1, 1), bc.dim(2, 0))
for (p, q), dim in sorted(hodge_cohomology_dims(A, 4, bicomplex=bc).items()):
    print(f"  H^({p},{q}) = {dim}")

total = total_z2_cohomology(A, 5, bicomplex=bc)
print("\ntotal Z/2 window (N=5): even", total.dims_even, "odd", total.dims_odd)
for e in total.entries:
    flag = "" if e["trusted"] else "  (edge of window)"
    print(f"  t={e['t']:+d} depth {e['depth']} dim {e['dim']}{flag}")

r = smooth_collapse_check(A, 4)
print("\nsmooth collapse checks:", r["status"])
for name, c in r["checks"].items():
    print(f"  {name}: {c['ok']}")
w = r["dprime_witness"]
if w:
    print(f"  cocycle of degree {w['degree']} with d' != 0; a coboundary: {w['is_coboundary']}")
