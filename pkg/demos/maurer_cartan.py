"""Deforming a multiplication: the Maurer-Cartan defect versus associativity."""

import numpy as np

from hhw.corpus import algebra
from hhw.hochschild import Cochain
from hhw.quantize import assoc_defect, gauge_transform, mc_defect, mc_equiv_check, random_gauge

A = algebra("etale_3")
m = Cochain.multiplication(A)
rng = np.random.default_rng(2)

gamma = Cochain.random(A, 2, rng)
lhs, rhs = mc_defect(A, gamma), assoc_defect(A, m + gamma)
print("random gamma: defects equal?", lhs == rhs, "| zero?", lhs.is_zero())

g = random_gauge(A, rng)
mu = gauge_transform(A, g)
print("gauge matrix", g)
print("transported product is MC:", mc_defect(A, mu - m).is_zero())

for name in ("dual_numbers", "truncated_xy"):
    r = mc_equiv_check(algebra(name), trials=50, seed=0)
    print(f"{name}: kappas seen {r['kappas']}, gauge ok {r['gauge_ok']}")
