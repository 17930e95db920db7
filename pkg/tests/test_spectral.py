import pytest

from hhw.corpus import ALGEBRAS, ETALE, algebra
from hhw.hochschild import d_prime
from hhw.spectral import (
    first_page_first_filtration,
    first_page_second_filtration,
    filtration_basis,
    smooth_collapse_check,
    total_z2_cohomology,
)


@pytest.mark.parametrize("name", list(ALGEBRAS))
def test_first_page_two_paths_agree(name):
    # raises ArithmeticError on disagreement
    page = first_page_first_filtration(algebra(name), 4)
    assert page.interior_valid_upto == 3
    js = page.to_json()
    assert js["filtration"] == "first" and js["window"] == 4


@pytest.mark.parametrize("name", list(ALGEBRAS))
def test_second_page_zero(name):
    page = first_page_second_filtration(algebra(name), 4)
    assert set(page.entries.values()) == {0}


def test_filtration_dims_dual_numbers():
    A = algebra("dual_numbers")
    # F^p C^2 = cochains vanishing on Sh^{p+1}: F^0 = 0 at n=2, F^1 = C^{1,1}, F^2 = all
    assert [len(filtration_basis(A, 2, p)) for p in range(3)] == [0, 6, 8]


@pytest.mark.parametrize("name", ETALE)
def test_total_etale(name):
    A = algebra(name)
    for N in (4, 5):
        r = total_z2_cohomology(A, N)
        assert (r.dims_even, r.dims_odd) == (A.dim, 0)
        assert r.interior_valid_upto == N - 3


def test_total_is_reported_for_nonsmooth():
    r = total_z2_cohomology(algebra("dual_numbers"), 4)
    assert r.to_json()["filtration"] == "total"
    assert all(e["trusted"] == (e["t"] <= 1) for e in r.entries)


@pytest.mark.parametrize("name", ETALE)
def test_collapse_passes_for_etale(name):
    r = smooth_collapse_check(algebra(name), 4)
    assert r["etale"] and r["status"] == "pass"
    assert all(c["ok"] for c in r["checks"].values())


def test_collapse_reports_dual_numbers():
    r = smooth_collapse_check(algebra("dual_numbers"), 4)
    assert not r["etale"]
    assert r["status"] == "hypothesis not satisfied"
    assert r["checks"]["hodge_vanishing"]["ok"] is False
    w = r["dprime_witness"]
    assert w is not None and not d_prime(w["cocycle"]).is_zero()


def test_window_too_small():
    with pytest.raises(ValueError):
        total_z2_cohomology(algebra("rationals"), 2)
