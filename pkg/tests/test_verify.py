"""The batteries must notice broken conventions, not just pass."""

import functools

from hhw import verify
from hhw.corpus import algebra
from hhw.hochschild import averaged_homotopy_k, standard_hochschild_d
from hhw.poisson import sn_bracket


def names_failing(checks):
    return [c["name"] for c in checks if c["status"] == "fail"]


def one(name):
    return {name: algebra(name)}


def test_suites_pass_on_small_inputs():
    for suite in ("bicomplex", "homotopy", "bracket", "mc"):
        assert not names_failing(verify.run_suite(suite, one("dual_numbers"), 3, 10, 0))


def test_averaged_homotopy_is_caught(monkeypatch):
    monkeypatch.setattr(verify, "homotopy_k", averaged_homotopy_k)
    bad = names_failing(verify.run_suite("homotopy", one("dual_numbers"), 3, 10, 0))
    assert bad == ["kd'+d'k = id [dual_numbers]"]


def test_untwisted_d_is_caught(monkeypatch):
    # the textbook coboundary commutes with d' instead of anticommuting
    monkeypatch.setattr(verify, "hochschild_d", standard_hochschild_d)
    bad = names_failing(verify.run_suite("bicomplex", one("dual_numbers"), 3, 10, 0))
    assert "dd'+d'd = 0 [dual_numbers]" in bad


def test_shifted_schouten_sign_is_caught(monkeypatch):
    monkeypatch.setattr(verify, "sn_bracket", functools.partial(sn_bracket, convention="shifted"))
    bad = names_failing(verify.schouten_suite(verify.default_bivectors(0, count=3), 40, 0))
    assert "Schouten graded antisymmetry" in bad


def test_witness_is_serialisable():
    from hhw.formats import dumps

    checks = verify.run_suite("homotopy", one("rationals"), 3, 5, 0)
    dumps(checks)


def test_rng_for_is_stable():
    a = verify.rng_for(3, "x").integers(0, 10 ** 9)
    b = verify.rng_for(3, "x").integers(0, 10 ** 9)
    c = verify.rng_for(3, "y").integers(0, 10 ** 9)
    assert a == b != c
