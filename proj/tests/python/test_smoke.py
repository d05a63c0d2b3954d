import pytest

import gsp4local as g


def test_cosets():
    r = g.verify_cosets(3)
    assert r.ok()
    assert r.params["representatives"] == "160"
    assert r.params["pairs"] == "12720"


def test_exact_values():
    assert g.volume(1, 0, 5, 3) == "27/40"
    assert g.volume(0, 1, 8, 3) == "2187/40"
    assert g.bessel_value(3, 1, 0, 0, 5) == "1"
    texp, coeff, half = g.whittaker_value(3, 3, 1, 0, 5, 1, 1)
    assert (texp, half) == (1, 0)
    assert "A" in coeff and "B" in coeff


def test_sugano():
    c = g.sugano_coefficients(3, 2)
    assert c[0] == "1"
    assert "b1" in c[1] and "b4" in c[1]


def test_zeta_theorems():
    for case in (1, 2, 3):
        assert g.verify_zeta(case, 3, ap=1, wp=-1, order=15).ok()
    assert g.verify_cancellation(2, 3, lmax=4, mmax=4).ok()


def test_report_tree():
    r = g.verify_zeta(2, 3, order=12)
    assert r.check == "zeta-theorem"
    names = [c.check for c in r.children]
    assert "closed-form-identity" in names and "series-agreement" in names
    assert '"status": "pass"' in r.to_json()


def test_suite_and_table():
    r = g.run_verify("volumes", ps=[3], ds=[4], lmax=2, mmax=2)
    assert r.ok()
    t = g.render_table("whittaker", p=3, case=3, lmax=1, mmax=1)
    assert "t5" in t and "t1" not in t


def test_config_error():
    with pytest.raises(ValueError):
        g.run_verify("zeta", ps=[4])
    with pytest.raises(ValueError):
        g.whittaker_value(2, 3, 0, 0, 3, 1, 1)  # t3 absent at m = 0
