import json

import pytest

import scverify


def test_arithmetic():
    assert scverify.legendre(2, 7) == 1
    assert scverify.legendre(3, 7) == -1
    assert scverify.hensel_sqrt(2, 7, 3) == 108


def test_admissible_primes():
    assert scverify.admissible_primes("A", 20) == [7, 17]
    assert "C" in scverify.example_ids()


def test_check_example():
    verdicts = scverify.check_example("C", 13, 2)
    assert verdicts
    assert all(v["admissible"] and v["pass"] for v in verdicts)
    assert verdicts[0]["modulus"] == 169


def test_sweep_and_report():
    summary = scverify.run_sweep(["A", "B"], 50)
    assert summary["ok"]
    assert summary["failed"] == 0
    assert summary["passed"] > 0
    lines = scverify.sweep_report(["C"], 30).splitlines()
    assert json.loads(lines[0])["type"] == "header"
    assert json.loads(lines[-1])["ok"] is True


def test_weight_three_forms():
    assert scverify.ap_form(6, "4/125", 7) == scverify.eta_ap_oracle(7) == -2
    assert scverify.ap_form(6, "4/125", 13) == scverify.ap_form_direct(6, "4/125", 13)
    with pytest.raises(scverify.ScvError):
        scverify.ap_form(6, "4/125", 11)


def test_analytic_suite():
    checks = scverify.analytic_suite(256)
    assert len(checks) >= 21
    assert all(c["pass"] for c in checks)


def test_errors_are_scv_errors():
    with pytest.raises(scverify.ScvError):
        scverify.check_example("Z", 13, 2)
    with pytest.raises(scverify.ScvError):
        scverify.hensel_sqrt(3, 7, 2)
    with pytest.raises(ValueError):
        scverify.analytic_suite(64)
