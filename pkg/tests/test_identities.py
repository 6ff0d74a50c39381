from fractions import Fraction

import pytest

from tristrip import InvariantError
from tristrip.identities import (
    ALL_SUITES, SUITES, asymptotic_row, asymptotics_report, cross_validate, run_all, run_asymptotics,
    run_suite,
)
from tristrip.report import IdentityReport, merge
from tristrip.sequences import half_companion, seq_value


def _names(report):
    return {c.identity for c in report.checks}


@pytest.mark.parametrize("suite", ALL_SUITES)
def test_corrected_suites_pass(suite):
    report = run_suite(suite, 60)
    assert report.checks
    assert report.all_passed, report.first_failure


def test_thm4_examples():
    report = run_suite("thm4", 12)
    assert report.all_passed
    (c,) = [c for c in report.checks if c.identity == "(3) A_{n-1} + A_{n-2} = P_n" and c.n == 3]
    assert c.lhs == 5 == c.rhs


def test_thm4_printed_eight_fails_at_three():
    report = run_suite("thm4-as-printed", 12)
    first = report.first_failure
    assert first.identity.startswith("(8)") and first.n == 3
    assert (first.lhs, first.rhs) == (5, 9)
    assert all(c.passed for c in report.checks if not c.identity.startswith("(8)"))


def test_thm5_examples():
    report = run_suite("thm5", 12)
    assert report.all_passed
    assert len({name.split(")")[0] for name in _names(report)}) == 8
    assert half_companion(3) ** 2 == 49 == seq_value("A", 5) == seq_value("B", 5) - 1


def test_required_identities_present():
    assert {"C_{2n} = B_{4n-2}", "C_{2n+1} = A_{4n}", "2P_nH_n = P_{2n}",
            "C_{2n} = 6C_{2n-1} - C_{2n-2} - 4", "C_{2n+1} = 6C_{2n} - C_{2n-1} + 4"} <= _names(run_suite("problem1", 6))
    assert {"D_{2n} = 6D_{2n-1} - D_{2n-2} - 2", "D_{2n+1} = 6D_{2n} - D_{2n-1} + 2"} <= _names(run_suite("problem2", 6))
    assert len(_names(run_suite("consequence", 6))) == 4
    recs = [n for n in _names(run_suite("thm6rec", 6)) if "_{n-1}" in n.split("=", 1)[1] and "(" not in n]
    assert len(recs) == 12


def test_as_printed_rewrites_all_fail():
    report = run_suite("thm6-as-printed", 10)
    for name in _names(report):
        assert any(not c.passed for c in report.checks if c.identity == name), name


def test_suite_argument_checks():
    with pytest.raises(KeyError):
        run_suite("thm9", 10)
    with pytest.raises(ValueError):
        run_suite("thm4", 2)


def test_suite_determinism():
    for suite in SUITES:
        assert run_suite(suite, 30).dumps() == run_suite(suite, 30).dumps()


@pytest.mark.parametrize("family", ["H", "P", "X", "Y", "Z", "A", "B"])
def test_cross_validation(family):
    report = cross_validate(family, 12)
    assert report.all_passed, report.first_failure
    with pytest.raises(ValueError):
        cross_validate(family, 10 ** 4)


def test_cross_validation_stats_through_eight():
    for family, ids in (("H", ("h", "phi", "q")), ("P", ("p", "theta", "r"))):
        names = _names(cross_validate(family, 8))
        for sid in ids:
            assert any(name.startswith(f"{sid}_n") for name in names)


def test_asymptotic_examples():
    r2 = asymptotic_row(2)
    assert r2["thetaOverP"] == Fraction(6, 7) and r2["thetaGap"] == Fraction(2, 35)
    assert r2["phiOverH"] == Fraction(5, 6) == Fraction(4, 5) + Fraction(2 * half_companion(1), 5 * 12)
    big = asymptotic_row(1000)
    for key in ("phiGap", "qGap", "thetaGap", "rGap"):
        assert abs(big[key]) < Fraction(1, 1000)


def test_asymptotics_exact():
    assert run_asymptotics(300).all_passed
    assert len(asymptotics_report([2, 5, 10])) == 3


def test_asymptotics_report_raises_on_violation(monkeypatch):
    import tristrip.identities as ident
    monkeypatch.setattr(ident, "_asymptotic_checks", lambda n: [("fake", 1, 2)])
    with pytest.raises(InvariantError):
        ident.asymptotics_report([3])


def test_run_all_small():
    report = run_all(20, 6)
    assert report.all_passed
    assert report.suite == "all"
    assert any(c.identity.startswith("fixtures: ") for c in report.checks)


def test_report_behaviour():
    r = IdentityReport("s", 1, 2)
    r.add("x", 2, 1, 1)
    r.add("x", 1, 3, 4)
    assert not r.all_passed
    assert r.first_failure.n == 1 and (r.first_failure.lhs, r.first_failure.rhs) == (3, 4)
    assert r.sort().checks[0].n == 1
    assert "FAIL s [1..2] 1/2" in r.summary()
    data = r.to_json()
    assert data["failures"] == [{"identity": "x", "n": 1, "lhs": "3", "rhs": "4"}]
    m = merge("all", [r, IdentityReport("t", 0, 5)])
    assert (m.n_min, m.n_max) == (0, 5) and m.checks[0].identity == "s: x"
