from __future__ import annotations

from fractions import Fraction

import pytest

from fibalg.engine.errors import InvalidWindow, PreconditionError, UnknownSuite
from fibalg.engine.chain import violation
from fibalg.report import EXIT_OK, EXIT_UNEXPECTED, from_exception, render_verdict_text, verdict_exit_code
from fibalg.verify import VerifyParams, is_unexpected, run_suite, suite_names

VERDICT_KEYS = {"suite", "params", "checked", "violations", "elapsed", "expected", "unexpected"}


def _stable(verdict):
    return {k: v for k, v in verdict.items() if k != "elapsed"}


def test_suite_catalogue():
    names = suite_names()
    for name in ("jacobi", "jordan-identity", "quasiadd", "sum-rule", "abelian", "ideal", "no-identity", "proper-ideal", "truncated-axioms"):
        assert name in names
    with pytest.raises(UnknownSuite):
        run_suite("associativity")


def test_clean_suite_verdict():
    verdict = run_suite("quasiadd", VerifyParams(range=4))
    assert VERDICT_KEYS <= set(verdict)
    assert verdict["checked"] == 9**3
    assert verdict["violations"] == []
    assert verdict["expected"] == "none"
    assert verdict["unexpected"] is False
    assert verdict["params"]["lo"] == -4
    assert verdict["params"]["alpha"] == "1"


def test_verdicts_are_deterministic_apart_from_timing():
    p = VerifyParams(alpha=Fraction(0), range=6)
    assert _stable(run_suite("jacobi", p)) == _stable(run_suite("jacobi", p))


def test_falsification_run_is_expected_to_fail():
    verdict = run_suite("jacobi", VerifyParams(alpha="1/2", range=8, falsify=True))
    assert verdict["violations"]
    assert verdict["expected"] == "some"
    assert verdict["unexpected"] is False
    assert verdict["report"] == {"valid": False}
    assert verdict["params"]["alpha"] == "1/2"


def test_invalid_window_needs_falsify():
    with pytest.raises(InvalidWindow):
        run_suite("jacobi", VerifyParams(alpha="1/2", range=3))


def test_virasoro_jacobi_is_report_only():
    verdict = run_suite("jacobi", VerifyParams(alpha=Fraction(0), range=4, algebra="virasoro"))
    assert verdict["expected"] == "report"
    assert verdict["unexpected"] is False


def test_abelian_expectation_follows_threshold():
    low = run_suite("abelian", VerifyParams(range=8, c=Fraction(1, 10)))
    assert low["expected"] == "some"
    assert low["violations"]
    assert not low["unexpected"]
    high = run_suite("abelian", VerifyParams(range=8, c="3/5"))
    assert high["expected"] == "none"
    assert high["violations"] == []
    assert run_suite("ideal", VerifyParams(range=6))["violations"] == []


def test_jordan_suites():
    for name in ("jordan-identity", "sum-rule", "commutativity", "idempotence", "monotone"):
        verdict = run_suite(name, VerifyParams(range=5))
        assert verdict["unexpected"] is False, name
    no_identity = run_suite("no-identity", VerifyParams())
    assert no_identity["report"] == {"identity_absent": True}
    assert run_suite("proper-ideal", VerifyParams())["report"] == {"proper": True}
    truncated = run_suite("truncated-axioms", VerifyParams(n_max=4, mode="drop-term"))
    assert truncated["expected"] == "report"
    assert truncated["report"]["commutative"] is True
    assert truncated["checked"] == 81


def test_chain_suites():
    assert run_suite("palindrome", VerifyParams(alpha="1/2", range=10))["violations"] == []
    shifted = run_suite("palindrome", VerifyParams(range=10))
    assert shifted["expected"] == "report"
    assert shifted["violations"]
    gap = run_suite("gap-word", VerifyParams())
    assert gap["violations"] == []
    assert gap["report"]["factor_found"] is True
    for name in ("closure", "qadd-index", "chain-equivalence", "chi-factorization", "reflection"):
        assert run_suite(name, VerifyParams(range=6))["violations"] == [], name


def test_parameter_validation():
    with pytest.raises(PreconditionError):
        VerifyParams(range=-1)
    with pytest.raises(PreconditionError):
        VerifyParams(lo=3, hi=2).bounds
    with pytest.raises(PreconditionError):
        run_suite("no-identity", VerifyParams(n_max=4, m_max=4))


def test_unexpected_classification():
    fail = [violation("jordan_identity", "gap")]
    assert is_unexpected("none", fail, "jordan-identity")
    assert not is_unexpected("some", fail, "jacobi")
    assert not is_unexpected("report", fail, "truncated-axioms")
    assert is_unexpected("report", [violation("commutativity", "asym")], "truncated-axioms")
    assert verdict_exit_code([{"unexpected": False}, {"unexpected": True}]) == EXIT_UNEXPECTED
    assert verdict_exit_code([]) == EXIT_OK


def test_reports():
    verdict = run_suite("quasiadd", VerifyParams(range=2))
    text = render_verdict_text(verdict)
    assert "suite: quasiadd" in text
    assert "status: ok" in text
    doc = from_exception(InvalidWindow("bad window", {"chain": "F_{1/2,0}"}))
    assert doc["error"]["code"] == "invalid_window"
    assert from_exception(FileNotFoundError(2, "missing", "x.json"))["error"]["details"] == {"filename": "x.json"}
    assert from_exception(RuntimeError("boom"))["error"]["code"] == "internal"
