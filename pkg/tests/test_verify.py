import json

import pytest

from cotame.coeffs import Rational
from cotame.multipoly import NVARS_SMALL, Polynomial
from cotame.objects import base_polys, phi
from cotame.verify import (
    CASE_IDS,
    FAIL,
    PASS,
    Report,
    UnknownCase,
    emit,
    get_case,
    verify_centralizer,
    verify_foundations,
    verify_lemma,
    verify_theorem1,
)
from cotame.verify.lemmas import golden_leading_terms, leading_term_lines
from cotame.verify.theorem import rational_roots, univariate_gcd, upper_bound

REPORT_KEYS = {"id", "status", "expected", "computed", "class", "witness", "seed",
               "millis", "checks"}


def test_emit_polynomial():
    f = base_polys()[0]
    assert emit(f) == b"x1*x3 - x2^2\n"
    assert emit(f) == emit(base_polys()[0])


def test_emit_endomorphism_lists_images():
    text = emit(phi(Rational(1))).decode().splitlines()
    assert len(text) == 3
    assert text[0].startswith("x1 -> ")


def test_report_status_and_structure():
    rep = Report("demo", seed=3)
    rep.add("first", True, "1", "1")
    rep.add("second", False, "2", "3")
    rep.finish()
    assert rep.status == FAIL and not rep.passed
    assert rep.expected == "second: 2" and rep.computed == "second: 3"
    data = json.loads(emit(rep, "structured"))
    assert set(data) == REPORT_KEYS
    assert data["checks"][1] == {"name": "second", "status": FAIL,
                                 "expected": "2", "computed": "3"}
    assert "[FAIL] second" in emit(rep).decode()
    with pytest.raises(ValueError):
        emit(rep, "yaml")


def test_foundations_pass():
    reports = verify_foundations()
    assert [r.id for r in reports] == ["delta", "beta scales f, r, g", "beta conjugates Delta",
                                       "beta conjugates phi",
                                       "phi' images", "phi' leading terms", "pi commutes"]
    assert all(r.status == PASS for r in reports), emit(reports).decode()
    assert all(r.millis is None for r in reports)


def test_foundations_timing_flag():
    assert all(isinstance(r.millis, int) for r in verify_foundations(timing=True))


def test_case_table():
    # the enumerated drivers: 2 + 2 + 2 + 4 + 8
    assert len(CASE_IDS) == 18
    assert CASE_IDS[0] == "L2.A" and CASE_IDS[-1] == "L6.viii"
    with pytest.raises(UnknownCase) as exc:
        get_case("L7")
    assert "L6.viii" in str(exc.value)
    with pytest.raises(UnknownCase):
        verify_lemma("nope")


def test_golden_leading_terms_cover_every_line():
    lines = leading_term_lines()
    gold = golden_leading_terms()
    assert len(lines) == len(gold)
    for line in lines:
        key, text = line.split(": ", 1)
        assert gold[key] == text


@pytest.mark.parametrize("case_id", ["L2.A", "L6.iv", "L6.vi", "L6.viii"])
def test_symbolic_cases(case_id):
    rep = verify_lemma(case_id)
    assert rep.passed, rep.to_text()


def test_l6_viii_leading_term():
    rep = verify_lemma("L6.viii")
    lt = [c for c in rep.checks if c.name == "golden lt R"]
    assert lt and lt[0].computed == "-(1/4*u^6*P^3 / c1^2)*tf^4*tg^3"


def test_l2_witness():
    rep = verify_lemma("L2.A")
    assert rep.witness is not None
    assert rep.classes["F"] == [6, 8]


def test_numeric_l5_iii_classes():
    rep = verify_lemma("L5.iii", "numeric", seed=1, trials=4)
    assert rep.passed, rep.to_text()
    assert rep.classes == {"R": [1, 3], "F": [0, 1], "G": [1, 4]}
    assert rep.seed == 1


def test_numeric_mode_is_seeded():
    a = emit(verify_lemma("L4.i", "numeric", seed=5, trials=3), "structured")
    b = emit(verify_lemma("L4.i", "numeric", seed=5, trials=3), "structured")
    assert a == b


def test_unknown_mode():
    with pytest.raises(ValueError):
        verify_lemma("L2.A", "fuzzy")


def test_theorem1_s1():
    rep = verify_theorem1(1, seed=2)
    assert rep.passed, rep.to_text()
    assert all(d == [9, 16, 23] for d in rep.classes["degrees"])
    with pytest.raises(ValueError):
        verify_theorem1(3)


def test_upper_bound_weights():
    x1, x2, x3 = Polynomial.gens(NVARS_SMALL)
    assert upper_bound(x1 * x3 + x2 ** 2) == 32


def test_centralizer():
    rep = verify_centralizer()
    assert rep.passed, rep.to_text()


def test_gcd_and_roots():
    q = [Rational(c) for c in (-2, 3, -1)]  # -(w - 1)(w - 2)
    p = [Rational(c) for c in (1, -1)]  # 1 - w
    assert univariate_gcd([q, p]) == [Rational(-1), Rational(1)]
    assert rational_roots(univariate_gcd([q])) == [Rational(1), Rational(2)]
    assert rational_roots([Rational(0), Rational(1)]) == [Rational(0)]
    assert univariate_gcd([[Rational(0)]]) == []
