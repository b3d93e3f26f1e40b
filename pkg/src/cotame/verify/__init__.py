"""Replay drivers for the computational claims, with canonical reports."""

from cotame.verify.cases import CASE_IDS, CASES, CaseSpec, UnknownCase, get_case
from cotame.verify.foundations import verify_foundations
from cotame.verify.lemmas import verify_lemma
from cotame.verify.report import FAIL, PASS, SKIPPED, Check, Report, emit
from cotame.verify.theorem import DEFAULT_BUDGET, verify_centralizer, verify_theorem1

__all__ = [
    "CASE_IDS", "CASES", "CaseSpec", "Check", "DEFAULT_BUDGET", "FAIL", "PASS", "Report",
    "SKIPPED", "UnknownCase", "emit", "get_case", "verify_centralizer", "verify_foundations",
    "verify_lemma", "verify_theorem1",
]
