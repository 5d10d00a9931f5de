"""Acceptance criteria, one test each, run at their stated tolerances.

Each test records a PASS/FAIL line that is printed in the terminal summary
under "acceptance criteria".
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from conftest import random_dfa
from oracles import bounded_length, concatenation_member, word_set_dfa, words
from multicat.bounds import (brute_force_count, formula_count, m_poly_by_compositions, m_polys,
                             r_expanded, r_poly, recurrence_count, s_polys,
                             z_coefficient_by_compositions)
from multicat.constructions import catenate, determinize, equivalent
from multicat.harness import verify_family
from multicat.poly import MPoly, Y, Z, x

pytestmark = pytest.mark.acceptance

_runs = {}


def timed_reports(kind, profiles):
    """Verify each profile once per session; criteria 1-3 and 9 share the runs."""
    if kind not in _runs:
        start = time.perf_counter()
        reports = [verify_family(kind, p) for p in profiles]
        _runs[kind] = (reports, time.perf_counter() - start)
    return _runs[kind]


def misses(reports, expected):
    return [(r.profile, r.measured_sc, expected(r.profile)) for r in reports
            if r.measured_sc != expected(r.profile)]


def describe(bad, elapsed, total):
    shown = ", ".join(f"{p}: {got} vs {want}" for p, got, want in bad[:4])
    more = f" (+{len(bad) - 4} more)" if len(bad) > 4 else ""
    head = f"{total - len(bad)}/{total} attained in {elapsed:.1f}s"
    return head + (f"; counterexamples {shown}{more}" if bad else "")


TWO_LETTER = list(itertools.product(range(2, 6), repeat=2))
THREE_LETTER = list(itertools.product(range(2, 5), repeat=3))
TABLE1 = [p for a in (2, 3) for p in itertools.product(range(2, 5), repeat=a)]


def test_criterion_1_two_letter_witness(criterion):
    reports, elapsed = timed_reports("two_letter", TWO_LETTER)
    bad = misses(reports, lambda p: p[0] * 2 ** p[1] - 2 ** (p[1] - 1))
    ok = not bad and elapsed < 30
    criterion(1, ok, "two-letter witness, (m,n) in [2,5]^2: " + describe(bad, elapsed, len(reports)))
    assert not bad, bad
    assert elapsed < 30


def test_criterion_2_three_letter_witness(criterion):
    reports, elapsed = timed_reports("three_letter", THREE_LETTER)
    bad = misses(reports, recurrence_count)
    ok = not bad and elapsed < 300
    criterion(2, ok, "three-letter witness, [2,4]^3: " + describe(bad, elapsed, len(reports)))
    assert not bad, bad
    assert elapsed < 300


def test_criterion_3_table1_family(criterion):
    reports, elapsed = timed_reports("table1", TABLE1)
    bad = misses(reports, recurrence_count)
    ok = not bad and elapsed < 300
    criterion(3, ok, "(alpha+1)-letter family, alpha in {2,3}, sizes [2,4]: "
              + describe(bad, elapsed, len(reports)))
    assert not bad, bad
    assert elapsed < 300


def test_criterion_4_bound_methods_agree(criterion):
    start = time.perf_counter()
    profiles = [p for a in range(1, 5) for p in itertools.product((2, 3, 4), repeat=a)
                if sum(p) <= 16]
    bad = [p for p in profiles
           if not brute_force_count(p) == recurrence_count(p) == formula_count(p)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    criterion(4, ok, f"brute = recurrence = formula on {len(profiles) - len(bad)}/{len(profiles)} "
              f"profiles in {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 60


x1, x2, x3 = x(1), x(2), x(3)
H = Fraction(3, 2)

PRINTED = {
    1: 2 * Y + Z,
    2: x1 * Y + x1 * Z,
    3: Z + H * x2 * x1 * Y + H * x2 * x1 * Z - x2 * Z,
    4: (H * H * x3 * x2 * x1 * Y + H * H * x3 * x2 * x1 * Z - x3 * x1 * Y + x1 * Y + x1 * Z
        - H * x3 * x2 * Z + x3 * Z - x3 * x1 * Z),
}
PRINTED_R3_EXPANDED = (Y * (x1 + H * H * x1 * x2 * x3 - x1 * x3)
                       + (x1 + H * H * x1 * x2 * x3 - H * x2 * x3 - x1 * x3 + x3) * Z)


def test_criterion_5_polynomial_golden_values(criterion):
    bad = [f"r_{a - 1}" for a, p in PRINTED.items() if r_poly(a) != p]
    if r_expanded(4) != PRINTED_R3_EXPANDED:
        bad.append("r_3 expanded")
    criterion(5, not bad, "r_0..r_3 equal the printed forms" + (f"; mismatched {bad}" if bad else ""))
    assert not bad


def test_criterion_6_structural_identities(criterion):
    start = time.perf_counter()
    failures = []
    s_minus, s_plus = s_polys(9)
    for alpha in range(2, 10):
        if r_poly(alpha) != sum(s_minus[:alpha], MPoly()) or r_expanded(alpha) != r_poly(alpha):
            failures.append(f"r-sum alpha={alpha}")
    for j in range(1, 9):
        if s_plus[j] != s_minus[j] + s_minus[j - 1]:
            failures.append(f"s_plus j={j}")
    ms = m_polys(9)
    for i in range(9):
        if ms[i] != m_poly_by_compositions(i):
            failures.append(f"m i={i}")
        if s_minus[i].coefficient("y") != m_poly_by_compositions(i):
            failures.append(f"y-coefficient i={i}")
        if s_minus[i].coefficient("z") != z_coefficient_by_compositions(i):
            failures.append(f"z-coefficient i={i}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    criterion(6, ok, f"structural identities for indices <= 8 in {elapsed:.1f}s"
              + (f"; failed {failures}" if failures else ""))
    assert not failures
    assert elapsed < 10


def test_criterion_7_table2_conjecture_grid(criterion):
    start = time.perf_counter()
    profiles = [p for a in (4, 5) for p in itertools.product((2, 3), repeat=a)]
    profiles.append((3, 3, 3, 3))
    reports = [verify_family("table2", p) for p in profiles]
    elapsed = time.perf_counter() - start
    bad = misses(reports, recurrence_count)
    for r in reports:
        if r.status == "missed":
            assert r.note.startswith("counterexample")
    ok = not bad and elapsed < 900
    criterion(7, ok, "alpha-letter family, alpha in {4,5}, sizes [2,3] plus (3,3,3,3): "
              + describe(bad, elapsed, len(reports)))
    assert not bad, bad
    assert elapsed < 900


def test_criterion_8_catenation_construction(criterion):
    rng = random.Random(20240101)
    max_len = 6
    passed = 0
    for _ in range(200):
        a, b = random_dfa(rng), random_dfa(rng)
        accepted = [w for w in words(2, max_len) if concatenation_member(a, b, w)]
        if equivalent(bounded_length(determinize(catenate(a, b)), max_len),
                      word_set_dfa(2, accepted, max_len)):
            passed += 1
    criterion(8, passed == 200, f"{passed}/200 random pairs match the word-set oracle")
    assert passed == 200


def test_criterion_9_reachable_states_are_valid(criterion):
    reports = []
    for kind, profiles in (("two_letter", TWO_LETTER), ("three_letter", THREE_LETTER),
                           ("table1", TABLE1)):
        reports += timed_reports(kind, profiles)[0]
    reachable = sum(r.reachable_states for r in reports)
    invalid = sum(r.invalid_states for r in reports)
    criterion(9, invalid == 0, f"{reachable - invalid}/{reachable} reachable states satisfy "
              f"P1-P3 over {len(reports)} runs")
    assert invalid == 0
