import pytest

from multicat.harness import (BudgetError, CountReport, compute_bounds, grid_profiles,
                              measure_chain, reports_to_csv, run_grid, summarize, verify_family)
from multicat.witnesses import build_two_letter


def test_compute_bounds():
    r = compute_bounds((3, 3, 3), ("brute", "recurrence", "formula"))
    assert r.bounds == [106, 106, 106] and r.consistent and r.status == "ok"
    with pytest.raises(BudgetError):
        compute_bounds((9, 9, 9), ("brute",))
    with pytest.raises(ValueError):
        compute_bounds((3, 3), ("guess",))
    with pytest.raises(ValueError):
        compute_bounds((1, 3))


def test_measure_chain():
    m = measure_chain(build_two_letter(3, 3))
    assert (m.minimal, m.invalid) == (20, [])
    assert m.reachable >= m.minimal


def test_verify_reports():
    r = verify_family("three_letter", (3, 3, 3))
    assert r.status == "attained" and r.attained and r.measured_sc == 106
    assert r.invalid_states == 0
    miss = verify_family("two_letter", (2, 3))
    assert miss.status == "missed" and miss.attained is False
    assert "counterexample" in miss.note and "11" in miss.note
    with pytest.raises(BudgetError):
        verify_family("table1", (8, 8, 8))


def test_report_round_trips():
    r = verify_family("table2", (3, 3, 3, 3))
    assert CountReport.from_json(r.to_json(timings=True)) == r
    assert "wall_time_ms" not in r.to_json()
    back = CountReport.from_json(r.to_json())
    back.wall_time_ms = r.wall_time_ms
    assert back == r


def test_csv_layout():
    reports = [verify_family("two_letter", (3, 3)), CountReport((2, 9), "two_letter",
                                                                status="skipped")]
    text = reports_to_csv(reports)
    lines = text.splitlines()
    assert lines[0].startswith("profile,family,bound_recurrence,bound_formula")
    assert "wall_time_ms" not in lines[0]
    assert lines[1].startswith('"3,3",two_letter,20,20,,20,True')
    assert "wall_time_ms" in reports_to_csv(reports, timings=True).splitlines()[0]


def test_grid_order_and_summary():
    assert list(grid_profiles((1, 2), (2, 3))) == [
        (2,), (3,), (2, 2), (2, 3), (3, 2), (3, 3)]
    reports = run_grid("table1", (2, 2), (2, 4))
    assert [r.profile for r in reports] == list(grid_profiles((2, 2), (2, 4)))
    assert summarize(reports) == {"total": 9, "attained": 9, "missed": 0, "skipped": 0,
                                  "inconsistent": 0}


def test_grid_skips_over_budget_and_bad_arity():
    reports = run_grid("two_letter", (2, 3), (2, 2), budget=5)
    assert [r.status for r in reports] == ["attained", "skipped"]
    reports = run_grid("table2", (2, 2), (3, 4), budget=7)
    assert summarize(reports)["skipped"] == 1
    with pytest.raises(ValueError):
        run_grid("table1", (3, 2), (2, 3))
    with pytest.raises(ValueError):
        run_grid("table1", (1, 2), (1, 3))


def test_grid_parallel_is_deterministic():
    serial = run_grid("table2", (2, 3), (2, 3))
    parallel = run_grid("table2", (2, 3), (2, 3), jobs=3)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]
