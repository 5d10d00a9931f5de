"""Verification pipeline and experiment grid.

For one witness family and size profile: build the components, chain them
with the catenation construction, determinize, check every reachable
subset against P1-P3, minimize, and compare the minimal size with the
counted bound.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from itertools import product
from typing import Iterable, Optional, Sequence

from .bounds import BRUTE_FORCE_LIMIT, as_profile, brute_force_count, formula_count, recurrence_count
from .constructions import chain_catenate, decode_state, minimize, subset_construction
from .witnesses import WitnessError, WitnessFamily

DEFAULT_BUDGET = 22
METHODS = ("brute", "recurrence", "formula")


class BudgetError(ValueError):
    pass


@dataclass
class CountReport:
    profile: tuple[int, ...]
    family: Optional[str] = None
    bound_recurrence: Optional[int] = None
    bound_formula: Optional[int] = None
    bound_bruteforce: Optional[int] = None
    measured_sc: Optional[int] = None
    attained: Optional[bool] = None
    reachable_states: Optional[int] = None
    invalid_states: Optional[int] = None
    status: str = "ok"
    note: str = ""
    wall_time_ms: int = 0

    @property
    def bounds(self) -> list[int]:
        return [b for b in (self.bound_bruteforce, self.bound_recurrence, self.bound_formula)
                if b is not None]

    @property
    def consistent(self) -> bool:
        return len(set(self.bounds)) <= 1

    def to_dict(self, timings: bool = False) -> dict:
        d = asdict(self)
        d["profile"] = list(self.profile)
        if not timings:
            del d["wall_time_ms"]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> CountReport:
        known = {f.name for f in fields(cls)}
        kwargs = {k: v for k, v in d.items() if k in known}
        kwargs["profile"] = tuple(kwargs["profile"])
        return cls(**kwargs)

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> CountReport:
        return cls.from_dict(json.loads(line))


CSV_COLUMNS = [f.name for f in fields(CountReport)]


def reports_to_csv(reports: Iterable[CountReport], timings: bool = False) -> str:
    columns = [c for c in CSV_COLUMNS if timings or c != "wall_time_ms"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in reports:
        row = r.to_dict(timings)
        row["profile"] = ",".join(map(str, r.profile))
        writer.writerow(["" if row[c] is None else row[c] for c in columns])
    return buf.getvalue()


def compute_bounds(sizes: Sequence[int], methods: Iterable[str] = ("recurrence", "formula")) -> CountReport:
    sizes = as_profile(sizes)
    methods = set(methods)
    unknown = methods - set(METHODS)
    if unknown:
        raise ValueError(f"unknown bound method(s): {', '.join(sorted(unknown))}")
    start = time.perf_counter()
    report = CountReport(sizes)
    if "brute" in methods:
        if sum(sizes) > BRUTE_FORCE_LIMIT:
            raise BudgetError(
                f"brute-force enumeration is limited to {BRUTE_FORCE_LIMIT} states in total")
        report.bound_bruteforce = brute_force_count(sizes)
    if "recurrence" in methods:
        report.bound_recurrence = recurrence_count(sizes)
    if "formula" in methods:
        report.bound_formula = formula_count(sizes)
    if not report.consistent:
        report.status = "inconsistent"
        report.note = "bound methods disagree"
    report.wall_time_ms = round((time.perf_counter() - start) * 1000)
    return report


@dataclass
class Measurement:
    reachable: int
    minimal: int
    invalid: list[str]


def measure_chain(dfas) -> Measurement:
    """Minimal size of the catenation of a chain, plus P1-P3 violations among reachable subsets."""
    nfa, layout = chain_catenate(dfas)
    dfa, subsets = subset_construction(nfa)
    finals = [fa.finals for fa in dfas]
    initials = [fa.initial for fa in dfas]
    invalid = []
    for mask in subsets:
        seq = decode_state(mask, layout)
        if not seq.is_valid(finals, initials):
            invalid.append(str(seq))
    return Measurement(dfa.state_count, minimize(dfa).state_count, invalid)


def verify_family(kind: str, sizes: Sequence[int], budget: int = DEFAULT_BUDGET) -> CountReport:
    family = WitnessFamily(kind, tuple(sizes))
    if sum(family.sizes) > budget:
        raise BudgetError(
            f"profile {family.sizes} has {sum(family.sizes)} NFA states, budget is {budget}")
    start = time.perf_counter()
    report = compute_bounds(family.sizes)
    report.family = kind
    m = measure_chain(family.build())
    report.reachable_states = m.reachable
    report.measured_sc = m.minimal
    report.invalid_states = len(m.invalid)
    report.attained = m.minimal == report.bound_recurrence
    if not report.consistent:
        report.status = "inconsistent"
        report.note = "bound methods disagree"
    elif m.invalid:
        report.status = "inconsistent"
        report.note = f"reachable state violates P1-P3: {m.invalid[0]}"
    elif report.attained:
        report.status = "attained"
    else:
        report.status = "missed"
        report.note = (f"counterexample: minimal DFA has {m.minimal} states, "
                       f"bound is {report.bound_recurrence}")
    report.wall_time_ms = round((time.perf_counter() - start) * 1000)
    return report


def grid_profiles(alpha_range: tuple[int, int], size_range: tuple[int, int]):
    """Every profile of the grid, in lexicographic order (alpha first)."""
    for alpha in range(alpha_range[0], alpha_range[1] + 1):
        yield from product(range(size_range[0], size_range[1] + 1), repeat=alpha)


def _grid_one(args) -> CountReport:
    kind, sizes, budget = args
    if sum(sizes) > budget:
        return CountReport(tuple(sizes), kind, status="skipped",
                           note=f"{sum(sizes)} NFA states exceeds budget {budget}")
    try:
        return verify_family(kind, sizes, budget)
    except WitnessError as exc:
        return CountReport(tuple(sizes), kind, status="skipped", note=str(exc))


def run_grid(kind: str, alpha_range: tuple[int, int], size_range: tuple[int, int],
             budget: int = DEFAULT_BUDGET, jobs: int = 1) -> list[CountReport]:
    """Verify every profile of the grid; the result order never depends on ``jobs``."""
    if alpha_range[0] > alpha_range[1] or size_range[0] > size_range[1]:
        raise ValueError("grid ranges must be non-empty")
    if alpha_range[0] < 1 or size_range[0] < 2:
        raise ValueError("grid needs alpha >= 1 and sizes >= 2")
    tasks = [(kind, sizes, budget) for sizes in grid_profiles(alpha_range, size_range)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_grid_one, tasks))
    return [_grid_one(t) for t in tasks]


def summarize(reports: Sequence[CountReport]) -> dict[str, int]:
    summary = {"total": len(reports), "attained": 0, "missed": 0, "skipped": 0, "inconsistent": 0}
    for r in reports:
        if r.status in summary:
            summary[r.status] += 1
    return summary
