"""Benchmark harness contrasting structure-guided and blind solving.

For each seeded random base the harness pads a backdoor-family instance,
then measures four things on the padded formula: recognizing the family
and extracting the backdoor (fast, by construction), solving through the
extracted backdoor, solving with DPLL, and searching blindly for a small
strong backdoor (capped in size and wall time, and expected to be the
expensive column).  All verdict-producing strategies must agree on every
instance; timings are measured, never asserted, since the point of the
numbers is inspection.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, fields

from .backdoor import search_smallest_strong_backdoor, solve_via_backdoor
from .constructions import extract_backdoor, pad_backdoor_family, recognize_backdoor_family
from .generator import random_cnf
from .solver import dpll_solve

CSV_COLUMNS = [
    "instance_id",
    "total_vars",
    "k",
    "recognize_time",
    "extract_time",
    "backdoor_size",
    "guided_calls",
    "guided_time",
    "dpll_time",
    "search_outcome",
    "verdict",
]


@dataclass(frozen=True)
class BenchRecord:
    instance_id: int
    total_vars: int
    k: int
    recognize_time: float
    extract_time: float
    backdoor_size: int
    guided_calls: int
    guided_time: float
    dpll_time: float
    search_outcome: str
    verdict: str

    def to_row(self) -> list[str]:
        row = []
        for field in fields(self):
            value = getattr(self, field.name)
            row.append(f"{value:.6f}" if isinstance(value, float) else str(value))
        return row


def run_benchmark(
    base_vars: int,
    base_clauses: int,
    k: int,
    count: int,
    seed: int,
    search_cap: int,
    search_timeout: float = 2.0,
    clause_width: int = 3,
) -> list[BenchRecord]:
    records = []
    warmed_up = False
    for i in range(count):
        base = random_cnf(base_vars, base_clauses, clause_width, seed=seed + i)
        instance = pad_backdoor_family(base, k)
        padded = instance.padded

        if not warmed_up:
            recognize_backdoor_family(padded, k)
            warmed_up = True

        t0 = time.perf_counter()
        recognized = recognize_backdoor_family(padded, k)
        t1 = time.perf_counter()
        if recognized is None:
            raise AssertionError("a constructed instance must be recognized")
        backdoor = extract_backdoor(recognized)
        t2 = time.perf_counter()

        guided_result, guided_calls = solve_via_backdoor(padded, backdoor)
        t3 = time.perf_counter()

        dpll_result, _ = dpll_solve(padded)
        t4 = time.perf_counter()

        deadline = time.perf_counter() + search_timeout
        found, search_status = search_smallest_strong_backdoor(
            padded, size_cap=search_cap, deadline=deadline
        )
        t5 = time.perf_counter()
        if search_status == "found":
            search_outcome = f"found:{len(found[0])}"
        else:
            search_outcome = search_status

        if guided_result.satisfiable != dpll_result.satisfiable:
            raise AssertionError(
                f"strategy disagreement on instance {i}: "
                f"guided says {guided_result.satisfiable}, dpll says {dpll_result.satisfiable}"
            )
        records.append(
            BenchRecord(
                instance_id=i,
                total_vars=len(padded.variables),
                k=k,
                recognize_time=t1 - t0,
                extract_time=t2 - t1,
                backdoor_size=len(backdoor),
                guided_calls=guided_calls,
                guided_time=t3 - t2,
                dpll_time=t4 - t3,
                search_outcome=search_outcome,
                verdict="satisfiable" if dpll_result.satisfiable else "unsatisfiable",
            )
        )
    return records


def records_to_csv(records: list[BenchRecord], *, seed: int, version: str) -> str:
    """CSV text with a stamped comment line, fixed column order."""
    buffer = io.StringIO()
    buffer.write(f"# opaquesat-bench version={version} seed={seed}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.to_row())
    return buffer.getvalue()
