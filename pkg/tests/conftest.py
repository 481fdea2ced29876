from __future__ import annotations

import itertools

import pytest

from k4chrom.k4homeo import K4Homeomorph


def all_tuples(max_size: int):
    """Every 6-tuple of positive integers with sum <= max_size."""
    for m in range(6, max_size + 1):
        for cuts in itertools.combinations(range(1, m), 5):
            bounds = (0,) + cuts + (m,)
            yield K4Homeomorph(tuple(b - a for a, b in zip(bounds, bounds[1:])))


@pytest.fixture(scope="session")
def small_universe():
    return list(all_tuples(12))


ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (title, ok, detail)
    print(f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else ""))
