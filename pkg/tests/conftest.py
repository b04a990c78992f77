import pytest
from hypothesis import strategies as st

# filled in by test_acceptance.py, printed at the end of the run
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def perms(n_min=1, n_max=5):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}")
