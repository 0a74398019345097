from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fractions = st.builds(
    Fraction, st.integers(-4, 4), st.integers(1, 3)
)


def vectors(d: int, elements=small_fractions):
    return st.tuples(*([elements] * d))


def vector_lists(d: int, max_size: int = 4):
    return st.lists(vectors(d), min_size=0, max_size=max_size)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, title = results[num]
        terminalreporter.write_line(f"CRITERION {num}: {'PASS' if ok else 'FAIL'}  {title}")
