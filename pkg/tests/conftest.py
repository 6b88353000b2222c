import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from twist_apoly.cli import poly_from_terms
from twist_apoly.poly_core import LaurentPoly

GOLDEN = Path(__file__).parent / "golden"

exponents = st.tuples(*[st.integers(-8, 8)] * 3)
coefficients = st.integers(-10**6, 10**6)


@st.composite
def laurent_polys(draw, max_terms=12, nonzero=False):
    terms = draw(st.dictionaries(exponents, coefficients, min_size=1 if nonzero else 0, max_size=max_terms))
    p = LaurentPoly(terms)
    if nonzero and p.is_zero():
        p = LaurentPoly.const(1)
    return p


@pytest.fixture(scope="session")
def golden_apoly():
    raw = json.loads((GOLDEN / "apoly.json").read_text())
    return {int(k): poly_from_terms(v) for k, v in raw.items()}


@pytest.fixture(scope="session")
def figure_eight():
    raw = json.loads((GOLDEN / "figure_eight.json").read_text())
    return poly_from_terms(raw["polynomial"])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, budget in sorted(results):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title} ({elapsed:.2f}s / {budget:.0f}s)")
