from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from vnbasis.cyclotomic import Cyclo


def random_cyclo(rng: random.Random, order: int, terms: int = 4, span: int = 5) -> Cyclo:
    coeffs = [Fraction(0)] * order
    for _ in range(terms):
        coeffs[rng.randrange(order)] += Fraction(rng.randint(-span, span), rng.randint(1, 4))
    return Cyclo(order, coeffs)


small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def cyclos(draw, order=None, max_order: int = 24):
    L = order or draw(st.integers(1, max_order))
    coeffs = draw(st.lists(small_fraction, min_size=L, max_size=L))
    return Cyclo(L, coeffs)


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when in ("call", "setup"):
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, outcome, detail in sorted(lines, key=lambda t: int(t[0].split(":")[0])):
            terminalreporter.write_line(f"criterion {crit}: {outcome} {detail}".rstrip())
