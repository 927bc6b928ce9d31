from __future__ import annotations

import pytest
from hypothesis import strategies as st

from pathdepth.ring import Monomial, MonomialIdeal, RingContext

ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def monomial_ideals(draw, max_vars: int = 4, max_exp: int = 2, max_gens: int = 5, squarefree: bool = False):
    n = draw(st.integers(1, max_vars))
    top = 1 if squarefree else max_exp
    exps = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(exps, min_size=0, max_size=max_gens))
    return MonomialIdeal.from_exponents(RingContext(n), gens)


@pytest.fixture
def ring4() -> RingContext:
    return RingContext(4)


def mono(*exps: int) -> Monomial:
    return Monomial(tuple(exps))
