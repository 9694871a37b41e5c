import sys
from pathlib import Path

from hypothesis import settings, strategies as st

from initforms import Poly, Weight, parse_poly

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def P(text, n=None):
    return parse_poly(text, n)


def Z(text, n=None):
    return parse_poly(text, n, allow_z=True)


def W(*entries):
    return Weight.of(list(entries))


coefficients = st.integers(-9, 9).filter(bool)
small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def polys(draw, nvars=None, max_terms=6, max_exp=3):
    n = nvars if nvars is not None else draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    terms = draw(st.dictionaries(exps, coefficients, max_size=max_terms))
    return Poly(n, terms)


@st.composite
def weights(draw, nvars, dim=None):
    d = dim if dim is not None else draw(st.integers(1, 2))
    return Weight(tuple(tuple(draw(small_fracs) for _ in range(d)) for _ in range(nvars)))


@st.composite
def same_ring(draw, count, nonzero=False):
    n = draw(st.integers(1, 3))
    out = []
    for _ in range(count):
        p = draw(polys(nvars=n))
        if nonzero and p.is_zero():
            p = Poly.const(1, n)
        out.append(p)
    return n, out


# -- whole-suite time budget ----------------------------------------------------

SUITE_BUDGET = 60.0
_clock = {}


def pytest_sessionstart(session):
    import time

    _clock["start"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import time

    elapsed = time.perf_counter() - _clock["start"]
    ok = elapsed < SUITE_BUDGET
    _clock["ok"] = ok
    terminalreporter.write_line(
        f"criterion 9 (suite time): {'PASS' if ok else 'FAIL'} full run {elapsed:.1f}s (< {SUITE_BUDGET:.0f}s)"
    )


def pytest_sessionfinish(session, exitstatus):
    import time

    if time.perf_counter() - _clock["start"] >= SUITE_BUDGET and exitstatus == 0:
        session.exitstatus = 1
