import sys
from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


def rationals(lo=-3, hi=3, max_den=12, nonzero=False, exclude=()):
    s = st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)
    if nonzero:
        s = s.filter(lambda v: v != 0)
    if exclude:
        s = s.filter(lambda v: v not in exclude)
    return s


zetas = rationals(Fraction(1, 10), 2, nonzero=True)
lams = rationals(Fraction(-9, 10), 3, exclude=(Fraction(-1),))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(mod.line(n, ok, detail))
