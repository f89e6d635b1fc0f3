from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lperm.pl import PLMap
from lperm.wreath import ChainSpec, WreathElement, WreathGroup

settings.register_profile(
    "repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)


@st.composite
def bumps(draw, up=None):
    lo = draw(st.fractions(min_value=-10, max_value=10, max_denominator=4))
    w = draw(st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=4))
    hi = lo + w
    px = lo + w * draw(st.sampled_from([Fraction(i, 8) for i in range(1, 8)]))
    t = draw(st.sampled_from([Fraction(i, 8) for i in range(1, 8)]))
    going_up = draw(st.booleans()) if up is None else up
    py = px + (hi - px) * t if going_up else px - (px - lo) * t
    return PLMap.bump(lo, px, py, hi)


@st.composite
def pl_maps(draw, max_bumps=3):
    out = PLMap()
    for b in draw(st.lists(bumps(), max_size=max_bumps)):
        out = out * b
    return out


def _entries(kind):
    return st.integers(-3, 3) if kind == "Z" else pl_maps(2)


def _coords(kind):
    return st.integers(-2, 2) if kind == "Z" else st.fractions(min_value=-3, max_value=3, max_denominator=2)


@st.composite
def wreath_elements(draw, levels=("Z", "Z")):
    spec = ChainSpec(tuple(levels))
    over = {}
    if draw(st.booleans()):
        over[()] = draw(_entries(levels[0]))
    for _ in range(draw(st.integers(0, 3))):
        level = draw(st.integers(1, len(levels) - 1))
        prefix = tuple(draw(_coords(levels[j])) for j in range(level))
        over[prefix] = draw(_entries(levels[level]))
    return WreathElement(spec, over)


@st.composite
def wreath_points(draw, levels=("Z", "Z")):
    return tuple(draw(_coords(k)) for k in levels)


ZZ = WreathGroup(ChainSpec(("Z", "Z")))
PP = WreathGroup(ChainSpec(("PLQ", "PLQ")))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
