import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from absolute_cgt.game import RATIONAL, TRIVIAL, Atom, Game  # noqa: E402
from absolute_cgt.lattice import enumerate_forms  # noqa: E402
from absolute_cgt.universes import DICOT_MISERE  # noqa: E402

DATA = Path(__file__).parent / "data"


def random_game(rng, max_rank, group=TRIVIAL, dicot=False, max_options=2,
                adorns=(-2, -1, 0, Fraction(1, 2), 1, 3)):
    """A random form of rank <= max_rank; sides hold 1..max_options options."""
    def atom():
        return Atom(rng.choice(adorns) if group == RATIONAL else 0)

    def side(r):
        k = rng.randint(1, max_options)
        return [random_game(rng, r - 1, group, dicot, max_options, adorns) for _ in range(k)]

    if max_rank == 0:
        return Game(atom(), atom(), group)
    r = rng.randint(1, max_rank)
    if dicot:
        if rng.random() < 0.15:
            return Game(atom(), atom(), group)
        return Game(side(r), side(r), group)
    left = atom() if rng.random() < 0.3 else side(r)
    right = atom() if rng.random() < 0.3 else side(r)
    return Game(left, right, group)


def game_strategy(max_rank, group=TRIVIAL, dicot=False, max_options=2):
    """Hypothesis strategy over forms of rank <= max_rank."""
    if group == RATIONAL:
        adorn = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    else:
        adorn = st.just(Fraction(0))
    atoms = st.builds(lambda a, b: Game(Atom(a), Atom(b), group), adorn, adorn)
    if max_rank == 0:
        return atoms
    sub = game_strategy(max_rank - 1, group, dicot, max_options)
    opts = st.lists(sub, min_size=1, max_size=max_options)
    if dicot:
        inner = st.builds(lambda l, r: Game(l, r, group), opts, opts)
    else:
        side = st.one_of(adorn.map(Atom), opts)
        inner = st.builds(lambda l, r: Game(l, r, group), side, side)
    return st.one_of(atoms, inner)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(scope="session")
def dicot_rank2():
    return enumerate_forms(DICOT_MISERE, 2)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, 0.0))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line("%s  %-60s %6.2fs" % (verdict, name, duration))


def load_rank2_golden():
    """Golden rank-2 dicot misere diagram: node forms keyed by name, and the edge
    set as ``{(upper_form, lower_form): value}``."""
    import json

    from absolute_cgt.notation import parse_game, parse_value

    data = json.loads((DATA / "rank2_dicot_misere_hasse.json").read_text(encoding="utf-8"))
    forms = {name: parse_game(n["form"]) for name, n in data["nodes"].items()}
    edges = {(forms[e["upper"]], forms[e["lower"]]): parse_value(e["value"])
             for e in data["edges"]}
    return forms, edges
