from types import MappingProxyType

import pytest

from absolute_cgt.category import (CompositionError, MaintenanceStrategy, compose,
                                   extract_strategy, format_table, mimic, observationally_equal,
                                   response_differences, right_sequences, validate_strategy,
                                   verify_laws)
from absolute_cgt.lattice import enumerate_forms, quotient
from absolute_cgt.lpg import LpgPosition
from absolute_cgt.notation import parse_game
from absolute_cgt.universes import DICOT_MISERE, NORMAL

U = DICOT_MISERE
ZERO, STAR, MUP, DOWN = (parse_game(t) for t in ("0", "*", "mup", "down"))


def P(g, h):
    return LpgPosition(parse_game(g), parse_game(h), U)


def test_extract_mup_over_zero():
    s = extract_strategy(U, MUP, ZERO)
    assert dict(s.table) == {(P("mup", "0"), P("*", "0")): P("0", "0")}
    assert validate_strategy(s)


def test_extract_trivial_and_absent():
    s = extract_strategy(U, ZERO, ZERO)
    assert len(s) == 0 and validate_strategy(s)
    assert extract_strategy(NORMAL, DOWN, ZERO) is None


def test_mimic_examples():
    assert len(mimic(U, ZERO)) == 0
    s = mimic(U, STAR)
    root = P("*", "*")
    assert dict(s.table) == {(root, P("0", "*")): P("0", "0"),
                             (root, P("*", "0")): P("0", "0")}
    assert validate_strategy(mimic(U, MUP))


def test_mimic_valid_on_all_rank2(dicot_rank2):
    for g in dicot_rank2:
        assert validate_strategy(mimic(U, g))


def test_extracted_strategies_valid(dicot_rank2):
    for g in dicot_rank2:
        for h in dicot_rank2:
            s = extract_strategy(U, g, h)
            if s is not None:
                assert validate_strategy(s)


def test_deleted_entry_breaks_totality():
    s = mimic(U, parse_game("*2"))
    table = dict(s.table)
    del table[next(iter(table))]
    broken = MaintenanceStrategy(s.root, MappingProxyType(table))
    assert not validate_strategy(broken)


def test_illegal_entry_rejected():
    s = extract_strategy(U, MUP, ZERO)
    key = next(iter(s.table))
    bad = MaintenanceStrategy(s.root, MappingProxyType({key: P("*", "0")}))
    assert not validate_strategy(bad)


def test_compose_with_mimic_is_identity():
    f = extract_strategy(U, MUP, ZERO)
    assert observationally_equal(compose(mimic(U, MUP), f), f)
    right = compose(f, mimic(U, ZERO))
    assert validate_strategy(right) and observationally_equal(right, f)


def test_compose_along_a_chain():
    g, j, h = (parse_game(t) for t in ("mup*", "down", "mown"))
    s = compose(extract_strategy(U, g, j), extract_strategy(U, j, h))
    assert s.root == LpgPosition(g, h, U)
    assert validate_strategy(s)
    assert s.max_bounces <= 2 * j.rank + 4


def test_compose_middle_mismatch():
    a = extract_strategy(U, MUP, ZERO)
    b = extract_strategy(U, MUP, ZERO)
    with pytest.raises(CompositionError):
        compose(a, b)


def test_response_differences_detects_change():
    s = mimic(U, parse_game("*2"))
    assert response_differences(s, s) == []
    table = dict(s.table)
    key = next(k for k in table if len(k) == 2)
    table[key] = P("0", "0") if table[key] != P("0", "0") else P("*", "*")
    t = MaintenanceStrategy(s.root, MappingProxyType(table))
    diffs = response_differences(s, t)
    assert [d[0] for d in diffs] == [key]
    assert not observationally_equal(s, t)


def test_right_sequences_and_format():
    s = extract_strategy(U, MUP, ZERO)
    plays = right_sequences(s)
    assert (P("mup", "0"), P("*", "0"), P("0", "0")) in plays
    assert format_table(s) == "[*,0] -> [0,0]"


def test_laws_on_rank2_poset():
    reps = [c.representative for c in quotient(U, enumerate_forms(U, 2))]
    report = verify_laws(U, reps)
    assert report.ok, report.summary()
    assert report.arrows == 25 and report.compositions == 49
    assert "laws hold" in report.summary()
