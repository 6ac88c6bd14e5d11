import pytest

from absolute_cgt.game import form_key
from absolute_cgt.lattice import (MAX_RANK_CAP, RankCapExceeded, dumps_poset, enumerate_forms,
                                  hasse, iter_forms, quotient)
from absolute_cgt.normal import format_value
from absolute_cgt.notation import parse_game
from absolute_cgt.universes import DICOT_MISERE, FREE_MISERE

from conftest import load_rank2_golden

U = DICOT_MISERE
ZERO, STAR, MUP = (parse_game(t) for t in ("0", "*", "mup"))


def test_enumerate_small_ranks():
    assert enumerate_forms(U, 0) == [ZERO]
    assert set(enumerate_forms(U, 1)) == {ZERO, STAR}
    # regression value: rank <= 2 dicot forms
    assert len(enumerate_forms(U, 2)) == 10
    assert len(enumerate_forms(FREE_MISERE, 2)) == 256


def test_enumerate_is_deduplicated_and_members():
    forms = enumerate_forms(FREE_MISERE, 2)
    assert len(set(forms)) == len(forms)
    assert all(U.member(g) for g in enumerate_forms(U, 2))


def test_rank_cap():
    with pytest.raises(RankCapExceeded):
        enumerate_forms(U, MAX_RANK_CAP + 1)


def test_iter_forms_atomic_filters():
    assert list(iter_forms(U, 2, left_atomic=True)) == [ZERO]
    assert all(g.left.__class__.__name__ == "Atom"
               for g in iter_forms(FREE_MISERE, 2, left_atomic=True))


def test_quotient_rank1_and_singleton():
    assert [c.representative for c in quotient(U, [STAR, ZERO])] == [ZERO, STAR]
    assert len(quotient(U, [MUP])) == 1


def test_quotient_rank2_representatives():
    forms, _ = load_rank2_golden()
    classes = quotient(U, enumerate_forms(U, 2))
    assert len(classes) == 9
    assert {c.representative for c in classes} == set(forms.values())
    assert sum(len(c.members) for c in classes) == 10
    for c in classes:
        assert c.representative == min(c.members, key=form_key)


def test_hasse_matches_golden():
    forms, golden = load_rank2_golden()
    poset = hasse(U, quotient(U, enumerate_forms(U, 2)))
    got = {(e.upper, e.lower): e.label for e in poset.edges}
    assert set(got) == set(golden)
    for k, v in golden.items():
        assert format_value(got[k]) == format_value(v)


def test_hasse_has_no_transitive_edges():
    poset = hasse(U, quotient(U, enumerate_forms(U, 2)))
    pairs = {(e.upper, e.lower) for e in poset.edges}
    for a, b in pairs:
        for c in poset.nodes:
            assert not ((a, c) in pairs and (c, b) in pairs)


def test_two_element_chain():
    poset = hasse(U, [MUP, ZERO])
    assert [(e.upper, e.lower) for e in poset.edges] == [(MUP, ZERO)]
    assert format_value(poset.edges[0].label) == "↑"
    assert poset.heights() == {MUP: 1, ZERO: 0}


def test_dumps():
    poset = hasse(U, [MUP, ZERO])
    js = dumps_poset(poset, "json")
    assert '"upper": "⋏↑"' in js and '"universe": "dicot-misere"' in js
    dot = dumps_poset(poset, "dot")
    assert dot.startswith("graph hasse {") and '[label="↑"]' in dot
    with pytest.raises(ValueError):
        dumps_poset(poset, "svg")


def test_path_sums_differ_from_direct_value():
    from absolute_cgt.lpg import LpgPosition, unfold
    from absolute_cgt.normal import DOUBLE_UP_STAR, canonical_form, np_eq, np_sum

    def value(a, b):
        return canonical_form(unfold(LpgPosition(parse_game(a), parse_game(b), U)))

    direct = value("mup*", "mown")
    assert direct == DOUBLE_UP_STAR
    via_down = np_sum(value("mup*", "down"), value("down", "mown"))
    via_star2 = np_sum(value("mup*", "*2"), value("*2", "mown"))
    assert not np_eq(via_down, via_star2)
    assert not np_eq(via_down, direct) and not np_eq(via_star2, direct)
