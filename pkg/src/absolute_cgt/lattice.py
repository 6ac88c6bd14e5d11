"""Enumerating universe members by rank and computing their partial order.

:func:`enumerate_forms` lists every member form up to a rank bound,
:func:`quotient` groups them into equivalence classes and :func:`hasse`
computes the covering relation, labelling each covering edge with the
canonical value of the Left Provisional Game between its endpoints.
"""

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .compare import Relation, geq, relation
from .game import Atom, Game, form_key
from .lpg import LpgPosition, unfold
from .normal import canonical_form, format_value
from .notation import format_game

MAX_RANK_CAP = 3


class RankCapExceeded(ValueError):
    pass


def _side_choices(lower, adorns, subset_cap):
    atoms = [Atom(a) for a in adorns]
    cap = len(lower) if subset_cap is None else min(subset_cap, len(lower))
    subsets = [c for k in range(1, cap + 1) for c in itertools.combinations(lower, k)]
    return atoms, subsets


def _level(u, lower, rank, adorns, subset_cap, left_atomic=False, right_atomic=False):
    """Member forms of exactly ``rank`` whose options come from ``lower``."""
    atoms, subsets = _side_choices(lower, adorns, subset_cap)
    top = rank - 1
    fresh = [s for s in subsets if any(o.rank == top for o in s)]
    stale = [s for s in subsets if all(o.rank < top for o in s)]
    shapes = []
    if u.dicot:
        if not (left_atomic or right_atomic):
            shapes = [(fresh, fresh), (fresh, stale), (stale, fresh)]
    else:
        lsides = [atoms, fresh, stale] if not left_atomic else [atoms]
        rsides = [atoms, fresh, stale] if not right_atomic else [atoms]
        for ls in lsides:
            for rs in rsides:
                if (ls is fresh) or (rs is fresh):
                    shapes.append((ls, rs))
    for ls, rs in shapes:
        for left in ls:
            for right in rs:
                g = Game(left, right, u.group)
                if u.member(g):
                    yield g


def iter_forms(u, max_rank, subset_cap=None, adorns=None,
               left_atomic=False, right_atomic=False):
    """Yield every member of ``u`` of rank <= ``max_rank``, lowest rank first.

    Sides are atoms (one per adorn in ``adorns``) or non-empty sets of
    lower-rank members of size at most ``subset_cap``. Only the top rank is
    generated lazily. ``left_atomic``/``right_atomic`` restrict the yielded
    forms (not their options).
    """
    if adorns is None:
        adorns = (Fraction(0),)
    adorns = tuple(Fraction(a) for a in adorns)
    levels = [[Game(Atom(a), Atom(b), u.group) for a in adorns for b in adorns]]
    levels[0] = [g for g in levels[0] if u.member(g)]
    lower = list(levels[0])
    yield from levels[0]
    for r in range(1, max_rank + 1):
        gen = _level(u, lower, r, adorns, subset_cap, left_atomic, right_atomic)
        if r == max_rank:
            yield from gen
            return
        if left_atomic or right_atomic:
            full = list(_level(u, lower, r, adorns, subset_cap))
            yield from gen
        else:
            full = list(gen)
            yield from full
        lower = sorted(lower + full, key=form_key)


def enumerate_forms(u, max_rank, subset_cap=None, adorns=None, cap=MAX_RANK_CAP):
    """All normalized member forms of rank <= ``max_rank``, sorted by form order."""
    if max_rank > cap:
        raise RankCapExceeded("max_rank %d exceeds the configured cap %d" % (max_rank, cap))
    return sorted(iter_forms(u, max_rank, subset_cap, adorns), key=form_key)


@dataclass
class EquivalenceClass:
    representative: Game
    members: list = field(default_factory=list)

    def __str__(self):
        return format_game(self.representative)


def quotient(u, games):
    """Group ``games`` into classes of equal games; representatives are the
    form-order minimum of each class."""
    classes = []
    for g in sorted(set(games), key=form_key):
        for c in classes:
            if relation(u, g, c.representative) is Relation.EQ:
                c.members.append(g)
                break
        else:
            classes.append(EquivalenceClass(g, [g]))
    return classes


@dataclass
class Edge:
    upper: Game
    lower: Game
    label: object  # NormalGame: canonical value of [upper, lower]

    def __str__(self):
        return "%s -> %s : %s" % (format_game(self.upper), format_game(self.lower),
                                  format_value(self.label))


@dataclass
class Poset:
    universe: object
    nodes: list
    edges: list

    def above(self, g):
        return [e.upper for e in self.edges if e.lower == g]

    def below(self, g):
        return [e.lower for e in self.edges if e.upper == g]

    def heights(self):
        """Length of the longest descending chain from each node."""
        memo = {}

        def h(x):
            if x not in memo:
                memo[x] = 1 + max((h(y) for y in self.below(x)), default=-1)
            return memo[x]

        return {x: h(x) for x in self.nodes}

    def to_json(self):
        return {
            "universe": self.universe.id,
            "nodes": [{"name": format_game(g), "form": format_game(g, names=False)}
                      for g in self.nodes],
            "edges": [{"upper": format_game(e.upper), "lower": format_game(e.lower),
                       "value": format_value(e.label)} for e in self.edges],
        }

    def to_dot(self):
        lines = ["graph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
        ids = {g: "n%d" % i for i, g in enumerate(self.nodes)}
        for g in self.nodes:
            lines.append('  %s [label="%s"];' % (ids[g], format_game(g)))
        for e in self.edges:
            lines.append('  %s -- %s [label="%s"];'
                         % (ids[e.lower], ids[e.upper], format_value(e.label)))
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(u, classes):
    """Covering relation of the order on class representatives; each edge
    carries the canonical value of the LPG ``[upper, lower]``."""
    reps = [c.representative if isinstance(c, EquivalenceClass) else c for c in classes]
    above = {(a, b): a != b and geq(u, a, b) and not geq(u, b, a) for a in reps for b in reps}
    edges = []
    for a in reps:
        for b in reps:
            if not above[a, b]:
                continue
            if any(above[a, c] and above[c, b] for c in reps):
                continue
            label = canonical_form(unfold(LpgPosition(a, b, u)))
            edges.append(Edge(a, b, label))
    return Poset(u, reps, edges)


def dumps_poset(poset, fmt):
    if fmt == "json":
        return json.dumps(poset.to_json(), indent=2, ensure_ascii=False) + "\n"
    if fmt == "dot":
        return poset.to_dot()
    raise ValueError("unknown format %r" % fmt)
