"""Finite game forms over an adorn group.

A game is a pair of sides. Each side is either an :class:`Atom` (the player
has no move and the atom's adorn is the score recorded there) or a non-empty
tuple of option games. Two adorn groups are supported: the trivial group,
where every adorn is 0 (normal and misere play), and the exact rationals
(scoring play).

Games are immutable and normalized on construction: option tuples are sorted
by :func:`form_key` and deduplicated, so structurally equal forms compare and
hash equal.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ._memo import Memo, memoized

TRIVIAL = "trivial"
RATIONAL = "rational"
GROUPS = (TRIVIAL, RATIONAL)


class GroupMismatch(ValueError):
    """Raised when games over different adorn groups are combined."""


@dataclass(frozen=True, order=True)
class Atom:
    """The empty side of a game, carrying an adorn."""

    adorn: Fraction = Fraction(0)

    def __post_init__(self):
        if isinstance(self.adorn, float):
            raise TypeError("adorns must be exact; got float %r" % self.adorn)
        object.__setattr__(self, "adorn", Fraction(self.adorn))


Side = Union[Atom, tuple]

ZERO_ATOM = Atom(Fraction(0))


def _side_key(side):
    if isinstance(side, Atom):
        return (0, side.adorn)
    return (1, tuple(o._key for o in side))


class Game:
    """An immutable game form ``<left | right>``.

    ``left`` and ``right`` may each be an :class:`Atom`, a number (taken as an
    adorn), or an iterable of games. An empty iterable means the zero atom.
    The adorn group is taken from ``group``, else from the options, else it is
    rational when an atom has a non-zero adorn and trivial otherwise.
    """

    __slots__ = ("left", "right", "group", "rank", "_key", "_hash", "_dicot")

    def __init__(self, left=(), right=(), group=None):
        left, lgroups = _coerce_side(left)
        right, rgroups = _coerce_side(right)
        groups = lgroups | rgroups
        if group is None:
            if groups:
                group = next(iter(groups))
            elif any(isinstance(s, Atom) and s.adorn != 0 for s in (left, right)):
                group = RATIONAL
            else:
                group = TRIVIAL
        if group not in GROUPS:
            raise ValueError("unknown adorn group %r" % (group,))
        if groups - {group}:
            raise GroupMismatch("options from adorn groups %s in a %s game"
                                % (sorted(groups), group))
        if group == TRIVIAL:
            for side in (left, right):
                if isinstance(side, Atom) and side.adorn != 0:
                    raise GroupMismatch("trivial-group atom with adorn %s" % side.adorn)
        self.left = left
        self.right = right
        self.group = group
        if isinstance(left, Atom) and isinstance(right, Atom):
            self.rank = 0
            self._dicot = True
        else:
            self.rank = 1 + max(o.rank for side in (left, right)
                                if not isinstance(side, Atom) for o in side)
            self._dicot = (not isinstance(left, Atom) and not isinstance(right, Atom)
                           and all(o._dicot for o in left + right))
        self._key = (self.rank, _side_key(left), _side_key(right))
        self._hash = hash((self._key, group))

    def __setattr__(self, name, value):
        if hasattr(self, "_hash"):
            raise AttributeError("Game is immutable")
        object.__setattr__(self, name, value)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Game):
            return NotImplemented
        return (self._hash == other._hash and self.group == other.group
                and self._key == other._key)

    def __lt__(self, other):
        return self._key < other._key

    def __reduce__(self):
        return (Game, (self.left, self.right, self.group))

    @property
    def left_options(self):
        return () if isinstance(self.left, Atom) else self.left

    @property
    def right_options(self):
        return () if isinstance(self.right, Atom) else self.right

    def __repr__(self):
        from .notation import format_game

        return "Game(%s)" % format_game(self)

    def __str__(self):
        from .notation import format_game

        return format_game(self)


def _coerce_side(side):
    if isinstance(side, Atom):
        return side, set()
    if isinstance(side, (int, Fraction)):
        return Atom(Fraction(side)), set()
    if isinstance(side, str):
        raise TypeError("cannot build a side from a string; use notation.parse_game")
    opts = tuple(side)
    if not opts:
        return ZERO_ATOM, set()
    for o in opts:
        if not isinstance(o, Game):
            raise TypeError("option %r is not a Game" % (o,))
    opts = tuple(sorted(set(opts), key=form_key))
    return opts, {o.group for o in opts}


def form_key(g):
    """Deterministic total order on forms: rank, then recursive lexicographic."""
    return g._key


def atomic(left_adorn=0, right_adorn=0, group=None):
    """The purely atomic game ``<empty^l | empty^r>``."""
    if group is None:
        group = TRIVIAL if left_adorn == 0 and right_adorn == 0 else RATIONAL
    return Game(Atom(left_adorn), Atom(right_adorn), group)


ZERO = Game()
STAR = Game([ZERO], [ZERO])


def rank(g):
    return g.rank


def is_left_atomic(g):
    return isinstance(g.left, Atom)


def is_right_atomic(g):
    return isinstance(g.right, Atom)


def is_purely_atomic(g):
    return g.rank == 0


def is_dicot(g):
    """True iff at every subposition both sides are atoms or both have options.

    Computed once at construction and stored on the instance."""
    return g._dicot


def normalize(g):
    """Rebuild ``g`` bottom-up. Construction already normalizes, so this is
    the identity on any value produced by :class:`Game`."""
    def side(s):
        return s if isinstance(s, Atom) else [normalize(o) for o in s]

    return Game(side(g.left), side(g.right), g.group)


def _check_groups(g, h):
    if g.group != h.group:
        raise GroupMismatch("cannot combine a %s game with a %s game" % (g.group, h.group))


_sum_memo = Memo("disjunctive_sum")


@memoized(_sum_memo, lambda g, h: (g, h))
def disjunctive_sum(g, h):
    """The disjunctive sum ``g + h``.

    When both games are left-atomic the sum is left-atomic with the adorns
    added (likewise on the right); otherwise each side lists the moves in
    either component.
    """
    _check_groups(g, h)
    la = is_left_atomic(g) and is_left_atomic(h)
    ra = is_right_atomic(g) and is_right_atomic(h)
    if la:
        left = Atom(g.left.adorn + h.left.adorn)
    else:
        left = ([disjunctive_sum(x, h) for x in g.left_options]
                + [disjunctive_sum(g, y) for y in h.left_options])
    if ra:
        right = Atom(g.right.adorn + h.right.adorn)
    else:
        right = ([disjunctive_sum(x, h) for x in g.right_options]
                 + [disjunctive_sum(g, y) for y in h.right_options])
    return Game(left, right, g.group)


def sum_all(games, group=TRIVIAL):
    total = atomic(group=group)
    for g in games:
        total = disjunctive_sum(total, g)
    return total


_conj_memo = Memo("conjugate")


@memoized(_conj_memo, lambda g: g)
def conjugate(g):
    """Swap the roles of Left and Right, negating every adorn."""
    def flip(side):
        if isinstance(side, Atom):
            return Atom(-side.adorn)
        return [conjugate(o) for o in side]

    return Game(flip(g.right), flip(g.left), g.group)


@dataclass(frozen=True)
class OutcomePair:
    """Left-start and Right-start results, ordered componentwise."""

    left: object
    right: object

    def __ge__(self, other):
        return self.left >= other.left and self.right >= other.right

    def __le__(self, other):
        return other >= self

    def __gt__(self, other):
        return self >= other and self != other

    def __lt__(self, other):
        return other > self

    def __iter__(self):
        return iter((self.left, self.right))

    @property
    def symbol(self):
        """Misere/normal outcome class: L, N, P or R (two-valued results only)."""
        return MISERE_SYMBOLS[(self.left, self.right)]

    def __str__(self):
        if (self.left, self.right) in MISERE_SYMBOLS:
            return self.symbol
        return "(%s, %s)" % (self.left, self.right)


MISERE_SYMBOLS = {(-1, -1): "R", (-1, 1): "P", (1, -1): "N", (1, 1): "L"}

_outcome_memo = Memo("outcome")


@memoized(_outcome_memo, lambda g, conv: (g, conv.id))
def outcome(g, conv):
    """Optimal-play outcome pair of ``g`` under ``conv``'s result maps."""
    if is_left_atomic(g):
        ol = conv.nu_left(g.left.adorn)
    else:
        ol = max(outcome(x, conv).right for x in g.left)
    if is_right_atomic(g):
        orr = conv.nu_right(g.right.adorn)
    else:
        orr = min(outcome(x, conv).left for x in g.right)
    return OutcomePair(ol, orr)


_sum_outcome_memo = Memo("sum_outcome")


@memoized(_sum_outcome_memo, lambda g, h, conv: (g, h, conv.id))
def sum_outcome(g, h, conv):
    """``outcome(g + h)`` computed over pairs of subpositions, without
    building the sum."""
    _check_groups(g, h)
    if is_left_atomic(g) and is_left_atomic(h):
        ol = conv.nu_left(g.left.adorn + h.left.adorn)
    else:
        ol = max([sum_outcome(x, h, conv).right for x in g.left_options]
                 + [sum_outcome(g, y, conv).right for y in h.left_options])
    if is_right_atomic(g) and is_right_atomic(h):
        orr = conv.nu_right(g.right.adorn + h.right.adorn)
    else:
        orr = min([sum_outcome(x, h, conv).left for x in g.right_options]
                  + [sum_outcome(g, y, conv).left for y in h.right_options])
    return OutcomePair(ol, orr)


def subpositions(g):
    """All distinct subpositions of ``g``, including ``g`` itself."""
    seen = set()
    stack = [g]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        stack.extend(x.left_options)
        stack.extend(x.right_options)
    return seen


def _atom_str(a):
    return str(a.adorn)


def to_json(g):
    """JSON-ready tree: ``{"left": [...] | {"atom": "3/2"}, "right": ...}``."""
    def side(s):
        if isinstance(s, Atom):
            return {"atom": _atom_str(s)}
        return [to_json(o) for o in s]

    return {"left": side(g.left), "right": side(g.right)}


def from_json(obj, group=TRIVIAL):
    def side(s):
        if isinstance(s, dict):
            return Atom(Fraction(s["atom"]))
        return [from_json(o, group) for o in s]

    return Game(side(obj["left"]), side(obj["right"]), group)
