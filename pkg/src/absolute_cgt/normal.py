"""Plain normal-play games: order, sums, negation and canonical forms.

Left Provisional Games unfold into these. A :class:`NormalGame` has two
(possibly empty) option tuples; a player with no option loses.
"""

from ._memo import Memo, memoized
from .game import Atom, TRIVIAL, GroupMismatch


class NormalGame:
    __slots__ = ("left", "right", "_key", "_hash")

    def __init__(self, left=(), right=()):
        left = tuple(sorted(set(left), key=_key))
        right = tuple(sorted(set(right), key=_key))
        for o in left + right:
            if not isinstance(o, NormalGame):
                raise TypeError("option %r is not a NormalGame" % (o,))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        birthday = 1 + max((o._key[0] for o in left + right), default=-1)
        object.__setattr__(self, "_key", (birthday, tuple(o._key for o in left),
                                          tuple(o._key for o in right)))
        object.__setattr__(self, "_hash", hash(self._key))

    def __setattr__(self, name, value):
        raise AttributeError("NormalGame is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NormalGame):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __reduce__(self):
        return (NormalGame, (self.left, self.right))

    @property
    def birthday(self):
        return self._key[0]

    def __repr__(self):
        return "NormalGame(%s)" % format_value(self)

    def __str__(self):
        return format_value(self)


def _key(g):
    return g._key


def from_game(g):
    """View a trivial-group form as a normal-play game (atoms become empty sides)."""
    if g.group != TRIVIAL:
        raise GroupMismatch("only trivial-group forms have a normal-play reading")
    return NormalGame([from_game(x) for x in g.left_options],
                      [from_game(x) for x in g.right_options])


def to_game(g):
    """The trivial-group form with the same game tree as ``g``."""
    from .game import Game

    return Game([to_game(x) for x in g.left] or Atom(0),
                [to_game(x) for x in g.right] or Atom(0))


_geq_memo = Memo("np_geq")


@memoized(_geq_memo, lambda g, h: (g, h))
def np_geq(g, h):
    """``g >= h``: no Right option of g is <= h and no Left option of h is >= g."""
    if any(np_geq(h, gr) for gr in g.right):
        return False
    if any(np_geq(hl, g) for hl in h.left):
        return False
    return True


def np_leq(g, h):
    return np_geq(h, g)


def np_eq(g, h):
    return np_geq(g, h) and np_geq(h, g)


def np_gt(g, h):
    return np_geq(g, h) and not np_geq(h, g)


def np_fuzzy(g, h):
    return not np_geq(g, h) and not np_geq(h, g)


_second_memo = Memo("np_second_player")


@memoized(_second_memo, lambda g: g)
def np_geq_zero_second_player(g):
    """Left wins ``g`` when Right moves first."""
    return all(any(np_geq_zero_second_player(grl) for grl in gr.left) for gr in g.right)


_np_sum_memo = Memo("np_sum")


@memoized(_np_sum_memo, lambda g, h: (g, h))
def np_sum(g, h):
    return NormalGame([np_sum(x, h) for x in g.left] + [np_sum(g, y) for y in h.left],
                      [np_sum(x, h) for x in g.right] + [np_sum(g, y) for y in h.right])


_neg_memo = Memo("np_negate")


@memoized(_neg_memo, lambda g: g)
def np_negate(g):
    return NormalGame([np_negate(x) for x in g.right], [np_negate(x) for x in g.left])


def np_difference(g, h):
    return np_sum(g, np_negate(h))


_canon_memo = Memo("canonical_form")


@memoized(_canon_memo, lambda g: g)
def canonical_form(g):
    """Simplest form of ``g``: dominated options deleted, reversible options
    bypassed, recursively."""
    left = {canonical_form(x) for x in g.left}
    right = {canonical_form(x) for x in g.right}
    while True:
        new_left = _bypass(left, g, side="left")
        new_right = _bypass(right, g, side="right")
        new_left = _undominated(new_left, better=np_geq)
        new_right = _undominated(new_right, better=np_leq)
        if new_left == left and new_right == right:
            break
        left, right = new_left, new_right
    return NormalGame(left, right)


def _bypass(options, g, side):
    out = set()
    for x in options:
        if side == "left":
            rev = next((xr for xr in sorted(x.right) if np_leq(xr, g)), None)
            out.update(rev.left if rev is not None else (x,))
        else:
            rev = next((xl for xl in sorted(x.left) if np_geq(xl, g)), None)
            out.update(rev.right if rev is not None else (x,))
    return out


def _undominated(options, better):
    # options are canonical, so equal values are already identical forms
    return {x for x in options if not any(y != x and better(y, x) for y in options)}


def integer(n):
    g = ZERO
    for _ in range(abs(n)):
        g = NormalGame([g], []) if n > 0 else NormalGame([], [g])
    return g


def nimber(n):
    opts = [nimber(k) for k in range(n)]
    return NormalGame(opts, opts)


ZERO = NormalGame()
ONE = NormalGame([ZERO], [])
STAR = NormalGame([ZERO], [ZERO])
STAR2 = NormalGame([ZERO, STAR], [ZERO, STAR])
UP = NormalGame([ZERO], [STAR])
DOWN = NormalGame([STAR], [ZERO])
UP_STAR = NormalGame([ZERO, STAR], [ZERO])
DOWN_STAR = NormalGame([ZERO], [ZERO, STAR])
DOUBLE_UP = NormalGame([ZERO], [UP_STAR])
DOUBLE_UP_STAR = NormalGame([ZERO], [UP])
DOUBLE_DOWN = np_negate(DOUBLE_UP)
DOUBLE_DOWN_STAR = np_negate(DOUBLE_UP_STAR)

NAMED = {
    "0": ZERO, "*": STAR, "*2": STAR2, "*3": nimber(3),
    "1": ONE, "-1": np_negate(ONE), "2": integer(2), "-2": integer(-2),
    "↑": UP, "↓": DOWN, "↑*": UP_STAR, "↓*": DOWN_STAR,
    "⇑": DOUBLE_UP, "⇓": DOUBLE_DOWN, "⇑*": DOUBLE_UP_STAR, "⇓*": DOUBLE_DOWN_STAR,
}
ASCII_NAMES = {"up": "↑", "down": "↓", "up*": "↑*", "down*": "↓*",
               "dup": "⇑", "ddown": "⇓", "dup*": "⇑*", "ddown*": "⇓*"}

_names_by_form = {canonical_form(v): k for k, v in NAMED.items()}


def value_name(g):
    """The conventional name of ``g`` if it is (literally) a named canonical form."""
    return _names_by_form.get(g)


def format_value(g):
    """Render in brace notation with slashes for single nested options:
    ``{a||b|c}`` stands for ``{a|{b|c}}``."""
    return _fmt(g)[0]


def _fmt(g):
    name = value_name(g)
    if name is not None:
        return name, 0
    lstr, lbars = _fmt_side(g.left)
    rstr, rbars = _fmt_side(g.right)
    bars = max(lbars, rbars) + 1
    inner = "%s%s%s" % (lstr, "|" * bars, rstr)
    return "{%s}" % inner, bars


def _fmt_side(options):
    if len(options) == 1 and value_name(options[0]) is None:
        s, bars = _fmt(options[0])
        return s[1:-1], bars
    return ",".join(_fmt(o)[0] for o in options), 0
