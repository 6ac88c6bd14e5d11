"""Brace notation for game forms and normal-play values.

Grammar (whitespace is ignored)::

    game  := name | number | '{' body '}' | '<' body '>'
    body  := list (bars list)*          # bars: a run of '|' characters
    list  := empty | item (',' item)*
    item  := game | '^' rational         # '^q' is an atom with adorn q

A body with several bar runs uses slash notation: the longest run splits the
game, so ``{a||b|c}`` is ``{a|{b|c}}``. An empty side is the zero atom.
Adorned atoms and bare numbers are only accepted in scoring mode, where a
number ``q`` names the purely atomic ``<^q|^q>``.
"""

import re
from fractions import Fraction

from .game import RATIONAL, TRIVIAL, Atom, Game, atomic, is_purely_atomic

TRIVIAL_MODE = "trivial"
SCORING_MODE = "scoring"


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__("%s at position %d: %r" % (message, pos, text))
        self.text = text
        self.pos = pos


def _g(left, right):
    return Game(left, right)


_ZERO = Game()
_STAR = _g([_ZERO], [_ZERO])

# Literal forms used by the dicot misere examples. ``up*`` and ``mup*`` are
# the same form.
LITERALS = {
    "0": _ZERO,
    "*": _STAR,
    "*2": _g([_ZERO, _STAR], [_ZERO, _STAR]),
    "↑": _g([_ZERO], [_STAR]),
    "↓": _g([_STAR], [_ZERO]),
    "↑*": _g([_ZERO, _STAR], [_ZERO]),
    "↓*": _g([_ZERO], [_ZERO, _STAR]),
    "⋏↑": _g([_ZERO, _STAR], [_STAR]),
    "mown": _g([_STAR], [_ZERO, _STAR]),
    "⋏↑*": _g([_ZERO, _STAR], [_ZERO]),
    "mown*": _g([_ZERO], [_ZERO, _STAR]),
}
ALIASES = {"up": "↑", "down": "↓", "up*": "↑*", "down*": "↓*",
           "mup": "⋏↑", "mup*": "⋏↑*"}

# Preferred display names, for the rank-2 dicot misere classes.
DISPLAY_NAMES = {
    LITERALS["0"]: "0", LITERALS["*"]: "*", LITERALS["*2"]: "*2",
    LITERALS["↑"]: "↑", LITERALS["↓"]: "↓",
    LITERALS["⋏↑"]: "⋏↑", LITERALS["⋏↑*"]: "⋏↑*",
    LITERALS["mown"]: "mown", LITERALS["mown*"]: "mown*",
}
ASCII_DISPLAY = {"↑": "up", "↓": "down", "⋏↑": "mup", "⋏↑*": "mup*"}

_TOKEN = re.compile(r"\s*(?:(?P<open>[{<])|(?P<close>[}>])|(?P<bars>\|+)|(?P<comma>,)"
                    r"|(?P<caret>\^)|(?P<word>[^\s{}<>|,^]+))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, mode, value_mode=False):
        if mode not in (TRIVIAL_MODE, SCORING_MODE):
            raise ValueError("mode must be 'trivial' or 'scoring'")
        self.text = text
        self.mode = mode
        self.value_mode = value_mode
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError("expected %s, found %r" % (kind, tok[1] or "end of input"),
                             self.text, tok[2])
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def parse(self):
        g = self.game()
        if self.peek()[0] != "end":
            raise self.error("trailing input")
        return g

    def game(self):
        kind, val, pos = self.peek()
        if kind == "word":
            self.take()
            return self.named(val, pos)
        if kind == "open":
            self.take()
            closer = "}" if val == "{" else ">"
            if val == "<" and self.mode != SCORING_MODE:
                raise self.error("'<...>' atoms are only allowed in scoring mode")
            g = self.body()
            tok = self.take("close")
            if tok[1] != closer:
                raise ParseError("mismatched bracket %r" % tok[1], self.text, tok[2])
            return g
        raise self.error("expected a game, found %r" % (val or "end of input"))

    def named(self, word, pos):
        name = ALIASES.get(word, word)
        if self.value_mode:
            from .normal import ASCII_NAMES, NAMED

            name = ASCII_NAMES.get(word, name)
            if name in NAMED:
                return NAMED[name]
            raise ParseError("unknown value name %r" % word, self.text, pos)
        if self.mode == SCORING_MODE:
            try:
                q = Fraction(word)
            except (ValueError, ZeroDivisionError):
                raise ParseError("unknown name %r" % word, self.text, pos) from None
            return atomic(q, q, group=RATIONAL)
        if name in LITERALS:
            return LITERALS[name]
        raise ParseError("unknown name %r" % word, self.text, pos)

    def body(self):
        # a flat sequence: side, bars, side, bars, ..., side
        parts = [self.side()]
        while self.peek()[0] == "bars":
            tok = self.take()
            parts.append(tok)
            parts.append(self.side())
        if len(parts) == 1:
            raise self.error("expected '|' inside braces")
        return self.assemble(parts)

    def assemble(self, parts):
        if len(parts) == 1:
            return parts[0]
        seps = parts[1::2]
        widest = max(len(t[1]) for t in seps)
        at = [k for k, t in enumerate(seps) if len(t[1]) == widest]
        if len(at) > 1:
            raise ParseError("ambiguous bars", self.text, seps[at[1]][2])
        k = 2 * at[0] + 1
        left = self.as_side(parts[:k])
        right = self.as_side(parts[k + 1:])
        return self.make(left, right)

    def as_side(self, parts):
        if len(parts) == 1:
            return parts[0]
        return [self.assemble(parts)]

    def side(self):
        items = []
        kind = self.peek()[0]
        if kind in ("bars", "close"):
            return items
        while True:
            if self.peek()[0] == "caret":
                tok = self.take()
                if self.mode != SCORING_MODE or self.value_mode:
                    raise ParseError("adorned atoms are only allowed in scoring mode",
                                     self.text, tok[2])
                word = self.take("word")
                try:
                    items.append(Atom(Fraction(word[1])))
                except (ValueError, ZeroDivisionError):
                    raise ParseError("bad adorn %r" % word[1], self.text, word[2]) from None
            else:
                items.append(self.game())
            if self.peek()[0] != "comma":
                return items
            self.take()

    def make(self, left, right):
        if self.value_mode:
            from .normal import NormalGame

            return NormalGame(left, right)
        group = RATIONAL if self.mode == SCORING_MODE else TRIVIAL
        return Game(self.fix_side(left), self.fix_side(right), group)

    def fix_side(self, items):
        atoms = [x for x in items if isinstance(x, Atom)]
        if atoms and len(items) > 1:
            raise ParseError("an atom must be the whole side", self.text, 0)
        return atoms[0] if atoms else items


def parse_game(text, mode=TRIVIAL_MODE):
    """Parse a literal game form; the result is normalized."""
    return _Parser(text, mode).parse()


def parse_value(text):
    """Parse a normal-play value such as ``{↑||0,↓*|0,↓*}``."""
    return _Parser(text, TRIVIAL_MODE, value_mode=True).parse()


def format_game(g, names=True, ascii=False):
    """Render a form in brace notation. Trivial-group forms use ``{L|R}``;
    rational ones use ``<L|R>`` with ``^q`` for atoms."""
    if g.group == RATIONAL:
        return _fmt_scoring(g)
    return _fmt_trivial(g, names, ascii)


def _fmt_trivial(g, names, ascii):
    if g.rank == 0:
        return "0"
    if names and g in DISPLAY_NAMES:
        name = DISPLAY_NAMES[g]
        return ASCII_DISPLAY.get(name, name) if ascii else name
    if g == _STAR:
        return "*"
    left = ",".join(_fmt_trivial(o, names, ascii) for o in g.left_options)
    right = ",".join(_fmt_trivial(o, names, ascii) for o in g.right_options)
    return "{%s|%s}" % (left, right)


def _fmt_scoring(g):
    def side(s):
        if isinstance(s, Atom):
            return "^%s" % s.adorn
        return ",".join(_fmt_scoring(o) for o in s)

    if is_purely_atomic(g) and g.left == g.right:
        return str(g.left.adorn)
    return "<%s|%s>" % (side(g.left), side(g.right))
