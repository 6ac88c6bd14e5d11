"""The Left Provisional Game on ordered pairs of games.

At ``[G, H]`` Right may move to ``[G^R, H]`` or ``[G, H^L]``. Left may move
to ``[G^L, H]`` or ``[G, H^R]``, but only to pairs satisfying the
universe's Proviso. The resulting game is played under the normal-play
convention whatever the universe, so it unfolds into a :class:`NormalGame`.
"""

from dataclasses import dataclass

from ._memo import Memo, memoized
from .game import Game
from .normal import NormalGame
from .notation import format_game
from .universes import UniverseSpec, require_members


@dataclass(frozen=True)
class LpgPosition:
    g: Game
    h: Game
    universe: UniverseSpec

    def __str__(self):
        return "[%s,%s]" % (format_game(self.g), format_game(self.h))

    def pair(self):
        return (self.g, self.h)


def position(u, g, h):
    """A checked root position: both games must belong to ``u``."""
    require_members(u, G=g, H=h)
    return LpgPosition(g, h, u)


def lpg_left_options(p):
    u = p.universe
    out = [LpgPosition(gl, p.h, u) for gl in p.g.left_options if u.proviso_fn(gl, p.h)]
    out += [LpgPosition(p.g, hr, u) for hr in p.h.right_options if u.proviso_fn(p.g, hr)]
    return out


def lpg_right_options(p):
    u = p.universe
    return ([LpgPosition(gr, p.h, u) for gr in p.g.right_options]
            + [LpgPosition(p.g, hl, u) for hl in p.h.left_options])


_unfold_memo = Memo("unfold")


def _pos_key(p):
    return (p.g, p.h, p.universe.id)


@memoized(_unfold_memo, _pos_key)
def unfold(p):
    """The normal-play game tree of ``p``. The root pair's own Proviso is not
    checked here; :func:`compare.geq` does that."""
    return NormalGame([unfold(x) for x in lpg_left_options(p)],
                      [unfold(x) for x in lpg_right_options(p)])


_maintain_memo = Memo("maintain")


@memoized(_maintain_memo, _pos_key)
def maintain(p):
    """Every Right move has a Left reply that again maintains."""
    return all(any(maintain(rl) for rl in lpg_left_options(r)) for r in lpg_right_options(p))


def maintaining_reply(p):
    """The first Left option of ``p`` (in option order) that maintains, if any."""
    return next((x for x in lpg_left_options(p) if maintain(x)), None)


def to_dot(p, max_nodes=5000):
    """Graphviz source for the full game tree rooted at ``p``, with Left moves
    drawn to the lower left and Right moves to the lower right."""
    lines = ["digraph lpg {", '  node [shape=plaintext];']
    counter = [0]

    def visit(x):
        nid = "n%d" % counter[0]
        counter[0] += 1
        if counter[0] > max_nodes:
            raise ValueError("tree has more than %d nodes" % max_nodes)
        lines.append('  %s [label="%s"];' % (nid, _escape(str(x))))
        for child in lpg_left_options(x):
            cid = visit(child)
            lines.append('  %s -> %s [label="L", tailport=sw];' % (nid, cid))
        for child in lpg_right_options(x):
            cid = visit(child)
            lines.append('  %s -> %s [label="R", tailport=se];' % (nid, cid))
        return nid

    visit(p)
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree(p):
    """Nested ``(position, left_subtrees, right_subtrees)`` for plotting."""
    return (p, [tree(x) for x in lpg_left_options(p)],
            [tree(x) for x in lpg_right_options(p)])


def _escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')
