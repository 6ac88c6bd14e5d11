"""Left maintenance strategies as arrows.

A strategy for the Left Provisional Game ``[G, H]`` is a table from play
histories to Left replies. A history is a tuple of positions starting at the
root; a key always ends with a position Right has just moved to, and the
value is the position Left replies with. Strategies are deterministic: one
reply per key.

:func:`compose` builds the swivel-chair strategy for ``[G, H]`` out of
strategies for ``[G, J]`` and ``[J, H]``, bouncing each Right threat
between the two side boards until the reply lands in ``G`` or in ``H``.
"""

import itertools
from dataclasses import dataclass, field
from types import MappingProxyType

from .compare import geq
from .lpg import (LpgPosition, lpg_left_options, lpg_right_options, maintain,
                  maintaining_reply, position)


class StrategyError(ValueError):
    pass


class CompositionError(StrategyError):
    """The two strategies do not share a middle game or a universe."""


@dataclass(frozen=True)
class MaintenanceStrategy:
    root: LpgPosition
    table: MappingProxyType
    max_bounces: int = field(default=0, compare=False)

    @property
    def universe(self):
        return self.root.universe

    def respond(self, history):
        return self.table.get(tuple(history))

    def __len__(self):
        return len(self.table)


def _freeze(root, table, max_bounces=0):
    return MaintenanceStrategy(root, MappingProxyType(dict(table)), max_bounces)


def _walk(root, reply):
    """Build a table by following ``reply(history_with_right_move)`` over every
    Right move at every reachable Right-to-move position."""
    table = {}
    stack = [(root,)]
    while stack:
        hist = stack.pop()
        for r in lpg_right_options(hist[-1]):
            key = hist + (r,)
            resp = reply(key)
            if resp is None:
                raise StrategyError("no reply to %s" % r)
            table[key] = resp
            stack.append(key + (resp,))
    return table


def extract_strategy(u, g, h):
    """A strategy for ``[g, h]`` replying with the first maintaining Left
    option, or None when Left cannot maintain."""
    root = position(u, g, h)
    if not maintain(root):
        return None
    return _freeze(root, _walk(root, lambda hist: maintaining_reply(hist[-1])))


def mimic(u, g):
    """The copy-cat strategy on ``[g, g]``."""
    root = position(u, g, g)

    def reply(hist):
        r = hist[-1]
        before = hist[-2]
        if r.g != before.g:
            return LpgPosition(r.g, r.g, u)
        return LpgPosition(r.h, r.h, u)

    return _freeze(root, _walk(root, reply))


def compose(g_strat, f_strat):
    """Swivel-chair composite of ``g_strat`` on ``[G, J]`` and ``f_strat`` on
    ``[J, H]``, a strategy on ``[G, H]``."""
    u = g_strat.universe
    if f_strat.universe != u:
        raise CompositionError("strategies come from different universes")
    if g_strat.root.h != f_strat.root.g:
        raise CompositionError("middle games differ: %s vs %s"
                               % (g_strat.root.h, f_strat.root.g))
    middle = g_strat.root.h
    cap = 2 * middle.rank + 4
    root = LpgPosition(g_strat.root.g, f_strat.root.h, u)
    table = {}
    worst = 0
    stack = [((root,), (g_strat.root,), (f_strat.root,))]
    while stack:
        hist, b1, b2 = stack.pop()
        here = hist[-1]
        for r in lpg_right_options(here):
            if r.g != here.g:
                b1n = b1 + (LpgPosition(r.g, b1[-1].h, u),)
                b2n = b2
                active = 1
            else:
                b1n = b1
                b2n = b2 + (LpgPosition(b2[-1].g, r.h, u),)
                active = 2
            bounces = 0
            while True:
                bounces += 1
                if bounces > cap:
                    raise RuntimeError("swivel bounce exceeded %d steps" % cap)
                if active == 1:
                    resp = g_strat.respond(b1n)
                    if resp is None:
                        raise StrategyError("left strategy has no reply after %s" % b1n[-1])
                    moved_in_g = resp.g != b1n[-1].g
                    b1n = b1n + (resp,)
                    if moved_in_g:
                        answer = LpgPosition(resp.g, r.h, u)
                        break
                    b2n = b2n + (LpgPosition(resp.h, r.h, u),)
                    active = 2
                else:
                    resp = f_strat.respond(b2n)
                    if resp is None:
                        raise StrategyError("right strategy has no reply after %s" % b2n[-1])
                    moved_in_h = resp.h != b2n[-1].h
                    b2n = b2n + (resp,)
                    if moved_in_h:
                        answer = LpgPosition(r.g, resp.h, u)
                        break
                    b1n = b1n + (LpgPosition(r.g, resp.g, u),)
                    active = 1
            worst = max(worst, bounces)
            key = hist + (r,)
            table[key] = answer
            stack.append((key + (answer,), b1n, b2n))
    return _freeze(root, table, worst)


def validate_strategy(s):
    """Totality and legality over every play consistent with ``s``."""
    stack = [(s.root,)]
    while stack:
        hist = stack.pop()
        for r in lpg_right_options(hist[-1]):
            key = hist + (r,)
            resp = s.table.get(key)
            if resp is None or resp not in lpg_left_options(r):
                return False
            stack.append(key + (resp,))
    return True


def response_differences(s, t):
    """Right move sequences after which ``s`` and ``t`` reply differently."""
    if s.root != t.root:
        raise ValueError("strategies have different roots")
    diffs = []
    stack = [(s.root,)]
    while stack:
        hist = stack.pop()
        for r in lpg_right_options(hist[-1]):
            key = hist + (r,)
            a, b = s.table.get(key), t.table.get(key)
            if a != b:
                diffs.append((key, a, b))
            elif a is not None:
                stack.append(key + (a,))
    return diffs


def observationally_equal(s, t):
    return not response_differences(s, t)


def right_sequences(s):
    """Every maximal play under ``s`` as a tuple of positions."""
    out = []
    stack = [(s.root,)]
    while stack:
        hist = stack.pop()
        moves = lpg_right_options(hist[-1])
        if not moves:
            out.append(hist)
        for r in moves:
            resp = s.table.get(hist + (r,))
            if resp is None:
                out.append(hist + (r,))
            else:
                stack.append(hist + (r, resp))
    return out


def format_table(s):
    lines = []
    for key in sorted(s.table, key=lambda k: (len(k), [str(p) for p in k])):
        depth = (len(key) - 2) // 2
        lines.append("%s%s -> %s" % ("  " * depth, key[-1], s.table[key]))
    return "\n".join(lines)


@dataclass
class LawReport:
    objects: int = 0
    arrows: int = 0
    compositions: int = 0
    invalid_compositions: list = field(default_factory=list)
    associativity_checks: int = 0
    associativity_failures: list = field(default_factory=list)
    identity_checks: int = 0
    identity_failures: list = field(default_factory=list)
    max_bounces: int = 0

    @property
    def ok(self):
        return not (self.invalid_compositions or self.associativity_failures
                    or self.identity_failures)

    def summary(self):
        return "\n".join([
            "objects: %d" % self.objects,
            "arrows (pairs with G >= H): %d" % self.arrows,
            "compositions: %d, invalid: %d" % (self.compositions, len(self.invalid_compositions)),
            "associativity checks: %d, failures: %d"
            % (self.associativity_checks, len(self.associativity_failures)),
            "identity checks: %d, failures: %d"
            % (self.identity_checks, len(self.identity_failures)),
            "max swivel bounces: %d" % self.max_bounces,
            "laws hold" if self.ok else "LAWS VIOLATED",
        ])


def verify_laws(u, objects):
    """Check composition validity, associativity and identity on every
    composable configuration of extracted strategies among ``objects``."""
    report = LawReport(objects=len(objects))
    arrows = {}
    for a, b in itertools.product(objects, repeat=2):
        if geq(u, a, b):
            arrows[a, b] = extract_strategy(u, a, b)
    report.arrows = len(arrows)

    composed = {}
    for (a, b), s in arrows.items():
        for c in objects:
            t = arrows.get((b, c))
            if t is None:
                continue
            st = compose(s, t)
            composed[a, b, c] = st
            report.compositions += 1
            report.max_bounces = max(report.max_bounces, st.max_bounces)
            if not validate_strategy(st):
                report.invalid_compositions.append((a, b, c))

    for (a, b, c), st in composed.items():
        for d in objects:
            t3 = arrows.get((c, d))
            if t3 is None:
                continue
            left = compose(st, t3)
            right = compose(arrows[a, b], composed[b, c, d])
            report.associativity_checks += 1
            if not observationally_equal(left, right):
                report.associativity_failures.append((a, b, c, d))

    mimics = {x: mimic(u, x) for x in objects}
    for (a, b), s in arrows.items():
        report.identity_checks += 2
        if not observationally_equal(compose(mimics[a], s), s):
            report.identity_failures.append(("left", a, b))
        if not observationally_equal(compose(s, mimics[b]), s):
            report.identity_failures.append(("right", a, b))
    return report
