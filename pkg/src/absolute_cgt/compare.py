"""Deciding ``G >= H`` in a universe, plus independent checks.

:func:`geq` is the decision path: the Proviso holds for ``[G, H]`` and Left
wins the Left Provisional Game moving second. :func:`geq_cnp_oracle` decides
the same relation by the direct mutual recursion on option pairs, and
:func:`distinguish` searches for a concrete game ``X`` separating ``G + X``
from ``H + X``; both exist for cross-checking.
"""

import enum

from ._memo import Memo, memoized
from .game import outcome, sum_outcome
from .lpg import LpgPosition, maintain, unfold
from .normal import canonical_form, format_value
from .universes import require_members


class Relation(enum.Enum):
    EQ = "G=H"
    GT = "G>H"
    LT = "G<H"
    INCOMPARABLE = "G<>H"

    def __str__(self):
        return self.value


_geq_memo = Memo("geq")


@memoized(_geq_memo, lambda u, g, h: (u.id, g, h))
def _geq(u, g, h):
    return bool(u.proviso_fn(g, h)) and maintain(LpgPosition(g, h, u))


def geq(u, g, h):
    """``g >= h`` modulo ``u``."""
    require_members(u, G=g, H=h)
    return _geq(u, g, h)


def relation(u, g, h):
    a = geq(u, g, h)
    b = geq(u, h, g)
    if a and b:
        return Relation.EQ
    if a:
        return Relation.GT
    if b:
        return Relation.LT
    return Relation.INCOMPARABLE


_cnp_memo = Memo("geq_cnp")


@memoized(_cnp_memo, lambda u, g, h: (u.id, g, h))
def _cnp(u, g, h):
    if not u.proviso_fn(g, h):
        return False
    for gr in g.right_options:
        if not (any(_cnp(u, gr, hr) for hr in h.right_options)
                or any(_cnp(u, grl, h) for grl in gr.left_options)):
            return False
    for hl in h.left_options:
        if not (any(_cnp(u, gl, hl) for gl in g.left_options)
                or any(_cnp(u, g, hlr) for hlr in hl.right_options)):
            return False
    return True


def geq_cnp_oracle(u, g, h):
    """``g >= h`` via Proviso plus the Common Normal Part recursion
    (each Right threat is answered in the same component or the other one)."""
    require_members(u, G=g, H=h)
    return _cnp(u, g, h)


def distinguish(u, g, h, max_rank, subset_cap=None):
    """A member ``X`` of rank <= ``max_rank`` with ``o_L(g+X) < o_L(h+X)`` or
    ``o_R(g+X) < o_R(h+X)``, or None when the bounded search finds none."""
    from .lattice import iter_forms

    for x in iter_forms(u, max_rank, subset_cap=subset_cap):
        a = sum_outcome(g, x, u)
        b = sum_outcome(h, x, u)
        if a.left < b.left or a.right < b.right:
            return x
    return None


def explain(u, g, h):
    """Why ``geq(u, g, h)`` holds or fails, as a dict of printable fields."""
    require_members(u, G=g, H=h)
    og, oh = outcome(g, u), outcome(h, u)
    prov = bool(u.proviso_fn(g, h))
    p = LpgPosition(g, h, u)
    value = canonical_form(unfold(p))
    maint = maintain(p)
    if not prov:
        reason = "Proviso fails: " + _proviso_reason(u, g, h, og, oh)
    elif not maint:
        reason = "Maintenance fails: Right wins the Left Provisional Game moving first"
    else:
        reason = "Proviso holds and Left wins the Left Provisional Game moving second"
    return {
        "geq": prov and maint,
        "proviso": prov,
        "maintain": maint,
        "outcome_g": str(og),
        "outcome_h": str(oh),
        "lpg_value": format_value(value),
        "reason": reason,
    }


def _proviso_reason(u, g, h, og, oh):
    if u.id == "free-misere":
        return "the atomic sides of G and H are not compatible"
    return "o(G)=%s ≱ o(H)=%s" % (og, oh)
