"""Universe descriptors: winning convention, membership and Proviso.

Each built-in universe carries a *constructive* Proviso, a test on the two
games' own outcomes or atomic sides. The quantified form (compare against
every atomic distinguishing game) is available only as the bounded search
:func:`proviso_bruteforce`, which serves as a test oracle.

User universes may be built directly from :class:`UniverseSpec`. The LPG
decision procedure is only correct for universes that are parental and
dense; that is the caller's responsibility and is not checked here.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .game import (RATIONAL, TRIVIAL, Game, is_dicot, is_left_atomic,
                   is_right_atomic, outcome, sum_outcome)


class NotAMember(ValueError):
    """A game was used in a universe it does not belong to."""


@dataclass(frozen=True, eq=False)
class UniverseSpec:
    id: str
    group: str
    nu_left: Callable
    nu_right: Callable
    member: Callable[[Game], bool]
    proviso_fn: Callable[[Game, Game], bool] = field(repr=False)
    dicot: bool = False
    description: str = ""

    def __post_init__(self):
        if self.group not in (TRIVIAL, RATIONAL):
            raise ValueError("unknown adorn group %r" % (self.group,))
        if self.group == RATIONAL:
            # |A| > 1 forces a single result map; spot-check it.
            samples = [Fraction(n, 2) for n in range(-4, 5)]
            if any(self.nu_left(a) != self.nu_right(a) for a in samples):
                raise ValueError("nu_left and nu_right must agree over a non-trivial group")
            vals = [self.nu_left(a) for a in samples]
            if vals != sorted(vals):
                raise ValueError("result maps must be order preserving")

    def __hash__(self):
        return hash(self.id)

    def __eq__(self, other):
        return isinstance(other, UniverseSpec) and self.id == other.id

    def __str__(self):
        return self.id


def _free_misere_proviso(g, h):
    if is_left_atomic(h) and not is_left_atomic(g):
        return False
    if is_right_atomic(g) and not is_right_atomic(h):
        return False
    return True


def _is_trivial(g):
    return g.group == TRIVIAL


def _is_dicot_trivial(g):
    return g.group == TRIVIAL and is_dicot(g)


def _is_dicot_rational(g):
    return g.group == RATIONAL and is_dicot(g)


NORMAL = UniverseSpec(
    id="normal",
    group=TRIVIAL,
    nu_left=lambda a: -1,
    nu_right=lambda a: 1,
    member=_is_trivial,
    proviso_fn=lambda g, h: True,
    description="normal play: the player who cannot move loses",
)

DICOT_MISERE = UniverseSpec(
    id="dicot-misere",
    group=TRIVIAL,
    nu_left=lambda a: 1,
    nu_right=lambda a: -1,
    member=_is_dicot_trivial,
    proviso_fn=lambda g, h: outcome(g, DICOT_MISERE) >= outcome(h, DICOT_MISERE),
    dicot=True,
    description="dicot misere play: the player who cannot move wins",
)

FREE_MISERE = UniverseSpec(
    id="free-misere",
    group=TRIVIAL,
    nu_left=lambda a: 1,
    nu_right=lambda a: -1,
    member=_is_trivial,
    proviso_fn=_free_misere_proviso,
    description="free misere play over all trivial-group forms",
)

DICOT_SCORING = UniverseSpec(
    id="dicot-scoring",
    group=RATIONAL,
    nu_left=lambda a: a,
    nu_right=lambda a: a,
    member=_is_dicot_rational,
    proviso_fn=lambda g, h: outcome(g, DICOT_SCORING) >= outcome(h, DICOT_SCORING),
    dicot=True,
    description="dicot scoring play with exact rational scores",
)

UNIVERSES = {u.id: u for u in (NORMAL, DICOT_MISERE, FREE_MISERE, DICOT_SCORING)}


def get_universe(name):
    try:
        return UNIVERSES[name]
    except KeyError:
        raise KeyError("unknown universe %r; choose from %s"
                       % (name, ", ".join(UNIVERSES))) from None


def membership(u, g):
    return bool(u.member(g))


def require_members(u, **games):
    for name, g in games.items():
        if not u.member(g):
            raise NotAMember("%s = %s is not a member of the %s universe" % (name, g, u.id))


def proviso(u, g, h):
    """Constructive Proviso verdict for the ordered pair ``[g, h]``."""
    require_members(u, G=g, H=h)
    return bool(u.proviso_fn(g, h))


def proviso_bruteforce(u, g, h, max_rank, subset_cap=None):
    """Search for an atomic game refuting the Proviso of ``[g, h]``.

    Returns False as soon as some left-atomic member ``X`` of rank at most
    ``max_rank`` has ``o_L(g+X) < o_L(h+X)``, or some right-atomic one has
    ``o_R(g+X) < o_R(h+X)``. True only means no witness exists at this bound.
    """
    return proviso_witness(u, g, h, max_rank, subset_cap) is None


def proviso_witness(u, g, h, max_rank, subset_cap=None):
    from .lattice import iter_forms

    for x in iter_forms(u, max_rank, subset_cap=subset_cap, left_atomic=True):
        if sum_outcome(g, x, u).left < sum_outcome(h, x, u).left:
            return x
    for x in iter_forms(u, max_rank, subset_cap=subset_cap, right_atomic=True):
        if sum_outcome(g, x, u).right < sum_outcome(h, x, u).right:
            return x
    return None
