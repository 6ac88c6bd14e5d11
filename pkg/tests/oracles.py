"""Independent reference implementations used only by the tests.

``moutcome``, ``dual`` and ``compare_dm`` are line-by-line ports of the
Maple procedures Moutcome, Dual and CompareDM for dicot misere play, with
their integer outcome codes:
1 = L, 11 = N, 0 = P, -1 = R. The normal-play brute force decides who wins
a difference game by playing it out, without touching ``np_geq``.
"""

import functools

from absolute_cgt.normal import NormalGame

L_CODE, N_CODE, P_CODE, R_CODE = 1, 11, 0, -1
CODE_SYMBOL = {L_CODE: "L", N_CODE: "N", P_CODE: "P", R_CODE: "R"}


@functools.lru_cache(maxsize=1 << 16)
def moutcome(g):
    # The procedure tests ``G==0``; on literal dicot forms that is the purely
    # atomic position, the only one where neither player can move.
    if g.rank == 0:
        return N_CODE
    j = 0
    for gl in g.left_options:
        if moutcome(gl) in (P_CODE, L_CODE):
            j = 1
    w = 0
    for gr in g.right_options:
        if moutcome(gr) in (P_CODE, R_CODE):
            w = 1
    if j == 0 and w == 0:
        return P_CODE
    if j == 0 and w == 1:
        return R_CODE
    if j == 1 and w == 0:
        return L_CODE
    return N_CODE


def _left_may_move(a, b):
    """The four-way outcome test ``Dual`` applies before adding a Left option."""
    oa, ob = moutcome(a), moutcome(b)
    return (oa == L_CODE
            or (oa == N_CODE and ob in (N_CODE, R_CODE))
            or (oa == P_CODE and ob in (P_CODE, R_CODE))
            or (oa == R_CODE and ob == R_CODE))


@functools.lru_cache(maxsize=None)
def dual(g, h):
    left, right = [], []
    for gr in g.right_options:
        right.append(dual(gr, h))
    for hl in h.left_options:
        right.append(dual(g, hl))
    for gl in g.left_options:
        if _left_may_move(gl, h):
            left.append(dual(gl, h))
    for hr in h.right_options:
        if _left_may_move(g, hr):
            left.append(dual(g, hr))
    return NormalGame(left, right)


@functools.lru_cache(maxsize=None)
def left_wins_moving_second(x):
    """Normal play, by exhaustive play: every Right move has a winning Left reply."""
    return all(any(left_wins_moving_second(xrl) for xrl in xr.left) for xr in x.right)


def compare_dm(g, h):
    a = _left_may_move(g, h) and left_wins_moving_second(dual(g, h))
    b = _left_may_move(h, g) and left_wins_moving_second(dual(h, g))
    if a and b:
        return "G=H"
    if a:
        return "G>H"
    if b:
        return "G<H"
    return "G<>H"


@functools.lru_cache(maxsize=None)
def difference_left_wins_second(a, b):
    """Left wins ``a - b`` moving second, playing ``a`` and the negative of ``b``
    side by side: Right moves in ``a`` or to a Left option of ``b``, Left
    answers in ``a`` or with a Right option of ``b``."""
    for ar in a.right:
        if not difference_left_wins_first(ar, b):
            return False
    for bl in b.left:
        if not difference_left_wins_first(a, bl):
            return False
    return True


@functools.lru_cache(maxsize=None)
def difference_left_wins_first(a, b):
    return (any(difference_left_wins_second(al, b) for al in a.left)
            or any(difference_left_wins_second(a, br) for br in b.right))


def brute_geq(g, h):
    return difference_left_wins_second(g, h)
