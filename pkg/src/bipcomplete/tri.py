"""Completions with exactly one (or no) augmented 3-dicycle.

Everything here works on the D_X form of an acyclic bipartite tournament:
:func:`~bipcomplete.dx.dx_order` lists the vertices as x_1 < ... < x_n, and the
sequence of their parities decides which targets are reachable. The witness
for both "exactly one" targets orients every same-side pair forward along that
order except x_l, x_{l+2}, which is reversed.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .dx import IntegerSet, build_dx, dx_order
from .graph import (
    BipartiteTournament,
    Completion,
    GraphError,
    Side,
    Tournament,
    VertexId,
    ordered_completion,
)

ParityPattern = tuple[int, ...]
"""One entry per vertex in D_X order: 1 for odd, 0 for even; always starts with 1."""


def build_trn(n: int, r: int) -> Tournament:
    """T^r_n on vertices 1..n (stored 0-based): all arcs forward except r+2 -> r."""
    if n < 3 or not 1 <= r <= n - 2:
        raise GraphError(f"need n >= 3 and 1 <= r <= n-2, got n={n}, r={r}")
    arcs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (r - 1, r + 1)]
    arcs.append((r + 1, r - 1))
    return Tournament.from_arcs(n, arcs)


def transitive_tournament(n: int) -> Tournament:
    return Tournament.from_arcs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def has_unique_dicycle(t: Tournament | Completion) -> bool:
    """True iff the tournament has exactly one dicycle of any length.

    A dicycle of length >= 4 sits in a strong component of order >= 4, which
    holds a 4-dicycle as well as several 3-dicycles, so one 3-dicycle and no
    4-dicycle is exactly the unique-dicycle condition.
    """
    if isinstance(t, Completion):
        t = t.to_tournament()
    if t.n < 3:
        raise GraphError("tournament order must be at least 3")
    if len(t.dicycles(3)) != 1:
        return False
    return t.n < 4 or not t.dicycles(4)


def outdegree_gap_pair(d: BipartiteTournament) -> Optional[tuple[VertexId, VertexId]]:
    """A same-side pair (u1, u2) with outdeg(u1) = outdeg(u2) + 1."""
    for side in (Side.ONE, Side.TWO):
        vs = d.vertices(side)
        deg = {v: d.out_degree(v) for v in vs}
        for a in vs:
            for b in vs:
                if deg[a] == deg[b] + 1:
                    return a, b
    return None


def pattern_of_order(order: Sequence[VertexId]) -> ParityPattern:
    first = order[0].side
    return tuple(1 if v.side is first else 0 for v in order)


def pattern_of_set(xs: IntegerSet) -> ParityPattern:
    xs = sorted(xs)
    return tuple(1 if (x - xs[0]) % 2 == 0 else 0 for x in xs)


def parity_pattern(d: BipartiteTournament) -> Optional[ParityPattern]:
    order = dx_order(d)
    return None if order is None else pattern_of_order(order)


def parity_pattern_indices(p: Sequence[int]) -> tuple[set[int], set[int]]:
    """1-based starts l of (a, b, a) windows and of (a, a, a) windows."""
    aba, aaa = set(), set()
    for l in range(1, len(p) - 1):
        a, b, c = p[l - 1], p[l], p[l + 1]
        if a == c != b:
            aba.add(l)
        elif a == b == c:
            aaa.add(l)
    return aba, aaa


_SPECIAL_RESIDUES = {1: (1, 3, 4, 0), 2: (1, 2, 4, 5)}


def build_special_X(i: int, n: int) -> IntegerSet:
    """The n smallest members of {6m-5, 6m-3, 6m-2, 6m} (i=1) or {6m-5, 6m-4, 6m-2, 6m-1} (i=2)."""
    if i not in _SPECIAL_RESIDUES:
        raise GraphError(f"family index must be 1 or 2, got {i}")
    if n < 1:
        raise GraphError("n must be positive")
    res = _SPECIAL_RESIDUES[i]
    xs = tuple(x for x in range(1, 6 * n + 1) if x % 6 in res)[:n]
    if len({x % 2 for x in xs}) < 2:
        raise GraphError(f"X^{i}_{n} = {set(xs)} has a single parity")
    return xs


def _special_pattern(i: int, n: int) -> Optional[ParityPattern]:
    try:
        return pattern_of_set(build_special_X(i, n))
    except GraphError:
        return None


def is_special(d: BipartiteTournament) -> Optional[int]:
    """i if D is isomorphic to D^i_n, else None (also None for cyclic D).

    When X^i_n has a single parity (only X^1_2 = {1, 3}) there is no D^i_n to
    match, so that family member is never reported.
    """
    p = parity_pattern(d)
    if p is None:
        return None
    aba, aaa = parity_pattern_indices(p)
    if aba or aaa:
        return None
    for i in (1, 2):
        if _special_pattern(i, len(p)) == p:
            return i
    raise AssertionError(f"pattern {p} has no (a,b,a)/(a,a,a) window yet matches neither family")


def reversed_pair_completion(d: BipartiteTournament, order: Sequence[VertexId], l: int) -> Completion:
    """Forward completion along ``order`` with the pair (x_l, x_{l+2}) reversed (l is 1-based)."""
    rank = {v: i for i, v in enumerate(order)}
    a, b = order[l - 1], order[l + 1]
    if a.side is not b.side:
        raise GraphError(f"x_{l} and x_{l + 2} lie on different sides")
    return ordered_completion(d, rank).reversed([(a, b)])


def one_aug_21(d: BipartiteTournament) -> Optional[Completion]:
    """A completion with exactly one augmented (2,1)-dicycle, or None if none exists."""
    order = dx_order(d)
    if order is None:
        return None
    aba, _ = parity_pattern_indices(pattern_of_order(order))
    if not aba:
        return None
    return reversed_pair_completion(d, order, min(aba))


def one_aug_3(d: BipartiteTournament) -> Optional[Completion]:
    """A completion with exactly one augmented 3-dicycle, or None if none exists."""
    order = dx_order(d)
    if order is None:
        return None
    aba, aaa = parity_pattern_indices(pattern_of_order(order))
    if not aba and not aaa:
        return None
    return reversed_pair_completion(d, order, min(aba | aaa))


def transitive_completion(
    d: BipartiteTournament, order1: Sequence[int], order2: Sequence[int]
) -> Completion:
    """Orient each side along the given linear order of its indices."""
    rank = {}
    for side, order in ((Side.ONE, order1), (Side.TWO, order2)):
        if sorted(order) != list(range(d.side_size(side))):
            raise GraphError(f"order for side {side.value} is not a permutation: {list(order)}")
        rank.update({VertexId(side, i): pos for pos, i in enumerate(order)})
    return ordered_completion(d, rank)


def index_completion(d: BipartiteTournament) -> Completion:
    return transitive_completion(d, range(d.n1), range(d.n2))


def special_family(i: int, n: int) -> BipartiteTournament:
    """D^i_n as a bipartite tournament."""
    return build_dx(build_special_X(i, n))

