"""Acyclic bipartite tournaments and their integer-set form D_X.

D_X has vertex set X and an arc a -> b whenever a < b and a, b differ in
parity. Odd members form side One, even members side Two. A bipartite
tournament is acyclic iff it has no 4-dicycle, iff it is bitransitive, iff it
is isomorphic to some D_X; each test below decides one of these.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .graph import (
    BipartiteTournament,
    Dicycle,
    GraphError,
    Side,
    VertexId,
    iter_cycles,
    make_bipartite,
    bits,
)

IntegerSet = tuple[int, ...]


def check_integer_set(xs: Iterable[int]) -> IntegerSet:
    values = tuple(sorted(xs))
    if any(x < 1 for x in values):
        raise GraphError("integer set members must be positive")
    if len(set(values)) != len(values):
        raise GraphError("integer set has repeated members")
    return values


def dx_sides(xs: Iterable[int]) -> tuple[list[int], list[int]]:
    """Odd members (side One) and even members (side Two), each sorted."""
    values = check_integer_set(xs)
    return [x for x in values if x % 2], [x for x in values if not x % 2]


def build_dx(xs: Iterable[int]) -> BipartiteTournament:
    odd, even = dx_sides(xs)
    if not odd or not even:
        raise GraphError("X needs both an odd and an even member")
    return make_bipartite(len(odd), len(even), [[a < b for b in even] for a in odd])


def dx_vertex_values(xs: Iterable[int]) -> dict[VertexId, int]:
    """The integer carried by each vertex of ``build_dx(xs)``."""
    odd, even = dx_sides(xs)
    out = {VertexId(Side.ONE, i): x for i, x in enumerate(odd)}
    out.update({VertexId(Side.TWO, j): x for j, x in enumerate(even)})
    return out


def has_4_dicycle(d: BipartiteTournament) -> Optional[Dicycle]:
    for c in iter_cycles(d.masks, 4) if d.order >= 4 else ():
        return Dicycle(tuple(d.vertex_at(g) for g in c))
    return None


def is_bitransitive(d: BipartiteTournament) -> Optional[tuple[VertexId, VertexId, VertexId, VertexId]]:
    """A directed 3-path ``v1 v2 v3 v4`` lacking the arc ``v1 -> v4``, if any."""
    m = d.masks
    for a in range(d.order):
        for b in bits(m[a]):
            for c in bits(m[b]):
                for e in bits(m[c]):
                    if e != a and not m[a] >> e & 1:
                        return d.vertex_at(a), d.vertex_at(b), d.vertex_at(c), d.vertex_at(e)
    return None


def is_acyclic(d: BipartiteTournament) -> bool:
    return has_4_dicycle(d) is None


def dx_order(d: BipartiteTournament) -> Optional[list[VertexId]]:
    """Greedy source-extraction order realizing D as some D_X, or None if cyclic.

    Each step removes a vertex that beats every remaining vertex of the other
    side, preferring the side of the previous pick and then the lowest index.
    """
    remaining = {Side.ONE: list(range(d.n1)), Side.TWO: list(range(d.n2))}
    order: list[VertexId] = []
    prefer = Side.ONE
    while remaining[Side.ONE] or remaining[Side.TWO]:
        pick = None
        for side in (prefer, prefer.other):
            for i in remaining[side]:
                v = VertexId(side, i)
                if all(d.has_arc(v, VertexId(side.other, j)) for j in remaining[side.other]):
                    pick = v
                    break
            if pick is not None:
                break
        if pick is None:
            return None
        remaining[pick.side].remove(pick.index)
        order.append(pick)
        prefer = pick.side
    return order


def values_for_order(order: list[VertexId]) -> IntegerSet:
    """Smallest increasing integers whose parities follow the sides of ``order``."""
    out = []
    prev = 0
    for v in order:
        x = prev + 1
        if (x % 2 == 1) != (v.side is Side.ONE):
            x += 1
        out.append(x)
        prev = x
    return tuple(out)


def dx_representation(d: BipartiteTournament) -> Optional[IntegerSet]:
    order = dx_order(d)
    if order is None:
        return None
    xs = values_for_order(order)
    value = dict(zip(order, xs))
    for u in d.vertices(Side.ONE):
        for v in d.vertices(Side.TWO):
            if d.has_arc(u, v) != (value[u] < value[v]):
                return None
    return xs

