"""Completions without augmented 4-dicycles of given signatures.

An added arc is an ordered same-side pair. One pair *specifies* another when
putting the first pair's arc and the reverse of the second's into a completion
closes an augmented 4-dicycle: a (2,2) one for *d*-specification, a (3,1) one
for *c*-specification. Chains of specification that come back to the reverse
of an earlier pair make a pair *inconsistent*; a completion avoiding every
specified combination exists exactly when no same-side pair is inconsistent
in both orientations, and :func:`repair` builds one by reversing whole
reachability classes of arcs.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from .graph import (
    BipartiteTournament,
    Completion,
    GraphError,
    Side,
    Signature,
    VertexId,
    completion_from_arcs,
    iter_cycles,
    make_bipartite,
    bits,
)

log = logging.getLogger(__name__)

OrderedPair = tuple[VertexId, VertexId]
Arc = tuple[VertexId, VertexId]


class SpecMode(enum.Enum):
    D_ONLY = "d"
    C_ONLY = "c"
    BOTH = "both"

    @property
    def signatures(self) -> frozenset[Signature]:
        return _MODE_SIGNATURES[self]


_MODE_SIGNATURES = {
    SpecMode.D_ONLY: frozenset({Signature(2, 2)}),
    SpecMode.C_ONLY: frozenset({Signature(3, 1)}),
    SpecMode.BOTH: frozenset({Signature(3, 1), Signature(2, 2)}),
}


def _is_pair(p: OrderedPair) -> bool:
    return p[0].side is p[1].side and p[0] != p[1]


def _two_path(d: BipartiteTournament, a: VertexId, b: VertexId) -> bool:
    m = d.masks
    ga, gb = d.gid(a), d.gid(b)
    return any(m[w] >> gb & 1 for w in range(d.order) if m[ga] >> w & 1)


def d_specifies(d: BipartiteTournament, p: OrderedPair, q: OrderedPair) -> bool:
    if not (_is_pair(p) and _is_pair(q)) or p[0].side is q[0].side:
        return False
    return d.has_arc(q[0], p[0]) and d.has_arc(p[1], q[1])


def c_specifies(d: BipartiteTournament, p: OrderedPair, q: OrderedPair) -> bool:
    if not (_is_pair(p) and _is_pair(q)) or p[0].side is not q[0].side:
        return False
    if p[1] == q[1] and _two_path(d, q[0], p[0]):
        return True
    return p[0] == q[0] and _two_path(d, p[1], q[1])


def ordered_pairs(d: BipartiteTournament) -> list[OrderedPair]:
    return [
        (a, b)
        for s in (Side.ONE, Side.TWO)
        for a in d.vertices(s)
        for b in d.vertices(s)
        if a != b
    ]


@dataclass(frozen=True)
class PairDigraph:
    """The specifies relation on ordered same-side pairs, with reachability.

    ``succ[i]`` and ``reach[i]`` are bitmasks over node indices; ``reach`` is
    reflexive.
    """

    nodes: tuple[OrderedPair, ...]
    succ: tuple[int, ...]

    @cached_property
    def index(self) -> dict[OrderedPair, int]:
        return {p: i for i, p in enumerate(self.nodes)}

    @cached_property
    def reach(self) -> tuple[int, ...]:
        out = []
        for s in range(len(self.nodes)):
            seen = 1 << s
            frontier = seen
            while frontier:
                nxt = 0
                for i in bits(frontier):
                    nxt |= self.succ[i]
                frontier = nxt & ~seen
                seen |= frontier
            out.append(seen)
        return tuple(out)

    @cached_property
    def reach_plus(self) -> tuple[int, ...]:
        """Nodes reachable in one or more edges."""
        out = []
        for i in range(len(self.nodes)):
            m = 0
            for j in bits(self.succ[i]):
                m |= self.reach[j]
            out.append(m)
        return tuple(out)

    def has_edge(self, p: OrderedPair, q: OrderedPair) -> bool:
        return bool(self.succ[self.index[p]] >> self.index[q] & 1)

    def reachable(self, p: OrderedPair, q: OrderedPair, min_edges: int = 0) -> bool:
        i, j = self.index[p], self.index[q]
        if min_edges == 0:
            return bool(self.reach[i] >> j & 1)
        if min_edges == 1:
            return bool(self.reach_plus[i] >> j & 1)
        if min_edges == 2:
            return any(self.reach_plus[m] >> j & 1 for m in bits(self.succ[i]))
        raise ValueError("min_edges must be 0, 1 or 2")

    def edges(self) -> list[tuple[OrderedPair, OrderedPair]]:
        return [(self.nodes[i], self.nodes[j]) for i in range(len(self.nodes)) for j in bits(self.succ[i])]

    def reverse_index(self, i: int) -> int:
        a, b = self.nodes[i]
        return self.index[b, a]


def specifies_digraph(d: BipartiteTournament, mode: SpecMode) -> PairDigraph:
    nodes = tuple(ordered_pairs(d))
    index = {p: i for i, p in enumerate(nodes)}
    m = d.masks
    inm = [0] * d.order
    for a in range(d.order):
        for b in bits(m[a]):
            inm[b] |= 1 << a
    # vertices at distance exactly two (always same side in a bipartite tournament)
    two = [0] * d.order
    for a in range(d.order):
        for w in bits(m[a]):
            two[a] |= m[w]
    for a in range(d.order):
        two[a] &= ~(1 << a)

    succ = []
    for a, b in nodes:
        ga, gb = d.gid(a), d.gid(b)
        out = 0
        if mode is not SpecMode.C_ONLY:
            for c in bits(inm[ga]):
                for e in bits(m[gb]):
                    if c != e:
                        out |= 1 << index[d.vertex_at(c), d.vertex_at(e)]
        if mode is not SpecMode.D_ONLY:
            for c in range(d.order):
                # (c, b) with c -> w -> a
                if c != gb and two[c] >> ga & 1:
                    out |= 1 << index[d.vertex_at(c), b]
            for e in bits(two[gb]):
                if e != ga:
                    out |= 1 << index[a, d.vertex_at(e)]
        succ.append(out)
    return PairDigraph(nodes, tuple(succ))


def _inconsistent_mask(pg: PairDigraph) -> int:
    bad = 0
    for i in range(len(pg.nodes)):
        r = pg.reverse_index(i)
        if any(pg.reach_plus[m] >> r & 1 for m in bits(pg.succ[i])):
            bad |= 1 << i
    out = 0
    for i in range(len(pg.nodes)):
        if pg.reach[i] & bad:
            out |= 1 << i
    return out


def inconsistent_set(d: BipartiteTournament, mode: SpecMode, pg: Optional[PairDigraph] = None) -> set[OrderedPair]:
    """Pairs that reach some pair (a, b) from which (b, a) is reachable in two or more steps."""
    pg = pg or specifies_digraph(d, mode)
    mask = _inconsistent_mask(pg)
    return {pg.nodes[i] for i in bits(mask)}


def _arc_present(t: Completion, p: OrderedPair) -> bool:
    return t.has_arc(p[0], p[1])


def violating_pairs(t: Completion, mode: SpecMode, pg: Optional[PairDigraph] = None) -> set[frozenset[Arc]]:
    """Unordered sets {x->y, v->u} of added arcs with (x, y) specifying (u, v)."""
    pg = pg or specifies_digraph(t.base, mode)
    return {frozenset({p, (q[1], q[0])}) for p, q in _violating_edges(t, pg)}


def _violating_edges(t: Completion, pg: PairDigraph) -> list[tuple[OrderedPair, OrderedPair]]:
    present = 0
    for i, p in enumerate(pg.nodes):
        if _arc_present(t, p):
            present |= 1 << i
    out = []
    for i in bits(present):
        for j in bits(pg.succ[i] & ~present):
            out.append((pg.nodes[i], pg.nodes[j]))
    return out


class RepairError(RuntimeError):
    """The repair loop stopped making progress; its precondition must be violated."""


def initial_completion(d: BipartiteTournament, inconsistent: set[OrderedPair]) -> Completion:
    """Index-order completion, flipped away from any singly inconsistent orientation."""
    arcs = []
    for a, b in d.intra_pairs():
        if (a, b) in inconsistent and (b, a) not in inconsistent:
            arcs.append((b, a))
        else:
            arcs.append((a, b))
    return completion_from_arcs(d, arcs)


def repair_trace(
    d: BipartiteTournament,
    mode: SpecMode,
    t0: Completion,
    pg: Optional[PairDigraph] = None,
) -> tuple[Completion, list[int]]:
    """Run the reversal loop; also return the violation count before each pass."""
    if t0.base != d:
        raise GraphError("starting completion does not complete the given bipartite tournament")
    pg = pg or specifies_digraph(d, mode)
    bad = _inconsistent_mask(pg)
    t = t0
    counts = []
    while True:
        edges = _violating_edges(t, pg)
        current = len({frozenset({p, (q[1], q[0])}) for p, q in edges})
        if counts and current >= counts[-1]:
            raise RepairError(f"violation count went {counts[-1]} -> {current}")
        counts.append(current)
        if not edges:
            return t, counts
        (x, y), (u, v) = min(edges, key=lambda e: (pg.index[e[0]], pg.index[e[1]]))
        pivot = (u, v)
        if bad >> pg.index[pivot] & 1:
            pivot = (y, x)
            if bad >> pg.index[pivot] & 1:
                raise RepairError(f"both ({u},{v}) and ({y},{x}) are inconsistent")
        flip = {(pivot[1], pivot[0])}
        for j in bits(pg.reach_plus[pg.index[pivot]]):
            a, b = pg.nodes[j]
            if t.has_arc(b, a):
                flip.add((b, a))
        log.debug("repair pass %d: %d violations, pivot %s, reversing %d arcs", len(counts), current, pivot, len(flip))
        t = t.reversed(sorted(flip))


def repair(d: BipartiteTournament, mode: SpecMode, t0: Completion) -> Completion:
    return repair_trace(d, mode, t0)[0]


def double_inconsistency(d: BipartiteTournament, mode: SpecMode, pg: Optional[PairDigraph] = None) -> Optional[tuple[VertexId, VertexId]]:
    """A same-side pair inconsistent in both orientations, if any."""
    bad = inconsistent_set(d, mode, pg)
    for a, b in d.intra_pairs():
        if (a, b) in bad and (b, a) in bad:
            return a, b
    return None


def no_aug(d: BipartiteTournament, mode: SpecMode) -> Optional[Completion]:
    """A completion with no augmented 4-dicycle of the mode's signatures, or None."""
    return no_aug_trace(d, mode)[0]


def no_aug_trace(d: BipartiteTournament, mode: SpecMode) -> tuple[Optional[Completion], list[int]]:
    pg = specifies_digraph(d, mode)
    bad = inconsistent_set(d, mode, pg)
    if double_inconsistency(d, mode, pg) is not None:
        return None, []
    return repair_trace(d, mode, initial_completion(d, bad), pg)


class K22(enum.Enum):
    Y1 = 1
    Y2 = 2
    Y3 = 3
    Y4 = 4


def classify_k22(d: BipartiteTournament) -> K22:
    """Isomorphism class of an orientation of K(2,2).

    Y1 is the 4-dicycle and Y2 has one side beating the other. The remaining
    two share the outdegree multiset {2, 1, 1, 0}; in Y4 the source and the
    sink lie on the same side, in Y3 on opposite sides.
    """
    if (d.n1, d.n2) != (2, 2):
        raise GraphError(f"expected a 2+2 bipartite tournament, got {d.n1}+{d.n2}")
    if any(True for _ in iter_cycles(d.masks, 4)):
        return K22.Y1
    deg = {v: d.out_degree(v) for v in d.vertices()}
    if sorted(deg.values()) == [0, 0, 2, 2]:
        return K22.Y2
    source = next(v for v, k in deg.items() if k == 2)
    sink = next(v for v, k in deg.items() if k == 0)
    return K22.Y4 if source.side is sink.side else K22.Y3


def induced(d: BipartiteTournament, ones: Iterable[VertexId], twos: Iterable[VertexId]) -> BipartiteTournament:
    """Subdigraph induced on the given side-One and side-Two vertices (in that order)."""
    ones, twos = list(ones), list(twos)
    if any(v.side is not Side.ONE for v in ones) or any(v.side is not Side.TWO for v in twos):
        raise GraphError("induced(): vertices listed under the wrong side")
    return make_bipartite(len(ones), len(twos), [[d.has_arc(a, b) for b in twos] for a in ones])


def induced_on(d: BipartiteTournament, vs: Iterable[VertexId]) -> BipartiteTournament:
    vs = sorted(set(vs))
    return induced(d, [v for v in vs if v.side is Side.ONE], [v for v in vs if v.side is Side.TWO])


def contains_F(d: BipartiteTournament) -> bool:
    """True iff two same-side vertices a, b have two 2-paths a -> . -> b and two b -> . -> a."""
    m = d.masks
    for s in (Side.ONE, Side.TWO):
        for a, b in combinations(d.vertices(s), 2):
            ga, gb = d.gid(a), d.gid(b)
            ab = m[ga] & ~m[gb] & ~(1 << gb)
            ba = m[gb] & ~m[ga] & ~(1 << ga)
            if bin(ab).count("1") >= 2 and bin(ba).count("1") >= 2:
                return True
    return False
