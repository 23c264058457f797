"""Bipartite tournaments, their tournament completions, and dicycle enumeration.

Vertices are addressed by :class:`VertexId` ``(side, index)``. Internally every
structure also numbers its vertices globally (side One first, then side Two),
and keeps one out-neighbour bitmask per vertex so arc queries are O(1).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_CYCLE_LENGTH = 6


class GraphError(ValueError):
    """Raised for malformed graphs, relations or cycle queries."""


class Side(enum.IntEnum):
    ONE = 1
    TWO = 2

    @property
    def other(self) -> "Side":
        return Side.TWO if self is Side.ONE else Side.ONE


class VertexId(NamedTuple):
    side: Side
    index: int

    @property
    def label(self) -> str:
        return f"{'u' if self.side is Side.ONE else 'v'}{self.index + 1}"

    def __str__(self) -> str:
        return self.label

    def __repr__(self) -> str:
        return self.label


_LABEL = re.compile(r"^([uv])(\d+)$")


def vertex(label: str) -> VertexId:
    """Parse ``u3`` / ``v1`` style labels (1-based, ``u`` is side One)."""
    m = _LABEL.match(label)
    if not m or int(m.group(2)) < 1:
        raise GraphError(f"bad vertex label {label!r}")
    side = Side.ONE if m.group(1) == "u" else Side.TWO
    return VertexId(side, int(m.group(2)) - 1)


class Signature(NamedTuple):
    """Partite split of a cycle, larger side first."""

    major: int
    minor: int

    @property
    def k(self) -> int:
        return self.major + self.minor


Matrix = tuple[tuple[bool, ...], ...]


def _freeze(rows: Sequence[Sequence[bool]]) -> Matrix:
    return tuple(tuple(bool(x) for x in row) for row in rows)


class _Host:
    """Shared arc/cycle queries over global vertex numbering."""

    n1: int
    n2: int

    @property
    def order(self) -> int:
        return self.n1 + self.n2

    def side_size(self, side: Side) -> int:
        return self.n1 if side is Side.ONE else self.n2

    def gid(self, v: VertexId) -> int:
        if not 0 <= v.index < self.side_size(v.side):
            raise GraphError(f"vertex {v} not in graph")
        return v.index if v.side is Side.ONE else self.n1 + v.index

    def vertex_at(self, g: int) -> VertexId:
        return VertexId(Side.ONE, g) if g < self.n1 else VertexId(Side.TWO, g - self.n1)

    def vertices(self, side: Side | None = None) -> list[VertexId]:
        sides = (Side.ONE, Side.TWO) if side is None else (side,)
        return [VertexId(s, i) for s in sides for i in range(self.side_size(s))]

    @property
    def masks(self) -> tuple[int, ...]:
        raise NotImplementedError

    def has_arc(self, a: VertexId, b: VertexId) -> bool:
        return bool(self.masks[self.gid(a)] >> self.gid(b) & 1)

    def out_neighbours(self, v: VertexId) -> list[VertexId]:
        m = self.masks[self.gid(v)]
        return [self.vertex_at(g) for g in range(self.order) if m >> g & 1]

    def in_neighbours(self, v: VertexId) -> list[VertexId]:
        g = self.gid(v)
        return [self.vertex_at(h) for h in range(self.order) if self.masks[h] >> g & 1]

    def out_degree(self, v: VertexId) -> int:
        return bin(self.masks[self.gid(v)]).count("1")

    def arcs(self) -> list[tuple[VertexId, VertexId]]:
        return [
            (self.vertex_at(a), self.vertex_at(b))
            for a in range(self.order)
            for b in range(self.order)
            if self.masks[a] >> b & 1
        ]


@dataclass(frozen=True)
class BipartiteTournament(_Host):
    """Orientation of K(n1, n2); ``cross[i][j]`` is True for ``u_i -> v_j``."""

    n1: int
    n2: int
    cross: Matrix

    def __post_init__(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise GraphError("both partite sets must be nonempty")
        if len(self.cross) != self.n1 or any(len(row) != self.n2 for row in self.cross):
            raise GraphError(f"cross matrix must have shape {self.n1}x{self.n2}")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        n1 = self.n1
        out = [0] * self.order
        for i, row in enumerate(self.cross):
            for j, fwd in enumerate(row):
                if fwd:
                    out[i] |= 1 << (n1 + j)
                else:
                    out[n1 + j] |= 1 << i
        return tuple(out)

    def cross_arc(self, a: VertexId, b: VertexId) -> bool:
        """True iff ``a -> b``; both orientations False for a same-side pair."""
        if a.side is b.side:
            return False
        return self.has_arc(a, b)

    def intra_pairs(self) -> list[tuple[VertexId, VertexId]]:
        """Unordered same-side pairs ``(a, b)`` with ``a < b``, side One first."""
        return [
            (VertexId(s, i), VertexId(s, j))
            for s in (Side.ONE, Side.TWO)
            for i, j in combinations(range(self.side_size(s)), 2)
        ]

    @classmethod
    def from_arcs(cls, n1: int, n2: int, arcs: Iterable[tuple[VertexId, VertexId]]) -> "BipartiteTournament":
        """Build from an explicit arc list covering every cross pair exactly once."""
        seen: dict[tuple[int, int], bool] = {}
        for a, b in arcs:
            if a.side is b.side:
                raise GraphError(f"arc {a}->{b} joins one partite set")
            fwd = a.side is Side.ONE
            u, v = (a, b) if fwd else (b, a)
            if not (0 <= u.index < n1 and 0 <= v.index < n2):
                raise GraphError(f"arc {a}->{b} leaves the vertex range")
            key = (u.index, v.index)
            if key in seen:
                raise GraphError(f"pair {{{u}, {v}}} oriented twice")
            seen[key] = fwd
        missing = [(i, j) for i in range(n1) for j in range(n2) if (i, j) not in seen]
        if missing:
            i, j = missing[0]
            raise GraphError(f"pair {{u{i + 1}, v{j + 1}}} not oriented")
        cross = [[seen[i, j] for j in range(n2)] for i in range(n1)]
        return make_bipartite(n1, n2, cross)


def make_bipartite(n1: int, n2: int, cross: Sequence[Sequence[bool]]) -> BipartiteTournament:
    return BipartiteTournament(n1, n2, _freeze(cross))


def _tournament_matrix(n: int, arcs: Iterable[tuple[int, int]], side: Side) -> Matrix:
    rel = [[False] * n for _ in range(n)]
    for a, b in arcs:
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"side {side.value} arc ({a}, {b}) out of range")
        if a == b:
            raise GraphError(f"self-arc at index {a} on side {side.value}")
        if rel[a][b]:
            raise GraphError(f"side {side.value} arc ({a}, {b}) listed twice")
        rel[a][b] = True
    _check_tournament(rel, side)
    return _freeze(rel)


def _check_tournament(rel: Sequence[Sequence[bool]], side: Side) -> None:
    n = len(rel)
    if any(len(row) != n for row in rel):
        raise GraphError(f"side {side.value} relation is not square")
    for i in range(n):
        if rel[i][i]:
            raise GraphError(f"self-arc at index {i} on side {side.value}")
        for j in range(i + 1, n):
            if rel[i][j] == rel[j][i]:
                what = "doubly oriented" if rel[i][j] else "missing"
                raise GraphError(
                    f"side {side.value} pair {{{VertexId(side, i)}, {VertexId(side, j)}}} {what}"
                )


@dataclass(frozen=True)
class Completion(_Host):
    """A bipartite tournament together with a tournament on each partite set."""

    base: BipartiteTournament
    intra1: Matrix
    intra2: Matrix
    n1: int = field(init=False)
    n2: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n1", self.base.n1)
        object.__setattr__(self, "n2", self.base.n2)
        if len(self.intra1) != self.n1 or len(self.intra2) != self.n2:
            raise GraphError("intra relation sizes do not match the partite sets")
        _check_tournament(self.intra1, Side.ONE)
        _check_tournament(self.intra2, Side.TWO)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = list(self.base.masks)
        n1 = self.n1
        for offset, rel in ((0, self.intra1), (n1, self.intra2)):
            for i, row in enumerate(rel):
                for j, a in enumerate(row):
                    if a:
                        out[offset + i] |= 1 << (offset + j)
        return tuple(out)

    def intra(self, side: Side) -> Matrix:
        return self.intra1 if side is Side.ONE else self.intra2

    def is_added(self, a: VertexId, b: VertexId) -> bool:
        return a.side is b.side and a != b

    def added_arcs(self) -> list[tuple[VertexId, VertexId]]:
        return [
            (VertexId(s, i), VertexId(s, j))
            for s in (Side.ONE, Side.TWO)
            for i, row in enumerate(self.intra(s))
            for j, a in enumerate(row)
            if a
        ]

    def reversed(self, arcs: Iterable[tuple[VertexId, VertexId]]) -> "Completion":
        """Copy with each listed added arc ``a -> b`` turned into ``b -> a``."""
        rels = {Side.ONE: [list(r) for r in self.intra1], Side.TWO: [list(r) for r in self.intra2]}
        for a, b in arcs:
            if a.side is not b.side or not rels[a.side][a.index][b.index]:
                raise GraphError(f"{a}->{b} is not an added arc of this completion")
            rel = rels[a.side]
            rel[a.index][b.index], rel[b.index][a.index] = False, True
        return Completion(self.base, _freeze(rels[Side.ONE]), _freeze(rels[Side.TWO]))

    def to_tournament(self) -> "Tournament":
        return Tournament(self.order, self.masks)


def make_completion(
    base: BipartiteTournament,
    intra1: Iterable[tuple[int, int]],
    intra2: Iterable[tuple[int, int]],
) -> Completion:
    """Complete ``base`` with the given same-side arcs, as ``(tail, head)`` index pairs."""
    return Completion(
        base,
        _tournament_matrix(base.n1, intra1, Side.ONE),
        _tournament_matrix(base.n2, intra2, Side.TWO),
    )


def completion_from_arcs(base: BipartiteTournament, arcs: Iterable[tuple[VertexId, VertexId]]) -> Completion:
    """Like :func:`make_completion`, with added arcs given as vertex pairs."""
    by_side: dict[Side, list[tuple[int, int]]] = {Side.ONE: [], Side.TWO: []}
    for a, b in arcs:
        if a.side is not b.side:
            raise GraphError(f"added arc {a}->{b} crosses partite sets")
        by_side[a.side].append((a.index, b.index))
    return make_completion(base, by_side[Side.ONE], by_side[Side.TWO])


def ordered_completion(base: BipartiteTournament, rank: dict[VertexId, int]) -> Completion:
    """Orient every same-side pair from lower to higher ``rank``."""
    rels = []
    for s in (Side.ONE, Side.TWO):
        n = base.side_size(s)
        r = [rank[VertexId(s, i)] for i in range(n)]
        rels.append(_freeze([[i != j and r[i] < r[j] for j in range(n)] for i in range(n)]))
    return Completion(base, rels[0], rels[1])


@dataclass(frozen=True)
class Tournament:
    """Tournament on vertices ``0 .. n-1`` stored as out-neighbour bitmasks."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.masks) != self.n:
            raise GraphError("mask count must equal the order")
        for i in range(self.n):
            if self.masks[i] >> i & 1:
                raise GraphError(f"self-arc at {i}")
            for j in range(i + 1, self.n):
                if (self.masks[i] >> j & 1) == (self.masks[j] >> i & 1):
                    raise GraphError(f"pair {{{i}, {j}}} is not oriented exactly once")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        masks = [0] * n
        for a, b in arcs:
            masks[a] |= 1 << b
        return cls(n, tuple(masks))

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.masks[a] >> b & 1)

    def arcs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(self.n) if self.masks[a] >> b & 1]

    def dicycles(self, k: int) -> list[tuple[int, ...]]:
        if not 3 <= k <= min(self.n, MAX_CYCLE_LENGTH):
            raise GraphError(f"cycle length {k} outside [3, {min(self.n, MAX_CYCLE_LENGTH)}]")
        return list(iter_cycles(self.masks, k))


@dataclass(frozen=True, order=True)
class Dicycle:
    """Directed cycle, stored rotated so its smallest vertex comes first."""

    vertices: tuple[VertexId, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def arcs(self) -> list[tuple[VertexId, VertexId]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    @classmethod
    def of(cls, *labels: str) -> "Dicycle":
        """Build from labels, closing label optional: ``Dicycle.of("u1", "u2", "v3")``."""
        vs = [vertex(s) for s in labels]
        if len(vs) > 1 and vs[0] == vs[-1]:
            vs.pop()
        i = vs.index(min(vs))
        return cls(tuple(vs[i:] + vs[:i]))

    def __str__(self) -> str:
        return " ".join(v.label for v in self.vertices + self.vertices[:1])


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_cycles(masks: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Yield each directed k-cycle once, as global indices led by its minimum."""
    n = len(masks)

    def extend(path: list[int], used: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        if len(path) == k:
            if masks[last] >> path[0] & 1:
                yield tuple(path)
            return
        nxt = masks[last] & ~used & allowed
        while nxt:
            low = nxt & -nxt
            g = low.bit_length() - 1
            nxt ^= low
            path.append(g)
            yield from extend(path, used | low)
            path.pop()

    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        yield from extend([s], 1 << s)


def dicycles_of_length(g: BipartiteTournament | Completion, k: int) -> list[Dicycle]:
    """All directed k-cycles of ``g``, each once, in canonical rotation."""
    hi = min(g.order, MAX_CYCLE_LENGTH)
    if not 3 <= k <= hi:
        raise GraphError(f"cycle length {k} outside [3, {hi}]")
    return [Dicycle(tuple(g.vertex_at(x) for x in c)) for c in iter_cycles(g.masks, k)]


def signature(c: Dicycle, d: BipartiteTournament | Completion) -> Signature:
    for v in c.vertices:
        d.gid(v)
    ones = sum(1 for v in c.vertices if v.side is Side.ONE)
    twos = c.k - ones
    return Signature(max(ones, twos), min(ones, twos))


def normalize_signatures(k: int, sigs: Iterable[tuple[int, int]]) -> frozenset[Signature]:
    out = set()
    for j, rest in sigs:
        if j + rest != k or not (k + 1) // 2 <= j <= k:
            raise GraphError(f"signature ({j},{rest}) invalid for k={k}")
        out.add(Signature(j, rest))
    return frozenset(out)


def all_signatures(k: int) -> frozenset[Signature]:
    return frozenset(Signature(j, k - j) for j in range((k + 1) // 2, k + 1))


def augmented_dicycles(t: Completion, k: int, sigs: Iterable[tuple[int, int]]) -> list[Dicycle]:
    """k-dicycles of ``t`` using at least one added arc, with signature in ``sigs``."""
    wanted = normalize_signatures(k, sigs)
    if t.order < 3 or k > t.order:
        return []
    out = []
    for c in dicycles_of_length(t, k):
        if signature(c, t) not in wanted:
            continue
        if any(a.side is b.side for a, b in c.arcs()):
            out.append(c)
    return out
