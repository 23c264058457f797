"""Exhaustive ground truth over all tournament completions.

Nothing here uses the D_X machinery or the specifies closure; the only shared
code is the graph model and its cycle enumerator. Completions are numbered
as binary counters: bit ``i`` of the index is set when the ``i``-th same-side
pair (see :meth:`BipartiteTournament.intra_pairs`) points from its larger
index to its smaller one.

Counting runs per completion in :func:`census_direct`. :func:`count_table`
gets the same numbers for every completion at once: it lists the cycles of
the digraph holding D plus both orientations of every same-side pair, and a
cycle lies in completion ``c`` exactly when ``c`` orients its added arcs the
same way, which is a bitmask test on ``c``.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

import numpy as np

from .graph import (
    MAX_CYCLE_LENGTH,
    BipartiteTournament,
    Completion,
    GraphError,
    Side,
    Signature,
    Tournament,
    VertexId,
    all_signatures,
    augmented_dicycles,
    completion_from_arcs,
    iter_cycles,
    make_bipartite,
    normalize_signatures,
    signature,
    Dicycle,
)
from .quad import OrderedPair, SpecMode, ordered_pairs

MAX_INTRA_PAIRS = 24
MAX_PAIR_NODES = 200
MAX_BRUTE_ORDER = 8


class OracleLimitError(GraphError):
    """The instance is too large for exhaustive treatment."""


@dataclass(frozen=True)
class CensusEntry:
    index: int
    counts: dict[tuple[int, Signature], int]

    def total(self, k: int, sigs: Iterable[tuple[int, int]]) -> int:
        return sum(self.counts.get((k, Signature(*s)), 0) for s in sigs)


def _check_pairs(d: BipartiteTournament) -> list[tuple[VertexId, VertexId]]:
    pairs = d.intra_pairs()
    if len(pairs) > MAX_INTRA_PAIRS:
        raise OracleLimitError(f"{len(pairs)} same-side pairs exceed the cap of {MAX_INTRA_PAIRS}")
    return pairs


def completion_at(d: BipartiteTournament, index: int) -> Completion:
    pairs = _check_pairs(d)
    if not 0 <= index < 1 << len(pairs):
        raise GraphError(f"completion index {index} out of range")
    arcs = [(b, a) if index >> i & 1 else (a, b) for i, (a, b) in enumerate(pairs)]
    return completion_from_arcs(d, arcs)


def completion_index(t: Completion) -> int:
    return sum(1 << i for i, (a, b) in enumerate(_check_pairs(t.base)) if t.has_arc(b, a))


def enumerate_completions(d: BipartiteTournament) -> Iterator[Completion]:
    pairs = _check_pairs(d)
    for index in range(1 << len(pairs)):
        yield completion_at(d, index)


def count_table(d: BipartiteTournament, k: int) -> dict[Signature, np.ndarray]:
    """Augmented k-dicycle counts per signature, one array entry per completion."""
    pairs = _check_pairs(d)
    size = 1 << len(pairs)
    table = {s: np.zeros(size, dtype=np.int64) for s in all_signatures(k)}
    if k > d.order:
        return table
    if k > MAX_CYCLE_LENGTH:
        raise OracleLimitError(f"cycle length {k} exceeds {MAX_CYCLE_LENGTH}")
    slot = {}
    union = list(d.masks)
    for i, (a, b) in enumerate(pairs):
        ga, gb = d.gid(a), d.gid(b)
        slot[ga, gb] = (i, 0)
        slot[gb, ga] = (i, 1)
        union[ga] |= 1 << gb
        union[gb] |= 1 << ga
    idx = np.arange(size, dtype=np.int64)
    for cyc in iter_cycles(union, k):
        mask = val = 0
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            if (x, y) in slot:
                i, bit = slot[x, y]
                mask |= 1 << i
                val |= bit << i
        if not mask:
            continue
        ones = sum(1 for g in cyc if g < d.n1)
        sig = Signature(max(ones, k - ones), min(ones, k - ones))
        table[sig] += (idx & mask) == val
    return table


def census(d: BipartiteTournament, ks: Iterable[int]) -> list[CensusEntry]:
    ks = sorted(set(ks))
    tables = {k: count_table(d, k) for k in ks}
    size = 1 << len(_check_pairs(d))
    return [
        CensusEntry(c, {(k, s): int(arr[c]) for k in ks for s, arr in tables[k].items()})
        for c in range(size)
    ]


def census_direct(d: BipartiteTournament, ks: Iterable[int]) -> list[CensusEntry]:
    """:func:`census` computed one completion at a time from the cycle lists."""
    ks = sorted(set(ks))
    out = []
    for c, t in enumerate(enumerate_completions(d)):
        counts = {}
        for k in ks:
            for s in all_signatures(k):
                counts[k, s] = 0
            for cyc in augmented_dicycles(t, k, all_signatures(k)):
                counts[k, signature(cyc, t)] += 1
        out.append(CensusEntry(c, counts))
    return out


def completion_counts(t: Completion, k: int, sigs: Iterable[tuple[int, int]]) -> int:
    """Augmented k-dicycles of one completion with signature in ``sigs``."""
    sigs = normalize_signatures(k, sigs)
    if k > t.order:
        return 0
    return len(augmented_dicycles(t, k, sigs))


def brute_decide(d: BipartiteTournament, t: int, k: int, sigs: Iterable[tuple[int, int]]) -> bool:
    """Does some completion have exactly ``t`` augmented k-dicycles with signature in ``sigs``?"""
    wanted = normalize_signatures(k, sigs)
    table = count_table(d, k)
    total = sum(table[s] for s in wanted)
    return bool(np.any(total == t))


def witnesses(d: BipartiteTournament, t: int, k: int, sigs: Iterable[tuple[int, int]]) -> list[int]:
    """Indices of all completions meeting the target."""
    wanted = normalize_signatures(k, sigs)
    table = count_table(d, k)
    total = sum(table[s] for s in wanted)
    return [int(i) for i in np.flatnonzero(total == t)]


def _distance(d: BipartiteTournament, a: VertexId, b: VertexId) -> float:
    seen = {a: 0}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            return seen[x]
        for y in d.out_neighbours(x):
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return float("inf")


def _specifies_literal(d: BipartiteTournament, mode: SpecMode, p: OrderedPair, q: OrderedPair) -> bool:
    (u1, v1), (u2, v2) = p, q
    d_spec = u1.side is not u2.side and d.has_arc(u2, u1) and d.has_arc(v1, v2)
    c_spec = u1.side is u2.side and (
        (v1 == v2 and _distance(d, u2, u1) == 2) or (u1 == u2 and _distance(d, v1, v2) == 2)
    )
    if mode is SpecMode.D_ONLY:
        return d_spec
    if mode is SpecMode.C_ONLY:
        return c_spec
    return d_spec or c_spec


def brute_inconsistent(d: BipartiteTournament, mode: SpecMode) -> set[OrderedPair]:
    """Pairs starting a chain P_1 -> ... -> P_{k+1} (k >= 2) whose last pair is the
    reverse of some P_l with l <= k-1, searched with chains up to twice the pair count."""
    nodes = ordered_pairs(d)
    if len(nodes) > MAX_PAIR_NODES:
        raise OracleLimitError(f"{len(nodes)} ordered pairs exceed the cap of {MAX_PAIR_NODES}")
    succ = {p: [q for q in nodes if _specifies_literal(d, mode, p, q)] for p in nodes}
    bound = 2 * len(nodes)

    layers_memo: dict[OrderedPair, list[frozenset[OrderedPair]]] = {}

    def layers(p: OrderedPair) -> list[frozenset[OrderedPair]]:
        # layers(p)[s] = pairs at the end of some walk of exactly s steps from p
        if p not in layers_memo:
            out = [frozenset([p])]
            for _ in range(bound):
                out.append(frozenset(q for x in out[-1] for q in succ[x]))
            layers_memo[p] = out
        return layers_memo[p]

    def closes(q: OrderedPair) -> int | None:
        rev = (q[1], q[0])
        for s, layer in enumerate(layers(q)):
            if s >= 2 and rev in layer:
                return s
        return None

    found = set()
    for p in nodes:
        for i, layer in enumerate(layers(p)):
            # P_l sits at step i = l - 1; the closing pair comes s >= 2 steps later
            if any((s := closes(q)) is not None and i + s <= bound for q in layer):
                found.add(p)
                break
    return found


def brute_dicycle_count(t: Tournament) -> int:
    """Number of dicycles of every length, each counted once up to rotation."""
    if t.n > MAX_BRUTE_ORDER:
        raise OracleLimitError(f"order {t.n} exceeds {MAX_BRUTE_ORDER}")
    adj = [[t.has_arc(a, b) for b in range(t.n)] for a in range(t.n)]
    total = 0

    def walk(start: int, here: int, visited: list[bool], length: int) -> None:
        nonlocal total
        for nxt in range(start, t.n):
            if not adj[here][nxt]:
                continue
            if nxt == start:
                if length >= 2:
                    total += 1
            elif not visited[nxt]:
                visited[nxt] = True
                walk(start, nxt, visited, length + 1)
                visited[nxt] = False

    for s in range(t.n):
        visited = [False] * t.n
        visited[s] = True
        walk(s, s, visited, 0)
    return total


def side_tournament(t: Completion, side: Side) -> Tournament:
    n = t.side_size(side)
    rel = t.intra(side)
    return Tournament.from_arcs(n, [(i, j) for i in range(n) for j in range(n) if rel[i][j]])


def pure_side_cycles(t: Completion) -> int:
    """All augmented (k,0)-dicycles of ``t``, over every k."""
    return sum(brute_dicycle_count(side_tournament(t, s)) for s in (Side.ONE, Side.TWO))


def brute_tournament_cycles(t: Tournament) -> list[tuple[int, ...]]:
    """Every dicycle of a small tournament as a vertex tuple led by its minimum."""
    out = []
    for k in range(3, t.n + 1):
        for combo in permutations(range(t.n), k):
            if combo[0] != min(combo):
                continue
            if all(t.has_arc(combo[i], combo[(i + 1) % k]) for i in range(k)):
                out.append(combo)
    return out


def brute_dicycles(g: BipartiteTournament | Completion, k: int) -> set[Dicycle]:
    """All k-dicycles by scanning vertex tuples; rotation classes collapse in the set."""
    vs = g.vertices()
    out = set()
    for combo in permutations(vs, k):
        if all(g.has_arc(combo[i], combo[(i + 1) % k]) for i in range(k)):
            i = combo.index(min(combo))
            out.add(Dicycle(combo[i:] + combo[:i]))
    return out


def contains_F_by_embedding(d: BipartiteTournament) -> bool:
    """Scan every labelled 2+4 selection for the eight arcs of F."""
    for s in (Side.ONE, Side.TWO):
        for u1, u2 in permutations(d.vertices(s), 2):
            for v1, v2, v3, v4 in permutations(d.vertices(s.other), 4):
                arcs = [(u1, v1), (u1, v2), (v1, u2), (v2, u2), (u2, v3), (u2, v4), (v3, u1), (v4, u1)]
                if all(d.has_arc(a, b) for a, b in arcs):
                    return True
    return False


def all_bipartite(n1: int, n2: int) -> Iterator[BipartiteTournament]:
    """Every orientation of K(n1, n2); bit ``i*n2 + j`` of the counter is ``u_i -> v_j``."""
    cells = n1 * n2
    for code in range(1 << cells):
        yield make_bipartite(n1, n2, [[bool(code >> (i * n2 + j) & 1) for j in range(n2)] for i in range(n1)])


def random_bipartite(n1: int, n2: int, rng: random.Random) -> BipartiteTournament:
    """Each cross pair oriented by a fair coin from ``rng``."""
    return make_bipartite(n1, n2, [[bool(rng.getrandbits(1)) for _ in range(n2)] for _ in range(n1)])


def all_tournaments(n: int) -> Iterator[Tournament]:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        yield Tournament.from_arcs(n, [(i, j) if code >> b & 1 else (j, i) for b, (i, j) in enumerate(pairs)])
