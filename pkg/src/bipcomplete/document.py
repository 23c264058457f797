"""Line-oriented text format for bipartite tournaments and completions.

::

    # comments run to end of line
    V1: u1 u2
    V2: v1 v2 v3
    ARCS:
    u1 -> v1
    v2 -> u1
    ...
    INTRA:
    u1 -> u2

``ARCS`` must orient every cross pair exactly once. ``INTRA`` is optional;
when present it must be a tournament on each side and the document then
describes a completion. Names keep their listed order, which becomes the
vertex index order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import BipartiteTournament, Completion, Side, VertexId, completion_from_arcs

_NAME = re.compile(r"[A-Za-z0-9_.+\-]+")
_ARC_TOKEN = re.compile(r"->|(?:(?!->)\S)+")
_HEADERS = ("V1", "V2", "ARCS", "INTRA")

NamePair = tuple[str, str]


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class DigraphDocument:
    v1: tuple[str, ...]
    v2: tuple[str, ...]
    arcs: tuple[NamePair, ...]
    intra_arcs: Optional[tuple[NamePair, ...]] = None

    @property
    def ids(self) -> dict[str, VertexId]:
        out = {n: VertexId(Side.ONE, i) for i, n in enumerate(self.v1)}
        out.update({n: VertexId(Side.TWO, i) for i, n in enumerate(self.v2)})
        return out

    @property
    def names(self) -> dict[VertexId, str]:
        return {v: n for n, v in self.ids.items()}

    def to_bipartite(self) -> BipartiteTournament:
        ids = self.ids
        return BipartiteTournament.from_arcs(len(self.v1), len(self.v2), [(ids[a], ids[b]) for a, b in self.arcs])

    def to_completion(self) -> Completion:
        if self.intra_arcs is None:
            raise DocumentError("document has no INTRA section")
        ids = self.ids
        return completion_from_arcs(self.to_bipartite(), [(ids[a], ids[b]) for a, b in self.intra_arcs])

    def name(self, v: VertexId) -> str:
        return (self.v1 if v.side is Side.ONE else self.v2)[v.index]

    def with_completion(self, t: Completion) -> "DigraphDocument":
        return DigraphDocument(self.v1, self.v2, self.arcs, tuple((self.name(a), self.name(b)) for a, b in t.added_arcs()))


def document_for(
    g: BipartiteTournament | Completion,
    v1: Sequence[str] | None = None,
    v2: Sequence[str] | None = None,
) -> DigraphDocument:
    """Document for ``g``; default names are ``u1..`` and ``v1..``."""
    base = g.base if isinstance(g, Completion) else g
    v1 = tuple(v1) if v1 is not None else tuple(f"u{i + 1}" for i in range(base.n1))
    v2 = tuple(v2) if v2 is not None else tuple(f"v{j + 1}" for j in range(base.n2))
    doc = DigraphDocument(v1, v2, ())
    arcs = tuple((doc.name(a), doc.name(b)) for a, b in sorted(base.arcs()))
    doc = DigraphDocument(v1, v2, arcs)
    return doc.with_completion(g) if isinstance(g, Completion) else doc


def parse_document(text: bytes | str) -> DigraphDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"not UTF-8 text: {exc}") from None
    lists: dict[str, Optional[list[str]]] = {"V1": None, "V2": None}
    arcs: dict[str, Optional[list[tuple[NamePair, int, int]]]] = {"ARCS": None, "INTRA": None}
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        head, sep, rest = line.strip().partition(":")
        if sep and head.strip() in _HEADERS:
            key = head.strip()
            if (lists.get(key) if key in lists else arcs.get(key)) is not None:
                raise DocumentError(f"duplicate {key} section", lineno, col)
            rest_col = line.index(":") + 2
            if key in lists:
                lists[key] = _names(rest, lineno, rest_col)
                section = None
            else:
                if rest.strip():
                    raise DocumentError(f"{key}: expects arcs on the following lines", lineno, rest_col)
                arcs[key] = []
                section = key
            continue
        if section is None:
            raise DocumentError(f"unexpected text {line.strip()!r} outside a section", lineno, col)
        arcs[section].append((_arc(line, lineno), lineno, col))

    for key in ("V1", "V2"):
        if not lists[key]:
            raise DocumentError(f"missing or empty {key} list")
    if arcs["ARCS"] is None:
        raise DocumentError("missing ARCS section")
    v1, v2 = tuple(lists["V1"]), tuple(lists["V2"])
    side = {}
    for s, names in ((Side.ONE, v1), (Side.TWO, v2)):
        for n in names:
            if n in side:
                raise DocumentError(f"duplicate vertex name {n!r}")
            side[n] = s

    def known(a: str, line: int, col: int) -> Side:
        if a not in side:
            raise DocumentError(f"unknown vertex {a!r}", line, col)
        return side[a]

    seen: dict[frozenset[str], NamePair] = {}
    for (a, b), line, col in arcs["ARCS"]:
        if known(a, line, col) is known(b, line, col):
            raise DocumentError(f"arc {a} -> {b} joins one partite set; list it under INTRA", line, col)
        key = frozenset((a, b))
        if key in seen:
            what = "listed twice" if seen[key] == (a, b) else "oriented both ways"
            raise DocumentError(f"cross pair {{{a}, {b}}} {what}", line, col)
        seen[key] = (a, b)
    for a in v1:
        for b in v2:
            if frozenset((a, b)) not in seen:
                raise DocumentError(f"cross pair ({a}, {b}) is not oriented")

    intra = None
    if arcs["INTRA"] is not None:
        iseen: dict[frozenset[str], NamePair] = {}
        for (a, b), line, col in arcs["INTRA"]:
            if known(a, line, col) is not known(b, line, col):
                raise DocumentError(f"INTRA arc {a} -> {b} crosses partite sets", line, col)
            if a == b:
                raise DocumentError(f"self-arc at {a}", line, col)
            key = frozenset((a, b))
            if key in iseen:
                what = "listed twice" if iseen[key] == (a, b) else "oriented both ways"
                raise DocumentError(f"pair {{{a}, {b}}} {what}", line, col)
            iseen[key] = (a, b)
        for names in (v1, v2):
            for i, a in enumerate(names):
                for b in names[i + 1:]:
                    if frozenset((a, b)) not in iseen:
                        raise DocumentError(f"same-side pair ({a}, {b}) is not oriented")
        intra = tuple(p for p, _, _ in arcs["INTRA"])
    return DigraphDocument(v1, v2, tuple(p for p, _, _ in arcs["ARCS"]), intra)


def _names(text: str, line: int, col: int) -> list[str]:
    out = []
    for m in re.finditer(r"\S+", text):
        if not _NAME.fullmatch(m.group()):
            raise DocumentError(f"bad vertex name {m.group()!r}", line, col + m.start())
        out.append(m.group())
    return out


def _arc(line: str, lineno: int) -> NamePair:
    tokens = [(m.group(), m.start() + 1) for m in _ARC_TOKEN.finditer(line)]
    shape = [t == "->" for t, _ in tokens]
    if shape not in ([False, True, False], [False, False]):
        raise DocumentError("expected 'tail -> head'", lineno, tokens[0][1])
    words = [t for t in tokens if t[0] != "->"]
    for word, col in words:
        if not _NAME.fullmatch(word):
            raise DocumentError(f"bad vertex name {word!r}", lineno, col)
    return words[0][0], words[1][0]


def format_document(doc: DigraphDocument, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append("V1: " + " ".join(doc.v1))
    lines.append("V2: " + " ".join(doc.v2))
    lines.append("ARCS:")
    lines.extend(f"{a} -> {b}" for a, b in doc.arcs)
    if doc.intra_arcs is not None:
        lines.append("INTRA:")
        lines.extend(f"{a} -> {b}" for a, b in doc.intra_arcs)
    return "\n".join(lines) + "\n"


def export_dot(doc: DigraphDocument, name: str = "D") -> str:
    """DOT digraph: cross arcs solid, added arcs dashed."""

    def q(s: str) -> str:
        return '"' + s.replace('"', r"\"") + '"'

    lines = [f"digraph {q(name)} {{"]
    for i, names in enumerate((doc.v1, doc.v2), 1):
        lines.append(f"  subgraph cluster_V{i} {{")
        lines.append(f'    label="V{i}";')
        lines.extend(f"    {q(n)};" for n in names)
        lines.append("  }")
    lines.extend(f"  {q(a)} -> {q(b)};" for a, b in doc.arcs)
    lines.extend(f"  {q(a)} -> {q(b)} [style=dashed];" for a, b in doc.intra_arcs or ())
    lines.append("}")
    return "\n".join(lines) + "\n"
