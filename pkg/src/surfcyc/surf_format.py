"""Reader and writer for the SURF v1 text format.

    SURF v1
    n m b
    <darts of vertex 0, counterclockwise>
    ...
    <id origin head weight twin>          one line per dart, 2m lines
    ...
    boundary <dart>                       one per boundary face
    pi <vertex> <base vertex> <level>     optional, covers only
    tag <key>=<value>                     optional free-form metadata

Blank lines and ``#`` comments are ignored.  Weights are integers or ``inf``.
:func:`dumps` writes the canonical form, so ``dumps(loads(dumps(g)))`` is
byte-identical to ``dumps(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import FormatError
from .surface import INF, EmbeddedGraph, build_graph


@dataclass
class SurfDoc:
    graph: EmbeddedGraph
    pi: dict[int, tuple[int, int]] = field(default_factory=dict)
    tags: dict[str, str] = field(default_factory=dict)


def _fmt_weight(w) -> str:
    if w == INF:
        return "inf"
    if isinstance(w, float) and w.is_integer():
        return str(int(w))
    return str(w)


def _parse_weight(tok: str):
    if tok == "inf":
        return INF
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise FormatError(f"bad weight {tok!r}") from None


def dumps(g: EmbeddedGraph, pi=None, tags=None) -> str:
    lines = ["SURF v1", f"{g.n} {g.m} {len(g.boundary)}"]
    for v in range(g.n):
        lines.append(" ".join(map(str, g.out_darts(v))))
    for d in range(g.num_darts):
        lines.append(f"{d} {g.origin[d]} {g.head[d]} {_fmt_weight(g.weight[d])} {g.twin[d]}")
    for d in g.boundary_darts():
        lines.append(f"boundary {d}")
    for v in sorted(pi or {}):
        base, level = pi[v]
        lines.append(f"pi {v} {base} {level}")
    for k in sorted(tags or {}):
        lines.append(f"tag {k}={tags[k]}")
    return "\n".join(lines) + "\n"


def dump_doc(doc: SurfDoc) -> str:
    return dumps(doc.graph, doc.pi, doc.tags)


def loads(text: str) -> SurfDoc:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if rows and rows[0].startswith("SURF"):
        if rows[0].split() != ["SURF", "v1"]:
            raise FormatError(f"unsupported header {rows[0]!r}")
        rows = rows[1:]
    if not rows:
        raise FormatError("empty document")
    try:
        n, m, b = (int(t) for t in rows[0].split())
    except ValueError:
        raise FormatError("expected 'n m b' header line") from None
    if len(rows) < 1 + n + 2 * m:
        raise FormatError("document is truncated")
    try:
        rot = [[int(t) for t in r.split()] for r in rows[1:1 + n]]
    except ValueError:
        raise FormatError("vertex lines must list dart ids") from None
    nd = 2 * m
    twin = [0] * nd
    weight = [0] * nd
    origin = [0] * nd
    head = [0] * nd
    seen = set()
    for r in rows[1 + n:1 + n + nd]:
        toks = r.split()
        if len(toks) != 5:
            raise FormatError(f"dart line needs 5 fields: {r!r}")
        try:
            d, o, h, t = int(toks[0]), int(toks[1]), int(toks[2]), int(toks[4])
        except ValueError:
            raise FormatError(f"bad dart line {r!r}") from None
        if not 0 <= d < nd or d in seen:
            raise FormatError(f"dart id {d} out of range or repeated")
        seen.add(d)
        origin[d], head[d], twin[d] = o, h, t
        weight[d] = _parse_weight(toks[3])
    boundary = []
    pi = {}
    tags = {}
    for r in rows[1 + n + nd:]:
        toks = r.split()
        try:
            if toks[0] == "boundary" and len(toks) == 2:
                boundary.append(int(toks[1]))
            elif toks[0] == "pi" and len(toks) == 4:
                pi[int(toks[1])] = (int(toks[2]), int(toks[3]))
            elif toks[0] == "tag" and len(toks) >= 2 and "=" in r:
                k, v = r[4:].split("=", 1)
                tags[k.strip()] = v.strip()
            else:
                raise FormatError(f"unrecognised line {r!r}")
        except ValueError:
            raise FormatError(f"bad line {r!r}") from None
    if len(boundary) != b:
        raise FormatError(f"header says b={b} but {len(boundary)} boundary lines found")
    g = build_graph(rot, twin, weight, boundary)
    for d in range(nd):
        if g.origin[d] != origin[d] or g.head[d] != head[d]:
            raise FormatError(f"dart {d}: origin/head disagree with the rotation lines")
    if len(g.boundary) != b:
        raise FormatError("two boundary lines name the same face")
    return SurfDoc(g, pi, tags)


def parse(text: str) -> EmbeddedGraph:
    return loads(text).graph


def read(path) -> SurfDoc:
    return loads(Path(path).read_text())


def write(path, g: EmbeddedGraph, pi=None, tags=None) -> None:
    Path(path).write_text(dumps(g, pi, tags))
