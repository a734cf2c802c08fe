"""Seeded generator for the validation corpus.

Random instances start from a small base surface of the wanted genus and
grow by subdividing edges, adding chords inside faces and opening holes.
Each instance is tagged with the oracle's answer per cycle class, so a
corpus directory is self-checking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from . import fixtures as F
from . import surf_format
from .builder import Builder
from .errors import NoSuchCycle
from .oracle import CycleClass, brute_force_shortest
from .surface import EmbeddedGraph

MAX_N = 14
MAX_W = 20
MAX_M = 3 * MAX_N
COMBOS = [(g, b) for g in (0, 1, 2) for b in (0, 1, 2, 3)]


@dataclass
class Instance:
    name: str
    graph: EmbeddedGraph
    tags: dict = field(default_factory=dict)

    def expected(self, cls) -> str:
        return self.tags[f"expect_{CycleClass.parse(cls).value}"]


def fixture_instances() -> list[Instance]:
    items = [
        ("torus1", F.torus1()),
        ("cube", F.cube()),
        ("octagon", F.octagon()),
        ("torus3x3", F.torus_grid(3, 3)),
        ("cylinder3x3", F.cylinder_grid(3, 3)),
        ("opened_torus3x3", F.opened_torus_grid()),
        ("pants", F.pants()),
        ("dumbbell", F.dumbbell(2, 1, 4, 10)),
    ]
    return [Instance(n, g, {"kind": "fixture", "symmetric": "yes"}) for n, g in items]


def _base(genus: int) -> EmbeddedGraph:
    if genus == 0:
        return F.planar_from_coords([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)])
    return F.one_vertex_schema(genus)


def _simple_face(g: EmbeddedGraph, f: int) -> bool:
    vs = [g.origin[d] for d in g.faces[f]]
    es = {g.edge_of(d) for d in g.faces[f]}
    return len(set(vs)) == len(vs) == len(es)


def _grow(rng: random.Random, genus: int, holes: int, target_n: int) -> EmbeddedGraph:
    g = _base(genus)
    for _ in range(400):
        b = len(g.boundary)
        if g.n >= target_n and b == holes:
            break
        bld = Builder.from_graph(g)
        interior = g.interior_faces()
        if b < holes:
            taken = set(g.boundary_vertices())
            openable = [f for f in interior if len(interior) > 1 and _simple_face(g, f)
                        and not taken & {g.origin[d] for d in g.faces[f]}]
            roomy = g.n + 4 <= MAX_N
            if openable and (rng.random() < 0.6 or not roomy):
                bld.boundary.add(g.faces[rng.choice(openable)][0])
                g = bld.build()
                continue
            if roomy:
                f = rng.choice(interior)
                bld.add_hole(rng.choice(g.faces[f]))
                g = bld.build()
                continue
        # grow: subdivide towards the target size, otherwise add a chord
        f = rng.choice(interior)
        ds = g.faces[f]
        if g.n < min(target_n, MAX_N) and (rng.random() < 0.5 or len(ds) < 2 or g.m >= MAX_M):
            bld.subdivide(rng.randrange(g.num_darts))
        elif len(ds) >= 2 and g.m < MAX_M:
            d1, d2 = rng.sample(ds, 2)
            bld.split_face(d1, d2)
        elif g.n < MAX_N:
            bld.subdivide(rng.randrange(g.num_darts))
        else:
            break
        g = bld.build()
    return g


def _weights(rng: random.Random, g: EmbeddedGraph, symmetric: bool) -> list[int]:
    w = [0] * g.num_darts
    for e in g.edges():
        a = rng.randint(1, MAX_W)
        w[e] = a
        w[g.twin[e]] = a if symmetric else rng.randint(1, MAX_W)
    return w


def random_instance(rng: random.Random, genus: int, holes: int, symmetric: bool) -> EmbeddedGraph:
    lo = 3 if genus == 0 else 2
    hi = MAX_N if genus < 2 else 9
    target = rng.randint(lo, hi)
    g = _grow(rng, genus, holes, target)
    return g.with_weights(_weights(rng, g, symmetric))


def tag_with_oracle(inst: Instance) -> None:
    for cls in CycleClass:
        try:
            val = str(brute_force_shortest(inst.graph, cls).length)
        except NoSuchCycle:
            val = "NoSuchCycle"
        inst.tags[f"expect_{cls.value}"] = val


def generate_corpus(seed: int = 7, count: int = 120, tag: bool = True,
                    fixtures: bool = True) -> list[Instance]:
    """``count`` instances: the named fixtures first, then random ones.

    Random instances cycle through every (genus, holes) pair with genus <= 2
    and holes <= 3; each pair gets symmetric and asymmetric weights in turn.
    """
    rng = random.Random(seed)
    out = fixture_instances()[:count] if fixtures else []
    i = 0
    while len(out) < count:
        genus, holes = COMBOS[i % len(COMBOS)]
        # shift the parity every round so each combination gets both kinds
        sym = (i + i // len(COMBOS)) % 2 == 0
        g = random_instance(rng, genus, holes, sym)
        st = g.stats
        out.append(Instance(f"r{i:03d}_g{st.g}_b{st.b}",
                            g, {"kind": "random", "symmetric": "yes" if sym else "no",
                                "seed": str(seed)}))
        i += 1
    if tag:
        for inst in out:
            tag_with_oracle(inst)
    return out


def write_corpus(path, instances) -> list[Path]:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    files = []
    for k, inst in enumerate(instances):
        p = path / f"{k:03d}_{inst.name}.surf"
        tags = dict(inst.tags, name=inst.name)
        p.write_text(surf_format.dumps(inst.graph, tags=tags))
        files.append(p)
    return files


def read_corpus(path) -> list[Instance]:
    out = []
    for p in sorted(Path(path).glob("*.surf")):
        doc = surf_format.read(p)
        out.append(Instance(doc.tags.get("name", p.stem), doc.graph, doc.tags))
    return out
