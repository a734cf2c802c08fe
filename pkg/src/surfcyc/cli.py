"""Command-line front end.

    surfcyc stats FILE
    surfcyc basis FILE
    surfcyc nonsep|nonhom|noncon FILE [--undirected] [--sequence]
    surfcyc cover FILE --lambda IDX --kind double|restricted [-o OUT]
    surfcyc oracle FILE --class C
    surfcyc validate DIR [--jobs N]
    surfcyc corpus OUT [--seed S] [--count N]

Every command takes ``--json`` to print JSON lines instead of key=value
text.  Exit status: 0 on success, 2 when the requested cycle does not
exist, 1 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import directed, surf_format, undirected
from .covers import cyclic_double_cover, restricted_cyclic_cover
from .errors import NoSuchCycle, SurfaceError
from .homology import partial_homology_basis
from .oracle import CycleClass, brute_force_shortest
from .surface import INF
from .surgery import collar

EXIT_OK, EXIT_INPUT, EXIT_NONE = 0, 1, 2

DIRECTED = {
    CycleClass.NON_SEPARATING: directed.shortest_non_separating_cycle,
    CycleClass.NON_CONTRACTIBLE: directed.shortest_non_contractible_cycle,
    CycleClass.NON_NULL_HOMOLOGOUS: directed.shortest_non_null_homologous_cycle,
}
UNDIRECTED = {
    CycleClass.NON_SEPARATING: undirected.non_separating_realization,
    CycleClass.NON_CONTRACTIBLE: undirected.non_contractible_realization,
    CycleClass.NON_NULL_HOMOLOGOUS: undirected.non_null_homologous_realization,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which we reserve for "no such cycle"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _num(x):
    return "inf" if x == INF else x


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _result(args, cls: CycleClass, walk, mode: str, extra=None) -> None:
    rec = {"class": cls.value, "length": _num(walk.length), "cycle": list(walk.darts), "mode": mode}
    if extra:
        rec.update(extra)
    text = f"class={cls.value} length={_num(walk.length)} cycle={','.join(map(str, walk.darts))}"
    _emit(args, rec, text)


def _load(path):
    return surf_format.read(path).graph


def cmd_stats(args) -> int:
    s = _load(args.file).stats
    rec = {"n": s.n, "m": s.m, "f": s.f, "chi": s.chi, "g": s.g, "b": s.b}
    _emit(args, rec, str(s))
    return EXIT_OK


def cmd_basis(args) -> int:
    g = _load(args.file)
    for i, c in enumerate(partial_homology_basis(g).cycles):
        rec = {"index": i, "length": _num(c.length), "cycle": list(c.darts)}
        _emit(args, rec, f"basis={i} length={_num(c.length)} cycle={','.join(map(str, c.darts))}")
    return EXIT_OK


def _solve(g, cls: CycleClass, use_undirected: bool):
    """(walk, crossing sequence or None, mode)."""
    if use_undirected:
        r = UNDIRECTED[cls](g)
        return r.walk, r.sequence, "undirected", r.simple
    return DIRECTED[cls](g), None, "directed", None


def cmd_cycle(args) -> int:
    if args.max_generators is None:
        return _cmd_cycle(args)
    # the enumeration reads its cap from the environment; restore it afterwards
    old = os.environ.get("SURFCYC_MAX_GENERATORS")
    os.environ["SURFCYC_MAX_GENERATORS"] = str(args.max_generators)
    try:
        return _cmd_cycle(args)
    finally:
        if old is None:
            del os.environ["SURFCYC_MAX_GENERATORS"]
        else:
            os.environ["SURFCYC_MAX_GENERATORS"] = old


def _cmd_cycle(args) -> int:
    cls = CycleClass.parse(args.command)
    g = _load(args.file)
    try:
        walk, seq, mode, simple = _solve(g, cls, args.undirected)
    except NoSuchCycle as e:
        _emit(args, {"class": cls.value, "length": None, "error": str(e)},
              f"class={cls.value} length=none")
        return EXIT_NONE
    extra = {}
    if seq is not None:
        extra = {"sequence": str(seq), "simple": simple}
    _result(args, cls, walk, mode, extra)
    if seq is not None and args.sequence and not args.json:
        print(f"X: {seq}")
    return EXIT_OK


def cmd_cover(args) -> int:
    g = _load(args.file)
    kind = args.kind
    if kind == "restricted" and g.boundary:
        # keep lam off the boundary, as the non-contractible search does
        g = collar(g)
    basis = partial_homology_basis(g).cycles
    if not 0 <= args.lam < len(basis):
        raise SurfaceError(f"--lambda must be in 0..{len(basis) - 1}")
    lam = basis[args.lam]
    cover = (cyclic_double_cover if kind == "double" else restricted_cyclic_cover)(g, lam)
    s = cover.graph.stats
    rec = {"kind": kind, "n": s.n, "m": s.m, "f": s.f, "chi": s.chi, "g": s.g, "b": s.b}
    _emit(args, rec, f"kind={kind} {s}")
    if args.output:
        pi = {v: (cv.base, cv.level) for v, cv in enumerate(cover.pi)}
        surf_format.write(args.output, cover.graph, pi=pi, tags={"cover": kind, "lambda": str(args.lam)})
    return EXIT_OK


def cmd_oracle(args) -> int:
    cls = CycleClass.parse(args.cls)
    g = _load(args.file)
    try:
        walk = brute_force_shortest(g, cls)
    except NoSuchCycle as e:
        _emit(args, {"class": cls.value, "length": None, "error": str(e)},
              f"class={cls.value} length=none")
        return EXIT_NONE
    _result(args, cls, walk, "oracle")
    return EXIT_OK


def check_file(path) -> tuple[str, list[str]]:
    """Compare every algorithm against the file's expect_* tags; returns (name, problems)."""
    doc = surf_format.read(path)
    g = doc.graph
    problems = []
    modes = [False] + ([True] if g.is_symmetric() else [])
    for cls in CycleClass:
        want = doc.tags.get(f"expect_{cls.value}")
        if want is None:
            problems.append(f"{cls.value}: no expect tag")
            continue
        for und in modes:
            try:
                got = str(_num(_solve(g, cls, und)[0].length))
            except NoSuchCycle:
                got = "NoSuchCycle"
            if got != want:
                mode = "undirected" if und else "directed"
                problems.append(f"{cls.value} ({mode}): got {got}, expected {want}")
    return Path(path).name, problems


def cmd_validate(args) -> int:
    files = sorted(Path(args.dir).glob("*.surf"))
    if not files:
        raise SurfaceError(f"no .surf files in {args.dir}")
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(check_file, files))
    else:
        results = [check_file(f) for f in files]
    ok = 0
    for name, probs in results:
        if probs:
            for p in probs:
                print(f"FAIL {name}: {p}", file=sys.stderr)
        else:
            ok += 1
    _emit(args, {"ok": ok, "total": len(files)},
          f"{'OK' if ok == len(files) else 'FAILED'} {ok}/{len(files)}")
    return EXIT_OK if ok == len(files) else EXIT_INPUT


def cmd_corpus(args) -> int:
    from .corpus import generate_corpus, write_corpus

    insts = generate_corpus(args.seed, args.count, tag=not args.no_tags)
    files = write_corpus(args.out, insts)
    _emit(args, {"written": len(files), "dir": str(args.out)}, f"wrote {len(files)} files to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="surfcyc", description="Shortest non-trivial cycles on surface-embedded graphs.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON lines")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("stats", parents=[common], help="n m f chi g b of a SURF file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("basis", parents=[common], help="the 2g homology basis cycles")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_basis)

    for name in ("nonsep", "nonhom", "noncon"):
        sp = sub.add_parser(name, parents=[common], help=f"shortest {name} cycle")
        sp.add_argument("file")
        sp.add_argument("--undirected", action="store_true",
                        help="crossing-sequence algorithm; needs symmetric weights")
        sp.add_argument("--sequence", action="store_true",
                        help="also print the winning crossing sequence (undirected only)")
        sp.add_argument("--max-generators", type=int, default=None,
                        help="cap on generators for the undirected enumeration")
        sp.set_defaults(func=cmd_cycle)

    sp = sub.add_parser("cover", parents=[common], help="build a cover over a basis cycle")
    sp.add_argument("file")
    sp.add_argument("--lambda", dest="lam", type=int, required=True)
    sp.add_argument("--kind", choices=("double", "restricted"), required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("oracle", parents=[common], help="brute-force shortest cycle")
    sp.add_argument("file")
    sp.add_argument("--class", dest="cls", required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("validate", parents=[common], help="check a corpus directory against its tags")
    sp.add_argument("dir")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("corpus", parents=[common], help="write the seeded validation corpus")
    sp.add_argument("out")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--count", type=int, default=120)
    sp.add_argument("--no-tags", action="store_true", help="skip the oracle tagging pass")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoSuchCycle as e:
        print(f"surfcyc: {e}", file=sys.stderr)
        return EXIT_NONE
    except (SurfaceError, OSError, ValueError) as e:
        print(f"surfcyc: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
