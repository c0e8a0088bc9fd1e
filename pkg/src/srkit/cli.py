"""Command-line front end.

Exit codes: 0 success, 1 a verification found a counterexample (or a cover
could not be verified), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .bundles import BUNDLES, run_bundle
from .complex import SimplicialComplex, format_sc, parse_sc
from .cover import cm_cover, realize, sandwich_family
from .errors import GenericityExhausted, SizeCapExceeded, SRError, VerificationFailed
from .families import FAMILIES, generate
from .field import FieldSpec
from .hochster import betti_table
from .homology import reduced_homology
from .props import property_report

SCHEMA_VERSION = 1
DEFAULT_MAX_N = 16


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default="q", help="coefficient field: q or gf:<p> (default q)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="vertex cap for Betti tables (default 16)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="human-readable output")
    p.set_defaults(fmt="json")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="srkit", description="Stanley-Reisner ring invariants")
    parser.add_argument("--version", action="version", version=f"srkit {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_)

    add("props", "full property report").add_argument("file")
    add("betti", "graded Betti table").add_argument("file")
    add("homology", "reduced homology dimensions").add_argument("file")
    p = add("dual", "Alexander dual as .sc")
    p.add_argument("file")
    p.add_argument("--out")
    p = add("gen", "generate a named family as .sc")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out")
    p = add("cover", "Cohen-Macaulay cover")
    p.add_argument("file")
    p.add_argument("--out")
    p = add("sandwich", "complex between a lower and an upper complex")
    p.add_argument("minus")
    p.add_argument("plus")
    p.add_argument("target", type=int)
    p.add_argument("--out")
    p = add("explore", "try to realize parameters (c, d, q, h)")
    for name in ("c", "d", "q", "h"):
        p.add_argument(name, type=int)
    p.add_argument("--out-dir", default=".")
    p = add("verify", "run a named verification bundle")
    p.add_argument("bundle", choices=sorted(BUNDLES))
    return parser


def _load(path: str) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SRError(f"cannot read {path}: {exc.strerror}") from None
    return parse_sc(text)


def _cap(cx: SimplicialComplex, max_n: int) -> None:
    if cx.n > max_n:
        raise SizeCapExceeded(f"{cx.n} vertices exceeds --max-n {max_n}")


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2))
    else:
        print(text)


def _write_or_print(sc: str, out: str | None) -> None:
    if out:
        Path(out).write_text(sc)
    else:
        sys.stdout.write(sc)


def run(args: argparse.Namespace) -> int:
    fld = FieldSpec.parse(args.field)
    cmd = args.cmd

    if cmd == "props":
        cx = _load(args.file)
        _cap(cx, args.max_n)
        rep = property_report(cx, fld, max_n=args.max_n)
        if args.fmt == "json":
            print(json.dumps(rep.to_dict(), indent=2))
        else:
            print(rep.to_text())
        return 0

    if cmd == "betti":
        cx = _load(args.file)
        _cap(cx, args.max_n)
        t = betti_table(cx, fld, max_n=args.max_n)
        _emit({"field": str(fld), "n": cx.n, "betti": t.to_json()}, t.format(), args.fmt)
        return 0

    if cmd == "homology":
        cx = _load(args.file)
        hom = reduced_homology(cx, fld)
        dims = {str(p): v for p, v in hom.dims.items()}
        text = "\n".join(f"H~_{p}: {v}" for p, v in hom.dims.items())
        _emit({"field": str(fld), "dims": dims}, text, args.fmt)
        return 0

    if cmd == "dual":
        cx = _load(args.file)
        _write_or_print(format_sc(cx.alexander_dual()), args.out)
        return 0

    if cmd == "gen":
        cx = generate(args.family, *args.params)
        label = f"{args.family} {' '.join(map(str, args.params))}".strip()
        _write_or_print(format_sc(cx, comment=label), args.out)
        return 0

    if cmd == "cover":
        cx = _load(args.file)
        _cap(cx, args.max_n)
        res = cm_cover(cx, fld, seed=args.seed)
        if args.out:
            Path(args.out).write_text(format_sc(res.cover))
        text = "added facets: " + ", ".join(" ".join(map(str, f)) for f in res.added_facets)
        _emit({"field": str(fld), **res.to_json()}, text + "\n" + format_sc(res.cover), args.fmt)
        return 0

    if cmd == "sandwich":
        lo, hi = _load(args.minus), _load(args.plus)
        _cap(hi, args.max_n)
        out = sandwich_family(lo, hi, args.target, seed=args.seed, field=fld)
        if args.out:
            Path(args.out).write_text(format_sc(out))
        payload = {"field": str(fld), "n": out.n, "facets": [list(f) for f in out.facet_list()]}
        _emit(payload, format_sc(out), args.fmt)
        return 0

    if cmd == "explore":
        if args.c + args.d > args.max_n:
            raise SizeCapExceeded(f"c + d = {args.c + args.d} exceeds --max-n {args.max_n}")
        outcome = realize(args.c, args.d, args.q, args.h, fld, seed=args.seed)
        payload = {"field": str(fld), "seed": args.seed, **outcome.to_json()}
        if outcome.witness is not None:
            out_dir = Path(args.out_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            path = out_dir / f"witness_c{args.c}_d{args.d}_q{args.q}_h{args.h}.sc"
            path.write_text(format_sc(outcome.witness, comment=f"{outcome.method} {outcome.params}"))
            payload["witness_file"] = path.name
        text = f"{outcome.status} via {outcome.method}"
        _emit(payload, text, args.fmt)
        return 0

    if cmd == "verify":
        res = run_bundle(args.bundle, fld, seed=args.seed)
        if args.fmt == "json":
            print(json.dumps({"schema_version": SCHEMA_VERSION, **res.to_json()}, indent=2))
        else:
            print(f"{res.bundle} over {fld}: {res.checked} checks, {len(res.failures)} failures")
            for f in res.failures:
                print(f"FAIL {f.name}: {f.message}")
                if f.complex is not None:
                    print(format_sc(f.complex), end="")
        for f in res.failures:
            if f.complex is not None:
                print(f"counterexample for {f.name}:\n{format_sc(f.complex)}", file=sys.stderr, end="")
        return 0 if res.ok else 1

    raise AssertionError(cmd)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (VerificationFailed, GenericityExhausted) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except SRError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
