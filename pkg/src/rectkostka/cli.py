"""Command-line entry point.

Exit codes: 0 success, 1 property failure (with a counterexample dump),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .catabolism import ctype, is_catabolizable
from .charge import charge_tab
from .core import Tableau, TableauError, parse_tableau_text, partition, tableau_from_json
from .cyclage import PosetError, build_poset
from .embed import matoms, theta_image_contains, theta_map
from .lrwords import ChainError, RectSeq, RectSpecError, enumerate_lrt, pseudo_geq
from .poly import kostka_foulkes, kostka_foulkes_charge, kostka_poly, kostka_polys, verify_duality, verify_monotonicity
from .transpose import TransposeError, tr_tab, tr_word
from .verify import DEFAULT_MAX_CELLS, HARD_MAX_CELLS, SUITES, run_suite


class UsageError(Exception):
    pass


# -- input helpers ---------------------------------------------------------------

def _parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _shape(text: str | None) -> tuple[int, ...]:
    if not text:
        raise UsageError("--shape is required")
    try:
        return partition(_parts(text))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _rects(text: str | None, flag: str = "--rects") -> RectSeq:
    if not text:
        raise UsageError(f"{flag} is required")
    return RectSeq.parse(text)


def _read_input(path: str | None) -> dict:
    """A tableau from a text file, a tableau JSON, or a counterexample dump
    (which may also carry ``rects``)."""
    if path is None:
        raise UsageError("a tableau file is required")
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "counterexample" in obj and obj["counterexample"]:
            obj = obj["counterexample"]
        tab = obj.get("tableau", obj)
        out = {"tableau": tableau_from_json(tab)}
        if "rects" in obj:
            out["rects"] = RectSeq.parse(obj["rects"])
        return out
    return {"tableau": parse_tableau_text(text)}


def _tableau_and_rects(args) -> tuple[Tableau, RectSeq]:
    data = _read_input(args.tableau or getattr(args, "file", None))
    R = RectSeq.parse(args.rects) if args.rects else data.get("rects")
    if R is None:
        raise UsageError("--rects is required")
    return data["tableau"], R


def _emit(args, text: str, obj) -> None:
    out = json.dumps(obj, indent=1, sort_keys=True) + "\n" if args.format == "json" else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _block(t: Tableau) -> str:
    return t.to_text() if len(t) else "(empty)"


# -- verbs -----------------------------------------------------------------------

def cmd_lrt(args) -> int:
    R = _rects(args.rects)
    shape = _shape(args.shape)
    tabs = enumerate_lrt(shape, R)
    text = "\n\n".join(_block(t) for t in tabs) + ("\n" if tabs else "")
    _emit(args, text, {"rects": str(R), "shape": list(shape), "tableaux": [t.to_json() for t in tabs]})
    return 0


def cmd_poly(args) -> int:
    if args.kind == "kostka":
        R = _rects(args.rects)
        polys = {_shape(args.shape): kostka_poly(_shape(args.shape), R)} if args.shape else kostka_polys(R)
        rows = sorted(polys.items(), reverse=True)
        text = "".join(f"{','.join(map(str, lam))}\t{p}\n" for lam, p in rows)
        _emit(args, text, {"rects": str(R.canonical()),
                           "polys": [{"shape": list(lam), "coefficients": p.to_json()} for lam, p in rows]})
        if args.figures:
            from .report import kostka_report
            kostka_report(R, Path(args.figures))
        return 0
    if args.kind == "kf":
        lam, mu = _shape(args.shape), _shape(args.mu)
        p = kostka_foulkes_charge(lam, mu) if args.charge else kostka_foulkes(lam, mu)
        _emit(args, f"{p}\n", {"shape": list(lam), "mu": list(mu), "coefficients": p.to_json()})
        return 0
    if args.kind == "dual":
        R = _rects(args.rects).canonical()
        rep = verify_duality(R)
        lines = [f"# n(R) = {rep['n']}"]
        for row in rep["shapes"]:
            lines.append(f"{','.join(map(str, row['shape']))}\t{row['lhs']}\t{row['rhs']}\t"
                         f"{'ok' if row['equal'] else 'FAIL'}")
        _emit(args, "\n".join(lines) + "\n", _jsonable(rep))
        return 0 if rep["ok"] else 1
    if args.kind == "mono":
        R, S = _rects(args.rects).canonical(), _rects(args.to, "--to").canonical()
        if not pseudo_geq(R, S):
            raise UsageError(f"{R} does not dominate {S}")
        rep = verify_monotonicity(R, S)
        lines = [f"{','.join(map(str, r['shape']))}\t{r['K_R']}\t{r['K_S']}\t"
                 f"{'ok' if r['leq'] and r['witnessed'] else 'FAIL'}" for r in rep["shapes"]]
        _emit(args, "\n".join(lines) + "\n", _jsonable(rep))
        return 0 if rep["ok"] else 1
    raise UsageError(f"unknown poly kind {args.kind}")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def cmd_poset(args) -> int:
    R = _rects(args.rects)
    P = build_poset(R, args.order, max_cells=HARD_MAX_CELLS)
    if args.figures:
        from .report import poset_report
        poset_report(P, Path(args.figures))
    out = P.to_dot() if args.format == "dot" else P.to_json() + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_embed(args) -> int:
    if args.action == "apply":
        R, S = _rects(args.source, "--from"), _rects(args.to, "--to")
        if not pseudo_geq(R, S):
            raise UsageError(f"{R} does not dominate {S}")
        m = theta_map(R, S)
        if args.tableau or args.file:
            T = _read_input(args.tableau or args.file)["tableau"]
            if T not in m:
                raise UsageError(f"tableau is not in LRT({R})")
            items = [(T, m[T])]
        else:
            items = sorted(m.items(), key=lambda kv: (kv[0].shape, kv[0].rows), reverse=True)
        text = "\n\n".join(f"{_block(a)}\n->\n{_block(b)}\ncharge {charge_tab(a, R)}" for a, b in items) + "\n"
        _emit(args, text, {"from": str(R), "to": str(S),
                           "map": [{"source": a.to_json(), "image": b.to_json(),
                                    "charge": charge_tab(a, R)} for a, b in items]})
        return 0
    if args.action == "image-test":
        T, R = _tableau_and_rects(args)
        inside = theta_image_contains(T, R)
        cat = is_catabolizable(T, R, "row")[0]
        text = f"in image: {'yes' if inside else 'no'}\ncatabolizable: {'yes' if cat else 'no'}\n"
        _emit(args, text, {"rects": str(R), "in_image": inside, "catabolizable": cat})
        return 0
    raise UsageError(f"unknown embed action {args.action}")


def cmd_atom(args) -> int:
    if args.gamma:
        gamma = _shape(args.gamma)
    else:
        gamma = tuple(sorted(_rects(args.rects).gamma, reverse=True))
    atoms = matoms(gamma)
    blocks, obj = [], []
    for R, tabs in atoms.items():
        tabs = sorted(tabs, key=lambda t: (t.shape, t.rows), reverse=True)
        blocks.append(f"# {R}: {len(tabs)}\n" + "".join(_block(t) + "\n\n" for t in tabs))
        obj.append({"rects": str(R), "tableaux": [t.to_json() for t in tabs]})
    _emit(args, "".join(blocks), {"gamma": list(gamma), "atoms": obj})
    return 0


def cmd_ctype(args) -> int:
    T = _read_input(args.tableau or args.file)["tableau"]
    ct = ctype(T)
    _emit(args, f"{ct}\n", {"ctype": {str(k): list(v) for k, v in sorted(ct.parts.items())},
                            "text": str(ct)})
    return 0


def cmd_catabolize(args) -> int:
    T, R = _tableau_and_rects(args)
    ok, trace = is_catabolizable(T, R, args.mode)
    if args.trace:
        _emit(args, trace.to_text(), dict(trace.to_json(), rects=str(R), mode=args.mode))
    else:
        _emit(args, f"{'catabolizable' if ok else 'not catabolizable'}\n",
              {"rects": str(R), "mode": args.mode, "verdict": ok})
    return 0


def cmd_transpose(args) -> int:
    R = _rects(args.rects)
    if args.word:
        v = tr_word(_parts(args.word), R)
        _emit(args, ",".join(map(str, v)) + "\n", {"rects": str(R.transpose()), "word": list(v)})
        return 0
    T, R = _tableau_and_rects(args)
    U = tr_tab(T, R)
    _emit(args, _block(U) + "\n", {"rects": str(R.transpose()), "tableau": U.to_json()})
    return 0


def _max_cells(n: int) -> int:
    if n < 1:
        raise UsageError("--max-cells must be positive")
    if n > HARD_MAX_CELLS:
        print(f"warning: --max-cells capped at {HARD_MAX_CELLS}; orbit cost grows like t!",
              file=sys.stderr)
        return HARD_MAX_CELLS
    if n > DEFAULT_MAX_CELLS:
        print(f"warning: --max-cells {n} above {DEFAULT_MAX_CELLS}; orbit cost grows like t!",
              file=sys.stderr)
    return n


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    n = _max_cells(args.max_cells)
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_suite, names, [n] * len(names)))
    else:
        results = [run_suite(name, n) for name in names]
    for r in results:
        print(r.line())
        if not r.ok:
            print(json.dumps(r.to_json(), sort_keys=True))
    if args.figures:
        from .report import suites_report
        outdir = Path(args.figures)
        suites_report(results, outdir)
        for r in results:
            if not r.ok:
                (outdir / f"{r.name}.counterexample.json").write_text(
                    json.dumps(r.to_json(), indent=1, sort_keys=True) + "\n")
    return 0 if all(r.ok for r in results) else 1


def cmd_report(args) -> int:
    from .report import kostka_report, poset_report
    R = _rects(args.rects)
    if not args.figures:
        raise UsageError("--figures DIR is required")
    outdir = Path(args.figures)
    paths = kostka_report(R, outdir)
    paths += poset_report(build_poset(R, args.order, max_cells=HARD_MAX_CELLS), outdir)
    for p in paths:
        print(p)
    return 0


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rects", help="rectangle sequence, e.g. 4x3,2x3 (ROWSxCOLS)")
    common.add_argument("--shape", help="partition, e.g. 5,4,3,3,2,1")
    common.add_argument("--tableau", help="tableau file (text rows or JSON); - for stdin")
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--out", help="write the main output to this file")
    common.add_argument("--figures", help="directory for TSV tables and PNG figures")

    ap = argparse.ArgumentParser(prog="rectkostka",
                                 description="Generalized Kostka polynomials for rectangle sequences.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("lrt", parents=[common], help="LR tableaux")
    p.add_argument("action", choices=["enumerate"])
    p.set_defaults(func=cmd_lrt)

    p = sub.add_parser("poly", parents=[common], help="polynomials")
    p.add_argument("kind", choices=["kostka", "kf", "dual", "mono"])
    p.add_argument("--mu", help="content for kf")
    p.add_argument("--to", help="less dominant sequence for mono")
    p.add_argument("--charge", action="store_true", help="kf: charge instead of cocharge")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("poset", parents=[common], help="cyclage posets")
    p.add_argument("action", choices=["export"])
    p.add_argument("--order", choices=["cocyclage", "strong", "cyclage"], default="cocyclage")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("embed", parents=[common], help="embeddings theta")
    p.add_argument("action", choices=["apply", "image-test"])
    p.add_argument("file", nargs="?")
    p.add_argument("--from", dest="source")
    p.add_argument("--to")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("atom", parents=[common], help="multi-atoms")
    p.add_argument("action", choices=["list"])
    p.add_argument("--gamma", help="partition gamma")
    p.set_defaults(func=cmd_atom)

    p = sub.add_parser("ctype", parents=[common], help="catabolism multi-type")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_ctype)

    p = sub.add_parser("catabolize", parents=[common], help="row or column catabolism")
    p.add_argument("file", nargs="?")
    p.add_argument("--mode", choices=["row", "col"], default="row")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_catabolize)

    p = sub.add_parser("transpose", parents=[common], help="the bijection tr_R")
    p.add_argument("file", nargs="?")
    p.add_argument("--word", help="comma-separated LR word")
    p.set_defaults(func=cmd_transpose)

    p = sub.add_parser("verify", parents=[common], help="exhaustive property suites")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for 'all'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common], help="TSV tables and figures")
    p.add_argument("--order", choices=["cocyclage", "strong", "cyclage"], default="cocyclage")
    p.set_defaults(func=cmd_report)
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args, extra = ap.parse_known_args(argv)
        # a trailing tableau file after options
        if extra and len(extra) == 1 and not extra[0].startswith("-") and \
                getattr(args, "file", "") is None:
            args.file = extra[0]
        elif extra:
            ap.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, RectSpecError, TableauError, TransposeError, ChainError,
            PosetError, ValueError, FileNotFoundError, json.JSONDecodeError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
