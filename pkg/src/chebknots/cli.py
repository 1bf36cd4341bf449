"""Command line interface: ``chebknots <command> ...``.

Exit codes: 0 success, 2 bad arguments or domain error, 3 a computational
cap was hit (partial report), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from functools import reduce
from itertools import combinations

from . import __version__
from .algebra import (
    embedding_witness,
    is_embedding,
    pgcd,
    reduce_triple,
    remnant,
)
from .diagram import ALTERNATING, diagram_for, gauss_to_pd, writhe
from .errors import DomainError, NotCoprime, TooManyCrossings
from .geometry import alternating_z, node_count, nodes
from .invariants import DEFAULT_CAP, identify, jones
from .poly import T, Poly

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_IO = 0, 2, 3, 4
SCHEMA = "chebknots.{}/1"


class CapExceeded(Exception):
    """Carries a partial report out of a command."""

    def __init__(self, report: dict, message: str):
        super().__init__(message)
        self.report = report


# -- reports ---------------------------------------------------------------


def report_embed(i: int, j: int, k: int) -> dict:
    t = (i, j, k)
    if min(t) < 1:
        raise DomainError("entries must be positive integers")
    emb = is_embedding(t)
    out = {"triple": list(t), "pgcd": pgcd(*t), "embedding": emb, "unit_component": 1 in t, "witness": None}
    if emb and 1 not in t:
        w = embedding_witness(t)
        out["witness"] = dict(w.to_json(), verified=True)
    return out


def report_reduce(i: int, j: int, k: int) -> dict:
    trace = reduce_triple((i, j, k))
    out = trace.to_json()
    out["step_count"] = len(trace.steps)
    out["degrees"] = trace.degrees()
    return out


def table1_rows(max_nodes: int) -> list[dict]:
    if max_nodes < 1:
        raise DomainError("max_nodes must be at least 1")
    rows = []
    # (i-1)(j-1)/2 <= max_nodes with i >= 3 bounds j
    for j in range(4, 2 * max_nodes + 2):
        for i in range(3, j):
            if math.gcd(i, j) == 1 and node_count(i, j) <= max_nodes:
                rows.append({"i": i, "j": j, "nodes": node_count(i, j), "remnant": remnant(i, j)})
    rows.sort(key=lambda r: (r["nodes"], r["i"], r["j"]))
    return rows


def report_table1(max_nodes: int) -> dict:
    return {"max_nodes": max_nodes, "rows": table1_rows(max_nodes)}


def _z_spec(k, alternating: bool):
    if alternating:
        return ALTERNATING
    if k is None:
        raise DomainError("give a third degree k or --alternating")
    return k


def report_knot(i: int, j: int, k=None, alternating: bool = False, cap: int = DEFAULT_CAP) -> dict:
    if alternating and k is not None:
        raise DomainError("--alternating takes a pair, not a triple")
    out = {"pair": [i, j], "k": k, "alternating": alternating}
    if k is not None:
        if not is_embedding((i, j, k)):
            raise DomainError(f"({i},{j},{k}) is not an embedding: pgcd {pgcd(i, j, k)}")
        if 1 in (i, j, k):
            out.update(nodes=0, trivial=True, jones={"0": "1"}, identified={"name": "0_1", "crossing_number": 0, "mirror_matched": False})
            return out
    elif alternating and not 3 <= i < j:
        raise DomainError(f"alternating knots need 3 <= i < j, got ({i},{j})")
    seq, g = diagram_for(i, j, _z_spec(k, alternating))
    pd = gauss_to_pd(g)
    out.update(
        nodes=g.crossing_count,
        trivial=False,
        crossing_sequence=seq.to_string(),
        gauss=g.to_string(),
        pd=pd.to_json(),
        writhe=writhe(g),
    )
    try:
        v = jones(g, cap=cap)
    except TooManyCrossings as exc:
        out.update(jones=None, identified=None, skipped=str(exc))
        raise CapExceeded(out, str(exc)) from exc
    ident = identify(v)
    out["jones"] = v.to_json()
    out["jones_t"] = _jones_t(v)
    out["identified"] = ident.to_json() if ident else None
    return out


def _jones_t(v) -> str:
    from .invariants import LaurentPoly

    return LaurentPoly({e // 4: c for e, c in v.terms.items()}).to_string("t")


def _content(p: Poly) -> int:
    return reduce(math.gcd, p.numerators, 0)


def report_param(i: int, j: int) -> dict:
    if math.gcd(i, j) != 1:
        raise NotCoprime(f"gcd({i},{j}) = {math.gcd(i, j)}")
    z = alternating_z(i, j)
    c = _content(z) if z.denominator == 1 else 1
    prim = z * Poly([1]) if c == 1 else Poly([x / c for x in z.coeffs])
    return {
        "pair": [i, j],
        "x": T(i).to_json(),
        "y": T(j).to_json(),
        "z": z.to_json(),
        "z_degree": z.degree,
        "z_content": c,
        "z_primitive": prim.to_json(),
        "strings": {
            "x": T(i).to_string(),
            "y": T(j).to_string(),
            "z": z.to_string(),
            "z_primitive": prim.to_string(),
        },
    }


def report_svg(i: int, j: int, k, alternating: bool, path) -> dict:
    from .plotting import render_svg

    seq = None
    if k is not None or alternating:
        if k is not None and not is_embedding((i, j, k)):
            raise DomainError(f"({i},{j},{k}) is not an embedding")
        seq, _ = diagram_for(i, j, _z_spec(k, alternating))
    elif math.gcd(i, j) != 1:
        raise NotCoprime(f"gcd({i},{j}) = {math.gcd(i, j)}")
    label = f"(T_{i}, T_{j}" + (f", T_{k})" if k is not None else (", alternating)" if alternating else ")"))
    info = render_svg(i, j, path, seq=seq, title=label)
    return dict(info.to_json(), pair=[i, j], k=k, alternating=alternating)


def report_conjecture2(i: int, j: int, cap: int = DEFAULT_CAP) -> dict:
    if math.gcd(i, j) != 1 or not 2 <= i < j:
        raise NotCoprime(f"need coprime 2 <= i < j, got ({i},{j})")
    ks = remnant(i, j)
    entries, polys, partial = [], {}, False
    for k in ks:
        seq, g = diagram_for(i, j, k)
        e = {"k": k, "nodes": g.crossing_count}
        try:
            v = jones(g, cap=cap)
        except TooManyCrossings as exc:
            partial = True
            e.update(jones=None, identified=None, skipped=str(exc))
        else:
            polys[k] = v
            ident = identify(v)
            e.update(jones=v.to_json(), identified=ident.to_json() if ident else None)
        entries.append(e)
    clashes = [
        [a, b] for a, b in combinations(sorted(polys), 2) if polys[a] == polys[b] or polys[a] == polys[b].mirror()
    ]
    out = {
        "pair": [i, j],
        "remnant": ks,
        "knots": entries,
        "compared": sorted(polys),
        "jones_collisions": clashes,
        "pairwise_distinct": not clashes,
        "partial": partial,
        "note": "empirical evidence only: distinct Jones polynomials (up to mirror) imply distinct knots, not conversely",
    }
    if partial:
        raise CapExceeded(out, "some diagrams exceed the crossing cap")
    return out


# -- text rendering --------------------------------------------------------


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def text_embed(r: dict) -> list[str]:
    lines = [f"triple: {_fmt(r['triple'])}", f"pgcd: {r['pgcd']}", f"embedding: {_fmt(r['embedding'])}"]
    lines.append(f"unit_component: {_fmt(r['unit_component'])}")
    w = r["witness"]
    if w:
        lines += [f"witness: a={w['a']} b={w['b']} c={w['c']}", f"identity: {w['identity']}", "verified: true"]
    return lines


def text_reduce(r: dict) -> list[str]:
    lines = [f"start: {_fmt(r['start'])}", f"steps: {r['step_count']}"]
    for n, s in enumerate(r["steps"], 1):
        lines.append(f"{n}\t{s['form']}\t{_fmt(s['triple'])}")
    lines += [f"end: {_fmt(r['end'])}", f"trivial: {_fmt(r['trivial'])}"]
    return lines


def text_table1(r: dict) -> list[str]:
    lines = ["i\tj\tnodes\tremnant"]
    for row in r["rows"]:
        lines.append(f"{row['i']}\t{row['j']}\t{row['nodes']}\t{_fmt(row['remnant'])}")
    return lines


def text_knot(r: dict) -> list[str]:
    head = f"pair: {_fmt(r['pair'])}"
    lines = [head, f"k: {_fmt(r['k'])}", f"alternating: {_fmt(r['alternating'])}", f"nodes: {r['nodes']}"]
    if r.get("trivial"):
        return lines + ["trivial: true", "identified: 0_1"]
    lines += [
        f"crossing_sequence: {r['crossing_sequence']}",
        f"gauss: {r['gauss']}",
        f"writhe: {r['writhe']}",
        "pd: " + " ".join("X[" + ",".join(map(str, x)) + "]" for x in r["pd"]),
    ]
    if r.get("skipped"):
        return lines + [f"invariants: skipped ({r['skipped']})"]
    lines.append(f"jones: {r['jones_t']}")
    ident = r["identified"]
    if ident:
        lines.append(f"identified: {ident['name']}" + (" (mirror)" if ident["mirror_matched"] else ""))
    else:
        lines.append("identified: -")
    return lines


def text_param(r: dict) -> list[str]:
    s = r["strings"]
    return [
        f"pair: {_fmt(r['pair'])}",
        f"x: {s['x']}",
        f"y: {s['y']}",
        f"z: {s['z']}",
        f"z_degree: {r['z_degree']}",
        f"z_content: {r['z_content']}",
        f"z/{r['z_content']}: {s['z_primitive']}",
    ]


def text_svg(r: dict) -> list[str]:
    return [f"wrote: {r['path']}", f"samples: {r['samples']}", f"nodes: {r['nodes']}", f"gaps: {r['gaps']}"]


def text_conjecture2(r: dict) -> list[str]:
    lines = [f"pair: {_fmt(r['pair'])}", f"remnant: {_fmt(r['remnant'])}", "k\tnodes\tidentified"]
    for e in r["knots"]:
        ident = e["identified"]["name"] if e.get("identified") else ("capped" if e.get("skipped") else "-")
        lines.append(f"{e['k']}\t{e['nodes']}\t{ident}")
    lines += [
        f"pairwise_distinct: {_fmt(r['pairwise_distinct'])}",
        f"partial: {_fmt(r['partial'])}",
        f"note: {r['note']}",
    ]
    return lines


TEXT = {
    "embed": text_embed,
    "reduce": text_reduce,
    "table1": text_table1,
    "knot": text_knot,
    "param": text_param,
    "svg": text_svg,
    "conjecture2": text_conjecture2,
}


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(dict(schema=SCHEMA.format(command), **report), indent=2, sort_keys=False) + "\n"
    body = TEXT[command](report)
    return "\n".join([f"--- {command} ---", *body, "--- end ---"]) + "\n"


# -- argument parsing ------------------------------------------------------


def positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "svg"], default="text")
    common.add_argument("--out", metavar="PATH", help="write the report (or figure) here instead of stdout")
    common.add_argument("--cap", type=positive, default=DEFAULT_CAP, help="bracket crossing cap (default %(default)s)")

    ap = argparse.ArgumentParser(prog="chebknots", description="Chebyshev curves, embeddings and knots.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, help_text in (("embed", "embedding test with witness"), ("reduce", "reduction to a reduced triple")):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("i", type=positive)
        p.add_argument("j", type=positive)
        p.add_argument("k", type=positive)

    p = sub.add_parser("table1", parents=[common], help="remnants of small coprime pairs")
    p.add_argument("max_nodes", type=positive, nargs="?", default=16)

    p = sub.add_parser("knot", parents=[common], help="diagram and Jones polynomial")
    p.add_argument("i", type=positive)
    p.add_argument("j", type=positive)
    p.add_argument("k", type=positive, nargs="?")
    p.add_argument("--alternating", action="store_true")

    p = sub.add_parser("param", parents=[common], help="explicit alternating parametrization")
    p.add_argument("i", type=positive)
    p.add_argument("j", type=positive)

    p = sub.add_parser("svg", parents=[common], help="draw the curve or a diagram")
    p.add_argument("args", nargs="+", metavar="i j [k] PATH")
    p.add_argument("--alternating", action="store_true")

    p = sub.add_parser("conjecture2", parents=[common], help="compare Jones polynomials over the remnant")
    p.add_argument("i", type=positive)
    p.add_argument("j", type=positive)
    return ap


def _svg_args(ap, args):
    vals = list(args.args)
    path = args.out
    if vals and not vals[-1].lstrip("-").isdigit():
        path = vals.pop()
    if path is None:
        ap.error("svg needs an output path")
    if len(vals) not in (2, 3):
        ap.error("svg takes i j [k] PATH")
    try:
        nums = [positive(v) for v in vals]
    except argparse.ArgumentTypeError as exc:
        ap.error(str(exc))
    return nums[0], nums[1], (nums[2] if len(nums) == 3 else None), path


def dispatch(ap, args) -> dict:
    c = args.command
    if c == "embed":
        return report_embed(args.i, args.j, args.k)
    if c == "reduce":
        return report_reduce(args.i, args.j, args.k)
    if c == "table1":
        return report_table1(args.max_nodes)
    if c == "knot":
        return report_knot(args.i, args.j, args.k, args.alternating, args.cap)
    if c == "param":
        return report_param(args.i, args.j)
    if c == "svg":
        i, j, k, path = _svg_args(ap, args)
        return report_svg(i, j, k, args.alternating, path)
    return report_conjecture2(args.i, args.j, args.cap)


def emit(text: str, out) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    fmt = args.format
    if fmt == "svg" and args.command not in ("svg", "knot"):
        ap.error("--format svg applies to the svg and knot commands")
    if args.command == "knot" and fmt == "svg":
        if not args.out:
            ap.error("--format svg needs --out")
        args.args = [str(args.i), str(args.j)] + ([str(args.k)] if args.k else []) + [args.out]
        args.out = None
        args.command = "svg"
    if args.command == "svg" and fmt == "svg":
        fmt = "text"  # the figure goes to the path; the summary to stdout

    code = EXIT_OK
    try:
        report = dispatch(ap, args)
    except CapExceeded as exc:
        report, code = exc.report, EXIT_CAP
        print(f"chebknots: {exc}", file=sys.stderr)
    except DomainError as exc:
        print(f"chebknots: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"chebknots: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO

    out = None if args.command == "svg" else args.out
    try:
        emit(render(args.command, report, fmt), out)
    except OSError as exc:
        print(f"chebknots: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    raise SystemExit(main())
