"""Command-line front end.

Subcommands: hom, compose, table, verify, plot, dims.  Exit codes: 0 on
success, 1 on verification failure, 2 on usage errors.  The environment
variable MIRROR_MORSE_PRECISION overrides the float precision in bits
(default 64).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import category, dg, svgplot, table, verify
from .polytope import ProductPolytope


def _precision(args) -> int:
    if args.precision is not None:
        return args.precision
    env = os.environ.get("MIRROR_MORSE_PRECISION")
    return int(env) if env else 64


def _parse_space(parser, text: str) -> ProductPolytope:
    try:
        return ProductPolytope.from_descriptor(text)
    except ValueError as exc:
        parser.error(str(exc))


def _parse_label(parser, P: ProductPolytope, text: str, sep: str = ",") -> tuple[int, ...]:
    try:
        parts = [int(x) for x in text.split(sep)]
    except ValueError:
        parser.error(f"cannot parse label {text!r}")
    if len(parts) != len(P.factors):
        parser.error(f"label {text!r} needs {len(P.factors)} component(s)")
    return tuple(parts)


def _parse_triple(parser, P: ProductPolytope, text: str) -> list[tuple[int, ...]]:
    objs = [_parse_label(parser, P, piece, sep=":") for piece in text.split(",")]
    if len(objs) != 3:
        parser.error(f"--triple needs three objects, got {len(objs)}")
    return objs


def _parse_ranges(parser, P: ProductPolytope, text: str) -> list[tuple[int, int]]:
    ranges = []
    for piece in text.split(","):
        if ".." not in piece:
            parser.error(f"range {piece!r} must look like lo..hi")
        lo, hi = piece.split("..", 1)
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            parser.error(f"cannot parse range {piece!r}")
        if hi < lo:
            parser.error(f"empty range {piece!r}")
        ranges.append((lo, hi))
    if len(ranges) == 1 and len(P.factors) > 1:
        ranges = ranges * len(P.factors)
    if len(ranges) != len(P.factors):
        parser.error(f"need one range per factor ({len(P.factors)})")
    return ranges


def _emit_rows(rows, header, fmt):
    if fmt == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows],
                         sort_keys=True, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        print(buf.getvalue(), end="")
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(h)
                  for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))


def cmd_hom(parser, args) -> int:
    P = _parse_space(parser, args.space)
    src = _parse_label(parser, P, args.from_labels)
    tgt = _parse_label(parser, P, args.to_labels)
    hs = category.hom_space(P, src, tgt)
    rows = []
    for g in hs.generators:
        faces = table.boundary_faces(g.components)
        rows.append((
            ",".join(str(i) for i in g.index),
            ",".join(table.point_strings(P, g.components)),
            g.degree,
            ";".join(f"f{f['factor']}" + "".join(f":x{j}=0" for j in f["zeros"])
                     + (":sum=2" if f["sum_eq_2"] else "") for f in faces),
        ))
    _emit_rows(rows, ["index", "point", "degree", "faces"], args.format)
    if not hs.by_degree(0):
        total = 1
        for a, b, n in zip(src, tgt, P.dims):
            total *= dg.hom_dimension(a, b, n) if a <= b else dg.serre_rank(a, b, n)
        print(f"# degree-0 part trivial; serre_rank={total}")
    return 0


def cmd_dims(parser, args) -> int:
    P = _parse_space(parser, args.space)
    ranges = _parse_ranges(parser, P, args.range)
    objects = table.lexicographic_collection(ranges)
    rows = []
    for L in objects:
        for M in objects:
            d0 = 1
            hi = 1
            for a, b, n in zip(L, M, P.dims):
                d0 *= dg.hom_dimension(a, b, n)
                hi *= dg.hom_dimension(a, b, n) if a <= b else dg.serre_rank(a, b, n)
            rows.append((",".join(map(str, L)), ",".join(map(str, M)), d0, hi - d0))
    _emit_rows(rows, ["from", "to", "hom_dim", "higher_rank"], args.format)
    return 0


def cmd_compose(parser, args) -> int:
    P = _parse_space(parser, args.space)
    a, b, c = _parse_triple(parser, P, args.triple)
    bits = _precision(args)
    left = category.hom_space(P, a, b).by_degree(0)
    right = category.hom_space(P, b, c).by_degree(0)
    if args.left_index is not None:
        want = tuple(int(x) for x in args.left_index.split(":"))
        left = [g for g in left if g.index == want]
    if args.right_index is not None:
        want = tuple(int(x) for x in args.right_index.split(":"))
        right = [g for g in right if g.index == want]
    if not left or not right:
        parser.error("no generators match the requested indices")
    rows = []
    for u in left:
        for v in right:
            try:
                sc = category.compose(u, v)
            except category.UnsupportedRegimeError as exc:
                parser.error(str(exc))
            entry = [
                ",".join(map(str, u.index)),
                ",".join(map(str, v.index)),
                ",".join(map(str, sc.generator.index)),
                json.dumps(sc.weight.json_dict(bits)["factors"], sort_keys=True),
                sc.weight.to_decimal_string(bits),
            ]
            if len(P.factors) == 2:
                entry.append(category.classify_product_case(u, v))
            rows.append(tuple(entry))
    header = ["left", "right", "result", "weight_factors", "weight_approx"]
    if len(P.factors) == 2:
        header.append("case")
    _emit_rows(rows, header, args.format)
    return 0


def cmd_table(parser, args) -> int:
    P = _parse_space(parser, args.space)
    ranges = _parse_ranges(parser, P, args.range)
    bits = _precision(args)
    objects = table.lexicographic_collection(ranges)
    exc = dg.exceptional_check(objects, P.dims)
    if not exc["pass"]:
        print("warning: collection is not strongly exceptional; "
              "the table diff is not expected to be empty", file=sys.stderr)
    morse_t = table.build_table(P, objects, "morse", bits)
    dg_t = table.build_table(P, objects, "dg", bits)
    diffs = table.table_diff(morse_t, dg_t)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    prefix = args.prefix or P.descriptor()
    paths = {}
    for name, payload in (("morse", morse_t), ("dg", dg_t),
                          ("diff", {"equal": not diffs, "differences": diffs})):
        path = out_dir / f"{prefix}_{name}.json"
        path.write_text(table.render_json(payload))
        paths[name] = str(path)
    print(f"objects: {len(objects)}  homs: {len(morse_t['homs'])}  "
          f"products: {len(morse_t['products'])}")
    for name, path in paths.items():
        print(f"wrote {path}")
    if diffs:
        print(f"DIFF NONEMPTY ({len(diffs)} differences)")
        return 1
    print("diff empty")
    return 0


def cmd_verify(parser, args) -> int:
    reports, ok = verify.run_suite(args.suite, args.n_max)
    for rep in reports:
        status = "PASS" if rep["pass"] else "FAIL"
        extras = {k: v for k, v in rep.items()
                  if k not in ("check", "pass", "params")}
        detail = json.dumps(extras, sort_keys=True, default=str)
        if len(detail) > 200:
            detail = detail[:197] + "..."
        print(f"[{status}] {rep['check']} {detail}")
    print("verification", "PASSED" if ok else "FAILED")
    return 0 if ok else 1


def cmd_plot(parser, args) -> int:
    P = _parse_space(parser, args.space)
    if P.total_dim > 2:
        parser.error("plotting supports total dimension <= 2 only")
    labels = _parse_triple(parser, P, args.triple)
    svg = svgplot.render_triple(P, labels, _precision(args))
    out = Path(args.out)
    out.write_text(svg)
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirror-morse",
        description="weighted Morse homotopy on dual polytopes of projective "
                    "spaces, with the monomial model as exact cross-check")
    parser.add_argument("--precision", type=int, default=None,
                        help="float precision in bits (default: "
                             "$MIRROR_MORSE_PRECISION or 64)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="list the generators of one morphism space")
    p.add_argument("--space", required=True)
    p.add_argument("--from", dest="from_labels", required=True)
    p.add_argument("--to", dest="to_labels", required=True)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    p = sub.add_parser("dims", help="hom dimensions and higher ranks over ranges")
    p.add_argument("--space", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    p = sub.add_parser("compose", help="m_2 products for one object triple")
    p.add_argument("--space", required=True)
    p.add_argument("--triple", required=True,
                   help="three objects, e.g. 0,1,2 or 0:0,1:0,1:1")
    p.add_argument("--left-index", default=None)
    p.add_argument("--right-index", default=None)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    p = sub.add_parser("table", help="emit Morse and monomial tables plus diff")
    p.add_argument("--space", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--out", default=".")
    p.add_argument("--prefix", default=None)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=("exact", "numeric", "all"), default="all")
    p.add_argument("--n-max", type=int, default=2)

    p = sub.add_parser("plot", help="SVG diagram of a triple (total dim <= 2)")
    p.add_argument("--space", required=True)
    p.add_argument("--triple", required=True)
    p.add_argument("--out", default="triple.svg")

    return parser


_COMMANDS = {
    "hom": cmd_hom,
    "dims": cmd_dims,
    "compose": cmd_compose,
    "table": cmd_table,
    "verify": cmd_verify,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
