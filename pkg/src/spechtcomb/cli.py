"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 (e, p) outside the range where decomposition numbers are asserted.
"""
from __future__ import annotations

import argparse
import json
import sys

from .decomposition import (
    HypothesisError,
    adjustment_matrix,
    check_hypothesis,
    combinatorial_decomp_matrix,
    decomp_matrix,
)
from .partitions import Partition, degree, enumerate_std, enumerate_std_with_residue, residue_sequence
from .paths import Path2, arcs, deg_path, render_ascii, wall_hits
from .regularisation import ep_compatible, reg_ep, reg_prime, render_chain, rho_Z, w_tuple
from .verification import SUITES, counterexample_census, default_jobs, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_tableaux(args) -> tuple[int, str]:
    try:
        lam = Partition.parse(args.shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.e < 2:
        raise UsageError("e must be at least 2")
    if args.residues:
        try:
            tabs = enumerate_std_with_residue(lam, args.e, args.residues)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        tabs = list(enumerate_std(lam))
    records = []
    for t in tabs:
        rec = {
            "column_word": t.column_word(),
            "rows": [list(r) for r in t.rows()],
            "degree": degree(t, args.e),
            "residues": str(residue_sequence(t, args.e)),
        }
        records.append(rec)
    if args.format == "json":
        return EXIT_OK, _dump({"shape": str(lam), "e": args.e, "count": len(records), "tableaux": records})
    if args.format == "csv":
        lines = ["column_word,rows,degree,residues"]
        lines += [
            f'{r["column_word"]},"{"/".join(",".join(map(str, row)) for row in r["rows"])}",{r["degree"]},{r["residues"]}'
            for r in records
        ]
        return EXIT_OK, "\n".join(lines)
    lines = [f"shape ({lam}), e={args.e}: {len(records)} tableaux"]
    for r in records:
        rows = "/".join(",".join(map(str, row)) for row in r["rows"])
        lines.append(f"  {r['column_word']:<{max(lam.n, 4)}}  deg {r['degree']:>3}  res {r['residues']}  rows {rows}")
    return EXIT_OK, "\n".join(lines)


def cmd_regularise(args) -> tuple[int, str]:
    try:
        pi = Path2.from_word(args.stepword)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not pi.is_dominant():
        raise UsageError("step word leaves the dominant region (a partial sum is negative)")
    if args.e < 2 or args.p < 0 or args.p == 1:
        raise UsageError("need e >= 2 and p = 0 or p >= 2")
    e, p = args.e, args.p
    chain = reg_ep(pi, e, p)
    eta = chain.output
    final = reg_prime(pi, e, p)
    data = {
        "input": {"step_word": pi.word(), "endpoint": pi.end, "degree": deg_path(pi, e), "shape": str(pi.shape())},
        "e": e,
        "p": p,
        "extrapolated": not ep_compatible(e, p),
        "wall_hits": list(wall_hits(pi, e)),
        "stages": chain.to_json(),
        "regularisation_set": list(chain.zset),
        "w": list(w_tuple(chain.zset, eta, e, p)) if p else [],
        "r": chain.r,
        "output": {"step_word": eta.word(), "degree": deg_path(eta, e), "shape": str(eta.shape())},
        "reg_prime": {"step_word": final.word(), "degree": deg_path(final, e)},
        "arcs": [a.to_json() for a in arcs(eta, e)],
    }
    if args.format == "json":
        return EXIT_OK, _dump(data)
    lines = [
        f"input   {pi.word()}  shape ({pi.shape()})  deg {data['input']['degree']}",
        f"Z       {list(chain.zset)}   r = {chain.r}" + ("   [extrapolated]" if data["extrapolated"] else ""),
    ]
    for st in data["stages"]:
        lines.append(f"stage   z={st['z']}  end {st['endpoint']}  deg {st['degree']}  {st['step_word']}")
    lines.append(f"output  {eta.word()}  shape ({eta.shape()})  deg {data['output']['degree']}")
    if p:
        lines.append(f"w       {data['w']}")
    lines.append(f"reg'    {final.word()}  deg {data['reg_prime']['degree']}")
    lines.append("")
    lines.append(render_chain(chain))
    if p and chain.zset:
        rho = rho_Z(eta, chain.zset, e, p)
        lines.append("")
        lines.append(f"after reflecting arcs (deg {deg_path(rho, e)})")
        lines.append(render_ascii(rho, e, p))
    return EXIT_OK, "\n".join(lines)


def cmd_decomp(args) -> tuple[int, str]:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    if args.e < 2 or args.p < 0 or args.p == 1:
        raise UsageError("need e >= 2 and p = 0 or p >= 2")
    if args.extrapolate:
        mat = combinatorial_decomp_matrix(args.n, args.e, args.p)
        adj = None
    else:
        check_hypothesis(args.e, args.p)
        mat = decomp_matrix(args.n, args.e, args.p)
        adj = adjustment_matrix(args.n, args.e, args.p) if args.adjustment and args.p > 0 else None
    if args.format == "json":
        data = {"decomposition": mat.to_json()}
        if adj is not None:
            data["adjustment"] = adj.to_json()
        return EXIT_OK, _dump(data)
    if args.format == "csv":
        out = mat.to_csv()
        if adj is not None:
            out += "\n" + adj.to_csv()
        return EXIT_OK, out.rstrip("\n")
    head = f"D(q) for n={args.n}, e={args.e}, p={args.p}" + ("  [extrapolated]" if mat.extrapolated else "")
    out = head + "\n" + mat.pretty()
    if adj is not None:
        out += f"\n\nadjustment matrix\n{adj.pretty()}"
    return EXIT_OK, out


def cmd_verify(args) -> tuple[int, str]:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, args.max_n, args.e, args.p, args.jobs) for s in suites]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        text = _dump(payload)
    else:
        lines = [r.summary() for r in reports]
        for r in reports:
            if r.first_failure:
                lines.append(f"  first failure in {r.suite}: {json.dumps(r.first_failure)}")
            for ex in r.exploratory:
                if not ex["passed"]:
                    lines.append(f"  exploratory (non-gating) failure: {json.dumps(ex)}")
        text = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_FAIL), text


def cmd_census(args) -> tuple[int, str]:
    rep = counterexample_census()
    return (EXIT_OK if rep["passed"] else EXIT_FAIL), _dump(rep)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spechtcomb",
        description="Tableaux, regularisation and graded decomposition numbers for two-column partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="pretty", choices=("json", "csv", "pretty")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("tableaux", help="list standard tableaux with degrees and residues")
    p.add_argument("--shape", required=True, help='partition, e.g. "2,2,1,1" or "2^4,1^21"')
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--residues", help="only tableaux with this residue sequence, e.g. 01220101")
    fmt(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("regularise", help="trace the regularisation of a two-column step word")
    p.add_argument("stepword", help="word over {+,-} or {1,2}")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    fmt(p, choices=("json", "pretty"))
    p.set_defaults(func=cmd_regularise)

    p = sub.add_parser("decomp", help="graded decomposition matrix of the two-column block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--adjustment", action="store_true", help="also print the adjustment matrix (p > 0)")
    p.add_argument(
        "--extrapolate",
        action="store_true",
        help="count regularisations instead of using the closed form; allowed for any (e, p)",
    )
    fmt(p)
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--e", type=_int_list, default=None, help="comma-separated e values")
    p.add_argument("--p", type=_int_list, default=None, help="comma-separated p values")
    p.add_argument(
        "--jobs", type=int, default=None, help=f"worker processes (default from SPECHTCOMB_JOBS, now {default_jobs()})"
    )
    fmt(p, default="pretty", choices=("json", "pretty"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="degree census of the (4,3,1), e=3 example")
    fmt(p, default="json", choices=("json",))
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GATE
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
