"""
Command-line front end.  Exit codes: 0 success, 1 verification failure,
2 invalid input, 3 cross-check mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import fillings as fl
from . import frobenius as fr
from . import oracle as orc
from . import osp as ospmod
from . import shapes
from .qpoly import QPoly

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


def parse_partition(text: str):
    if text.strip() == "":
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}")
    return shapes.check_partition(parts)


def _render_qpoly(f: QPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(f.to_json())
    if fmt == "csv":
        return ",".join(f.to_json())
    return str(f)


def _schur_str(expansion) -> str:
    if not expansion.terms:
        return "0"
    parts = []
    for la, c in expansion.terms:
        idx = ",".join(str(x) for x in la)
        parts.append(f"({c}) * s[{idx}]")
    return " + ".join(parts)


def _fund_str(expansion) -> str:
    if not expansion.terms:
        return "0"
    parts = []
    for d, c in expansion.terms:
        idx = ",".join(str(x) for x in d)
        parts.append(f"({c}) * F[{{{idx}}}]")
    return " + ".join(parts)


# --- verification grid ----------------------------------------------------


def grid_cells(max_n: int, max_s: int):
    for n in range(1, max_n + 1):
        for s in range(1, max_s + 1):
            for k in range(0, n + 1):
                for la in shapes.partitions_of(k, max_length=s):
                    yield n, la, s


def _cell_basis(cell):
    n, la, s = cell
    count = len(shapes.enumerate_staircase_set(n, la, s))
    ok = (
        count == ospmod.count_osp(n, la, s)
        and count == orc.hilbert_function(n, la, s)(1)
        and orc.verify_basis(n, la, s)
    )
    return ok, f"basis n={n} lambda={la} s={s} size={count}"


def _cell_osp(cell):
    n, la, s = cell
    ok = True
    for blocks in ospmod.enumerate_osp(n, la, s):
        phi = ospmod.osp_to_seci(blocks, la, s)
        if ospmod.seci_to_osp(phi) != blocks:
            ok = False
    if len(la) < s and sum(la) < n:
        grown = tuple(la) + (1,)
        total = ospmod.count_osp(n, grown, s)
        if s - 1 >= len(la):
            total += ospmod.count_osp(n, la, s - 1)
        ok = ok and total == ospmod.count_osp(n, la, s)
    return ok, f"osp n={n} lambda={la} s={s}"


def _eci_tally(n, la, s, stat):
    tally = {}
    for phi in fl.enumerate_eci_bounded(n, la, s, n):
        w = phi.content(n)
        q = fl.inv(phi) if stat == "inv" else fl.dinv(phi, s)
        tally[w] = tally.get(w, QPoly.zero()) + QPoly.monomial(q)
    return {k: v for k, v in tally.items() if v}


def _cell_equidistribution(cell):
    n, la, s = cell
    ok = _eci_tally(n, la, s, "inv") == _eci_tally(n, la, s, "dinv")
    for phi in fl.enumerate_seci(n, la, s):
        gamma = (1,) * n
        code = fl.invcode(phi)
        if fl.insert_inv(code, phi.shape, s, gamma) != phi:
            ok = False
        dcode = fl.dinvcode(phi, s)
        if fl.insert_dinv(dcode, phi.shape, s, gamma) != phi:
            ok = False
    return ok, f"equidistribution n={n} lambda={la} s={s}"


def _cell_skewing(cell):
    n, la, s = cell
    ok = all(fr.skew_recursion_check(n, la, s, j) for j in range(1, n + 1))
    return ok, f"skewing n={n} lambda={la} s={s}"


def _cell_exact_sequence(cell):
    n, la, s = cell
    if len(la) >= s:
        return True, f"exact-sequence n={n} lambda={la} s={s} (skipped)"
    ok = fr.removing_zeros_check(n, la, s)
    if sum(la) < n:
        ok = ok and fr.one_step_zero_removal_check(n, la, s)
    return ok, f"exact-sequence n={n} lambda={la} s={s}"


def _cell_monotonicity(cell):
    n, la, s = cell
    ok = True
    # dominance-comparable partners of equal size
    for mu in shapes.partitions_of(sum(la), max_length=s):
        if mu != la and shapes.dominance_leq(la, mu):
            ok = ok and fr.monotonicity_check(n, la, mu, s)
    # containment partners one box larger
    for mu in shapes.partitions_of(sum(la) + 1, max_length=s):
        if sum(mu) <= n and shapes.partition_contains(la, mu):
            ok = ok and fr.monotonicity_check(n, la, mu, s)
    return ok, f"monotonicity n={n} lambda={la} s={s}"


def _cell_oracle(cell):
    n, la, s = cell
    h = fr.hilb(n, la, s)
    ok = h == fr.hilb(n, la, s, "dinv") == orc.hilbert_function(n, la, s)
    if n <= 5 and s <= 3:
        ok = ok and orc.graded_frobenius_oracle(n, la, s) == fr.frob(n, la, s).schur
    return ok, f"oracle n={n} lambda={la} s={s}"


def _cell_rank(cell):
    n, la, s = cell
    ok = True
    for d in range(0, 7):
        base = fr.rank_hilb(n, la, d).coefficient(d)
        for extra in (1, 2):
            bigger = max(d + 1 + extra, len(la), 1)
            if fr.hilb(n, la, bigger).coefficient(d) != base:
                ok = False
    return ok, f"rank n={n} lambda={la}"


def _cell_hl_expansion(cell):
    n, la, s = cell
    return fr.hl_expansion_check(n, la, s), f"hl-expansion n={n} lambda={la} s={s}"


SUITES = {
    "basis": _cell_basis,
    "osp": _cell_osp,
    "equidistribution": _cell_equidistribution,
    "skewing": _cell_skewing,
    "exact-sequence": _cell_exact_sequence,
    "monotonicity": _cell_monotonicity,
    "oracle": _cell_oracle,
    "rank": _cell_rank,
    "hl-expansion": _cell_hl_expansion,
}

# the experimental suite reports findings without failing the run
ADVISORY_SUITES = {"hl-expansion"}


def _run_cell(task):
    suite, cell = task
    ok, desc = SUITES[suite](cell)
    return suite, ok, desc


def cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    tasks = []
    for suite in suites:
        for cell in grid_cells(args.max_n, args.max_s):
            n, la, s = cell
            if suite == "rank" and (s != args.max_s or n > 5):
                continue  # rank cells do not depend on s
            if suite == "equidistribution" and (n > 5 or s > 3):
                continue
            if suite == "hl-expansion" and (n > 5 or s > 3):
                continue
            tasks.append((suite, cell))
    threads = args.threads
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_cell, tasks))
    else:
        results = [_run_cell(t) for t in tasks]
    failures = 0
    for suite, ok, desc in results:
        if ok:
            print(f"ok      {desc}")
        elif suite in ADVISORY_SUITES:
            print(f"FINDING {desc}")
        else:
            print(f"FAIL    {desc}")
            failures += 1
    print(f"{len(results)} checks, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


# --- simple commands ------------------------------------------------------


def cmd_hilb(args) -> int:
    n, la, s = args.n, args.lam, args.s
    values = {}
    methods = ["inv", "dinv", "oracle"] if args.check else [args.method]
    for method in methods:
        if method == "oracle":
            values[method] = orc.hilbert_function(n, la, s)
        else:
            values[method] = fr.hilb(n, la, s, method)
    if args.check and len(set(map(str, values.values()))) != 1:
        print("cross-check mismatch:", {k: str(v) for k, v in values.items()},
              file=sys.stderr)
        return EXIT_MISMATCH
    print(_render_qpoly(values[methods[0]], args.format))
    return EXIT_OK


def cmd_frob(args) -> int:
    n, la, s = args.n, args.lam, args.s
    series = fr.frob(n, la, s)
    if args.check and orc.graded_frobenius_oracle(n, la, s) != series.schur:
        print("cross-check mismatch against the character oracle", file=sys.stderr)
        return EXIT_MISMATCH
    if args.basis == "fundamental":
        out = series.fund
        print(json.dumps(out.to_json()) if args.format == "json" else _fund_str(out))
    else:
        out = series.schur
        print(json.dumps(out.to_json()) if args.format == "json" else _schur_str(out))
    return EXIT_OK


def cmd_rank_hilb(args) -> int:
    print(_render_qpoly(fr.rank_hilb(args.n, args.lam, args.max_degree), args.format))
    return EXIT_OK


def cmd_rank_frob(args) -> int:
    series = fr.rank_frob(args.n, args.lam, args.max_degree)
    out = series.schur
    print(json.dumps(out.to_json()) if args.format == "json" else _schur_str(out))
    return EXIT_OK


def cmd_basis(args) -> int:
    members = shapes.enumerate_staircase_set(args.n, args.lam, args.s)
    if args.count:
        print(len(members))
    elif args.format == "json":
        print(json.dumps([list(alpha) for alpha in members]))
    else:
        for alpha in members:
            print(" ".join(map(str, alpha)))
    return EXIT_OK


def cmd_osp(args) -> int:
    members = ospmod.enumerate_osp(args.n, args.lam, args.s)
    if args.count:
        print(len(members))
    elif args.format == "json":
        print(json.dumps([[list(b) for b in blocks] for blocks in members]))
    else:
        for blocks in members:
            print(" | ".join(",".join(map(str, b)) for b in blocks))
    return EXIT_OK


def cmd_fillings(args) -> int:
    if args.standard:
        members = fl.enumerate_seci(args.n, args.lam, args.s)
    else:
        members = fl.enumerate_eci_bounded(
            args.n, args.lam, args.s, args.max_label or args.n
        )
    if args.count:
        print(len(members))
        return EXIT_OK
    for phi in members:
        record = phi.to_json()
        record["inv"] = fl.inv(phi)
        record["dinv"] = fl.dinv(phi, args.s)
        if args.format == "json":
            print(json.dumps(record))
        else:
            cols = " | ".join(
                ",".join(map(str, col)) for col in phi.columns
            )
            print(f"{cols}   inv={record['inv']} dinv={record['dinv']}")
    return EXIT_OK


# --- argument plumbing ----------------------------------------------------


def _default_threads() -> int:
    env = os.environ.get("STAIRCASE_RINGS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _add_common(p, with_s=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default="", metavar="PARTS",
                   help="comma-separated partition, empty for the empty partition")
    if with_s:
        p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="staircase-rings",
        description="Monomial bases, Hilbert series, and graded Frobenius "
        "characteristics of the quotient rings indexed by (n, lambda, s).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilb", help="graded Hilbert series")
    _add_common(p)
    p.add_argument("--method", choices=["inv", "dinv", "oracle"], default="inv")
    p.add_argument("--check", action="store_true",
                   help="compute all methods and compare")
    p.set_defaults(fn=cmd_hilb)

    p = sub.add_parser("frob", help="graded Frobenius characteristic")
    _add_common(p)
    p.add_argument("--basis", choices=["schur", "fundamental"], default="schur")
    p.add_argument("--check", action="store_true",
                   help="compare against the character oracle")
    p.set_defaults(fn=cmd_frob)

    p = sub.add_parser("rank-hilb", help="stable Hilbert series, truncated")
    _add_common(p, with_s=False)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(fn=cmd_rank_hilb)

    p = sub.add_parser("rank-frob", help="stable Frobenius series, truncated")
    _add_common(p, with_s=False)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(fn=cmd_rank_frob)

    p = sub.add_parser("basis", help="staircase-set monomial basis")
    _add_common(p)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("osp", help="ordered set partitions")
    _add_common(p)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_osp)

    p = sub.add_parser("fillings", help="extended column-increasing fillings")
    _add_common(p)
    p.add_argument("--standard", action="store_true")
    p.add_argument("--max-label", type=int, default=None)
    p.add_argument("--count", action="store_true")
    p.set_defaults(fn=cmd_fillings)

    p = sub.add_parser("verify", help="run a verification suite over a grid")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-s", type=int, default=3)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if hasattr(args, "lam"):
        try:
            args.lam = parse_partition(args.lam)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
