"""Command-line front end: compute basis elements, expand products, run the
verification suites, and print cluster/layer tables.

Exit codes are the machine contract: 0 success, 1 a verified identity
failed, 2 usage error, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import classical, dcb, free_serre, pbw, qseed

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

SUITES = ("straightening", "serre", "layers", "recursions", "products",
          "closed-formulas", "pbw-expansion", "classical", "qseed")

# per-suite default bounds; --n-max / --k-max override where meaningful
DEFAULTS = {
    "layers": {"k_max": 6},
    "recursions": {"n_max": 6},
    "products": {"n_max": 5},
    "closed-formulas": {"n_max": 4, "k_max": 6},
    "pbw-expansion": {"n_max": 3},
    "classical": {"n_max": 10},
    "qseed": {"n_max": 5},
    "straightening": {},
    "serre": {},
}


def run_suite(name: str, params: dict) -> dict:
    """Run one named suite and wrap its entries with an aggregate flag."""
    n_max = params.get("n_max")
    k_max = params.get("k_max")
    seed = params.get("seed", 0)
    mode = params.get("mode")
    d = DEFAULTS[name]
    if n_max is None:
        n_max = d.get("n_max")
    if k_max is None:
        k_max = d.get("k_max", n_max)
    if n_max is None:
        n_max = k_max
    entries: list
    if name == "straightening":
        entries = pbw.verify_normal_form(seed=seed)
    elif name == "serre":
        entries = free_serre.verify_straightening_mod_serre(mode=mode, seed=seed)
    elif name == "layers":
        entries = dcb.verify_layers(k_max, seeds=(None, seed + 1, seed + 2))
    elif name == "recursions":
        entries = dcb.verify_recursions(n_max)
    elif name == "products":
        entries = dcb.verify_products(n_max)
    elif name == "closed-formulas":
        entries = dcb.verify_closed_formulas(n_max) + dcb.verify_power_formulas(k_max)
    elif name == "pbw-expansion":
        entries = dcb.verify_pbw_expansion(n_max)
    elif name == "classical":
        entries = classical.verify_classical(n_max) + _classical_cross_checks()
    elif name == "qseed":
        entries = (qseed.verify_quasi_commutation(n_max)
                   + qseed.verify_quantum_exchange(n_max)
                   + qseed.verify_bz_exchange(n_max)
                   + qseed.verify_algebra_matches_l(min(n_max, 6)))
    else:
        raise ValueError(f"unknown suite {name!r}")
    ok = all(e.get("ok", e.get("member", False)) for e in entries)
    return {"suite": name, "ok": ok, "entries": entries}


def _classical_cross_checks() -> list:
    """Quantum-to-classical bridge: q = 1 images of basis elements against
    the commutative formulas."""
    entries = []
    for m in range(0, 4):
        ok = dcb.b_element((m + 1, 0, 0, m)).specialize_q1() == classical.polynomial_form(m + 3)
        entries.append({"suite": "classical", "n": m,
                        "identity": "q=1 image of B[m+1,0,0,m] equals U_{m+3}", "ok": ok})
    for n in range(2, 5):
        ok = dcb.b_element((n, 0, 0, n)).specialize_q1() == classical.chebyshev_basis_element(n, "S")
        entries.append({"suite": "classical", "n": n,
                        "identity": "q=1 image of B[n,0,0,n] equals s_n", "ok": ok})
    return entries


def _run_suite_star(args):
    return run_suite(*args)


def _render_element(elem, fmt: str):
    if fmt == "json":
        return json.dumps(elem.to_json_dict())
    if fmt == "latex":
        return elem.to_latex()
    return str(elem)


def cmd_compute(args, parser) -> int:
    a = tuple(args.a)
    if any(x < 0 for x in a):
        parser.error("exponents must be non-negative")
    try:
        elem = dcb.b_element(a, max_layer=args.max_layer)
    except dcb.LayerCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    out = {}
    if args.dual_pbw:
        coeffs = dcb.expand_in_dual_pbw(elem)
        if args.format == "json":
            out["dual_pbw"] = [{"exp": list(e), "coef": str(c)}
                               for e, c in sorted(coeffs.items(), reverse=True)]
        else:
            for e, c in sorted(coeffs.items(), reverse=True):
                print(f"E[{','.join(map(str, e))}]: {c}")
    if args.q1:
        q1 = elem.specialize_q1()
        if args.format == "json":
            out["q1"] = str(q1)
        elif args.format == "latex":
            print(q1.to_latex())
        else:
            print(q1)
    if not args.dual_pbw and not args.q1:
        if args.format == "json":
            print(json.dumps({"a": list(a), "element": elem.to_json_dict()}))
        else:
            print(_render_element(elem, args.format))
    elif args.format == "json":
        out["a"] = list(a)
        out["element"] = elem.to_json_dict()
        print(json.dumps(out))
    return EXIT_OK


def cmd_product(args, parser) -> int:
    a, b = tuple(args.a), tuple(args.b)
    if any(x < 0 for x in a + b):
        parser.error("exponents must be non-negative")
    k = sum(a) + sum(b)
    if k > args.max_layer:
        print(f"error: product lives on layer {k} > --max-layer {args.max_layer}",
              file=sys.stderr)
        return EXIT_RESOURCE
    try:
        x = dcb.b_element(a, max_layer=args.max_layer) * dcb.b_element(b, max_layer=args.max_layer)
        tab = dcb.layer_table(k, max_layer=args.max_layer)
    except dcb.LayerCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    coeffs = dcb.expand_in_b_basis(x, tab)
    items = sorted(coeffs.items(), reverse=True)
    if args.format == "json":
        print(json.dumps({"a": list(a), "b": list(b),
                          "terms": [{"c": list(e), "coef": str(v)} for e, v in items]}))
    else:
        def bname(e):
            return f"B[{','.join(map(str, e))}]"
        lhs = f"B[{','.join(map(str, a))}]*B[{','.join(map(str, b))}]"
        parts = [f"({v})*{bname(e)}" if v != 1 else bname(e) for e, v in items]
        print(f"{lhs} = " + (" + ".join(parts) if parts else "0"))
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    import os

    if args.cache_dir:
        os.environ["QCA_CACHE_DIR"] = args.cache_dir
    names = list(SUITES) if args.suite == "all" else [args.suite]
    params = {"n_max": args.n_max, "k_max": args.k_max, "seed": args.seed,
              "mode": args.mode}
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_suite_star, [(n, params) for n in names]))
    else:
        results = [run_suite(n, params) for n in names]
    results.sort(key=lambda r: names.index(r["suite"]))
    report = {"ok": all(r["ok"] for r in results), "suites": results}
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if report["ok"] else EXIT_IDENTITY


def _parse_range(text: str, parser):
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        parser.error(f"bad range {text!r}; expected N or N..M")


def cmd_table(args, parser) -> int:
    lo, hi = _parse_range(args.range, parser)
    rows = []
    if args.kind == "cluster":
        for n in range(lo, hi + 1):
            rows.append({"n": n,
                         "laurent": classical.cluster_variable(n),
                         "polynomial": classical.polynomial_form(n)})
        if args.format == "json":
            print(json.dumps([{"n": r["n"], "laurent": str(r["laurent"]),
                               "polynomial": str(r["polynomial"])} for r in rows]))
        else:
            for r in rows:
                if args.format == "latex":
                    print(f"U_{{{r['n']}}} &= {r['laurent'].to_latex()} "
                          f"= {r['polynomial'].to_latex()} \\\\")
                else:
                    print(f"U_{r['n']} (laurent)    = {r['laurent']}")
                    print(f"U_{r['n']} (polynomial) = {r['polynomial']}")
    else:
        for k in range(lo, hi + 1):
            if k < 0:
                parser.error("layer index must be non-negative")
            if k > args.max_layer:
                print(f"error: layer {k} > --max-layer {args.max_layer}", file=sys.stderr)
                return EXIT_RESOURCE
            tab = dcb.layer_table(k)
            for a in sorted(tab.entries, reverse=True):
                rows.append({"a": a, "element": tab.entries[a]})
        if args.format == "json":
            print(json.dumps([{"a": list(r["a"]), "element": r["element"].to_json_dict()}
                              for r in rows]))
        else:
            for r in rows:
                name = f"B[{','.join(map(str, r['a']))}]"
                body = r["element"].to_latex() if args.format == "latex" else str(r["element"])
                print(f"{name} = {body}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qkron",
        description="Exact computation in the quantum Kronecker cluster algebra: "
                    "dual canonical basis elements, product expansions, identity "
                    "verification suites, and cluster tables.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print the basis element B[a3,a2,a1,a0]")
    c.add_argument("a", nargs=4, type=int, metavar="A")
    c.add_argument("--format", choices=("text", "json", "latex"), default="text")
    c.add_argument("--dual-pbw", action="store_true",
                   help="print the dual PBW coefficient table instead")
    c.add_argument("--q1", action="store_true", help="print the q = 1 specialization")
    c.add_argument("--max-layer", type=int, default=8)

    pr = sub.add_parser("product", help="expand B[a] * B[b] in the basis")
    pr.add_argument("a", nargs=4, type=int, metavar="A")
    pr.add_argument("b", nargs=4, type=int, metavar="B")
    pr.add_argument("--format", choices=("text", "json", "latex"), default="text")
    pr.add_argument("--max-layer", type=int, default=8)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--k-max", type=int, default=None)
    v.add_argument("--mode", choices=("exact", "probabilistic"), default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out", default=None, help="write the JSON report to a file")
    v.add_argument("--cache-dir", default=None,
                   help="layer cache directory (same as QCA_CACHE_DIR)")

    t = sub.add_parser("table", help="print cluster variables or a basis layer")
    t.add_argument("kind", choices=("cluster", "layer"))
    t.add_argument("range", help="N or N..M")
    t.add_argument("--format", choices=("text", "json", "latex"), default="text")
    t.add_argument("--max-layer", type=int, default=8)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return cmd_compute(args, parser)
    if args.command == "product":
        return cmd_product(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "table":
        return cmd_table(args, parser)
    parser.error("no command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
