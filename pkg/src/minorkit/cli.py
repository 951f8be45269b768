"""Command-line entry point: generation, checking, and verification.

Exit codes: 0 success, 1 verification failure (offending graphs are
quarantined), 2 usage or parse error, 3 node budget exhausted.  All
randomness flows from the --seed flag.  MINORKIT_WORKERS overrides the
worker-pool size for corpus runs; output order always follows input
order.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
from pathlib import Path

from . import cockade, named, verifier
from .errors import (
    HypothesisViolatedError,
    InfeasibleConstraintsError,
    InternalFailureError,
    MinorkitError,
    ParseError,
)
from .formats import (
    certificate_encode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    read_graphs,
)
from .graph import Graph
from .minor import find_k6, find_k6_blockwise, find_minor, verify_certificate
from .planarity import is_apex, is_planar

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MINORKIT_WORKERS", "1")))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    workers = _worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _target_graph(spec: str) -> Graph:
    return named.by_name(spec)


def _manifest_line(idx, name, g: Graph) -> str:
    seq = ",".join(str(d) for d in g.degree_sequence())
    planar = is_planar(g).planar
    return f"{idx} {name} n={g.order} m={g.edge_count} degseq=({seq}) planar={planar}"


# -- gen ----------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = args.kind
    graphs = []
    if kind.startswith("named:"):
        name = kind.split(":", 1)[1]
        try:
            graphs = [(name, named.by_name(name))]
        except KeyError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    elif kind == "cockade":
        for i in range(args.count):
            tree = cockade.random_mp1_cockade((args.seed, i), args.order)
            graphs.append((f"cockade-{args.order}-{i}", cockade.realize(tree)))
    elif kind == "random":
        size = args.size if args.size is not None else None
        if size is None:
            print("error: gen random requires --size", file=sys.stderr)
            return EXIT_USAGE
        try:
            sampled = verifier.sample_constrained(
                args.order, args.min_degree, (size, size), args.seed, args.count
            )
        except InfeasibleConstraintsError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        graphs = [(f"random-{args.order}-{i}", g) for i, g in enumerate(sampled)]
    elif kind == "catalog-order5":
        entries = named.enumerate_order5(
            args.size_min, args.size_max, args.min_degree, args.degree2_count
        )
        graphs = [(e.name, e.graph) for e in entries]
    else:
        print(f"error: unknown kind {kind!r}", file=sys.stderr)
        return EXIT_USAGE

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as fh:
        for _, g in graphs:
            fh.write(graph6_encode(g) + "\n")
    manifest = out.with_suffix(out.suffix + ".manifest")
    with open(manifest, "w") as fh:
        for i, (name, g) in enumerate(graphs):
            fh.write(_manifest_line(i, name, g) + "\n")
    print(f"wrote {len(graphs)} graph(s) to {out} (manifest {manifest})")
    return EXIT_OK


# -- check --------------------------------------------------------------

_CHECK_CONTEXT = {}


def _check_one(payload):
    idx, line = payload
    target = _target_graph(_CHECK_CONTEXT["target"])
    g = graph6_decode(line)
    if _CHECK_CONTEXT["blocks"]:
        res = find_k6_blockwise(g, budget=_CHECK_CONTEXT["budget"])
    elif _CHECK_CONTEXT["target"] == "k6":
        res = find_k6(g, budget=_CHECK_CONTEXT["budget"])
    else:
        res = find_minor(g, target, budget=_CHECK_CONTEXT["budget"])
    if res.found:
        assert verify_certificate(g, target, res.certificate)
        return idx, "found", certificate_encode(res.certificate.branch_sets)
    if res.budget_exhausted:
        return idx, "budget-exhausted", None
    return idx, "not-found", None


def cmd_check(args) -> int:
    try:
        graphs = read_graphs(args.file, args.format)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _target_graph(args.target)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _CHECK_CONTEXT.update(
        target=args.target, blocks=args.blocks, budget=args.budget
    )
    lines = [graph6_encode(g) for g in graphs]
    results = _map_ordered(_check_one, list(enumerate(lines)))
    cert_dir = Path(args.certs) if args.certs else None
    if cert_dir:
        cert_dir.mkdir(parents=True, exist_ok=True)
    any_budget = False
    for idx, verdict, cert_text in results:
        note = ""
        if cert_text is not None and cert_dir:
            cert_path = cert_dir / f"cert-{idx}.txt"
            cert_path.write_text(cert_text)
            note = f" {cert_path}"
        any_budget = any_budget or verdict == "budget-exhausted"
        print(f"{lines[idx]} {verdict}{note}")
    return EXIT_BUDGET if any_budget else EXIT_OK


# -- verify -------------------------------------------------------------


def _quarantine(args, graph6_strings):
    qdir = Path(args.quarantine)
    qdir.mkdir(parents=True, exist_ok=True)
    for i, s in enumerate(graph6_strings):
        (qdir / f"failure-{i}.g6").write_text(s + "\n")
    return qdir


def _verify_order26(args) -> int:
    g = verifier.order26_example()
    checks = []
    checks.append(("min-degree-6", g.min_degree() == 6))
    checks.append(("not-apex", is_apex(g) is None))
    checks.append(("no-k6-minor", not find_k6_blockwise(g).found))
    for name, ok in checks:
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    passed = sum(ok for _, ok in checks)
    print(f"{passed}/{len(checks)} property checks pass")
    return EXIT_OK if passed == len(checks) else EXIT_FAILURE


def _verify_lemma(args) -> int:
    lemma = args.lemma
    if lemma == "11":
        order, size, max5, fn = 11, 34, 4, verifier.lemma_11
    elif lemma == "10":
        order, size, max5, fn = 10, 30, 5, verifier.lemma_10
    else:
        print(f"error: unknown lemma {lemma!r}", file=sys.stderr)
        return EXIT_USAGE
    accepted = 0
    failures = []
    attempt = 0
    while accepted < args.count:
        g = verifier.sample_constrained(
            order, 5, (size, size), (args.seed, attempt), 1
        )[0]
        attempt += 1
        try:
            fn(g)
        except HypothesisViolatedError:
            continue  # rejection sampling: hypotheses not met
        except InternalFailureError as exc:
            failures.append(exc.graph6)
            accepted += 1
            continue
        accepted += 1
    print(f"{accepted - len(failures)}/{accepted} certified (lemma {lemma})")
    if failures:
        qdir = _quarantine(args, failures)
        print(f"quarantined {len(failures)} failure(s) to {qdir}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _verify_corpus_one(payload):
    idx, line = payload
    g = graph6_decode(line)
    try:
        cert, trace = verifier.check_main(g)
    except InternalFailureError as exc:
        return idx, None, exc.graph6
    return idx, (trace.size_case, trace.recipe), None


def _verify_theorem(args) -> int:
    if args.order != 12 or args.min_degree != 6:
        print(
            "error: the theorem corpus is defined for --order 12 --min-degree 6",
            file=sys.stderr,
        )
        return EXIT_USAGE
    graphs = verifier.theorem_corpus(args.count, args.seed)
    lines = [graph6_encode(g) for g in graphs]
    results = _map_ordered(_verify_corpus_one, list(enumerate(lines)))
    branch_counts = {}
    failures = []
    for idx, key, failed in results:
        if failed is not None:
            failures.append(failed)
            continue
        branch_counts[key] = branch_counts.get(key, 0) + 1
    certified = len(graphs) - len(failures)
    for (case, recipe), cnt in sorted(branch_counts.items()):
        print(f"branch {case} / {recipe}: {cnt}")
    print(f"{certified}/{len(graphs)} certified")
    if failures:
        qdir = _quarantine(args, failures)
        print(f"quarantined {len(failures)} failure(s) to {qdir}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.order26_example:
        return _verify_order26(args)
    if args.lemma:
        return _verify_lemma(args)
    return _verify_theorem(args)


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minorkit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate graph corpora")
    g.add_argument("--kind", required=True, help="named:<name> | cockade | random | catalog-order5")
    g.add_argument("--order", type=int, default=12)
    g.add_argument("--min-degree", type=int, default=0)
    g.add_argument("--size", type=int, default=None)
    g.add_argument("--size-min", type=int, default=0)
    g.add_argument("--size-max", type=int, default=10)
    g.add_argument("--degree2-count", type=int, default=None)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="minor containment with certificates")
    c.add_argument("file")
    c.add_argument("--target", default="k6")
    c.add_argument("--blocks", action="store_true", help="search per 2-connected block")
    c.add_argument("--budget", type=int, default=0, help="search node budget, 0 = unlimited")
    c.add_argument("--certs", default=None, help="directory for certificate files")
    c.add_argument("--format", choices=("g6", "edges"), default="g6")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="run theorem / lemma corpora")
    v.add_argument("--order", type=int, default=12)
    v.add_argument("--min-degree", type=int, default=6)
    v.add_argument("--count", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--lemma", choices=("10", "11"), default=None)
    v.add_argument("--order26-example", action="store_true")
    v.add_argument("--quarantine", default="quarantine")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ParseError, InfeasibleConstraintsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinorkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
