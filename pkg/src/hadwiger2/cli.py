"""Batch-verification command line front end.

Commands: build (family constructors to graph6), check (conjecture
checkers with witnesses), enumerate (exhaustive desk-scale sweeps),
certify (clique-cover certificates), screen (counterexample profile).

Exit codes: 0 holds/found, 1 fails/not found, 2 usage or input error,
3 budget exhausted.  Reports are line-oriented ``key=value`` plus a
human-readable summary; every run prints a reproducibility header with
the version, seed and arguments.  The seed defaults to the
HADWIGER2_SEED environment variable, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys as _sys
from fractions import Fraction

from . import __version__
from .certificates import (
    clebsch_certificate,
    format_certificate,
    format_cover4,
    four_cover_check,
    kneser_certificate,
    mesner_certificate,
    verify_certificate,
)
from .conjectures import (
    KModel,
    SearchBudgetExceeded,
    connected_dominating_matching,
    connected_matching_max,
    dominating_edge,
    format_model,
    half_order_model_search,
    is_cdm,
    verify_k_model,
)
from .constructions import (
    ConstructionError,
    andrasfai,
    cayley_abelian,
    clebsch,
    complete,
    cycle,
    eberhard,
    generalized_kneser_geq,
    generalized_kneser_leq,
    group_elements,
    hoffman_singleton,
    hypercube,
    kneser,
    kneser_labels,
    petersen,
    triangle_free_process,
)
from .graph6 import read_graph6, write_graph6
from .graphs import Graph, alpha_at_most_2, complement, independence_number_is_2, is_connected
from .generation import triangle_free_graphs
from .matching import Matching
from .screening import BLOCKS, PROPERTIES, table1_screen
from .steiner import gewirtz, higman_sims, mesner, steiner_3_6_22

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    pass


def _header(args: argparse.Namespace, seed: int) -> None:
    flags = " ".join(_sys.argv[1:])
    print(f"# hadwiger2 version={__version__} seed={seed} args={flags!r}", file=_sys.stderr)


def _read_input_graph(args) -> Graph:
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="ascii") as fh:
            text = fh.read().strip().splitlines()
    else:
        text = _sys.stdin.read().strip().splitlines()
    lines = [ln for ln in text if ln.strip()]
    if len(lines) != 1:
        raise CliError("expected exactly one graph6 line on input")
    return read_graph6(lines[0])


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


# ---------------------------------------------------------------------------
# build


def _build_graph(args, seed: int) -> tuple[Graph, list[str] | None]:
    fam = args.family
    need = lambda name: getattr(args, name) is not None or _usage(
        f"--{name.replace('_', '-')} is required for family {fam}"
    )
    if fam == "cycle":
        need("n")
        return cycle(args.n), None
    if fam == "complete":
        need("n")
        return complete(args.n), None
    if fam == "petersen":
        return petersen(), None
    if fam == "hypercube":
        need("d")
        return hypercube(args.d), [format(v, f"0{args.d}b") for v in range(1 << args.d)]
    if fam == "clebsch":
        return clebsch(), None
    if fam == "kneser":
        need("n"), need("k")
        labels = kneser_labels(args.n, args.k)
        return kneser(args.n, args.k), [" ".join(map(str, c)) for c in labels]
    if fam == "generalized-kneser-geq":
        need("n"), need("k"), need("t")
        labels = kneser_labels(args.n, args.k)
        return (
            generalized_kneser_geq(args.n, args.k, args.t),
            [" ".join(map(str, c)) for c in labels],
        )
    if fam == "generalized-kneser-leq":
        need("n"), need("k"), need("t")
        labels = kneser_labels(args.n, args.k)
        return (
            generalized_kneser_leq(args.n, args.k, args.t),
            [" ".join(map(str, c)) for c in labels],
        )
    if fam == "andrasfai":
        need("d")
        return andrasfai(args.d), None
    if fam == "hoffman-singleton":
        return hoffman_singleton(), None
    if fam == "mesner":
        sys_ = steiner_3_6_22()
        return mesner(sys_), [" ".join(map(str, b)) for b in sys_.blocks]
    if fam == "gewirtz":
        sys_ = steiner_3_6_22()
        point = args.point if args.point is not None else 21
        blocks = [b for b in sys_.blocks if point not in b]
        return gewirtz(sys_, point), [" ".join(map(str, b)) for b in blocks]
    if fam == "higman-sims":
        sys_ = steiner_3_6_22()
        labels = [" ".join(map(str, b)) for b in sys_.blocks]
        labels += [f"point {x}" for x in range(22)] + ["apex"]
        return higman_sims(sys_), labels
    if fam == "eberhard":
        need("p")
        g = eberhard(args.p)
        labels = [f"{a} {b}" for a in range(args.p) for b in range(args.p)]
        return g, labels
    if fam == "cayley":
        need("orders"), need("connection")
        orders = tuple(int(x) for x in args.orders.split(","))
        conn = []
        for part in args.connection.split(";"):
            conn.append(tuple(int(x) for x in part.split(",")))
        g = cayley_abelian(orders, conn)
        labels = [" ".join(map(str, e)) for e in group_elements(orders)]
        return g, labels
    if fam == "triangle-free-process":
        need("n")
        return triangle_free_process(args.n, seed), None
    _usage(f"unknown family {fam!r}")
    raise AssertionError


def cmd_build(args, seed: int) -> int:
    g, labels = _build_graph(args, seed)
    if args.complement:
        g = complement(g)
    _emit(write_graph6(g) + "\n", args.out)
    if args.labels_out:
        if labels is None:
            labels = [str(v) for v in range(g.n)]
        with open(args.labels_out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(labels) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def cmd_check(args, seed: int) -> int:
    g = _read_input_graph(args)
    name = args.conjecture
    witness_text = None
    if name == "cdm":
        if not is_connected(g):
            raise CliError("cdm check requires a connected graph")
        if not alpha_at_most_2(g):
            raise CliError("cdm check requires independence number at most 2")
        if independence_number_is_2(g):
            try:
                cdm = connected_dominating_matching(g, budget=args.budget)
            except SearchBudgetExceeded:
                print(f"conjecture=cdm n={g.n} holds=unknown budget_exhausted=true")
                return EXIT_BUDGET
        else:
            e = dominating_edge(g)
            cdm = None
            if e is not None:
                from .conjectures import ConnectedMatching

                cdm = ConnectedMatching(Matching((e,)))
        holds = cdm is not None and is_cdm(g, cdm.edges)
        print(f"conjecture=cdm n={g.n} holds={str(holds).lower()}")
        if holds:
            model = KModel(tuple(cdm.edges), len(cdm.edges))
            witness_text = format_model(model)
    elif name == "shc-half":
        if not alpha_at_most_2(g):
            raise CliError("shc-half check requires independence number at most 2")
        model = half_order_model_search(g, seed, budget=args.budget)
        holds = model is not None and verify_k_model(g, model)
        print(f"conjecture=shc-half n={g.n} target={(g.n + 1) // 2} holds={str(holds).lower()}")
        if holds:
            witness_text = format_model(model)
    elif name == "4cm":
        if not alpha_at_most_2(g):
            raise CliError("4cm check requires independence number at most 2")
        t = (g.n + 1) // 4
        if t == 0:
            print(f"conjecture=4cm n={g.n} target=0 holds=true")
            return EXIT_OK
        cm, exact = connected_matching_max(g, budget=args.budget)
        holds = cm.size >= t
        print(
            f"conjecture=4cm n={g.n} target={t} cm={cm.size} "
            f"exact={str(exact).lower()} holds={str(holds).lower()}"
        )
        if holds:
            witness_text = format_model(KModel(tuple(cm.edges), cm.size))
        elif not exact:
            return EXIT_BUDGET
    elif name == "dominating-edge":
        e = dominating_edge(g)
        holds = e is not None
        print(f"conjecture=dominating-edge n={g.n} holds={str(holds).lower()}")
        if holds:
            witness_text = format_model(KModel((e,), 1))
    else:
        _usage(f"unknown conjecture {name!r}")
    if witness_text:
        if args.witness_out:
            _emit(witness_text, args.witness_out)
        else:
            print(witness_text, end="")
    return EXIT_OK if holds else EXIT_FAIL


# ---------------------------------------------------------------------------
# enumerate


def _check_cdm(g: Graph) -> bool:
    if g.n < 2:
        return True  # conjecture hypotheses not met; nothing to check
    if independence_number_is_2(g):
        cdm = connected_dominating_matching(g)
        return cdm is not None and is_cdm(g, cdm.edges)
    return dominating_edge(g) is not None


def _check_4cm(g: Graph) -> bool:
    t = (g.n + 1) // 4
    if t == 0:
        return True
    cm, exact = connected_matching_max(g)
    return exact and cm.size >= t


_ENUM_CHECKS = {"cdm": _check_cdm, "4cm": _check_4cm}


def _worker_check(job: tuple[str, str]) -> bool:
    check_name, g6 = job
    return _ENUM_CHECKS[check_name](read_graph6(g6))


def cmd_enumerate(args, seed: int) -> int:
    if args.check not in _ENUM_CHECKS:
        _usage(f"unknown check {args.check!r}")
    check = _ENUM_CHECKS[args.check]
    from .generation import MAX_DESK_N

    if args.max_n > MAX_DESK_N:
        raise CliError(f"enumeration is desk-scale only (max_n <= {MAX_DESK_N})")
    levels = triangle_free_graphs(args.max_n)
    budget = args.budget
    total = 0
    bad_total = 0
    pool = None
    if args.workers > 1:
        import multiprocessing

        pool = multiprocessing.Pool(args.workers)
    try:
        for n in range(1, args.max_n + 1):
            batch = []
            for hgraph in levels[n]:
                g = complement(hgraph)
                if not is_connected(g):
                    continue
                if budget is not None and total + len(batch) >= budget:
                    checked = len(batch)
                    results = (
                        pool.map(_worker_check, [(args.check, s) for s in batch])
                        if pool
                        else [check(read_graph6(s)) for s in batch]
                    )
                    violations = sum(1 for r in results if not r)
                    print(
                        f"n={n} checked={checked} violations={violations} partial=true"
                    )
                    print(
                        f"total={total + checked} "
                        f"violations_total={bad_total + violations} "
                        "budget_exhausted=true"
                    )
                    return EXIT_BUDGET
                batch.append(write_graph6(g))
            if pool:
                results = pool.map(_worker_check, [(args.check, s) for s in batch])
            else:
                results = [check(read_graph6(s)) for s in batch]
            violations = sum(1 for r in results if not r)
            total += len(batch)
            bad_total += violations
            print(f"n={n} checked={len(batch)} violations={violations}")
    finally:
        if pool:
            pool.close()
            pool.join()
    print(f"total={total} violations_total={bad_total}")
    return EXIT_OK if bad_total == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# certify


def cmd_certify(args, seed: int) -> int:
    kind = args.kind
    if kind == "clebsch":
        g = _read_input_graph(args) if args.infile else complement(clebsch())
        cert = clebsch_certificate(g)
    elif kind == "mesner":
        sys_ = steiner_3_6_22()
        g = _read_input_graph(args) if args.infile else complement(mesner(sys_))
        cert = mesner_certificate(g, sys_)
    elif kind == "kneser":
        for p in ("n", "k", "t"):
            if getattr(args, p) is None:
                _usage(f"--{p} is required for kneser certificates")
        r = args.r if args.r is not None else 0
        g = generalized_kneser_geq(args.n, args.k, args.t)
        cert = kneser_certificate(args.n, args.k, args.t, r)
    elif kind == "cover4":
        g = _read_input_graph(args)
        cover = four_cover_check(g)
        if cover is None:
            print("kind=cover4 found=false")
            return EXIT_FAIL
        total = sum(len(c) for c in cover)
        print(f"kind=cover4 found=true total={total} floor={g.n + 2}")
        _emit(format_cover4(cover), args.out)
        return EXIT_OK
    else:
        _usage(f"unknown certificate kind {kind!r}")
    if not verify_certificate(g, cert):
        print(f"kind={kind} verified=false")
        return EXIT_FAIL
    b = Fraction(cert.bound)
    print(f"kind={kind} verified=true bound={b.numerator}/{b.denominator} cliques={cert.size}")
    _emit(format_certificate(cert), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# screen


def cmd_screen(args, seed: int) -> int:
    g = _read_input_graph(args)
    try:
        report = table1_screen(g)
    except ValueError as exc:
        raise CliError(str(exc))
    for p in PROPERTIES:
        v = report.verdicts[p]
        detail = f" detail={v.detail!r}" if v.detail else ""
        print(f"{p}={v.status}{detail}")
    for block in BLOCKS:
        print(f"survives_{block}={str(report.survives(block)).lower()}")
    if report.survives("minimal-hc"):
        print("summary=candidate (survives the minimal-hc block)")
    else:
        first = report.failed()[0]
        print(f"summary=not a candidate (fails {first})")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _usage(message: str):
    raise CliError(message)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hadwiger2",
        description="Constructions, certificates and conjecture checkers "
        "for graphs with independence number two.",
    )
    ap.add_argument("--seed", type=int, default=None, help="RNG seed (default: HADWIGER2_SEED or 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a named graph family as graph6")
    b.add_argument("--family", required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--t", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--point", type=int)
    b.add_argument("--orders")
    b.add_argument("--connection", help="semicolon-separated group elements, e.g. '1;4'")
    b.add_argument("--complement", action="store_true", help="emit the complement")
    b.add_argument("--out")
    b.add_argument("--labels-out", dest="labels_out")

    c = sub.add_parser("check", help="run a conjecture checker on a graph6 input")
    c.add_argument("--conjecture", required=True, choices=["cdm", "shc-half", "4cm", "dominating-edge"])
    c.add_argument("--in", dest="infile")
    c.add_argument("--budget", type=int, default=500_000)
    c.add_argument("--witness-out", dest="witness_out")

    e = sub.add_parser("enumerate", help="exhaustive check over connected alpha<=2 graphs")
    e.add_argument("--max-n", dest="max_n", type=int, required=True)
    e.add_argument("--check", required=True)
    e.add_argument("--budget", type=int, default=None, help="cap on graphs checked")
    e.add_argument("--workers", type=int, default=1, help="parallel workers for the per-graph checks")

    f = sub.add_parser("certify", help="emit a verified clique-cover certificate")
    f.add_argument("--kind", required=True, choices=["clebsch", "mesner", "kneser", "cover4"])
    f.add_argument("--in", dest="infile")
    f.add_argument("--n", type=int)
    f.add_argument("--k", type=int)
    f.add_argument("--t", type=int)
    f.add_argument("--r", type=int)
    f.add_argument("--out")

    s = sub.add_parser("screen", help="counterexample-profile screen of a graph6 input")
    s.add_argument("--in", dest="infile")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("HADWIGER2_SEED", "0"))
    _header(args, seed)
    handlers = {
        "build": cmd_build,
        "check": cmd_check,
        "enumerate": cmd_enumerate,
        "certify": cmd_certify,
        "screen": cmd_screen,
    }
    try:
        return handlers[args.command](args, seed)
    except CliError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_USAGE
    except (ValueError, ConstructionError, OSError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
