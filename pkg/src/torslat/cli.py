"""Command-line surface: parse input files, run the suites, emit DOT/JSON.

Commands: build-tors, build-rel, check, labels, kappa, quotient, realize,
sweep, census.  All structured output is JSON text with sorted keys; Hasse
diagrams are DOT.  Exit codes: 0 success, 1 property violation (first
witness on stderr) or search failure, 2 unusable input file (line and
column for syntax errors).  Sweep timing goes to stderr so stdout stays
byte-stable across runs and worker counts (TORSLAT_THREADS, default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bridge import (
    InvalidIdeal,
    fiber_check,
    label_preservation_check,
    quotient_map,
    tors_of_algebra,
)
from .galois import (
    BrickRelation,
    LabelMissing,
    LabelNotUnique,
    TorsLattice,
    all_cover_labels,
    all_torsion_pairs,
    factorizability_violation,
    relation_from_arrows,
    verify_tors_lattice,
)
from .lattice import (
    FiniteLattice,
    NotALattice,
    NotSemidistributive,
    is_semidistributive,
    join_irreducibles,
    kappa,
    kappa_dual,
    meet_irreducibles,
    poset_from_pairs,
    to_dot,
    try_lattice,
)
from .oracle import (
    BudgetExceeded,
    SearchBudget,
    brute_torsion_pairs,
    closure_axiom_check,
    lattice_census,
    realize_sd_lattice,
    same_tors,
    surjection_dichotomy_sweep,
    sweep_factorizable,
)
from .quiver import QuiverPresentation, UnsupportedAlgebra


class InputFileError(Exception):
    """Unusable input file; maps to exit code 2."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputFileError(f"error: {path}: file not found")
    except json.JSONDecodeError as exc:
        raise InputFileError(
            f"error: {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        )


def relation_from_json(path: str) -> BrickRelation:
    """Relation file: {"labels": [...], "arrows": [[i, j], ...]}.

    The diagonal is implicit; duplicate pairs (including explicit
    self-pairs) are rejected.
    """
    obj = _load_json(path)
    if not isinstance(obj, dict) or "labels" not in obj or "arrows" not in obj:
        raise InputFileError(
            f"error: {path}: expected an object with 'labels' and 'arrows'"
        )
    labels = obj["labels"]
    arrows = obj["arrows"]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise InputFileError(f"error: {path}: 'labels' must be an array of strings")
    if not isinstance(arrows, list):
        raise InputFileError(f"error: {path}: 'arrows' must be an array of pairs")
    seen = set()
    pairs = []
    for entry in arrows:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, int) for v in entry)
        ):
            raise InputFileError(f"error: {path}: arrow {entry!r} is not an [i, j] pair")
        x, y = entry
        if x == y:
            raise InputFileError(
                f"error: {path}: arrow [{x}, {y}] duplicates the implicit diagonal"
            )
        if (x, y) in seen:
            raise InputFileError(f"error: {path}: duplicate arrow [{x}, {y}]")
        seen.add((x, y))
        pairs.append((x, y))
    try:
        return relation_from_arrows(labels, pairs)
    except ValueError as exc:
        raise InputFileError(f"error: {path}: {exc}")


def quiver_from_json(path: str) -> QuiverPresentation:
    """Quiver file: {"vertices": n, "orientation": [...], "relations": [...]}."""
    obj = _load_json(path)
    if not isinstance(obj, dict) or "vertices" not in obj or "orientation" not in obj:
        raise InputFileError(
            f"error: {path}: expected an object with 'vertices' and 'orientation'"
        )
    vertices = obj["vertices"]
    orientation = obj["orientation"]
    relations = obj.get("relations", [])
    if not isinstance(vertices, int):
        raise InputFileError(f"error: {path}: 'vertices' must be an integer")
    if not isinstance(orientation, list) or not all(
        isinstance(s, str) for s in orientation
    ):
        raise InputFileError(f"error: {path}: 'orientation' must be an array of strings")
    if not isinstance(relations, list) or not all(
        isinstance(p, list) and all(isinstance(k, int) for k in p) for p in relations
    ):
        raise InputFileError(
            f"error: {path}: 'relations' must be an array of arrow index arrays"
        )
    try:
        return QuiverPresentation(
            vertices, tuple(orientation), tuple(tuple(p) for p in relations)
        )
    except (ValueError, UnsupportedAlgebra) as exc:
        raise InputFileError(f"error: {path}: {exc}")


def lattice_from_json(path: str) -> FiniteLattice:
    """Lattice file: {"elements": n, "covers": [[lower, upper], ...]}."""
    obj = _load_json(path)
    if not isinstance(obj, dict) or "elements" not in obj or "covers" not in obj:
        raise InputFileError(
            f"error: {path}: expected an object with 'elements' and 'covers'"
        )
    n = obj["elements"]
    covers = obj["covers"]
    if not isinstance(n, int) or not isinstance(covers, list):
        raise InputFileError(f"error: {path}: bad 'elements' or 'covers'")
    for entry in covers:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, int) for v in entry)
        ):
            raise InputFileError(f"error: {path}: cover {entry!r} is not an [l, u] pair")
    try:
        return try_lattice(poset_from_pairs(n, [tuple(c) for c in covers]))
    except NotALattice as exc:
        raise InputFileError(f"error: {path}: not a lattice: {exc}")
    except Exception as exc:
        raise InputFileError(f"error: {path}: {exc}")


def _sniff_relation(path: str) -> BrickRelation:
    """Accept either a relation file or a quiver file; return the relation."""
    obj = _load_json(path)
    if isinstance(obj, dict) and "vertices" in obj:
        return tors_of_algebra(quiver_from_json(path)).relation
    return relation_from_json(path)


def _class_label(TL: TorsLattice, i: int) -> str:
    names = [
        TL.relation.labels[b]
        for b in range(TL.relation.m)
        if TL.tset(i) >> b & 1
    ]
    return "{" + ",".join(names) + "}"


def _class_list(TL: TorsLattice, i: int) -> list[str]:
    return [
        TL.relation.labels[b]
        for b in range(TL.relation.m)
        if TL.tset(i) >> b & 1
    ]


def _tors_summary(TL: TorsLattice) -> dict:
    L = TL.lattice
    return {
        "bricks": sorted(TL.relation.labels),
        "pairs": TL.n,
        "join_irreducibles": len(join_irreducibles(L)),
        "meet_irreducibles": len(meet_irreducibles(L)),
        "semidistributive": is_semidistributive(L),
        "classes": [_class_list(TL, i) for i in range(TL.n)],
    }


def _tors_dot(TL: TorsLattice) -> str:
    labels = all_cover_labels(TL)
    return to_dot(
        TL.lattice,
        node_labels=[_class_label(TL, i) for i in range(TL.n)],
        edge_labels={c: TL.relation.labels[b] for c, b in labels.items()},
    )


def _emit(text: str, dest: str | None):
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_build(args, TL: TorsLattice) -> int:
    witness = None
    if args.command == "build-rel":
        witness = factorizability_violation(TL.relation)
    label_error = None
    try:
        dot = _tors_dot(TL)
    except (LabelMissing, LabelNotUnique) as exc:
        label_error = str(exc)
        dot = to_dot(
            TL.lattice, node_labels=[_class_label(TL, i) for i in range(TL.n)]
        )
    summary = _tors_summary(TL)
    if args.command == "build-rel":
        summary["factorizable"] = witness is None
        summary["violation"] = list(witness) if witness else None
    if label_error is not None:
        summary["label_error"] = label_error
    if args.dot is not None:
        _emit(dot, args.dot)
    if not (args.dot == "-" and args.json is None):
        _emit(_dump(summary), args.json)
    first = witness or label_error
    if first is not None:
        print(f"violation: {first}", file=sys.stderr)
        return 1
    return 0


def _cmd_check(args) -> int:
    obj = _load_json(args.input)
    checks = []
    if isinstance(obj, dict) and "vertices" in obj:
        Q = quiver_from_json(args.input)
        alg = tors_of_algebra(Q)
        TL = alg.tors
        checks.append(
            {"name": "closure_axioms", "ok": closure_axiom_check(Q, TL)}
        )
        dich = surjection_dichotomy_sweep(Q)
        checks.append(
            {
                "name": "surjection_dichotomy",
                "ok": not dich["violations"],
                "violations": dich["violations"],
            }
        )
    else:
        TL = all_torsion_pairs(relation_from_json(args.input))
    witness = factorizability_violation(TL.relation)
    checks.insert(
        0,
        {
            "name": "factorizable",
            "ok": witness is None,
            "witness": list(witness) if witness else None,
        },
    )
    problems = verify_tors_lattice(TL)
    checks.insert(
        1,
        {
            "name": "torsion_lattice_properties",
            "ok": not problems,
            "problems": problems,
        },
    )
    if TL.relation.m <= 12:
        checks.append(
            {
                "name": "subset_scan_agreement",
                "ok": same_tors(brute_torsion_pairs(TL.relation), TL),
            }
        )
    report = {"input": args.input, "checks": checks, "ok": all(c["ok"] for c in checks)}
    _emit(_dump(report), args.json)
    if not report["ok"]:
        first = next(c for c in checks if not c["ok"])
        print(f"violation: {first['name']} failed", file=sys.stderr)
        return 1
    return 0


def _cmd_labels(args) -> int:
    TL = all_torsion_pairs(_sniff_relation(args.input))
    try:
        labels = all_cover_labels(TL)
    except (LabelMissing, LabelNotUnique) as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    table = [
        {
            "lower": c.lower,
            "upper": c.upper,
            "lower_class": _class_list(TL, c.lower),
            "upper_class": _class_list(TL, c.upper),
            "brick": TL.relation.labels[b],
        }
        for c, b in sorted(labels.items())
    ]
    _emit(_dump({"covers": table}), args.json)
    return 0


def _cmd_kappa(args) -> int:
    TL = all_torsion_pairs(_sniff_relation(args.input))
    L = TL.lattice
    try:
        table = [
            {
                "ji": j,
                "ji_class": _class_list(TL, j),
                "mi": (m := kappa(L, j)),
                "mi_class": _class_list(TL, m),
                "ji_back": kappa_dual(L, m),
            }
            for j in join_irreducibles(L)
        ]
    except NotSemidistributive as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    _emit(_dump({"kappa": table}), args.json)
    return 0


def _cmd_quotient(args) -> int:
    Q = quiver_from_json(args.input)
    ideal = []
    for spec_str in args.ideal or []:
        try:
            ideal.append(tuple(int(k) for k in spec_str.split(",") if k != ""))
        except ValueError:
            print(f"error: bad --ideal value {spec_str!r}", file=sys.stderr)
            return 2
    try:
        qm = quotient_map(Q, tuple(ideal))
    except (InvalidIdeal, UnsupportedAlgebra) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    src = qm.source.tors
    dst = qm.target.tors
    fibers: dict[int, list[int]] = {}
    for i, t in enumerate(qm.element_map):
        fibers.setdefault(t, []).append(i)
    fiber_ok = all(
        fiber_check(qm, u, v)
        for u in range(src.n)
        for v in range(src.n)
        if src.lattice.leq[u, v]
    )
    labels_ok = label_preservation_check(qm)
    report = {
        "source_pairs": src.n,
        "target_pairs": dst.n,
        "element_map": list(qm.element_map),
        "killed_bricks": [
            qm.source.relation.labels[b]
            for b, t in enumerate(qm.brick_map)
            if t is None
        ],
        "fibers": [fibers[t] for t in sorted(fibers)],
        "collapsed_fibers": [fibers[t] for t in sorted(fibers) if len(fibers[t]) > 1],
        "fiber_checks": fiber_ok,
        "label_preservation": labels_ok,
        "target": _tors_summary(dst),
    }
    if args.dot is not None:
        _emit(_tors_dot(dst), args.dot)
    if not (args.dot == "-" and args.json is None):
        _emit(_dump(report), args.json)
    if not (fiber_ok and labels_ok):
        print("violation: quotient structure checks failed", file=sys.stderr)
        return 1
    return 0


def _cmd_realize(args) -> int:
    L = lattice_from_json(args.input)
    budget = SearchBudget(max_brick_set_size=args.max_bricks)
    R = realize_sd_lattice(L, budget, factorizable_only=not args.unfiltered)
    if R is None:
        _emit(_dump({"realized": False, "reason": "none within budget"}), args.json)
        return 0
    arrows = [
        [x, y]
        for x in range(R.m)
        for y in range(R.m)
        if x != y and R.row_masks[x] >> y & 1
    ]
    witness = factorizability_violation(R)
    _emit(
        _dump(
            {
                "realized": True,
                "labels": list(R.labels),
                "arrows": arrows,
                "factorizable": witness is None,
            }
        ),
        args.json,
    )
    return 0


def _cmd_sweep(args) -> int:
    workers = int(os.environ.get("TORSLAT_THREADS", "1"))
    budget = SearchBudget(max_brick_set_size=args.max_size)
    report = sweep_factorizable(budget, literal_mono=args.literal_mono, workers=workers)
    runtime = report.pop("runtime_seconds")
    _emit(_dump(report), args.json)
    print(f"runtime: {runtime}s", file=sys.stderr)
    if report["violations"]:
        v = report["violations"][0]
        print(f"violation: m={v['m']} mask={v['mask']}: {v['problems'][0]}", file=sys.stderr)
        return 1
    return 0


def _cmd_census(args) -> int:
    budget = SearchBudget(max_lattice_size=args.max_size)
    lattices = lattice_census(budget)
    out = []
    for L in lattices:
        out.append(
            {
                "elements": L.n,
                "covers": [[c.lower, c.upper] for c in sorted(L.poset.covers)],
                "semidistributive": is_semidistributive(L),
            }
        )
    sizes: dict[str, int] = {}
    sd: dict[str, int] = {}
    for entry in out:
        k = str(entry["elements"])
        sizes[k] = sizes.get(k, 0) + 1
        if entry["semidistributive"]:
            sd[k] = sd.get(k, 0) + 1
    _emit(
        _dump({"sizes": sizes, "semidistributive": sd, "total": len(out), "lattices": out}),
        args.json,
    )
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="torslat",
        description="Torsion-pair lattices of brick relations and type-A quiver algebras",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp, dot=True):
        sp.add_argument("--json", default=None, help="write JSON here instead of stdout")
        if dot:
            sp.add_argument("--dot", default=None, help="write DOT here ('-' for stdout)")

    sp = sub.add_parser("build-tors", help="torsion lattice of a quiver algebra")
    sp.add_argument("input")
    io_flags(sp)
    sp = sub.add_parser("build-rel", help="torsion lattice of a brick relation")
    sp.add_argument("input")
    io_flags(sp)
    sp = sub.add_parser("check", help="run the full property suite on an input")
    sp.add_argument("input")
    io_flags(sp, dot=False)
    sp = sub.add_parser("labels", help="cover-to-brick label table")
    sp.add_argument("input")
    io_flags(sp, dot=False)
    sp = sub.add_parser("kappa", help="join- to meet-irreducible bijection table")
    sp.add_argument("input")
    io_flags(sp, dot=False)
    sp = sub.add_parser("quotient", help="quotient algebra and induced lattice quotient")
    sp.add_argument("input")
    sp.add_argument(
        "--ideal",
        action="append",
        help="comma-separated arrow indices of a relation path; repeatable",
    )
    io_flags(sp)
    sp = sub.add_parser("realize", help="search for a relation with the given torsion lattice")
    sp.add_argument("input")
    sp.add_argument("--max-bricks", type=int, default=5)
    sp.add_argument("--unfiltered", action="store_true")
    io_flags(sp, dot=False)
    sp = sub.add_parser("sweep", help="exhaustive relation sweep with invariant checks")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--literal-mono", action="store_true")
    io_flags(sp, dot=False)
    sp = sub.add_parser("census", help="all small lattices up to isomorphism")
    sp.add_argument("--max-size", type=int, default=6)
    io_flags(sp, dot=False)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "build-tors":
            return _cmd_build(args, tors_of_algebra(quiver_from_json(args.input)).tors)
        if args.command == "build-rel":
            return _cmd_build(args, all_torsion_pairs(relation_from_json(args.input)))
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "labels":
            return _cmd_labels(args)
        if args.command == "kappa":
            return _cmd_kappa(args)
        if args.command == "quotient":
            return _cmd_quotient(args)
        if args.command == "realize":
            return _cmd_realize(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "census":
            return _cmd_census(args)
    except InputFileError as exc:
        print(exc, file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
