"""Command-line interface: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a verified-false verdict, 2 usage or input
error, 3 budget or feasibility abort.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .enumeration import enumerate_grassmannian, enumerate_projective_space, projective_space_size, gaussian_binomial
from .field import FieldError, field_from_order
from .linear_code import LinearCode, LinearCodeError, derive_from_basis, dimension_profile, verify_linear
from .search import (
    BudgetExhausted,
    CrossFamilyInstance,
    SearchConfig,
    default_node_budget,
    extract_cross_family,
    run_search,
    verify_lovasz,
    verify_nonlinearity_of_full_projective_space,
)
from .subspace import AmbientSpace, AmbientTooLarge, EnumerationTooLarge, SubspaceError, parse_subspace, subspace_distance

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_ABORT = 0, 1, 2, 3

log = logging.getLogger("projspace")


class InputError(Exception):
    pass


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _ambient(args) -> AmbientSpace:
    return AmbientSpace(field_from_order(args.q), args.n)


def cmd_enumerate(args) -> int:
    amb = _ambient(args)
    if args.k is not None:
        if args.count_only:
            _emit({"count": gaussian_binomial(amb.n, args.k, amb.q)})
            return EXIT_OK
        source = enumerate_grassmannian(amb, args.k)
    else:
        if args.count_only:
            _emit({"count": projective_space_size(amb.n, amb.q)})
            return EXIT_OK
        source = enumerate_projective_space(amb)
    for s in source:
        sys.stdout.write(json.dumps(s.to_json()) + "\n")
    return EXIT_OK


def cmd_distance(args) -> int:
    amb = _ambient(args)
    a, b = parse_subspace(amb, args.a), parse_subspace(amb, args.b)
    _emit({"d_s": subspace_distance(a, b), "dim_a": a.dim, "dim_b": b.dim})
    return EXIT_OK


def cmd_derive(args) -> int:
    amb = _ambient(args)
    lines = [parse_subspace(amb, part) for part in args.basis.split(";") if part.strip()]
    code = derive_from_basis(lines)
    report = verify_linear(code, seed=args.seed)
    doc = code.to_json(report)
    if args.out:
        _write(args.out, doc)
    else:
        _emit(doc)
    return EXIT_OK if report.ok else EXIT_FALSE


def _codes_in(doc: dict) -> List[dict]:
    if "extremal_codes" in doc:
        return doc["extremal_codes"]
    if "codewords" in doc:
        return [doc]
    raise InputError("document holds neither a code certificate nor search results")


def cmd_verify(args) -> int:
    raw = _load(args.input)
    docs = _codes_in(raw)
    out = []
    all_ok = True
    for d in docs:
        report = verify_linear(LinearCode.from_json(d), seed=args.seed)
        entry = report.to_json()
        if "verified" in d:
            entry["matches_embedded"] = d["verified"].get("all_ok") == report.ok
        all_ok &= report.ok
        out.append(entry)
    _emit(out[0] if "codewords" in raw else {"reports": out, "all_ok": all_ok})
    return EXIT_OK if all_ok else EXIT_FALSE


def cmd_profile(args) -> int:
    docs = _codes_in(_load(args.input))
    profiles = [dimension_profile(LinearCode.from_json(d)).to_json() for d in docs]
    _emit(profiles[0] if len(profiles) == 1 else {"profiles": profiles})
    return EXIT_OK


def cmd_search(args) -> int:
    budget = args.budget if args.budget is not None else default_node_budget()
    config = SearchConfig(
        _ambient(args),
        require_full_space=args.require_full_space,
        max_group_rank=args.max_rank,
        worker_count=args.workers,
        node_budget=budget,
    )
    result = run_search(config)
    doc = result.to_json(seed=args.seed)
    if args.out:
        _write(args.out, doc)
        summary = {k: v for k, v in doc.items() if k != "extremal_codes"}
        summary["out"] = args.out
        _emit(summary)
    else:
        _emit(doc)
    if not result.exhaustive:
        log.error("node budget of %d exhausted; result is not exhaustive", budget)
        return EXIT_ABORT
    return EXIT_OK


def cmd_lovasz(args) -> int:
    doc = _load(args.input)
    if "instance" in doc:
        doc = doc["instance"]
    if "codewords" in doc:
        if args.k is None:
            raise InputError("--k is required when --in holds a code")
        instance = extract_cross_family(LinearCode.from_json(doc), args.k)
    elif "A" in doc:
        instance = CrossFamilyInstance.from_json(doc)
    else:
        raise InputError("document is neither a cross-family instance nor a code")
    verdict = verify_lovasz(instance)
    _emit({"verdict": verdict.to_json(), "instance": instance.to_json()})
    if verdict.contradiction:
        return EXIT_FALSE
    return EXIT_OK if verdict.hypothesis_holds and verdict.bound_holds else EXIT_FALSE


def cmd_nonlinear(args) -> int:
    budget = args.budget if args.budget is not None else default_node_budget()
    record = verify_nonlinearity_of_full_projective_space(_ambient(args), node_budget=budget)
    _emit(record.to_json())
    return EXIT_OK if record.nonlinear else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled verification")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    space = argparse.ArgumentParser(add_help=False)
    space.add_argument("--q", type=int, required=True, help="field order")
    space.add_argument("--n", type=int, required=True, help="ambient dimension")

    parser = argparse.ArgumentParser(prog="projspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common, space], help="list subspaces as JSON lines")
    p.add_argument("--k", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distance", parents=[common, space], help="subspace distance")
    p.add_argument("--a", required=True, help='vectors spanning A, e.g. "1 0;0 1"')
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("derive", parents=[common, space], help="code derived from a basis")
    p.add_argument("--basis", required=True, help='n vectors, e.g. "1 0 0;0 1 0;0 0 1"')
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", parents=[common], help="check the linear-code axioms")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", parents=[common], help="codeword counts per dimension")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("search", parents=[common, space], help="exhaustive search for linear codes")
    p.add_argument("--require-full-space", action="store_true")
    p.add_argument("--max-rank", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("lovasz", parents=[common], help="check a cross-intersecting family instance")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, help="dimension to extract when --in holds a code")
    p.set_defaults(func=cmd_lovasz)

    p = sub.add_parser("nonlinear", parents=[common, space], help="show P_q(n) is not a linear code")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_nonlinear)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (AmbientTooLarge, EnumerationTooLarge, BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ABORT
    except (InputError, FieldError, SubspaceError, LinearCodeError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
