"""Command-line interface.

Subcommands: validate, op, soft-check, subsemirings, theorem, example.
Exit codes: 0 success, 1 axiom/domain failure (or, with --drop-hypothesis,
no counterexample found), 2 parse/input error.  stdout carries only
machine-readable JSON; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import files
from .algebra import check_gamma_semiring, enumerate_sub_gamma_semirings
from .errors import DomainError, GenerationError, InputError
from .generators import make_matrix_gamma, make_minmax_gamma, make_zn_gamma
from .harness import InstanceSpec, fuzz_theorem
from .soft_gamma import is_soft_gamma_semiring
from .soft_sets import (
    TernaryRelation,
    and_intersect,
    cartesian_product,
    extended_intersect,
    extended_union,
    make_soft_function,
    or_union,
    restricted_intersect,
    restricted_union,
    soft_image,
    soft_preimage,
    soft_set_from_relation,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

_FAMILY_KINDS = ("rint", "eint", "runion", "eunion", "prod")
_PAIR_KINDS = ("and", "or")
_OP_KINDS = _FAMILY_KINDS + _PAIR_KINDS + ("image", "preimage")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _soft_sets(paths) -> list:
    return [files.soft_set_from_doc(files.load(p)) for p in paths]


def cmd_validate(args) -> int:
    gs = files.structure_from_doc(files.load(args.file))
    report = check_gamma_semiring(gs, mode=args.mode)
    sys.stdout.write(files.dumps(files.axiom_report_to_doc(report)))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_op(args) -> int:
    kind = args.kind
    if kind in _FAMILY_KINDS:
        members = _soft_sets(args.files)
        if not members:
            raise InputError("at least one soft-set file is required")
        op = {
            "rint": restricted_intersect,
            "eint": extended_intersect,
            "runion": restricted_union,
            "eunion": extended_union,
            "prod": cartesian_product,
        }[kind]
        result = op(members)
    elif kind in _PAIR_KINDS:
        if len(args.files) != 2:
            raise InputError(f"op {kind} takes exactly two soft-set files")
        a, b = _soft_sets(args.files)
        result = and_intersect(a, b) if kind == "and" else or_union(a, b)
    elif kind == "image":
        if len(args.files) != 3:
            raise InputError("op image takes a map file, a source file, and a target file")
        maps = files.load(args.files[0])
        files.require_fields(maps, {"f", "g"}, "soft-function map document")
        source, target = _soft_sets(args.files[1:])
        sf = make_soft_function(maps["f"], maps["g"], source, target)
        result = soft_image(sf)
    elif kind == "preimage":
        if len(args.files) != 2:
            raise InputError("op preimage takes a map file and a target file")
        maps = files.load(args.files[0])
        files.require_fields(maps, {"f", "g"}, "soft-function map document")
        target = _soft_sets(args.files[1:])[0]
        g = maps["g"]
        if not isinstance(g, dict):
            raise InputError("parameter map must be an object")
        result = soft_preimage(maps["f"], g, target, tuple(g.keys()))
    else:
        raise InputError(f"unknown op kind {kind!r}")
    _emit(files.dumps(files.soft_set_to_doc(result)), args.output)
    return EXIT_OK


def cmd_soft_check(args) -> int:
    gs = files.structure_from_doc(files.load(args.structure))
    ss = files.soft_set_from_doc(files.load(args.soft_set))
    witness = is_soft_gamma_semiring(gs, ss)
    sys.stdout.write(files.dumps(files.witness_to_doc(witness)))
    return EXIT_OK if witness else EXIT_FAIL


def cmd_subsemirings(args) -> int:
    gs = files.structure_from_doc(files.load(args.file))
    subs = enumerate_sub_gamma_semirings(gs)
    doc = {
        "carrier_size": gs.size,
        "count": len(subs),
        "subsemirings": [[files.label_to_jsonable(e) for e in sub] for sub in subs],
    }
    _emit(files.dumps(doc), args.output)
    return EXIT_OK


def cmd_theorem(args) -> int:
    verdict = fuzz_theorem(
        args.id,
        args.trials,
        InstanceSpec(seed=args.seed),
        drop_hypothesis=args.drop_hypothesis,
    )
    _emit(files.dumps(files.verdict_to_doc(verdict)), args.output)
    if args.drop_hypothesis:
        return EXIT_OK if verdict.counterexample is not None else EXIT_FAIL
    return EXIT_OK if verdict.failures == 0 else EXIT_FAIL


def z8_example():
    """The mod-8 structure with gamma {2,4,6} and its relation-derived soft set."""
    gs = make_zn_gamma(8, (2, 4, 6), strict=True)
    params = tuple(str(i) for i in range(8))
    gamma = ("2", "4", "6")
    triples = frozenset(
        (str(y), str(g), str(s))
        for y in range(8)
        for g in (2, 4, 6)
        for s in range(8)
        if (y * g * s) % 8 in (0, 4, 6)
    )
    relation = TernaryRelation(params, gamma, triples)
    return gs, soft_set_from_relation(relation, gs)


_EXAMPLES = ("z8", "minmax5", "matrix2x1x2")


def cmd_example(args) -> int:
    name = args.name
    if name == "z8":
        gs, ss = z8_example()
        doc = {"structure": files.structure_to_doc(gs, name="z8"), "soft_set": files.soft_set_to_doc(ss)}
    elif name == "minmax5":
        gs = make_minmax_gamma(5, (1, 2, 3))
        doc = {"structure": files.structure_to_doc(gs, name="minmax5")}
        ss = None
    elif name == "matrix2x1x2":
        gs = make_matrix_gamma(2, 1, 2)
        doc = {"structure": files.structure_to_doc(gs, name="matrix2x1x2")}
        ss = None
    else:
        raise InputError(f"unknown example {name!r}")
    if args.output:
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / f"{name}.structure.json").write_text(
            files.dumps(doc["structure"]), encoding="utf-8"
        )
        if name == "z8":
            (outdir / f"{name}.soft.json").write_text(
                files.dumps(doc["soft_set"]), encoding="utf-8"
            )
    else:
        sys.stdout.write(files.dumps(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="softgamma")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the gamma-semiring axioms of a structure file")
    p.add_argument("file")
    p.add_argument("--mode", choices=("weak", "strict"), default="weak")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("op", help="apply a soft-set operation to soft-set files")
    p.add_argument("kind", choices=_OP_KINDS)
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("soft-check", help="test whether a soft set is a soft gamma-semiring")
    p.add_argument("structure")
    p.add_argument("soft_set")
    p.set_defaults(func=cmd_soft_check)

    p = sub.add_parser("subsemirings", help="enumerate the subalgebras of a structure file")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_subsemirings)

    p = sub.add_parser("theorem", help="fuzz one closure law")
    p.add_argument("id")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--drop-hypothesis", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("example", help="emit a bundled example structure")
    p.add_argument("name")
    p.add_argument("-o", "--output", default=None, help="directory to write files into")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
