"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a checked property failed.
"""
from __future__ import annotations

import argparse
import sys

from . import duality, io, rings, theorems, topology, wallman
from .errors import PreconditionError, StructureError
from .poset_core import FiniteLattice, is_distributive
from .verdict import Verdict

OK, INVALID, PROPERTY_FAILURE = 0, 1, 2


def _fail(message: str, witness=None) -> int:
    line = f"invalid: {message}"
    if witness is not None:
        line += f"; witness: {list(witness) if isinstance(witness, tuple) else witness}"
    print(line, file=sys.stderr)
    return INVALID


def _describe(obj) -> str:
    if isinstance(obj, FiniteLattice):
        kind = "distributive lattice" if is_distributive(obj) else "lattice (not distributive)"
        return f"ok: {kind}, {len(obj)} elements"
    if isinstance(obj, topology.FiniteSpace):
        return f"ok: space, {len(obj)} points, {len(obj.opens)} open sets"
    return f"ok: commutative ring, {len(obj)} elements"


def cmd_check(args) -> int:
    obj = io.load(args.input)
    if isinstance(obj, rings.FiniteCommRing):
        obj.validate()
    print(_describe(obj))
    return OK


def _spectrum_json(space: topology.FiniteSpace, ideals: dict[str, list[str]]) -> dict:
    out = io.space_to_json(space)
    out["ideals"] = ideals
    return out


def cmd_spectrum(args) -> int:
    obj = io.load(args.input)
    if isinstance(obj, FiniteLattice):
        if not is_distributive(obj):
            return _fail("spectra are defined here for distributive lattices only")
        spec = topology.spec_space(obj) if args.kind == "spec" else topology.max_space(obj)
        space = spec.space
        members = {p: I.sorted_members() for p, I in spec.ideals.items()}
    elif isinstance(obj, rings.FiniteCommRing):
        space = rings.zariski_spec(obj) if args.kind == "spec" else rings.max_spec_ring(obj)
        pool = rings.prime_ring_ideals(obj) if args.kind == "spec" else rings.maximal_ring_ideals(obj)
        members = {I.label: I.sorted_members() for I in pool}
    else:
        return _fail("spectrum needs a lattice or a ring")
    if args.dot:
        sys.stdout.write(io.space_to_dot(space, name=f"{args.kind}"))
    else:
        print(io.dumps(_spectrum_json(space, members)))
    return OK


def predicate_record(D: FiniteLattice) -> dict:
    dist = is_distributive(D)
    names = [
        "conjunctive",
        "normal",
        "seminormal",
        "subfit",
        "coatomistic",
        "alexandrov",
        "countably_compact",
        "completely_regular",
    ]
    rec = {"distributive": dist}
    if not dist:
        return rec | {n: None for n in names}
    rec.update(
        conjunctive=wallman.is_conjunctive(D),
        normal=wallman.is_normal(D),
        seminormal=wallman.is_seminormal(D),
        subfit=wallman.is_subfit(D),
        coatomistic=wallman.is_coatomistic(D),
        alexandrov=wallman.is_alexandrov_algebra(D),
        countably_compact=wallman.is_countably_compact(D),
        completely_regular=wallman.is_completely_regular(D),
    )
    return rec


def cmd_predicates(args) -> int:
    obj = io.load(args.input)
    if not isinstance(obj, FiniteLattice):
        return _fail("predicates needs a lattice")
    print(io.dumps(predicate_record(obj)))
    return OK


def cmd_reticulate(args) -> int:
    obj = io.load(args.input)
    if not isinstance(obj, rings.FiniteCommRing):
        return _fail("reticulate needs a ring")
    ret = rings.reticulation(obj)
    if args.dot:
        sys.stdout.write(io.lattice_to_dot(ret.lattice, name="reticulation"))
        return OK
    out = io.lattice_to_json(ret.lattice)
    out["class_of"] = dict(ret.class_of)
    out["radical_ideals"] = {k: I.sorted_members() for k, I in ret.ideal_of.items()}
    print(io.dumps(out))
    return OK


def cmd_duality(args) -> int:
    obj = io.load(args.input)
    if isinstance(obj, topology.FiniteSpace):
        report = duality.roundtrip_object(duality.TopDLatObject(obj, obj.open_lattice))
        kind = "space"
    elif isinstance(obj, FiniteLattice):
        if not is_distributive(obj):
            return _fail("duality needs a distributive lattice")
        report = duality.roundtrip_lattice(obj)
        kind = "lattice"
    else:
        return _fail("duality roundtrip needs a space or a lattice")
    print(
        io.dumps(
            {
                "input": kind,
                "verdict": report.verdict.value,
                "failed_hypotheses": list(report.failed_hypotheses),
                "witness": report.witness,
            }
        )
    )
    return OK if report.verdict is Verdict.HOLDS else PROPERTY_FAILURE


def cmd_sweep(args) -> int:
    ids = args.theorem or list(theorems.REGISTRY)
    unknown = [t for t in ids if t not in theorems.REGISTRY]
    if unknown:
        return _fail(f"unknown theorem id(s) {', '.join(unknown)}; valid ids: {', '.join(theorems.REGISTRY)}")
    cfg = theorems.SweepConfig(max_size=args.max_size)
    results = theorems.run_all(cfg, ids)
    if args.json:
        print(io.dumps([r.to_json() for r in results]))
    else:
        for r in results:
            print(r.summary())
            for note in r.notes:
                print(f"    note: {note}")
    return OK if all(r.ok for r in results) else PROPERTY_FAILURE


def cmd_export(args) -> int:
    obj = io.load(args.input)
    if isinstance(obj, FiniteLattice):
        sys.stdout.write(io.lattice_to_dot(obj))
    elif isinstance(obj, topology.FiniteSpace):
        sys.stdout.write(io.space_to_dot(obj))
    else:
        sys.stdout.write(io.lattice_to_dot(rings.reticulation(obj).lattice, name="reticulation"))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxspec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("input", help="JSON file, or shorthand such as zmod:12, product:2,3, lattice:B2, space:sierpinski")
        return sp

    with_input(sub.add_parser("check", help="validate a lattice, space or ring")).set_defaults(func=cmd_check)

    sp = with_input(sub.add_parser("spectrum", help="prime or maximal spectrum with ideal-labelled points"))
    sp.add_argument("--kind", choices=("spec", "max"), default="spec")
    sp.add_argument("--dot", action="store_true", help="emit the specialization order as DOT")
    sp.set_defaults(func=cmd_spectrum)

    with_input(sub.add_parser("predicates", help="all lattice predicates as JSON")).set_defaults(func=cmd_predicates)

    sp = with_input(sub.add_parser("reticulate", help="reticulation of a ring"))
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_reticulate)

    sp = sub.add_parser("duality", help="duality checks")
    dsub = sp.add_subparsers(dest="action", required=True)
    rt = dsub.add_parser("roundtrip", help="roundtrip through the functors H and K")
    rt.add_argument("--input", required=True)
    rt.set_defaults(func=cmd_duality)

    sp = sub.add_parser("sweep", help="run registered theorem checks over the corpus")
    sp.add_argument("--max-size", type=int, default=8)
    sp.add_argument("--theorem", action="append", help="theorem id; repeatable (default: all)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("export", help="export diagrams")
    esub = sp.add_subparsers(dest="format", required=True)
    with_input(esub.add_parser("dot", help="Hasse or specialization diagram")).set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StructureError, PreconditionError) as exc:
        return _fail(str(exc), getattr(exc, "witness", None))


if __name__ == "__main__":
    sys.exit(main())
