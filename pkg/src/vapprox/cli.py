"""Command line entry point.

Exit codes: 0 when a verdict was computed (whatever it is), 1 on malformed input
or failed axioms, 2 when a THEOREM-tier law fails, 3 when a resource cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cocomplete, continuity, topo
from .ideals import IdealClass
from .io import InstanceError, load_instance, validate_instance
from .report import ResourceLimitError, StructureError, _jsonable

EXIT_OK, EXIT_INVALID, EXIT_THEOREM, EXIT_CAP = 0, 1, 2, 3


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(_jsonable(payload), sort_keys=True, indent=2))
    else:
        print(text)


def _matrix_text(objects, rows) -> str:
    width = max([len(str(o)) for o in objects] + [len(v) for r in rows for v in r] + [1])
    head = " " * (width + 1) + " ".join(str(o).rjust(width) for o in objects)
    body = [str(o).rjust(width) + " " + " ".join(v.rjust(width) for v in r)
            for o, r in zip(objects, rows)]
    return "\n".join([head] + body)


def _ideal_class(args, inst) -> IdealClass:
    text = args.ideals or (inst.ideals if inst is not None else None) or "all"
    return IdealClass.parse(text, below=args.fsw_below)


def _categories(args, inst) -> dict:
    if args.category:
        if args.category not in inst.categories:
            raise InstanceError("/categories", f"no category named {args.category!r}")
        return {args.category: inst.categories[args.category]}
    if not inst.categories:
        raise InstanceError("/categories", "instance has no categories")
    return inst.categories


def cmd_validate(args) -> int:
    inst = load_instance(args.instance)
    reports = validate_instance(inst)
    ok = all(r.ok for r in reports.values())
    lines = [f"{'ok  ' if r.ok else 'FAIL'} {ptr}" +
             ("" if r.ok else ": " + ", ".join(f"{c.name} {c.witness}" for c in r.failures))
             for ptr, r in reports.items()]
    _emit({"ok": ok, "reports": {k: r.to_dict() for k, r in reports.items()}},
          args.json, "\n".join(lines))
    return EXIT_OK if ok else EXIT_INVALID


def _require_valid(inst) -> None:
    for ptr, rep in validate_instance(inst).items():
        if not rep.ok:
            raise InstanceError(ptr, "failed " + ", ".join(c.name for c in rep.failures))


def cmd_waybelow(args) -> int:
    inst = load_instance(args.instance)
    _require_valid(inst)
    cls = _ideal_class(args, inst)
    out, text = {}, []
    for name, X in _categories(args, inst).items():
        wb = continuity.way_below(X, cls)
        out[name] = wb.to_dict()
        text.append(f"{name} [{cls}]\n" + _matrix_text(X.objects, out[name]["matrix"]))
    _emit(out, args.json, "\n\n".join(text))
    return EXIT_OK


def cmd_continuity(args) -> int:
    inst = load_instance(args.instance)
    _require_valid(inst)
    cls = _ideal_class(args, inst)
    out, text = {}, []
    for name, X in _categories(args, inst).items():
        rep = continuity.is_J_continuous(X, cls)
        wb = continuity.way_below(X, cls).distributor
        out[name] = rep.to_dict()
        out[name]["conditions"] = continuity.theorem_cont_check(X, cls, wb).to_dict()
        vec = "".join("T" if c else "F" for c in out[name]["conditions"]["conditions"])
        text.append(f"{name} [{cls}]: {'continuous' if rep.continuous else 'not continuous'}"
                    f" (cocomplete: {rep.cocomplete}, left adjoint search agrees: {rep.agree},"
                    f" conditions at waybelow: {vec})")
    _emit(out, args.json, "\n".join(text))
    return EXIT_OK


def cmd_cocomplete(args) -> int:
    inst = load_instance(args.instance)
    _require_valid(inst)
    cls = _ideal_class(args, inst)
    out, text = {}, []
    for name, X in _categories(args, inst).items():
        rep = cocomplete.cocompleteness_report(X, cls)
        out[name] = rep
        missing = [p["presheaf"] for p in rep["presheaves"] if not p["witnesses"]]
        text.append(f"{name} [{cls}]: {'cocomplete' if rep['cocomplete'] else 'not cocomplete'}"
                    + (f"; no supremum for {missing}" if missing else ""))
    _emit(out, args.json, "\n".join(text))
    return EXIT_OK


def cmd_topo(args) -> int:
    inst = load_instance(args.instance)
    cls = args.ideals or "all"
    if cls not in topo.CLASSES:
        raise InstanceError("", f"topological ideal class must be one of {topo.CLASSES}")
    spaces = inst.spaces
    if args.space:
        if args.space not in spaces:
            raise InstanceError("/spaces", f"no space named {args.space!r}")
        spaces = {args.space: spaces[args.space]}
    if not spaces:
        raise InstanceError("/spaces", "instance has no spaces")
    out, text = {}, []
    for name, sp in spaces.items():
        rep = topo.continuity_top(sp, cls)
        rep["filters"] = [
            {"filter": F.describe(), "sup": [sp.points[i] for i in topo.sup_filter(sp, F)]}
            for F in topo.enumerate_filters(sp)]
        rep["local"] = topo.local_waybelow_consistency(sp, cls)
        out[name] = rep
        text.append(f"{name} [{cls}]: cocomplete={rep['cocomplete']} continuous={rep['continuous']}")
        for p, F in rep["waybelow"].items():
            text.append(f"  waybelow({p}) = {F}")
    _emit(out, args.json, "\n".join(text))
    return EXIT_OK


def cmd_laws(args) -> int:
    from .laws import run_laws

    report = run_laws(args.select, seed=args.seed, count=args.count, tier=args.tier,
                      cap=args.cap, jobs=args.jobs)
    if args.json:
        print(report.to_json())
    else:
        for r in report.results:
            status = "pass" if r.passed else "FAIL"
            print(f"{status} {r.tier:<11} {r.id}: {r.applicable}/{r.cases} applicable, "
                  f"{r.evaluations} evaluations, {r.failures} failures")
    if report.theorem_failures:
        return EXIT_THEOREM
    if report.capped:
        return EXIT_CAP
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vapprox",
                                description="Approximation and continuity in finite quantale-enriched categories.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, instance=True):
        if instance:
            sp.add_argument("instance", help="instance JSON file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    def ideals(sp):
        sp.add_argument("--ideals", help="all | order | fsw | radj | custom:<name> (default: all)")
        sp.add_argument("--fsw-below", choices=["totally", "directed"], default="totally",
                        help="relation used by the FSW condition")
        sp.add_argument("--category", help="only this category")
        return sp

    common(sub.add_parser("validate", help="check every embedded object against its axioms"))
    for name, helptext in (("waybelow", "print the way-below distributor"),
                           ("continuity", "decide continuity"),
                           ("cocomplete", "decide cocompleteness and list suprema")):
        ideals(common(sub.add_parser(name, help=helptext)))
    t = common(sub.add_parser("topo", help="filter-space analysis of finite spaces"))
    t.add_argument("--ideals", choices=topo.CLASSES, default="all")
    t.add_argument("--space", help="only this space")
    lw = common(sub.add_parser("laws", help="run the law checks"), instance=False)
    lw.add_argument("--seed", type=int, default=0)
    lw.add_argument("--count", type=int, default=200)
    lw.add_argument("--cap", type=int, default=10_000, help="exhaustive enumeration cap per case")
    lw.add_argument("--select", help="comma-separated law id prefixes")
    lw.add_argument("--tier", choices=["THEOREM", "OBSERVATION", "theorem", "observation"])
    lw.add_argument("--jobs", type=int, default=1)
    return p


COMMANDS = {"validate": cmd_validate, "waybelow": cmd_waybelow, "continuity": cmd_continuity,
            "cocomplete": cmd_cocomplete, "topo": cmd_topo, "laws": cmd_laws}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (StructureError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
