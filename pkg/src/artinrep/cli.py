"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 check failure, 2 configuration
error.  All configuration is explicit flags; no environment variables.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curves, lfun, moments, theta
from .characters import GroupTable
from .errors import ArtinrepError, ConfigError, NotFound, RegistryError
from .frobenius import S4FieldSpec, find_s4_quartic, frobenius_class
from .registry import DEFAULT_REGISTRY, ingest_registry
from .reports import emit_report
from .verify import RunConfig, verify_paper


def _parse_quartic(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError("--quartic wants four comma-separated integers a,b,c,d")
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise ConfigError(f"bad --quartic value {text!r}") from None


def _load_tables():
    return {
        "s4": GroupTable.load("group_s4"),
        "s4p": GroupTable.load("group_s4", table_id="s4p"),
        "c2": GroupTable.load("group_c2"),
        "compositum": GroupTable.load("group_compositum"),
    }


def _emit(obj, args) -> None:
    if getattr(args, "json", False):
        print(json.dumps(obj, indent=1, sort_keys=True, default=str))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_find_quartic(args) -> int:
    exclude = ()
    if args.exclude:
        exclude = (S4FieldSpec(_parse_quartic(args.exclude)),)
    f = find_s4_quartic(args.height, exclude=exclude)
    _emit({"quartic": f.describe(),
           "coefficients": list(f.coefficients),
           "disc": f.disc,
           "bad_primes": sorted(f.bad_primes())}, args)
    return 0


def cmd_frob_class(args) -> int:
    f = S4FieldSpec(_parse_quartic(args.quartic))
    if args.prime:
        d = frobenius_class(f, args.prime)
        _emit({"prime": d.prime, "class": d.class_label, "f_L4": d.f_l4,
               "f_L3": d.f_l3, "f_quadratic": d.f_quadratic}, args)
        return 0
    from collections import Counter

    from .intpoly import primes_up_to

    counts = Counter()
    ramified = []
    for p in primes_up_to(args.primes):
        if f.disc % p == 0:
            ramified.append(p)
            continue
        counts[frobenius_class(f, p).class_label] += 1
    if ramified:
        print(f"ramified primes skipped: {ramified}", file=sys.stderr)
    total = sum(counts.values())
    _emit({c: f"{n} ({n / total:.4f})" for c, n in sorted(counts.items())}, args)
    return 0


def cmd_ap(args) -> int:
    reg = ingest_registry(args.registry)
    curve = reg.curve(args.curve)
    _emit({"curve": args.curve, "prime": args.prime,
           "ap": curves.ap(curve, args.prime)}, args)
    return 0


def cmd_local_factor(args) -> int:
    reg = ingest_registry(args.registry)
    curve = reg.curve(args.curve)
    f = lfun.local_factor(curve, args.prime)
    _emit({"curve": args.curve, "prime": args.prime,
           "coefficients": list(f.coeffs), "factored": f.poly().pretty()}, args)
    return 0


def cmd_rankin_selberg(args) -> int:
    reg = ingest_registry(args.registry)
    curve = reg.curve(args.curve)
    tables = _load_tables()
    table = tables[args.group]
    try:
        chi = table.by_name[args.char]
    except KeyError:
        raise ConfigError(f"no character {args.char!r} on table {args.group}")
    a = curves.ap(curve, args.prime)
    f = lfun.rankin_selberg_elliptic(a, args.prime, chi, args.cls)
    _emit({"curve": args.curve, "prime": args.prime, "char": args.char,
           "class": args.cls, "ap": a, "coefficients": list(f.coeffs),
           "polynomial": f.poly().pretty()}, args)
    return 0


def cmd_res_scalars_check(args) -> int:
    reg = ingest_registry(args.registry)
    curve = reg.curve(args.curve)
    tables = _load_tables()
    ok = lfun.res_scalars_check(curve, args.d, args.prime, tables["c2"])
    _emit({"curve": args.curve, "d": args.d, "prime": args.prime,
           "identity_holds": ok}, args)
    return 0 if ok else 1


def cmd_theta(args) -> int:
    reg = ingest_registry(args.registry)
    tables = _load_tables()
    table = tables[args.group]
    left = reg.curve(args.left)
    hom = []
    for spec in args.hom_constraint or []:
        head, _, dim = spec.rpartition(":")
        if head == "trivial":
            subset = frozenset(c.label for c in table.classes)
        elif head.startswith("sub="):
            subset = frozenset(head[4:].split("+"))
        else:
            raise ConfigError(f"bad --hom-constraint {spec!r}; use trivial:N "
                              "or sub=1a+2a+3a:N")
        hom.append((subset, int(dim)))
    if args.right_rs:
        curve_label, _, char = args.right_rs.partition(":")
        base = reg.curve(curve_label)
        if args.quartic:
            field = S4FieldSpec(_parse_quartic(args.quartic))
        else:
            field = find_s4_quartic(6)
        constraints = theta.genus3_twist_constraints(
            left, base, table.by_name[char], field, args.primes)
    elif args.right_twist:
        constraints = theta.quadratic_twist_toy_constraints(
            left, args.right_twist, args.primes)
    else:
        raise ConfigError("need --right-rs CURVE:CHAR or --right-twist D")
    problem = theta.ThetaProblem(table=table, dim=args.dim, copies=args.copies,
                                 hom_constraints=tuple(hom),
                                 constraints=constraints)
    sol = theta.solve(problem)
    rec = sol.as_record()
    rec["unique"] = sol.unique
    if sol.unique:
        rec["survivor"] = sol.survivor_name()
        rec["faithful"] = sol.survivor_character().is_faithful()
    print(json.dumps(rec, indent=1, sort_keys=True))
    return 0 if sol.unique else 1


def cmd_moments(args) -> int:
    reg = ingest_registry(args.registry)
    tables = _load_tables()
    s4 = tables["s4"]
    theo = moments.theoretical_moment(args.coefficient, args.order, s4)
    if args.theoretical_only:
        _emit({"coefficient": args.coefficient, "order": args.order,
               "theoretical": f"{theo.numerator}/{theo.denominator}"}, args)
        return 0
    curve = reg.curve(args.curve)
    if args.quartic:
        field = S4FieldSpec(_parse_quartic(args.quartic))
    else:
        field = find_s4_quartic(6)
    rep = moments.empirical_moment(
        args.coefficient, args.order, curve, field, s4, args.primes,
        include_supersingular=not args.exclude_supersingular,
        workers=args.workers)
    row = rep.csv_row()
    if args.out:
        emit_report([row], args.out, "moments")
    _emit(row, args)
    return 0 if rep.passed else 1


def cmd_verify_paper(args) -> int:
    config = RunConfig(
        registry_path=args.registry,
        out_dir=args.out,
        quartic=_parse_quartic(args.quartic) if args.quartic else None,
        workers=args.workers,
        include_supersingular=not args.exclude_supersingular,
        strict_table2=args.strict_table2,
        moment_prime_bound=args.moment_primes,
        theta_prime_bound=args.theta_primes,
        chebotarev_prime_bound=args.chebotarev_primes,
    )
    status, _ = verify_paper(config, only=args.only or None)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap_ = argparse.ArgumentParser(
        prog="artinrep",
        description="Exact character / local-factor calculus for isogeny-twin "
                    "abelian varieties")
    sub = ap_.add_subparsers(dest="command", required=True)

    def add_registry(p):
        p.add_argument("--registry", default=str(DEFAULT_REGISTRY),
                       help="path to the curve registry JSON")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("find-quartic", help="search for an admissible quartic")
    p.add_argument("--height", type=int, default=6)
    p.add_argument("--exclude", help="a,b,c,d of a field to avoid")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_find_quartic)

    p = sub.add_parser("frob-class", help="Frobenius class of a prime")
    p.add_argument("--quartic", required=True, help="a,b,c,d")
    p.add_argument("--prime", type=int)
    p.add_argument("--primes", type=int, default=10000,
                   help="tally classes up to this bound when no --prime")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_frob_class)

    p = sub.add_parser("ap", help="trace of Frobenius")
    add_registry(p)
    p.add_argument("--curve", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(fn=cmd_ap)

    p = sub.add_parser("local-factor", help="elliptic local factor")
    add_registry(p)
    p.add_argument("--curve", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(fn=cmd_local_factor)

    p = sub.add_parser("rankin-selberg", help="Rankin-Selberg expansion")
    add_registry(p)
    p.add_argument("--curve", required=True)
    p.add_argument("--char", required=True, help="e.g. chi4")
    p.add_argument("--class", dest="cls", required=True, help="e.g. 3a")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--group", default="s4")
    p.set_defaults(fn=cmd_rankin_selberg)

    p = sub.add_parser("res-scalars-check",
                       help="restriction-of-scalars identity over Q(sqrt d)")
    add_registry(p)
    p.add_argument("--curve", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(fn=cmd_res_scalars_check)

    p = sub.add_parser("theta", help="solve for the attached character")
    add_registry(p)
    p.add_argument("--group", default="s4")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--copies", type=int, default=1)
    p.add_argument("--left", required=True, help="left curve label")
    p.add_argument("--right-rs", help="CURVE:CHAR generating the right factors")
    p.add_argument("--right-twist", type=int,
                   help="toy problem: right side is the twist by this d")
    p.add_argument("--quartic", help="a,b,c,d (default: first found)")
    p.add_argument("--primes", type=int, default=1000)
    p.add_argument("--hom-constraint", action="append",
                   help="trivial:N or sub=1a+2a+3a:N (repeatable)")
    p.set_defaults(fn=cmd_theta)

    p = sub.add_parser("moments", help="Sato-Tate moment comparison")
    add_registry(p)
    p.add_argument("--coefficient", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--curve", default="63.A2")
    p.add_argument("--quartic", help="a,b,c,d (default: first found)")
    p.add_argument("--primes", type=int, default=100000)
    p.add_argument("--theoretical-only", action="store_true")
    p.add_argument("--exclude-supersingular", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="directory for CSV/JSON output")
    p.set_defaults(fn=cmd_moments)

    p = sub.add_parser("verify-paper", help="run the full acceptance pipeline")
    p.add_argument("--registry", default=str(DEFAULT_REGISTRY))
    p.add_argument("--out", default="reports")
    p.add_argument("--quartic", help="a,b,c,d (default: search)")
    p.add_argument("--only", action="append", help="run only named checks")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--exclude-supersingular", action="store_true")
    p.add_argument("--strict-table2", action="store_true",
                   help="re-validate the compositum table against the "
                        "fiber-product model sizes")
    p.add_argument("--moment-primes", type=int, default=100000)
    p.add_argument("--theta-primes", type=int, default=1000)
    p.add_argument("--chebotarev-primes", type=int, default=10000)
    p.set_defaults(fn=cmd_verify_paper)
    return ap_


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConfigError, RegistryError, NotFound) as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return 2
    except ArtinrepError as e:
        print(f"check failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
