"""The verify-paper pipeline: every acceptance check, run in order, each
with a machine-readable record and a single-command reproducer."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import curves, lfun, moments, theta
from .characters import GroupTable
from .errors import ArtinrepError, BadReduction, ConfigError
from .frobenius import S4FieldSpec, find_s4_quartic, frobenius_class
from .intpoly import primes_up_to
from .registry import DEFAULT_REGISTRY, Registry, ingest_registry
from .reports import emit_report


@dataclass
class RunConfig:
    registry_path: str = str(DEFAULT_REGISTRY)
    out_dir: str = "reports"
    quartic: tuple[int, int, int, int] | None = None
    quartic_height: int = 6
    workers: int = 1
    include_supersingular: bool = True
    strict_table2: bool = False
    moment_prime_bound: int = 100_000
    theta_prime_bound: int = 1_000
    chebotarev_prime_bound: int = 10_000

    def validate(self) -> None:
        if not Path(self.registry_path).exists():
            raise ConfigError(f"registry file not found: {self.registry_path}")
        for name in ("moment_prime_bound", "theta_prime_bound",
                     "chebotarev_prime_bound", "workers", "quartic_height"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")


@dataclass
class CheckRecord:
    name: str
    passed: bool
    elapsed: float
    detail: str
    reproducer: str

    def row(self) -> dict:
        return {"check": self.name, "pass": str(self.passed).lower(),
                "elapsed_s": f"{self.elapsed:.2f}", "detail": self.detail,
                "reproducer": self.reproducer}


class VerifyContext:
    """Loaded tables, registry and quartic fields shared by the checks."""

    def __init__(self, config: RunConfig):
        config.validate()
        self.config = config
        self.registry: Registry = ingest_registry(config.registry_path)
        self.e21 = self.registry.curve("21.A1")
        self.e63 = self.registry.curve("63.A2")
        self.c1 = self.registry.quartic("C1")
        self.s4 = GroupTable.load("group_s4")
        self.s4p = GroupTable.load("group_s4", table_id="s4p")
        self.c2 = GroupTable.load("group_c2")
        self.compositum = GroupTable.load("group_compositum")
        if config.strict_table2:
            self._strict_table2_validation()
        if config.quartic is not None:
            self.field_l = S4FieldSpec(tuple(config.quartic))
            if not self.field_l.contains_sqrt_minus_3():
                raise ConfigError(
                    "--quartic does not cut out a field containing sqrt(-3)")
        else:
            self.field_l = find_s4_quartic(config.quartic_height)
        self.field_lp = find_s4_quartic(config.quartic_height,
                                        exclude=(self.field_l,))

    def _strict_table2_validation(self) -> None:
        """Re-validate the compositum table with the model's true sizes."""
        import json

        path = Path(__file__).parent / "data" / "group_compositum.json"
        obj = json.loads(path.read_text(encoding="utf-8"))
        true_sizes = obj.get("true_sizes")
        if not true_sizes:
            raise ConfigError("strict-table2: no true_sizes block in data file")
        patched = dict(obj, sizes_trusted=True,
                       classes=[dict(c, size=true_sizes[c["label"]])
                                for c in obj["classes"]])
        GroupTable.from_json(patched)  # raises MalformedTable on failure


def _timed(fn):
    def run(ctx: VerifyContext) -> CheckRecord:
        t0 = time.time()
        name, passed, detail, repro = fn(ctx)
        return CheckRecord(name, passed, time.time() - t0, detail, repro)

    return run


@_timed
def check_c1_identity(ctx):
    bad = []
    n_checked = 0
    for p in primes_up_to(199):
        if p < 5 or p in ctx.c1.bad_primes:
            continue
        n_checked += 1
        if curves.count_quartic(ctx.c1, p) != 1 + p - 3 * curves.ap(ctx.e21, p):
            bad.append(p)
    return ("c1-identity", not bad and n_checked > 0,
            f"{n_checked} primes, failures: {bad}",
            "artinrep verify-paper --only c1-identity")


@_timed
def check_twist_relation(ctx):
    bad = []
    n = 0
    for p in primes_up_to(500):
        if not (ctx.e21.has_good_reduction(p) and ctx.e63.has_good_reduction(p)):
            continue
        n += 1
        if curves.ap(ctx.e63, p) != curves.kronecker(-3, p) * curves.ap(ctx.e21, p):
            bad.append(p)
    return ("twist-relation", not bad and n > 0,
            f"{n} primes, failures: {bad}",
            "artinrep verify-paper --only twist-relation")


@_timed
def check_cubic_base_change(ctx):
    bad = []
    n = 0
    for curve in (ctx.e21, ctx.e63):
        for p in (5, 7, 11, 13):
            if not curve.has_good_reduction(p):
                continue
            n += 1
            f = curves.count_points_ext(curve, p, 3, "formula")
            e = curves.count_points_ext(curve, p, 3, "enumerate")
            a = curves.ap(curve, p)
            closed = 1 + p ** 3 - a ** 3 + 3 * a * p
            if not (f == e == closed):
                bad.append((curve.label, p))
    return ("cubic-base-change", not bad and n > 0,
            f"{n} (curve, prime) pairs, failures: {bad}",
            "artinrep verify-paper --only cubic-base-change")


@_timed
def check_quadratic_rs(ctx):
    bad = []
    n = 0
    for d in (-3, 5, -7):
        twist = curves.quadratic_twist(ctx.e21, d)
        for p in primes_up_to(200):
            if p < 5 or d % p == 0 or not ctx.e21.has_good_reduction(p):
                continue
            if not twist.has_good_reduction(p):
                continue
            n += 1
            cls = "1a" if curves.kronecker(d, p) == 1 else "2a"
            rs = lfun.rankin_selberg_elliptic(
                curves.ap(ctx.e21, p), p, ctx.c2.by_name["chi_q"], cls)
            tw = lfun.local_factor(twist, p)
            if rs.coeffs != tw.coeffs:
                bad.append((d, p))
    return ("quadratic-rankin-selberg", not bad and n > 0,
            f"{n} (d, p) pairs, failures: {bad}",
            "artinrep verify-paper --only quadratic-rankin-selberg")


@_timed
def check_split_case_equivalence(ctx):
    chi4 = ctx.s4.by_name["chi4"]
    seen = {"3a": 0, "4a": 0}
    bad = []
    for p in primes_up_to(5000):
        if min(seen.values()) >= 10:
            break
        if not ctx.e63.has_good_reduction(p) or ctx.field_l.disc % p == 0:
            continue
        datum = frobenius_class(ctx.field_l, p)
        if datum.class_label not in seen:
            continue
        case = lfun.CASE_CUBIC if datum.class_label == "3a" else lfun.CASE_QUARTIC
        a = curves.ap(ctx.e63, p)
        closed = lfun.split_case_factor(a, p, case)
        rs = lfun.rankin_selberg_elliptic(a, p, chi4, datum.class_label)
        if closed.coeffs != rs.coeffs:
            bad.append(p)
        seen[datum.class_label] += 1
    enough = min(seen.values()) >= 10
    return ("split-case-equivalence", not bad and enough,
            f"samples {seen}, failures: {bad}",
            "artinrep verify-paper --only split-case-equivalence")


@_timed
def check_divisibility(ctx):
    chi4 = ctx.s4.by_name["chi4"]
    bad = []
    n = 0
    for p in primes_up_to(2000):
        if not ctx.e63.has_good_reduction(p) or ctx.field_l.disc % p == 0:
            continue
        n += 1
        a = curves.ap(ctx.e63, p)
        cls = frobenius_class(ctx.field_l, p).class_label
        big = lfun.rankin_selberg_elliptic(a, p, chi4, cls)
        if not lfun.divides(lfun.elliptic_factor(a, p), big):
            bad.append(p)
    # triple-twist divisibility for (d1, d2) = (5, -7)
    d1, d2 = 5, -7
    tws = [curves.quadratic_twist(ctx.e21, d) for d in (d1, d2, d1 * d2)]
    m = 0
    for p in primes_up_to(500):
        if p < 5 or not ctx.e21.has_good_reduction(p):
            continue
        if any(not t.has_good_reduction(p) for t in tws):
            continue
        m += 1
        prod = None
        for t in tws:
            f = lfun.local_factor(t, p).poly()
            prod = f if prod is None else prod * f
        if not lfun.elliptic_factor(curves.ap(ctx.e21, p), p).poly().divides(prod):
            bad.append(("triple", p))
    return ("divisibility", not bad and n > 0 and m > 0,
            f"{n} genus-3 primes, {m} triple-twist primes, failures: {bad}",
            "artinrep verify-paper --only divisibility")


@_timed
def check_theta_uniqueness(ctx):
    bound = ctx.config.theta_prime_bound
    a4 = frozenset({"1a", "2a", "3a"})
    chi4 = ctx.s4.by_name["chi4"]
    results = {}
    prob = theta.ThetaProblem(
        table=ctx.s4, dim=9, copies=3, hom_constraints=((a4, 0),),
        constraints=theta.genus3_twist_constraints(
            ctx.e21, ctx.e63, chi4, ctx.field_l, bound))
    results["theta21"] = theta.solve(prob)
    prob_v = theta.ThetaProblem(
        table=ctx.s4, dim=9, copies=3, hom_constraints=((a4, 0),),
        constraints=theta.genus3_twist_constraints(
            ctx.e63, ctx.e63, chi4, ctx.field_l, bound))
    results["theta-e63"] = theta.solve(prob_v)
    toy = theta.ThetaProblem(
        table=ctx.c2, dim=1,
        constraints=theta.quadratic_twist_toy_constraints(ctx.e21, 5, bound))
    results["toy"] = theta.solve(toy)
    want = {"theta21": "3*chi5", "theta-e63": "3*chi4", "toy": "chi_q"}
    got = {k: (sol.survivor_name() if sol.unique else "ambiguous")
           for k, sol in results.items()}
    return ("theta-uniqueness", got == want, f"{got}",
            "artinrep theta --group s4 --dim 9 --copies 3 --left 21.A1 "
            f"--right-rs 63.A2:chi4 --primes {bound}")


@_timed
def check_character_identities(ctx):
    s4, big = ctx.s4, ctx.compositum
    ok = []
    psi7, psi9, psi13 = (big.by_name[n] for n in ("psi7", "psi9", "psi13"))
    ok.append((psi7 * psi9) == psi13)
    ok.append(s4.inflate(s4.by_name["chi5"], big) == psi9)
    ok.append(ctx.s4p.inflate(ctx.s4p.by_name["chi5"], big) == psi7)
    ok.append(s4.integral_multiplicities(s4.by_name["chi4"] * s4.by_name["chi5"])
              == (0, 1, 1, 1, 1))
    ok.append(s4.integral_multiplicities(s4.by_name["chi5"] * s4.by_name["chi5"])
              == (1, 0, 1, 1, 1))
    return ("character-identities", all(ok), f"subchecks: {ok}",
            "artinrep verify-paper --only character-identities")


@_timed
def check_theta_table(ctx):
    items = theta.verify_theta_table(
        ctx.e21, ctx.e63, ctx.field_l, ctx.field_lp,
        ctx.s4, ctx.s4p, ctx.c2, ctx.compositum,
        prime_bound=ctx.config.theta_prime_bound)
    detail = "; ".join(f"{it.name}={it.computed}" for it in items)
    return ("theta-table", all(it.passed for it in items), detail,
            "artinrep verify-paper --only theta-table")


@_timed
def check_moments_closed_form(ctx):
    want = {(1, 1): Fraction(0), (1, 2): Fraction(1),
            (1, 4): Fraction(8), (2, 1): Fraction(1)}
    got = {(i, n): moments.theoretical_moment(i, n, ctx.s4)
           for (i, n) in want}
    return ("moments-closed-form", got == want,
            ", ".join(f"M{n}(a{i})={v}" for (i, n), v in sorted(got.items())),
            "artinrep moments --coefficient 1 --order 2 --theoretical-only")


@_timed
def check_moments_empirical(ctx):
    bound = ctx.config.moment_prime_bound
    samples = moments.per_prime_values(
        ctx.e63, ctx.field_l, ctx.s4, bound,
        include_supersingular=ctx.config.include_supersingular,
        workers=ctx.config.workers)
    reports = []
    for (i, n) in ((1, 2), (1, 4), (1, 1), (2, 1)):
        reports.append(moments.empirical_moment(
            i, n, ctx.e63, ctx.field_l, ctx.s4, bound, samples=samples))
    for n in (1, 2):
        reports.append(moments.catalan_moment_check(
            n, ctx.e63, bound, workers=ctx.config.workers))
    detail = "; ".join(
        f"M{r.order}(a{r.coefficient or ''})={r.empirical:.3f}~{float(r.theoretical):.3f}"
        for r in reports)
    return ("moments-empirical", all(r.passed for r in reports), detail,
            f"artinrep moments --coefficient 1 --order 2 --primes {bound}")


@_timed
def check_chebotarev(ctx):
    from collections import Counter

    bound = ctx.config.chebotarev_prime_bound
    counts = Counter()
    total = 0
    for p in primes_up_to(bound):
        if ctx.field_l.disc % p == 0:
            continue
        counts[frobenius_class(ctx.field_l, p).class_label] += 1
        total += 1
    expected = {"1a": 1 / 24, "2a": 3 / 24, "2b": 6 / 24, "3a": 8 / 24,
                "4a": 6 / 24}
    deviations = {c: abs(counts.get(c, 0) / total - expected[c])
                  for c in expected}
    ok = all(d <= 0.05 for d in deviations.values())
    return ("chebotarev", ok,
            ", ".join(f"{c}:{counts.get(c, 0) / total:.3f}" for c in sorted(expected)),
            f"artinrep frob-class --quartic "
            f"{','.join(map(str, ctx.field_l.coefficients))} --primes {bound}")


@_timed
def check_eigenvalue_roundtrip(ctx):
    bad = []
    for table in (ctx.s4, ctx.compositum, ctx.c2):
        for irr in table.irreducibles:
            for cls in table.classes:
                ev = table.eigenvalue_multiset(irr, cls.label)
                if sum(ev.multiplicities) != irr.dim:
                    bad.append((table.id, irr.name, cls.label, "sum"))
                if ev.trace() != irr.value(cls.label):
                    bad.append((table.id, irr.name, cls.label, "trace"))
    return ("eigenvalue-roundtrip", not bad, f"failures: {bad}",
            "artinrep verify-paper --only eigenvalue-roundtrip")


ALL_CHECKS = [
    ("c1-identity", check_c1_identity),
    ("twist-relation", check_twist_relation),
    ("cubic-base-change", check_cubic_base_change),
    ("quadratic-rankin-selberg", check_quadratic_rs),
    ("split-case-equivalence", check_split_case_equivalence),
    ("divisibility", check_divisibility),
    ("theta-uniqueness", check_theta_uniqueness),
    ("character-identities", check_character_identities),
    ("theta-table", check_theta_table),
    ("moments-closed-form", check_moments_closed_form),
    ("moments-empirical", check_moments_empirical),
    ("chebotarev", check_chebotarev),
    ("eigenvalue-roundtrip", check_eigenvalue_roundtrip),
]


def verify_paper(config: RunConfig, only: list[str] | None = None,
                 echo=print) -> tuple[int, list[CheckRecord]]:
    """Run the acceptance checks in order; returns (exit_status, records).

    Exit status 0 when every check passes, 1 on any check failure; raises
    ConfigError (exit 2 at the CLI) for configuration problems.
    """
    ctx = VerifyContext(config)
    names = [n for n, _ in ALL_CHECKS]
    if only:
        unknown = sorted(set(only) - set(names))
        if unknown:
            raise ConfigError(f"unknown checks {unknown}; have {names}")
    records = []
    for name, fn in ALL_CHECKS:
        if only and name not in only:
            continue
        try:
            rec = fn(ctx)
        except (ArtinrepError, BadReduction) as e:
            rec = CheckRecord(name, False, 0.0, f"error: {e}",
                              f"artinrep verify-paper --only {name}")
        records.append(rec)
        echo(f"[{'PASS' if rec.passed else 'FAIL'}] {rec.name} "
             f"({rec.elapsed:.2f}s) {rec.detail}")
    emit_report([r.row() for r in records], config.out_dir, "verify_paper",
                columns=["check", "pass", "elapsed_s", "detail", "reproducer"])
    status = 0 if all(r.passed for r in records) else 1
    return status, records
