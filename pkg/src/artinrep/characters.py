"""Finite-group character calculus over exact cyclotomic integers.

Group tables are data, not code: a table ships as JSON carrying conjugacy
classes (label, size, element order, power map), integer or cyclotomic
character values, optional projections onto registered quotient tables,
and a flag saying whether the printed class sizes can be trusted in
size-weighted formulas.  All operations are pure; tables are immutable
after loading.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from .cyclotomic import CycloInt, _phi, _solve_rational
from .errors import MalformedTable, NonIntegralDecomposition
from .intpoly import IntPoly

_DATA_DIR = Path(__file__).parent / "data"


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    size: int
    order: int
    power_map: dict  # j (2..order-1) -> class label of c^j


class ClassFunction:
    """One exact cyclotomic value per conjugacy class of a fixed table."""

    __slots__ = ("table", "values", "name")

    def __init__(self, table: "GroupTable", values, name: str | None = None):
        vals = tuple(v if isinstance(v, CycloInt) else CycloInt.from_int(v)
                     for v in values)
        if len(vals) != len(table.classes):
            raise ValueError("value count does not match class count")
        self.table = table
        self.values = vals
        self.name = name

    def value(self, label: str) -> CycloInt:
        return self.values[self.table.index[label]]

    @property
    def dim(self) -> int:
        v = self.values[self.table.index[self.table.identity_label]]
        return v.to_int()

    def is_rational_valued(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.table is other.table and self.values == other.values

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_table(other)
        return ClassFunction(self.table,
                             [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, int):
            return ClassFunction(self.table, [v * other for v in self.values])
        self._same_table(other)
        return ClassFunction(self.table,
                             [a * b for a, b in zip(self.values, other.values)])

    __rmul__ = __mul__

    def dual(self) -> "ClassFunction":
        """Complex-conjugate character (contragredient at trace level)."""
        return ClassFunction(self.table, [v.conj() for v in self.values],
                             name=self.name)

    def is_self_dual(self) -> bool:
        return self.dual() == self

    def kernel_classes(self) -> set[str]:
        """Classes where the value equals the dimension."""
        d = CycloInt.from_int(self.dim)
        return {c.label for c, v in zip(self.table.classes, self.values) if v == d}

    def is_faithful(self) -> bool:
        return self.kernel_classes() == {self.table.identity_label}

    def _same_table(self, other: "ClassFunction") -> None:
        if self.table is not other.table:
            raise ValueError("class functions live on different group tables")

    def __repr__(self) -> str:
        nm = self.name or "?"
        return f"ClassFunction({self.table.id}:{nm}, {[str(v) for v in self.values]})"


def tensor(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    """Pointwise product: the trace of the tensor product representation."""
    return a * b


class GroupTable:
    def __init__(self, table_id: str, order: int, classes: list[ConjugacyClass],
                 characters: list[tuple[str, list]], sizes_trusted: bool = True,
                 projections: dict | None = None, validate: bool = True):
        self.id = table_id
        self.order = order
        self.classes = tuple(classes)
        self.index = {c.label: i for i, c in enumerate(self.classes)}
        self.sizes_trusted = sizes_trusted
        self.projections = dict(projections or {})
        self.irreducibles = [ClassFunction(self, vals, name=nm)
                             for nm, vals in characters]
        self.by_name = {cf.name: cf for cf in self.irreducibles}
        idents = [c.label for c in self.classes if c.order == 1]
        if len(idents) != 1:
            raise MalformedTable(f"{table_id}: need exactly one identity class")
        self.identity_label = idents[0]
        if validate:
            self.validate()

    # -- loading -------------------------------------------------------
    @staticmethod
    def from_json(obj: dict) -> "GroupTable":
        classes = [ConjugacyClass(c["label"], int(c["size"]), int(c["order"]),
                                  {int(k): v for k, v in c.get("power_map", {}).items()})
                   for c in obj["classes"]]
        chars = []
        for ch in obj["characters"]:
            vals = [CycloInt(v["m"], v["coeffs"]) if isinstance(v, dict) else int(v)
                    for v in ch["values"]]
            chars.append((ch["name"], vals))
        return GroupTable(obj["id"], int(obj["order"]), classes, chars,
                          sizes_trusted=bool(obj.get("sizes_trusted", True)),
                          projections=obj.get("projections", {}))

    @staticmethod
    def load(name: str, table_id: str | None = None) -> "GroupTable":
        """Load a packaged table (name without extension), optionally
        re-identified, e.g. the second copy of the quartic-field table."""
        with open(_DATA_DIR / f"{name}.json", encoding="utf-8") as fh:
            obj = json.load(fh)
        if table_id is not None:
            obj = dict(obj, id=table_id)
        return GroupTable.from_json(obj)

    # -- consistency ---------------------------------------------------
    def validate(self) -> None:
        if self.sizes_trusted:
            total = sum(c.size for c in self.classes)
            if total != self.order:
                raise MalformedTable(
                    f"{self.id}: class sizes sum to {total}, order is {self.order}")
        for c in self.classes:
            for j in range(2, c.order):
                target = self.power_class(c.label, j)
                t_ord = self.classes[self.index[target]].order
                if t_ord != c.order // gcd(j, c.order):
                    raise MalformedTable(
                        f"{self.id}: power map {c.label}^{j} -> {target} "
                        f"has order {t_ord}, expected {c.order // gcd(j, c.order)}")
        for cf in self.irreducibles:
            d = cf.values[self.index[self.identity_label]]
            if not (d.is_rational() and d.to_int() > 0):
                raise MalformedTable(f"{self.id}: bad dimension for {cf.name}")
        if self.sizes_trusted:
            self._check_column_orthogonality()

    def _check_column_orthogonality(self) -> None:
        for i, ci in enumerate(self.classes):
            for j, cj in enumerate(self.classes):
                s = CycloInt.from_int(0)
                for cf in self.irreducibles:
                    s = s + cf.values[i] * cf.values[j].conj()
                want = self.order // ci.size if i == j else 0
                if not (s.is_rational() and s.to_int() == want):
                    raise MalformedTable(
                        f"{self.id}: column orthogonality fails at "
                        f"({ci.label}, {cj.label})")

    # -- class structure -------------------------------------------------
    def cls(self, label: str) -> ConjugacyClass:
        return self.classes[self.index[label]]

    def power_class(self, label: str, j: int) -> str:
        """Label of the class of c^j."""
        c = self.cls(label)
        j %= c.order
        if j == 0:
            return self.identity_label
        if j == 1:
            return label
        try:
            return c.power_map[j]
        except KeyError:
            raise MalformedTable(
                f"{self.id}: power map for {label}^{j} missing") from None

    def class_sizes(self) -> dict[str, int]:
        return {c.label: c.size for c in self.classes}

    # -- inner products / decomposition ----------------------------------
    def inner_product(self, a: ClassFunction, b: ClassFunction) -> Fraction:
        """Size-weighted <a, b>; requires trusted sizes."""
        if not self.sizes_trusted:
            raise MalformedTable(
                f"{self.id}: class sizes untrusted, size-weighted inner "
                "products are disabled for this table")
        total = CycloInt.from_int(0)
        for c, x, y in zip(self.classes, a.values, b.values):
            total = total + x * y.conj() * c.size
        if not total.is_rational():
            raise MalformedTable("inner product is not rational")
        return Fraction(total.to_int(), self.order)

    def decompose(self, cf: ClassFunction, mode: str = "orthogonality") -> list[Fraction]:
        """Multiplicities of cf over the irreducibles, exact rationals.

        orthogonality mode uses size-weighted inner products; linear-solve
        inverts the (classes x irreducibles) value matrix over Q and never
        touches class sizes.
        """
        if mode == "orthogonality":
            return [self.inner_product(cf, irr) for irr in self.irreducibles]
        if mode != "linear-solve":
            raise ValueError(f"unknown decomposition mode {mode!r}")
        n = len(self.irreducibles)
        # common conductor per class row, split into rational coordinates
        rows = []
        rhs = []
        for ci in range(len(self.classes)):
            vals = [irr.values[ci] for irr in self.irreducibles]
            target = cf.values[ci]
            m = 1
            for v in vals + [target]:
                m = m * v.m // gcd(m, v.m)
            if m % 4 == 2:
                m *= 2
            width = _phi(m)
            cols = [v._embedded(m) for v in vals]
            tvec = target._embedded(m)
            for k in range(width):
                rows.append([Fraction(cols[j][k]) for j in range(n)])
                rhs.append(Fraction(tvec[k]))
        mat = [row + [b] for row, b in zip(rows, rhs)]
        sol = _solve_rational(mat, n)
        if sol is None:
            raise MalformedTable(f"{self.id}: singular or inconsistent table")
        return sol

    def integral_multiplicities(self, cf: ClassFunction,
                                mode: str = "orthogonality") -> tuple[int, ...]:
        mults = self.decompose(cf, mode=mode)
        if any(m.denominator != 1 or m < 0 for m in mults):
            raise NonIntegralDecomposition(mults)
        return tuple(int(m) for m in mults)

    def contains(self, big: ClassFunction, small: ClassFunction,
                 mode: str = "linear-solve") -> bool:
        """small <= big as characters (componentwise multiplicities)."""
        mb = self.decompose(big, mode=mode)
        ms = self.decompose(small, mode=mode)
        if any(m.denominator != 1 for m in mb + ms):
            raise NonIntegralDecomposition(mb + ms)
        return all(b >= s for b, s in zip(mb, ms))

    def sum_of(self, multiplicities) -> ClassFunction:
        out = None
        for n, irr in zip(multiplicities, self.irreducibles):
            if n:
                term = irr * int(n)
                out = term if out is None else out + term
        if out is None:
            out = ClassFunction(self, [0] * len(self.classes))
        return out

    def multiplicity_name(self, multiplicities) -> str:
        parts = []
        for n, irr in zip(multiplicities, self.irreducibles):
            if n == 1:
                parts.append(irr.name)
            elif n:
                parts.append(f"{n}*{irr.name}")
        return " + ".join(parts) if parts else "0"

    # -- eigenvalue data ---------------------------------------------------
    def eigenvalue_multiset(self, cf: ClassFunction, label: str) -> "EigenvalueMultiset":
        """Eigenvalue multiset of the representing matrix at a class, as
        exponents modulo the element order r; Fourier inversion over the
        cyclic group generated by the class, exact in Z[zeta_r]."""
        c = self.cls(label)
        r = c.order
        vals = [cf.value(self.power_class(label, j)) for j in range(r)]
        mults = []
        for k in range(r):
            s = CycloInt.from_int(0)
            for j in range(r):
                s = s + vals[j] * CycloInt.zeta(r, (-k * j) % r)
            if not s.is_rational():
                raise MalformedTable(
                    f"{self.id}: non-rational eigenvalue multiplicity at "
                    f"{cf.name or '?'} / {label}")
            num, rem = divmod(s.to_int(), r)
            if rem or num < 0:
                raise MalformedTable(
                    f"{self.id}: eigenvalue multiplicity {s.to_int()}/{r} at "
                    f"{cf.name or '?'} / {label} is not a nonnegative integer")
            mults.append(num)
        out = EigenvalueMultiset(r, tuple(mults))
        if sum(mults) != cf.dim:
            raise MalformedTable(
                f"{self.id}: eigenvalue multiplicities sum to {sum(mults)}, "
                f"dimension is {cf.dim}")
        return out

    def frobenius_charpoly(self, cf: ClassFunction, label: str) -> IntPoly:
        """det(1 - rho(c) T) as an integer polynomial."""
        ev = self.eigenvalue_multiset(cf, label)
        poly = [CycloInt.from_int(1)]
        for k, mult in enumerate(ev.multiplicities):
            for _ in range(mult):
                z = CycloInt.zeta(ev.order, k)
                nxt = [CycloInt.from_int(0)] * (len(poly) + 1)
                for i, c in enumerate(poly):
                    nxt[i] = nxt[i] + c
                    nxt[i + 1] = nxt[i + 1] - c * z
                poly = nxt
        ints = []
        for c in poly:
            if not c.is_rational():
                raise MalformedTable("characteristic polynomial not rational")
            ints.append(c.to_int())
        return IntPoly(ints)

    def inflate(self, cf: ClassFunction, big: "GroupTable") -> ClassFunction:
        """Pull back along the registered projection big -> self."""
        proj = big.projections.get(self.id)
        if proj is None:
            raise MalformedTable(
                f"no projection registered from {big.id} onto {self.id}")
        vals = [cf.value(proj[c.label]) for c in big.classes]
        nm = f"Inf[{cf.name}]" if cf.name else None
        return ClassFunction(big, vals, name=nm)

    def __repr__(self) -> str:
        return f"GroupTable({self.id}, order={self.order}, classes={len(self.classes)})"


@dataclass(frozen=True)
class EigenvalueMultiset:
    """Multiplicity of zeta_order^k at index k."""

    order: int
    multiplicities: tuple[int, ...]

    def as_roots(self) -> list[CycloInt]:
        out = []
        for k, m in enumerate(self.multiplicities):
            out.extend([CycloInt.zeta(self.order, k)] * m)
        return out

    def exponents(self) -> list[tuple[int, int]]:
        """(k, order) pairs, one per eigenvalue with multiplicity."""
        out = []
        for k, m in enumerate(self.multiplicities):
            out.extend([(k, self.order)] * m)
        return out

    def trace(self) -> CycloInt:
        s = CycloInt.from_int(0)
        for z in self.as_roots():
            s = s + z
        return s
