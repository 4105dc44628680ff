"""Curve-registry ingestion and validation."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .curves import EllipticCurveSpec, PlaneQuarticSpec
from .errors import RegistryError
from .intpoly import prime_support

_DATA_DIR = Path(__file__).parent / "data"
DEFAULT_REGISTRY = _DATA_DIR / "registry.json"


@dataclass
class Registry:
    curves: dict[str, EllipticCurveSpec]
    quartics: dict[str, PlaneQuarticSpec]
    warnings: list[str]

    def curve(self, label: str) -> EllipticCurveSpec:
        try:
            return self.curves[label]
        except KeyError:
            raise RegistryError(f"no curve with label {label!r} "
                                f"(have {sorted(self.curves)})") from None

    def quartic(self, label: str) -> PlaneQuarticSpec:
        try:
            return self.quartics[label]
        except KeyError:
            raise RegistryError(f"no quartic with label {label!r}") from None


def ingest_registry(path: str | Path = DEFAULT_REGISTRY) -> Registry:
    """Load and validate the registry file, with field-level diagnostics."""
    path = Path(path)
    if not path.exists():
        raise RegistryError(f"registry file not found: {path}")
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise RegistryError(f"{path}: invalid JSON: {e}") from None

    curves: dict[str, EllipticCurveSpec] = {}
    warnings: list[str] = []
    for i, entry in enumerate(obj.get("curves", [])):
        label = entry.get("label")
        if not isinstance(label, str) or not label:
            raise RegistryError(f"curves[{i}]: missing or empty label")
        if label in curves:
            raise RegistryError(f"duplicate curve label {label!r}")
        w = entry.get("weierstrass")
        if (not isinstance(w, list) or len(w) != 5
                or not all(isinstance(c, int) for c in w)):
            raise RegistryError(
                f"curves[{i}] ({label}): weierstrass must be five integers "
                "[a1, a2, a3, a4, a6]; fill the template from a curve database")
        conductor = entry.get("conductor")
        if conductor is not None and (not isinstance(conductor, int) or conductor <= 0):
            raise RegistryError(f"curves[{i}] ({label}): bad conductor")
        try:
            spec = EllipticCurveSpec(label, tuple(w), conductor)
        except ValueError as e:
            raise RegistryError(f"curves[{i}] ({label}): {e}") from None
        curves[label] = spec

    quartics: dict[str, PlaneQuarticSpec] = {}
    for i, entry in enumerate(obj.get("quartics", [])):
        label = entry.get("label")
        if not isinstance(label, str) or not label:
            raise RegistryError(f"quartics[{i}]: missing or empty label")
        if label in quartics or label in curves:
            raise RegistryError(f"duplicate label {label!r}")
        monos = entry.get("monomials")
        if not isinstance(monos, dict) or not monos:
            raise RegistryError(f"quartics[{i}] ({label}): missing monomials")
        parsed = {}
        for key, coef in monos.items():
            if (not isinstance(key, str) or len(key) != 3
                    or not key.isdigit() or not isinstance(coef, int)):
                raise RegistryError(
                    f"quartics[{i}] ({label}): bad monomial entry {key!r}")
            expo = tuple(int(ch) for ch in key)
            if sum(expo) != 4:
                raise RegistryError(
                    f"quartics[{i}] ({label}): monomial {key} is not degree 4")
            parsed[expo] = coef
        bad = tuple(entry.get("bad_primes", []))
        if not all(isinstance(b, int) and b >= 2 for b in bad):
            raise RegistryError(f"quartics[{i}] ({label}): bad bad_primes")
        # a prime clearing denominators kills the pure fourth-power terms
        # when reduced, so it must be declared bad
        pure = [parsed.get(e, 0) for e in ((4, 0, 0), (0, 4, 0), (0, 0, 4))]
        g = 0
        for c in pure:
            g = math.gcd(g, c)
        for q in prime_support(g):
            if q not in bad:
                warnings.append(
                    f"{label}: denominator prime {q} is not listed in "
                    "bad_primes")
        quartics[label] = PlaneQuarticSpec(label, parsed, bad)

    return Registry(curves=curves, quartics=quartics, warnings=warnings)
