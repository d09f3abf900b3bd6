"""Dual-containment certificates and CSS quantum parameters."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd

from .fqr import CodeSpec
from .skewpoly import (
    SkewPoly,
    SkewPolyError,
    dagger,
    format_ascending,
    reciprocal,
    right_cofactor,
    right_divmod,
)


class CertificateError(ValueError):
    """No divisibility criterion applies to the given code."""


class QuantumError(ValueError):
    pass


@dataclass(frozen=True)
class BlockCheck:
    """Outcome of one divisibility test, with the quotients that witness it."""

    ok: bool
    cofactor: SkewPoly | None  # h with x^n - 1 = h g, or None on the coprime route
    product: SkewPoly  # f f^* or h^dagger h
    quotient: SkewPoly | None  # product / (x^n - 1) or (x^n - 1) / product, when exact
    modulus_degree: int

    def verify(self) -> bool:
        """Re-multiply the witnesses and compare with the original product."""
        if not self.ok:
            return True
        F, te = self.product.field, self.product.theta_exp
        xn = SkewPoly.xn_minus_one(F, self.modulus_degree, te)
        if self.cofactor is None:
            return self.quotient * self.product == xn
        return self.quotient * xn == self.product

    def to_dict(self) -> dict:
        d = {"ok": self.ok, "product": format_ascending(self.product)}
        if self.cofactor is not None:
            d["h"] = format_ascending(self.cofactor)
        d["quotient"] = None if self.quotient is None else format_ascending(self.quotient)
        return d


@dataclass(frozen=True)
class DualContainCertificate:
    route: str  # "coprime" or "divides", for the F_q block
    f_check: BlockCheck
    g1_check: BlockCheck
    g2_check: BlockCheck

    @property
    def valid(self) -> bool:
        return self.f_check.ok and self.g1_check.ok and self.g2_check.ok

    def witnesses_verify(self) -> bool:
        return all(c.verify() for c in (self.f_check, self.g1_check, self.g2_check))

    def to_dict(self) -> dict:
        return {
            "dual_containing": self.valid,
            "route": self.route,
            "witnesses": {
                "f": self.f_check.to_dict(),
                "g1": self.g1_check.to_dict(),
                "g2": self.g2_check.to_dict(),
            },
        }


def _divides_check(g: SkewPoly, n: int) -> BlockCheck:
    """h^dagger h right-divisible by x^n - 1, where x^n - 1 = h g."""
    try:
        h = right_cofactor(g, n)
    except SkewPolyError as exc:
        raise CertificateError(str(exc)) from exc
    prod = dagger(h) * h
    quo, rem = right_divmod(prod, SkewPoly.xn_minus_one(g.field, n, g.theta_exp))
    ok = rem.is_zero()
    return BlockCheck(ok, h, prod, quo if ok else None, n)


def _coprime_check(f: SkewPoly, n: int) -> BlockCheck:
    """f f^* divides x^n - 1 in the commutative polynomial ring."""
    f = f.with_theta(0)
    xn = SkewPoly.xn_minus_one(f.field, n, 0)
    if not right_divmod(xn, f)[1].is_zero():
        raise CertificateError(f"{f} does not divide x^{n} - 1")
    prod = f * reciprocal(f)
    quo, rem = right_divmod(xn, prod)
    ok = rem.is_zero()
    return BlockCheck(ok, None, prod, quo if ok else None, n)


def check_dual_containing(spec: CodeSpec) -> DualContainCertificate:
    if not spec.is_separable:
        raise CertificateError("certificates are defined for separable codes")
    order = spec.theta_order
    if spec.beta % order:
        raise CertificateError(f"|theta| = {order} does not divide beta = {spec.beta}")
    if gcd(spec.alpha, order) == 1:
        route, fc = "coprime", _coprime_check(spec.f, spec.alpha)
    elif spec.alpha % order == 0:
        route, fc = "divides", _divides_check(spec.f, spec.alpha)
    else:
        raise CertificateError(
            f"no applicable criterion: gcd(alpha={spec.alpha}, |theta|={order}) is neither 1 nor |theta|"
        )
    return DualContainCertificate(
        route, fc, _divides_check(spec.g1, spec.beta), _divides_check(spec.g2, spec.beta)
    )


# -- quantum parameters ------------------------------------------------------------

@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int
    source: dict = dc_field(default_factory=dict, compare=False, hash=False)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "q": self.q, "source": self.source}


def css_params(n: int, k: int, d: int, q: int, source: dict | None = None) -> QuantumParams:
    """[[n, 2k - n, d]]_q from a dual-containing [n, k, d]_q code."""
    if n < 1 or d < 1 or not 0 <= k <= n:
        raise QuantumError(f"invalid classical parameters [{n},{k},{d}]")
    if 2 * k < n:
        raise QuantumError(f"2k = {2 * k} < n = {n}: a code this small cannot contain its dual")
    return QuantumParams(n, 2 * k - n, d, q, dict(source or {}))


def compare_codes(a: QuantumParams, b: QuantumParams) -> str:
    """``better``, ``worse``, ``equal`` or ``incomparable`` (exact rational rates)."""
    if a.q != b.q:
        raise QuantumError(f"cannot compare codes over F_{a.q} and F_{b.q}")
    ra, rb = a.rate, b.rate
    if a.d == b.d and ra == rb:
        return "equal"
    if (a.d > b.d and ra >= rb) or (ra > rb and a.d >= b.d):
        return "better"
    if (b.d > a.d and rb >= ra) or (rb > ra and b.d >= a.d):
        return "worse"
    return "incomparable"


def singleton_defect(p: QuantumParams) -> int:
    defect = p.n + 2 - p.k - 2 * p.d
    if defect < 0:
        raise QuantumError(f"{p} violates the quantum Singleton bound")
    return defect


@lru_cache(maxsize=None)
def _reference_rows() -> tuple[dict, ...]:
    text = resources.files("skewcode").joinpath("data/reference_codes.json").read_text()
    return tuple(json.loads(text)["codes"])


def reference_codes() -> list[QuantumParams]:
    """Previously known quantum codes used as comparison baselines."""
    return [QuantumParams(r["n"], r["k"], r["d"], r["q"], {"reference": True}) for r in _reference_rows()]


def reference_for(q: int, n: int, d: int) -> QuantumParams | None:
    """Baseline registered for a code with parameters (q, n, d), if any."""
    for r in _reference_rows():
        key = r["key"]
        if (key["q"], key["n"], key["d"]) == (q, n, d):
            return QuantumParams(r["n"], r["k"], r["d"], r["q"], {"reference": True})
    return None


def quantum_report(spec: CodeSpec, cert: DualContainCertificate, n: int, k: int, d: int) -> dict:
    out = {"n": n, "k": 2 * k - n, "d": d, "q": spec.field.q, "classical": {"n": n, "k": k, "d": d}}
    out.update(cert.to_dict())
    return out


__all__ = [
    "BlockCheck",
    "CertificateError",
    "DualContainCertificate",
    "QuantumError",
    "QuantumParams",
    "check_dual_containing",
    "compare_codes",
    "css_params",
    "quantum_report",
    "reference_codes",
    "reference_for",
    "singleton_defect",
]
