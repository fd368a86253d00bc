"""Multiplier sequences, rotation blends, and the sector/strip bounds they obey.

A multiplier sequence acts diagonally on coefficients:
``T[sum c_k z^k] = sum gamma_k c_k z^k``.  The families provided:

    gauss     gamma_k = exp(-alpha^2 k^2 / 2)
    cosstep   gamma_k = cos(alpha k / N), valid while alpha n / N < pi/2
    cosaffine gamma_k = cos(lambda + k theta)
    laguerre  gamma_k = q^(k^2), -1 < q < 1
    exppower  gamma_k = exp(-alpha k^p), alpha > 0, p > 0
    explicit  gamma_k given as a finite list

The rotation blend of a real polynomial p is

    f(z) = e^{i lambda} p(e^{i alpha} z) + e^{i beta} p(e^{-i alpha} z),

whose k-th coefficient is c_k (e^{i(lambda + k alpha)} + e^{i(beta - k alpha)}),
a factor of modulus 2 |cos((lambda - beta)/2 + k alpha)|.  Cosine-multiplied
polynomials are blends in disguise:

    sum cos(lambda + k theta) c_k z^k
        = (1/2) [e^{i lambda} p(e^{i theta} z) + e^{-i lambda} p(e^{-i theta} z)],

an identity this module asserts coefficientwise on every transform.

Trigonometric factors that vanish mathematically come out of the arithmetic
as values around 1e-16, so blend factors and cosine multipliers below a tiny
absolute threshold are snapped to exact zero; degree drop is then visible as
an honest shorter coefficient vector.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (DegenerateSequenceError, DomainError,
                     HypothesisViolationError, InputError, SectorLabError,
                     ZeroOutsideRightHalfPlaneError, ZeroPolynomialResultError)
from .poly import ComplexPolynomial, RealPolynomial
from .roots import SolverConfig, find_roots

__all__ = [
    "MultiplierSequence",
    "GaussSequence",
    "CosineStepSequence",
    "CosineAffineSequence",
    "LaguerreQSequence",
    "ExpPowerSequence",
    "ExplicitSequence",
    "BlendParams",
    "rotation_blend",
    "apply_sequence",
    "cosine_affine_transform",
    "predicted_sector_after_gauss",
    "predicted_sector_after_cosine_step",
    "cosine_power_limit",
    "exp_poly_principal_zeros",
    "predicted_strip_after_gauss",
    "bc_strip_bound",
    "parse_sequence_spec",
]

# |cos| below this is treated as an exact zero of the multiplier
_TRIG_SNAP = 5e-14


def _snap_trig(value: float) -> float:
    return 0.0 if abs(value) <= _TRIG_SNAP else value


class MultiplierSequence:
    """Base for diagonal coefficient multipliers; subclasses define term(k)."""

    #: True for families whose terms are cosines and may be snapped to zero
    trig = False

    def term(self, k: int) -> float:
        raise NotImplementedError

    def terms(self, n: int) -> np.ndarray:
        """gamma_0 .. gamma_n as a float array."""
        return np.array([self.term(k) for k in range(n + 1)], dtype=np.float64)

    def spec_string(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class GaussSequence(MultiplierSequence):
    alpha: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise SectorLabError(f"gauss needs alpha > 0, got {self.alpha!r}")

    def term(self, k: int) -> float:
        return math.exp(-0.5 * self.alpha * self.alpha * k * k)

    def spec_string(self) -> str:
        return f"gauss:alpha={self.alpha!r}"


@dataclass(frozen=True)
class CosineStepSequence(MultiplierSequence):
    """gamma_k = cos(alpha k / N); usable on degree n only while alpha n / N < pi/2."""

    alpha: float
    N: int
    trig = True

    def __post_init__(self):
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise SectorLabError(f"cosstep needs alpha > 0, got {self.alpha!r}")
        if not (isinstance(self.N, int) and self.N >= 1):
            raise SectorLabError(f"cosstep needs integer N >= 1, got {self.N!r}")

    def term(self, k: int) -> float:
        return math.cos(self.alpha * k / self.N)

    def check_degree(self, degree: int) -> None:
        if self.alpha * degree / self.N >= math.pi / 2.0:
            raise HypothesisViolationError(
                f"cosstep requires alpha*n/N < pi/2; "
                f"{self.alpha!r}*{degree}/{self.N} = "
                f"{self.alpha * degree / self.N!r} is not")

    def spec_string(self) -> str:
        return f"cosstep:alpha={self.alpha!r},N={self.N}"


@dataclass(frozen=True)
class CosineAffineSequence(MultiplierSequence):
    lam: float
    theta: float
    trig = True

    def term(self, k: int) -> float:
        return math.cos(self.lam + k * self.theta)

    def spec_string(self) -> str:
        return f"cosaffine:lambda={self.lam!r},theta={self.theta!r}"


@dataclass(frozen=True)
class LaguerreQSequence(MultiplierSequence):
    q: float

    def __post_init__(self):
        if not (-1.0 < self.q < 1.0):
            raise SectorLabError(f"laguerre needs -1 < q < 1, got {self.q!r}")

    def term(self, k: int) -> float:
        return float(self.q ** (k * k))

    def spec_string(self) -> str:
        return f"laguerre:q={self.q!r}"


@dataclass(frozen=True)
class ExpPowerSequence(MultiplierSequence):
    alpha: float
    p: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.p > 0.0):
            raise SectorLabError(
                f"exppower needs alpha > 0 and p > 0, got "
                f"({self.alpha!r}, {self.p!r})")

    def term(self, k: int) -> float:
        return math.exp(-self.alpha * float(k) ** self.p)

    def spec_string(self) -> str:
        return f"exppower:alpha={self.alpha!r},p={self.p!r}"


class ExplicitSequence(MultiplierSequence):
    """Finite list of multipliers; using terms beyond the list is an error."""

    def __init__(self, values):
        self.values = tuple(float(v) for v in values)
        if not self.values:
            raise SectorLabError("explicit sequence needs at least one value")

    def term(self, k: int) -> float:
        if k >= len(self.values):
            raise HypothesisViolationError(
                f"explicit sequence of length {len(self.values)} has no term {k}")
        return self.values[k]

    def spec_string(self) -> str:
        return "explicit:" + ",".join(f"{v!r}" for v in self.values)

    def __repr__(self):
        return f"ExplicitSequence({list(self.values)!r})"

    def __eq__(self, other):
        return isinstance(other, ExplicitSequence) and self.values == other.values


@dataclass(frozen=True)
class BlendParams:
    alpha: float
    lam: float
    beta: float


def rotation_blend(p: RealPolynomial, bp: BlendParams) -> ComplexPolynomial:
    """e^{i lam} p(e^{i alpha} z) + e^{i beta} p(e^{-i alpha} z).

    Blend factors of modulus <= 1e-13 are taken as exact zeros, so the result
    degree drops when the leading factor vanishes; an all-zero result raises.
    """
    k = np.arange(p.coeffs.size)
    w = (np.exp(1j * (bp.lam + k * bp.alpha))
         + np.exp(1j * (bp.beta - k * bp.alpha)))
    w[np.abs(w) <= 2.0 * _TRIG_SNAP] = 0.0
    out = p.coeffs.astype(np.complex128) * w
    if not np.any(out):
        raise ZeroPolynomialResultError(
            "every blend coefficient vanished (beta - lambda = pi mod 2 pi "
            "combined with the rotation angle)")
    return ComplexPolynomial(out)


def _sequence_values(ms: MultiplierSequence, degree: int) -> np.ndarray:
    gamma = ms.terms(degree)
    if ms.trig:
        gamma = np.array([_snap_trig(v) for v in gamma])
    return gamma


def apply_sequence(p: RealPolynomial, ms: MultiplierSequence) -> RealPolynomial:
    """Diagonal action c_k -> gamma_k c_k; checks family hypotheses first."""
    if isinstance(ms, CosineStepSequence):
        ms.check_degree(p.degree)
    gamma = _sequence_values(ms, p.degree)
    out = p.coeffs * gamma
    if not np.any(out):
        raise DegenerateSequenceError(
            f"{ms.spec_string()} annihilated every coefficient")
    return RealPolynomial(out)


def cosine_affine_transform(p: RealPolynomial, lam: float,
                            theta: float) -> RealPolynomial:
    """c_k -> cos(lam + k theta) c_k, asserted against the equivalent blend."""
    q = apply_sequence(p, CosineAffineSequence(lam, theta))
    blend = rotation_blend(p, BlendParams(alpha=theta, lam=lam, beta=-lam))
    half = 0.5 * blend.coeffs
    tol = 1e-12 * max(1.0, p.scale())
    n = min(q.coeffs.size, half.size)
    diff = np.abs(q.coeffs[:n] - half[:n])
    extra = max(np.max(np.abs(q.coeffs[n:])) if q.coeffs.size > n else 0.0,
                np.max(np.abs(half[n:])) if half.size > n else 0.0)
    if np.max(diff) > tol or extra > tol:
        raise SectorLabError(
            "cosine transform disagrees with its defining rotation blend")
    return q


def predicted_sector_after_gauss(theta: float, alpha: float) -> float:
    """arccos(min(1, e^{alpha^2/2} cos theta)); shrinks S(theta), sharp on quadratics."""
    if not (0.0 <= theta < math.pi / 2.0):
        raise DomainError(f"theta must lie in [0, pi/2), got {theta!r}")
    if not (alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return math.acos(min(1.0, math.exp(0.5 * alpha * alpha) * math.cos(theta)))


def predicted_sector_after_cosine_step(theta: float, alpha: float,
                                       N: int) -> float:
    """arccos(min(1, cos theta sec(alpha/N))) for a single cosstep application."""
    if not (0.0 <= theta < math.pi / 2.0):
        raise DomainError(f"theta must lie in [0, pi/2), got {theta!r}")
    if not (0.0 < alpha < math.pi / 2.0):
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N!r}")
    return math.acos(min(1.0, math.cos(theta) / math.cos(alpha / N)))


def cosine_power_limit(alpha: float, N: int) -> float:
    """[cos(alpha/N)]^(N^2), which approaches e^{-alpha^2/2} as N grows."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N!r}")
    if abs(alpha) / N >= math.pi / 2.0:
        raise DomainError(f"|alpha|/N must be below pi/2, got {abs(alpha) / N!r}")
    return math.cos(alpha / N) ** (N * N)


def exp_poly_principal_zeros(p: RealPolynomial,
                             config: SolverConfig | None = None) -> list:
    """Principal logarithms of the zeros of p.

    The exponential sum ``sum c_k e^{kz}`` vanishes exactly at the logarithms
    of the zeros of ``sum c_k w^k``; restricting to zeros strictly inside the
    right half-plane keeps every principal logarithm in |Im| < pi/2.
    """
    if p.coeffs[0] == 0.0:
        raise ZeroOutsideRightHalfPlaneError(
            "p(0) = 0 puts a zero at the origin, which has no logarithm",
            offender=0.0 + 0.0j)
    zs = find_roots(p, config)
    logs = []
    for e in zs.zeros:
        z = e.location
        if z.real <= 0.0:
            raise ZeroOutsideRightHalfPlaneError(
                f"zero {z} is not strictly inside the right half-plane",
                offender=z)
        logs.append(cmath.log(z))
    return logs


def predicted_strip_after_gauss(half_width: float, alpha: float) -> float:
    """arccos(min(1, e^{alpha^2/2} cos A)) for principal-zero strips."""
    if not (0.0 <= half_width < math.pi / 2.0):
        raise DomainError(f"strip half-width must lie in [0, pi/2), got {half_width!r}")
    if not (alpha > 0.0):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return math.acos(min(1.0, math.exp(0.5 * alpha * alpha) * math.cos(half_width)))


def bc_strip_bound(half_width: float, alpha: float) -> float:
    """Comparison strip width sqrt(max(A^2 - alpha^2, 0))."""
    if half_width < 0.0:
        raise DomainError(f"strip half-width must be >= 0, got {half_width!r}")
    return math.sqrt(max(half_width * half_width - alpha * alpha, 0.0))


_FAMILY_KEYS = {
    "gauss": ("alpha",),
    "cosstep": ("alpha", "N"),
    "cosaffine": ("lambda", "theta"),
    "laguerre": ("q",),
    "exppower": ("alpha", "p"),
}


def parse_sequence_spec(spec: str) -> MultiplierSequence:
    """Parse operator strings like ``gauss:alpha=0.5`` or ``explicit:1,0.5``."""
    if ":" not in spec:
        raise InputError(f"operator spec {spec!r} needs the form family:args")
    family, _, body = spec.partition(":")
    family = family.strip().lower()
    if family == "explicit":
        try:
            values = [float(v) for v in body.split(",") if v.strip() != ""]
        except ValueError as exc:
            raise InputError(f"bad explicit values in {spec!r}") from exc
        if not values:
            raise InputError(f"explicit spec {spec!r} lists no values")
        return ExplicitSequence(values)
    if family not in _FAMILY_KEYS:
        raise InputError(f"unknown operator family {family!r}")
    kv = {}
    for part in body.split(","):
        if part.strip() == "":
            continue
        key, eq, val = part.partition("=")
        if not eq:
            raise InputError(f"expected key=value, got {part!r} in {spec!r}")
        kv[key.strip()] = val.strip()
    expected = _FAMILY_KEYS[family]
    if set(kv) != set(expected):
        raise InputError(
            f"{family} takes exactly {', '.join(expected)}; got {sorted(kv)}")
    try:
        if family == "gauss":
            return GaussSequence(alpha=float(kv["alpha"]))
        if family == "cosstep":
            return CosineStepSequence(alpha=float(kv["alpha"]), N=int(kv["N"]))
        if family == "cosaffine":
            return CosineAffineSequence(lam=float(kv["lambda"]),
                                        theta=float(kv["theta"]))
        if family == "laguerre":
            return LaguerreQSequence(q=float(kv["q"]))
        return ExpPowerSequence(alpha=float(kv["alpha"]), p=float(kv["p"]))
    except (ValueError, SectorLabError) as exc:
        raise InputError(f"bad parameters in {spec!r}: {exc}") from exc
