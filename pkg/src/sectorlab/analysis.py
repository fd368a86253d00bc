"""Necessary-condition diagnostics and randomized verification campaigns.

The ratio profile r_n = gamma_n gamma_{n+2} / gamma_{n+1}^2 governs whether a
diagonal multiplier sequence can shrink zero sectors uniformly: applying the
sequence to x^n (x^2 - b x + c) turns the nonzero quadratic factor into
gamma_{n+2} x^2 - gamma_{n+1} b x + gamma_n c, whose roots depend on the
original ones only through r_n.  Keeping the transformed pair no wider than
the original forces r_n < 1 with limsup r_n < 1; profiles whose tail climbs
to 1 therefore rule a family out.

Campaigns draw seeded random polynomials with zeros in a sector, push them
through an operator, re-measure with the root solver, and report the worst
margin observed together with a replayable counterexample certificate when a
margin crosses the violation tolerance.  Each trial derives its RNG stream
from (seed, trial index), so reports are byte-identical across reruns.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import (DegenerateLeadingError, DegenerateSequenceError,
                     NonConvergenceError, NotInRightHalfPlaneError,
                     SectorLabError, SignFlipError, ZeroInteriorTermError)
from .geometry import (in_disc, jensen_sector_disc, min_enclosing_double_sector,
                       min_enclosing_sector, min_enclosing_strip)
from .operators import (BlendParams, CosineStepSequence, ExplicitSequence,
                        ExpPowerSequence, GaussSequence, MultiplierSequence,
                        apply_sequence, cosine_affine_transform,
                        exp_poly_principal_zeros, predicted_sector_after_cosine_step,
                        predicted_sector_after_gauss, predicted_strip_after_gauss,
                        rotation_blend)
from .poly import RealPolynomial, SectorRootSpec, from_sector_roots
from .roots import find_roots

__all__ = [
    "RnProfile",
    "rn_profile",
    "three_term_transformed_roots",
    "jsd_bracket",
    "jsd_modulus_identity_check",
    "double_sector_demo",
    "PolyGenSpec",
    "draw_sector_spec",
    "Counterexample",
    "VerificationReport",
    "verify_theorem",
    "search_counterexample",
    "THEOREM_IDS",
]

THEOREM_IDS = ("jsd", "zsro", "cosak", "lms2", "period-strip", "roms")

# violation tolerance per campaign, in the margin units documented below
_MARGIN_TOL = {
    "jsd": 1e-8,
    "jsd-sharpness": 1e-8,
    "zsro": 1e-7,
    "cosak": 1e-7,
    "lms2": 0.0,
    "period-strip": 1e-7,
    "roms": 1e-7,
    "search": 1e-7,
}


@dataclass(frozen=True)
class RnProfile:
    """Window of r_n values with a coarse tail classification."""

    values: tuple
    window: int
    min_value: float
    max_value: float
    tail_trend: str

    def necessary_condition(self) -> str:
        """'fails-necessary-condition' when some r_n reaches 1 or the tail
        climbs toward it; 'inconclusive' otherwise."""
        if self.max_value >= 1.0 - 1e-12:
            return "fails-necessary-condition"
        if self.tail_trend == "increasing-toward-1":
            return "fails-necessary-condition"
        return "inconclusive"


def _classify_tail(values) -> str:
    spread = max(values) - min(values)
    vscale = max(1.0, max(abs(v) for v in values))
    if spread <= 1e-10 * vscale:
        mean = sum(values) / len(values)
        return "constant" if mean > 1.0 - 1e-6 else "bounded-away"
    tail = values[len(values) - len(values) // 2:]
    diffs = [tail[i + 1] - tail[i] for i in range(len(tail) - 1)]
    nondecreasing = all(d >= -1e-14 * vscale for d in diffs)
    below_one = tail[-1] < 1.0 + 1e-12 and tail[0] < 1.0
    gap_shrinks = below_one and (1.0 - tail[-1]) < 0.95 * (1.0 - tail[0])
    if nondecreasing and gap_shrinks:
        return "increasing-toward-1"
    if max(tail) <= 1.0 - 1e-3:
        return "bounded-away"
    return "other"


def rn_profile(ms: MultiplierSequence, window: int) -> RnProfile:
    """r_n = gamma_n gamma_{n+2} / gamma_{n+1}^2 for n = 0 .. window-1."""
    if window < 3:
        raise SectorLabError(f"window must be >= 3, got {window!r}")
    gamma = ms.terms(window + 1)
    if np.any(gamma[1:window + 1] == 0.0):
        raise ZeroInteriorTermError(
            "an interior gamma vanishes; r_n is undefined there")
    values = tuple(float(gamma[n] * gamma[n + 2] / gamma[n + 1] ** 2)
                   for n in range(window))
    return RnProfile(values, window, min(values), max(values),
                     _classify_tail(values))


def three_term_transformed_roots(n: int, b: float, c: float,
                                 ms: MultiplierSequence):
    """Nonzero roots of T[x^{n+2} - b x^{n+1} + c x^n] plus the ratio r_n.

    The transformed trinomial divided by x^n is the quadratic
    gamma_{n+2} x^2 - gamma_{n+1} b x + gamma_n c, solved here by the
    quadratic formula (note the leading 1/gamma_{n+2}).
    """
    if n < 0:
        raise SectorLabError(f"n must be >= 0, got {n!r}")
    if not (b > 0.0):
        raise SectorLabError(f"b must be positive, got {b!r}")
    g0, g1, g2 = ms.term(n), ms.term(n + 1), ms.term(n + 2)
    if g2 == 0.0:
        raise DegenerateLeadingError(
            f"gamma_{n + 2} = 0 leaves no quadratic factor")
    if g1 == 0.0:
        raise ZeroInteriorTermError(f"gamma_{n + 1} = 0 makes r_n undefined")
    rn = g0 * g2 / (g1 * g1)
    A, B, C = g2, -g1 * b, g0 * c
    disc = B * B - 4.0 * A * C
    if disc >= 0.0:
        s = math.sqrt(disc)
        t = -0.5 * (B + math.copysign(s, B)) if B != 0.0 else 0.5 * s
        if t == 0.0:
            r1 = r2 = 0.0 + 0.0j
        else:
            r1, r2 = complex(t / A), complex(C / t)
    else:
        s = math.sqrt(-disc)
        r1 = complex(-B / (2.0 * A), s / (2.0 * A))
        r2 = r1.conjugate()
    pair = sorted((r1, r2), key=lambda z: (z.real, z.imag))
    return (pair[0], pair[1]), float(rn)


def jsd_modulus_identity_check(a: float, b: float, alpha: float,
                               z: complex) -> float:
    """Residual of the modulus identity behind the sector-disc containment.

    With z = x + iy the difference of squared moduli

        |(e^{i alpha} z - a)^2 + b^2|^2 - |(e^{-i alpha} z - a)^2 + b^2|^2

    equals 8 y sin(alpha) [a (a^2+b^2+x^2+y^2) - 2 x (a^2+b^2) cos(alpha)],
    and the sign of the bracket decides disc membership.  Both sides are
    evaluated in extended precision; the return value is
    |lhs - rhs| / max(1, |lhs|, |rhs|).
    """
    ld = np.longdouble
    aL, bL, alL = ld(a), ld(b), ld(alpha)
    x, y = ld(complex(z).real), ld(complex(z).imag)
    zc = np.clongdouble(complex(z))
    rot = np.clongdouble(np.cos(alL)) + np.clongdouble(1j) * np.clongdouble(np.sin(alL))
    w1 = (rot * zc - aL) ** 2 + bL * bL
    w2 = (np.conj(rot) * zc - aL) ** 2 + bL * bL
    lhs = (w1 * np.conj(w1)).real - (w2 * np.conj(w2)).real
    mod2 = aL * aL + bL * bL
    rhs = (8.0 * y * np.sin(alL)
           * (aL * (mod2 + x * x + y * y) - 2.0 * x * mod2 * np.cos(alL)))
    return float(abs(lhs - rhs) / max(ld(1.0), abs(lhs), abs(rhs)))


def jsd_bracket(a: float, b: float, alpha: float, z: complex) -> float:
    """The sign-carrying factor 8 y sin(alpha) [...] from the identity above."""
    x, y = complex(z).real, complex(z).imag
    mod2 = a * a + b * b
    return (8.0 * y * math.sin(alpha)
            * (a * (mod2 + x * x + y * y) - 2.0 * x * mod2 * math.cos(alpha)))


def double_sector_demo(ms: MultiplierSequence):
    """Fold angle of 4 + z^4 before and after the diagonal action.

    Only gamma_0 and gamma_4 survive, so the transformed zeros are the fourth
    roots of -4 gamma_0 / gamma_4: the fold angle stays exactly pi/4 for any
    admissible sequence.  Returns (before, after) as measured by the solver.
    """
    g0, g4 = ms.term(0), ms.term(4)
    if g0 == 0.0 or g4 == 0.0:
        raise SignFlipError(f"endpoint terms must be nonzero, got "
                            f"gamma_0={g0!r}, gamma_4={g4!r}")
    if (g0 > 0.0) != (g4 > 0.0):
        raise SignFlipError(f"endpoint terms differ in sign: "
                            f"gamma_0={g0!r}, gamma_4={g4!r}")
    base = RealPolynomial([4.0, 0.0, 0.0, 0.0, 1.0])
    before = min_enclosing_double_sector(find_roots(base))
    image = RealPolynomial([4.0 * g0, 0.0, 0.0, 0.0, g4])
    after = min_enclosing_double_sector(find_roots(image))
    return before, after


@dataclass(frozen=True)
class PolyGenSpec:
    """Recipe for seeded random polynomials with zeros in a sector.

    Per trial: degree uniform in [deg_lo, deg_hi]; a fresh sector angle
    uniform in [0, theta]; real roots uniform in [mag_lo, mag_hi]; conjugate
    pairs with argument uniform in (0, theta_trial] and log-uniform modulus.
    ``real_fraction`` sets the share of the degree spent on real roots.
    """

    deg_lo: int = 1
    deg_hi: int = 16
    theta: float = 0.785398
    mag_lo: float = 0.1
    mag_hi: float = 10.0
    real_fraction: float = 0.35
    seed: int = 0

    def __post_init__(self):
        if not (1 <= self.deg_lo <= self.deg_hi):
            raise SectorLabError("need 1 <= deg_lo <= deg_hi")
        if not (0.0 <= self.theta < math.pi / 2.0):
            raise SectorLabError("theta must lie in [0, pi/2)")
        if not (0.0 < self.mag_lo <= self.mag_hi):
            raise SectorLabError("need 0 < mag_lo <= mag_hi")
        if not (0.0 <= self.real_fraction <= 1.0):
            raise SectorLabError("real_fraction must lie in [0, 1]")


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, trial])


def draw_sector_spec(gen: PolyGenSpec, rng: np.random.Generator) -> SectorRootSpec:
    """One random root specification under ``gen``."""
    degree = int(rng.integers(gen.deg_lo, gen.deg_hi + 1))
    theta_t = rng.uniform(0.0, gen.theta) if gen.theta > 0.0 else 0.0
    n_real = int(round(gen.real_fraction * degree))
    if theta_t == 0.0:
        n_real = degree
    n_pairs = (degree - n_real) // 2
    n_real = degree - 2 * n_pairs
    reals = [float(rng.uniform(gen.mag_lo, gen.mag_hi)) for _ in range(n_real)]
    pairs = []
    for _ in range(n_pairs):
        phi = float(rng.uniform(0.0, theta_t))
        if phi == 0.0:
            phi = 0.5 * theta_t
        mag = math.exp(float(rng.uniform(math.log(gen.mag_lo),
                                         math.log(gen.mag_hi))))
        pairs.append((mag * math.cos(phi), mag * math.sin(phi)))
    return SectorRootSpec(tuple(reals), tuple(pairs))


@dataclass(frozen=True)
class Counterexample:
    trial_index: int
    coeffs: tuple
    operator: str
    offending_zero: complex
    margin: float
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "trial_index": self.trial_index,
            "coeffs": list(self.coeffs),
            "operator": self.operator,
            "offending_zero": [self.offending_zero.real,
                               self.offending_zero.imag],
            "margin": self.margin,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    trials: int
    seed: int
    worst_margin: float | None
    counterexample: Counterexample | None
    params: dict
    skipped: int = 0
    elapsed: float = 0.0

    def found_counterexample(self) -> bool:
        return self.counterexample is not None

    def to_json_dict(self) -> dict:
        # elapsed stays out: serialized reports must be run-to-run identical
        return {
            "theorem_id": self.theorem_id,
            "trials": self.trials,
            "seed": self.seed,
            "worst_margin": self.worst_margin,
            "counterexample": (None if self.counterexample is None
                               else self.counterexample.to_json_dict()),
            "params": self.params,
            "skipped": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"


def _uniform(rng, lo: float, hi: float, fixed) -> float:
    return float(fixed) if fixed is not None else float(rng.uniform(lo, hi))


# computed zeros within this relative band of the axis are adjudicated real
_REAL_BAND = 1e-9


def _blend_coeffs_longdouble(p, alpha: float, lam: float, beta: float,
                             template: np.ndarray) -> np.ndarray:
    """Blend coefficients in extended precision, shaped like ``template``.

    Entries the double-precision blend snapped to exact zero stay zero here,
    and the array is truncated to the degree actually solved.
    """
    k = np.arange(p.coeffs.size, dtype=np.longdouble)
    i1 = np.clongdouble(1j)
    w = (np.exp(i1 * (np.longdouble(lam) + k * np.longdouble(alpha)))
         + np.exp(i1 * (np.longdouble(beta) - k * np.longdouble(alpha))))
    out = np.asarray(p.coeffs, dtype=np.clongdouble) * w
    out = out[: template.size]
    out[template == 0] = 0
    return out


def _newton_longdouble(coeffs: np.ndarray, zs, steps: int = 4) -> np.ndarray:
    """A few Newton steps on simple zeros against clongdouble coefficients."""
    c = np.asarray(coeffs, dtype=np.clongdouble)
    d = c[1:] * np.arange(1, c.size, dtype=np.clongdouble)
    w = np.asarray(zs, dtype=np.clongdouble)
    for _ in range(steps):
        pv = np.zeros_like(w)
        for ck in c[::-1]:
            pv = pv * w + ck
        dv = np.zeros_like(w)
        for ck in d[::-1]:
            dv = dv * w + ck
        stuck = dv == 0
        dv[stuck] = 1.0
        w = np.where(stuck, w, w - pv / dv)
    return w


def _adjudicated_blend_zeros(p, f, alpha: float, lam: float, beta: float):
    """Solve the blend and return zero locations with realness resolved.

    Double rounding of the blend coefficients can displace a crowded real
    zero off the axis by more than the containment inflation, so simple
    zeros are re-polished against extended-precision coefficients before
    their imaginary parts are trusted.
    """
    zeros = find_roots(f)
    locs = [e.location for e in zeros.zeros]
    simple = [i for i, e in enumerate(zeros.zeros)
              if e.multiplicity == 1 and e.location.imag != 0.0]
    if simple:
        cl = _blend_coeffs_longdouble(p, alpha, lam, beta, f.coeffs)
        polished = _newton_longdouble(cl, [locs[i] for i in simple])
        for i, w in zip(simple, polished):
            locs[i] = complex(w)
    return locs


def _trial_jsd(gen, params, rng, quadratic: bool):
    """Containment (or boundary sharpness) of blend zeros in sector discs.

    Margin units: signed disc slack (r - |z - c|), normalized by max(1, |z|);
    in sharpness mode, -| |z-c| - r | / r.
    """
    if quadratic:
        theta_t = rng.uniform(0.05, 1.4)
        mag = math.exp(rng.uniform(math.log(0.3), math.log(3.0)))
        phi = rng.uniform(0.05, theta_t) if theta_t > 0.05 else theta_t
        spec = SectorRootSpec((), ((mag * math.cos(phi), mag * math.sin(phi)),))
    else:
        spec = draw_sector_spec(gen, rng)
        if spec.degree == 0:
            return None, None
    alpha = _uniform(rng, 0.0, math.pi, params.get("alpha"))
    if quadratic:
        # resample until the single disc is nonempty, as sharpness needs one
        a, b = spec.pairs[0]
        for _ in range(256):
            if not jensen_sector_disc(a, b, alpha).empty:
                break
            alpha = float(rng.uniform(0.0, math.pi))
        else:
            return None, None
    lam = _uniform(rng, -math.pi, math.pi, params.get("lam"))
    beta = _uniform(rng, -math.pi, math.pi, params.get("beta"))
    p = from_sector_roots(spec)
    f = rotation_blend(p, BlendParams(alpha, lam, beta))
    if f.degree == 0:
        return None, None
    locs = _adjudicated_blend_zeros(p, f, alpha, lam, beta)
    discs = [jensen_sector_disc(a, b, alpha) for a, b in spec.pairs]
    live = [d for d in discs if not d.empty]
    worst = None
    worst_zero = None
    for z in locs:
        if abs(z.imag) <= _REAL_BAND * max(1.0, abs(z)):
            continue
        if quadratic:
            d = live[0]
            margin = -abs(abs(z - d.center) - d.radius) / d.radius
        elif live:
            margin = max((d.radius - abs(z - d.center)) / max(1.0, abs(z))
                         for d in live)
        else:
            margin = -abs(z.imag) / max(1.0, abs(z))
        if worst is None or margin < worst:
            worst, worst_zero = margin, z
    if worst is None:
        return None, None
    detail = (f"blend alpha={alpha!r} lambda={lam!r} beta={beta!r}")
    return worst, (tuple(p.coeffs.tolist()), detail, worst_zero)


def _trial_zsro(gen, params, rng):
    """Sector growth check for the gauss family; margin = predicted - measured."""
    spec = draw_sector_spec(gen, rng)
    alpha = _uniform(rng, 0.1, 1.0, params.get("alpha"))
    p = from_sector_roots(spec)
    q = apply_sequence(p, GaussSequence(alpha))
    predicted = predicted_sector_after_gauss(spec.max_angle(), alpha)
    try:
        measured = min_enclosing_sector(find_roots(q))
    except NotInRightHalfPlaneError as exc:
        return -math.pi, (tuple(p.coeffs.tolist()),
                          f"gauss:alpha={alpha!r}", exc.offender)
    return (predicted - measured,
            (tuple(p.coeffs.tolist()), f"gauss:alpha={alpha!r}", None))


def _trial_cosak(gen, params, rng):
    """Single cosine-step application; margin = predicted - measured."""
    spec = draw_sector_spec(gen, rng)
    p = from_sector_roots(spec)
    alpha = _uniform(rng, 0.05, math.pi / 2.0 - 0.05, params.get("alpha"))
    big_n = params.get("N")
    if big_n is None:
        big_n = int(math.floor(alpha * max(p.degree, 1) / (0.98 * math.pi / 2.0))) + 1
    ms = CosineStepSequence(alpha, int(big_n))
    q = apply_sequence(p, ms)
    predicted = predicted_sector_after_cosine_step(spec.max_angle(), alpha,
                                                   int(big_n))
    try:
        measured = min_enclosing_sector(find_roots(q))
    except NotInRightHalfPlaneError as exc:
        return -math.pi, (tuple(p.coeffs.tolist()), ms.spec_string(), exc.offender)
    return predicted - measured, (tuple(p.coeffs.tolist()), ms.spec_string(), None)


def _trial_lms2(gen, params, rng):
    """All-real preservation by cos(lambda + k theta); margin = -|Im z|/max(1,|z|)."""
    spec = draw_sector_spec(gen, rng)
    p = from_sector_roots(spec)
    lam = _uniform(rng, -math.pi, math.pi, params.get("lam"))
    theta = _uniform(rng, -math.pi, math.pi, params.get("mult_theta"))
    try:
        q = cosine_affine_transform(p, lam, theta)
    except DegenerateSequenceError:
        return None, None
    zeros = find_roots(q)
    worst = 0.0
    worst_zero = None
    for e in zeros.zeros:
        margin = -abs(e.location.imag) / max(1.0, abs(e.location))
        if margin < worst:
            worst, worst_zero = margin, e.location
    detail = f"cosaffine:lambda={lam!r},theta={theta!r}"
    return worst, (tuple(p.coeffs.tolist()), detail, worst_zero)


def _trial_period_strip(gen, params, rng):
    """Strip bound for principal zeros of the exponential sum; margin =
    predicted - measured."""
    spec = draw_sector_spec(gen, rng)
    alpha = _uniform(rng, 0.1, 1.0, params.get("alpha"))
    p = from_sector_roots(spec)
    q = apply_sequence(p, GaussSequence(alpha))
    predicted = predicted_strip_after_gauss(spec.max_angle(), alpha)
    logs = exp_poly_principal_zeros(q)
    measured = min_enclosing_strip(logs)
    return (predicted - measured,
            (tuple(p.coeffs.tolist()), f"gauss:alpha={alpha!r}", None))


def _trial_roms(gen, params, rng, ms: MultiplierSequence):
    """T[(1-z)^n] keeps every zero real and positive for admissible T."""
    n = int(rng.integers(max(gen.deg_lo, 2), gen.deg_hi + 1))
    coeffs = [math.comb(n, k) * (-1.0) ** k for k in range(n + 1)]
    p = RealPolynomial(coeffs)
    q = apply_sequence(p, ms)
    zeros = find_roots(q)
    worst = math.inf
    worst_zero = None
    for e in zeros.zeros:
        z = e.location
        margin = -abs(z.imag) / max(1.0, abs(z))
        if z.imag == 0.0:
            margin = min(margin, z.real / max(1.0, abs(z.real)))
        if margin < worst:
            worst, worst_zero = margin, z
    return worst, (tuple(p.coeffs.tolist()), ms.spec_string(), worst_zero)


def verify_theorem(theorem_id: str, gen: PolyGenSpec, params: dict | None = None,
                   trials: int = 200) -> VerificationReport:
    """Run a seeded campaign; negative worst margins below the campaign
    tolerance yield a counterexample certificate."""
    params = dict(params or {})
    quadratic = bool(params.pop("quadratic", False))
    key = "jsd-sharpness" if (theorem_id == "jsd" and quadratic) else theorem_id
    if theorem_id not in THEOREM_IDS:
        raise SectorLabError(f"unknown theorem id {theorem_id!r}; "
                             f"expected one of {THEOREM_IDS}")
    tol = params.pop("tolerance_override", None)
    if tol is None:
        tol = _MARGIN_TOL[key]
    ms = params.pop("sequence", None)
    if theorem_id == "roms":
        ms = ms or GaussSequence(params.get("alpha", 0.5))

    start = time.perf_counter()
    worst = None
    cex = None
    skipped = 0
    for t in range(trials):
        rng = _trial_rng(gen.seed, t)
        try:
            if theorem_id == "jsd":
                margin, info = _trial_jsd(gen, params, rng, quadratic)
            elif theorem_id == "zsro":
                margin, info = _trial_zsro(gen, params, rng)
            elif theorem_id == "cosak":
                margin, info = _trial_cosak(gen, params, rng)
            elif theorem_id == "lms2":
                margin, info = _trial_lms2(gen, params, rng)
            elif theorem_id == "period-strip":
                margin, info = _trial_period_strip(gen, params, rng)
            else:
                margin, info = _trial_roms(gen, params, rng, ms)
        except NonConvergenceError:
            skipped += 1
            continue
        if margin is None:
            skipped += 1
            continue
        if worst is None or margin < worst:
            worst = margin
        if margin < -tol and (cex is None or margin < cex.margin):
            coeffs, op, zero = info
            cex = Counterexample(t, coeffs, op,
                                 zero if zero is not None else 0.0 + 0.0j,
                                 margin, f"margin {margin!r} below -{tol!r}")
    elapsed = time.perf_counter() - start
    report_params = {k: (v.spec_string() if isinstance(v, MultiplierSequence)
                         else v) for k, v in params.items()}
    if quadratic:
        report_params["quadratic"] = True
    if theorem_id == "roms":
        report_params["sequence"] = ms.spec_string()
    report_params["tolerance"] = tol
    report_params["generator"] = {
        "deg_lo": gen.deg_lo, "deg_hi": gen.deg_hi, "theta": gen.theta,
        "mag_lo": gen.mag_lo, "mag_hi": gen.mag_hi,
        "real_fraction": gen.real_fraction,
    }
    return VerificationReport(theorem_id, trials, gen.seed, worst, cex,
                              report_params, skipped, elapsed)


def search_counterexample(ms: MultiplierSequence, gen: PolyGenSpec,
                          trials: int = 200) -> VerificationReport:
    """Hunt for sector growth under a diagonal family with no proven bound.

    Margin per random trial = theta_before - theta_after; a negative value
    means the enclosing sector strictly grew.  For exp-power families with
    p < 2 the report also carries the r_n tail trend and a ladder of
    three-term probes showing the transformed pair angle climbing back
    toward the original as n grows.
    """
    if not isinstance(ms, (ExpPowerSequence, ExplicitSequence)):
        raise SectorLabError(
            "search expects an exppower or explicit sequence")
    tol = _MARGIN_TOL["search"]
    start = time.perf_counter()
    worst = None
    cex = None
    skipped = 0
    for t in range(trials):
        rng = _trial_rng(gen.seed, t)
        spec = draw_sector_spec(gen, rng)
        p = from_sector_roots(spec)
        try:
            q = apply_sequence(p, ms)
            before = spec.max_angle()
            after = max(abs(math.atan2(e.location.imag, e.location.real))
                        for e in find_roots(q).zeros)
        except (NonConvergenceError, DegenerateSequenceError,
                SectorLabError):
            skipped += 1
            continue
        margin = before - after
        if worst is None or margin < worst:
            worst = margin
        if margin < -tol and (cex is None or margin < cex.margin):
            cex = Counterexample(t, tuple(p.coeffs.tolist()), ms.spec_string(),
                                 0.0 + 0.0j, margin,
                                 f"sector grew from {before!r} to {after!r}")
    elapsed = time.perf_counter() - start

    params: dict = {"sequence": ms.spec_string(), "tolerance": tol}
    theta_probe = gen.theta if gen.theta > 0.0 else 0.6
    ladder = []
    b = 2.0 * math.cos(theta_probe)
    for n in range(0, 13):
        try:
            (z1, _), rn = three_term_transformed_roots(n, b, 1.0, ms)
        except SectorLabError:
            continue
        angle_after = abs(math.atan2(z1.imag, z1.real))
        ladder.append({"n": n, "r_n": rn, "angle_after": angle_after})
    params["three_term_probe"] = {
        "theta_before": theta_probe,
        "ladder": ladder,
        "max_angle_after": max((row["angle_after"] for row in ladder),
                               default=None),
    }
    try:
        profile = rn_profile(ms, 12)
        params["rn_tail_trend"] = profile.tail_trend
        params["rn_necessary_condition"] = profile.necessary_condition()
    except SectorLabError:
        pass
    return VerificationReport("search", trials, gen.seed, worst, cex, params,
                              skipped, elapsed)
