"""Geodesics on the n-sphere and on the hyperboloid model of hyperbolic space.

Both use the same interpolation rule

    q(x, t, y) = f(w (1 - t)) / f(w) * x + f(w t) / f(w) * y,   w = theta(x, y),

for a pair ``(f, g)`` from the family ``f(a) = (e^{ca} - e^{-ca}) / 2c``,
``g(a) = (e^{ca} + e^{-ca}) / 2`` with ``c**2`` in ``{-1, 0, +1}``. On the sphere
``f = sin`` vanishes at ``pi``; antipodal endpoints then need an even unit
field ``v`` orthogonal to ``x`` (an :class:`AntipodalChooser`) to pick the
great circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import mpmath
import numpy as np

from .algebra import CanonicalAlgebra
from .exceptions import AntipodalError
from .report import AxiomReport
from .space import COINCIDENT_SLOT, SPECIAL_SLOT, MobiSpace, default_pair_sampler

COINCIDENT_ANGLE = 1e-9
ANTIPODAL_COLLAR = 1e-9
SERIES_ANGLE = 1e-6
GEODESIC_TOL = 1e-6
MODEL_TOL = 1e-9


def _lib(a):
    return mpmath if isinstance(a, (mpmath.mpf, mpmath.mpc)) else np


@dataclass(frozen=True)
class FGFamily:
    """One real member of the ``(f, g)`` family, selected by ``kind``.

    ``trig`` gives ``(sin, cos)``, ``hyperbolic`` gives ``(sinh, cosh)`` and
    ``linear`` is the limit ``(a, 1)``. Scalars may be floats, numpy arrays or
    mpmath numbers.
    """

    kind: str

    def __post_init__(self):
        if self.kind not in ("trig", "hyperbolic", "linear"):
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def alpha_sq(self) -> int:
        return {"trig": -1, "hyperbolic": 1, "linear": 0}[self.kind]

    @property
    def first_zero(self) -> Optional[float]:
        """Smallest positive zero of ``f``, if any."""
        return math.pi if self.kind == "trig" else None

    def f(self, a):
        lib = _lib(a)
        if self.kind == "trig":
            return lib.sin(a)
        if self.kind == "hyperbolic":
            return lib.sinh(a)
        return a

    def g(self, a):
        lib = _lib(a)
        if self.kind == "trig":
            return lib.cos(a)
        if self.kind == "hyperbolic":
            return lib.cosh(a)
        return a * 0 + 1

    def ratio(self, w, t):
        """``f(w t) / f(w)``, with a series expansion for small ``w``."""
        if w < SERIES_ANGLE:
            return t * (1 + self.alpha_sq * w * w * (t * t - 1) / 6)
        return self.f(w * t) / self.f(w)


TRIG = FGFamily("trig")
HYPERBOLIC = FGFamily("hyperbolic")
LINEAR = FGFamily("linear")
FAMILIES = {"trig": TRIG, "hyperbolic": HYPERBOLIC, "linear": LINEAR}


FG_IDS = ("pythagorean", "f-addition", "g-addition", "parity", "initial-values")


def check_fg_identities(family: FGFamily, seed=0, n: int = 1_000, tol: float = 1e-12,
                        box: float = 10.0, dps: Optional[int] = None) -> list[AxiomReport]:
    """Check the five identities of the ``(f, g)`` family on ``[-box, box]``.

    With ``dps=None`` the check runs in binary64 and each residual is divided
    by ``max(1, size of the terms)``: ``cosh(10)**2`` is about ``1.2e8``, so
    an absolute ``1e-12`` is below the ulp there. With ``dps`` set, the same
    code runs in mpmath at that many digits and residuals are absolute.
    """
    rng = np.random.default_rng(seed)
    A = rng.uniform(-box, box, size=n)
    B = rng.uniform(-box, box, size=n)
    c2 = family.alpha_sq
    f, g = family.f, family.g
    reps = {k: AxiomReport(k) for k in FG_IDS}

    def run():
        conv = (lambda v: mpmath.mpf(float(v))) if dps else float

        def check(rep, inputs, lhs, rhs, scale):
            denom = 1 if dps else max(1.0, float(abs(scale)))
            rep.check_equal(inputs, lhs, rhs, lambda u, v: float(abs(u - v)) / denom, tol)

        zero = conv(0)
        check(reps["initial-values"], (0.0,), f(zero), 0, 0)
        check(reps["initial-values"], (0.0,), g(zero), 1, 1)
        for a0, b0 in zip(A, B):
            a, b = conv(a0), conv(b0)
            fa, ga, fb, gb = f(a), g(a), f(b), g(b)
            check(reps["pythagorean"], (a0,), -c2 * fa * fa + ga * ga, 1, abs(c2 * fa * fa) + ga * ga)
            check(reps["f-addition"], (a0, b0), fa * gb + fb * ga, f(a + b), abs(fa * gb) + abs(fb * ga))
            check(reps["g-addition"], (a0, b0), c2 * fa * fb + ga * gb, g(a + b), abs(c2 * fa * fb) + abs(ga * gb))
            check(reps["parity"], (a0,), f(-a), -fa, fa)
            check(reps["parity"], (a0,), g(-a), ga, ga)

    if dps:
        with mpmath.workdps(dps):
            run()
    else:
        run()
    return list(reps.values())


def euclidean_inner(x, y) -> float:
    return float(np.dot(x, y))


def lorentz_inner(x, y) -> float:
    """``-x1 y1 + sum_{i>=2} xi yi``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return float(-x[0] * y[0] + np.dot(x[1:], y[1:]))


def theta_sphere(x, y) -> float:
    """Angle between unit vectors, in ``[0, pi]``.

    Equal to ``arccos(<x, y>)`` clamped to ``[-1, 1]``, but evaluated as
    ``2 atan2(|x - y|, |x + y|)``, which keeps full precision near 0 and pi.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return 2.0 * math.atan2(float(np.linalg.norm(x - y)), float(np.linalg.norm(x + y)))


def theta_hyperbolic(x, y) -> float:
    """Hyperbolic distance on the upper sheet, ``arccosh(-<x, y>_L)``.

    Evaluated as ``2 asinh(|x - y|_L / 2)`` to avoid the loss of precision of
    ``arccosh`` near 1.
    """
    d = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    return 2.0 * math.asinh(math.sqrt(max(lorentz_inner(d, d), 0.0)) / 2.0)


def on_sphere(x, dim: Optional[int] = None, tol: float = MODEL_TOL) -> bool:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or (dim is not None and x.shape[0] != dim) or not np.all(np.isfinite(x)):
        return False
    return abs(float(np.dot(x, x)) - 1.0) <= tol


def on_hyperboloid(x, dim: Optional[int] = None, tol: float = MODEL_TOL) -> bool:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or (dim is not None and x.shape[0] != dim) or not np.all(np.isfinite(x)):
        return False
    return x[0] > 0 and abs(lorentz_inner(x, x) + 1.0) <= tol


@dataclass(frozen=True)
class AntipodalChooser:
    """Even unit field ``v`` with ``<x, v(x)> = 0`` on the sphere in ``R^dim``."""

    name: str
    dim: int
    v: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        return self.v(np.asarray(x, dtype=float))


def _upper_half_circle(x1, x2) -> bool:
    # polar angle in [0, pi)
    return x2 > 0 or (x2 == 0 and x1 > 0)


def chooser_circle() -> AntipodalChooser:
    """Anticlockwise from the upper half of the circle, clockwise from the lower."""

    def v(x):
        x1, x2 = x
        if _upper_half_circle(x1, x2):
            return np.array([-x2, x1])
        return np.array([x2, -x1])

    return AntipodalChooser("circle", 2, v)


def chooser_s2_pole() -> AntipodalChooser:
    """Route antipodal pairs through the north pole; the poles use ``(1, 0, 0)``."""

    def v(x):
        x1, x2, x3 = x
        rho = math.hypot(x1, x2)  # sqrt(1 - x3^2) on the sphere, without cancellation
        if rho == 0.0:
            return np.array([1.0, 0.0, 0.0])
        return np.array([-x1 * x3 / rho, -x2 * x3 / rho, rho])

    return AntipodalChooser("s2-pole", 3, v)


def chooser_s2_equator() -> AntipodalChooser:
    """Equatorial direction a quarter turn from the meridian of ``x``.

    Upper hemisphere (and the half of the equator with azimuth in ``[0, pi)``)
    turns one way, the rest the other. Both poles map to ``(0, 1, 0)``.
    """

    def v(x):
        x1, x2, x3 = x
        rho = math.hypot(x1, x2)
        if rho == 0.0:
            return np.array([0.0, 1.0, 0.0])
        if x3 > 0 or (x3 == 0 and _upper_half_circle(x1, x2)):
            return np.array([-x2 / rho, x1 / rho, 0.0])
        return np.array([x2 / rho, -x1 / rho, 0.0])

    return AntipodalChooser("s2-equator", 3, v)


CHOOSERS = {"circle": chooser_circle, "pole": chooser_s2_pole, "equator": chooser_s2_equator}


def check_chooser(chooser: AntipodalChooser, seed=0, n: int = 10_000, tol: float = MODEL_TOL):
    """Evenness, orthogonality and unit length of a chooser on sampled points."""
    rng = np.random.default_rng(seed)
    pts = sample_sphere(n, chooser.dim, rng)
    # poles and equator points exercise the tie rules
    for k in range(chooser.dim):
        e = np.zeros(chooser.dim)
        e[k] = 1.0
        pts.extend([e, -e])
    even, orth, unit = AxiomReport("even"), AxiomReport("orthogonal"), AxiomReport("unit")
    d = lambda u, w: float(np.linalg.norm(np.asarray(u) - np.asarray(w)))  # noqa: E731
    absdiff = lambda u, w: abs(u - w)  # noqa: E731
    for x in pts:
        vx = chooser(x)
        even.check_equal((x,), chooser(-x), vx, d, tol)
        orth.check_equal((x,), float(np.dot(x, vx)), 0.0, absdiff, tol)
        unit.check_equal((x,), float(np.dot(vx, vx)), 1.0, absdiff, tol)
    return [even, orth, unit]


def geodesic_q(family: FGFamily, theta_fn, x, t, y, chooser: Optional[AntipodalChooser] = None):
    """Point at instant ``t`` on the geodesic from ``x`` to ``y``.

    Raises :class:`AntipodalError` when ``f`` vanishes at ``theta(x, y)`` and no
    chooser is supplied.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    w = theta_fn(x, y)
    if w <= COINCIDENT_ANGLE:
        return x.copy()
    zero = family.first_zero
    if zero is not None and w >= zero - ANTIPODAL_COLLAR:
        if chooser is None:
            raise AntipodalError("antipodal endpoints need a chooser")
        return family.g(w * t) * x + family.f(w * t) * chooser(x)
    return family.ratio(w, 1 - t) * x + family.ratio(w, t) * y


def sample_sphere(n, dim, rng) -> list:
    pts = rng.normal(size=(n, dim))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return list(pts)


def _sphere_pairs(dim):
    def pairs(n, rng):
        xs = sample_sphere(n, dim, rng)
        ys = sample_sphere(n, dim, rng)
        for i in range(n):
            if i % 5 == SPECIAL_SLOT:
                ys[i] = -xs[i]
            elif i % 5 == COINCIDENT_SLOT:
                ys[i] = xs[i].copy()
        return xs, ys

    return pairs


def slerp_space(n: int, chooser: AntipodalChooser, name: Optional[str] = None) -> MobiSpace:
    """Great-circle interpolation on the whole of ``S^n`` over the unit interval."""
    dim = n + 1
    if chooser.dim != dim:
        raise ValueError(f"chooser {chooser.name} acts on R^{chooser.dim}, not R^{dim}")
    return MobiSpace(
        name or f"slerp-s{n}-{chooser.name}",
        CanonicalAlgebra(),
        q=lambda x, t, y: geodesic_q(TRIG, theta_sphere, x, t, y, chooser),
        contains=lambda x: on_sphere(x, dim),
        sampler=lambda k, rng: sample_sphere(k, dim, rng),
        pair_sampler=_sphere_pairs(dim),
        tol=GEODESIC_TOL,
        description=f"Slerp on S^{n} with the {chooser.name} antipodal chooser",
    )


def hemisphere_space(n: int) -> MobiSpace:
    """Slerp on the open hemisphere ``x1 > 0``, where no chooser is needed."""
    dim = n + 1

    def sampler(k, rng):
        pts = sample_sphere(k, dim, rng)
        for p in pts:
            p[0] = abs(p[0])
        return pts

    return MobiSpace(
        "slerp-hemisphere",
        CanonicalAlgebra(),
        q=lambda x, t, y: geodesic_q(TRIG, theta_sphere, x, t, y),
        contains=lambda x: on_sphere(x, dim) and float(np.asarray(x, dtype=float)[0]) > 0,
        sampler=sampler,
        tol=GEODESIC_TOL,
        description=f"Slerp on the open hemisphere of S^{n}",
    )


def sample_hyperboloid(n, dim, rng, radius: float = 2.0) -> list:
    dirs = sample_sphere(n, dim - 1, rng)
    r = rng.uniform(0.0, radius, size=n)
    return [np.concatenate([[math.cosh(ri)], math.sinh(ri) * u]) for ri, u in zip(r, dirs)]


def hyperbolic_space(n: int) -> MobiSpace:
    """Geodesics of ``H^n`` in the hyperboloid model, over the unit interval."""
    dim = n + 1
    if n < 1:
        raise ValueError("hyperbolic space needs n >= 1")
    return MobiSpace(
        "hyperbolic-hn",
        CanonicalAlgebra(),
        q=lambda x, t, y: geodesic_q(HYPERBOLIC, theta_hyperbolic, x, t, y),
        contains=lambda x: on_hyperboloid(x, dim),
        sampler=lambda k, rng: sample_hyperboloid(k, dim, rng),
        pair_sampler=default_pair_sampler(lambda k, rng: sample_hyperboloid(k, dim, rng)),
        tol=GEODESIC_TOL,
        description=f"hyperboloid model of H^{n}",
    )
