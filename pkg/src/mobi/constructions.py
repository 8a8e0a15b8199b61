"""Catalog of mobi spaces and the machinery that builds them.

Three constructions cover most of the catalog:

* transport of a known space along a bijection (:func:`transport_space`);
* the pair construction on ``X x Y`` driven by a two-parameter family of
  curves ``h(alpha, y, beta)`` and its boundary-value solver (:func:`pair_space`);
* its linear case ``h = alpha f(y) + beta g(y) - K(y)``, solved with the
  closed-form 2x2 inverse (:func:`linear_pair_space`).

The registered instances (squares, reciprocals, cubes, projectiles, damped
oscillators, ...) use closed forms rearranged for floating-point stability; the
tests compare them with the generic solver.

Points of a pair space ``X x Y`` are flat arrays ``[x_1, ..., x_m, y]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .algebra import CanonicalAlgebra, MobiAlgebra
from .exceptions import ConfigError, DomainError, SingularSystemError
from .instances import LozengeAlgebra, real_line_algebra
from .space import COINCIDENT_SLOT, SPECIAL_SLOT, MobiSpace

DET_FLOOR = 1e-12
POINT_BOX = 5.0
# Scalars of the real-line algebra used by spaces over R; kept small so that
# nested evaluations in the X5 check stay well inside binary64 precision.
REAL_LINE_BOX = 2.0


def _pick_algebra(algebra) -> MobiAlgebra:
    if algebra is None or algebra == "canonical":
        return CanonicalAlgebra()
    if algebra == "real-line":
        return real_line_algebra(REAL_LINE_BOX)
    if isinstance(algebra, MobiAlgebra):
        return algebra
    raise ConfigError(f"unsupported algebra {algebra!r}; use 'canonical' or 'real-line'")


def _finite_vector(dim: int):
    def contains(z) -> bool:
        try:
            z = np.asarray(z, dtype=float)
        except (TypeError, ValueError):
            return False
        return z.shape == (dim,) and bool(np.all(np.isfinite(z)))

    return contains


def _box_sampler(dim: int, lo: float = -POINT_BOX, hi: float = POINT_BOX):
    def sampler(n, rng):
        return list(rng.uniform(lo, hi, size=(n, dim)))

    return sampler


def _fibred_pairs(x_sampler, y_sampler):
    """Pair sampler for ``X x Y``; puts equal fibre coordinates at the special slot."""

    def pairs(n, rng):
        xs = x_sampler(n, rng)
        ys = x_sampler(n, rng)
        fs = y_sampler(n, rng)
        gs = y_sampler(n, rng)
        left, right = [], []
        for i in range(n):
            g = fs[i] if i % 5 == SPECIAL_SLOT else gs[i]
            p = np.concatenate([np.atleast_1d(xs[i]), np.atleast_1d(fs[i])])
            r = p.copy() if i % 5 == COINCIDENT_SLOT else np.concatenate(
                [np.atleast_1d(ys[i]), np.atleast_1d(g)]
            )
            left.append(p)
            right.append(r)
        return left, right

    return pairs


def _fibred_sampler(x_sampler, y_sampler):
    def sampler(n, rng):
        xs = x_sampler(n, rng)
        ys = y_sampler(n, rng)
        return [np.concatenate([np.atleast_1d(x), np.atleast_1d(y)]) for x, y in zip(xs, ys)]

    return sampler


def _scalar_in(lo: float, hi: float, lo_open: bool = False, hi_open: bool = False):
    def contains(v) -> bool:
        v = float(v)
        if not math.isfinite(v):
            return False
        above = v > lo if lo_open else v >= lo
        below = v < hi if hi_open else v <= hi
        return above and below

    return contains


def _pair_contains(x_contains, y_contains, x_dim: int = 1):
    def contains(z) -> bool:
        z = np.asarray(z)
        if z.ndim != 1 or z.shape[0] != x_dim + 1:
            return False
        try:
            return bool(x_contains(z[:x_dim])) and bool(y_contains(z[x_dim]))
        except (TypeError, ValueError):
            return False

    return contains


def _uniform(lo, hi):
    return lambda n, rng: rng.uniform(lo, hi, size=n).tolist()


# ---------------------------------------------------------------- canonical


def canonical_space(n: int = 1, algebra=None) -> MobiSpace:
    """``R^n`` with ``q(x, a, y) = (1 - a) x + a y``."""
    if n < 1:
        raise ConfigError("n must be at least 1")
    alg = _pick_algebra(algebra)
    return MobiSpace(
        "canonical-rn",
        alg,
        q=lambda x, a, y: (1 - a) * x + a * y,
        contains=_finite_vector(n),
        sampler=_box_sampler(n),
        description=f"R^{n} with straight-line interpolation",
    )


# ---------------------------------------------------------------- transport


@dataclass(frozen=True)
class TransportSpec:
    """A bijection ``forward: X -> X'`` with its inverse and a space on ``X'``."""

    forward: Callable
    inverse: Callable
    base: MobiSpace


def check_transport(spec: TransportSpec, points, tol: float = 1e-9) -> bool:
    """``inverse(forward(x)) == x`` within ``tol`` on the given points."""
    return all(
        float(np.max(np.abs(spec.inverse(spec.forward(x)) - x))) <= tol for x in points
    )


def transport_space(spec: TransportSpec, name: str, contains, sampler, description="") -> MobiSpace:
    """``q(x, a, y) = F^-1(q'(F x, a, F y))`` on the carrier described by ``contains``."""
    F, G, base = spec.forward, spec.inverse, spec.base

    def q(x, a, y):
        u, v = F(x), F(y)
        if not (base.contains(u) and base.contains(v)):
            raise DomainError(f"{name}: transport leaves the carrier")
        return G(base.q(u, a, v))

    return MobiSpace(name, base.algebra, q, contains, sampler, description=description)


def _log_uniform(lo, hi):
    def sampler(n, rng):
        return list(np.exp(rng.uniform(math.log(lo), math.log(hi), size=(n, 1))))

    return sampler


def _positive(z) -> bool:
    z = np.asarray(z, dtype=float)
    return z.shape == (1,) and bool(np.isfinite(z[0])) and z[0] > 0


def geometric_mean_space() -> MobiSpace:
    """Positive reals transported by ``log``: ``q(x, a, y) = x^(1-a) y^a``."""
    return transport_space(
        TransportSpec(np.log, np.exp, canonical_space(1)),
        "geometric-mean",
        _positive,
        _log_uniform(0.1, 10.0),
        "positive reals, q(x,a,y) = x^(1-a) y^a",
    )


def harmonic_space() -> MobiSpace:
    """Positive reals transported by ``1/x``: ``q(x, a, y) = x y / (a x + (1 - a) y)``."""
    recip = lambda x: 1.0 / x  # noqa: E731
    positive_line = MobiSpace(
        "positive-line", CanonicalAlgebra(), lambda x, a, y: (1 - a) * x + a * y,
        _positive, _log_uniform(0.1, 10.0),
    )
    return transport_space(
        TransportSpec(recip, recip, positive_line),
        "harmonic",
        _positive,
        _log_uniform(0.1, 10.0),
        "positive reals, q(x,a,y) = xy / (ax + (1-a)y)",
    )


# ---------------------------------------------------------------- pair constructions


@dataclass(frozen=True)
class PairSpec:
    """Two-parameter curve family ``h(alpha, y, beta)`` with its boundary solver.

    ``solve(x1, y1, x2, y2)`` returns ``(alpha, beta)`` with
    ``h(alpha, y_i, beta) = x_i``; it is only called when ``y1 != y2``.
    """

    h: Callable
    solve: Callable
    base_x: MobiSpace
    base_y: MobiSpace
    x_dim: int = 1


def check_pair_solver(spec: PairSpec, seed=0, n: int = 1_000, tol: float = 1e-9) -> bool:
    """Round-trip of the solver on sampled boundary data with distinct fibres."""
    rng = np.random.default_rng(seed)
    xs1, xs2 = spec.base_x.sample(n, rng), spec.base_x.sample(n, rng)
    ys1, ys2 = spec.base_y.sample(n, rng), spec.base_y.sample(n, rng)
    for x1, x2, y1, y2 in zip(xs1, xs2, ys1, ys2):
        if np.array_equal(y1, y2):
            continue
        al, be = spec.solve(x1, y1, x2, y2)
        if max(spec.base_x.dist(spec.h(al, y1, be), x1), spec.base_x.dist(spec.h(al, y2, be), x2)) > tol:
            return False
    return True


def pair_space(spec: PairSpec, name: str, sampler=None, pair_sampler=None,
               description: str = "") -> MobiSpace:
    """Mobi space on ``X x Y``: follow the family curve through both endpoints.

    When the fibre coordinates coincide the ``X`` part moves by the base space.
    """
    m = spec.x_dim
    qy = spec.base_y.q
    qx = spec.base_x.q

    def q(z1, a, z2):
        x1, y1 = z1[:m], z1[m:]
        x2, y2 = z2[:m], z2[m:]
        if np.array_equal(y1, y2):
            return np.concatenate([qx(x1, a, x2), y1])
        al, be = spec.solve(x1, y1, x2, y2)
        ya = qy(y1, a, y2)
        return np.concatenate([np.atleast_1d(spec.h(al, ya, be)), ya])

    x_samp = lambda n, rng: spec.base_x.sample(n, rng)  # noqa: E731
    y_samp = lambda n, rng: spec.base_y.sample(n, rng)  # noqa: E731
    contains = _pair_contains(spec.base_x.contains, lambda v: spec.base_y.contains(np.atleast_1d(v)), m)
    return MobiSpace(
        name,
        spec.base_y.algebra,
        q,
        contains,
        sampler or _fibred_sampler(x_samp, y_samp),
        pair_sampler=pair_sampler or _fibred_pairs(x_samp, y_samp),
        description=description,
    )


@dataclass(frozen=True)
class LinearPairSpec:
    """Curves ``alpha f(y) + beta g(y) - K(y)`` through two boundary points.

    ``f`` and ``g`` are scalar functions of the fibre coordinate and ``K`` takes
    values in ``R^x_dim``. Nondegeneracy means ``f(y1) g(y2) != g(y1) f(y2)``
    whenever ``y1 != y2``.
    """

    f: Callable
    g: Callable
    K: Callable
    base_y: MobiSpace
    base_x: MobiSpace
    x_dim: int = 1


def linear_solve(spec: LinearPairSpec, x1, y1, x2, y2):
    """Coefficients ``(alpha, beta)`` by the explicit inverse of the 2x2 system."""
    f1, g1, f2, g2 = spec.f(y1), spec.g(y1), spec.f(y2), spec.g(y2)
    det = f1 * g2 - f2 * g1
    if not abs(det) >= DET_FLOOR:
        raise SingularSystemError(f"boundary system is singular (det={det!r})")
    r1 = x1 + spec.K(y1)
    r2 = x2 + spec.K(y2)
    alpha = (g2 * r1 - g1 * r2) / det
    beta = (f1 * r2 - f2 * r1) / det
    return alpha, beta


def linear_pair_space(spec: LinearPairSpec, name: str, **kwargs) -> MobiSpace:
    """Pair construction for the linear family, solved in closed form."""

    def h(alpha, y, beta):
        return alpha * spec.f(y) + beta * spec.g(y) - spec.K(y)

    def solve(x1, y1, x2, y2):
        return linear_solve(spec, x1, y1[0], x2, y2[0])

    def h_vec(alpha, y, beta):
        return h(alpha, np.asarray(y)[0], beta)

    pspec = PairSpec(h_vec, solve, spec.base_x, spec.base_y, spec.x_dim)
    return pair_space(pspec, name, **kwargs)


def fibre_line(lo: float, hi: float, lo_open: bool = False, hi_open: bool = False,
               sample_lo: Optional[float] = None, sample_hi: Optional[float] = None) -> MobiSpace:
    """An interval of the real line with straight-line interpolation."""
    inside = _scalar_in(lo, hi, lo_open, hi_open)
    s_lo = lo if sample_lo is None else sample_lo
    s_hi = hi if sample_hi is None else sample_hi
    return MobiSpace(
        f"interval[{lo},{hi}]",
        CanonicalAlgebra(),
        q=lambda x, a, y: (1 - a) * x + a * y,
        contains=lambda v: np.asarray(v).shape in ((), (1,)) and inside(np.asarray(v).ravel()[0]),
        sampler=lambda n, rng: list(rng.uniform(s_lo, s_hi, size=(n, 1))),
    )


def _fibre_space(name, weight, y_contains, y_sampler, description, algebra=None):
    """``R x Y`` with ``q((x,s),a,(y,t)) = (x + (y-x) w(s,t,a), s + a(t-s))``.

    ``w`` is only called for ``s != t``; equal fibres move in a straight line.
    Works with floats and with exact fractions.
    """

    def q(z1, a, z2):
        x, s = z1
        y, t = z2
        if s == t:
            return np.array([x + a * (y - x), s])
        return np.array([x + (y - x) * weight(s, t, a), s + a * (t - s)])

    x_samp = _uniform(-POINT_BOX, POINT_BOX)
    return MobiSpace(
        name,
        _pick_algebra(algebra),
        q,
        _pair_contains(lambda x: bool(np.all(np.isfinite(np.asarray(x, dtype=float)))), y_contains),
        _fibred_sampler(x_samp, y_sampler),
        pair_sampler=_fibred_pairs(x_samp, y_sampler),
        description=description,
    )


def sq_pair_space() -> MobiSpace:
    """Squares: ``f(s) = s^2`` on ``R x [0, inf)``.

    Weight ``(2 s a + (t - s) a^2) / (s + t)``.
    """
    return _fibre_space(
        "sq-pair",
        lambda s, t, a: (2 * s * a + (t - s) * a * a) / (s + t),
        _scalar_in(0.0, math.inf, hi_open=True),
        _uniform(0.0, POINT_BOX),
        "R x [0,inf) through the curves alpha s^2 + beta",
    )


def inv_pair_space() -> MobiSpace:
    """Reciprocals: ``f(s) = 1/s`` on ``R x (0, inf)``; weight ``a t / ((1 - a) s + a t)``."""
    return _fibre_space(
        "inv-pair",
        lambda s, t, a: a * t / ((1 - a) * s + a * t),
        _scalar_in(0.0, math.inf, lo_open=True, hi_open=True),
        _uniform(0.2, POINT_BOX),
        "R x (0,inf) through the curves alpha / s + beta",
    )


def cube_pair_space(algebra=None) -> MobiSpace:
    """Cubes: ``f(s) = s^3`` on ``R^2``.

    The fibre pair ``(0, 0)`` falls in the equal-fibre branch, which fixes the
    value where the generic formula has no limit. ``f`` is injective on all of
    ``R``, so the real-line algebra may be used instead of the unit interval.
    """

    def weight(s, t, a):
        d = t - s
        return (3 * s * s * a + 3 * s * d * a * a + d * d * a ** 3) / (s * s + s * t + t * t)

    return _fibre_space(
        "cube-pair",
        weight,
        _scalar_in(-math.inf, math.inf, True, True),
        _uniform(-3.0, 3.0),
        "R^2 through the curves alpha s^3 + beta",
        algebra,
    )


def parse_fibre_function(expr: str):
    """Parse an expression in ``s`` into a float function (sympy does the parsing)."""
    import sympy

    s = sympy.Symbol("s", real=True)
    try:
        parsed = sympy.sympify(expr, locals={"s": s})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ConfigError(f"cannot parse f = {expr!r}: {exc}") from exc
    if not isinstance(parsed, sympy.Expr) or parsed.free_symbols - {s}:
        raise ConfigError(f"f must be an expression in s alone, got {expr!r}")
    return sympy.lambdify(s, parsed, modules="math")


def general_f_pair_space(f: str = "exp(s)", lo: float = -2.0, hi: float = 2.0) -> MobiSpace:
    """``f`` injective on ``[lo, hi]``; weight ``(f(s + a(t-s)) - f(s)) / (f(t) - f(s))``."""
    if not lo < hi:
        raise ConfigError("general-f-pair needs lo < hi")
    fn = parse_fibre_function(f)
    grid = np.linspace(lo, hi, 1001)
    try:
        vals = np.array([float(fn(float(v))) for v in grid])
    except (ValueError, ZeroDivisionError, OverflowError, TypeError) as exc:
        raise ConfigError(f"f = {f!r} cannot be evaluated on [{lo}, {hi}]: {exc}") from exc
    steps = np.diff(vals)
    if not np.all(np.isfinite(vals)) or not (np.all(steps > 0) or np.all(steps < 0)):
        raise ConfigError(f"f = {f!r} is not strictly monotone on [{lo}, {hi}]")

    def weight(s, t, a):
        fs = fn(s)
        return (fn(s + a * (t - s)) - fs) / (fn(t) - fs)

    return _fibre_space(
        "general-f-pair",
        weight,
        _scalar_in(lo, hi),
        _uniform(lo, hi),
        f"R x [{lo},{hi}] through the curves alpha f(s) + beta, f = {f}",
    )


def alpha_beta_pow_space() -> MobiSpace:
    """Curves ``x = alpha beta^y`` on ``(0, inf) x [0, inf)``.

    Parametrized as ``exp(mu + lam y)`` so the solve is linear in logs; the
    result is ``(x1^(1-a) x2^a, y1 + a(y2 - y1))``, defined for equal fibres too.
    """

    def h(mu, y, lam):
        return np.exp(mu + lam * np.asarray(y))

    def solve(x1, y1, x2, y2):
        l1, l2 = np.log(x1), np.log(x2)
        lam = (l2 - l1) / (y2 - y1)
        return l1 - lam * y1, lam

    spec = PairSpec(h, solve, geometric_mean_space(),
                    fibre_line(0.0, math.inf, hi_open=True, sample_lo=0.0, sample_hi=POINT_BOX))
    return pair_space(spec, "alpha-beta-pow", description="(0,inf) x [0,inf) through alpha beta^y")


# ---------------------------------------------------------------- physics


@dataclass(frozen=True)
class ProjectileSpec:
    """Half-acceleration ``k`` in ``R^n``."""

    k: tuple

    def __post_init__(self):
        k = np.atleast_1d(np.asarray(self.k, dtype=float))
        if k.ndim != 1 or not np.all(np.isfinite(k)):
            raise ConfigError("projectile k must be a finite vector")
        object.__setattr__(self, "k", tuple(float(v) for v in k))


def projectile_q(k, z1, a, z2):
    """``(x + a(y-x) + k a(1-a)(t-s)^2, s + a(t-s))`` on ``R^(n+1)``."""
    x, s = z1[:-1], z1[-1]
    y, t = z2[:-1], z2[-1]
    d = t - s
    return np.concatenate([x + a * (y - x) + k * (a * (1 - a) * d * d), [s + a * d]])


def projectile_space(spec: ProjectileSpec, algebra=None) -> MobiSpace:
    """Constant-acceleration trajectories with time as the last coordinate."""
    k = np.asarray(spec.k)
    dim = k.shape[0] + 1
    return MobiSpace(
        "projectile",
        _pick_algebra(algebra),
        q=lambda z1, a, z2: projectile_q(k, z1, a, z2),
        contains=_finite_vector(dim),
        sampler=_box_sampler(dim),
        pair_sampler=_time_pairs(dim),
        description=f"constant acceleration motion with k = {list(spec.k)}",
    )


def _time_pairs(dim, t_lo=-POINT_BOX, t_hi=POINT_BOX, x_lo=-POINT_BOX, x_hi=POINT_BOX):
    def x_samp(n, rng):
        return list(rng.uniform(x_lo, x_hi, size=(n, dim - 1)))

    return _fibred_pairs(x_samp, _uniform(t_lo, t_hi))


@dataclass(frozen=True)
class DampingSpec:
    """Damped oscillator with decay rates ``alpha`` and ``beta``.

    ``kind`` is ``critical`` (``beta`` unused), ``overdamped`` (``alpha != beta``)
    or ``underdamped`` (``beta != 0``, times restricted to ``[0, pi/|beta|)``).
    """

    kind: str
    alpha: float = 1.0
    beta: float = 2.0

    def __post_init__(self):
        if self.kind not in ("critical", "overdamped", "underdamped"):
            raise ConfigError(f"unknown damping kind {self.kind!r}")
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ConfigError("damping rates must be finite")
        if self.kind == "overdamped" and self.alpha == self.beta:
            raise ConfigError("overdamped motion needs alpha != beta")
        if self.kind == "underdamped" and self.beta == 0:
            raise ConfigError("underdamped motion needs beta != 0")


def critical_q(alpha, z1, a, z2):
    x, s = z1
    y, t = z2
    d = t - s
    return np.array(
        [(1 - a) * x * math.exp(alpha * a * d) + a * y * math.exp(-alpha * (1 - a) * d), s + a * d]
    )


def overdamped_q(alpha, beta, z1, a, z2):
    """Curves ``A e^(alpha u) + B e^(beta u)``, written with ``expm1``.

    With ``d = s - t`` and ``r = alpha - beta`` the weights on ``x`` and ``y`` are
    ``e^(-beta a d) expm1(r (1-a) d) / expm1(r d)`` and
    ``e^(alpha (1-a) d) expm1(r a d) / expm1(r d)``.
    """
    x, s = z1
    y, t = z2
    if s == t:
        return np.array([x + a * (y - x), s])
    d = s - t
    r = alpha - beta
    den = math.expm1(r * d)
    cx = math.exp(-beta * a * d) * math.expm1(r * (1 - a) * d) / den
    cy = math.exp(alpha * (1 - a) * d) * math.expm1(r * a * d) / den
    return np.array([cx * x + cy * y, s - a * d])


def underdamped_q(alpha, beta, z1, a, z2):
    x, s = z1
    y, t = z2
    if s == t:
        return np.array([x + a * (y - x), s])
    d = t - s
    w = abs(beta)
    num = x * math.exp(alpha * a * d) * math.sin(w * (1 - a) * d) + y * math.exp(
        -alpha * (1 - a) * d
    ) * math.sin(w * a * d)
    return np.array([num / math.sin(w * d), s + a * d])


def damping_space(spec: DampingSpec) -> MobiSpace:
    """Damped oscillator trajectories on ``R^2`` (position, time)."""
    al, be = spec.alpha, spec.beta
    if spec.kind == "critical":
        q = lambda z1, a, z2: critical_q(al, z1, a, z2)  # noqa: E731
        name, t_lo, t_hi = "damping-critical", -2.0, 2.0
        contains = _finite_vector(2)
    elif spec.kind == "overdamped":
        q = lambda z1, a, z2: overdamped_q(al, be, z1, a, z2)  # noqa: E731
        name, t_lo, t_hi = "damping-over", -2.0, 2.0
        contains = _finite_vector(2)
    else:
        q = lambda z1, a, z2: underdamped_q(al, be, z1, a, z2)  # noqa: E731
        name, t_lo, t_hi = "damping-under", 0.0, math.pi / abs(be)
        contains = _pair_contains(
            lambda x: bool(np.all(np.isfinite(np.asarray(x, dtype=float)))),
            _scalar_in(0.0, t_hi, hi_open=True),
        )
    x_samp = _uniform(-POINT_BOX, POINT_BOX)
    return MobiSpace(
        name,
        CanonicalAlgebra(),
        q,
        contains,
        _fibred_sampler(x_samp, _uniform(t_lo, t_hi)),
        pair_sampler=_fibred_pairs(x_samp, _uniform(t_lo, t_hi)),
        description=f"{spec.kind} oscillator, alpha={al}, beta={be}",
    )


# ---------------------------------------------------------------- other algebras


def lozenge_space(h: int = 1) -> MobiSpace:
    """``[0, 1]`` over the lozenge algebra: ``q(x, (t, s), y) = (1 - t - h s) x + (t + h s) y``."""
    if h not in (1, -1):
        raise ConfigError("lozenge-space needs h = +1 or -1")

    def q(x, a, y):
        w = a[0] + h * a[1]
        return (1 - w) * x + w * y

    def contains(x) -> bool:
        x = np.asarray(x, dtype=float)
        return x.shape == (1,) and -1e-12 <= x[0] <= 1 + 1e-12

    return MobiSpace(
        "lozenge-space",
        LozengeAlgebra(),
        q,
        contains,
        lambda n, rng: list(rng.uniform(0.0, 1.0, size=(n, 1))),
        description=f"unit interval over the lozenge algebra, h={h}",
    )


# ---------------------------------------------------------------- negative controls


def _negative(name, q, description):
    return MobiSpace(name, CanonicalAlgebra(), q, _finite_vector(1), _box_sampler(1),
                     description=description)


def negative_cos() -> MobiSpace:
    """``x cos t + y sin t``; misses ``y`` at ``t = 1``."""
    return _negative("negative-cos", lambda x, t, y: x * math.cos(t) + y * math.sin(t),
                     "x cos(t) + y sin(t); not a mobi space")


def negative_cos_scaled() -> MobiSpace:
    """``x cos(t pi/2) + y sin(t pi/2)``; not idempotent."""
    c = math.pi / 2
    return _negative("negative-cos-scaled",
                     lambda x, t, y: x * math.cos(t * c) + y * math.sin(t * c),
                     "x cos(t pi/2) + y sin(t pi/2); not a mobi space")


def negative_cos2() -> MobiSpace:
    """``x cos^2(t pi/2) + y sin^2(t pi/2)``; breaks only the composition law."""
    c = math.pi / 2
    return _negative("negative-cos2",
                     lambda x, t, y: x * math.cos(t * c) ** 2 + y * math.sin(t * c) ** 2,
                     "x cos^2(t pi/2) + y sin^2(t pi/2); not a mobi space")


__all__ = [
    "TransportSpec", "PairSpec", "LinearPairSpec", "ProjectileSpec", "DampingSpec",
    "transport_space", "pair_space", "linear_pair_space", "linear_solve",
    "canonical_space", "geometric_mean_space", "harmonic_space",
    "sq_pair_space", "inv_pair_space", "cube_pair_space", "general_f_pair_space",
    "alpha_beta_pow_space", "projectile_space", "damping_space", "lozenge_space",
    "negative_cos", "negative_cos_scaled", "negative_cos2", "check_transport",
    "check_pair_solver", "fibre_line", "parse_fibre_function",
]
