"""Modules over a ring with one half, and their equivalence with affine mobi spaces.

``module_to_mobi`` turns ``(M, +, e, phi)`` into ``q(x, a, y) = phi_{1-a}(x) + phi_a(y)``.
``mobi_to_module`` goes back from an affine space with a chosen origin ``e``:
``x + y = q(e, 2, q(x, 1/2, y))`` and ``phi_a(x) = q(e, a, x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from .algebra import euclidean
from .constructions import REAL_LINE_BOX, ProjectileSpec, projectile_space
from .exceptions import ConfigError, NotAffineError
from .instances import RingDerivedAlgebra, RingWithHalf, real_field
from .report import DETECTION, AxiomReport
from .space import MobiSpace, is_affine

ROUNDTRIP_TOL = 1e-12


@dataclass(frozen=True)
class ModuleOverRing:
    """A module ``(M, add, zero, act)`` over ``ring``; ``sampler(n, rng)`` draws elements of M."""

    ring: RingWithHalf
    add: Callable[[Any, Any], Any]
    zero: Any
    act: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    sampler: Callable
    dist: Callable[[Any, Any], float] = euclidean
    contains: Callable[[Any], bool] = lambda x: True
    name: str = "module"

    def sample(self, n, seed=None):
        return self.sampler(n, np.random.default_rng(seed))


def check_module_laws(m: ModuleOverRing, seed=0, n: int = 1_000, tol: float = DETECTION):
    """Abelian-group laws of ``add`` and the four action laws, on samples."""
    rng = np.random.default_rng(seed)
    X, Y, Z = (m.sample(n, rng) for _ in range(3))
    A, B = m.ring.sample(n, rng), m.ring.sample(n, rng)
    r, add, act, d = m.ring, m.add, m.act, m.dist
    ids = ["add-assoc", "add-comm", "add-identity", "add-inverse",
           "act-one", "act-mul", "act-scalar-add", "act-vector-add"]
    reps = {k: AxiomReport(k) for k in ids}
    for x, y, z, a, b in zip(X, Y, Z, A, B):
        reps["add-assoc"].check_equal((x, y, z), add(add(x, y), z), add(x, add(y, z)), d, tol)
        reps["add-comm"].check_equal((x, y), add(x, y), add(y, x), d, tol)
        reps["add-identity"].check_equal((x,), add(x, m.zero), x, d, tol)
        reps["add-inverse"].check_equal((x,), add(x, m.neg(x)), m.zero, d, tol)
        reps["act-one"].check_equal((x,), act(r.one, x), x, d, tol)
        reps["act-mul"].check_equal((a, b, x), act(r.mul(a, b), x), act(a, act(b, x)), d, tol)
        reps["act-scalar-add"].check_equal(
            (a, b, x), act(r.add(a, b), x), add(act(a, x), act(b, x)), d, tol
        )
        reps["act-vector-add"].check_equal(
            (a, x, y), act(a, add(x, y)), add(act(a, x), act(a, y)), d, tol
        )
    return list(reps.values())


def _algebra_of(ring: RingWithHalf) -> RingDerivedAlgebra:
    return RingDerivedAlgebra(ring, name="real-line" if ring.name == "real" else None)


def module_to_mobi(m: ModuleOverRing, name: Optional[str] = None) -> MobiSpace:
    """The affine mobi space ``q(x, a, y) = phi_{1-a}(x) + phi_a(y)``."""
    r = m.ring

    def q(x, a, y):
        return m.add(m.act(r.sub(r.one, a), x), m.act(a, y))

    return MobiSpace(
        name or f"{m.name}-space",
        _algebra_of(r),
        q,
        m.contains,
        m.sampler,
        dist=m.dist,
        description=f"mobi space of the module {m.name}",
    )


def algebra_ring(alg) -> RingWithHalf:
    """Ring operations recovered from a mobi algebra that contains 2.

    ``a + b = p(0, 2, p(a, 1/2, b))``, ``a b = p(0, a, b)`` and ``-a = p(a, 2, 0)``.
    """
    two = alg.two
    if two is None:
        raise ConfigError(f"the {alg.name} algebra has no element 2")
    if alg.dist(alg.p(alg.zero, alg.half, two), alg.one) > 1e-12:
        raise ConfigError(f"the {alg.name} algebra: p(0, 1/2, 2) != 1")
    p, zero, half = alg.p, alg.zero, alg.half
    return RingWithHalf(
        name=alg.name,
        add=lambda a, b: p(zero, two, p(a, half, b)),
        mul=lambda a, b: p(zero, a, b),
        neg=lambda a: p(a, two, zero),
        zero=zero,
        one=alg.one,
        half=half,
        two=two,
        sampler=lambda n, rng: alg.sample(n, rng),
        contains=alg.contains,
        dist=alg.dist,
    )


def mobi_to_module(space: MobiSpace, e, check: bool = True, seed=0, n: int = 1_000,
                   tol: Optional[float] = None) -> ModuleOverRing:
    """Module on the points of an affine space with origin ``e``.

    With ``check`` the interchange law is sampled first and a
    :class:`NotAffineError` carrying the witness is raised if it fails.
    """
    alg = space.algebra
    if check:
        verdict = is_affine(space, seed=seed, n=n, tol=tol)
        if not verdict.affine:
            raise NotAffineError(f"{space.name} is not affine", verdict.witness)
    ring = algebra_ring(alg)
    q, two, half = space.q, alg.two, alg.half
    minus_one = alg.p(alg.one, two, alg.zero)
    e = np.asarray(e) if isinstance(e, (list, tuple)) else e
    return ModuleOverRing(
        ring=ring,
        add=lambda x, y: q(e, two, q(x, half, y)),
        zero=e,
        act=lambda a, x: q(e, a, x),
        neg=lambda x: q(e, minus_one, x),
        sampler=lambda k, rng: space.sample(k, rng),
        dist=space.dist,
        contains=space.contains,
        name=f"{space.name}-module",
    )


@dataclass
class RoundTrip:
    passed: bool
    reports: list

    def __bool__(self):
        return self.passed


def roundtrip_module(m: ModuleOverRing, seed=0, n: int = 1_000, tol: float = ROUNDTRIP_TOL) -> RoundTrip:
    """Module -> space -> module; compare ``add`` and ``act`` pointwise."""
    back = mobi_to_module(module_to_mobi(m), m.zero, check=False)
    rng = np.random.default_rng(seed)
    X, Y = m.sample(n, rng), m.sample(n, rng)
    A = m.ring.sample(n, rng)
    add_rep, act_rep = AxiomReport("add"), AxiomReport("act")
    for x, y, a in zip(X, Y, A):
        add_rep.check_equal((x, y), back.add(x, y), m.add(x, y), m.dist, tol)
        act_rep.check_equal((a, x), back.act(a, x), m.act(a, x), m.dist, tol)
    reps = [add_rep, act_rep]
    return RoundTrip(all(r.passed for r in reps), reps)


def roundtrip_space(space: MobiSpace, e, seed=0, n: int = 1_000, tol: float = ROUNDTRIP_TOL,
                    affine_tol: Optional[float] = None) -> RoundTrip:
    """Space -> module -> space; compare ``q`` pointwise.

    Raises :class:`NotAffineError` when the space fails the interchange law.
    """
    m = mobi_to_module(space, e, check=True, seed=seed, n=n, tol=affine_tol)
    back = module_to_mobi(m)
    rng = np.random.default_rng(seed)
    X, Y = space.sample_pairs(n, rng)
    A = space.algebra.sample(n, rng)
    rep = AxiomReport("q")
    for x, y, a in zip(X, Y, A):
        rep.check_equal((x, a, y), back.q(x, a, y), space.q(x, a, y), space.dist, tol)
    return RoundTrip(rep.passed, [rep])


# ---------------------------------------------------------------- stock modules


def vector_module(n: int = 1, ring: Optional[RingWithHalf] = None) -> ModuleOverRing:
    """``R^n`` with coordinatewise addition and scaling."""
    ring = ring or real_field(REAL_LINE_BOX)
    return ModuleOverRing(
        ring=ring,
        add=lambda x, y: x + y,
        zero=np.zeros(n),
        act=lambda a, x: a * x,
        neg=lambda x: -x,
        sampler=lambda k, rng: list(rng.uniform(-5.0, 5.0, size=(k, n))),
        contains=lambda x: np.shape(x) == (n,),
        name=f"R^{n}",
    )


def trivial_module(ring: Optional[RingWithHalf] = None) -> ModuleOverRing:
    """The zero module ``{e}``."""
    ring = ring or real_field(REAL_LINE_BOX)
    zero = np.zeros(1)
    return ModuleOverRing(
        ring=ring,
        add=lambda x, y: zero.copy(),
        zero=zero,
        act=lambda a, x: zero.copy(),
        neg=lambda x: zero.copy(),
        sampler=lambda k, rng: [zero.copy() for _ in range(k)],
        contains=lambda x: np.array_equal(x, zero),
        name="trivial",
    )


def projectile_module(k, ring: Optional[RingWithHalf] = None) -> ModuleOverRing:
    """Points ``(x, s)`` of ``R^(n+1)`` with ``(x,s) + (y,t) = (x + y - 2kst, s + t)``.

    The action is ``phi_a(x, s) = (a x + k a(1-a) s^2, a s)``.
    """
    ring = ring or real_field(REAL_LINE_BOX)
    kv = np.asarray(ProjectileSpec(k).k)
    dim = kv.shape[0] + 1

    def add(u, v):
        s, t = u[-1], v[-1]
        return np.concatenate([u[:-1] + v[:-1] - 2 * kv * s * t, [s + t]])

    def act(a, u):
        s = u[-1]
        return np.concatenate([a * u[:-1] + kv * (a * (1 - a) * s * s), [a * s]])

    def neg(u):
        s = u[-1]
        return np.concatenate([-u[:-1] - 2 * kv * s * s, [-s]])

    return ModuleOverRing(
        ring=ring,
        add=add,
        zero=np.zeros(dim),
        act=act,
        neg=neg,
        sampler=lambda n, rng: list(rng.uniform(-5.0, 5.0, size=(n, dim))),
        contains=lambda u: np.shape(u) == (dim,),
        name="projectile",
    )


def projectile_space_over_reals(k) -> MobiSpace:
    """The projectile space over the real-line algebra, ready for :func:`mobi_to_module`."""
    return projectile_space(ProjectileSpec(k), algebra="real-line")


def projectile_module_hom(k) -> Callable:
    """``f(x, s) = (x + k(s^2 - s), s)``, a module isomorphism onto ``R^(n+1)``."""
    kv = np.asarray(ProjectileSpec(k).k)

    def f(u):
        u = np.asarray(u, dtype=float)
        s = u[-1]
        return np.concatenate([u[:-1] + kv * (s * s - s), [s]])

    return f


def check_projectile_hom(k, seed=0, n: int = 1_000, tol: float = DETECTION):
    """``f(u + v) = f(u) + f(v)`` and ``f(phi_a u) = a f(u)`` on samples."""
    f = projectile_module_hom(k)
    m = projectile_module(k)
    rng = np.random.default_rng(seed)
    U, V = m.sample(n, rng), m.sample(n, rng)
    A = m.ring.sample(n, rng)
    hom_add, hom_act = AxiomReport("hom-add"), AxiomReport("hom-act")
    for u, v, a in zip(U, V, A):
        hom_add.check_equal((u, v), f(m.add(u, v)), f(u) + f(v), euclidean, tol)
        hom_act.check_equal((a, u), f(m.act(a, u)), a * f(u), euclidean, tol)
    return [hom_add, hom_act]
