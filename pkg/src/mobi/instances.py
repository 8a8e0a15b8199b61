"""Mobi algebras other than the unit interval.

* :class:`LozengeAlgebra` lives on the square rotated by 45 degrees inside
  ``[0, 1] x [-1/2, 1/2]``.
* :class:`RingDerivedAlgebra` turns any ring containing an inverse of 2 into a
  mobi algebra with ``p(a, b, c) = a + b c - b a``; :func:`real_line_algebra`
  and :func:`rational_algebra` are the two stock instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

import numpy as np

from .algebra import MEMBERSHIP_SLACK, MobiAlgebra, euclidean
from .report import DETECTION, AxiomReport


class LozengeAlgebra(MobiAlgebra):
    """Mobi algebra on ``{(t1, t2) : |t2| <= t1 <= 1 - |t2|}``.

    Elements are length-2 numpy arrays. Constants are ``(0, 0)``, ``(1/2, 0)``
    and ``(1, 0)``.
    """

    name = "lozenge"

    def __init__(self):
        self.zero = np.array([0.0, 0.0])
        self.half = np.array([0.5, 0.0])
        self.one = np.array([1.0, 0.0])

    def p(self, a, b, c):
        a1, a2 = a
        b1, b2 = b
        c1, c2 = c
        return np.array(
            [
                a1 - b1 * a1 - b2 * a2 + b1 * c1 + b2 * c2,
                a2 - b1 * a2 - b2 * a1 + b1 * c2 + b2 * c1,
            ]
        )

    def contains(self, a) -> bool:
        try:
            t1, t2 = (float(v) for v in a)
        except (TypeError, ValueError):
            return False
        s = MEMBERSHIP_SLACK
        return abs(t2) <= t1 + s and t1 <= 1 - abs(t2) + s

    def sample(self, n, seed=None):
        rng = np.random.default_rng(seed)
        t1 = rng.uniform(0.0, 1.0, size=n)
        half_width = np.minimum(t1, 1.0 - t1)
        t2 = rng.uniform(-1.0, 1.0, size=n) * half_width
        return [np.array([u, v]) for u, v in zip(t1, t2)]


@dataclass(frozen=True)
class RingWithHalf:
    """A commutative unitary ring in which ``1 + 1`` is invertible.

    ``sampler(n, rng)`` draws ring elements for property checks; ``dist`` is
    the metric used to compare them.
    """

    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    neg: Callable[[Any], Any]
    zero: Any
    one: Any
    half: Any
    two: Optional[Any] = None
    sampler: Optional[Callable] = None
    contains: Callable[[Any], bool] = field(default=lambda a: True)
    dist: Callable[[Any, Any], float] = euclidean

    def __post_init__(self):
        if self.dist(self.add(self.half, self.half), self.one) > 1e-12:
            raise ValueError(f"{self.name}: half + half != one")
        if self.two is not None and self.dist(self.mul(self.two, self.half), self.one) > 1e-12:
            raise ValueError(f"{self.name}: two * half != one")

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sample(self, n, seed=None):
        if self.sampler is None:
            raise NotImplementedError(f"ring {self.name} has no sampler")
        return self.sampler(n, np.random.default_rng(seed))


def _uniform_box(lo, hi):
    def sampler(n, rng):
        return rng.uniform(lo, hi, size=n).tolist()

    return sampler


def _rational_sampler(n, rng):
    nums = rng.integers(-200, 201, size=n)
    dens = rng.integers(1, 31, size=n)
    return [Fraction(int(p), int(q)) for p, q in zip(nums, dens)]


def real_field(box: float = 10.0) -> RingWithHalf:
    """The real numbers as floats; samples are drawn from ``[-box, box]``."""
    return RingWithHalf(
        name="real",
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        neg=lambda a: -a,
        zero=0.0,
        one=1.0,
        half=0.5,
        two=2.0,
        sampler=_uniform_box(-box, box),
        contains=lambda a: isinstance(a, (int, float, Fraction, np.floating)) and np.isfinite(float(a)),
    )


def rational_field() -> RingWithHalf:
    """The rationals with exact :class:`~fractions.Fraction` arithmetic."""
    return RingWithHalf(
        name="rational",
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        neg=lambda a: -a,
        zero=Fraction(0),
        one=Fraction(1),
        half=Fraction(1, 2),
        two=Fraction(2),
        sampler=_rational_sampler,
        contains=lambda a: isinstance(a, (int, Fraction)),
    )


class RingDerivedAlgebra(MobiAlgebra):
    """The mobi algebra ``(R, a + b c - b a, 0, 1/2, 1)`` of a ring with one half."""

    def __init__(self, ring: RingWithHalf, name: Optional[str] = None):
        self.ring = ring
        self.name = name or f"{ring.name}-ring"
        self.zero, self.half, self.one, self.two = ring.zero, ring.half, ring.one, ring.two

    def p(self, a, b, c):
        r = self.ring
        return r.add(a, r.sub(r.mul(b, c), r.mul(b, a)))

    def contains(self, a) -> bool:
        return self.ring.contains(a)

    def sample(self, n, seed=None):
        return self.ring.sample(n, seed)

    def dist(self, a, b) -> float:
        return self.ring.dist(a, b)

    def __repr__(self):
        return f"RingDerivedAlgebra({self.ring.name!r})"


def real_line_algebra(box: float = 10.0) -> RingDerivedAlgebra:
    """``(R, p, 0, 1/2, 1)`` with samples restricted to ``[-box, box]``."""
    return RingDerivedAlgebra(real_field(box), name="real-line")


def rational_algebra() -> RingDerivedAlgebra:
    """The ring-derived algebra over Q, computed exactly."""
    return RingDerivedAlgebra(rational_field(), name="rational")


def check_ring_laws(ring: RingWithHalf, seed=0, n: int = 1_000, tol: float = DETECTION):
    """Sampled check of the commutative-ring laws used by the module bridge."""
    rng = np.random.default_rng(seed)
    A, B, C = (ring.sample(n, rng) for _ in range(3))
    add, mul, d = ring.add, ring.mul, ring.dist
    ids = [
        "add-assoc",
        "add-comm",
        "add-identity",
        "add-inverse",
        "mul-assoc",
        "mul-comm",
        "mul-identity",
        "distributive",
    ]
    reps = {k: AxiomReport(k) for k in ids}
    for a, b, c in zip(A, B, C):
        reps["add-assoc"].check_equal((a, b, c), add(add(a, b), c), add(a, add(b, c)), d, tol)
        reps["add-comm"].check_equal((a, b), add(a, b), add(b, a), d, tol)
        reps["add-identity"].check_equal((a,), add(a, ring.zero), a, d, tol)
        reps["add-inverse"].check_equal((a,), add(a, ring.neg(a)), ring.zero, d, tol)
        reps["mul-assoc"].check_equal((a, b, c), mul(mul(a, b), c), mul(a, mul(b, c)), d, tol)
        reps["mul-comm"].check_equal((a, b), mul(a, b), mul(b, a), d, tol)
        reps["mul-identity"].check_equal((a,), mul(ring.one, a), a, d, tol)
        reps["distributive"].check_equal(
            (a, b, c), mul(a, add(b, c)), add(mul(a, b), mul(a, c)), d, tol
        )
    return list(reps.values())
