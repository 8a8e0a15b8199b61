"""Mobi algebras: a carrier with a ternary operation ``p`` and constants 0, 1/2, 1.

The operation ``p(a, b, c)`` reads as "the position at instant ``b`` of a
particle travelling from ``a`` to ``c``". The canonical instance is the unit
interval with ``p(a, b, c) = (1 - b) a + b c``.

Besides the abstraction this module holds the sampling harness that checks
the eight defining laws, the derived identities, and the midpoint-algebra laws
of ``x (+) y = p(x, 1/2, y)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Sequence

import numpy as np

from .exceptions import DomainError
from .report import DETECTION, SEPARATION, AxiomReport

# Membership slack for floating carriers; rounding can push p(a, b, c) one ulp
# outside a closed carrier.
MEMBERSHIP_SLACK = 1e-12


def euclidean(u, v) -> float:
    """Euclidean distance for scalars or coordinate arrays (exact types allowed)."""
    diff = np.asarray(u) - np.asarray(v)
    if np.ndim(diff) == 0:
        return float(abs(diff.item() if isinstance(diff, np.ndarray) else diff))
    return float(np.linalg.norm(diff.astype(float)))


class MobiAlgebra:
    """Base class for mobi algebras.

    Subclasses provide ``p``, ``contains``, ``sample`` and the three constants.
    ``dist`` defaults to the Euclidean distance on the coordinates.
    """

    name = "abstract"
    zero: Any = None
    half: Any = None
    one: Any = None
    # Inverse of 1/2 in the sense p(0, 1/2, two) == one; None when absent.
    two: Any = None

    def p(self, a, b, c):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def sample(self, n: int, seed=None) -> list:
        raise NotImplementedError

    def dist(self, a, b) -> float:
        return euclidean(a, b)

    def eq(self, a, b, tol: float = 0.0) -> bool:
        return self.dist(a, b) <= tol

    def __repr__(self):
        return f"{type(self).__name__}()"


class CanonicalAlgebra(MobiAlgebra):
    """The unit interval ``[0, 1]`` with ``p(a, b, c) = (1 - b) a + b c``.

    Works with floats and with :class:`fractions.Fraction` values; with
    ``exact=True`` the constants are fractions too.
    """

    name = "canonical"

    def __init__(self, exact: bool = False):
        if exact:
            self.zero, self.half, self.one = Fraction(0), Fraction(1, 2), Fraction(1)
        else:
            self.zero, self.half, self.one = 0.0, 0.5, 1.0

    def p(self, a, b, c):
        return (1 - b) * a + b * c

    def contains(self, a) -> bool:
        if isinstance(a, Fraction):
            return 0 <= a <= 1
        try:
            a = float(a)
        except (TypeError, ValueError):
            return False
        return -MEMBERSHIP_SLACK <= a <= 1 + MEMBERSHIP_SLACK

    def sample(self, n, seed=None):
        rng = np.random.default_rng(seed)
        return rng.uniform(0.0, 1.0, size=n).tolist()


def _require(alg: MobiAlgebra, *elements) -> None:
    for x in elements:
        if not alg.contains(x):
            raise DomainError(f"{x!r} is not an element of the {alg.name} algebra")


def p_eval(alg: MobiAlgebra, a, b, c):
    """Evaluate ``p(a, b, c)`` after checking that the inputs are in the carrier."""
    _require(alg, a, b, c)
    return alg.p(a, b, c)


def complement(alg: MobiAlgebra, a):
    """``p(1, a, 0)``: the instant ``a`` read backwards."""
    return p_eval(alg, alg.one, a, alg.zero)


def product(alg: MobiAlgebra, a, b):
    """``p(0, a, b)``."""
    return p_eval(alg, alg.zero, a, b)


def oplus(alg: MobiAlgebra, a, b):
    """Midpoint ``p(a, 1/2, b)``."""
    return p_eval(alg, a, alg.half, b)


def circ(alg: MobiAlgebra, a, b):
    """``p(a, b, 1)``."""
    return p_eval(alg, a, b, alg.one)


def check_closure(alg: MobiAlgebra, seed=0, n_samples: int = 10_000) -> AxiomReport:
    """Check that ``p`` of sampled triples stays in the carrier."""
    rng = np.random.default_rng(seed)
    A, B, C = (alg.sample(n_samples, rng) for _ in range(3))
    rep = AxiomReport("closure")
    for a, b, c in zip(A, B, C):
        r = alg.p(a, b, c)
        rep.check_holds((a, b, c), alg.contains(r), r)
    return rep


def check_algebra_axioms(
    alg: MobiAlgebra,
    seed=0,
    n_samples: int = 10_000,
    tol: float = DETECTION,
    separation: float = SEPARATION,
) -> list[AxiomReport]:
    """Check the eight mobi-algebra laws A1..A8 on random samples.

    A6 (cancellation) is an implication and is checked contrapositively:
    for ``dist(b1, b2) >= separation`` the midpoints ``p(a, 1/2, b_i)`` must
    be at least ``tol`` apart.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    rng = np.random.default_rng(seed)
    p, d = alg.p, alg.dist
    zero, half, one = alg.zero, alg.half, alg.one
    A, B, C, D, E = (alg.sample(n_samples, rng) for _ in range(5))

    a1 = AxiomReport("A1")
    a1.check_equal((one, half, zero), p(one, half, zero), half, d, tol)

    a2, a3, a4, a5 = (AxiomReport(f"A{i}") for i in (2, 3, 4, 5))
    a6, a7, a8 = AxiomReport("A6"), AxiomReport("A7"), AxiomReport("A8")
    for a, b, c, u, v in zip(A, B, C, D, E):
        a2.check_equal((a,), p(zero, a, one), a, d, tol)
        a3.check_equal((a, b), p(a, b, a), a, d, tol)
        a4.check_equal((a, b), p(a, zero, b), a, d, tol)
        a5.check_equal((a, b), p(a, one, b), b, d, tol)
        if d(b, c) >= separation:
            a6.check_separated((a, b, c), p(a, half, b), p(a, half, c), d, tol)
        # A7 with (c1, c2, c3) = (c, u, v) and endpoints a, b
        a7.check_equal(
            (a, b, c, u, v),
            p(a, p(c, u, v), b),
            p(p(a, c, b), u, p(a, v, b)),
            d,
            tol,
        )
        # A8 with a1=a, a2=b, b1=c, b2=u and shared parameter v
        a8.check_equal(
            (a, b, c, u, v),
            p(p(a, v, c), half, p(b, v, u)),
            p(p(a, half, b), v, p(c, half, u)),
            d,
            tol,
        )
    return [a1, a2, a3, a4, a5, a6, a7, a8]


DERIVED_IDS = (
    "bar-half",
    "half-product-symmetric",
    "half-product-injective",
    "bar-midpoint",
    "bar-fixed-point",
    "bar-distributes",
    "p-reversal",
    "bar-circ",
    "half-product-p",
)


def check_derived_properties(
    alg: MobiAlgebra,
    seed=0,
    n: int = 1_000,
    tol: float = DETECTION,
    separation: float = SEPARATION,
) -> list[AxiomReport]:
    """Check identities implied by the axioms.

    ``half-product-injective`` and ``bar-fixed-point`` are implications and
    are checked contrapositively on separated inputs.
    """
    rng = np.random.default_rng(seed)
    p, d = alg.p, alg.dist
    zero, half, one = alg.zero, alg.half, alg.one
    bar = lambda a: p(one, a, zero)  # noqa: E731
    dot = lambda a, b: p(zero, a, b)  # noqa: E731
    mid = lambda a, b: p(a, half, b)  # noqa: E731
    cir = lambda a, b: p(a, b, one)  # noqa: E731

    reps = {k: AxiomReport(k) for k in DERIVED_IDS}
    reps["bar-half"].check_equal((half,), bar(half), half, d, tol)
    A, B, C = (alg.sample(n, rng) for _ in range(3))
    for a, b, c in zip(A, B, C):
        reps["half-product-symmetric"].check_equal((a,), dot(a, half), dot(half, a), d, tol)
        reps["half-product-symmetric"].check_equal((a,), dot(half, a), mid(zero, a), d, tol)
        if d(a, b) >= separation:
            reps["half-product-injective"].check_separated((a, b), dot(half, a), dot(half, b), d, tol)
        reps["bar-midpoint"].check_equal((a,), p(bar(a), half, a), half, d, tol)
        if d(a, half) >= separation:
            reps["bar-fixed-point"].check_separated((a,), bar(a), a, d, tol)
        reps["bar-distributes"].check_equal((a, b, c), bar(p(a, b, c)), p(bar(a), b, bar(c)), d, tol)
        reps["p-reversal"].check_equal((a, b, c), p(c, b, a), p(a, bar(b), c), d, tol)
        reps["bar-circ"].check_equal((a, b), bar(cir(a, b)), dot(bar(b), bar(a)), d, tol)
        reps["half-product-p"].check_equal(
            (a, b, c), dot(half, p(a, b, c)), mid(dot(bar(b), a), dot(b, c)), d, tol
        )
    return list(reps.values())


def check_midpoint_axioms(
    oplus_op: Callable[[Any, Any], Any],
    sampler: Callable[..., Sequence],
    seed=0,
    n: int = 1_000,
    tol: float = DETECTION,
    dist: Callable[[Any, Any], float] = euclidean,
    separation: float = SEPARATION,
) -> list[AxiomReport]:
    """Check idempotency, commutativity, cancellation and mediality of ``oplus_op``.

    ``sampler(n, rng)`` must return ``n`` elements of the carrier.
    """
    rng = np.random.default_rng(seed)
    X, Y, Z, W = (sampler(n, rng) for _ in range(4))
    idem = AxiomReport("idempotency")
    comm = AxiomReport("commutativity")
    canc = AxiomReport("cancellation")
    med = AxiomReport("mediality")
    m = oplus_op
    for x, y, z, w in zip(X, Y, Z, W):
        idem.check_equal((x,), m(x, x), x, dist, tol)
        comm.check_equal((x, y), m(x, y), m(y, x), dist, tol)
        if dist(x, z) >= separation:
            canc.check_separated((x, z, y), m(x, y), m(z, y), dist, tol)
        med.check_equal(
            (x, y, z, w), m(m(x, y), m(z, w)), m(m(x, z), m(y, w)), dist, tol
        )
    return [idem, comm, canc, med]
