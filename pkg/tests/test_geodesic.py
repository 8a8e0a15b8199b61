import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobi import geodesic as G
from mobi import registry
from mobi.algebra import check_midpoint_axioms
from mobi.exceptions import AntipodalError
from mobi.space import check_space_axioms, is_affine

from conftest import assert_all_pass, close, failing_ids

E1, E2, E3 = np.eye(3)


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


# ------------------------------------------------------------- f, g family


@pytest.mark.parametrize("kind", ["trig", "hyperbolic", "linear"])
def test_fg_identities_float_relative(kind):
    assert_all_pass(G.check_fg_identities(G.FAMILIES[kind], seed=0, n=1000, tol=1e-12))


@pytest.mark.parametrize("kind", ["trig", "hyperbolic", "linear"])
def test_fg_identities_high_precision_absolute(kind):
    assert_all_pass(G.check_fg_identities(G.FAMILIES[kind], seed=0, n=200, tol=1e-12, dps=40))


def test_fg_harness_detects_wrong_pair():
    class Mixed(G.FGFamily):
        @property
        def alpha_sq(self):
            return 1  # trig functions with the hyperbolic sign

    bad = failing_ids(G.check_fg_identities(Mixed("trig"), n=50))
    assert {"pythagorean", "g-addition"} <= bad


def test_family_values():
    assert G.TRIG.f(0.5) == math.sin(0.5) and G.HYPERBOLIC.g(0.5) == math.cosh(0.5)
    assert G.LINEAR.f(0.5) == 0.5 and G.LINEAR.g(0.5) == 1
    assert G.TRIG.first_zero == math.pi and G.HYPERBOLIC.first_zero is None
    with pytest.raises(ValueError):
        G.FGFamily("complex")


def test_series_ratio_matches_direct():
    with mpmath.workdps(50):
        for w in (1e-7, 5e-7, 9.9e-7):
            for t in (0.1, 0.5, 0.9):
                want = float(mpmath.sin(mpmath.mpf(w) * t) / mpmath.sin(mpmath.mpf(w)))
                assert G.TRIG.ratio(w, t) == pytest.approx(want, rel=1e-15)
                want = float(mpmath.sinh(mpmath.mpf(w) * t) / mpmath.sinh(mpmath.mpf(w)))
                assert G.HYPERBOLIC.ratio(w, t) == pytest.approx(want, rel=1e-15)


# ------------------------------------------------------------- angles


def test_theta_sphere_examples():
    assert G.theta_sphere(E1, E1) == 0.0
    assert G.theta_sphere(E1, -E1) == pytest.approx(math.pi, abs=1e-15)
    assert G.theta_sphere(E1, E2) == pytest.approx(math.pi / 2, abs=1e-15)


def test_theta_sphere_matches_high_precision_arccos():
    rng = np.random.default_rng(0)
    for _ in range(200):
        x, y = unit(rng.normal(size=3)), unit(rng.normal(size=3))
        with mpmath.workdps(40):
            xm = [mpmath.mpf(float(v)) for v in x]
            ym = [mpmath.mpf(float(v)) for v in y]
            nx = mpmath.sqrt(sum(v * v for v in xm))
            ny = mpmath.sqrt(sum(v * v for v in ym))
            want = float(mpmath.acos(sum(a * b for a, b in zip(xm, ym)) / (nx * ny)))
        assert G.theta_sphere(x, y) == pytest.approx(want, abs=1e-14)


def test_theta_hyperbolic_examples():
    x = np.array([1.0, 0.0])
    assert G.theta_hyperbolic(x, x) == 0.0
    assert G.theta_hyperbolic(x, np.array([math.cosh(1), math.sinh(1)])) == pytest.approx(1.0, abs=1e-15)
    a, b = -0.7, 1.9
    pa = np.array([math.cosh(a), math.sinh(a)])
    pb = np.array([math.cosh(b), math.sinh(b)])
    assert G.theta_hyperbolic(pa, pb) == pytest.approx(b - a, abs=1e-14)


def test_lorentz_inner_signature():
    assert G.lorentz_inner([2.0, 1.0, 3.0], [1.0, 4.0, 5.0]) == -2.0 + 4.0 + 15.0


def test_model_membership():
    assert G.on_sphere(E2, 3) and not G.on_sphere(E2, 2) and not G.on_sphere(2 * E2)
    assert G.on_hyperboloid([1.0, 0.0]) and not G.on_hyperboloid([-1.0, 0.0])
    assert not G.on_hyperboloid([1.0, 0.5])


# ------------------------------------------------------------- geodesic_q


def test_geodesic_examples():
    got = G.geodesic_q(G.TRIG, G.theta_sphere, E1, 0.5, E2)
    assert close(got, (math.sqrt(0.5), math.sqrt(0.5), 0.0), 1e-15)
    got = G.geodesic_q(G.HYPERBOLIC, G.theta_hyperbolic, [1.0, 0.0], 0.5, [math.cosh(1), math.sinh(1)])
    assert close(got, (math.cosh(0.5), math.sinh(0.5)), 1e-15)
    assert np.array_equal(G.geodesic_q(G.TRIG, G.theta_sphere, E1, 0.0, E2), E1)


def test_antipodal_needs_chooser():
    with pytest.raises(AntipodalError):
        G.geodesic_q(G.TRIG, G.theta_sphere, E1, 0.5, -E1)


def test_antipodal_collar():
    # inside the 1e-9 collar the chooser branch is used, just outside it is not
    c = G.chooser_s2_pole()
    d = 1e-10
    y_in = np.array([-math.cos(d), math.sin(d), 0.0])
    assert G.theta_sphere(E1, y_in) >= math.pi - 1e-9
    # chooser branch: cos(theta/2) x + sin(theta/2) v(x), i.e. through the pole
    assert close(G.geodesic_q(G.TRIG, G.theta_sphere, E1, 0.5, y_in, c), c(E1), 1e-9)
    d = 1e-8
    y_out = np.array([-math.cos(d), math.sin(d), 0.0])
    mid = G.geodesic_q(G.TRIG, G.theta_sphere, E1, 0.5, y_out, c)
    assert close(mid, (0.0, 1.0, 0.0), 1e-7)


def test_circle_antipodal_example():
    S = registry.get_space("slerp-s1")
    assert close(S.q(np.array([1.0, 0.0]), 0.5, np.array([-1.0, 0.0])), (0.0, 1.0), 1e-15)


def test_antipodal_reversal_symmetry():
    for name in ("slerp-s1", "slerp-s2-pole", "slerp-s2-equator"):
        S = registry.get_space(name)
        for x in S.sample(300, 3):
            for t in (0.1, 0.5, 0.8):
                assert close(S.q(x, t, -x), S.q(-x, 1 - t, x), 1e-12)


# ------------------------------------------------------------- choosers


def test_chooser_examples():
    pole = G.chooser_s2_pole()
    assert close(pole(E3), E1, 0) and close(pole(-E3), E1, 0)
    x = unit([0.3, -0.4, 0.5])
    r = math.sqrt(1 - x[2] ** 2)
    assert close(pole(x), (-x[0] * x[2] / r, -x[1] * x[2] / r, r), 1e-15)
    eq = G.chooser_s2_equator()
    assert close(eq(E3), eq(-E3), 0)
    circ = G.chooser_circle()
    assert close(circ(np.array([1.0, 0.0])), (0.0, 1.0), 0)
    assert close(circ(np.array([-1.0, 0.0])), (0.0, 1.0), 0)


@pytest.mark.parametrize("make", [G.chooser_circle, G.chooser_s2_pole, G.chooser_s2_equator])
def test_chooser_invariants(make):
    assert_all_pass(G.check_chooser(make(), seed=1, n=10_000))


def test_chooser_dimension_must_match():
    with pytest.raises(ValueError):
        G.slerp_space(1, G.chooser_s2_pole())


# ------------------------------------------------------------- spaces


@settings(max_examples=300, deadline=None)
@given(st.lists(st.floats(-1, 1), min_size=3, max_size=3), st.lists(st.floats(-1, 1), min_size=3, max_size=3),
       st.floats(0, 1))
def test_slerp_norm_property(xv, yv, t):
    if np.linalg.norm(xv) < 1e-3 or np.linalg.norm(yv) < 1e-3:
        return
    x, y = unit(xv), unit(yv)
    for name in ("slerp-s2-pole", "slerp-s2-equator"):
        z = registry.get_space(name).q(x, t, y)
        assert abs(float(z @ z) - 1) <= 1e-9


def test_hyperbolic_norm_and_scaling():
    H = G.hyperbolic_space(3)
    X, Y = H.sample_pairs(2000, 0)
    rng = np.random.default_rng(1)
    for x, y in zip(X, Y):
        a, c = rng.uniform(0, 1, 2)
        u, v = H.q(x, a, y), H.q(x, c, y)
        assert abs(G.lorentz_inner(u, u) + 1) <= 1e-9 * max(1.0, u[0] ** 2)
        assert G.theta_hyperbolic(u, v) == pytest.approx(G.theta_hyperbolic(x, y) * abs(c - a), abs=1e-9)


def test_hemisphere_stays_on_hemisphere():
    S = registry.get_space("slerp-hemisphere")
    assert_all_pass(check_space_axioms(S, seed=2, n=500))
    assert not S.contains(-E1)


def test_sphere_not_affine():
    v = is_affine(registry.get_space("slerp-s2-pole"), seed=0, n=200)
    assert not v.affine and v.witness.dist > 1e-6


def test_forty_fifth_parallel():
    S = registry.get_space("slerp-s2-pole")
    m = lambda u, w: S.q(u, 0.5, w)  # noqa: E731
    a, b, n = E1, E2, E3
    lhs = m(m(a, b), m(n, n))
    rhs = m(m(a, n), m(b, n))
    assert lhs[2] == pytest.approx(math.sqrt(0.5), abs=1e-12)
    assert rhs[2] == pytest.approx(math.sqrt(2 / 3), abs=1e-12)
    reps = check_midpoint_axioms(m, lambda k, rng: G.sample_sphere(k, 3, rng), seed=0, n=200, tol=1e-6)
    assert failing_ids(reps) == {"mediality"}
