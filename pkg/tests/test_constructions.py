import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mobi import constructions as C
from mobi import registry
from mobi.exceptions import ConfigError, SingularSystemError
from mobi.space import check_space_axioms, check_space_properties, interchange, is_affine

from conftest import assert_all_pass, close

F = Fraction


def generic(f, g, K=lambda y: 0.0, name="generic", base_y=None):
    """Linear pair space through the 2x2 closed-form solver."""
    spec = C.LinearPairSpec(f, g, K, base_y or C.fibre_line(-math.inf, math.inf, True, True, -5, 5),
                            C.canonical_space(1))
    return C.linear_pair_space(spec, name)


def pt(*v):
    return np.array(v, dtype=float)


def exact(*v):
    return np.array([F(x) for x in v], dtype=object)


def separated_draws(n, seed, s_lo, s_hi, gap=1e-2):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        x, y = rng.uniform(-5, 5, 2)
        s, t = rng.uniform(s_lo, s_hi, 2)
        if abs(s - t) >= gap:
            out.append((pt(x, s), rng.uniform(0, 1), pt(y, t)))
    return out


def sympy_pair_q(fexpr, z1, a, z2):
    """Exact q through a symbolic solve of alpha f(s_i) + beta = x_i."""
    s, al, be = sympy.symbols("s alpha beta")
    (x, u), (y, v) = z1, z2
    f = sympy.Lambda(s, fexpr(s))
    sol = sympy.solve([al * f(u) + be - x, al * f(v) + be - y], [al, be], dict=True)[0]
    w = u + a * (v - u)
    return sol[al] * f(w) + sol[be], w


# ------------------------------------------------------------- closed forms


@pytest.mark.parametrize(
    "name,f,lo,hi",
    [
        ("sq-pair", lambda s: s * s, 0.0, 5.0),
        ("inv-pair", lambda s: 1.0 / s, 0.2, 5.0),
        ("cube-pair", lambda s: s ** 3, -3.0, 3.0),
    ],
)
def test_closed_forms_match_generic_solver(name, f, lo, hi):
    closed = registry.get_space(name)
    gen = generic(f, lambda s: 1.0)
    for z1, a, z2 in separated_draws(300, 7, lo, hi):
        assert close(closed.q(z1, a, z2), gen.q(z1, a, z2), 1e-12)


@pytest.mark.parametrize(
    "name,fexpr,z1,a,z2",
    [
        ("sq-pair", lambda s: s ** 2, (F(1), F(1, 2)), F(1, 3), (F(-2), F(3))),
        ("sq-pair", lambda s: s ** 2, (F(0), F(0)), F(2, 7), (F(5), F(2))),
        ("inv-pair", lambda s: 1 / s, (F(1), F(1, 2)), F(3, 4), (F(4), F(5, 3))),
        ("cube-pair", lambda s: s ** 3, (F(1), F(-1)), F(1, 5), (F(3), F(2))),
    ],
)
def test_closed_forms_match_symbolic_solve(name, fexpr, z1, a, z2):
    space = registry.get_space(name)
    got = space.q(exact(*z1), a, exact(*z2))
    want_x, want_s = sympy_pair_q(fexpr, [sympy.Rational(str(v)) for v in z1], sympy.Rational(str(a)),
                                  [sympy.Rational(str(v)) for v in z2])
    assert sympy.Rational(str(got[0])) == want_x
    assert sympy.Rational(str(got[1])) == want_s


def test_sq_pair_matches_hand_formula_through_generic_solver():
    # x + (y - x)(2 r t + (s - r) t^2)/(r + s), written for q((x,r), t, (y,s))
    gen = generic(lambda s: s * s, lambda s: 1.0)
    for (x, r), t, (y, s) in [(z1, a, z2) for z1, a, z2 in separated_draws(200, 3, 0.0, 5.0)]:
        want = (x + (y - x) * (2 * r * t + (s - r) * t * t) / (r + s), r + t * (s - r))
        assert close(gen.q(pt(x, r), t, pt(y, s)), want, 1e-12)


def test_inv_pair_formula():
    S = registry.get_space("inv-pair")
    x, s, y, t, a = 1.0, 2.0, -3.0, 0.5, 0.25
    assert close(S.q(pt(x, s), a, pt(y, t)), (x + (y - x) * a * t / ((1 - a) * s + a * t), s + a * (t - s)), 1e-15)


def test_cube_pair_zero_fibre_branch():
    S = registry.get_space("cube-pair")
    assert close(S.q(pt(2.0, 0.0), 0.25, pt(6.0, 0.0)), (3.0, 0.0), 0)
    # no limit at (0, 0): approaching along different rays gives different values
    e = 1e-6
    v1 = S.q(pt(0.0, e), 0.5, pt(1.0, -e))[0]
    v2 = S.q(pt(0.0, e), 0.5, pt(1.0, 2 * e))[0]
    assert abs(v1 - v2) > 0.1


def test_equal_fibre_branch_is_straight_line():
    for name in ("sq-pair", "inv-pair", "cube-pair", "general-f-pair", "damping-over", "damping-under"):
        S = registry.get_space(name)
        assert close(S.q(pt(1.0, 0.5), 0.3, pt(3.0, 0.5)), (1.6, 0.5), 1e-15)


@pytest.mark.parametrize("name", ["sq-pair", "inv-pair"])
def test_branch_continuity(name):
    # The generic branch tends to the equal-fibre branch as t -> s. The raw gap
    # at t = s + d is first order in d, so the limit is estimated from
    # d = 1e-4 and 2e-4 by linear extrapolation and compared within 1e-6.
    S = registry.get_space(name)
    rng = np.random.default_rng(2)
    d = 1e-4
    for _ in range(200):
        x, y = rng.uniform(-5, 5, 2)
        s = rng.uniform(0.5, 4.0)
        a = rng.uniform()
        on = S.q(pt(x, s), a, pt(y, s))[0]
        near1 = S.q(pt(x, s), a, pt(y, s + d))[0]
        near2 = S.q(pt(x, s), a, pt(y, s + 2 * d))[0]
        assert abs(2 * near1 - near2 - on) <= 1e-6
        assert abs(near1 - on) <= abs(near2 - on) + 1e-15


def test_general_f_pair_defaults_and_symmetry():
    S = registry.get_space("general-f-pair")
    fn = math.exp
    x, s, y, t, a = 1.0, -1.0, 4.0, 1.5, 0.4
    want = x + (y - x) * (fn(s + (t - s) * a) - fn(s)) / (fn(t) - fn(s))
    assert close(S.q(pt(x, s), a, pt(y, t)), (want, s + a * (t - s)), 1e-14)
    # Y1: q((x,s), 1-a, (y,t)) = q((y,t), a, (x,s))
    assert close(S.q(pt(x, s), 1 - a, pt(y, t)), S.q(pt(y, t), a, pt(x, s)), 1e-13)


def test_general_f_pair_custom_function():
    S = registry.get_space("general-f-pair", {"f": "s**3 + s", "lo": -3, "hi": 3})
    assert_all_pass(check_space_axioms(S, seed=4, n=300))
    assert_all_pass(check_space_properties(S, seed=4, n=300), only={"Y1", "Y2"})


@pytest.mark.parametrize("params", [{"f": "s**2", "lo": -1, "hi": 1}, {"f": "exp(", "lo": 0, "hi": 1},
                                    {"f": "s*x"}, {"f": "1/s", "lo": -1, "hi": 1}, {"lo": 2, "hi": 1}])
def test_general_f_pair_rejects_bad_config(params):
    with pytest.raises(ConfigError):
        registry.get_space("general-f-pair", params)


@settings(max_examples=200, deadline=None)
@given(st.floats(-5, 5), st.floats(0, 5), st.floats(-5, 5), st.floats(0, 5), st.floats(0, 1))
def test_sq_pair_reversal(x, s, y, t, a):
    S = registry.get_space("sq-pair")
    if s + t == 0 and s != t:
        return
    assert close(S.q(pt(x, s), 1 - a, pt(y, t)), S.q(pt(y, t), a, pt(x, s)), 1e-11)


# ------------------------------------------------------------- solvers


def test_linear_solve_matches_numpy():
    spec = C.LinearPairSpec(math.exp, math.cos, lambda y: np.array([y * y]),
                            C.fibre_line(-1, 1), C.canonical_space(1))
    rng = np.random.default_rng(0)
    for _ in range(100):
        y1, y2 = rng.uniform(-1, 1, 2)
        x1, x2 = rng.uniform(-5, 5, (2, 1))
        al, be = C.linear_solve(spec, x1, y1, x2, y2)
        M = np.array([[math.exp(y1), math.cos(y1)], [math.exp(y2), math.cos(y2)]])
        want = np.linalg.solve(M, np.array([x1[0] + y1 * y1, x2[0] + y2 * y2]))
        assert close([al[0], be[0]], want, 1e-9)


def test_singular_system_raises():
    S = generic(lambda s: s, lambda s: 2 * s)
    with pytest.raises(SingularSystemError):
        S.q(pt(0.0, 1.0), 0.5, pt(1.0, 2.0))


def test_alpha_beta_pow_formula_and_branch():
    S = registry.get_space("alpha-beta-pow")
    x1, y1, x2, y2, a = 2.0, 0.5, 8.0, 3.0, 1 / 3
    assert close(S.q(pt(x1, y1), a, pt(x2, y2)), (x1 ** (1 - a) * x2 ** a, y1 + a * (y2 - y1)), 1e-13)
    assert close(S.q(pt(x1, y1), a, pt(x2, y1)), (x1 ** (1 - a) * x2 ** a, y1), 1e-13)


def test_pair_solver_round_trip():
    spec = C.PairSpec(
        h=lambda mu, y, lam: np.exp(mu + lam * np.asarray(y)),
        solve=lambda x1, y1, x2, y2: (np.log(x1) - (np.log(x2) - np.log(x1)) / (y2 - y1) * y1,
                                      (np.log(x2) - np.log(x1)) / (y2 - y1)),
        base_x=registry.get_space("geometric-mean"),
        base_y=C.fibre_line(0, 5),
    )
    assert C.check_pair_solver(spec, seed=1, n=500)
    broken = C.PairSpec(spec.h, lambda *args: (0.0, 0.0), spec.base_x, spec.base_y)
    assert not C.check_pair_solver(broken, seed=1, n=50)


def test_transport_identity_is_bitwise_canonical():
    base = C.canonical_space(1)
    ident = C.transport_space(C.TransportSpec(lambda x: x, lambda x: x, base), "ident",
                              base.contains, base._sampler)
    rng = np.random.default_rng(0)
    for _ in range(200):
        x, y = rng.uniform(-5, 5, (2, 1))
        a = rng.uniform()
        assert np.array_equal(ident.q(x, a, y), base.q(x, a, y))


def test_transport_examples():
    gm, hm = registry.get_space("geometric-mean"), registry.get_space("harmonic")
    assert gm.q(pt(1.0), 0.5, pt(4.0))[0] == pytest.approx(2.0, abs=1e-15)
    assert hm.q(pt(1.0), 0.5, pt(3.0))[0] == pytest.approx(1.5, abs=1e-15)
    x, y, a = 2.0, 7.0, 0.3
    assert hm.q(pt(x), a, pt(y))[0] == pytest.approx(x * y / (a * x + (1 - a) * y), rel=1e-14)
    spec = C.TransportSpec(np.log, np.exp, C.canonical_space(1))
    assert C.check_transport(spec, gm.sample(100, 0))


# ------------------------------------------------------------- physics


def test_projectile_examples():
    P = registry.get_space("projectile")
    assert close(P.q(pt(0, 0), 0.5, pt(0, 1)), (0.25, 0.5), 0)
    P0 = C.projectile_space(C.ProjectileSpec((0.0, 0.0)))
    R = C.canonical_space(3)
    rng = np.random.default_rng(1)
    for _ in range(100):
        x, y = rng.uniform(-5, 5, (2, 3))
        a = rng.uniform()
        assert close(P0.q(x, a, y), R.q(x, a, y), 1e-14)


def test_projectile_matches_generic_family():
    k = 1.7
    P = C.projectile_space(C.ProjectileSpec((k,)))
    gen = generic(lambda s: s, lambda s: 1.0, K=lambda s: k * s * s)
    for z1, a, z2 in separated_draws(200, 5, -5, 5):
        assert close(P.q(z1, a, z2), gen.q(z1, a, z2), 1e-11)


def test_projectile_rejects_bad_k():
    with pytest.raises(ConfigError):
        C.ProjectileSpec((float("nan"),))


def test_critical_reduces_to_canonical_at_zero_rate():
    S = C.damping_space(C.DampingSpec("critical", 0.0))
    for z1, a, z2 in separated_draws(100, 9, -2, 2):
        assert close(S.q(z1, a, z2), (1 - a) * z1 + a * z2, 1e-14)


@pytest.mark.parametrize("alpha", [1.0, -0.7])
def test_critical_matches_generic_family(alpha):
    S = C.damping_space(C.DampingSpec("critical", alpha))
    gen = generic(lambda s: math.exp(alpha * s), lambda s: s * math.exp(alpha * s))
    for z1, a, z2 in separated_draws(200, 1, -2, 2):
        assert close(S.q(z1, a, z2), gen.q(z1, a, z2), 1e-11)


def overdamped_display(al, be, x, s, a, y, t):
    """The two-exponential formula exactly as displayed, evaluated naively."""
    den = math.exp(al * s + be * t) - math.exp(al * t + be * s)
    cx = (math.exp(al * (1 - a) * (s - t)) - math.exp(be * (1 - a) * (s - t))) / den * math.exp((al + be) * t)
    cy = (math.exp(be * a * (t - s)) - math.exp(al * a * (t - s))) / den * math.exp((al + be) * s)
    return cx * x + cy * y, s + a * (t - s)


@pytest.mark.parametrize("al,be", [(1.0, 2.0), (-1.0, 0.5), (0.3, 0.31)])
def test_overdamped_matches_display_and_generic(al, be):
    S = C.damping_space(C.DampingSpec("overdamped", al, be))
    gen = generic(lambda s: math.exp(al * s), lambda s: math.exp(be * s))
    for z1, a, z2 in separated_draws(200, 2, -2, 2, gap=0.05):
        got = S.q(z1, a, z2)
        assert close(got, overdamped_display(al, be, z1[0], z1[1], a, z2[0], z2[1]), 1e-9)
        assert close(got, gen.q(z1, a, z2), 1e-9)


def test_overdamped_witness_values():
    al, be = 1.0, 2.0
    S = C.damping_space(C.DampingSpec("overdamped", al, be))
    e = math.exp
    lhs, rhs = interchange(S, pt(0, 0), pt(0, 1), pt(1, 1), pt(0, 0), 1 / 3, b=1 / 6)
    want_l = (e(al / 18) - e(be / 18)) * (e(al / 3) + e(be / 3)) / (e(al) - e(be))
    want_r = e(2 * (al + be) / 3) * (e(-4 * al / 9) - e(-4 * be / 9)) * (e(be / 6) - e(al / 6)) / (
        (e(2 * al / 3) - e(2 * be / 3)) * (e(al) - e(be)))
    assert close(lhs, (want_l, 7 / 18), 1e-12)
    assert close(rhs, (want_r, 7 / 18), 1e-12)
    assert abs(lhs[0] - rhs[0]) > 1e-4


def critical_vs_over_gap(eps):
    crit = C.damping_space(C.DampingSpec("critical", 1.0))
    over = C.damping_space(C.DampingSpec("overdamped", 1.0, 1.0 + eps))
    worst = 0.0
    for a in np.linspace(0, 1, 10):
        for t in np.linspace(-2, 2, 10):
            z1, z2 = pt(1.0, 0.3), pt(-2.0, t)
            worst = max(worst, float(np.max(np.abs(crit.q(z1, a, z2) - over.q(z1, a, z2)))))
    return worst


def test_overdamped_tends_to_critical():
    gaps = [critical_vs_over_gap(e) for e in (1e-2, 1e-3, 1e-4)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3


def test_underdamped_matches_generic_family_and_guards_domain():
    al, be = 0.5, 1.0
    S = C.damping_space(C.DampingSpec("underdamped", al, be))
    base_y = C.fibre_line(0.0, math.pi, hi_open=True)
    gen = generic(lambda s: math.exp(al * s) * math.sin(be * s), lambda s: math.exp(al * s) * math.cos(be * s),
                  base_y=base_y)
    for z1, a, z2 in separated_draws(200, 4, 0.0, 3.0):
        assert close(S.q(z1, a, z2), gen.q(z1, a, z2), 1e-10)
    assert S.contains(pt(0.0, 3.0)) and not S.contains(pt(0.0, 3.2)) and not S.contains(pt(0.0, -0.1))


@pytest.mark.parametrize("kind,al,be", [("overdamped", 1.0, 1.0), ("underdamped", 1.0, 0.0), ("bogus", 1, 2)])
def test_damping_spec_validation(kind, al, be):
    with pytest.raises(ConfigError):
        C.DampingSpec(kind, al, be)


# ------------------------------------------------------------- lozenge


def test_lozenge_space_examples():
    plus, minus = C.lozenge_space(1), C.lozenge_space(-1)
    for S in (plus, minus):
        assert S.q(pt(0.2), np.array([0.3, 0.0]), pt(0.8))[0] == pytest.approx(0.2 * 0.7 + 0.3 * 0.8)
    assert plus.q(pt(0.0), np.array([0.5, 0.25]), pt(1.0))[0] == 0.75
    assert minus.q(pt(0.0), np.array([0.5, 0.25]), pt(1.0))[0] == 0.25
    with pytest.raises(ConfigError):
        C.lozenge_space(2)


def test_lozenge_space_is_closed():
    S = C.lozenge_space(-1)
    rng = np.random.default_rng(0)
    for a in S.algebra.sample(500, rng):
        x, y = rng.uniform(0, 1, (2, 1))
        assert S.contains(S.q(x, a, y))


# ------------------------------------------------------------- whole catalog


def test_catalog_space_axioms(catalog_space):
    assert_all_pass(check_space_axioms(catalog_space, seed=21, n=300))
    assert_all_pass(check_space_properties(catalog_space, seed=21, n=300))


@pytest.mark.parametrize("name", ["canonical-rn", "inv-pair", "projectile", "damping-critical",
                                  "geometric-mean", "harmonic", "lozenge-space"])
def test_affine_examples(name):
    assert is_affine(registry.get_space(name), seed=2, n=500).affine


@pytest.mark.parametrize("name", ["sq-pair", "cube-pair", "damping-over", "damping-under"])
def test_non_affine_examples(name):
    v = is_affine(registry.get_space(name), seed=2, n=500)
    assert not v.affine and v.witness is not None


@pytest.mark.parametrize("name,want_l,want_r", [("sq-pair", F(5, 27), F(1, 6)), ("cube-pair", F(19, 189), F(1, 12))])
def test_affineness_witness_exact(name, want_l, want_r):
    S = registry.get_space(name)
    pts = [exact(0, 0), exact(0, 1), exact(1, 1), exact(0, 0)]
    lhs, rhs = interchange(S, *pts, F(1, 3), b=F(1, 2))
    assert (lhs[0], lhs[1]) == (want_l, F(1, 2))
    assert (rhs[0], rhs[1]) == (want_r, F(1, 2))
