"""Tests for surface assembly, analytic curvature, and the congruence transform."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from meridian4 import (
    SIG4,
    DomainError,
    MeridianFamily,
    ProfileParams,
    TRANSFORM_T,
    TildeKind,
    assemble,
    frame_equation_residuals,
    gram_matrix,
    inner,
    integrate_frenet,
    mean_curvature_fd,
    minimal_profile,
    profile_from_callable,
    standard_initial_frame,
    tilde_surface,
    transform_T,
)

FT = MeridianFamily.FIRST_TIMELIKE
FS = MeridianFamily.FIRST_SPACELIKE
SECOND = MeridianFamily.SECOND


def _curve(family, kappa, v_span=(0.0, 1.2), step=1e-3):
    cf = family.curve_family
    return integrate_frenet(cf, lambda v: kappa, standard_initial_frame(cf), v_span, step)


def _minimal_surface(family, params, u_span, kappa=0.0):
    profile = minimal_profile(family, params, u_span, 1201)
    return assemble(family, _curve(family, kappa), profile)


@pytest.fixture(scope="module")
def cylinder_surface():
    """First-timelike surface with constant warp f = 2 and kappa = 0.7.

    Hand computation: g' = 1, D = f f'' + f'^2 + 1 = 1, so
    h1 = -kappa/(2f) = -0.175 and h2 = -D/(2 f g') = -0.25 at every point.
    """
    profile = profile_from_callable(
        FT,
        f=lambda u: np.full_like(u, 2.0),
        fp=lambda u: np.zeros_like(u),
        fpp=lambda u: np.zeros_like(u),
        u_span=(0.0, 2.0),
        n_samples=801,
    )
    return assemble(FT, _curve(FT, 0.7, (0.0, 1.5)), profile)


# ---------------------------------------------------------------------------
# assembly and evaluation
# ---------------------------------------------------------------------------


def test_assemble_rejects_family_mismatch():
    profile = minimal_profile(FT, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5), 101)
    with pytest.raises(ValueError, match="cannot assemble"):
        assemble(SECOND, _curve(SECOND, 0.0), profile)


def test_assemble_rejects_wrong_curve_type():
    profile = minimal_profile(FT, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5), 101)
    with pytest.raises(ValueError, match="directrix"):
        assemble(FT, _curve(FS, 0.0), profile)


def test_immersion_matches_definition_at_nodes():
    surface = _minimal_surface(FT, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5))
    prof, curve = surface.profile, surface.curve
    i, j = 300, 500
    z = surface.immersion(prof.us[i], curve.vs[j])
    expected = np.zeros(4)
    expected[:3] = prof.f[i] * curve.ls[j]
    expected[3] = prof.g[i]
    np.testing.assert_allclose(z, expected, atol=1e-12)


def test_grid_points_shape_and_domain_check():
    surface = _minimal_surface(SECOND, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5))
    us = np.linspace(-0.4, 0.4, 7)
    vs = np.linspace(0.1, 1.0, 5)
    pts = surface.grid_points(us, vs)
    assert pts.shape == (7, 5, 4)
    with pytest.raises(DomainError, match="out of profile domain"):
        surface.immersion(0.9, 0.5)
    with pytest.raises(DomainError, match="out of directrix domain"):
        surface.immersion(0.0, 5.0)


def test_frames_are_pseudo_orthonormal():
    surface = _minimal_surface(FS, ProfileParams(a=1.5, b=1.0), (0.3, 1.2), kappa=0.4)
    rng = np.random.default_rng(7)
    us = rng.uniform(0.35, 1.15, 12)
    vs = rng.uniform(0.05, 1.15, 12)
    expected = np.diag(np.asarray(surface.family.frame_signs, dtype=float))
    for u, v in zip(us, vs):
        X, Y, n1, n2 = surface.frames(u, v)
        frame = np.stack([X, Y, n1, n2])
        np.testing.assert_allclose(gram_matrix(frame, SIG4), expected, atol=1e-9)


def test_cylinder_mean_curvature_frozen(cylinder_surface):
    mc = cylinder_surface.mean_curvature(np.array([0.5, 1.3]), np.array([0.4, 0.9]))
    np.testing.assert_allclose(mc.h1, -0.175, atol=1e-12)
    np.testing.assert_allclose(mc.h2, -0.25, atol=1e-12)
    # <H, H> = -h1^2 + h2^2 for the first-timelike normal signs
    np.testing.assert_allclose(mc.norm2, 0.031875, atol=1e-12)
    # vector = h1 n1 + h2 n2 reproduces <H,H> under the ambient metric
    np.testing.assert_allclose(
        inner(mc.vector, mc.vector), mc.norm2, atol=1e-12
    )


def test_cylinder_analytic_agrees_with_fd(cylinder_surface):
    _, n2fd = mean_curvature_fd(cylinder_surface.immersion, 1.0, 0.7)
    assert abs(n2fd - 0.031875) < 1e-6


def test_frame_equations_hold_on_generic_surface():
    surface = _minimal_surface(SECOND, ProfileParams(a=0.1, b=1.2), (-0.4, 0.5), kappa=0.6)
    res = frame_equation_residuals(surface, 0.05, 0.6)
    assert max(res.values()) < 1e-5
    assert set(res) == {
        "du_X", "du_Y", "du_n1", "du_n2", "dv_X", "dv_Y", "dv_n1", "dv_n2",
    }


def test_mean_curvature_guards_degenerate_radicand():
    # f' crosses 1 for the spacelike meridian when the window touches the
    # radicand zero of g'^2 = f'^2 - 1
    profile = profile_from_callable(
        FS,
        f=lambda u: 0.5 * u * u + u + 2.0,
        fp=lambda u: u + 1.0,
        fpp=lambda u: np.ones_like(u),
        u_span=(0.0, 1.0),
        n_samples=401,
    )
    surface = assemble(FS, _curve(FS, 0.0), profile)
    with pytest.raises(DomainError, match="radicand"):
        surface.mean_curvature(np.array([0.0, 0.5]), np.array([0.3, 0.3]))


# ---------------------------------------------------------------------------
# the congruence transform
# ---------------------------------------------------------------------------


def test_transform_order_four():
    np.testing.assert_array_equal(np.linalg.matrix_power(TRANSFORM_T, 4), np.eye(4))


def test_transform_is_exact_anti_isometry_on_basis():
    for x in np.eye(4):
        for y in np.eye(4):
            assert inner(transform_T(x), transform_T(y)) == -inner(x, y)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_transform_anti_isometry_random_vectors(seed):
    rng = np.random.default_rng(seed)
    x = rng.uniform(-3.0, 3.0, 4)
    y = rng.uniform(-3.0, 3.0, 4)
    lhs = inner(transform_T(x), transform_T(y))
    rhs = -inner(x, y)
    assert abs(lhs - rhs) <= 1e-14 * max(1.0, abs(rhs))


def test_transform_requires_4_vectors():
    with pytest.raises(ValueError, match="4-vectors"):
        transform_T(np.zeros(3))


def test_tilde_kind_pairing_enforced():
    source = _minimal_surface(FT, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5), kappa=0.4)
    with pytest.raises(ValueError, match="image of"):
        tilde_surface(TildeKind.PRIME, source)


@pytest.mark.parametrize(
    "kind,family,params,u_span,kappa",
    [
        (TildeKind.PRIME, SECOND, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5), 0.5),
        (TildeKind.DOUBLE_A, FS, ProfileParams(a=1.5, b=1.0), (0.2, 1.0), 0.3),
        (TildeKind.DOUBLE_B, FT, ProfileParams(a=0.0, b=1.0), (-0.5, 0.5), 0.4),
    ],
)
def test_tilde_grid_matches_chart_parametrization(kind, family, params, u_span, kappa):
    source = _minimal_surface(family, params, u_span, kappa=kappa)
    til = tilde_surface(kind, source)
    us = np.linspace(u_span[0] + 0.05, u_span[1] - 0.05, 9)
    vs = np.linspace(0.05, 1.1, 9)
    direct = til.grid_points(us, vs)
    via_chart = til.chart_reference(us[:, None], vs[None, :])
    assert np.max(np.abs(direct - via_chart)) < 1e-10
    # and the transform itself is the pointwise definition
    np.testing.assert_array_equal(direct, transform_T(source.grid_points(us, vs)))


def test_tilde_norm2_flips_sign():
    source = _minimal_surface(FS, ProfileParams(a=1.5, b=1.0), (0.2, 1.0), kappa=0.3)
    til = tilde_surface(TildeKind.DOUBLE_A, source)
    for u, v in ((0.5, 0.4), (0.8, 0.9)):
        _, n2_src = mean_curvature_fd(source.immersion, u, v)
        _, n2_til = mean_curvature_fd(til.immersion, u, v)
        assert abs(n2_til + n2_src) < 1e-6
