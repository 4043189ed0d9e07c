import numpy as np
import pytest

from minsurf import patch as P
from minsurf import shapes
from minsurf.errors import DegenerateMetric, NotMinimal, StepTooLarge


def curvature(patch):
    return P.curvature_scalars(P.fundamental_forms(patch))


# ---------------------------------------------------------------- forms

def test_plane_forms_identity():
    pl = shapes.plane(n=32)
    forms = P.fundamental_forms(pl)
    assert np.allclose(forms.E, 1.0) and np.allclose(forms.G, 1.0)
    assert np.allclose(forms.F, 0.0)
    for second in (forms.e, forms.f, forms.g):
        assert np.allclose(second, 0.0, atol=1e-12)


def test_cylinder_curvatures():
    cyl = shapes.cylinder(n=64)
    c = curvature(cyl)
    assert np.allclose(sorted([c.k1.mean(), c.k2.mean()]), [0.0, 1.0], atol=5e-3)
    assert np.allclose(c.H, 1.0, atol=5e-3)
    assert np.allclose(c.K, 0.0, atol=1e-10)


def test_helicoid_gauss_curvature():
    hel = shapes.helicoid(n=129)  # odd count puts s = 0 on a node, s = 1 on the edge
    c = curvature(hel)
    # K = -1/(1+s^2)^2 with K(1) = -1/4, H = 0
    sgrid = hel.s[1:-1][:, None] * np.ones_like(c.K)
    assert np.abs(c.K + 1.0 / (1.0 + sgrid**2) ** 2).max() < 5e-3
    i = np.argmin(np.abs(hel.s[1:-1] - 1.0))
    assert abs(c.K[i].mean() + 1.0 / (1.0 + hel.s[1:-1][i] ** 2) ** 2) < 1e-3
    assert np.abs(c.H).max() < 1e-10


def test_catenoid_oracle():
    cat = shapes.catenoid(n=128)
    c = curvature(cat)
    assert np.abs(c.H).max() < 1e-3
    sgrid = cat.s[1:-1][:, None] * np.ones_like(c.K)
    assert np.abs(c.K + 1.0 / np.cosh(sgrid) ** 4).max() < 5e-3


def test_sphere_curvatures():
    R = 2.0
    sph = shapes.sphere(n=96, radius=R, pole_trim=0.2)
    c = curvature(sph)
    assert np.allclose(c.H, 2.0 / R, rtol=5e-3)
    assert np.allclose(c.K, 1.0 / R**2, rtol=5e-3)
    assert np.allclose(c.A2, 2.0 / R**2, rtol=5e-3)


def test_normal_is_unit():
    forms = P.fundamental_forms(shapes.catenoid(n=48))
    norms = np.linalg.norm(forms.normal, axis=-1)
    assert np.abs(norms - 1.0).max() < 1e-12


@pytest.mark.parametrize("factory", [shapes.catenoid, shapes.helicoid, shapes.cylinder])
def test_curvature_consistency_invariants(factory):
    c = curvature(factory(n=48))
    scale = np.maximum(np.abs(c.H), 1.0)
    assert np.abs(c.k1 + c.k2 - c.H).max() / scale.max() < 1e-10
    assert np.abs(c.k1 * c.k2 - c.K).max() < 1e-10 * max(1.0, np.abs(c.K).max())
    assert np.abs(c.A2 - (c.H**2 - 2.0 * c.K)).max() < 1e-10 * max(1.0, c.A2.max())
    assert c.A2.min() >= 0.0


def test_degenerate_metric_raises():
    # collapse everything onto a line
    s = np.linspace(0, 1, 8)
    bad = P.ParamPatch.from_function(lambda S, T: (S + T, 2 * (S + T), np.zeros_like(S)), s, s)
    with pytest.raises(DegenerateMetric):
        P.fundamental_forms(bad)


def test_validate_rejects_small_grids():
    s = np.linspace(0, 1, 4)
    patch = P.ParamPatch.from_function(lambda S, T: (S, T, np.zeros_like(S)), s, s)
    with pytest.raises(ValueError):
        patch.validate()


# ---------------------------------------------------------------- laplacian

def test_laplacian_constant_is_zero():
    pl = shapes.plane(n=32)
    lap = P.surface_laplacian(np.ones(pl.shape), pl)
    assert np.abs(lap).max() == 0.0


def test_laplacian_x_squared_on_plane():
    pl = shapes.plane(n=64)
    x2 = np.einsum("ijk,ijk->ij", pl.points, pl.points)
    lap = P.surface_laplacian(x2, pl)
    assert np.abs(lap - 4.0).max() < 1e-10


def test_coordinates_harmonic_on_helicoid_at_second_order():
    # coordinate functions are harmonic exactly when the surface is minimal
    res = []
    for n in (48, 96):
        hel = shapes.helicoid(n=n)
        res.append(max(np.abs(P.surface_laplacian(hel.points[:, :, i], hel)).max()
                       for i in range(3)))
    assert res[1] < res[0]
    assert 3.0 < res[0] / res[1] < 5.5


# ---------------------------------------------------------------- area

def test_unit_disk_graph_area():
    xs = np.linspace(-1.02, 1.02, 200)
    g = shapes.graph_patch(lambda X, Y: np.zeros_like(X), xs, xs)
    area = P.patch_area(g, region=lambda p: p[:, 0] ** 2 + p[:, 1] ** 2 < 1.0)
    assert abs(area - np.pi) < 1e-3


def test_catenoid_band_area():
    exact = 2.0 * np.pi * (1.0 + 0.5 * np.sinh(2.0))
    area = P.patch_area(shapes.catenoid(n=384))
    assert abs(area - exact) < 1e-3

    # midpoint rule converges at second order
    errs = [abs(P.patch_area(shapes.catenoid(n=n)) - exact) for n in (64, 128)]
    assert 3.0 < errs[0] / errs[1] < 5.0


def test_helicoid_area():
    exact = 2.0 * np.pi * 0.5 * (np.sqrt(2.0) + np.arcsinh(1.0))
    area = P.patch_area(shapes.helicoid(n=384, s_range=(0.0, 1.0)))
    assert abs(area - exact) < 1e-3


# ---------------------------------------------------------------- first variation

def _bump(patch, center, widths):
    S, T = np.meshgrid(patch.s, patch.t, indexing="ij")
    phi = np.exp(-(((S - center[0]) / widths[0]) ** 2 + ((T - center[1]) / widths[1]) ** 2))
    mask = np.zeros_like(phi)
    inner = (slice(2, -2), slice(None) if patch.periodic_t else slice(2, -2))
    mask[inner] = 1.0
    return phi * mask


def test_first_variation_minimal_surface_is_critical():
    hel = shapes.helicoid(n=64)
    phi = _bump(hel, (0.0, np.pi), (0.5, 0.7))
    num, flux = P.first_variation(hel, phi, h=1e-4)
    assert abs(num) < 1e-8 and abs(flux) < 1e-10


def test_first_variation_sphere_cap():
    cap = shapes.sphere_cap(n=128)
    phi = _bump(cap, (0.75, np.pi), (0.35, 0.7))
    num, flux = P.first_variation(cap, phi, h=1e-4)
    s_sl, t_sl = cap.interior_slices()
    forms = P.fundamental_forms(cap)
    mass = np.sum(phi[s_sl, t_sl] * np.sqrt(forms.det_metric)) * cap.ds * cap.dt
    assert abs(num - flux) <= 1e-3
    assert abs(flux - 2.0 * mass) < 1e-2 * mass


def test_first_variation_cylinder_flux_is_area():
    cyl = shapes.cylinder(n=96)
    S, T = np.meshgrid(cyl.s, cyl.t, indexing="ij")
    phi = np.where((np.abs(S) < 0.4) & (np.abs(T - np.pi) < 0.8), 1.0, 0.0)
    phi[:2] = phi[-2:] = 0.0
    num, flux = P.first_variation(cyl, phi, h=1e-5)
    s_sl, t_sl = cyl.interior_slices()
    a = np.sum(phi[s_sl, t_sl] * np.sqrt(P.fundamental_forms(cyl).det_metric)) * cyl.ds * cyl.dt
    assert abs(flux - a) < 1e-2 * a
    assert abs(num - flux) < 1e-2 * a


def test_first_variation_step_too_large():
    cap = shapes.sphere_cap(n=48)
    phi = _bump(cap, (0.75, np.pi), (0.35, 0.7))
    with pytest.raises(StepTooLarge):
        P.first_variation(cap, phi, h=1.5)


def test_first_variation_requires_compact_support():
    hel = shapes.helicoid(n=32)
    with pytest.raises(ValueError):
        P.first_variation(hel, np.ones(hel.shape), h=1e-4)


# ---------------------------------------------------------------- convex hull

def test_hull_flat_disk():
    assert abs(P.convex_hull_check(shapes.disk(n=64))) <= 1e-9


def test_hull_catenoid_contained():
    assert P.convex_hull_check(shapes.catenoid(n=96)) <= 1e-9


def test_hull_hemisphere_violates():
    v = P.convex_hull_check(shapes.hemisphere(n=64), boundary=shapes.equator_ring(128))
    assert v > 0.5
    assert abs(v - 1.0) < 1e-2


# ---------------------------------------------------------------- Simons identity

def test_simons_plane_exact():
    rep = P.simons_residual(shapes.plane(n=32))
    assert rep.max_residual == 0.0


@pytest.mark.parametrize("factory", [shapes.catenoid, shapes.helicoid])
def test_simons_second_order_decay(factory):
    r1 = P.simons_residual(factory(n=96)).max_residual
    r2 = P.simons_residual(factory(n=192)).max_residual
    assert 3.0 < r1 / r2 < 5.0


def test_simons_inequality_direction():
    rep = P.simons_residual(shapes.catenoid(n=192))
    assert rep.min_inequality >= -1e-3


def test_simons_rejects_non_minimal():
    with pytest.raises(NotMinimal):
        P.simons_residual(shapes.sphere(n=48, pole_trim=0.3))
