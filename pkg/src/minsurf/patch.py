"""Discrete differential geometry on sampled parametric surfaces.

A surface is carried by a :class:`ParamPatch`: a rectangular (s, t) parameter
lattice mapped into 3-space.  All derivative quantities use second-order
finite differences (centered in the interior, one-sided at edges, wrap-around
when the second parameter is periodic).  Outputs live on interior nodes;
boundary rings are excluded.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from . import fd
from .errors import DegenerateMetric, NotMinimal, StepTooLarge


@dataclass
class ParamPatch:
    """Sampled immersion of a 2-D parameter grid into 3-space.

    points has shape (ns, nt, 3).  When periodic_t is set, the t samples
    cover one full period without repeating the seam node.
    """

    s: np.ndarray
    t: np.ndarray
    points: np.ndarray
    periodic_t: bool = False

    def __post_init__(self):
        self.s = np.asarray(self.s, dtype=float)
        self.t = np.asarray(self.t, dtype=float)
        self.points = np.asarray(self.points, dtype=float)

    @property
    def ds(self):
        return self.s[1] - self.s[0]

    @property
    def dt(self):
        return self.t[1] - self.t[0]

    @property
    def shape(self):
        return self.points.shape[:2]

    @classmethod
    def from_function(cls, fn, s, t, periodic_t=False):
        """Sample (s_i, t_j) -> fn(s_i, t_j) on the tensor grid."""
        s = np.asarray(s, dtype=float)
        t = np.asarray(t, dtype=float)
        S, T = np.meshgrid(s, t, indexing="ij")
        pts = np.asarray(fn(S, T), dtype=float)
        if pts.shape[0] == 3 and pts.shape != (len(s), len(t), 3):
            pts = np.moveaxis(pts, 0, -1)
        return cls(s=s, t=t, points=pts, periodic_t=periodic_t)

    def validate(self):
        """Check grid size, finiteness and sample-scale nondegeneracy."""
        ns, nt = self.shape
        if ns < 5 or nt < 5:
            raise ValueError("need at least 5 points per parameter axis")
        if not np.all(np.isfinite(self.points)):
            raise ValueError("points contain non-finite entries")
        Xs, Xt = _tangents(self)
        s_sl, t_sl = self.interior_slices()
        cross = np.cross(Xs[s_sl, t_sl], Xt[s_sl, t_sl])
        if not np.all(np.linalg.norm(cross, axis=-1) > 0):
            raise ValueError("degenerate node: first-difference tangents are parallel")
        return self

    def interior_slices(self):
        """Index slices of the interior nodes (all of t when periodic)."""
        s_sl = slice(1, -1)
        t_sl = slice(None) if self.periodic_t else slice(1, -1)
        return s_sl, t_sl

    def boundary_points(self):
        """Boundary samples: outer ring, or the two s-edges when t is periodic."""
        if self.periodic_t:
            return np.vstack([self.points[0], self.points[-1]])
        p = self.points
        return np.vstack([p[0], p[-1], p[1:-1, 0], p[1:-1, -1]])

    def interior_points(self):
        s_sl, t_sl = self.interior_slices()
        return self.points[s_sl, t_sl].reshape(-1, 3)


@dataclass
class FormField:
    """First/second fundamental forms and unit normal at interior nodes."""

    E: np.ndarray
    F: np.ndarray
    G: np.ndarray
    e: np.ndarray
    f: np.ndarray
    g: np.ndarray
    normal: np.ndarray
    s: np.ndarray
    t: np.ndarray
    points: np.ndarray

    @property
    def det_metric(self):
        return self.E * self.G - self.F**2


@dataclass
class CurvatureField:
    """Pointwise curvature scalars; H uses the sum convention H = k1 + k2."""

    H: np.ndarray
    K: np.ndarray
    A2: np.ndarray
    k1: np.ndarray
    k2: np.ndarray
    s: np.ndarray
    t: np.ndarray
    points: np.ndarray


def _tangents(patch):
    p = patch.points
    Xs = fd.diff1(p, patch.ds, axis=0)
    Xt = fd.diff1(p, patch.dt, axis=1, periodic=patch.periodic_t)
    return Xs, Xt


def _second_derivs(patch):
    p = patch.points
    Xss = fd.diff2(p, patch.ds, axis=0)
    Xtt = fd.diff2(p, patch.dt, axis=1, periodic=patch.periodic_t)
    Xs = fd.diff1(p, patch.ds, axis=0)
    Xst = fd.diff1(Xs, patch.dt, axis=1, periodic=patch.periodic_t)
    return Xss, Xtt, Xst


def _metric_full(patch):
    Xs, Xt = _tangents(patch)
    E = np.einsum("ijk,ijk->ij", Xs, Xs)
    F = np.einsum("ijk,ijk->ij", Xs, Xt)
    G = np.einsum("ijk,ijk->ij", Xt, Xt)
    return E, F, G, Xs, Xt


def normals(patch):
    """Unit normal n = (X_s x X_t)/|X_s x X_t| on the full grid."""
    Xs, Xt = _tangents(patch)
    n = np.cross(Xs, Xt)
    norm = np.linalg.norm(n, axis=-1, keepdims=True)
    if np.any(norm == 0):
        raise DegenerateMetric("vanishing normal: sampling is not an immersion")
    return n / norm


def fundamental_forms(patch):
    """First and second fundamental forms at interior nodes.

    Raises DegenerateMetric when EG - F^2 <= 0 anywhere in the interior,
    which signals a non-immersed sampling.
    """
    E, F, G, Xs, Xt = _metric_full(patch)
    n = np.cross(Xs, Xt)
    norm = np.linalg.norm(n, axis=-1, keepdims=True)
    s_sl, t_sl = patch.interior_slices()
    det = (E * G - F**2)[s_sl, t_sl]
    if np.any(det <= 0):
        raise DegenerateMetric("EG - F^2 <= 0 at an interior node")
    n = n / np.where(norm == 0, 1.0, norm)
    Xss, Xtt, Xst = _second_derivs(patch)
    e = np.einsum("ijk,ijk->ij", Xss, n)
    f = np.einsum("ijk,ijk->ij", Xst, n)
    g = np.einsum("ijk,ijk->ij", Xtt, n)
    S, T = np.meshgrid(patch.s, patch.t, indexing="ij")
    return FormField(
        E=E[s_sl, t_sl], F=F[s_sl, t_sl], G=G[s_sl, t_sl],
        e=e[s_sl, t_sl], f=f[s_sl, t_sl], g=g[s_sl, t_sl],
        normal=n[s_sl, t_sl],
        s=S[s_sl, t_sl], t=T[s_sl, t_sl],
        points=patch.points[s_sl, t_sl],
    )


def curvature_scalars(forms):
    """Mean/Gauss/principal curvatures from the 2x2 shape operator.

    H = trace, K = determinant; k1 <= k2 from the closed-form quadratic
    solve (umbilic ties return k1 = k2).
    """
    det = forms.det_metric
    H = (forms.e * forms.G - 2.0 * forms.f * forms.F + forms.g * forms.E) / det
    K = (forms.e * forms.g - forms.f**2) / det
    disc = np.maximum(H * H - 4.0 * K, 0.0)
    root = np.sqrt(disc)
    k1 = 0.5 * (H - root)
    k2 = 0.5 * (H + root)
    return CurvatureField(
        H=H, K=K, A2=k1 * k1 + k2 * k2, k1=k1, k2=k2,
        s=forms.s, t=forms.t, points=forms.points,
    )


def surface_laplacian(field, patch, derived_field=False):
    """Laplace-Beltrami of scalar samples, divergence form with metric weights.

    `field` lives on the full grid; the result lives on interior nodes and is
    second-order accurate on smooth data.  Set `derived_field` when the field
    was itself produced by finite differences: its edge values then follow a
    different error law and are kept out of every stencil.
    """
    field = np.asarray(field, dtype=float)
    E, F, G, _, _ = _metric_full(patch)
    W = E * G - F**2
    s_sl, t_sl = patch.interior_slices()
    if np.any(W[s_sl, t_sl] <= 0):
        raise DegenerateMetric("EG - F^2 <= 0 at an interior node")
    W = np.sqrt(np.maximum(W, 1e-300))
    d1 = fd.diff1_inner if derived_field else fd.diff1
    fs = d1(field, patch.ds, axis=0)
    ft = d1(field, patch.dt, axis=1, periodic=patch.periodic_t)
    P = (G * fs - F * ft) / W
    Q = (E * ft - F * fs) / W
    div = (fd.diff1_inner(P, patch.ds, axis=0)
           + fd.diff1_inner(Q, patch.dt, axis=1, periodic=patch.periodic_t))
    return (div / W)[s_sl, t_sl]


def patch_area(patch, region=None):
    """Area by midpoint-rule metric quadrature over accepted cells.

    `region` is a predicate on 3-points (vectorized, applied to cell
    midpoints); cells whose midpoint fails the test are skipped.
    """
    p = patch.points
    if patch.periodic_t:
        p = np.concatenate([p, p[:, :1]], axis=1)
    # tangents at cell centers from corner differences
    Xs = (p[1:, :-1] - p[:-1, :-1] + p[1:, 1:] - p[:-1, 1:]) / (2.0 * patch.ds)
    Xt = (p[:-1, 1:] - p[:-1, :-1] + p[1:, 1:] - p[1:, :-1]) / (2.0 * patch.dt)
    element = np.linalg.norm(np.cross(Xs, Xt), axis=-1)
    if region is not None:
        centers = 0.25 * (p[1:, :-1] + p[:-1, :-1] + p[1:, 1:] + p[:-1, 1:])
        mask = np.asarray(region(centers.reshape(-1, 3))).reshape(element.shape)
        element = np.where(mask, element, 0.0)
    return float(np.sum(element) * patch.ds * patch.dt)


def _area_weights_interior(patch):
    """Nodal quadrature weights (area element x cell size) at interior nodes."""
    E, F, G, _, _ = _metric_full(patch)
    W = np.sqrt(np.maximum(E * G - F**2, 0.0))
    s_sl, t_sl = patch.interior_slices()
    return W[s_sl, t_sl] * patch.ds * patch.dt


def first_variation(patch, phi, h):
    """Numeric area derivative of a normal perturbation vs the H-flux.

    Returns (numeric_derivative, flux_integral).  phi must vanish on the two
    outermost grid rings.  The offset direction is chosen so that the
    derivative pairs with +int(phi * H) for the H sign of curvature_scalars.
    """
    phi = np.asarray(phi, dtype=float)
    ns, nt = patch.shape
    rings = np.zeros((ns, nt), dtype=bool)
    rings[:2] = rings[-2:] = True
    if not patch.periodic_t:
        rings[:, :2] = rings[:, -2:] = True
    if np.max(np.abs(phi[rings]), initial=0.0) > 1e-14 * max(1.0, np.max(np.abs(phi))):
        raise ValueError("phi must vanish on the two outermost grid rings")
    n = normals(patch)
    offset = h * phi[..., None] * (-n)
    areas = []
    for sign in (+1.0, -1.0):
        moved = ParamPatch(patch.s, patch.t, patch.points + sign * offset, patch.periodic_t)
        E, F, G, _, _ = _metric_full(moved)
        s_sl, t_sl = moved.interior_slices()
        if np.any((E * G - F**2)[s_sl, t_sl] <= 0):
            raise StepTooLarge("offset step h destroys the immersion")
        areas.append(patch_area(moved))
    numeric = (areas[0] - areas[1]) / (2.0 * h)
    forms = fundamental_forms(patch)
    curv = curvature_scalars(forms)
    s_sl, t_sl = patch.interior_slices()
    flux = float(np.sum(phi[s_sl, t_sl] * curv.H * _area_weights_interior(patch)))
    return numeric, flux


def convex_hull_check(patch, boundary=None, plane_tol=1e-9):
    """Max signed distance of interior points outside the boundary hull.

    <= 0 means contained.  `boundary` overrides the sampled parameter
    boundary when the chart boundary is not the geometric one (e.g. a polar
    cap whose inner ring only exists because of the chart).  Coplanar
    boundaries fall back to a 2-D hull in the best-fit plane plus the
    out-of-plane excursion.
    """
    bnd = patch.boundary_points() if boundary is None else np.asarray(boundary, dtype=float)
    inter = patch.interior_points()
    try:
        hull = ConvexHull(bnd)
    except QhullError:
        return _planar_hull_check(bnd, inter, plane_tol)
    eq = hull.equations  # rows (a, b): a.x + b <= 0 inside
    dist = inter @ eq[:, :3].T + eq[:, 3]
    return float(np.max(np.max(dist, axis=1)))


def _planar_hull_check(bnd, inter, plane_tol):
    c = bnd.mean(axis=0)
    _, _, vt = np.linalg.svd(bnd - c, full_matrices=False)
    normal, basis = vt[2], vt[:2]
    out_of_plane = float(np.max(np.abs((inter - c) @ normal), initial=0.0))
    b2 = (bnd - c) @ basis.T
    i2 = (inter - c) @ basis.T
    hull2 = ConvexHull(b2)
    eq = hull2.equations
    inplane = float(np.max(i2 @ eq[:, :2].T + eq[:, 2]))
    return max(out_of_plane, inplane)


def _christoffel(E, F, G, ds, dt, periodic_t):
    """Christoffel symbols Gamma[k, i, j] on the full grid."""
    gmat = np.stack([np.stack([E, F], axis=-1), np.stack([F, G], axis=-1)], axis=-2)
    det = E * G - F**2
    ginv = np.empty_like(gmat)
    ginv[..., 0, 0] = G / det
    ginv[..., 0, 1] = ginv[..., 1, 0] = -F / det
    ginv[..., 1, 1] = E / det
    dg = np.empty(E.shape + (2, 2, 2))  # dg[a, i, j] = d_a g_ij
    for a, (h, ax, per) in enumerate([(ds, 0, False), (dt, 1, periodic_t)]):
        dg[..., a, 0, 0] = fd.diff1_inner(E, h, axis=ax, periodic=per)
        dg[..., a, 0, 1] = dg[..., a, 1, 0] = fd.diff1_inner(F, h, axis=ax, periodic=per)
        dg[..., a, 1, 1] = fd.diff1_inner(G, h, axis=ax, periodic=per)
    # Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)
    term = dg.transpose(0, 1, 3, 4, 2) + dg.transpose(0, 1, 4, 3, 2) - dg
    # term[..., i, j, l] = d_i g_jl + d_j g_il - d_l g_ij
    gamma = 0.5 * np.einsum("...kl,...ijl->...kij", ginv, term)
    return gamma, ginv


@dataclass
class SimonsReport:
    """Residual of the minimal-surface identity for Laplacian of |A|^2."""

    max_residual: float
    min_inequality: float
    residual: np.ndarray = field(repr=False, default=None)


def simons_residual(patch, h_tol=1e-3, margin=3):
    """Residual of  Lap|A|^2 + 2|A|^4 - 2|grad A|^2  on a minimal patch.

    Requires max|H| <= h_tol (NotMinimal otherwise).  The identity residual
    and the one-sided inequality value Lap|A|^2 + 2|A|^4 are both reported,
    restricted to nodes at least `margin` rings from non-periodic edges.
    """
    E, F, G, Xs, Xt = _metric_full(patch)
    n = np.cross(Xs, Xt)
    n = n / np.linalg.norm(n, axis=-1, keepdims=True)
    Xss, Xtt, Xst = _second_derivs(patch)
    e = np.einsum("ijk,ijk->ij", Xss, n)
    f = np.einsum("ijk,ijk->ij", Xst, n)
    g = np.einsum("ijk,ijk->ij", Xtt, n)
    det = E * G - F**2
    if np.any(det <= 0):
        raise DegenerateMetric("EG - F^2 <= 0")
    H = (e * G - 2.0 * f * F + g * E) / det
    K = (e * g - f**2) / det
    s_sl, t_sl = patch.interior_slices()
    if np.max(np.abs(H[s_sl, t_sl])) > h_tol:
        raise NotMinimal(f"max|H| = {np.max(np.abs(H[s_sl, t_sl])):.3e} exceeds {h_tol:.1e}")
    A2 = H * H - 2.0 * K

    lap = np.full_like(A2, np.nan)
    lap[s_sl, t_sl] = surface_laplacian(A2, patch, derived_field=True)

    gamma, ginv = _christoffel(E, F, G, patch.ds, patch.dt, patch.periodic_t)
    hmat = np.stack([np.stack([e, f], axis=-1), np.stack([f, g], axis=-1)], axis=-2)
    dh = np.empty(E.shape + (2, 2, 2))
    for a, (hh, ax, per) in enumerate([(patch.ds, 0, False), (patch.dt, 1, patch.periodic_t)]):
        dh[..., a, 0, 0] = fd.diff1_inner(e, hh, axis=ax, periodic=per)
        dh[..., a, 0, 1] = dh[..., a, 1, 0] = fd.diff1_inner(f, hh, axis=ax, periodic=per)
        dh[..., a, 1, 1] = fd.diff1_inner(g, hh, axis=ax, periodic=per)
    # covariant derivative: D_k h_ij = d_k h_ij - G^l_ki h_lj - G^l_kj h_il
    cov = (dh
           - np.einsum("...lki,...lj->...kij", gamma, hmat)
           - np.einsum("...lkj,...il->...kij", gamma, hmat))
    gradA2 = np.einsum("...ka,...ib,...jc,...kij,...abc->...", ginv, ginv, ginv, cov, cov)

    resid = lap + 2.0 * A2**2 - 2.0 * gradA2
    ineq = lap + 2.0 * A2**2

    ns, nt = patch.shape
    s_deep = slice(margin, ns - margin)
    t_deep = slice(None) if patch.periodic_t else slice(margin, nt - margin)
    r = resid[s_deep, t_deep]
    return SimonsReport(
        max_residual=float(np.max(np.abs(r))),
        min_inequality=float(np.min(ineq[s_deep, t_deep])),
        residual=r,
    )
