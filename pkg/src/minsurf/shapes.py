"""Exact parametrizations of the classical test surfaces."""

import numpy as np

from .patch import ParamPatch


def plane(n=64, extent=1.0):
    s = np.linspace(-extent, extent, n)
    return ParamPatch.from_function(lambda S, T: (S, T, np.zeros_like(S)), s, s)


def graph_patch(fn, x, y):
    """Lift a scalar graph u = fn(x, y) to a ParamPatch."""
    return ParamPatch.from_function(lambda S, T: (S, T, fn(S, T)), x, y)


def cylinder(n=64, height=1.0, radius=1.0):
    """(s, t) -> (R cos t, R sin t, s); the computed normal points inward."""
    s = np.linspace(-height, height, n)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return ParamPatch.from_function(
        lambda S, T: (radius * np.cos(T), radius * np.sin(T), S), s, t, periodic_t=True
    )


def _mirrored_sphere_chart(radius):
    # the azimuth is negated so the computed normal points inward (H = +2/R)
    def chart(S, T):
        return (
            radius * np.sin(S) * np.cos(T),
            -radius * np.sin(S) * np.sin(T),
            radius * np.cos(S),
        )

    return chart


def sphere(n=64, radius=1.0, pole_trim=1e-4):
    """Round sphere minus tiny polar caps, oriented so H = +2/R."""
    s = np.linspace(pole_trim, np.pi - pole_trim, n)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return ParamPatch.from_function(
        _mirrored_sphere_chart(radius), s, t, periodic_t=True
    )


def sphere_cap(n=128, radius=1.0, polar_range=(0.25, 1.25)):
    """Spherical band (s = polar angle, t = azimuth), oriented so H = +2/R."""
    s = np.linspace(polar_range[0], polar_range[1], n)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return ParamPatch.from_function(
        _mirrored_sphere_chart(radius), s, t, periodic_t=True
    )


def catenoid(n=64, band=1.0, t_points=None):
    """(s, t) -> (cosh s cos t, cosh s sin t, s) for |s| <= band."""
    s = np.linspace(-band, band, n)
    t = np.linspace(0.0, 2.0 * np.pi, t_points or n, endpoint=False)
    return ParamPatch.from_function(
        lambda S, T: (np.cosh(S) * np.cos(T), np.cosh(S) * np.sin(T), S),
        s, t, periodic_t=True,
    )


def helicoid(n=64, s_range=(-1.0, 1.0), t_range=(0.0, 2.0 * np.pi)):
    """(s, t) -> (s cos t, s sin t, t)."""
    s = np.linspace(*s_range, n)
    t = np.linspace(*t_range, n)
    return ParamPatch.from_function(
        lambda S, T: (S * np.cos(T), S * np.sin(T), T), s, t
    )


def hemisphere(n=64, radius=1.0):
    """Upper hemisphere over a polar chart; the geometric boundary is the
    equator (the inner chart ring hugs the pole)."""
    s = np.linspace(1e-3, np.pi / 2.0, n)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return ParamPatch.from_function(
        lambda S, T: (
            radius * np.sin(S) * np.cos(T),
            radius * np.sin(S) * np.sin(T),
            radius * np.cos(S),
        ),
        s, t, periodic_t=True,
    )


def equator_ring(n=64, radius=1.0):
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return np.stack([radius * np.cos(t), radius * np.sin(t), np.zeros_like(t)], axis=-1)


def disk(n=96, radius=1.0):
    """Flat disk in the plane z = 0, polar parametrization."""
    s = np.linspace(radius * 1e-3, radius, n)
    t = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return ParamPatch.from_function(
        lambda S, T: (S * np.cos(T), S * np.sin(T), np.zeros_like(S)),
        s, t, periodic_t=True,
    )


def catenoid_A2(s):
    """|A|^2 = 2 / cosh^4 s for the unit catenoid band parametrization."""
    return 2.0 / np.cosh(s) ** 4


def catenoid_gradA2(s):
    """|grad A|^2 = 16 sinh^2 s / cosh^8 s on the unit catenoid."""
    return 16.0 * np.sinh(s) ** 2 / np.cosh(s) ** 8
