"""Finite-difference stencils on uniform grids.

All routines differentiate along one axis of an ndarray.  Interior nodes use
second-order centered differences.  Edge nodes use one-sided stencils one
order higher (third order), so quantities built from these derivatives stay
second-order accurate even after being differentiated once more; with
``periodic`` set the stencils wrap around instead.
"""

import numpy as np


def _axslice(ndim, axis, i):
    idx = [slice(None)] * ndim
    idx[axis] = i
    return tuple(idx)


def diff1(u, h, axis=0, periodic=False):
    """First derivative: centered interior, third-order one-sided edges."""
    u = np.asarray(u)
    if periodic:
        return (np.roll(u, -1, axis=axis) - np.roll(u, 1, axis=axis)) / (2.0 * h)
    d = np.empty_like(u, dtype=np.result_type(u, 1.0))
    sl = lambda i: _axslice(u.ndim, axis, i)
    d[sl(slice(1, -1))] = (u[sl(slice(2, None))] - u[sl(slice(None, -2))]) / (2.0 * h)
    d[sl(0)] = (-11.0 * u[sl(0)] + 18.0 * u[sl(1)] - 9.0 * u[sl(2)] + 2.0 * u[sl(3)]) / (6.0 * h)
    d[sl(-1)] = (11.0 * u[sl(-1)] - 18.0 * u[sl(-2)] + 9.0 * u[sl(-3)] - 2.0 * u[sl(-4)]) / (6.0 * h)
    return d


def diff2(u, h, axis=0, periodic=False):
    """Second derivative: centered interior, third-order one-sided edges."""
    u = np.asarray(u)
    if periodic:
        return (np.roll(u, -1, axis=axis) - 2.0 * u + np.roll(u, 1, axis=axis)) / (h * h)
    d = np.empty_like(u, dtype=np.result_type(u, 1.0))
    sl = lambda i: _axslice(u.ndim, axis, i)
    d[sl(slice(1, -1))] = (
        u[sl(slice(2, None))] - 2.0 * u[sl(slice(1, -1))] + u[sl(slice(None, -2))]
    ) / (h * h)
    c = (35.0, -104.0, 114.0, -56.0, 11.0)
    d[sl(0)] = sum(ci * u[sl(i)] for i, ci in enumerate(c)) / (12.0 * h * h)
    d[sl(-1)] = sum(ci * u[sl(-1 - i)] for i, ci in enumerate(c)) / (12.0 * h * h)
    return d


def diff1_inner(u, h, axis=0, periodic=False):
    """First derivative that never reads the two edge slices.

    Centered in the deep interior; the first/last interior nodes use inward
    four-point one-sided stencils.  Values returned on the edge slices
    themselves are one-sided fallbacks and should be ignored by callers.
    Needed when composing derivatives: edge values of an already-differenced
    field follow a different error law than interior ones, and reading them
    from a centered stencil costs an order of accuracy.
    """
    u = np.asarray(u)
    if periodic:
        return (np.roll(u, -1, axis=axis) - np.roll(u, 1, axis=axis)) / (2.0 * h)
    d = diff1(u, h, axis=axis)
    sl = lambda i: _axslice(u.ndim, axis, i)
    d[sl(1)] = (-11.0 * u[sl(1)] + 18.0 * u[sl(2)] - 9.0 * u[sl(3)] + 2.0 * u[sl(4)]) / (6.0 * h)
    d[sl(-2)] = (11.0 * u[sl(-2)] - 18.0 * u[sl(-3)] + 9.0 * u[sl(-4)] - 2.0 * u[sl(-5)]) / (6.0 * h)
    return d


def interior(arr, margin=1):
    """View of the array with `margin` rings stripped from every axis."""
    idx = tuple(slice(margin, -margin if margin else None) for _ in range(arr.ndim))
    return arr[idx]
