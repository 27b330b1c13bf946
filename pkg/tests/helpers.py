"""Shared test oracles and data generators.

The oracles here deliberately take different routes than the package code:
dense Gaussian elimination with partial pivoting instead of the banded
Thomas sweep, normal equations instead of orthogonalization, and the full
per-segment constraint system instead of the moment form.
"""

from datetime import date

import numpy as np

from hydrospline import TimeSeries

EPOCH = date(2000, 1, 1)


def make_series(t, y, station="site-a", parameter="y") -> TimeSeries:
    knots = tuple((float(a), float(b)) for a, b in zip(t, y))
    return TimeSeries(station=station, parameter=parameter, knots=knots, epoch=EPOCH)


def random_knots(rng, n, t_span=200.0, y_span=(0.0, 12.0), min_gap=0.5):
    """Strictly increasing times with a minimum gap, bounded values."""
    gaps = rng.uniform(min_gap, t_span / n, n - 1)
    t = np.concatenate([[0.0], np.cumsum(gaps)])
    y = rng.uniform(y_span[0], y_span[1], n)
    return t, y


def gauss_solve(a, b):
    """Dense Gaussian elimination with partial pivoting."""
    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    n = a.shape[0]
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        for row in range(col + 1, n):
            factor = a[row, col] / a[col, col]
            a[row, col:] -= factor * a[col, col:]
            b[row] -= factor * b[col]
    x = np.zeros(n)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x


def tridiagonal_to_dense(system):
    n = system.n
    a = np.zeros((n, n))
    a[np.arange(n), np.arange(n)] = system.diag
    if n > 1:
        a[np.arange(1, n), np.arange(n - 1)] = system.lower
        a[np.arange(n - 1), np.arange(1, n)] = system.upper
    return a


def normal_equations_solve(design, targets):
    """Least squares via A^T A x = A^T b, solved densely."""
    design = np.asarray(design, dtype=float)
    targets = np.asarray(targets, dtype=float)
    return gauss_solve(design.T @ design, design.T @ targets)


def dense_spline_coefficients(t, y):
    """Per-segment cubic coefficients from the full constraint system.

    Unknowns are (a, b, c, d) for every segment; equations are the two
    interpolation conditions per segment, C1/C2 matching at the interior
    junctions, and zero second derivative at both ends.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    nseg = t.size - 1
    a = np.zeros((4 * nseg, 4 * nseg))
    b = np.zeros(4 * nseg)
    row = 0
    for i in range(nseg):
        h = t[i + 1] - t[i]
        a[row, 4 * i] = 1.0
        b[row] = y[i]
        row += 1
        a[row, 4 * i : 4 * i + 4] = [1.0, h, h * h, h * h * h]
        b[row] = y[i + 1]
        row += 1
    for i in range(nseg - 1):
        h = t[i + 1] - t[i]
        a[row, 4 * i + 1] = 1.0
        a[row, 4 * i + 2] = 2.0 * h
        a[row, 4 * i + 3] = 3.0 * h * h
        a[row, 4 * (i + 1) + 1] = -1.0
        row += 1
        a[row, 4 * i + 2] = 2.0
        a[row, 4 * i + 3] = 6.0 * h
        a[row, 4 * (i + 1) + 2] = -2.0
        row += 1
    a[row, 2] = 2.0
    row += 1
    h = t[-1] - t[-2]
    a[row, 4 * (nseg - 1) + 2] = 2.0
    a[row, 4 * (nseg - 1) + 3] = 6.0 * h
    row += 1
    assert row == 4 * nseg
    return gauss_solve(a, b).reshape(nseg, 4)
