"""Pure numpy implementations of the hot kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the extension is checked against in the test-suite.
"""
import numpy as np


def horner(coeffs, z):
    """Evaluate a polynomial and its derivative at every point of ``z``."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    z = np.asarray(z, dtype=np.complex128)
    val = np.zeros_like(z)
    der = np.zeros_like(z)
    for c in coeffs[::-1]:
        der = der * z + val
        val = val * z + c
    return val, der


def reciprocal(coeffs):
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    n = coeffs.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    inv0 = 1.0 / coeffs[0]
    out[0] = inv0
    for k in range(1, n):
        # sum_{j=1..k} s_j t_{k-j}
        out[k] = -inv0 * np.dot(coeffs[1:k + 1], out[k - 1::-1])
    return out


def winding_number(values, center=0j):
    """Winding number of the closed sampled curve ``values`` about ``center``.

    Consecutive phase increments are wrapped to (-pi, pi]; the curve is
    closed implicitly (last sample joins the first).
    """
    w = np.asarray(values, dtype=np.complex128) - center
    nxt = np.roll(w, -1)
    steps = np.angle(nxt * np.conj(w))
    return int(np.rint(steps.sum() / (2.0 * np.pi)))


def segment_crossings(x, y, tol=1e-13):
    """Index pairs (i, j), i < j, of non-adjacent edges of the closed polygon
    (x, y) that cross properly.

    Edge k joins vertex k to vertex k+1 (mod n). Orientation values whose
    magnitude is below ``tol`` times the squared edge scale are treated as
    positive; pairs that are collinear within that tolerance are skipped.
    """
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    n = x.shape[0]
    if n < 4:
        return np.zeros((0, 2), dtype=np.int64)
    x2 = np.roll(x, -1)
    y2 = np.roll(y, -1)
    dx = x2 - x
    dy = y2 - y
    scale = max(float(np.max(np.abs(dx))), float(np.max(np.abs(dy))), 1e-300)
    eps = tol * scale * scale
    xmin = np.minimum(x, x2)
    xmax = np.maximum(x, x2)
    ymin = np.minimum(y, y2)
    ymax = np.maximum(y, y2)
    found = []
    for i in range(n - 2):
        j0 = i + 2
        j1 = n if i > 0 else n - 1
        if j0 >= j1:
            continue
        sl = slice(j0, j1)
        box = ((xmax[sl] >= xmin[i]) & (xmin[sl] <= xmax[i])
               & (ymax[sl] >= ymin[i]) & (ymin[sl] <= ymax[i]))
        if not box.any():
            continue
        js = np.nonzero(box)[0] + j0
        # orientation of the endpoints of edge j w.r.t. edge i, and vice versa
        o1 = dx[i] * (y[js] - y[i]) - dy[i] * (x[js] - x[i])
        o2 = dx[i] * (y2[js] - y[i]) - dy[i] * (x2[js] - x[i])
        o3 = dx[js] * (y[i] - y[js]) - dy[js] * (x[i] - x[js])
        o4 = dx[js] * (y2[i] - y[js]) - dy[js] * (x2[i] - x[js])
        # near-zero orientations count as the positive side, so a crossing
        # through a shared vertex is seen once; fully collinear pairs are skipped
        collinear = ((np.abs(o1) <= eps) & (np.abs(o2) <= eps)
                     & (np.abs(o3) <= eps) & (np.abs(o4) <= eps))
        hit = (~collinear & ((o1 > -eps) != (o2 > -eps)) & ((o3 > -eps) != (o4 > -eps)))
        for j in js[hit]:
            found.append((i, int(j)))
    if not found:
        return np.zeros((0, 2), dtype=np.int64)
    return np.asarray(found, dtype=np.int64)
