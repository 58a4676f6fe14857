# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_fallback``; same signatures."""
import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, fabs, fmax, fmin, M_PI, floor

cnp.import_array()


def horner(coeffs, z):
    cdef const double complex[::1] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    zarr = np.asarray(z, dtype=np.complex128)
    shape = zarr.shape
    cdef const double complex[::1] zz = np.ascontiguousarray(zarr.ravel())
    cdef Py_ssize_t m = zz.shape[0], n = c.shape[0], i, k
    val = np.zeros(m, dtype=np.complex128)
    der = np.zeros(m, dtype=np.complex128)
    cdef double complex[::1] v = val
    cdef double complex[::1] d = der
    cdef double complex ck
    # points in the inner loop: independent chains pipeline, one serial chain does not
    for k in range(n - 1, -1, -1):
        ck = c[k]
        for i in range(m):
            d[i] = d[i] * zz[i] + v[i]
            v[i] = v[i] * zz[i] + ck
    return val.reshape(shape), der.reshape(shape)


def reciprocal(coeffs):
    cdef const double complex[::1] s = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t n = s.shape[0], k, j
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] t = out
    cdef double complex inv0 = 1.0 / s[0]
    cdef double complex a0, a1, a2, a3
    t[0] = inv0
    for k in range(1, n):
        # four accumulators break the add dependency of the convolution sum
        a0 = 0
        a1 = 0
        a2 = 0
        a3 = 0
        j = 1
        while j + 3 <= k:
            a0 = a0 + s[j] * t[k - j]
            a1 = a1 + s[j + 1] * t[k - j - 1]
            a2 = a2 + s[j + 2] * t[k - j - 2]
            a3 = a3 + s[j + 3] * t[k - j - 3]
            j += 4
        while j <= k:
            a0 = a0 + s[j] * t[k - j]
            j += 1
        t[k] = -inv0 * ((a0 + a1) + (a2 + a3))
    return out


def winding_number(values, center=0j):
    cdef const double complex[::1] w = np.ascontiguousarray(values, dtype=np.complex128)
    cdef double complex c0 = center
    cdef Py_ssize_t n = w.shape[0], i
    cdef double total = 0.0
    cdef double complex a, b, r
    for i in range(n):
        a = w[i] - c0
        b = w[(i + 1) % n] - c0
        r = b * a.conjugate()
        total += atan2(r.imag, r.real)
    return int(floor(total / (2.0 * M_PI) + 0.5))


def segment_crossings(x, y, double tol=1e-13):
    cdef const double[::1] xs = np.ascontiguousarray(x, dtype=np.float64)
    cdef const double[::1] ys = np.ascontiguousarray(y, dtype=np.float64)
    cdef Py_ssize_t n = xs.shape[0], i, j, jend
    if n < 4:
        return np.zeros((0, 2), dtype=np.int64)
    x2_arr = np.roll(np.asarray(xs), -1)
    y2_arr = np.roll(np.asarray(ys), -1)
    lo_x_arr = np.minimum(xs, x2_arr)
    hi_x_arr = np.maximum(xs, x2_arr)
    lo_y_arr = np.minimum(ys, y2_arr)
    hi_y_arr = np.maximum(ys, y2_arr)
    cdef const double[::1] xe = x2_arr
    cdef const double[::1] ye = y2_arr
    cdef const double[::1] lox = lo_x_arr
    cdef const double[::1] hix = hi_x_arr
    cdef const double[::1] loy = lo_y_arr
    cdef const double[::1] hiy = hi_y_arr
    cdef double scale = 1e-300, eps
    cdef double ax, ay, bx, by, cx, cy, ex, ey, dxi, dyi, dxj, dyj
    cdef double bxlo, bxhi, bylo, byhi
    cdef double o1, o2, o3, o4
    for i in range(n):
        scale = fmax(scale, fabs(xe[i] - xs[i]))
        scale = fmax(scale, fabs(ye[i] - ys[i]))
    eps = tol * scale * scale
    found = []
    for i in range(n - 2):
        ax = xs[i]
        ay = ys[i]
        bx = xe[i]
        by = ye[i]
        bxlo = lox[i]
        bxhi = hix[i]
        bylo = loy[i]
        byhi = hiy[i]
        dxi = bx - ax
        dyi = by - ay
        jend = n if i > 0 else n - 1
        for j in range(i + 2, jend):
            if hix[j] < bxlo or lox[j] > bxhi or hiy[j] < bylo or loy[j] > byhi:
                continue
            cx = xs[j]
            cy = ys[j]
            ex = xe[j]
            ey = ye[j]
            dxj = ex - cx
            dyj = ey - cy
            o1 = dxi * (cy - ay) - dyi * (cx - ax)
            o2 = dxi * (ey - ay) - dyi * (ex - ax)
            o3 = dxj * (ay - cy) - dyj * (ax - cx)
            o4 = dxj * (by - cy) - dyj * (bx - cx)
            if fabs(o1) <= eps and fabs(o2) <= eps and fabs(o3) <= eps and fabs(o4) <= eps:
                continue
            if (o1 > -eps) != (o2 > -eps) and (o3 > -eps) != (o4 > -eps):
                found.append((i, j))
    if not found:
        return np.zeros((0, 2), dtype=np.int64)
    return np.asarray(found, dtype=np.int64)
