# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled per-pixel kernels.

Each function mirrors the numpy reference in reference.py with the same
float64 operation order, so the two backends are bit-identical.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def sobel_magnitude(gray):
    g = np.ascontiguousarray(gray, dtype=np.float64)
    if g.ndim != 2:
        raise ValueError("sobel_magnitude expects a 2-D array")
    cdef double[:, ::1] img = g
    cdef Py_ssize_t h = img.shape[0]
    cdef Py_ssize_t w = img.shape[1]
    out_arr = np.empty((h, w), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t y, x, ym, yp, xm, xp
    cdef double a00, a01, a02, a10, a12, a20, a21, a22, gx, gy
    for y in range(h):
        ym = y - 1 if y > 0 else 0
        yp = y + 1 if y < h - 1 else h - 1
        for x in range(w):
            xm = x - 1 if x > 0 else 0
            xp = x + 1 if x < w - 1 else w - 1
            a00 = img[ym, xm]
            a01 = img[ym, x]
            a02 = img[ym, xp]
            a10 = img[y, xm]
            a12 = img[y, xp]
            a20 = img[yp, xm]
            a21 = img[yp, x]
            a22 = img[yp, xp]
            gx = (a02 + 2.0 * a12 + a22) - (a00 + 2.0 * a10 + a20)
            gy = (a20 + 2.0 * a21 + a22) - (a00 + 2.0 * a01 + a02)
            out[y, x] = sqrt(gx * gx + gy * gy)
    return out_arr


def hysteresis_mask(mag, double low, double high):
    m = np.ascontiguousarray(mag, dtype=np.float64)
    cdef double[:, ::1] img = m
    cdef Py_ssize_t h = img.shape[0]
    cdef Py_ssize_t w = img.shape[1]
    out_arr = np.zeros((h, w), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    # Stack-based flood fill from strong pixels through weak ones.
    stack_arr = np.empty(h * w, dtype=np.int64)
    cdef long long[::1] stack = stack_arr
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t y, x, ny, nx, idx
    cdef int dy, dx
    for y in range(h):
        for x in range(w):
            if img[y, x] >= high:
                out[y, x] = 1
                stack[top] = y * w + x
                top += 1
    while top > 0:
        top -= 1
        idx = <Py_ssize_t> stack[top]
        y = idx // w
        x = idx - y * w
        for dy in range(-1, 2):
            ny = y + dy
            if ny < 0 or ny >= h:
                continue
            for dx in range(-1, 2):
                nx = x + dx
                if nx < 0 or nx >= w:
                    continue
                if out[ny, nx] == 0 and img[ny, nx] >= low:
                    out[ny, nx] = 1
                    stack[top] = ny * w + nx
                    top += 1
    return out_arr


def value_noise(grid, Py_ssize_t height, Py_ssize_t width):
    g = np.ascontiguousarray(grid, dtype=np.float64)
    if g.ndim != 2 or g.shape[0] < 2 or g.shape[1] < 2:
        raise ValueError("value_noise expects a control grid of at least 2x2")
    cdef double[:, ::1] ctrl = g
    cdef Py_ssize_t gh = ctrl.shape[0]
    cdef Py_ssize_t gw = ctrl.shape[1]
    out_arr = np.empty((height, width), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double sy = (gh - 1) / <double> (height - 1) if height > 1 else 0.0
    cdef double sx = (gw - 1) / <double> (width - 1) if width > 1 else 0.0
    cdef Py_ssize_t y, x, iy, ix
    cdef double fy, fx, u, v, g00, g10, g01, g11, top, bot, yy, xx
    for y in range(height):
        yy = y * sy
        iy = <Py_ssize_t> yy
        if iy > gh - 2:
            iy = gh - 2
        fy = yy - iy
        u = fy * fy * (3.0 - 2.0 * fy)
        for x in range(width):
            xx = x * sx
            ix = <Py_ssize_t> xx
            if ix > gw - 2:
                ix = gw - 2
            fx = xx - ix
            v = fx * fx * (3.0 - 2.0 * fx)
            g00 = ctrl[iy, ix]
            g10 = ctrl[iy + 1, ix]
            g01 = ctrl[iy, ix + 1]
            g11 = ctrl[iy + 1, ix + 1]
            top = g00 * (1.0 - u) + g10 * u
            bot = g01 * (1.0 - u) + g11 * u
            out[y, x] = top * (1.0 - v) + bot * v
    return out_arr
