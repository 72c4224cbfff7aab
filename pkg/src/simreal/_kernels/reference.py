"""Pure-numpy implementations of the per-pixel kernels.

These are the fallback for the compiled extension and the reference its
output is checked against. The arithmetic here is written with the exact
same operation order as the compiled code so both backends produce
bit-identical float64 results.
"""

from __future__ import annotations

import numpy as np


def sobel_magnitude(gray: np.ndarray) -> np.ndarray:
    """3x3 Sobel gradient magnitude with replicate border handling.

    Input is a 2-D float64 image; output is the unnormalized magnitude
    sqrt(gx^2 + gy^2), so a unit step yields a peak of 4.
    """
    g = np.asarray(gray, dtype=np.float64)
    if g.ndim != 2:
        raise ValueError("sobel_magnitude expects a 2-D array")
    p = np.pad(g, 1, mode="edge")
    a00 = p[:-2, :-2]
    a01 = p[:-2, 1:-1]
    a02 = p[:-2, 2:]
    a10 = p[1:-1, :-2]
    a12 = p[1:-1, 2:]
    a20 = p[2:, :-2]
    a21 = p[2:, 1:-1]
    a22 = p[2:, 2:]
    gx = (a02 + 2.0 * a12 + a22) - (a00 + 2.0 * a10 + a20)
    gy = (a20 + 2.0 * a21 + a22) - (a00 + 2.0 * a01 + a02)
    return np.sqrt(gx * gx + gy * gy)


def hysteresis_mask(mag: np.ndarray, low: float, high: float) -> np.ndarray:
    """Keep pixels >= low that are 8-connected to a pixel >= high.

    Returns a uint8 mask. The result is a pure reachability computation,
    so it is independent of traversal order.
    """
    m = np.asarray(mag, dtype=np.float64)
    weak = m >= low
    strong = m >= high
    reach = strong.copy()
    while True:
        grown = _dilate8(reach) & weak
        if np.array_equal(grown, reach):
            break
        reach = grown
    return reach.astype(np.uint8)


def _dilate8(mask: np.ndarray) -> np.ndarray:
    p = np.pad(mask, 1, mode="constant", constant_values=False)
    out = mask.copy()
    for dy in (-1, 0, 1):
        for dx in (-1, 0, 1):
            out |= p[1 + dy : p.shape[0] - 1 + dy, 1 + dx : p.shape[1] - 1 + dx]
    return out


def value_noise(grid: np.ndarray, height: int, width: int) -> np.ndarray:
    """Smoothstep-interpolated upsample of a coarse noise grid.

    Produces a (height, width) float64 field from a (gh, gw) control grid,
    matching the compiled kernel bit for bit.
    """
    g = np.asarray(grid, dtype=np.float64)
    if g.ndim != 2 or g.shape[0] < 2 or g.shape[1] < 2:
        raise ValueError("value_noise expects a control grid of at least 2x2")
    gh, gw = g.shape
    sy = (gh - 1) / (height - 1) if height > 1 else 0.0
    sx = (gw - 1) / (width - 1) if width > 1 else 0.0
    y = np.arange(height, dtype=np.float64) * sy
    x = np.arange(width, dtype=np.float64) * sx
    iy = np.minimum(y.astype(np.int64), gh - 2)
    ix = np.minimum(x.astype(np.int64), gw - 2)
    fy = y - iy
    fx = x - ix
    u = fy * fy * (3.0 - 2.0 * fy)
    v = fx * fx * (3.0 - 2.0 * fx)
    g00 = g[iy[:, None], ix[None, :]]
    g10 = g[iy[:, None] + 1, ix[None, :]]
    g01 = g[iy[:, None], ix[None, :] + 1]
    g11 = g[iy[:, None] + 1, ix[None, :] + 1]
    u2 = u[:, None]
    v2 = v[None, :]
    top = g00 * (1.0 - u2) + g10 * u2
    bot = g01 * (1.0 - u2) + g11 * u2
    return top * (1.0 - v2) + bot * v2
