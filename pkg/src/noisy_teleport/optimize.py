"""Multi-start maximization over a few angles.

A deterministic coarse grid locates candidate basins; the best cells are then
polished with bounded Nelder-Mead (scipy). Grid values are reduced in index
order, so the result does not depend on evaluation order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import bisect as scipy_bisect
from scipy.optimize import minimize


@dataclass(frozen=True)
class AngleResult:
    """An optimized figure of merit and the angles that achieve it."""

    value: float
    angles: tuple = field(default_factory=tuple)

    def __iter__(self):
        yield self.value
        yield self.angles


def grid_axis(lo: float, hi: float, n: int, endpoint: bool = True) -> np.ndarray:
    return np.linspace(lo, hi, n, endpoint=endpoint)


def maximize_angles(
    f: Callable[[np.ndarray], float],
    axes: Sequence[np.ndarray],
    bounds: Sequence[tuple[float, float]] | None = None,
    batch_f: Callable[[np.ndarray], np.ndarray] | None = None,
    n_starts: int = 4,
    extra_starts: Sequence[Sequence[float]] = (),
    maxiter: int = 500,
    xatol: float = 1e-9,
    fatol: float = 1e-15,
) -> AngleResult:
    """Maximize ``f`` over the box spanned by ``axes``.

    ``batch_f`` evaluates an ``(m, d)`` array of points at once; it is only
    used for the grid scan. The returned value is ``f`` re-evaluated at the
    returned angles.
    """
    pts = np.array(list(itertools.product(*axes)), dtype=float)
    if batch_f is not None:
        vals = np.asarray(batch_f(pts), dtype=float)
    else:
        vals = np.array([f(p) for p in pts])
    # Stable sort keeps grid index order among ties.
    order = np.argsort(-vals, kind="stable")[:n_starts]
    starts = [pts[i] for i in order] + [np.asarray(s, dtype=float) for s in extra_starts]

    steps = np.array([(ax[1] - ax[0]) if len(ax) > 1 else 0.1 for ax in axes], dtype=float)
    lo = hi = None
    if bounds is not None:
        lo = np.array([b[0] for b in bounds])
        hi = np.array([b[1] for b in bounds])

    best_x, best_v = pts[order[0]], float(vals[order[0]])
    for x0 in starts:
        if lo is not None:
            x0 = np.clip(x0, lo, hi)
        simplex = [x0]
        for k in range(len(x0)):
            vertex = x0.copy()
            vertex[k] += steps[k] / 2
            if hi is not None and vertex[k] > hi[k]:
                vertex[k] = x0[k] - steps[k] / 2
            simplex.append(vertex)
        res = minimize(
            lambda x: -f(x),
            x0,
            method="Nelder-Mead",
            bounds=bounds,
            options={
                "initial_simplex": np.array(simplex),
                "maxiter": maxiter,
                "xatol": xatol,
                "fatol": fatol,
            },
        )
        v = -float(res.fun)
        if v > best_v:
            best_x, best_v = np.asarray(res.x, dtype=float), v
    return AngleResult(float(f(best_x)), tuple(float(a) for a in best_x))


def bisect(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Root of ``f`` on ``[lo, hi]``; raises ``ArithmeticError`` without a sign change."""
    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise ArithmeticError(
            f"no sign change on [{lo:.6g}, {hi:.6g}]: f(lo)={flo:.6g}, f(hi)={fhi:.6g}"
        )
    return float(scipy_bisect(f, lo, hi, xtol=tol, maxiter=200))
