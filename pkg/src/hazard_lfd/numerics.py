"""Numerical substrate: natural cubic splines, max-error search, DTW, knot merging.

The spline code follows the classic moment (second-derivative) formulation:
interior moments solve a tridiagonal system, natural boundaries pin the end
moments to zero, and each interval stores the local cubic coefficients
``a + b*t + c*t^2 + d*t^3`` with ``t = y - y_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DuplicateAbscissa,
    EmptyChannel,
    EmptySequence,
    EmptySide,
    OutOfDomain,
    TooFewKnots,
)


@dataclass(frozen=True)
class Knot:
    """A single interpolation point: longitudinal abscissa plus channel value."""

    y: float
    value: float


@dataclass(frozen=True)
class CubicSpline:
    """Natural cubic interpolant over strictly increasing knots."""

    x: np.ndarray  # knot abscissae, shape (n,)
    values: np.ndarray  # knot values, shape (n,)
    a: np.ndarray  # per-interval coefficients, shape (n-1,)
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    @property
    def knots(self) -> tuple[Knot, ...]:
        return tuple(Knot(float(y), float(v)) for y, v in zip(self.x, self.values))

    @property
    def y_min(self) -> float:
        return float(self.x[0])

    @property
    def y_max(self) -> float:
        return float(self.x[-1])

    def _intervals(self, y: np.ndarray) -> np.ndarray:
        return np.clip(np.searchsorted(self.x, y, side="right") - 1, 0, len(self.x) - 2)

    def __call__(self, y):
        """Evaluate the spline; raises OutOfDomain outside the knot span."""
        arr = np.asarray(y, dtype=float)
        if np.any(arr < self.x[0]) or np.any(arr > self.x[-1]):
            raise OutOfDomain(
                f"evaluation outside [{self.x[0]!r}, {self.x[-1]!r}]"
            )
        i = self._intervals(arr)
        t = arr - self.x[i]
        out = self.a[i] + t * (self.b[i] + t * (self.c[i] + t * self.d[i]))
        return float(out) if np.isscalar(y) else out

    def derivative(self, y, order: int = 1):
        """First or second derivative, same domain rules as evaluation."""
        arr = np.asarray(y, dtype=float)
        if np.any(arr < self.x[0]) or np.any(arr > self.x[-1]):
            raise OutOfDomain("derivative outside the knot span")
        i = self._intervals(arr)
        t = arr - self.x[i]
        if order == 1:
            out = self.b[i] + t * (2.0 * self.c[i] + 3.0 * t * self.d[i])
        elif order == 2:
            out = 2.0 * self.c[i] + 6.0 * t * self.d[i]
        else:
            raise ValueError("order must be 1 or 2")
        return float(out) if np.isscalar(y) else out

    def eval_clamped(self, y):
        """Evaluate with constant extension beyond the knot span."""
        arr = np.clip(np.asarray(y, dtype=float), self.x[0], self.x[-1])
        res = self.__call__(arr)
        return float(res) if np.isscalar(y) else res


def _solve_tridiagonal(lower, diag, upper, rhs):
    # Thomas algorithm; the spline system is strictly diagonally dominant.
    n = len(diag)
    cp = np.empty(n)
    dp = np.empty(n)
    cp[0] = upper[0] / diag[0]
    dp[0] = rhs[0] / diag[0]
    for i in range(1, n):
        denom = diag[i] - lower[i] * cp[i - 1]
        cp[i] = upper[i] / denom if i < n - 1 else 0.0
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / denom
    x = np.empty(n)
    x[-1] = dp[-1]
    for i in range(n - 2, -1, -1):
        x[i] = dp[i] - cp[i] * x[i + 1]
    return x


def fit_from_arrays(x, values) -> CubicSpline:
    """Fit a natural cubic spline through (x, values); x strictly increasing."""
    x = np.asarray(x, dtype=float)
    v = np.asarray(values, dtype=float)
    n = len(x)
    if n < 2:
        raise TooFewKnots("need at least 2 knots")
    dx = np.diff(x)
    if np.any(dx == 0.0):
        raise DuplicateAbscissa("knot abscissae must be distinct")
    if np.any(dx < 0.0):
        raise ValueError("knot abscissae must strictly increase")

    m = np.zeros(n)  # second derivatives; natural boundary keeps the ends 0
    if n > 2:
        h = dx
        lower = np.zeros(n - 2)
        diag = np.empty(n - 2)
        upper = np.zeros(n - 2)
        rhs = np.empty(n - 2)
        slopes = np.diff(v) / h
        for k in range(n - 2):
            diag[k] = 2.0 * (h[k] + h[k + 1])
            if k > 0:
                lower[k] = h[k]
            if k < n - 3:
                upper[k] = h[k + 1]
            rhs[k] = 6.0 * (slopes[k + 1] - slopes[k])
        m[1:-1] = _solve_tridiagonal(lower, diag, upper, rhs)

    h = dx
    a = v[:-1].copy()
    b = np.diff(v) / h - h * (2.0 * m[:-1] + m[1:]) / 6.0
    c = m[:-1] / 2.0
    d = (m[1:] - m[:-1]) / (6.0 * h)
    return CubicSpline(x=x, values=v, a=a, b=b, c=c, d=d)


def fit_natural_cubic(knots: Sequence[Knot]) -> CubicSpline:
    """Fit a natural cubic spline through a knot sequence."""
    if len(knots) < 2:
        raise TooFewKnots("need at least 2 knots")
    return fit_from_arrays([k.y for k in knots], [k.value for k in knots])


def max_error_point(spline: CubicSpline, ys, values) -> tuple[int, float]:
    """Index and magnitude of the largest |value - S(y)| over a sample channel.

    Ties resolve to the smallest index. All abscissae must lie inside the
    spline domain.
    """
    ys = np.asarray(ys, dtype=float)
    values = np.asarray(values, dtype=float)
    if len(ys) == 0:
        raise EmptyChannel("no samples to compare against")
    errs = np.abs(values - spline(ys))
    idx = int(np.argmax(errs))
    return idx, float(errs[idx])


# -- dynamic time warping -----------------------------------------------------


@dataclass(frozen=True)
class WarpPath:
    """Monotone index alignment from sequence a onto sequence b."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(map(tuple, self.pairs)))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def dtw_align(a, b) -> tuple[WarpPath, float]:
    """Classic dynamic time warping with absolute-difference local cost.

    Steps are (1,0), (0,1) and (1,1); the returned distance is the sum of
    local costs along the optimal path. Ties in the traceback prefer the
    diagonal step.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        raise EmptySequence("both sequences must be non-empty")

    cost = np.abs(a[:, None] - b[None, :])
    acc = np.full((n + 1, m + 1), np.inf)
    acc[0, 0] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            acc[i, j] = cost[i - 1, j - 1] + min(
                acc[i - 1, j - 1], acc[i - 1, j], acc[i, j - 1]
            )

    pairs = []
    i, j = n - 1, m - 1
    while i > 0 or j > 0:
        pairs.append((i, j))
        moves = (acc[i, j], acc[i, j + 1], acc[i + 1, j])  # diag, up, left
        k = int(np.argmin(moves))
        if k == 0:
            i, j = i - 1, j - 1
        elif k == 1:
            i -= 1
        else:
            j -= 1
    pairs.append((0, 0))
    pairs.reverse()
    return WarpPath(tuple(pairs)), float(acc[n, m])


# -- piecewise combination ----------------------------------------------------


def piecewise_combine(
    knots_a: Sequence[Knot], knots_b: Sequence[Knot], junction_y: float
) -> CubicSpline:
    """Merge two knot sets at a junction and fit one natural cubic over the union.

    Set ``a`` contributes knots strictly below the junction, set ``b`` knots at
    or above it, so the result is a single C2 spline across the junction. If a
    duplicate abscissa survives the split, the b-side knot wins: the region
    from the junction onward belongs to the next behavior model.
    """
    below = [k for k in knots_a if k.y < junction_y]
    above = [k for k in knots_b if k.y >= junction_y]
    if not below or not above:
        raise EmptySide(
            f"junction {junction_y!r} leaves {'a' if not below else 'b'} side empty"
        )
    merged: dict[float, Knot] = {}
    for k in below:
        merged[k.y] = k
    for k in above:
        merged[k.y] = k  # b-side overrides equal abscissae
    ordered = [merged[y] for y in sorted(merged)]
    return fit_natural_cubic(ordered)
