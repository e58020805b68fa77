"""Numerical integration engines.

Four devices cover everything the closed forms and their oracles need:

* adaptive finite-interval quadrature with a nested Gauss-Legendre
  error estimate (`integrate_finite`),
* tanh-sinh (double exponential) quadrature for panels with integrable
  endpoint singularities (`tanh_sinh`),
* a panel-plus-acceleration scheme for semi-infinite oscillatory
  integrands with exponential damping (`integrate_semiinfinite_damped`),
* symmetric-subtraction Cauchy principal values (`integrate_pv`),

plus Richardson extrapolation of epsilon-indexed sequences to 0.

Integrands are called with numpy arrays of abscissae and should return
an array of values; plain scalar callables are detected and wrapped.
Error estimates are absolute.
"""

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    InsufficientDataError,
    NonConvergenceError,
    PoleOnBoundaryError,
)

_MAX_PANELS = 4096
_MAX_OSC_PANELS = 4000


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class EpsSchedule:
    """Strictly decreasing damping parameters, at least halving each step."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("empty epsilon schedule")
        if any(v <= 0.0 for v in vals):
            raise ValueError("epsilon values must be positive")
        for prev, cur in zip(vals, vals[1:]):
            if cur > 0.5 * prev:
                raise ValueError(
                    "epsilon schedule must decrease by at least a factor 2"
                )


DEFAULT_EPS_SCHEDULE = EpsSchedule((0.2, 0.1, 0.05, 0.025))


@lru_cache(maxsize=16)
def gauss_legendre(n):
    """Cached Gauss-Legendre nodes and weights on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def _vectorized(f):
    """Wrap f so it accepts an ndarray; probe once on first call."""
    state = {"mode": None}

    def call(x):
        if state["mode"] == "vector":
            return np.asarray(f(x))
        if state["mode"] == "scalar":
            return np.asarray([f(float(xi)) for xi in x])
        try:
            y = np.asarray(f(x))
            if y.shape == x.shape:
                state["mode"] = "vector"
                return y
        except (TypeError, ValueError):
            pass
        state["mode"] = "scalar"
        return np.asarray([f(float(xi)) for xi in x])

    return call


def _gauss_panel(f, a, b, nodes, weights):
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    vals = f(mid + half * nodes)
    return half * np.sum(weights * vals)


def integrate_finite(f, a, b, tol, max_panels=_MAX_PANELS):
    """Adaptive quadrature of f on [a, b] to absolute tolerance tol.

    Globally adaptive: the panel with the worst nested-rule error
    estimate (its 15-point Gauss value against the sum of its two
    half-panel values) is bisected first, until the summed estimate
    drops below tol.  Worst-first refinement piles bisections up
    geometrically at integrable endpoint singularities, so those
    converge as well.  Budget exhaustion returns the best estimate
    with converged=False.
    """
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    fv = _vectorized(f)
    nodes, weights = gauss_legendre(15)

    def single(pa, pb):
        return _gauss_panel(fv, pa, pb, nodes, weights)

    whole = single(a, b)
    evaluations = 15
    span = b - a

    def make_item(pa, pb, coarse):
        nonlocal evaluations
        mid = 0.5 * (pa + pb)
        left = single(pa, mid)
        right = single(mid, pb)
        evaluations += 30
        return (-abs(coarse - (left + right)), pa, pb, left, right)

    heap = [make_item(a, b, whole)]
    err_in_heap = -heap[0][0]
    frozen_value = 0.0 + 0.0j  # panels at minimum width, error frozen
    frozen_err = 0.0
    n_panels = 1
    # second clause: once width-frozen error dominates, further panel
    # splitting cannot reach tol; stop early instead of burning budget
    while (
        heap
        and n_panels < max_panels
        and err_in_heap + frozen_err > tol
        and err_in_heap > 0.25 * frozen_err
    ):
        neg_err, pa, pb, pl, pr = heapq.heappop(heap)
        err_in_heap += neg_err
        if (pb - pa) <= 1e-14 * span + 1e-300:
            frozen_value += pl + pr
            frozen_err += -neg_err
            continue
        mid = 0.5 * (pa + pb)
        item_l = make_item(pa, mid, pl)
        item_r = make_item(mid, pb, pr)
        heapq.heappush(heap, item_l)
        heapq.heappush(heap, item_r)
        err_in_heap += -item_l[0] - item_r[0]
        n_panels += 1
    total = frozen_value + sum(it[3] + it[4] for it in heap)
    err_total = frozen_err + sum(-it[0] for it in heap)
    return QuadratureResult(
        complex(total), err_total, evaluations, err_total <= tol * 1.01 + 1e-300
    )


def tanh_sinh(f, a, b, tol, max_level=12):
    """Double-exponential quadrature on (a, b), open at both ends.

    Node offsets from the endpoints are formed in exp space so the rule
    can push arbitrarily close to integrable singularities without
    cancellation.  Levels halve the step until two successive sums agree
    to tol.
    """
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    fv = _vectorized(f)
    width = b - a
    t_max = 4.0
    evaluations = 0

    def batch(ts):
        nonlocal evaluations
        u = 0.5 * math.pi * np.sinh(ts)
        e2u = np.exp(-2.0 * u)
        delta = width * e2u / (1.0 + e2u)  # distance to nearest endpoint
        sech2 = 4.0 * e2u / (1.0 + e2u) ** 2
        w = 0.5 * width * 0.5 * math.pi * np.cosh(ts) * sech2
        lo = fv(a + delta)
        hi = fv(b - delta)
        evaluations += 2 * len(ts)
        return np.sum(w * (lo + hi))

    h = 1.0
    ts = np.arange(1, int(t_max / h) + 1) * h
    center_weight = 0.5 * width * 0.5 * math.pi
    mid_val = fv(np.array([0.5 * (a + b)]))[0]
    evaluations += 1
    total = center_weight * mid_val + batch(ts)
    prev = h * total
    result = prev
    err = abs(prev)
    converged = False
    for level in range(1, max_level + 1):
        h *= 0.5
        ts = np.arange(1, int(t_max / h) + 1, 2) * h  # odd multiples only
        total += batch(ts)
        result = h * total
        err = abs(result - prev)
        prev = result
        if err <= tol:
            converged = True
            break
    return QuadratureResult(complex(result), err, evaluations, converged)


def _wynn_epsilon(partial):
    """Wynn epsilon table on a window of partial sums.

    Returns the last entry of the highest even column that stays
    numerically sane, together with the change from the previous even
    column (used as the acceleration error estimate).
    """
    cur = list(partial)
    prev_col = None  # odd predecessor
    best = cur[-1]
    change = abs(cur[-1] - cur[-2]) if len(cur) > 1 else abs(cur[-1])
    col = 0
    while len(cur) >= 3:
        nxt = []
        for i in range(len(cur) - 1):
            diff = cur[i + 1] - cur[i]
            if abs(diff) < 1e-300:
                return best, 0.0
            aux = prev_col[i + 1] if prev_col is not None else 0.0
            nxt.append(aux + 1.0 / diff)
        prev_col = cur
        cur = nxt
        col += 1
        if col % 2 == 0:
            change = abs(cur[-1] - best)
            best = cur[-1]
    return best, change


def integrate_semiinfinite_damped(f, damping, zero_spacing, tol):
    """Integrate f over [0, inf) for oscillatory f with e^{-damping*k} decay.

    The half-line is cut into panels of width zero_spacing (half an
    oscillation for the intended Bessel-product kernels), each panel is
    integrated by a nested Gauss pair, and the sequence of partial sums
    is accelerated by Wynn's epsilon algorithm, which both speeds up
    convergence and supplies the truncation error estimate.  The first
    panel uses tanh-sinh since the integrand may have an integrable
    singularity at 0.

    Raises NonConvergenceError when the panel magnitudes fail to decay
    (wrong damping / spacing hints).
    """
    if damping <= 0.0 or zero_spacing <= 0.0 or tol <= 0.0:
        raise ValueError("damping, zero_spacing and tol must be positive")
    fv = _vectorized(f)
    k_max = max(50.0, 40.0 / damping)
    n_panels = min(int(math.ceil(k_max / zero_spacing)), _MAX_OSC_PANELS)

    n15, w15 = gauss_legendre(15)
    n7, w7 = gauss_legendre(7)
    half = 0.5 * zero_spacing
    first = tanh_sinh(fv, 0.0, zero_spacing, tol * 1e-2)
    evaluations = first.evaluations
    panel_err = first.error_estimate

    partial = [first.value]
    panel_mags = [abs(first.value)]
    best = first.value
    best_change = abs(first.value)
    stable = 0
    block = 8  # panels per integrand call; specfun batches amortize
    j = 1
    while j < n_panels:
        jend = min(j + block, n_panels)
        nb = jend - j
        mids = (np.arange(j, jend) + 0.5) * zero_spacing
        xs = np.concatenate(
            ((mids[:, None] + half * n15[None, :]).ravel(),
             (mids[:, None] + half * n7[None, :]).ravel())
        )
        vals = fv(xs)
        evaluations += len(xs)
        v15 = half * (vals[: nb * 15].reshape(nb, 15) @ w15)
        v7 = half * (vals[nb * 15:].reshape(nb, 7) @ w7)
        for i in range(nb):
            jj = j + i
            panel_err += abs(v15[i] - v7[i]) * 0.1
            partial.append(partial[-1] + v15[i])
            panel_mags.append(abs(v15[i]))
            if jj >= 6:
                est, change = _wynn_epsilon(partial[-16:])
                scale = max(abs(est), 1e-300)
                if abs(est - best) <= 0.5 * tol * scale and change <= tol * scale:
                    stable += 1
                else:
                    stable = 0
                best, best_change = est, change
                if stable >= 2 and panel_mags[-1] <= math.sqrt(tol) * scale:
                    err = best_change + panel_err + panel_mags[-1] * tol
                    return QuadratureResult(complex(best), err, evaluations, True)
            if jj >= 12 and jj % 12 == 0:
                head = max(panel_mags[1:5])
                tail = max(panel_mags[-4:])
                if tail > 4.0 * head + 1e-300 and tail > 1e-12:
                    raise NonConvergenceError(
                        "panel magnitudes are growing; check damping/zero_spacing"
                    )
        j = jend

    err = best_change + panel_err + panel_mags[-1]
    return QuadratureResult(complex(best), err, evaluations, False)


def integrate_pv(density, g, pole, tol):
    """Cauchy principal value of density(s)*g(s) over the support of g.

    density has (at most) a simple pole at `pole`; g supplies its own
    support interval.  On the symmetric window [pole-h, pole+h] the odd
    part of the singularity cancels exactly:

        Pv int = int_0^h (phi(pole+t) - phi(pole-t))/t dt,
        phi(s) = density(s) * g(s) * (s - pole),

    and the remainder is pole-free ordinary quadrature.
    """
    lo, hi = g.support
    guard = 1e-10 * max(1.0, abs(pole))
    if abs(pole - lo) < guard or abs(pole - hi) < guard:
        raise PoleOnBoundaryError(
            f"pole {pole} coincides with a support endpoint of [{lo}, {hi}]"
        )
    gv = _vectorized(g)
    dv = _vectorized(density)
    if not lo < pole < hi:
        return integrate_finite(lambda s: dv(s) * gv(s), lo, hi, tol)

    h = min(pole - lo, hi - pole, 0.5)

    def sym(t):
        # below ~1e-13 the offset underflows against the pole; the
        # quotient tends smoothly to 2 phi'(pole), so clamping is exact
        # to rounding
        t = np.maximum(np.asarray(t, dtype=float), 1e-13 * max(1.0, abs(pole)))
        up = pole + t
        dn = pole - t
        return (dv(up) * gv(up) * (up - pole) - dv(dn) * gv(dn) * (dn - pole)) / t

    parts = [integrate_finite(sym, 0.0, h, 0.5 * tol)]
    if lo < pole - h:
        parts.append(integrate_finite(lambda s: dv(s) * gv(s), lo, pole - h, 0.25 * tol))
    if pole + h < hi:
        parts.append(integrate_finite(lambda s: dv(s) * gv(s), pole + h, hi, 0.25 * tol))
    value = sum(p.value for p in parts)
    err = sum(p.error_estimate for p in parts)
    evals = sum(p.evaluations for p in parts)
    return QuadratureResult(complex(value), err, evals, all(p.converged for p in parts))


def richardson(seq):
    """Polynomial extrapolation of (eps, value) pairs to eps = 0.

    Returns (limit, error_estimate); the estimate is the magnitude of
    the last Neville correction.
    """
    pairs = [(float(e), complex(v)) for e, v in seq]
    if len(pairs) < 3:
        raise InsufficientDataError("need at least 3 (eps, value) pairs")
    eps = [p[0] for p in pairs]
    if any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])):
        raise ValueError("eps values must be strictly decreasing")
    n = len(pairs)
    tab = [p[1] for p in pairs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            tab[i] = tab[i] + (tab[i] - tab[i - 1]) * eps[i] / (eps[i - j] - eps[i])
    err = abs(tab[-1] - tab[-2])
    return tab[-1], err
