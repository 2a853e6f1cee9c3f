"""Closed-form density of ab + ba for free a, b with law (delta_0 + delta_2)/2, and its check."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import DomainError
from .series import RationalSeries, moments_from_eta, solve_anticommutator_same

SUPPORT = ((-1.0, 0.0), (0.0, 8.0))


def _rt(y):
    return math.sqrt(y) if y > 0 else 0.0


def anticommutator_density(x):
    """Density of ab + ba at x in (-1, 0) or (0, 8)."""
    x = float(x)
    if -1.0 < x < 0.0:
        num = _rt(-1.0 - math.sqrt((x - 8.0) / x) - 4.0 / x)
        den = 8.0 - 3.0 * math.sqrt((x - 8.0) * x) - x
        return math.sqrt(2.0) / math.pi * num / den
    if 0.0 < x < 8.0:
        r = math.sqrt(1.0 + x)
        # 4r - 4 - x cancels badly near 0; equal to x (3 - r) / (1 + r)
        small = x * (3.0 - r) / (1.0 + r)
        num = _rt(x * small) + 3.0 * math.sqrt((8.0 - x) * (4.0 * r + x + 4.0)) - 8.0 * _rt(small / x)
        return num / (math.pi * 8.0 * (8.0 - x) * (1.0 + x))
    raise DomainError(f"x = {x} is outside (-1, 0) U (0, 8)")


def _edge_integral(g, lo, hi):
    """Integral of g over (lo, hi) with x = lo + t^2 and x = hi - t^2 on the two halves."""
    mid = 0.5 * (lo + hi)
    h = math.sqrt(mid - lo)
    left, _ = quad(lambda t: 2.0 * t * g(lo + t * t), 0.0, h, limit=200, epsabs=1e-13, epsrel=1e-13)
    right, _ = quad(lambda t: 2.0 * t * g(hi - t * t), 0.0, h, limit=200, epsabs=1e-13, epsrel=1e-13)
    return left + right


def density_moment(k):
    total = 0.0
    for lo, hi in SUPPORT:
        total += _edge_integral(lambda x: x ** k * anticommutator_density(x) if lo < x < hi else 0.0, lo, hi)
    return total


def series_moments(order):
    """Exact moments m_0..m_order of ab + ba from the same-distribution solver."""
    eta = RationalSeries([0] + [1] * (2 * order))  # z/(1-z)
    sol = solve_anticommutator_same(eta, order)
    return [1] + list(moments_from_eta(sol.eta_ac).values)


@dataclass(frozen=True)
class DensityReport:
    rows: tuple  # (k, quadrature moment, exact moment, absolute error)
    tolerance: float

    @property
    def passed(self):
        return all(err <= self.tolerance for *_, err in self.rows)

    def lines(self):
        out = [f"k={k} quadrature={q:.12g} exact={e} abs_err={err:.3g}" for k, q, e, err in self.rows]
        out.append("PASS" if self.passed else "FAIL")
        return out


def verify_density(order=6, tolerance=1e-6):
    exact = series_moments(order)
    rows = []
    for k in range(order + 1):
        q = density_moment(k)
        rows.append((k, q, exact[k], abs(q - float(exact[k]))))
    return DensityReport(tuple(rows), tolerance)


def sample_grid(samples):
    """Density at ``samples`` cell midpoints of a uniform grid on (-1, 8).

    Midpoints never hit -1, 0 or 8.
    """
    if samples < 2:
        raise DomainError("need at least 2 samples")
    step = 9.0 / samples
    xs = [-1.0 + (k + 0.5) * step for k in range(samples)]
    return [(x, anticommutator_density(x)) for x in xs]
