"""Radial grids, quadrature, inner products and energy functionals.

Everything lives on a cell-centered mesh r_i = (i + 1/2) h, i = 0..n-1,
which avoids the coordinate singularity at r = 0.  Integrals against the
radial measure r^(D-1) dr use the midpoint rule, so the quadrature weight
of node i is h * r_i^(D-1).  Localized quantities snap interval endpoints
to the nearest cell boundary (a multiple of h), which makes norms over
complementary intervals add up exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolation

SUPPORTED_DIMS = (4, 5, 6, 7, 8)


@dataclass(frozen=True)
class RadialGrid:
    """Cell-centered radial mesh on (0, r_max] in dimension D."""

    D: int
    n: int
    h: float
    r: np.ndarray = field(repr=False, default=None)
    weights: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.D not in SUPPORTED_DIMS:
            raise ContractViolation(f"dimension {self.D} not in {SUPPORTED_DIMS}")
        if self.n < 8 or self.h <= 0.0:
            raise ContractViolation("need n >= 8 and h > 0")
        r = (np.arange(self.n) + 0.5) * self.h
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "weights", self.h * r ** (self.D - 1))

    @classmethod
    def make(cls, D: int, n: int, r_max: float) -> "RadialGrid":
        return cls(D=D, n=n, h=r_max / n)

    @property
    def r_max(self) -> float:
        return self.n * self.h

    def snap_index(self, radius: float) -> int:
        """Index of the cell boundary nearest to `radius`, clipped to [0, n]."""
        return int(np.clip(round(radius / self.h), 0, self.n))


@dataclass
class FieldPair:
    """State pair (u, udot) sampled on a grid."""

    grid: RadialGrid
    u: np.ndarray
    udot: np.ndarray

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=float)
        self.udot = np.asarray(self.udot, dtype=float)
        if self.u.shape != (self.grid.n,) or self.udot.shape != (self.grid.n,):
            raise ContractViolation("field length does not match grid")

    def check_finite(self):
        if not (np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.udot))):
            raise ContractViolation("non-finite field values")

    def copy(self) -> "FieldPair":
        return FieldPair(self.grid, self.u.copy(), self.udot.copy())

    @classmethod
    def zero(cls, grid: RadialGrid) -> "FieldPair":
        return cls(grid, np.zeros(grid.n), np.zeros(grid.n))


def inner_product(phi: np.ndarray, psi: np.ndarray, grid: RadialGrid) -> float:
    """Midpoint-rule approximation of the weighted pairing
    integral of phi * psi * r^(D-1) dr over (0, r_max)."""
    phi = np.asarray(phi)
    psi = np.asarray(psi)
    if phi.shape != (grid.n,) or psi.shape != (grid.n,):
        raise ContractViolation("vector length does not match grid")
    return float(np.sum(phi * psi * grid.weights))


def radial_derivative(u: np.ndarray, grid: RadialGrid) -> np.ndarray:
    """Second-order d/dr: centered in the interior, one-sided at the ends.

    Computed once on the full grid; localized norms restrict the quadrature
    afterwards, so norms over complementary intervals add exactly.
    """
    h = grid.h
    du = np.empty_like(u)
    du[1:-1] = (u[2:] - u[:-2]) / (2.0 * h)
    du[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h)
    du[-1] = (3.0 * u[-1] - 4.0 * u[-2] + u[-3]) / (2.0 * h)
    return du


def energy_norm(pair: FieldPair, r1: float, r2: float) -> float:
    """Localized energy norm: sqrt of the integral over (r1, r2) of
    udot^2 + (du/dr)^2 + u^2/r^2 against r^(D-1) dr.

    Endpoints snap to the nearest cell boundary.
    """
    if not (0.0 <= r1 < r2 <= pair.grid.r_max + 0.5 * pair.grid.h):
        raise ContractViolation(f"need 0 <= r1 < r2 <= r_max, got ({r1}, {r2})")
    return float(np.sqrt(energy_norm_sq_profile(pair)[_slice_for(pair.grid, r1, r2)].sum()))


def energy_norm_sq_profile(pair: FieldPair) -> np.ndarray:
    """Per-cell contributions to the squared energy norm."""
    g = pair.grid
    du = radial_derivative(pair.u, g)
    return (pair.udot**2 + du**2 + (pair.u / g.r) ** 2) * g.weights


def _slice_for(grid: RadialGrid, r1: float, r2: float) -> slice:
    i1 = grid.snap_index(r1)
    i2 = grid.snap_index(r2)
    if i1 >= i2:
        raise ContractViolation("interval collapses after snapping to cell boundaries")
    return slice(i1, i2)


def nonlinear_energy(pair: FieldPair, r1: float = 0.0, r2: float | None = None) -> float:
    """Conserved energy on (r1, r2): kinetic + gradient minus the focusing
    potential (D-2)/(2D) |u|^(2D/(D-2))."""
    g = pair.grid
    if r2 is None:
        r2 = g.r_max
    if not (0.0 <= r1 < r2 <= g.r_max + 0.5 * g.h):
        raise ContractViolation(f"need 0 <= r1 < r2 <= r_max, got ({r1}, {r2})")
    D = g.D
    du = radial_derivative(pair.u, g)
    p = 2.0 * D / (D - 2.0)
    dens = 0.5 * (pair.udot**2 + du**2) - (D - 2.0) / (2.0 * D) * np.abs(pair.u) ** p
    return float((dens * g.weights)[_slice_for(g, r1, r2)].sum())


# ---------------------------------------------------------------------------
# Discrete radial Laplacians.
#
# laplacian_operator: finite-volume form with edge conductances, exactly
# self-adjoint w.r.t. the midpoint weights.  The innermost conductance is
# chosen to reproduce the even-reflection stencil D*(u_1 - u_0)/h^2 at the
# first node, which keeps the spectral radius ~ D/h^2 so that explicit time
# stepping at dt = cfl*h remains stable for cfl <= ~0.7 in all supported D.
# Outer boundary: homogeneous Dirichlet at the cell edge r = r_max
# (antisymmetric ghost).
#
# laplacian_centered: classical pointwise stencil (centered differences plus
# the (D-1)/r first-derivative term, even ghost at the origin); used for
# stationarity residuals where pointwise consistency at every node matters.
# ---------------------------------------------------------------------------


class RadialLaplacian:
    """Self-adjoint finite-volume discretization of the radial Laplacian."""

    def __init__(self, grid: RadialGrid):
        self.grid = grid
        D, n, h = grid.D, grid.n, grid.h
        r, w = grid.r, grid.weights
        K = np.empty(n + 1)
        K[0] = 0.0  # no flux through r = 0
        K[1] = D * w[0] / h**2  # reproduces the even-reflection row at node 0
        i = np.arange(1, n)
        K[2:] = (r[i] ** (D - 1) + (D - 1) * (h / 2.0) * r[i] ** (D - 2)) / h
        self.K = K
        self._w = w

    def __call__(self, u: np.ndarray) -> np.ndarray:
        n = self.grid.n
        du = np.empty(n + 1)
        du[1:n] = u[1:] - u[:-1]
        du[0] = 0.0
        du[n] = -2.0 * u[-1]  # antisymmetric ghost: u = 0 at the edge r_max
        F = self.K * du
        return (F[1:] - F[:-1]) / self._w

    def quadratic_form(self, u: np.ndarray) -> float:
        """<-Lap u, u> in the weighted inner product; equals the sum of
        conductance-weighted squared edge differences (>= 0)."""
        du_in = u[1:] - u[:-1]
        val = float(np.sum(self.K[1:-1] * du_in**2))
        val += float(self.K[-1] * 2.0 * u[-1] ** 2)
        return val


def laplacian_centered(
    u: np.ndarray, grid: RadialGrid, outer_ghost: float = 0.0
) -> np.ndarray:
    """Pointwise second-order radial Laplacian with an even ghost at the
    origin.  `outer_ghost` supplies the field value at r = (n + 1/2) h."""
    D, h, r = grid.D, grid.h, grid.r
    out = np.empty_like(u)
    c = (D - 1.0) / (2.0 * h * r)
    out[1:-1] = (u[2:] - 2.0 * u[1:-1] + u[:-2]) / h**2 + c[1:-1] * (u[2:] - u[:-2])
    out[0] = D * (u[1] - u[0]) / h**2
    out[-1] = (outer_ghost - 2.0 * u[-1] + u[-2]) / h**2 + c[-1] * (outer_ghost - u[-2])
    return out
