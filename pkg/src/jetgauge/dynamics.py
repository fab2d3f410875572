"""Weak-field field strength, discrete curvature, and force-law integration.

Conventions.  Indices are raised and lowered with eta = diag(-1, 1, 1, 1).
The electromagnetic-type field strength built from the metric components
g_mu := g_{mu,00} is

    F^mu_nu = eta^{mu d} (d_d g_nu - d_nu g_d),

antisymmetric after lowering both indices.  The 1/2 that would accompany
the connection coefficients is absorbed into this definition (the nu,00
and 00,nu orderings are summed over once).

The non-abelian field strength is F_{mu nu} = d_mu A_nu - d_nu A_mu +
[A_mu, A_nu]; the commutator term vanishes identically for commuting
potentials.

Trajectories integrate with fixed-step classical RK4, which keeps runs
deterministic and makes golden-file comparisons meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

ETA_DIAG = np.array([-1.0, 1.0, 1.0, 1.0])

_STENCIL4 = ((-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0))  # /(12 h)


class GridBoundaryError(ValueError):
    """Raised when a stencil would reach outside the sampled grid."""


class MetricField:
    """Evaluator of the four metric components g_mu(x) := g_{mu,00}(x)."""

    def __init__(self, func, jacobian=None, step: float = 1e-3):
        self._func = func
        self._jac = jacobian
        self.step = step

    @staticmethod
    def closed_form(func, jacobian=None, step: float = 1e-3) -> "MetricField":
        return MetricField(func, jacobian, step)

    @staticmethod
    def from_grid(values: np.ndarray, origin, spacing: float) -> "GridMetricField":
        return GridMetricField(values, origin, spacing)

    def values(self, x) -> np.ndarray:
        return np.asarray(self._func(np.asarray(x, dtype=float)), dtype=float)

    def jacobian(self, x) -> np.ndarray:
        """J[mu, nu] = d_mu g_nu, 4th-order central differences by default."""
        x = np.asarray(x, dtype=float)
        if self._jac is not None:
            return np.asarray(self._jac(x), dtype=float)
        h = self.step
        jac = np.zeros((4, 4))
        for mu in range(4):
            acc = np.zeros(4)
            for off, w in _STENCIL4:
                xp = x.copy()
                xp[mu] += off * h
                acc += w * self.values(xp)
            jac[mu] = acc / (12.0 * h)
        return jac


class GridMetricField(MetricField):
    """g_mu sampled on a regular 4d grid; queries resolve to grid nodes."""

    def __init__(self, values: np.ndarray, origin, spacing: float):
        values = np.asarray(values, dtype=float)
        if values.ndim != 5 or values.shape[0] != 4:
            raise ValueError("grid values must have shape (4, n0, n1, n2, n3)")
        self.grid = values
        self.origin = np.asarray(origin, dtype=float)
        self.spacing = float(spacing)
        super().__init__(self._node_values, None, spacing)

    def _index(self, x) -> tuple[int, ...]:
        rel = (np.asarray(x, dtype=float) - self.origin) / self.spacing
        idx = np.rint(rel).astype(int)
        if np.max(np.abs(rel - idx)) > 1e-9:
            raise ValueError("grid fields can only be queried at grid nodes")
        return tuple(idx)

    def _node_values(self, x) -> np.ndarray:
        idx = self._index(x)
        shape = self.grid.shape[1:]
        if any(i < 0 or i >= s for i, s in zip(idx, shape)):
            raise GridBoundaryError(f"node {idx} outside grid of shape {shape}")
        return self.grid[(slice(None),) + idx]

    def jacobian(self, x) -> np.ndarray:
        idx = self._index(x)
        shape = self.grid.shape[1:]
        if any(i < 2 or i >= s - 2 for i, s in zip(idx, shape)):
            raise GridBoundaryError(
                f"4th-order stencil at node {idx} leaves grid of shape {shape}"
            )
        jac = np.zeros((4, 4))
        for mu in range(4):
            acc = np.zeros(4)
            for off, w in _STENCIL4:
                nidx = list(idx)
                nidx[mu] += off
                acc += w * self.grid[(slice(None),) + tuple(nidx)]
            jac[mu] = acc / (12.0 * self.spacing)
        return jac


def field_strength_em(g: MetricField, x) -> np.ndarray:
    """F^mu_nu = eta^{mu d}(d_d g_nu - d_nu g_d) at x."""
    jac = g.jacobian(x)
    f_lower = jac - jac.T  # d_mu g_nu - d_nu g_mu, exactly antisymmetric
    return ETA_DIAG[:, None] * f_lower


def grid_field_strength_evaluator(grid: GridMetricField):
    """Continuous F evaluator from a grid metric: node values by stencil,
    multilinear interpolation between nodes (trajectories move off-node)."""
    cache: dict[tuple[int, ...], np.ndarray] = {}
    shape = grid.grid.shape[1:]

    def f_at_node(idx: tuple[int, ...]) -> np.ndarray:
        if idx not in cache:
            if any(i < 2 or i >= s - 2 for i, s in zip(idx, shape)):
                raise GridBoundaryError(
                    f"stencil at node {idx} leaves grid of shape {shape}"
                )
            x_node = grid.origin + grid.spacing * np.array(idx, dtype=float)
            cache[idx] = field_strength_em(grid, x_node)
        return cache[idx]

    def evaluate(x) -> np.ndarray:
        rel = (np.asarray(x, dtype=float) - grid.origin) / grid.spacing
        base = np.floor(rel).astype(int)
        frac = rel - base
        out = np.zeros((4, 4))
        for corner in np.ndindex((2,) * 4):
            w = 1.0
            for axis in range(4):
                w *= frac[axis] if corner[axis] else 1.0 - frac[axis]
            if w:
                out += w * f_at_node(tuple(base + np.array(corner)))
        return out

    return evaluate


class GaugePotentialField:
    """Evaluator of four algebra-valued potentials A_mu(x), shape (4, d, d)."""

    def __init__(self, func, step: float = 1e-3):
        self._func = func
        self.step = step

    def values(self, x) -> np.ndarray:
        a = np.asarray(self._func(np.asarray(x, dtype=float)), dtype=float)
        if a.ndim != 3 or a.shape[0] != 4 or a.shape[1] != a.shape[2]:
            raise ValueError("potential evaluator must return shape (4, d, d)")
        return a

    @property
    def dim(self) -> int:
        return self.values(np.zeros(4)).shape[1]

    def derivative(self, x, mu: int) -> np.ndarray:
        """d_mu A at x, 4th-order central difference; shape (4, d, d)."""
        x = np.asarray(x, dtype=float)
        h = self.step
        acc = None
        for off, w in _STENCIL4:
            xp = x.copy()
            xp[mu] += off * h
            term = w * self.values(xp)
            acc = term if acc is None else acc + term
        return acc / (12.0 * h)


def discrete_field_strength(a: GaugePotentialField, x, mu: int, nu: int) -> np.ndarray:
    """F_{mu nu} = d_mu A_nu - d_nu A_mu + [A_mu, A_nu] at x."""
    da_mu = a.derivative(x, mu)[nu]
    da_nu = a.derivative(x, nu)[mu]
    vals = a.values(x)
    am, an = vals[mu], vals[nu]
    return da_mu - da_nu + am @ an - an @ am


def _field_strength_all(a: GaugePotentialField, x) -> np.ndarray:
    vals = a.values(x)
    derivs = [a.derivative(x, mu) for mu in range(4)]
    d = vals.shape[1]
    f = np.zeros((4, 4, d, d))
    for mu in range(4):
        for nu in range(mu + 1, 4):
            fmn = derivs[mu][nu] - derivs[nu][mu] + vals[mu] @ vals[nu] - vals[nu] @ vals[mu]
            f[mu, nu] = fmn
            f[nu, mu] = -fmn
    return f


def bianchi_residual(a: GaugePotentialField, x) -> float:
    """max over index triples of || cyclic( d_l F_{mn} + [A_l, F_{mn}] ) ||.

    Outer derivatives of F use 2nd-order central differences at the
    potential's step, so for smooth fields the residual decreases as
    O(step^2), plus terms cubic in A.
    """
    x = np.asarray(x, dtype=float)
    h = a.step
    vals = a.values(x)

    def f_at(pt):
        return _field_strength_all(a, pt)

    dfs = []
    for lam in range(4):
        xp, xm = x.copy(), x.copy()
        xp[lam] += h
        xm[lam] -= h
        dfs.append((f_at(xp) - f_at(xm)) / (2.0 * h))
    f0 = f_at(x)
    worst = 0.0
    for lam, mu, nu in itertools.combinations(range(4), 3):
        total = None
        for (l, m, n) in ((lam, mu, nu), (mu, nu, lam), (nu, lam, mu)):
            term = dfs[l][m, n] + vals[l] @ f0[m, n] - f0[m, n] @ vals[l]
            total = term if total is None else total + term
        worst = max(worst, float(np.max(np.abs(total))))
    return worst


def gauge_covariance_check(
    a: GaugePotentialField, lam: np.ndarray, x, pair: tuple[int, int], tol: float = 1e-10
) -> bool:
    """|| F(Lam A Lam^-1) - Lam F(A) Lam^-1 || <= tol for constant orthogonal Lam."""
    lam = np.asarray(lam, dtype=float)
    if np.max(np.abs(lam @ lam.T - np.eye(lam.shape[0]))) > 1e-12:
        raise ValueError("gauge transform must be orthogonal within 1e-12")
    mu, nu = pair
    conj = GaugePotentialField(lambda pt: np.einsum("ij,mjk,lk->mil", lam, a.values(pt), lam), step=a.step)
    f_conj = discrete_field_strength(conj, x, mu, nu)
    f_plain = discrete_field_strength(a, x, mu, nu)
    return float(np.max(np.abs(f_conj - lam @ f_plain @ lam.T))) <= tol


# -- trajectories ---------------------------------------------------------------


@dataclass
class ParticleState:
    x: np.ndarray
    u: np.ndarray
    m: float
    q: float
    charge_vector: np.ndarray | None = None  # algebra-valued charge for Wong runs

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.u = np.asarray(self.u, dtype=float)
        if self.m <= 0:
            raise ValueError("rest mass must be positive")
        if self.x.shape != (4,) or self.u.shape != (4,):
            raise ValueError("x and u must be 4-vectors")


def eta_norm(u: np.ndarray) -> float:
    return float(-u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3])


@dataclass
class Trajectory:
    lambdas: np.ndarray
    xs: np.ndarray
    us: np.ndarray
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.lambdas)

    def eta_drift(self) -> float:
        norms = -self.us[:, 0] ** 2 + np.sum(self.us[:, 1:] ** 2, axis=1)
        return float(np.max(np.abs(norms - norms[0])))

    def rows(self):
        for lam, x, u in zip(self.lambdas, self.xs, self.us):
            yield [lam, *x, *u]


def _integrate(state: ParticleState, accel, dlam: float, nsteps: int, meta) -> Trajectory:
    if dlam <= 0:
        raise ValueError("step must be positive")
    y = np.concatenate([state.x, state.u])

    def rhs(yv):
        return np.concatenate([yv[4:], accel(yv[:4], yv[4:])])

    lambdas = np.empty(nsteps + 1)
    xs = np.empty((nsteps + 1, 4))
    us = np.empty((nsteps + 1, 4))
    lambdas[0], xs[0], us[0] = 0.0, y[:4], y[4:]
    for k in range(nsteps):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * dlam * k1)
        k3 = rhs(y + 0.5 * dlam * k2)
        k4 = rhs(y + dlam * k3)
        y = y + (dlam / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise FloatingPointError(f"non-finite state at step {k + 1}")
        lambdas[k + 1] = (k + 1) * dlam
        xs[k + 1] = y[:4]
        us[k + 1] = y[4:]
    return Trajectory(lambdas, xs, us, meta)


def integrate_lorentz(state: ParticleState, f_eval, dlam: float, nsteps: int) -> Trajectory:
    """RK4 on du^mu/dlam = (q/m) F^mu_nu u^nu; f_eval(x) -> (4, 4)."""
    qm = state.q / state.m

    def accel(x, u):
        return qm * (np.asarray(f_eval(x), dtype=float) @ u)

    traj = _integrate(state, accel, dlam, nsteps, {"law": "lorentz", "dlam": dlam})
    traj.meta["eta_drift"] = traj.eta_drift()
    return traj


def charge_pairing(a: np.ndarray, b: np.ndarray) -> float:
    """Normalized trace pairing -tr(ab)/2; equals 1 on a generator paired
    with itself, so an abelian embedding reduces to the plain charge.

    (The adjoint-trace Killing form itself is proportional to this on a
    simple so(n) but vanishes identically for n = 2, so the defining-
    representation trace form is the usable avatar of the Killing
    pairing here.)
    """
    return float(-np.trace(a @ b) / 2.0)


def integrate_wong(state: ParticleState, f_eval, dlam: float, nsteps: int) -> Trajectory:
    """RK4 on du^mu/dlam = (q/m)(F^mu_nu . I) u^nu.

    f_eval(x) returns the algebra-valued strength, shape (4, 4, d, d); the
    gauge indices contract against the particle's charge vector through
    charge_pairing.  For strengths valued in a one-dimensional abelian
    subalgebra this reduces exactly to integrate_lorentz.
    """
    charge = state.charge_vector
    if charge is None:
        raise ValueError("Wong integration needs a charge vector")
    charge = np.asarray(charge, dtype=float)
    probe = np.asarray(f_eval(state.x), dtype=float)
    if probe.shape[2:] != charge.shape:
        raise ValueError(
            f"charge dimension {charge.shape} does not match field {probe.shape[2:]}"
        )
    qm = state.q / state.m

    def accel(x, u):
        f = np.asarray(f_eval(x), dtype=float)
        feff = -0.5 * np.einsum("mnij,ji->mn", f, charge)
        return qm * (feff @ u)

    traj = _integrate(state, accel, dlam, nsteps, {"law": "wong", "dlam": dlam})
    traj.meta["eta_drift"] = traj.eta_drift()
    return traj


def recalibrate_charge(q: float, m: float, alpha: float) -> float:
    """Central-rest-mass shift q -> q + sqrt(alpha) m."""
    if m <= 0:
        raise ValueError("rest mass must be positive")
    return q + (alpha ** 0.5) * m


# -- ready-made uniform fields ---------------------------------------------------


def uniform_electric_f(e_vec) -> np.ndarray:
    """Constant electric-type F^mu_nu with F^i_0 = E_i."""
    e_vec = np.asarray(e_vec, dtype=float)
    f_lower = np.zeros((4, 4))
    f_lower[1:, 0] = e_vec
    f_lower[0, 1:] = -e_vec
    return ETA_DIAG[:, None] * f_lower


def uniform_magnetic_f(b_vec) -> np.ndarray:
    """Constant magnetic-type F^mu_nu with F^i_j = eps_{ijk} B_k."""
    bx, by, bz = np.asarray(b_vec, dtype=float)
    f_lower = np.zeros((4, 4))
    f_lower[1, 2], f_lower[2, 1] = bz, -bz
    f_lower[2, 3], f_lower[3, 2] = bx, -bx
    f_lower[3, 1], f_lower[1, 3] = by, -by
    return ETA_DIAG[:, None] * f_lower
