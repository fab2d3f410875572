"""Electroweak block: connection matrix, mass matrix, weak mixing, spectrum.

All angle data is carried as exact (cos, sin) pairs in Q(sqrt2, sqrt5), so
the whole symmetry-breaking computation stays equality-checkable.  With the
couplings (g', g) = (1, 2): sin^2(theta_W) = 1/5 exactly, the mixed mass
matrix is (1/2) diag(0, 5, 4, 4), and the mass ratio squared is 5/4.

The mass matrix carries the conventional global 1/2 prefactor.  Reported
spectra strip it, quoting the diagonal (0, 5, 4, 4) of the doubled matrix,
which is how the reference displays quote the result (the 1/2 sits outside
the displayed quadratic form).

A hand-rolled cyclic-Jacobi eigensolver provides the independent float
cross-check of the exact diagonalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import ExactMatrix, QuadScalar, qs, sqrt_rational


@dataclass(frozen=True)
class EwFieldConfig:
    b0: QuadScalar
    a0: QuadScalar
    a1: QuadScalar
    a2: QuadScalar
    g_prime: QuadScalar = qs(1)
    g: QuadScalar = qs(2)


def ew_connection(cfg: EwFieldConfig) -> ExactMatrix:
    """The antisymmetric 4x4 connection block, with its 1/2 prefactor.

    Entry (4,1) is fixed to B0 - 2*A0 as antisymmetry forces (the quoted
    display carries a sign slip there, visible only when A0 != 0).
    """
    b0, a0, a1, a2 = cfg.b0, cfg.a0, cfg.a1, cfg.a2
    two = qs(2)
    rows = [
        [qs(0), -two * a2, two * a1, two * a0 - b0],
        [two * a2, qs(0), two * a0 + b0, -two * a1],
        [-two * a1, -(two * a0 + b0), qs(0), -two * a2],
        [b0 - two * a0, two * a1, two * a2, qs(0)],
    ]
    half = qs(1) / qs(2)
    return ExactMatrix(rows).scale(half)


def mass_matrix(g_prime, g) -> ExactMatrix:
    """(1/2) [[g'^2, g g', 0, 0], [g g', g^2, 0, 0], [0,0,g^2,0], [0,0,0,g^2]]."""
    gp = QuadScalar.coerce(g_prime)
    gg = QuadScalar.coerce(g)
    half = qs(1) / qs(2)
    m = ExactMatrix(
        [
            [gp * gp, gg * gp, 0, 0],
            [gg * gp, gg * gg, 0, 0],
            [0, 0, gg * gg, 0],
            [0, 0, 0, gg * gg],
        ]
    )
    return m.scale(half)


@dataclass(frozen=True)
class WeinbergAngle:
    sin2: Fraction
    sin: QuadScalar | None  # exact value when expressible in the field
    cos: QuadScalar | None

    @property
    def tan2(self) -> Fraction:
        return self.sin2 / (1 - self.sin2)


def weinberg_angle(g_prime, g) -> WeinbergAngle:
    """sin^2(theta) = g'^2 / (g^2 + g'^2), with exact sin/cos when available."""
    gp = QuadScalar.coerce(g_prime)
    gg = QuadScalar.coerce(g)
    denom = gp * gp + gg * gg
    if not denom:
        raise ValueError("g and g' cannot both vanish")
    sin2 = ((gp * gp) / denom).as_fraction()
    return WeinbergAngle(sin2, sqrt_rational(sin2), sqrt_rational(1 - sin2))


def mixing_rotation(cos: QuadScalar, sin: QuadScalar) -> ExactMatrix:
    """The 4x4 rotation acting on (B0, A0) with the orientation that
    diagonalizes the mass matrix at tan(theta) = g'/g."""
    if cos * cos + sin * sin != qs(1):
        raise ValueError("cos^2 + sin^2 must equal 1 exactly")
    return ExactMatrix(
        [
            [cos, -sin, 0, 0],
            [sin, cos, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]
    )


def apply_mixing(cos, sin, m: ExactMatrix) -> ExactMatrix:
    """R M R^T with the mixing rotation R.

    In the upper 2x2 block the entries reproduce the closed forms
    (g' cos - g sin)^2, g g' cos(2t) + (g'^2 - g^2) cos sin,
    (g cos + g' sin)^2 (each under the global 1/2)."""
    r = mixing_rotation(QuadScalar.coerce(cos), QuadScalar.coerce(sin))
    return (r @ m) @ r.transpose()


def mixed_block_closed_form(g_prime, g, cos, sin) -> ExactMatrix:
    """The 2x2 mixed block from its closed-form entries (with the 1/2)."""
    gp, gg = QuadScalar.coerce(g_prime), QuadScalar.coerce(g)
    c, s = QuadScalar.coerce(cos), QuadScalar.coerce(sin)
    cos2t = c * c - s * s
    e11 = (gp * c - gg * s) * (gp * c - gg * s)
    e12 = gg * gp * cos2t + (gp * gp - gg * gg) * c * s
    e22 = (gg * c + gp * s) * (gg * c + gp * s)
    half = qs(1) / qs(2)
    return ExactMatrix([[e11, e12], [e12, e22]]).scale(half)


def mass_spectrum() -> dict:
    """Spectrum of the (g', g) = (1, 2) breaking in display normalization."""
    ratio = QuadScalar(0, 0, Fraction(1, 2))  # sqrt5 / 2
    return {
        "m2_photon": qs(0),
        "m2_z": qs(5),
        "m2_w": qs(4),
        "ratio_sq": Fraction(5, 4),
        "ratio": ratio,
        "ratio_float": ratio.to_float(),
    }


def jacobi_eigenvalues(a: np.ndarray, sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    for _ in range(sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < 1e-15 * max(1.0, np.max(np.abs(np.diag(a)))):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))


def float_eigen_crosscheck(m: np.ndarray) -> np.ndarray:
    """Jacobi eigenvalues, ascending; rejects non-symmetric input."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("need a square matrix")
    if np.max(np.abs(m - m.T)) > 1e-12:
        raise ValueError("matrix is not symmetric within 1e-12")
    return jacobi_eigenvalues(m)


def breaking_report() -> dict:
    """Full exact breaking computation for (g', g) = (1, 2), JSON-friendly."""
    gp, gg = qs(1), qs(2)
    m = mass_matrix(gp, gg)
    ang = weinberg_angle(gp, gg)
    assert ang.sin is not None and ang.cos is not None
    mixed = apply_mixing(ang.cos, ang.sin, m)
    doubled = mixed.scale(2)
    spectrum = mass_spectrum()
    eigs = float_eigen_crosscheck(m.scale(2).to_float())
    return {
        "couplings": {"g_prime": str(gp), "g": str(gg)},
        "mass_matrix_halved": [[str(x) for x in row] for row in m.rows],
        "mixing": {
            "sin2_theta_w": str(ang.sin2),
            "sin_theta_w": str(ang.sin),
            "cos_theta_w": str(ang.cos),
        },
        "mixed_mass_matrix_display": [[str(x) for x in row] for row in doubled.rows],
        "spectrum": {
            "m2_photon": str(spectrum["m2_photon"]),
            "m2_z": str(spectrum["m2_z"]),
            "m2_w": str(spectrum["m2_w"]),
            "mass_ratio_z_over_w": str(spectrum["ratio"]),
            "mass_ratio_squared": str(spectrum["ratio_sq"]),
            "mass_ratio_float": spectrum["ratio_float"],
        },
        "float_jacobi_eigenvalues": [float(x) for x in eigs],
        "weinberg_comparison": {
            "sin2_theory": 0.2,
            "sin2_experiment": 0.23120,
            "sin2_experiment_err": 0.00015,
        },
    }
