"""so(N) generator algebra: brackets, structure checks, Killing forms.

Generators are indexed by pairs 1 <= i < j <= n with
(X_ij)_{kl} = delta_ik delta_jl - delta_il delta_jk, realized as exact
antisymmetric matrices.  LieElement carries both the coefficient view
(map over index pairs) and the realized-matrix view, kept consistent.

Two Killing-form flavours are exposed.  killing_adjoint is the plain
brute-force trace of ad_X ad_Y over the generator basis of so(n); for
so(n) it equals (n-2) tr(XY).  killing_metric_twisted inserts the
Minkowskian metric eta = diag(-1,1,1,1) into both index contractions,
2 tr(eta X eta Y); on antisymmetric representatives of so(1,3) elements
this reproduces the adjoint-trace Killing form of so(1,3), flipping the
boost directions to positive norm.  (Inserting a single eta does not:
boost pairs then come out 0 instead of +-4.)
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .exactnum import (
    ExactMatrix,
    QuadScalar,
    QS_ONE,
    QS_ZERO,
    commutator,
    qs,
    solve_exact,
)


def so_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def so_generator(n: int, i: int, j: int) -> ExactMatrix:
    """X_ij with +1 at (i,j), -1 at (j,i); 1-based indices, i < j."""
    if not (1 <= i < j <= n):
        raise ValueError(f"generator indices out of range: ({i},{j}) in so({n})")
    m = ExactMatrix.zeros(n)
    m.rows[i - 1][j - 1] = QS_ONE
    m.rows[j - 1][i - 1] = -QS_ONE
    return m


class LieElement:
    """Element of so(n) as coefficients over the X_ij basis."""

    __slots__ = ("n", "coeffs", "_matrix")

    def __init__(self, n: int, coeffs: Mapping[tuple[int, int], object] | None = None):
        self.n = n
        self.coeffs: dict[tuple[int, int], QuadScalar] = {}
        self._matrix: ExactMatrix | None = None
        for (i, j), v in (coeffs or {}).items():
            v = QuadScalar.coerce(v)
            if not (1 <= i < j <= n):
                raise ValueError(f"bad index pair ({i},{j}) for so({n})")
            if v:
                self.coeffs[(i, j)] = v

    @staticmethod
    def from_matrix(m: ExactMatrix) -> "LieElement":
        if not m.is_antisymmetric():
            raise ValueError("matrix is not antisymmetric")
        el = LieElement(m.n)
        for i in range(m.n):
            for j in range(i + 1, m.n):
                v = m.rows[i][j]
                if v:
                    el.coeffs[(i + 1, j + 1)] = v
        el._matrix = m
        return el

    @staticmethod
    def generator(n: int, i: int, j: int) -> "LieElement":
        return LieElement(n, {(i, j): 1})

    @property
    def matrix(self) -> ExactMatrix:
        if self._matrix is None:
            m = ExactMatrix.zeros(self.n)
            for (i, j), v in self.coeffs.items():
                m.rows[i - 1][j - 1] = v
                m.rows[j - 1][i - 1] = -v
            self._matrix = m
        return self._matrix

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, QS_ZERO) + v
        return LieElement(self.n, out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, QS_ZERO) - v
        return LieElement(self.n, out)

    def __neg__(self) -> "LieElement":
        return LieElement(self.n, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "LieElement":
        c = QuadScalar.coerce(c)
        return LieElement(self.n, {k: c * v for k, v in self.coeffs.items()})

    def bracket(self, other: "LieElement") -> "LieElement":
        self._check(other)
        return LieElement.from_matrix(commutator(self.matrix, other.matrix))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def _check(self, other: "LieElement"):
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def __repr__(self):
        if not self.coeffs:
            return f"LieElement(so({self.n}), 0)"
        body = " + ".join(f"({v})*X{i},{j}" for (i, j), v in sorted(self.coeffs.items()))
        return f"LieElement(so({self.n}), {body})"


def so_bracket_closed_form(
    n: int, ab: tuple[int, int], cd: tuple[int, int]
) -> LieElement:
    """[X_ab, X_cd] = d_bc X_ad - d_ac X_bd + d_ad X_bc - d_bd X_ac.

    Must agree with the commutator of the realized matrices; the test
    suite checks that exhaustively for n <= 8.
    """
    a, b = ab
    c, d = cd
    for i, j in (ab, cd):
        if not (1 <= i < j <= n):
            raise ValueError(f"bad generator pair ({i},{j}) for so({n})")
    terms = [
        (1 if b == c else 0, (a, d)),
        (-1 if a == c else 0, (b, d)),
        (1 if a == d else 0, (b, c)),
        (-1 if b == d else 0, (a, c)),
    ]
    acc: dict[tuple[int, int], QuadScalar] = {}
    for sign, (p, q) in terms:
        if sign == 0 or p == q:
            continue
        if p > q:
            p, q = q, p
            sign = -sign
        acc[(p, q)] = acc.get((p, q), QS_ZERO) + qs(sign)
    return LieElement(n, acc)


def so4_bases() -> dict[str, ExactMatrix]:
    """The fixed so(4) generator set A_i, B_i and the split X_i, Y_i.

    Commutation relations (all verified exactly by the test suite):
      [A_i,A_j] = eps_ijk A_k, [B_i,B_j] = eps_ijk A_k, [A_i,B_j] = eps_ijk B_k,
      [X_i,X_j] = eps_ijk X_k, [Y_i,Y_j] = eps_ijk Y_k, [X_i,Y_j] = 0,
    where X_i = (A_i+B_i)/2 and Y_i = (A_i-B_i)/2.
    """
    A1 = ExactMatrix([[0, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 0]])
    A2 = ExactMatrix([[0, 0, 1, 0], [0, 0, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 0]])
    A3 = ExactMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    B1 = ExactMatrix([[0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]])
    B2 = ExactMatrix([[0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 1, 0, 0]])
    B3 = ExactMatrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    half = qs(1) / qs(2)
    out = {"A1": A1, "A2": A2, "A3": A3, "B1": B1, "B2": B2, "B3": B3}
    for i, (a, b) in enumerate(((A1, B1), (A2, B2), (A3, B3)), start=1):
        out[f"X{i}"] = (a + b).scale(half)
        out[f"Y{i}"] = (a - b).scale(half)
    return out


def minkowski_eta(n: int = 4) -> ExactMatrix:
    """diag(-1, 1, ..., 1)."""
    return ExactMatrix.diagonal([-1] + [1] * (n - 1))


def so13_basis() -> list[ExactMatrix]:
    """Mixed-index so(1,3) matrices eta X_ij (3 boosts, 3 rotations)."""
    eta = minkowski_eta()
    return [eta @ so_generator(4, i, j) for (i, j) in so_pairs(4)]


def _ad_matrix_son(x: LieElement) -> list[list[QuadScalar]]:
    """ad_x over the X_ij coefficient basis of so(n)."""
    pairs = so_pairs(x.n)
    index = {p: k for k, p in enumerate(pairs)}
    cols = []
    for p in pairs:
        br = x.bracket(LieElement.generator(x.n, *p))
        col = [QS_ZERO] * len(pairs)
        for key, v in br.coeffs.items():
            col[index[key]] = v
        cols.append(col)
    return [[cols[j][i] for j in range(len(pairs))] for i in range(len(pairs))]


def killing_adjoint(x: LieElement, y: LieElement) -> QuadScalar:
    """K(x, y) = tr(ad_x ad_y), brute force over the so(n) generator basis."""
    x._check(y)
    ax = _ad_matrix_son(x)
    ay = _ad_matrix_son(y)
    m = len(ax)
    total = QS_ZERO
    for i in range(m):
        for k in range(m):
            if ax[i][k] and ay[k][i]:
                total = total + ax[i][k] * ay[k][i]
    return total


def _expander(basis: Sequence[ExactMatrix]):
    cols = [[b.rows[i][j] for i in range(b.n) for j in range(b.n)] for b in basis]

    def expand(m: ExactMatrix) -> list[QuadScalar]:
        flat = [m.rows[i][j] for i in range(m.n) for j in range(m.n)]
        sol = solve_exact(cols, flat)
        if sol is None:
            raise ValueError("element does not lie in the span of the basis")
        return sol

    return expand


def _ad_in_basis(basis: Sequence[ExactMatrix], m: ExactMatrix, expand) -> list[list[QuadScalar]]:
    cols = [expand(commutator(m, b)) for b in basis]
    k = len(basis)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _ad_trace(ax, ay) -> QuadScalar:
    k = len(ax)
    total = QS_ZERO
    for i in range(k):
        for j in range(k):
            if ax[i][j] and ay[j][i]:
                total = total + ax[i][j] * ay[j][i]
    return total


def killing_adjoint_in_basis(
    basis: Sequence[ExactMatrix], x: ExactMatrix, y: ExactMatrix
) -> QuadScalar:
    """tr(ad_x ad_y) over an explicit closed matrix basis.

    x and y must lie in span(basis) and all brackets must stay inside the
    span; a bracket that leaves the span raises ValueError.
    """
    expand = _expander(basis)
    expand(x)
    expand(y)
    return _ad_trace(_ad_in_basis(basis, x, expand), _ad_in_basis(basis, y, expand))


def killing_table_in_basis(basis: Sequence[ExactMatrix]) -> list[list[QuadScalar]]:
    """Full Killing table K_ab = tr(ad_a ad_b) over a closed matrix basis."""
    expand = _expander(basis)
    ads = [_ad_in_basis(basis, b, expand) for b in basis]
    return [[_ad_trace(ax, ay) for ay in ads] for ax in ads]


def killing_metric_twisted(
    x: ExactMatrix, y: ExactMatrix, eta: ExactMatrix | None = None
) -> QuadScalar:
    """2 tr(eta x eta y) for antisymmetric representatives x, y.

    The metric enters both contractions: multiplying two index-lowered
    antisymmetric tensors requires raising the middle index, and the
    trace raises the outer one.  With eta = diag(-1,1,1,1) this equals the
    adjoint-trace Killing form of so(1,3); with eta = identity it reduces
    to the plain so(4) value 2 tr(xy).
    """
    if eta is None:
        eta = minkowski_eta(x.n)
    return qs(2) * ((eta @ x) @ (eta @ y)).trace()
