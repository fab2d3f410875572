"""Exact arithmetic over Q and the biquadratic field Q(sqrt2, sqrt5).

QuadScalar represents a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational
coefficients.  The four basis elements are linearly independent over Q,
so equality is componentwise and every nonzero element is invertible
(multiply by the three conjugates under sqrt2 -> -sqrt2, sqrt5 -> -sqrt5
and divide by the rational norm).

The field is deliberately fixed: the only irrationalities the symbolic
computations need are 1/sqrt2 (isotropic basis coefficients) and sqrt5
(weak mixing data).  Anything requiring another radical is a design error
upstream, and sqrt extraction is offered only for rationals whose
square-free part is 1, 2, 5 or 10.

ExactMatrix is a dense square matrix over QuadScalar with the handful of
operations the generator algebra needs (products, commutators, traces
against a diagonal metric, determinants, exact linear solves).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

RationalLike = Union[int, Fraction, "QuadScalar"]

# binary64 values of the basis radicals, used only at the float boundary
SQRT2_F = 1.4142135623730951
SQRT5_F = 2.23606797749979
SQRT10_F = 3.1622776601683795

# 40-digit rational approximations of the radicals, so that to_float can
# evaluate the full sum exactly and round once (a single rounding matches
# high-precision evaluation; summing pre-rounded binary64 products can be
# off by an ulp)
_GUARD = 10**40
_SQRT2_R = Fraction(math.isqrt(2 * _GUARD**2), _GUARD)
_SQRT5_R = Fraction(math.isqrt(5 * _GUARD**2), _GUARD)
_SQRT10_R = Fraction(math.isqrt(10 * _GUARD**2), _GUARD)


_FRAC_SMALL = {n: Fraction(n) for n in range(-4, 5)}


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return _FRAC_SMALL[x] if -4 <= x <= 4 else Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QuadScalar:
    """Element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of Q(sqrt2, sqrt5)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def coerce(x: RationalLike) -> "QuadScalar":
        if isinstance(x, QuadScalar):
            return x
        if isinstance(x, int) and -4 <= x <= 4:
            return _QS_SMALL[x]
        return QuadScalar(_frac(x))

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        o = QuadScalar.coerce(other)
        return QuadScalar(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = QuadScalar.coerce(other)
        return QuadScalar(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return QuadScalar.coerce(other).__sub__(self)

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = QuadScalar.coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        # sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2
        if not (b1 or c1 or d1):  # rational fast path
            if not a1:
                return _ZERO
            return QuadScalar(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
        if not (b2 or c2 or d2):
            if not a2:
                return _ZERO
            return QuadScalar(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        return QuadScalar(
            a1 * a2 + 2 * b1 * b2 + 5 * c1 * c2 + 10 * d1 * d2,
            a1 * b2 + b1 * a2 + 5 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj_sqrt2(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.c, -self.d)

    def conj_sqrt5(self) -> "QuadScalar":
        return QuadScalar(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> "QuadScalar":
        if not self:
            raise ZeroDivisionError("QuadScalar division by zero")
        y = self.conj_sqrt2() * self.conj_sqrt5() * self.conj_sqrt2().conj_sqrt5()
        norm = self * y
        # field norm is rational by construction
        assert norm.is_rational()
        n = norm.a
        return QuadScalar(y.a / n, y.b / n, y.c / n, y.d / n)

    def __truediv__(self, other):
        return self * QuadScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadScalar.coerce(other) * self.inverse()

    # -- comparisons and conversions ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        o = QuadScalar.coerce(other)
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def to_float(self) -> float:
        if not (self.b or self.c or self.d):
            return float(self.a)
        return float(self.a + self.b * _SQRT2_R + self.c * _SQRT5_R + self.d * _SQRT10_R)

    def __str__(self):
        parts = []
        for coeff, tag in ((self.a, ""), (self.b, "sqrt2"), (self.c, "sqrt5"), (self.d, "sqrt10")):
            if not coeff:
                continue
            if tag and abs(coeff) == 1:
                term = tag if coeff > 0 else f"-{tag}"
            elif tag:
                term = f"{coeff}*{tag}"
            else:
                term = str(coeff)
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"QuadScalar({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


_ZERO = QuadScalar(0)
_QS_SMALL = {n: QuadScalar(n) for n in range(-4, 5)}
_QS_SMALL[0] = _ZERO

QS_ZERO = _ZERO
QS_ONE = QuadScalar(1)
QS_SQRT2 = QuadScalar(0, 1)
QS_SQRT5 = QuadScalar(0, 0, 1)
QS_SQRT10 = QuadScalar(0, 0, 0, 1)
QS_INV_SQRT2 = QuadScalar(0, Fraction(1, 2))  # sqrt2/2
QS_INV_SQRT5 = QuadScalar(0, 0, Fraction(1, 5))  # sqrt5/5


def qs(a=0, b=0, c=0, d=0) -> QuadScalar:
    """Shorthand constructor accepting ints or Fractions."""
    return QuadScalar(a, b, c, d)


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s^2 * f with f square-free; returns (s, f).  n > 0."""
    s, f, p = 1, 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1
    return s, f * n


def sqrt_rational(x: Fraction) -> QuadScalar | None:
    """Exact nonnegative square root of a rational, if it lies in the field.

    Returns None when the square-free part of x is not in {1, 2, 5, 10}.
    """
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return QS_ZERO
    num, den = x.numerator, x.denominator
    # sqrt(p/q) = sqrt(p*q)/q
    s, f = _squarefree_split(num * den)
    root = {1: QS_ONE, 2: QS_SQRT2, 5: QS_SQRT5, 10: QS_SQRT10}.get(f)
    if root is None:
        return None
    return QuadScalar(Fraction(s, den)) * root


class ExactMatrix:
    """Dense square matrix over QuadScalar."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        self.rows = [[QuadScalar.coerce(x) for x in row] for row in rows]
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @staticmethod
    def zeros(n: int) -> "ExactMatrix":
        return ExactMatrix([[0] * n for _ in range(n)])

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(entries: Sequence[RationalLike]) -> "ExactMatrix":
        n = len(entries)
        m = ExactMatrix.zeros(n)
        for i, e in enumerate(entries):
            m.rows[i][i] = QuadScalar.coerce(e)
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check_dim(self, other: "ExactMatrix"):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check_dim(other)
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._check_dim(other)
        return ExactMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return ExactMatrix([[-x for x in row] for row in self.rows])

    def scale(self, c: RationalLike) -> "ExactMatrix":
        c = QuadScalar.coerce(c)
        return ExactMatrix([[c * x for x in row] for row in self.rows])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_dim(other)
        n = self.n
        out = [[_ZERO] * n for _ in range(n)]
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, aik in enumerate(row):
                if not aik:
                    continue
                brow = orows[k]
                for j, bkj in enumerate(brow):
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.rows)])

    def trace(self) -> QuadScalar:
        t = _ZERO
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def is_antisymmetric(self) -> bool:
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.n)
            for j in range(i, self.n)
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.rows))

    def is_zero(self) -> bool:
        return not any(any(x for x in row) for row in self.rows)

    def apply(self, vec: Sequence[RationalLike]) -> list[QuadScalar]:
        v = [QuadScalar.coerce(x) for x in vec]
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = _ZERO
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out

    def det(self) -> QuadScalar:
        # Gaussian elimination over the field
        n = self.n
        m = [row[:] for row in self.rows]
        det = QS_ONE
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col]), None)
            if piv is None:
                return QS_ZERO
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            pv = m[col][col]
            det = det * pv
            inv = pv.inverse()
            for r in range(col + 1, n):
                f = m[r][col] * inv
                if f:
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def to_float(self) -> np.ndarray:
        return np.array([[x.to_float() for x in row] for row in self.rows], dtype=float)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"ExactMatrix[{body}]"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """AB - BA."""
    return a @ b - b @ a


def trace_metric(h: Sequence[RationalLike], a: ExactMatrix, b: ExactMatrix) -> QuadScalar:
    """sum_k h_k (A B)_{kk}, computed exactly without forming the product."""
    if len(h) != a.n:
        raise ValueError(f"metric length {len(h)} does not match dimension {a.n}")
    a._check_dim(b)
    total = _ZERO
    brows = b.rows
    for k, hk in enumerate(h):
        hk = QuadScalar.coerce(hk)
        if not hk:
            continue
        arow = a.rows[k]
        acc = _ZERO
        for j, akj in enumerate(arow):
            if akj:
                bjk = brows[j][k]
                if bjk:
                    acc = acc + akj * bjk
        total = total + hk * acc
    return total


def solve_exact(
    columns: Sequence[Sequence[QuadScalar]], target: Sequence[QuadScalar]
) -> list[QuadScalar] | None:
    """Solve sum_j x_j * columns[j] = target exactly.

    Returns the coefficient list, or None when the system is inconsistent.
    Raises if the columns are linearly dependent and a solution exists but
    is not unique.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [
        [QuadScalar.coerce(columns[j][i]) for j in range(ncols)]
        + [QuadScalar.coerce(target[i])]
        for i in range(nrows)
    ]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    # inconsistency: zero row with nonzero rhs
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    if len(pivots) < ncols:
        raise ValueError("underdetermined system: columns are linearly dependent")
    x = [_ZERO] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][ncols]
    return x


def nullspace_exact(rows: Sequence[Sequence[QuadScalar]]) -> list[list[QuadScalar]]:
    """Exact null space basis of the linear map given by `rows` (m x n)."""
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    mat = [[QuadScalar.coerce(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * n
        v[fc] = QS_ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -mat[row_idx][fc]
        basis.append(v)
    return basis


def rank_exact(rows: Sequence[Sequence[QuadScalar]]) -> int:
    if not rows:
        return 0
    mat = [[QuadScalar.coerce(x) for x in row] for row in rows]
    m = len(mat)
    n = len(mat[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(m):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return r
