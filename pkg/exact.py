# exact.py
"""
Exact number types and integer/rational linear algebra.

Everything downstream (Plücker minors, facet normals, moment points, boundary
matrices) is computed with these helpers; there is no floating-point path.
Matrices are plain lists of rows.
"""
import re
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors, smith_normal_decomp
from sympy.polys.matrices import DomainMatrix

from exceptions import InternalAssertion, ParseError

Rational = Fraction
IntMatrix = List[List[int]]
RatMatrix = List[List[Fraction]]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_GAUSSIAN_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)i)?$")


# --- Rationals ---
def render_rational(q) -> str:
    """Renders as "p/q", dropping the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"Not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"Zero denominator in {text!r}")


# --- Gaussian rationals ---
@dataclass(frozen=True, eq=False)
class GaussianRational:
    """Complex number with rational real and imaginary parts."""
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(Fraction(value))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"GaussianRational({self.render()!r})"

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2, always rational."""
        return self.re * self.re + self.im * self.im

    def render(self) -> str:
        real = render_rational(self.re)
        if self.im == 0:
            return real
        sign = "+" if self.im > 0 else "-"
        return f"{real}{sign}{render_rational(abs(self.im))}i"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        compact = "".join(str(text).split())
        match = _GAUSSIAN_RE.match(compact)
        if not match:
            raise ParseError(f"Not a Gaussian rational literal: {text!r}")
        real, sign, imag = match.groups()
        im = Fraction(0)
        if imag is not None:
            im = parse_rational(imag)
            if sign == "-":
                im = -im
        return cls(parse_rational(real), im)


Number = Union[int, Fraction, GaussianRational]


def gaussian(value: Number) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return GaussianRational.parse(value)
    return GaussianRational(Fraction(value))


# --- Small matrix helpers ---
def identity(size: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def transpose(m: Sequence[Sequence], ncols: Optional[int] = None) -> list:
    cols = len(m[0]) if m else (ncols or 0)
    return [[row[j] for row in m] for j in range(cols)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    if not a or not b:
        return [[] for _ in a]
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def matvec(a: Sequence[Sequence], x: Sequence) -> list:
    return [sum(row[k] * x[k] for k in range(len(x))) for row in a]


def hstack(left: Sequence[Sequence], right: Sequence[Sequence]) -> list:
    if not left:
        return [list(r) for r in right]
    if not right:
        return [list(r) for r in left]
    return [list(l) + list(r) for l, r in zip(left, right)]


def _as_field(x):
    return x if isinstance(x, GaussianRational) else Fraction(x)


# --- Rank and nullspace over Q (or Q(i)) ---
def rank_rational(m: Sequence[Sequence]) -> int:
    """
    Rank by fraction-free Bareiss elimination.

    Works for integer, Fraction and GaussianRational entries; every update is
    a nonzero multiple of an ordinary row reduction, so zero patterns match.
    """
    a = [[_as_field(x) for x in row] for row in m]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = Fraction(1)
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            factor = a[r][col]
            for c in range(col + 1, ncols):
                a[r][c] = (a[r][c] * p - factor * a[rank][c]) / prev
            a[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rational_nullspace(m: Sequence[Sequence], ncols: Optional[int] = None) -> List[List]:
    """Basis of {x : m x = 0} from the reduced row echelon form."""
    cols = len(m[0]) if m else (ncols or 0)
    a = [[_as_field(x) for x in row] for row in m]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        x = [Fraction(0)] * cols
        x[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            x[pc] = -a[row][free]
        basis.append(x)
    return basis


def solve_rational(m: Sequence[Sequence], rhs: Sequence) -> Optional[List]:
    """One solution of m x = rhs, or None when the system is inconsistent."""
    cols = len(m[0]) if m else 0
    augmented = [list(row) + [b] for row, b in zip(m, rhs)]
    if rank_rational(m) != rank_rational(augmented):
        return None
    a = [[_as_field(x) for x in row] for row in augmented]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    x = [Fraction(0)] * cols
    for row, pc in enumerate(pivots):
        x[pc] = a[row][cols]
    return x


# --- Smith normal form over Z ---
@dataclass(frozen=True)
class SmithDecomposition:
    """u * m * v == d with u, v unimodular and v * v_inv == identity."""
    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    v_inv: IntMatrix
    diagonal: Tuple[int, ...]
    rank: int


def _to_int_rows(m: Matrix) -> IntMatrix:
    return [[int(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def smith_decomposition(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithDecomposition:
    """
    Smith normal decomposition over ZZ via sympy, with the inverse column transform.

    Zero invariant factors trail the nonzero ones, so the last columns of v span
    the integer kernel. Signs are normalized to a nonnegative diagonal.
    """
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    if rows == 0 or cols == 0:
        ident = identity(cols)
        return SmithDecomposition(
            u=identity(rows), d=[[0] * cols for _ in range(rows)], v=ident,
            v_inv=[row[:] for row in ident], diagonal=(), rank=0,
        )
    d, u, v = smith_normal_decomp(Matrix(rows, cols, [int(x) for row in m for x in row]), domain=ZZ)
    v_inv = DomainMatrix.from_Matrix(v).convert_to(ZZ).to_field().inv().to_Matrix()
    d, u = _to_int_rows(d), _to_int_rows(u)
    for i in range(min(rows, cols)):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]
    diagonal = tuple(d[i][i] for i in range(min(rows, cols)))
    rank = sum(1 for x in diagonal if x)
    if any(diagonal[rank:]):
        raise InternalAssertion(f"zero invariant factors do not trail: {diagonal}")
    return SmithDecomposition(u=u, d=d, v=_to_int_rows(v), v_inv=_to_int_rows(v_inv), diagonal=diagonal, rank=rank)


def smith_normal_form(m: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], int]:
    """Invariant factors d1 | d2 | ... (zeros included) and the rank."""
    decomposition = smith_decomposition(m)
    return decomposition.diagonal, decomposition.rank


def invariant_factors(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Tuple[int, ...]:
    """The nonzero invariant factors only."""
    rows = len(m)
    cols = len(m[0]) if m else (ncols or 0)
    if rows == 0 or cols == 0:
        return ()
    factors = sympy_invariant_factors(Matrix(rows, cols, [int(x) for row in m for x in row]), domain=ZZ)
    return tuple(abs(int(x)) for x in factors if x)


def integer_kernel_basis(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[List[int]]:
    """Z-basis of the integer kernel: the trailing columns of V."""
    decomposition = smith_decomposition(m, ncols)
    cols = len(decomposition.v)
    return [[decomposition.v[i][j] for i in range(cols)] for j in range(decomposition.rank, cols)]


def kernel_coordinates(decomposition: SmithDecomposition, x: Sequence[int]) -> List[int]:
    """Coordinates of a kernel vector in the basis from integer_kernel_basis."""
    y = matvec(decomposition.v_inv, x)
    if any(y[: decomposition.rank]):
        raise ValueError("vector is not in the kernel")
    return y[decomposition.rank:]


# --- Linear algebra over Z/2 ---
def _rows_to_masks(m: Sequence[Sequence[int]]) -> List[int]:
    masks = []
    for row in m:
        mask = 0
        for j, x in enumerate(row):
            if x % 2:
                mask |= 1 << j
        masks.append(mask)
    return masks


def _echelon_mod2(masks: List[int]) -> List[Tuple[int, int]]:
    """Reduced echelon rows as (pivot bit, mask) pairs."""
    reduced: List[Tuple[int, int]] = []
    for mask in masks:
        for pivot, row in reduced:
            if mask >> pivot & 1:
                mask ^= row
        if mask:
            pivot = (mask & -mask).bit_length() - 1
            reduced = [(p, r ^ mask if r >> pivot & 1 else r) for p, r in reduced]
            reduced.append((pivot, mask))
    return reduced


def rank_mod2(m: Sequence[Sequence[int]]) -> int:
    return len(_echelon_mod2(_rows_to_masks(m)))


def nullspace_mod2(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[List[int]]:
    """Basis of the kernel of m reduced mod 2, as 0/1 vectors."""
    cols = len(m[0]) if m else (ncols or 0)
    reduced = _echelon_mod2(_rows_to_masks(m))
    pivots = {p: row for p, row in reduced}
    basis = []
    for free in range(cols):
        if free in pivots:
            continue
        x = [0] * cols
        x[free] = 1
        for p, row in pivots.items():
            if row >> free & 1:
                x[p] = 1
        basis.append(x)
    logging.debug(f"mod-2 nullspace: {len(basis)} of {cols} columns free")
    return basis
