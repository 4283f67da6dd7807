"""Exact max-plus scalar and matrix arithmetic.

Scalars live in the max-plus semiring (integers under max/+) extended with
two sentinels: EPS = -oo, the additive neutral and multiplicative absorber,
and TOP = +oo, which only appears in residuals and min-plus products.
Finite values are Python ints, so every operation in this package is exact;
the sentinels are the float infinities, which compare correctly against ints.

Matrices are immutable, dense and row-major.  Ordinary matrices reject TOP
at construction; residual outputs are built with ``allow_top=True`` so the
completed-semiring conventions stay confined to the operations that need
them (left/right residuals, min-plus products, negated transposes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DimensionError, DomainError

EPS = float("-inf")
TOP = float("inf")

Scalar = Union[int, float]
Vector = "tuple[Scalar, ...]"


def is_finite(value: Scalar) -> bool:
    return value != EPS and value != TOP


def check_scalar(value: Scalar, allow_top: bool = False) -> Scalar:
    """Validate one entry; finite entries must be ints, not bools or floats."""
    if isinstance(value, bool):
        raise DomainError(f"boolean is not a max-plus scalar: {value!r}")
    if isinstance(value, int):
        return value
    if value == EPS:
        return EPS
    if value == TOP:
        if not allow_top:
            raise DomainError("+inf entries are only legal in residual/min-plus matrices")
        return TOP
    raise DomainError(f"finite max-plus entries must be integers, got {value!r}")


def sadd(a: Scalar, b: Scalar) -> Scalar:
    """a (+) b = max(a, b)."""
    return a if a >= b else b


def smul(a: Scalar, b: Scalar) -> Scalar:
    """a (x) b = a + b in the max-plus reading: EPS absorbs, then TOP."""
    if a == EPS or b == EPS:
        return EPS
    if a == TOP or b == TOP:
        return TOP
    return a + b


def smul_min(a: Scalar, b: Scalar) -> Scalar:
    """a + b in the min-plus reading: TOP absorbs, then EPS."""
    if a == TOP or b == TOP:
        return TOP
    if a == EPS or b == EPS:
        return EPS
    return a + b


def sneg(a: Scalar) -> Scalar:
    """Negation on finite entries; swaps the two sentinels."""
    if a == EPS:
        return TOP
    if a == TOP:
        return EPS
    return -a


@dataclass(frozen=True)
class Matrix:
    """Dense rectangular matrix of max-plus scalars.

    ``data`` is a tuple of row tuples.  Zero rows or columns are legal: a
    0-row matrix is used as the kernel of the full relation, and semimodules
    with no generators carry a 0-column matrix.
    """

    rows: int
    cols: int
    data: tuple

    @staticmethod
    def of(entries: Sequence[Sequence[Scalar]], cols: int | None = None,
           allow_top: bool = False) -> "Matrix":
        """Build and validate a matrix from nested sequences.

        ``cols`` is required only for 0-row matrices, where the width cannot
        be inferred.
        """
        rows = len(entries)
        if rows == 0:
            if cols is None:
                raise DimensionError("column count is required for a 0-row matrix")
            return Matrix(0, cols, ())
        widths = {len(row) for row in entries}
        if len(widths) != 1:
            raise DimensionError(f"ragged rows: widths {sorted(widths)}")
        width = widths.pop()
        if cols is not None and cols != width:
            raise DimensionError(f"declared cols={cols} but rows have width {width}")
        data = tuple(tuple(check_scalar(v, allow_top) for v in row) for row in entries)
        return Matrix(rows, width, data)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimensions")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError("data does not match declared shape")

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> "tuple[Vector, ...]":
        return tuple(self.col(j) for j in range(self.cols))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def contains_top(self) -> bool:
        return any(v == TOP for r in self.data for v in r)

    def __str__(self) -> str:
        def show(v):
            return "." if v == EPS else ("+oo" if v == TOP else str(v))
        return "\n".join(" ".join(show(v).rjust(4) for v in r) for r in self.data)


def from_rows(entries: Sequence[Sequence[Scalar]], cols: int | None = None) -> Matrix:
    return Matrix.of(entries, cols)


def from_columns(columns: Iterable[Vector], rows: int) -> Matrix:
    cols = list(columns)
    if not cols:
        return Matrix(rows, 0, tuple(() for _ in range(rows)))
    return Matrix.of([[c[i] for c in cols] for i in range(rows)], allow_top=True)


def identity(n: int) -> Matrix:
    return Matrix(n, n, tuple(tuple(0 if i == j else EPS for j in range(n))
                              for i in range(n)))


def eps_matrix(rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, tuple((EPS,) * cols for _ in range(rows)))


def row_stack(upper: Matrix, lower: Matrix) -> Matrix:
    if upper.cols != lower.cols:
        raise DimensionError(f"cannot stack widths {upper.cols} and {lower.cols}")
    return Matrix(upper.rows + lower.rows, upper.cols, upper.data + lower.data)


def _require_same_shape(a: Matrix, b: Matrix) -> None:
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionError(f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise maximum."""
    _require_same_shape(a, b)
    return Matrix(a.rows, a.cols,
                  tuple(tuple(x if x >= y else y for x, y in zip(ra, rb))
                        for ra, rb in zip(a.data, b.data)))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Max-plus product: (ab)_ij = max_k (a_ik + b_kj), with EPS absorbing.

    TOP entries (from residuals) are tolerated in either factor; bottom
    absorption takes precedence, so EPS (x) TOP = EPS.
    """
    if a.cols != b.rows:
        raise DimensionError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    bt = b.transpose().data
    out = []
    for ra in a.data:
        row = []
        for cb in bt:
            acc = EPS
            for x, y in zip(ra, cb):
                v = smul(x, y)
                if v > acc:
                    acc = v
            row.append(acc)
        out.append(tuple(row))
    return Matrix(a.rows, b.cols, tuple(out))


def mat_vec(a: Matrix, v: Vector) -> Vector:
    """Max-plus matrix-vector product, returning a tuple."""
    if a.cols != len(v):
        raise DimensionError(f"matrix has {a.cols} cols, vector has {len(v)}")
    out = []
    for ra in a.data:
        acc = EPS
        for x, y in zip(ra, v):
            p = smul(x, y)
            if p > acc:
                acc = p
        out.append(acc)
    return tuple(out)


def left_residual(a: Matrix, b: Matrix) -> Matrix:
    """Greatest x with a (x) x <= b, column by column.

    x_jc = min over rows i with a_ij finite of (b_ic - a_ij); an empty index
    set yields TOP, and b_ic = EPS against a finite a_ij forces EPS.
    """
    if a.rows != b.rows:
        raise DimensionError(f"row counts differ: {a.rows} vs {b.rows}")
    supports = [[(i, a.data[i][j]) for i in range(a.rows) if is_finite(a.data[i][j])]
                for j in range(a.cols)]
    out = []
    for j in range(a.cols):
        row = []
        for c in range(b.cols):
            acc = TOP
            for i, aij in supports[j]:
                bic = b.data[i][c]
                if bic == TOP:
                    continue
                v = EPS if bic == EPS else bic - aij
                if v < acc:
                    acc = v
            row.append(acc)
        out.append(tuple(row))
    return Matrix(a.cols, b.cols, tuple(out))


def right_residual(b: Matrix, a: Matrix) -> Matrix:
    """Greatest h with h (x) a <= b; the transpose dual of left_residual."""
    if b.cols != a.cols:
        raise DimensionError(f"column counts differ: {b.cols} vs {a.cols}")
    return left_residual(a.transpose(), b.transpose()).transpose()


def min_plus_mul(p: Matrix, q: Matrix) -> Matrix:
    """Min-plus product in the completed semiring: TOP absorbs, then EPS."""
    if p.cols != q.rows:
        raise DimensionError(f"inner dimensions differ: {p.cols} vs {q.rows}")
    qt = q.transpose().data
    out = []
    for rp in p.data:
        row = []
        for cq in qt:
            acc = TOP
            for x, y in zip(rp, cq):
                v = smul_min(x, y)
                if v < acc:
                    acc = v
            row.append(acc)
        out.append(tuple(row))
    return Matrix(p.rows, q.cols, tuple(out))


def negate_transpose(f: Matrix) -> Matrix:
    """(-f^t): negate finite entries, swap EPS and TOP."""
    return Matrix(f.cols, f.rows,
                  tuple(tuple(sneg(f.data[i][j]) for i in range(f.rows))
                        for j in range(f.cols)))


def mat_le(a: Matrix, b: Matrix) -> bool:
    _require_same_shape(a, b)
    return all(x <= y for ra, rb in zip(a.data, b.data) for x, y in zip(ra, rb))


# --- JSON wire format -------------------------------------------------------
#
# {"rows": r, "cols": c, "data": [[...], ...]} with null for EPS and the
# string "+inf" for TOP.  Integers round-trip bit-exactly.

def matrix_to_json(m: Matrix) -> dict:
    def enc(v):
        if v == EPS:
            return None
        if v == TOP:
            return "+inf"
        return v
    return {"rows": m.rows, "cols": m.cols,
            "data": [[enc(v) for v in row] for row in m.data]}


def matrix_from_json(obj: dict, allow_top: bool = True) -> Matrix:
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except (TypeError, KeyError) as exc:
        raise DomainError(f"not a matrix object: missing {exc}") from exc
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise DomainError("rows/cols must be integers")
    if len(data) != rows:
        raise DomainError(f"expected {rows} rows, got {len(data)}")

    def dec(v):
        if v is None:
            return EPS
        if v == "+inf":
            return TOP
        return v
    decoded = [[dec(v) for v in row] for row in data]
    if rows == 0:
        return Matrix(0, cols, ())
    m = Matrix.of(decoded, allow_top=allow_top)
    if m.cols != cols:
        raise DomainError(f"declared cols={cols} but data rows have width {m.cols}")
    return m
