"""Internal helpers for working with spans given as lists of columns.

Columns are plain tuples (int entries, EPS for bottom).  Everything here is
shared between the two-sided solver and the semimodule layer; the public
surface lives in :mod:`maxplus.semimodules`.
"""

from __future__ import annotations

from .core import EPS, TOP, Scalar, Vector, is_finite


def dot(row: Vector, col: Vector) -> Scalar:
    """Max-plus scalar product of a row and a column."""
    acc = EPS
    for x, y in zip(row, col):
        if x == EPS or y == EPS:
            continue
        v = x + y
        if v > acc:
            acc = v
    return acc


def combine(coeff: Scalar, col: Vector) -> Vector:
    """Scale a column by a finite coefficient."""
    return tuple(EPS if v == EPS else v + coeff for v in col)


def residual_against(cols, x: Vector) -> list:
    """Greatest coefficients lam with span-combination(cols, lam) <= x."""
    out = []
    for col in cols:
        acc = TOP
        for ci, xi in zip(col, x):
            if ci == EPS:
                continue
            v = EPS if xi == EPS else (TOP if xi == TOP else xi - ci)
            if v < acc:
                acc = v
        out.append(acc)
    return out


def recombine(cols, coeffs) -> Vector:
    """Evaluate a max-plus combination of columns (EPS absorbs before TOP)."""
    if not cols:
        return ()
    n = len(cols[0])
    out = [EPS] * n
    for col, lam in zip(cols, coeffs):
        if lam == EPS:
            continue
        for i, ci in enumerate(col):
            if ci == EPS:
                continue
            v = TOP if lam == TOP else ci + lam
            if v > out[i]:
                out[i] = v
    return tuple(out)


def member(x: Vector, cols) -> bool:
    """x lies in the span of cols iff the residual combination rebuilds x."""
    if all(v == EPS for v in x):
        return True
    if not cols:
        return False
    return recombine(cols, residual_against(cols, x)) == tuple(x)


def normalize(col: Vector) -> Vector | None:
    """Scale so the largest finite coordinate is 0; None for the all-EPS column."""
    top = EPS
    for v in col:
        if v != EPS and v > top:
            top = v
    if top == EPS:
        return None
    return tuple(EPS if v == EPS else v - top for v in col)


def prune(cols: list) -> list:
    """Drop every column lying in the span of the remaining ones."""
    cols = list(cols)
    i = 0
    while i < len(cols):
        rest = cols[:i] + cols[i + 1:]
        if rest and member(cols[i], rest):
            cols.pop(i)
        else:
            i += 1
    return cols


def canonicalize(cols) -> tuple:
    """Normalize, dedupe, prune and sort columns (descending lexicographic).

    The descending order puts generators supported on early coordinates
    first, so canonical generator matrices read in natural coordinate order.
    """
    seen = {}
    for col in cols:
        norm = normalize(tuple(col))
        if norm is not None:
            seen[norm] = None
    kept = prune(list(seen))
    kept.sort(reverse=True)
    return tuple(kept)
