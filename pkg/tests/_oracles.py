"""Independent numpy-based oracles for the test suite.

These reimplement max-plus evaluation, membership and normalized-point
enumeration by brute force over float64 arrays (-inf plays bottom), staying
independent of the package's exact integer code paths.  Magnitudes in the
tests are tiny, so float64 arithmetic is exact.
"""

from __future__ import annotations

import itertools

import numpy as np

from maxplus import EPS, Matrix

NEG = -np.inf


def to_np(m: Matrix) -> np.ndarray:
    return np.array([[float(v) for v in row] for row in m.data],
                    dtype=float).reshape(m.rows, m.cols)


def cols_to_np(columns, dim: int) -> np.ndarray:
    """Generator columns as a (dim, p) array."""
    if not columns:
        return np.full((dim, 0), NEG)
    return np.array([[float(v) for v in col] for col in columns], dtype=float).T


def apply_many(a: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Max-plus products a z for a batch of vectors: (m, n) x (N, n) -> (N, m)."""
    return np.max(a[None, :, :] + zs[:, None, :], axis=2)


def grid(values, n: int) -> np.ndarray:
    return np.array(list(itertools.product(values, repeat=n)), dtype=float)


def members_mask(gens: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Span membership of each row of zs, by residuation over float arrays."""
    n, p = gens.shape
    big_n = zs.shape[0]
    if p == 0:
        return np.all(zs == NEG, axis=1)
    finite = np.isfinite(gens)  # (n, p)
    with np.errstate(invalid="ignore"):
        diffs = zs[:, None, :] - gens.T[None, :, :]          # (N, p, n)
    diffs = np.where(finite.T[None, :, :], diffs, np.inf)
    diffs = np.where(finite.T[None, :, :] & (zs[:, None, :] == NEG), NEG, diffs)
    lam = np.min(diffs, axis=2)                              # (N, p)
    with np.errstate(invalid="ignore"):
        terms = lam[:, None, :] + gens[None, :, :]           # (N, n, p)
    terms = np.where(finite[None, :, :], terms, NEG)
    rebuilt = np.max(terms, axis=2)                          # (N, n)
    return np.all(rebuilt == zs, axis=1)


def solution_mask(f: np.ndarray, g: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Rows of zs solving the two-sided system f z = g z."""
    return np.all(apply_many(f, zs) == apply_many(g, zs), axis=1)


def box_members(columns, dim: int, box: int) -> set:
    """Normalized span points inside the coordinate box, by grid + membership.

    This is the n-dimensional enumeration the package's coefficient-grid
    method is checked against.
    """
    values = [NEG] + [float(-d) for d in range(box + 1)]
    zs = grid(values, dim)
    zs = zs[np.max(zs, axis=1) == 0.0]
    mask = members_mask(cols_to_np(columns, dim), zs)
    out = set()
    for z in zs[mask]:
        out.add(tuple(EPS if v == NEG else int(v) for v in z))
    return out


def relation_pairs(kernel: np.ndarray, zs: np.ndarray) -> set:
    """All related ordered grid pairs of a kernel congruence, as tuple pairs."""
    images = apply_many(kernel, zs) if kernel.shape[0] else np.zeros((zs.shape[0], 0))
    out = set()
    for i in range(zs.shape[0]):
        for j in range(zs.shape[0]):
            if np.array_equal(images[i], images[j]):
                out.add((tuple(zs[i]), tuple(zs[j])))
    return out
