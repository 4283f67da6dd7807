"""Invariant spaces of max-plus linear systems.

The maximal controlled invariant semimodule inside K is the limit of the
decreasing chain X_1 = K, X_{k+1} = K ^ a^{-1}(X_k (+) Im b).  The chain
need not stabilize in finitely many steps, so iteration runs under a cap and
reports convergence honestly.  When the cap is left at its default and the
chain is still moving, the volume of K is consulted: a finite volume v
guarantees stabilization within v + 1 steps, so the cap is raised to that
bound; otherwise the caller gets a non-converged report.

The minimal closed conditioned invariant congruence containing V is obtained
by duality: run the controlled-invariant iteration on the transposed data
inside V's orthogonal, and return the orthogonal of the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .congruences import (Congruence, intersect_congruences, kernel_of,
                          orthogonal_congruence, orthogonal_semimodule)
from .core import Matrix, mat_vec
from .errors import DimensionError, NotConverged
from .semimodules import Semimodule, preimage, volume

DEFAULT_ITERATION_CAP = 64


@dataclass(frozen=True)
class FixpointReport:
    """Chain of iterates; ``iterations`` counts chain elements including X_1.

    When converged, the last two chain elements are span-equal and ``result``
    is the fixed point.
    """

    result: Semimodule
    iterations: int
    converged: bool
    chain: tuple | None

    def to_json(self) -> dict:
        out = {"iterations": self.iterations, "converged": self.converged,
               "result": self.result.to_json()}
        if self.chain is not None:
            out["chain"] = [x.to_json() for x in self.chain]
        return out


def max_controlled_invariant(a: Matrix, b: Matrix, k: Semimodule,
                             max_iter: int | None = None,
                             keep_chain: bool = True) -> FixpointReport:
    """Maximal controlled invariant semimodule contained in k, if reached.

    ``max_iter`` bounds the chain length.  None selects the default cap with
    the volume-based extension described in the module docstring; an explicit
    value is a hard cap.
    """
    if a.rows != a.cols:
        raise DimensionError("state matrix must be square")
    if a.rows != k.dim:
        raise DimensionError(f"state matrix is {a.rows}-dimensional, k lives in {k.dim}")
    if b.rows != k.dim:
        raise DimensionError(f"input matrix has {b.rows} rows, expected {k.dim}")
    im_b = Semimodule.from_matrix(b)
    cap = DEFAULT_ITERATION_CAP if max_iter is None else max_iter
    extended = max_iter is not None
    chain = [k]
    current = k
    converged = False
    while True:
        while len(chain) < cap and not converged:
            nxt = k.intersect(preimage(a, current.sum(im_b)))
            assert current.includes(nxt), "controlled-invariant chain must decrease"
            chain.append(nxt)
            if nxt.equals(current):
                converged = True
            current = nxt
        if converged or extended:
            break
        extended = True
        vol = volume(k)
        if vol.kind == "finite" and vol.count + 2 > cap:
            cap = vol.count + 2
        else:
            break
    return FixpointReport(result=current, iterations=len(chain), converged=converged,
                          chain=tuple(chain) if keep_chain else None)


def min_conditioned_invariant_closed(c: Matrix, a: Matrix, v: Congruence,
                                     max_iter: int | None = None) -> Congruence:
    """Minimal closed conditioned invariant congruence containing v.

    Runs the dual fixed point on (a^t, c^t) inside v's orthogonal; raises
    NotConverged when the chain is still moving at the cap, in which case the
    caller may retry with a larger cap.
    """
    if v.kernel is None:
        raise DimensionError("v must be in kernel form")
    k = orthogonal_congruence(v)
    report = max_controlled_invariant(a.transpose(), c.transpose(), k, max_iter)
    if not report.converged:
        raise NotConverged(report.iterations, report.result)
    return orthogonal_semimodule(report.result)


def is_controlled_invariant(x: Semimodule, a: Matrix, b: Matrix) -> bool:
    """a X subset of X (+) Im b, checked on generators."""
    if a.rows != a.cols or a.cols != x.dim or b.rows != x.dim:
        raise DimensionError("inconsistent dimensions")
    target = x.sum(Semimodule.from_matrix(b))
    return all(target.member(mat_vec(a, g)) for g in x.columns)


def is_conditioned_invariant(w: Congruence, c: Matrix, a: Matrix) -> bool:
    """a (W ^ ker c) subset of W, checked on pair generators."""
    if a.rows != a.cols or a.cols != w.dim or c.cols != w.dim:
        raise DimensionError("inconsistent dimensions")
    restricted = intersect_congruences(w, kernel_of(c))
    n = w.dim
    return all(w.related(mat_vec(a, col[:n]), mat_vec(a, col[n:]))
               for col in restricted.pair_generators.columns)
