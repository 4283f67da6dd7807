"""Dynamic observers: synthesis by residuation, simulation, reconstruction.

Given a congruence ker F that is conditioned invariant for (C, A), the
functional z(k) = F x(k) of any admissible trajectory obeys the recursion
z(k+1) = U z(k) (+) V y(k) for any matrices solving F A = U F (+) V C.  The
synthesis below returns the greatest such pair, obtained by residuating each
row of F A against the stacked matrix [F; C].
"""

from __future__ import annotations

from dataclasses import dataclass

from .congruences import Congruence
from .core import (EPS, TOP, Matrix, Vector, from_columns, mat_mul, mat_vec,
                   min_plus_mul, negate_transpose, right_residual, row_stack)
from .errors import DimensionError, DomainError, NotReconstructible, NotSolvable
from .semimodules import Semimodule


@dataclass(frozen=True)
class ObserverMatrices:
    """Observer data (U, V) for the functional F, with F A = U F (+) V C."""

    U: Matrix
    V: Matrix
    F: Matrix


@dataclass(frozen=True)
class Trajectory:
    """A sampled state sequence with its outputs y(k) = C x(k).

    ``realized_params`` records, per step, the interval draws that produced
    the transition; it is empty for deterministic systems.
    """

    states: tuple
    outputs: tuple
    realized_params: tuple = ()


def synthesize_observer(f: Matrix, a: Matrix, c: Matrix) -> ObserverMatrices:
    """Greatest (U, V) with F A = U F (+) V C, or NotSolvable.

    Coefficients against all-EPS rows of [F; C] come out as TOP in the
    residual and are clamped back to EPS, which leaves the product unchanged;
    the returned matrices are ordinary.
    """
    if a.rows != a.cols or f.cols != a.rows or c.cols != a.rows:
        raise DimensionError("inconsistent dimensions for observer synthesis")
    stacked = row_stack(f, c)
    target = mat_mul(f, a)
    residual = right_residual(target, stacked)
    clamped = Matrix(residual.rows, residual.cols,
                     tuple(tuple(EPS if v == TOP else v for v in row)
                           for row in residual.data))
    achieved = mat_mul(clamped, stacked)
    if achieved.data != target.data:
        bad = [i + 1 for i in range(target.rows)
               if achieved.data[i] != target.data[i]]
        raise NotSolvable(
            f"F A = U F (+) V C has no solution (rows {bad}); "
            "ker F is not conditioned invariant for this (C, A)")
    u = Matrix(f.rows, f.rows, tuple(row[:f.rows] for row in clamped.data))
    v = Matrix(f.rows, c.rows, tuple(row[f.rows:] for row in clamped.data))
    return ObserverMatrices(U=u, V=v, F=f)


def run_observer(obs: ObserverMatrices, x0: Vector, outputs) -> list:
    """z(0) = F x0, then z(k+1) = U z(k) (+) V y(k) for each supplied y."""
    if len(x0) != obs.F.cols:
        raise DimensionError(f"initial state has length {len(x0)}, expected {obs.F.cols}")
    z = [mat_vec(obs.F, tuple(x0))]
    for y in outputs:
        if len(y) != obs.V.cols:
            raise DimensionError(f"output has length {len(y)}, expected {obs.V.cols}")
        uz = mat_vec(obs.U, z[-1])
        vy = mat_vec(obs.V, tuple(y))
        z.append(tuple(a if a >= b else b for a, b in zip(uz, vy)))
    return z


def check_reconstructible(g: Matrix, f: Matrix) -> bool:
    """ker F subset of ker G, decided as: every row of G lies in span(rows of F)."""
    if g.cols != f.cols:
        raise DimensionError(f"column counts differ: {g.cols} vs {f.cols}")
    row_span = Semimodule.from_matrix(f.transpose())
    return all(row_span.member(row) for row in g.data)


def reconstruct_functional(g: Matrix, f: Matrix, z: Vector) -> Vector:
    """Recover w = G x from z = F x, for any x with F x = z.

    The greatest preimage of z under F is the min-plus product (-F^t) z;
    applying G to it (in max-plus) gives G x because ker F is contained in
    ker G.
    """
    if not check_reconstructible(g, f):
        raise NotReconstructible("the rows of G are not spanned by the rows of F")
    if len(z) != f.rows:
        raise DimensionError(f"z has length {len(z)}, expected {f.rows}")
    if not Semimodule.from_matrix(f).member(tuple(z)):
        raise DomainError("z is not in the image of F")
    z_col = from_columns([tuple(z)], f.rows)
    greatest_preimage = min_plus_mul(negate_transpose(f), z_col)
    return tuple(mat_mul(g, greatest_preimage).col(0))


def verify_class_determinism(w: Congruence, c: Matrix, a: Matrix,
                             traj1: Trajectory, traj2: Trajectory) -> bool:
    """Classes modulo w stay synchronized along two output-equal trajectories.

    Checks the observation semantics of conditioned invariance: two
    trajectories starting in the same class and producing identical outputs
    must stay in the same class at every step.  Raises DomainError when the
    preconditions (equal outputs, related initial states) do not hold.
    """
    if len(traj1.states) != len(traj2.states):
        raise DomainError("trajectories have different lengths")
    for t in (traj1, traj2):
        for x, y in zip(t.states, t.outputs):
            if mat_vec(c, x) != tuple(y):
                raise DomainError("trajectory outputs are inconsistent with C")
    if traj1.outputs != traj2.outputs:
        raise DomainError("trajectories do not have equal output sequences")
    if not w.related(traj1.states[0], traj2.states[0]):
        raise DomainError("initial states are not in the same class")
    return all(w.related(x1, x2) for x1, x2 in zip(traj1.states, traj2.states))
