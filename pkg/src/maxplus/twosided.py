"""Finite generating sets for homogeneous two-sided systems F z = G z.

The solution set of a two-sided max-plus system is a finitely generated
semimodule; this module computes a generating set by equation-by-equation
elimination.  Starting from the identity columns (which generate the whole
space), each equation (f, g) splits the current generators by the sign of
f(x)v versus g(x)v and replaces the strict ones by the cross combinations

    u = (g(x)w) v  (+)  (f(x)v) w      for f(x)v > g(x)v, f(x)w < g(x)w,

which satisfy f(x)u = g(x)u = (f(x)v)(g(x)w).  Generators are pruned after
every equation to contain the quadratic blowup, and the final set is
canonicalized (normalized, pruned, sorted) so equal spans yield identical
output.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _spans
from .core import EPS, Matrix, Vector, is_finite
from .errors import DimensionError, DomainError, ResourceExceeded

DEFAULT_GENERATOR_CEILING = 10000


@dataclass(frozen=True)
class TwoSidedSystem:
    """A pair of equally sized ordinary matrices, read as F z = G z."""

    F: Matrix
    G: Matrix

    def __post_init__(self):
        if self.F.rows != self.G.rows or self.F.cols != self.G.cols:
            raise DimensionError(
                f"sides differ: {self.F.rows}x{self.F.cols} vs {self.G.rows}x{self.G.cols}")
        if self.F.contains_top() or self.G.contains_top():
            raise DomainError("two-sided systems must not contain +inf entries")

    @property
    def unknowns(self) -> int:
        return self.F.cols


def _solve_columns(F: Matrix, G: Matrix, max_generators: int) -> tuple:
    n = F.cols
    gens: list[Vector] = [tuple(0 if i == j else EPS for i in range(n)) for j in range(n)]
    for k in range(F.rows):
        f, g = F.data[k], G.data[k]
        if not any(map(is_finite, f)) and not any(map(is_finite, g)):
            continue
        keep, above, below = [], [], []
        for v in gens:
            alpha, beta = _spans.dot(f, v), _spans.dot(g, v)
            if alpha == beta:
                keep.append(v)
            elif alpha > beta:
                above.append((v, alpha))
            else:
                below.append((v, beta))
        if len(keep) + len(above) * len(below) > max_generators:
            raise ResourceExceeded(
                f"generator ceiling {max_generators} exceeded at equation {k + 1}")
        for v, alpha in above:
            for w, beta in below:
                # both coefficients are finite: beta > alpha_w >= EPS etc.
                u = tuple(max(beta + vi if vi != EPS else EPS,
                              alpha + wi if wi != EPS else EPS)
                          for vi, wi in zip(v, w))
                keep.append(u)
        seen = {}
        for col in keep:
            norm = _spans.normalize(col)
            if norm is not None:
                seen[norm] = None
        gens = _spans.prune(list(seen))
        if not gens:
            break
    return _spans.canonicalize(gens)


def solve_two_sided(system: TwoSidedSystem,
                    max_generators: int = DEFAULT_GENERATOR_CEILING):
    """Generators of {z : F z = G z}, as a canonical Semimodule.

    The all-EPS solution is implicit: a system forcing z = EPS yields an
    empty generator set.
    """
    from .semimodules import Semimodule  # deferred: semimodules builds on this module

    cols = _solve_columns(system.F, system.G, max_generators)
    return Semimodule(system.unknowns, cols)
