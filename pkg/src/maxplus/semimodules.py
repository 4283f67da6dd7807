"""Finitely generated subsemimodules of the max-plus n-space.

A :class:`Semimodule` stores its generators as columns in canonical form:
each generator is scaled so its largest finite coordinate is 0, redundant
generators (those in the span of the rest) are pruned, and the columns are
sorted.  Minimal generating sets of max-plus semimodules are unique up to
scaling and order, so two semimodules are span-equal exactly when their
canonical forms coincide; ``equals`` nevertheless decides equality by mutual
inclusion, which does not rely on that fact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _spans
from .core import (EPS, Matrix, Vector, check_scalar, from_columns, identity,
                   eps_matrix, mat_vec)
from .errors import DimensionError, DomainError
from .twosided import DEFAULT_GENERATOR_CEILING, TwoSidedSystem, solve_two_sided


@dataclass(frozen=True)
class Semimodule:
    """Span of finitely many generator columns in R_max^dim."""

    dim: int
    columns: tuple

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionError("negative ambient dimension")
        for col in self.columns:
            if len(col) != self.dim:
                raise DimensionError(f"generator of length {len(col)} in dimension {self.dim}")
            for v in col:
                check_scalar(v)
        object.__setattr__(self, "columns", _spans.canonicalize(self.columns))

    # -- construction --------------------------------------------------------

    @staticmethod
    def span(dim: int, vectors) -> "Semimodule":
        return Semimodule(dim, tuple(tuple(v) for v in vectors))

    @staticmethod
    def from_matrix(m: Matrix) -> "Semimodule":
        """Span of the columns of a matrix; all-EPS columns contribute nothing."""
        return Semimodule(m.rows, m.columns())

    @staticmethod
    def empty(dim: int) -> "Semimodule":
        return Semimodule(dim, ())

    @staticmethod
    def full_space(dim: int) -> "Semimodule":
        return Semimodule.from_matrix(identity(dim))

    # -- queries --------------------------------------------------------------

    @property
    def num_generators(self) -> int:
        return len(self.columns)

    def is_empty(self) -> bool:
        return not self.columns

    def gen_matrix(self) -> Matrix:
        """Generators as a dim x k matrix (k may be 0)."""
        return from_columns(self.columns, self.dim)

    def member(self, x: Vector) -> bool:
        """x belongs to the span; the all-EPS vector always does."""
        if len(x) != self.dim:
            raise DimensionError(f"vector of length {len(x)} in dimension {self.dim}")
        return _spans.member(tuple(x), self.columns)

    def includes(self, other: "Semimodule") -> bool:
        self._check_dim(other)
        return all(_spans.member(col, self.columns) for col in other.columns)

    def equals(self, other: "Semimodule") -> bool:
        return self.includes(other) and other.includes(self)

    def _check_dim(self, other: "Semimodule") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"ambient dimensions differ: {self.dim} vs {other.dim}")

    # -- lattice operations ----------------------------------------------------

    def sum(self, other: "Semimodule") -> "Semimodule":
        """Span of the union of generators; equals {x (+) y : x in X, y in Y}."""
        self._check_dim(other)
        return Semimodule(self.dim, self.columns + other.columns)

    def intersect(self, other: "Semimodule",
                  max_generators: int = DEFAULT_GENERATOR_CEILING) -> "Semimodule":
        """Intersection via the two-sided system X lam = Y mu."""
        self._check_dim(other)
        if self.is_empty() or other.is_empty():
            return Semimodule.empty(self.dim)
        n, p = self.dim, self.num_generators
        xg, yg = self.gen_matrix(), other.gen_matrix()
        f = Matrix(n, p + other.num_generators,
                   tuple(rx + (EPS,) * other.num_generators for rx in xg.data))
        g = Matrix(n, p + other.num_generators,
                   tuple((EPS,) * p + ry for ry in yg.data))
        sols = solve_two_sided(TwoSidedSystem(f, g), max_generators)
        return Semimodule(self.dim,
                          tuple(mat_vec(xg, s[:p]) for s in sols.columns))

    def prune(self) -> "Semimodule":
        """Redundancy-free generating set (a no-op on canonical instances)."""
        return Semimodule(self.dim, self.columns)

    # -- JSON -------------------------------------------------------------------

    def to_json(self) -> dict:
        from .core import matrix_to_json
        gens = None if self.is_empty() else matrix_to_json(self.gen_matrix())
        return {"dim": self.dim, "gens": gens}

    @staticmethod
    def from_json(obj: dict) -> "Semimodule":
        from .core import matrix_from_json
        try:
            dim, gens = obj["dim"], obj["gens"]
        except (TypeError, KeyError) as exc:
            raise DomainError(f"not a semimodule object: missing {exc}") from exc
        if gens is None:
            return Semimodule.empty(dim)
        m = matrix_from_json(gens, allow_top=False)
        if m.rows != dim:
            raise DomainError(f"generator matrix has {m.rows} rows, dim is {dim}")
        return Semimodule.from_matrix(m)


def preimage(a: Matrix, x: Semimodule,
             max_generators: int = DEFAULT_GENERATOR_CEILING) -> Semimodule:
    """{v : a (x) v in span(x)}, via the system [a | eps](v;lam) = [eps | X](v;lam)."""
    if a.rows != x.dim:
        raise DimensionError(f"matrix has {a.rows} rows, semimodule lives in dim {x.dim}")
    m, n, p = a.rows, a.cols, x.num_generators
    xg = x.gen_matrix()
    f = Matrix(m, n + p, tuple(ra + (EPS,) * p for ra in a.data))
    g = Matrix(m, n + p, tuple((EPS,) * n + rx for rx in xg.data))
    sols = solve_two_sided(TwoSidedSystem(f, g), max_generators)
    return Semimodule(n, tuple(s[:n] for s in sols.columns))


# --- volume -----------------------------------------------------------------

@dataclass(frozen=True)
class VolumeResult:
    """Outcome of counting normalized integer points of a semimodule.

    kind is "finite" (count exact), "infinite" (a descending one-parameter
    family was detected) or "unknown" (count is the number of points found
    inside the box; the box was inconclusive or the enumeration budget ran
    out).
    """

    kind: str
    count: int | None
    box_bound: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "count": self.count, "box_bound": self.box_bound}


def _box_members(x: Semimodule, box: int, budget: int):
    """Distinct span points with top coordinate 0 and finite coords >= -box.

    Enumerates coefficient tuples over {EPS} u [-box, 0]; for any in-box
    member the greatest (residual) coefficients lie in that grid, so the
    enumeration is exhaustive.  Returns None when the budget is exceeded.
    """
    cols = x.columns
    choices = [EPS] + [-d for d in range(box + 1)]
    members = set()
    seen = 0
    for lam in itertools.product(choices, repeat=len(cols)):
        seen += 1
        if seen > budget:
            return None
        z = _spans.recombine(cols, lam)
        if not z or max(z) != 0:
            continue
        if all(v == EPS or v >= -box for v in z):
            members.add(z)
    return members


def _descending_pair(members, n: int, box: int) -> bool:
    """Two members equal except one coordinate, the lower one at the box face."""
    for i in range(n):
        groups = {}
        for z in members:
            groups.setdefault(z[:i] + z[i + 1:], []).append(z[i])
        for values in groups.values():
            if len(values) < 2:
                continue
            if -box in values and any(v != EPS and v > -box for v in values):
                return True
    return False


def default_box_bound(x: Semimodule) -> int:
    """Entry spread of the generators times the dimension, plus one.

    The +1 keeps the face test meaningful for 0/EPS generator sets, whose
    spread is zero.
    """
    finite = [v for col in x.columns for v in col if v != EPS]
    if not finite:
        return 1
    return (max(finite) - min(finite)) * x.dim + 1


def volume(x: Semimodule, box_bound: int | None = None,
           max_candidates: int = 2_000_000) -> VolumeResult:
    """Count the points of the span with largest coordinate 0.

    Bounded enumeration: members are collected inside the coordinate box
    [-box_bound, 0] and again at box_bound + 1.  The count is certified
    finite only when no member touches the box face and the recount agrees;
    a one-parameter descending family at both box sizes reports infinite;
    anything else is unknown, with the box count as a lower bound.
    """
    for col in x.columns:
        if any(v != EPS and not isinstance(v, int) for v in col):
            raise DomainError("volume requires integer generators")
    if x.is_empty():
        return VolumeResult("finite", 0, box_bound if box_bound is not None else 0)
    box = default_box_bound(x) if box_bound is None else box_bound
    if box < 0:
        raise DomainError(f"box bound must be nonnegative, got {box}")
    inner = _box_members(x, box, max_candidates)
    if inner is None:
        return VolumeResult("unknown", 0, box)
    outer = _box_members(x, box + 1, max_candidates)
    if outer is None:
        return VolumeResult("unknown", len(inner), box)
    if (_descending_pair(inner, x.dim, box)
            and _descending_pair(outer, x.dim, box + 1)):
        return VolumeResult("infinite", None, box)
    touches_face = any(-box in z for z in inner)
    if not touches_face and len(inner) == len(outer):
        return VolumeResult("finite", len(inner), box)
    return VolumeResult("unknown", len(inner), box)
