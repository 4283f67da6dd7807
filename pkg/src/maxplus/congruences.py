"""Congruences: max-plus kernels and the orthogonal duality with semimodules.

A congruence on R_max^n is an equivalence relation that is itself a
semimodule of pairs.  The primary representation is the kernel form
W = ker E = {(x, y) : Ex = Ey}; the pair-generator form (a semimodule in
dimension 2n whose columns are stacked pairs (x; y)) is computed lazily from
the kernel by solving the two-sided system [E | eps] z = [eps | E] z.

A kernel with zero rows represents the full relation (everything related).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .core import EPS, Matrix, Vector, mat_mul, mat_vec, row_stack
from .errors import DimensionError, DomainError
from .semimodules import Semimodule
from .twosided import DEFAULT_GENERATOR_CEILING, TwoSidedSystem, solve_two_sided


@dataclass(frozen=True)
class Congruence:
    """Kernel-form (and lazily pair-form) congruence on R_max^dim."""

    dim: int
    kernel: Matrix | None = None
    explicit_pairs: Semimodule | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.kernel is None and self.explicit_pairs is None:
            raise DomainError("congruence needs a kernel or pair generators")
        if self.kernel is not None and self.kernel.cols != self.dim:
            raise DimensionError(
                f"kernel has {self.kernel.cols} columns in dimension {self.dim}")
        if self.explicit_pairs is not None and self.explicit_pairs.dim != 2 * self.dim:
            raise DimensionError("pair generators must live in dimension 2n")

    # -- construction -----------------------------------------------------------

    @staticmethod
    def from_kernel(e: Matrix) -> "Congruence":
        if e.contains_top():
            raise DomainError("kernel matrices must not contain +inf")
        return Congruence(e.cols, e)

    @staticmethod
    def from_pair_generators(dim: int, pairs: Semimodule) -> "Congruence":
        """Pair-form congruence; diagonal pairs of both projections are adjoined.

        The span is assumed to come from a genuine congruence (for instance a
        solved kernel system); arbitrary pair sets are not completed to one.
        """
        if pairs.dim != 2 * dim:
            raise DimensionError("pair generators must live in dimension 2n")
        cols = list(pairs.columns)
        for col in pairs.columns:
            for g in (col[:dim], col[dim:]):
                if any(v != EPS for v in g):
                    cols.append(g + g)
        return Congruence(dim, None, Semimodule(2 * dim, tuple(cols)))

    @staticmethod
    def diagonal(dim: int) -> "Congruence":
        """The identity relation x = y, as ker I."""
        from .core import identity
        return Congruence.from_kernel(identity(dim))

    @staticmethod
    def full_relation(dim: int) -> "Congruence":
        return Congruence(dim, Matrix(0, dim, ()))

    # -- relation queries --------------------------------------------------------

    def related(self, x: Vector, y: Vector) -> bool:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError("vectors do not match the congruence dimension")
        if self.kernel is not None:
            return mat_vec(self.kernel, tuple(x)) == mat_vec(self.kernel, tuple(y))
        return self.explicit_pairs.member(tuple(x) + tuple(y))

    @cached_property
    def pair_generators(self) -> Semimodule:
        """Generators of the relation as a semimodule of stacked pairs."""
        if self.explicit_pairs is not None:
            return self.explicit_pairs
        e = self.kernel
        n = self.dim
        f = Matrix(e.rows, 2 * n, tuple(r + (EPS,) * n for r in e.data))
        g = Matrix(e.rows, 2 * n, tuple((EPS,) * n + r for r in e.data))
        return solve_two_sided(TwoSidedSystem(f, g))

    def kernel_form(self) -> Matrix:
        """The kernel matrix, computing it from pair generators if needed."""
        if self.kernel is not None:
            return self.kernel
        return generators_to_kernel(self.explicit_pairs)

    def same_relation(self, other: "Congruence") -> bool:
        """Relation equality, decided through the orthogonal semimodules.

        Valid for closed (kernel-representable) congruences, which is the
        only kind this package stores.
        """
        if self.dim != other.dim:
            raise DimensionError("dimensions differ")
        return orthogonal_congruence(self).equals(orthogonal_congruence(other))

    # -- JSON ---------------------------------------------------------------------

    def to_json(self) -> dict:
        from .core import matrix_to_json
        return {"dim": self.dim, "kernel": matrix_to_json(self.kernel_form())}

    @staticmethod
    def from_json(obj: dict) -> "Congruence":
        from .core import matrix_from_json
        try:
            dim, kernel = obj["dim"], obj["kernel"]
        except (TypeError, KeyError) as exc:
            raise DomainError(f"not a congruence object: missing {exc}") from exc
        e = matrix_from_json(kernel, allow_top=False)
        if e.cols != dim:
            raise DomainError(f"kernel has {e.cols} columns, dim is {dim}")
        return Congruence(dim, e)


def kernel_of(e: Matrix) -> Congruence:
    """The congruence {(x, y) : Ex = Ey}."""
    return Congruence.from_kernel(e)


def congruence_generators(w: Congruence) -> Semimodule:
    """Pair-generator semimodule of a kernel-form congruence."""
    return w.pair_generators


def pair_span_orthogonal(pairs: Semimodule,
                         max_generators: int = DEFAULT_GENERATOR_CEILING) -> Semimodule:
    """Vectors z with x^t z = y^t z for every pair generator (x; y).

    This is the orthogonal of an arbitrary pair semimodule, computed as a
    two-sided system with one equation per pair generator.
    """
    if pairs.dim % 2 != 0:
        raise DimensionError("pair semimodule must have even dimension")
    n = pairs.dim // 2
    if pairs.is_empty():
        return Semimodule.full_space(n)
    f = Matrix(pairs.num_generators, n, tuple(col[:n] for col in pairs.columns))
    g = Matrix(pairs.num_generators, n, tuple(col[n:] for col in pairs.columns))
    return solve_two_sided(TwoSidedSystem(f, g), max_generators)


def generators_to_kernel(pairs: Semimodule,
                         max_generators: int = DEFAULT_GENERATOR_CEILING) -> Matrix:
    """Kernel matrix of the closed congruence spanned by pair generators.

    The orthogonal of the pair span is some Im G; the relation then equals
    ker G^t.
    """
    return pair_span_orthogonal(pairs, max_generators).gen_matrix().transpose()


def orthogonal_semimodule(x: Semimodule) -> Congruence:
    """X^perp = ker(X.gens^t): pairs agreeing against every element of X."""
    return Congruence(x.dim, x.gen_matrix().transpose())


def orthogonal_congruence(w: Congruence) -> Semimodule:
    """W^top = Im(E^t): the vectors on which all related pairs agree."""
    return Semimodule.from_matrix(w.kernel_form().transpose())


def intersect_congruences(w1: Congruence, w2: Congruence) -> Congruence:
    """ker E1 intersect ker E2 = ker of the row-stacked matrix."""
    if w1.dim != w2.dim:
        raise DimensionError("dimensions differ")
    return Congruence(w1.dim, row_stack(w1.kernel_form(), w2.kernel_form()))


def apply_to_pairs(a: Matrix, pairs: Semimodule) -> Semimodule:
    """Image of a pair semimodule under (x, y) -> (Ax, Ay)."""
    if pairs.dim % 2 != 0:
        raise DimensionError("pair semimodule must have even dimension")
    n = pairs.dim // 2
    if a.cols != n:
        raise DimensionError(f"matrix has {a.cols} cols, pairs live over dimension {n}")
    cols = tuple(mat_vec(a, col[:n]) + mat_vec(a, col[n:]) for col in pairs.columns)
    return Semimodule(2 * a.rows, cols)


def preimage_congruence(a: Matrix, w: Congruence) -> Congruence:
    """A^{-1} W = {(x, y) : (Ax, Ay) in W} = ker(E A) for W = ker E."""
    return Congruence(a.cols, mat_mul(w.kernel_form(), a))
