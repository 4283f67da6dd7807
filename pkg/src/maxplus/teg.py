"""Timed event graphs with interval-uncertain holding times.

A TEG with one token per place evolves by x(k+1) = Abar x(k) where Abar_ij
is the holding time of the place on the arc from transition j to transition
i.  Uncertain holding times range over integer intervals; the implicit
extension trades each uncertain entry (i, j, [a, b]) for two auxiliary state
variables u, v and yields matrices (E, A) with E x(k+1) = E A x(k), whose
original coordinates evolve exactly like the sampled uncertain system.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass

from .core import EPS, Matrix, Vector, mat_vec
from .errors import ConstraintViolation, DimensionError, DomainError, SpecError
from .observer import Trajectory

# An interval-matrix entry is EPS, a fixed int, or an (a, b) int pair.


def _check_entry(entry):
    if entry == EPS:
        return EPS
    if isinstance(entry, bool):
        raise DomainError(f"boolean is not a holding time: {entry!r}")
    if isinstance(entry, int):
        return entry
    if isinstance(entry, (tuple, list)) and len(entry) == 2:
        a, b = entry
        if isinstance(a, int) and isinstance(b, int) and not isinstance(a, bool) \
                and not isinstance(b, bool):
            if a > b:
                raise DomainError(f"empty interval [{a}, {b}]")
            return (a, b)
    raise DomainError(f"bad interval-matrix entry: {entry!r}")


@dataclass(frozen=True)
class IntervalMatrix:
    """Square matrix whose entries are EPS, fixed ints, or integer intervals."""

    n: int
    entries: tuple

    @staticmethod
    def of(rows) -> "IntervalMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionError("interval matrix must be square")
        return IntervalMatrix(n, tuple(tuple(_check_entry(v) for v in r) for r in rows))

    def uncertain_entries(self):
        """Interval positions in row-major order, as (i, j, a, b)."""
        out = []
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if isinstance(v, tuple):
                    out.append((i, j, v[0], v[1]))
        return out

    def realize(self, draws) -> Matrix:
        """Fix every interval entry to the supplied draw (row-major order)."""
        it = iter(draws)
        rows = []
        for row in self.entries:
            out = []
            for v in row:
                if isinstance(v, tuple):
                    theta = next(it)
                    if not v[0] <= theta <= v[1]:
                        raise DomainError(f"draw {theta} outside [{v[0]}, {v[1]}]")
                    out.append(theta)
                else:
                    out.append(v)
            rows.append(tuple(out))
        return Matrix(self.n, self.n, tuple(rows))

    def to_json(self) -> dict:
        def enc(v):
            if v == EPS:
                return None
            if isinstance(v, tuple):
                return [v[0], v[1]]
            return v
        return {"n": self.n, "entries": [[enc(v) for v in row] for row in self.entries]}

    @staticmethod
    def from_json(obj: dict) -> "IntervalMatrix":
        def dec(v):
            if v is None:
                return EPS
            if isinstance(v, list):
                return tuple(v)
            return v
        return IntervalMatrix.of([[dec(v) for v in row] for row in obj["entries"]])


@dataclass(frozen=True)
class UncertainEntry:
    """One interval entry (row, col, [low, high]) and its auxiliary indices."""

    row: int
    col: int
    low: int
    high: int
    u: int
    v: int


@dataclass(frozen=True)
class ExtensionMap:
    """Bookkeeping from an interval matrix to its extended implicit system."""

    n: int
    pairs: tuple

    @property
    def extended_dim(self) -> int:
        return self.n + 2 * len(self.pairs)


@dataclass(frozen=True)
class TegSpec:
    """A timed event graph: transitions, arcs with holding times, observations.

    One initial token per place is assumed, so the earliest firing times obey
    a first-order max-plus recursion.
    """

    transitions: tuple
    arcs: tuple  # (src, dst, time) triples
    observed: tuple

    def __post_init__(self):
        names = set(self.transitions)
        if len(names) != len(self.transitions):
            raise SpecError("duplicate transition names")
        seen = set()
        for src, dst, time in self.arcs:
            if src not in names or dst not in names:
                raise SpecError(f"arc references unknown transition: {src} -> {dst}")
            if (src, dst) in seen:
                raise SpecError(f"duplicate arc {src} -> {dst}")
            seen.add((src, dst))
            _check_entry(time)
        for name in self.observed:
            if name not in names:
                raise SpecError(f"observed transition {name!r} does not exist")

    def to_json(self) -> dict:
        def enc(t):
            return [t[0], t[1]] if isinstance(t, tuple) else t
        return {"transitions": list(self.transitions),
                "arcs": [{"from": s, "to": d, "time": enc(t)} for s, d, t in self.arcs],
                "observed": list(self.observed)}

    @staticmethod
    def from_json(obj: dict) -> "TegSpec":
        try:
            arcs = tuple((a["from"], a["to"],
                          tuple(a["time"]) if isinstance(a["time"], list) else a["time"])
                         for a in obj["arcs"])
            return TegSpec(tuple(obj["transitions"]), arcs, tuple(obj["observed"]))
        except (TypeError, KeyError) as exc:
            raise SpecError(f"malformed TEG spec: {exc}") from exc


def compile_teg(spec: TegSpec):
    """Holding-time matrix and observation matrix of an event graph.

    Abar_ij is the time of the arc from transition j to transition i; C has
    one 0/EPS selection row per observed transition.
    """
    n = len(spec.transitions)
    index = {name: i for i, name in enumerate(spec.transitions)}
    rows = [[EPS] * n for _ in range(n)]
    for src, dst, time in spec.arcs:
        rows[index[dst]][index[src]] = time
    abar = IntervalMatrix.of(rows)
    c_rows = []
    for name in spec.observed:
        row = [EPS] * n
        row[index[name]] = 0
        c_rows.append(tuple(row))
    c = Matrix(len(c_rows), n, tuple(c_rows))
    return abar, c


def extend_interval_system(abar: IntervalMatrix):
    """Implicit system (E, A) absorbing interval entries into auxiliary pairs.

    The k-th uncertain entry (i, j, [a, b]) gets auxiliary coordinates
    u = n + 2k - 1 and v = n + 2k (1-based).  In A, row i reads a at column u
    and b at column v instead of the uncertain entry, and rows u, v are
    copies of the finalized extended row j; E constrains x_u (+) x_v to
    follow coordinate j.
    """
    n = abar.n
    uncertain = abar.uncertain_entries()
    big_n = n + 2 * len(uncertain)
    pairs = tuple(UncertainEntry(i, j, a, b, n + 2 * k, n + 2 * k + 1)
                  for k, (i, j, a, b) in enumerate(uncertain))

    extended = []
    for i, row in enumerate(abar.entries):
        out = [v if v != EPS and not isinstance(v, tuple) else EPS for v in row]
        out.extend([EPS] * (2 * len(pairs)))
        extended.append(out)
    for p in pairs:
        extended[p.row][p.col] = EPS
        extended[p.row][p.u] = p.low
        extended[p.row][p.v] = p.high
    for p in pairs:
        extended.append(list(extended[p.col]))
        extended.append(list(extended[p.col]))
    a = Matrix(big_n, big_n, tuple(tuple(r) for r in extended))

    e_rows = [tuple(0 if c == i else EPS for c in range(big_n)) for i in range(n)]
    for p in pairs:
        e_rows.append(tuple(0 if c in (p.u, p.v) else EPS for c in range(big_n)))
    e = Matrix(n + len(pairs), big_n, tuple(e_rows))
    return e, a, ExtensionMap(n, pairs)


def extend_output_matrix(c: Matrix, emap: ExtensionMap) -> Matrix:
    """Pad an observation matrix with EPS columns for the auxiliary coordinates."""
    if c.cols != emap.n:
        raise DimensionError(f"C has {c.cols} columns, original dimension is {emap.n}")
    pad = (EPS,) * (emap.extended_dim - emap.n)
    return Matrix(c.rows, emap.extended_dim, tuple(row + pad for row in c.data))


def _draw(seed: int, step: int, index: int, low: int, high: int) -> int:
    # Counter-based: each draw is keyed by (seed, step, entry), so runs are
    # reproducible regardless of evaluation order.
    return random.Random(f"{seed}:{step}:{index}").randint(low, high)


def sample_trajectory(abar: IntervalMatrix, horizon: int, seed: int,
                      c: Matrix | None = None) -> Trajectory:
    """Simulate the uncertain system from the all-zero initial state.

    Every interval entry is redrawn uniformly (over integers) at each step
    with a deterministic seeded generator; the realized draws are recorded
    per step in row-major entry order.
    """
    if horizon < 1:
        raise DomainError("horizon must be at least 1")
    uncertain = abar.uncertain_entries()
    states = [tuple(0 for _ in range(abar.n))]
    realized = []
    for k in range(horizon):
        draws = tuple(_draw(seed, k, idx, a, b)
                      for idx, (_, _, a, b) in enumerate(uncertain))
        realized.append(draws)
        states.append(mat_vec(abar.realize(draws), states[-1]))
    outputs = tuple(mat_vec(c, x) for x in states) if c is not None else ()
    return Trajectory(states=tuple(states), outputs=outputs,
                      realized_params=tuple(realized))


def embed_trajectory(traj: Trajectory, emap: ExtensionMap, e: Matrix, a: Matrix,
                     aux_init: str = "witness") -> list:
    """Lift a sampled trajectory into the extended state space.

    For uncertain entry (i, j, [lo, hi]) realized as theta(k), the auxiliary
    pair is set to x_u(k) = x_j(k) and x_v(k) = x_j(k) - hi + theta(k), so
    that x_u (+) x_v = x_j and lo x_u (+) hi x_v = theta x_j.  The embedded
    sequence is verified to satisfy E x(k+1) = E A x(k) at every step.

    ``aux_init="zeros"`` reproduces the simpler all-zero initialization
    instead; it encodes no draw, so the implicit equation is only enforced
    from step 1 on.
    """
    if aux_init not in ("witness", "zeros"):
        raise DomainError(f"unknown aux_init {aux_init!r}")
    steps = len(traj.states) - 1
    if len(traj.realized_params) != steps:
        raise DomainError("trajectory does not carry one draw tuple per step")
    embedded = []
    for k, x in enumerate(traj.states):
        aux = []
        for idx, p in enumerate(emap.pairs):
            xj = x[p.col]
            theta = traj.realized_params[k][idx] if k < steps else p.high
            if k == 0 and aux_init == "zeros":
                aux.extend([0, 0])
            elif xj == EPS:
                aux.extend([EPS, EPS])
            else:
                aux.extend([xj, xj - p.high + theta])
        embedded.append(tuple(x) + tuple(aux))
    start = 1 if aux_init == "zeros" else 0
    for k in range(start, steps):
        lhs = mat_vec(e, embedded[k + 1])
        rhs = mat_vec(e, mat_vec(a, embedded[k]))
        if lhs != rhs:
            raise ConstraintViolation(f"implicit equation fails at step {k}")
    return embedded


def format_entry(v) -> str:
    return "-inf" if v == EPS else str(v)


def write_trajectory_csv(fileobj, states, outputs, observer_states=None) -> None:
    """CSV with header k,x1..xn,y1..yq[,z1..zp]; EPS rendered as -inf."""
    n = len(states[0])
    q = len(outputs[0]) if outputs else 0
    header = ["k"] + [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(q)]
    if observer_states is not None:
        header += [f"z{i + 1}" for i in range(len(observer_states[0]))]
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(header)
    for k, x in enumerate(states):
        row = [k] + [format_entry(v) for v in x]
        if outputs:
            row += [format_entry(v) for v in outputs[k]]
        if observer_states is not None:
            row += [format_entry(v) for v in observer_states[k]]
        writer.writerow(row)
