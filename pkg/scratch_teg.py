import json
import time

import maxplus as mp
from maxplus import EPS

spec = mp.TegSpec(
    transitions=tuple(f"x{i}" for i in range(1, 10)),
    arcs=(
        ("x3", "x1", 4), ("x7", "x1", 2),
        ("x1", "x2", (1, 7)), ("x8", "x2", 3),
        ("x2", "x3", 5), ("x9", "x3", 1),
        ("x1", "x4", 4), ("x6", "x4", 3),
        ("x2", "x5", (3, 5)), ("x4", "x5", (1, 3)),
        ("x3", "x6", 5), ("x5", "x6", 4),
        ("x4", "x7", 4), ("x9", "x7", 3),
        ("x5", "x8", 3), ("x7", "x8", 5),
        ("x6", "x9", 2), ("x8", "x9", 4),
    ),
    observed=("x3", "x6", "x8"),
)

abar, c9 = mp.compile_teg(spec)
print("uncertain entries:", abar.uncertain_entries())
E, A, emap = mp.extend_interval_system(abar)
print("E shape", E.rows, E.cols, " A shape", A.rows, A.cols)

# reuse printed matrices from the other scratch file
import scratch_flowshop as fs
print("E byte-exact:", E.data == fs.E.data)
print("A byte-exact:", A.data == fs.A.data)
C15 = mp.extend_output_matrix(c9, emap)
print("C byte-exact:", C15.data == fs.C.data)

t0 = time.time()
traj = mp.sample_trajectory(abar, 20, 42, c9)
emb = mp.embed_trajectory(traj, emap, E, A)
print("embedding verified, states:", len(emb))

W = mp.min_conditioned_invariant_closed(C15, A, mp.kernel_of(E))
obs = mp.synthesize_observer(W.kernel_form(), A, C15)
z = mp.run_observer(obs, emb[0], traj.outputs[:-1])
ok = all(tuple(zk) == mp.mat_vec(obs.F, xk) for zk, xk in zip(z, emb))
print("z(k) == F x(k) for all k:", ok)
print("z3 == x7 along the run:",
      all(zk[2] == xk[6] for zk, xk in zip(z, emb)))
print("pipeline %.2fs" % (time.time() - t0))

# determinism of sampling
traj2 = mp.sample_trajectory(abar, 20, 42, c9)
print("same seed reproduces:", traj == traj2)

# 2x2 extension of the generic one-uncertain-entry system
a11, a12, a22, lo, hi = 6, 2, 5, 1, 4
small = mp.IntervalMatrix.of([[a11, a12], [EPS, a22]])
small = mp.IntervalMatrix.of([[a11, a12], [(lo, hi), a22]])
E2, A2, m2 = mp.extend_interval_system(small)
expectA = mp.Matrix.of([
    [a11, a12, EPS, EPS],
    [EPS, a22, lo, hi],
    [a11, a12, EPS, EPS],
    [a11, a12, EPS, EPS],
])
expectE = mp.Matrix.of([
    [0, EPS, EPS, EPS],
    [EPS, 0, EPS, EPS],
    [EPS, EPS, 0, 0],
])
print("2x2 A byte-exact:", A2.data == expectA.data)
print("2x2 E byte-exact:", E2.data == expectE.data)
