import time

import maxplus as mp
from maxplus import EPS, Matrix

e = EPS


def m(rows):
    return Matrix.of(rows)


# 12x15 constraint matrix of the extended implicit system
E = m([
    [0, e, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, 0, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, 0, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 0, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, 0, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 0, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, 0, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 0, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, 0, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, 0, 0, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, 0, 0, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, e, e, 0, 0],
])

A = m([
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [e, 5, e, e, e, e, e, e, 1, e, e, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, 3, 5, 1, 3],
    [e, e, 5, e, 4, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 4, e, e, e, e, 3, e, e, e, e, e, e],
    [e, e, e, e, 3, e, 5, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 2, e, 4, e, e, e, e, e, e, e],
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, 4, e, e, e, 2, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [e, e, e, e, e, e, e, 3, e, 1, 7, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
    [4, e, e, e, e, 3, e, e, e, e, e, e, e, e, e],
])

C = m([
    [e, e, 0, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, 0, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, 0, e, e, e, e, e, e, e],
])

F = m([
    [0, e, e, e, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, 0, e, e, e, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, 0, e, e, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, 0, e, e, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, 0, 0, e, e, e, e],
    [e, e, e, e, e, e, e, e, e, e, e, e, e, 0, 0],
])

U = m([
    [e, e, 2, e, e, e],
    [4, e, e, e, e, e],
    [e, 4, e, 3, e, e],
    [e, e, e, e, e, e],
    [e, e, 2, e, e, e],
    [4, e, e, e, e, e],
])

V = m([
    [4, e, e],
    [e, 3, e],
    [e, e, e],
    [e, 2, 4],
    [4, e, e],
    [e, 3, e],
])

t0 = time.time()
Vcong = mp.kernel_of(E)
K = mp.orthogonal_congruence(Vcong)
print("K gens:", K.num_generators)
rep = mp.max_controlled_invariant(A.transpose(), C.transpose(), K)
print("converged:", rep.converged, "iterations:", rep.iterations,
      "in %.2fs" % (time.time() - t0))
for i, X in enumerate(rep.chain):
    print("  X%d: %d generators" % (i + 1, X.num_generators))

Kstar = rep.result
print("K* equals Im F^t:", Kstar.equals(mp.Semimodule.from_matrix(F.transpose())))

W = mp.orthogonal_semimodule(Kstar)
print("kernel of W equals printed F byte-exact:", W.kernel_form().data == F.data)

obs = mp.synthesize_observer(F, A, C)
print("U matches printed:", obs.U.data == U.data)
print("V matches printed:", obs.V.data == V.data)
print("printed (U,V) also satisfies the equation:",
      mp.mat_mul(F, A).data == mp.mat_add(mp.mat_mul(U, F), mp.mat_mul(V, C)).data)
print("total %.2fs" % (time.time() - t0))
