"""Independent reference values for the C++ test suite.

Uses scipy's HiGHS LP solver and scipy.stats, which share no code with the
library. Run once; the printed constants are pasted into the tests.
"""
import numpy as np
from scipy.optimize import linprog
from scipy.stats import norm


def ot(cost, a, b):
    m, n = cost.shape
    A = np.zeros((m + n, m * n))
    for i in range(m):
        A[i, i * n:(i + 1) * n] = 1
    for j in range(n):
        A[m + j, j::n] = 1
    r = linprog(cost.ravel(), A_eq=A, b_eq=np.r_[a, b], bounds=(0, None), method="highs")
    return r.fun


def partial_ot(pi, g1, g0):
    J = len(g0)
    c = np.r_[pi[0], pi[1]]
    Aeq = np.zeros((2, 2 * J))
    Aeq[0, :J] = 1
    Aeq[1, J:] = 1
    Aub = np.hstack([np.eye(J), np.eye(J)])
    r = linprog(c, A_ub=Aub, b_ub=g0, A_eq=Aeq, b_eq=g1, bounds=(0, None), method="highs")
    return r.fun


def law(vals, probs):
    vals = np.asarray(vals, float)
    probs = np.asarray(probs, float)
    probs = probs / probs.sum()
    o = np.argsort(vals)
    return vals[o], probs[o]


v = law([-1.5, 0.2, 0.7, 2.0, 3.1], [0.1, 0.25, 0.3, 0.2, 0.15])
w = law([-0.4, 0.0, 1.1, 1.6, 2.5], [0.3, 0.1, 0.2, 0.25, 0.15])
print("comonotone 5-atom:", repr(-ot(-np.outer(v[0], w[0]), v[1], w[1])))

v6 = law([-2.0, -0.5, 0.3, 0.9, 1.4, 2.2], [0.05, 0.2, 0.15, 0.25, 0.2, 0.15])
w6 = law([-1.0, -0.2, 0.1, 0.8, 1.7, 3.0], [0.2, 0.1, 0.3, 0.1, 0.2, 0.1])
print("antitone 6-atom:", repr(ot(np.outer(v6[0], w6[0]), v6[1], w6[1])))

inst = [
    (np.array([[0.3, -0.2, 0.8], [0.5, 0.1, -0.7]]), [0.3, 0.4], [0.25, 0.35, 0.4]),
    (np.array([[0.9, -0.4, 0.2, -0.1], [-0.6, 0.3, 0.7, -0.8]]), [0.35, 0.45], [0.2, 0.3, 0.1, 0.4]),
    (np.array([[0.1, 0.5, -0.9, 0.4, -0.3], [0.2, -0.5, 0.6, -0.2, 0.9]]), [0.2, 0.5],
     [0.15, 0.25, 0.1, 0.3, 0.2]),
]
for pi, g1, g0 in inst:
    print("partial:", repr(partial_ot(pi, g1, g0)))

n = 400
edges = norm.ppf(np.arange(1, n) / n)
dens = np.r_[0.0, norm.pdf(edges), 0.0]
z = n * (dens[:-1] - dens[1:])
print("bin-mean E[Z^2] n=400:", repr(np.mean(z * z)))
mid = norm.ppf((np.arange(1, n + 1) - 0.5) / n)
print("midpoint E[Z^2] n=400:", repr(np.mean(mid * mid)))
