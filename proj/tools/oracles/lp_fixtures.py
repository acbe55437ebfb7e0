# Independent oracle for the LP fixture table: scipy HiGHS.
import numpy as np
from scipy.optimize import linprog

fx = []
def add(name, c, A, b):
    fx.append((name, c, A, b))

# hand-made
add("corner", [1, 0], [[1, 1]], [1])
add("sign_contradiction", [1], [[1]], [-1])
add("ray", [-1, 0], [[1, -1]], [0])
add("textbook_max", [-3, -5, 0, 0, 0], [[1, 0, 1, 0, 0], [0, 2, 0, 1, 0], [3, 2, 0, 0, 1]], [4, 12, 18])
add("diet", [2, 3, 0, 0], [[1, 2, -1, 0], [3, 1, 0, -1]], [4, 6])
add("redundant_rows", [1, 2, 3], [[1, 1, 1], [2, 2, 2], [1, -1, 0]], [3, 6, 0])
add("degenerate_vertex", [-1, -1, 0, 0, 0], [[1, 0, 1, 0, 0], [0, 1, 0, 1, 0], [1, 1, 0, 0, 1]], [1, 1, 2])
add("degenerate_zero_rhs", [-1, -2, 0, 0], [[1, -1, 1, 0], [-1, 1, 0, 1]], [0, 0])
add("infeasible_pair", [1, 1], [[1, 1], [1, 1]], [1, 2])
add("infeasible_negative_sum", [0, 0, 0], [[1, 1, 1]], [-2])
add("infeasible_mass", [1, 1, 0], [[1, 1, 0], [1, 1, -1], [0, 0, 1]], [1, 3, 1])
add("unbounded_slack", [-1, 0, 0], [[1, -1, 0], [0, 1, -1]], [1, 1])
add("unbounded_two_rays", [-1, -1, 0], [[1, -1, 1]], [2])
add("single_variable", [5], [[2]], [4])
add("zero_objective", [0, 0, 0], [[1, 1, 1], [1, 0, -1]], [2, 0])
add("transport_2x2", [4, 6, 5, 3], [[1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 0], [0, 1, 0, 1]], [30, 20, 25, 25])
add("envelope_like", [0, 0.5, 0.1], [[1, 0, 0.6], [0, 1, 0.4], [1, 1, 1]], [0.5, 0.5, 1])
add("no_rows_bounded", [1, 2], [], [])
add("no_rows_unbounded", [1, -2], [], [])
# Beale's cycling example (slack form): min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7.
add("beale_cycling",
    [0, 0, 0, -0.75, 20, -0.5, 6],
    [[1, 0, 0, 0.25, -8, -1, 9],
     [0, 1, 0, 0.5, -12, -0.5, 3],
     [0, 0, 1, 0, 0, 1, 0]],
    [0, 0, 1])

# Beale's original (1955) example with slacks.
add("beale_classic",
    [-0.75, 150, -0.02, 6, 0, 0, 0],
    [[0.25, -60, -0.04, 9, 1, 0, 0],
     [0.5, -90, -0.02, 3, 0, 1, 0],
     [0, 0, 1, 0, 0, 0, 1]],
    [0, 0, 1])
# Chvatal's cycling example (maximisation turned into minimisation).
add("chvatal_cycling",
    [-10, 57, 9, 24, 0, 0, 0],
    [[0.5, -5.5, -2.5, 9, 1, 0, 0],
     [0.5, -1.5, -0.5, 1, 0, 1, 0],
     [1, 0, 0, 0, 0, 0, 1]],
    [0, 0, 1])

rng = np.random.default_rng(20261016)
while len(fx) < 30:
    k = len(fx)
    m = int(rng.integers(2, 5)); n = int(rng.integers(m + 1, m + 5))
    A = rng.integers(-3, 4, size=(m, n)).astype(float)
    x0 = rng.integers(0, 3, size=n).astype(float)
    if k % 3 == 0:
        x0[rng.random(n) < 0.6] = 0.0  # degenerate right-hand side
    b = A @ x0
    y = rng.integers(-2, 3, size=m).astype(float)
    s = rng.integers(0, 4, size=n).astype(float)
    c = A.T @ y + s
    add(f"random_{k}", c.tolist(), A.tolist(), b.tolist())

def show(v):
    return repr(float(v))

out = []
for name, c, A, b in fx:
    n = len(c)
    if A:
        r = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * n, method="highs")
    else:
        r = linprog(c, bounds=[(0, None)] * n, method="highs")
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}[r.status]
    val = r.fun if r.status == 0 else float("nan")
    out.append((name, c, A, b, status, val))

for name, c, A, b, status, val in out:
    rows = ", ".join("{" + ", ".join(show(a) for a in row) + "}" for row in A)
    print(f'    {{"{name}", {{{", ".join(show(x) for x in c)}}}, {{{rows}}}, {{{", ".join(show(x) for x in b)}}}, LpStatus::{status}, {show(val) if status=="optimal" else "0.0"}}},')
