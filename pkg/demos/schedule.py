"""The deterministic parameter schedule.

zeta_i = t_i / (phi1 p_i)**(k-1) drops by the same amount every round,
which fixes the number of rounds T in advance.
"""
from hypernibble import Params

for k in (3, 4, 5):
    for delta in (1e3, 1e4, 1e6):
        p = Params.asymptotic(k, delta)
        print(f"k={k} Delta={delta:8.0e}  C={p.C:>12d}  zeta_0={p.zeta(0):7.3f}  "
              f"step={p.zeta_step:.4f}  T={p.T:4d}  closed-form bound={p.T_bound:8.3f}")

# The closed-form bound ignores the rounding in ceil((zeta_0 - 1/8k) / step),
# so T can land one round above it.  With these constants the last t_T is
# negative, so a run hands over to completion before round T.
p = Params.asymptotic(3, 1e4)
last = max(i for i in range(1, p.T + 1) if p.runnable(i))
print(f"\nk=3, Delta=1e4: t_T = {p.t(p.T):.3g}; last usable round {last} of {p.T}")

# Desk-scale constants keep the same recurrences.
r = Params.relaxed(3, 5.0, 0.1, 0.09, 40)
print("relaxed: T =", r.T, " p_i:", [round(r.p(i), 1) for i in range(0, r.T + 1, 3)])
