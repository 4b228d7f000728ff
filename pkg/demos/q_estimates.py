"""Keep probability q: exact inclusion-exclusion against Monte Carlo.

A color c survives at u unless, for some constraint edge through u, every
other vertex of the edge activates c.  Selecting c with probability beta/q
then makes it land in the temporary palette with probability exactly beta.
"""
import numpy as np

from hypernibble.nibble import q_exact, q_monte_carlo

pi = 0.3
residuals = [(1, 2), (2, 3), (4, 5)]
exact = q_exact(residuals, pi)
print(f"exact q = {exact:.6f}  (= (1 - 2pi^2 + pi^3)(1 - pi^2) = {(1 - 2 * pi**2 + pi**3) * (1 - pi**2):.6f})")
rng = np.random.default_rng(0)
for n in (100, 1000, 10_000, 100_000):
    est = q_monte_carlo(residuals, pi, n, rng)
    print(f"  monte carlo n={n:>6d}: {est:.4f}  (error {est - exact:+.4f})")
