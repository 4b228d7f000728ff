"""One full run: nibble rounds, then resampling completion.

A random 3-graph on 2000 vertices with lists of 40 colors out of 80 gives
about 50000 constraint edges (edge, color) where every vertex of the edge
lists the color.
"""
import time

from hypernibble import (Params, complete, gen_uniform, init_state, random_lists, run_to_termination,
                         trajectory_check, verify_list)
from hypernibble.completion import CompletionStats
from hypernibble.nibble import initial_delta

h = gen_uniform(2000, 3, 5000, seed=1)
lists = random_lists(2000, 40, 80, seed=1)
params = Params.relaxed(3, initial_delta(h, lists, 3, 0.1, 40), phi1=0.1, phi2=0.09, C=40)
state = init_state(h, lists, params, seed=3)
print(f"Delta={params.delta:g}  T={params.T}  constraint edges={len(state.constraints)}")

t0 = time.perf_counter()
state, traces = run_to_termination(state)
checks = trajectory_check(traces, params)
print(f"{'round':>5} {'colored':>7} {'left':>5} {'mean |P|':>8} {'zeta':>6} {'D<=t_i':>7}")
for tr, chk in zip(traces, checks):
    sizes = list(tr.palette_size.values())
    mean = sum(sizes) / len(sizes) if sizes else 0.0
    print(f"{tr.round:5d} {tr.colored:7d} {len(tr.D):5d} {mean:8.2f} {tr.zeta:6.3f} {chk['frac_D_ok']:7.2f}")
print("status:", state.status)

stats = CompletionStats()
col = complete(state, stats=stats)
rep = verify_list(h, lists, col)
print(f"completion: {stats.resamples} resamples, {stats.greedy} greedy; "
      f"monochromatic={len(rep.monochromatic)} off-list={len(rep.list_violations)}; "
      f"{time.perf_counter() - t0:.1f}s")
