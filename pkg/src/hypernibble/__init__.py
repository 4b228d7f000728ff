"""Semi-random list coloring of triangle-free rank-k hypergraphs."""
from .coloring import Coloring
from .completion import CompletionConfig, CompletionError, complete
from .hypercore import DegreeProfile, Hypergraph, TriangleWitness
from .instances import gen_linear, gen_mixed, gen_uniform, make_triangle_free, random_lists
from .nibble import (ConstraintFamily, NibbleState, RoundTrace, estimate_q, init_state,
                     run_round, run_to_termination, trajectory_check, weighted_cdegree)
from .params import Params
from .reduction import (ReductionPolicy, ReductionTrace, balanced_reduce, check_soundness,
                        f_reduce, solve_lambda)
from .verify import brute_triangles, verify_list, verify_proper

__version__ = "0.1.0"
