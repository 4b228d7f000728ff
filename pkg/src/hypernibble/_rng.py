"""Counter-based random substreams.

Every draw is addressed by ``(seed, *key)`` so results do not depend on
the order in which vertices or colors are processed.
"""
from __future__ import annotations

import numpy as np

ACTIVATE = 1
SELECT = 2
TIEBREAK = 3
Q_MONTE_CARLO = 4
COMPLETE = 5
GENERATE = 6


def stream(seed: int, *key: int) -> np.random.Generator:
    ss = np.random.SeedSequence(int(seed) & 0xFFFF_FFFF_FFFF_FFFF, spawn_key=tuple(int(x) for x in key))
    return np.random.Generator(np.random.Philox(ss))
