"""Parameter schedule of the nibble.

Round ``i`` uses the activation probability ``pi_i`` and produces the ideal
palette size ``p_i`` and ideal c-degree ``t_i``.  The ratio
``zeta_i = t_i / (phi1 p_i)**(k-1)`` drops by the constant
``beta phi2 / (24 phi1)`` per round; the run stops at the first ``T`` with
``zeta_T <= 1/(8k)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional


@dataclass(frozen=True)
class Params:
    """Constants and per-round schedule.

    Use :meth:`asymptotic` for the asymptotic constants and :meth:`relaxed` for
    desk-scale runs with user-chosen ``phi1``, ``phi2`` and palette size ``C``.
    """

    k: int
    delta: float
    phi1: float
    phi2: float
    C: int
    epsilon: float
    relax_mode: bool = False
    max_schedule: int = field(default=100_000, repr=False)

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if not 0 < self.phi2 < 1:
            raise ValueError("phi2 must lie in (0, 1)")
        if self.phi1 <= 0 or self.C <= 0 or self.delta <= 0:
            raise ValueError("phi1, C and delta must be positive")

    @classmethod
    def asymptotic(cls, k: int, delta: float) -> "Params":
        if delta <= math.e:
            raise ValueError("delta must exceed e so that log(delta) > 1")
        phi1 = 1.0 / (60 * 2 ** k)
        ln = math.log(delta)
        C = math.ceil((delta / ln) ** (1.0 / (k - 1)) / phi1)
        eps = 4 * delta ** (-1.0 / (4 * k)) * ln ** (2 * k)
        return cls(k, delta, phi1, 1.0 / k ** 4, C, eps)

    @classmethod
    def relaxed(cls, k: int, delta: float, phi1: float, phi2: float, C: int,
                epsilon: Optional[float] = None) -> "Params":
        if epsilon is None:
            epsilon = 0.1
        return cls(k, delta, phi1, phi2, int(C), epsilon, relax_mode=True)

    # -- constants -------------------------------------------------------------

    @property
    def theta(self) -> float:
        return 1.0 / (4 * self.k)

    @property
    def beta(self) -> float:
        return 1.0 - self.phi2

    @property
    def zeta_step(self) -> float:
        return self.beta * self.phi2 / (24 * self.phi1)

    @property
    def zeta_stop(self) -> float:
        return 1.0 / (8 * self.k)

    @property
    def p0(self) -> float:
        return float(self.C)

    @property
    def t0(self) -> float:
        return (self.k - 1) * self.delta

    # -- schedule --------------------------------------------------------------

    @cached_property
    def _schedule(self) -> tuple[list[float], list[float], list[float], list[float]]:
        """``(p, t, pi, zeta)`` for rounds ``0 .. T`` (``pi[0]`` is unused).

        ``pi_i`` is evaluated as ``phi2 / (4 phi1 zeta_{i-1} p_{i-1})``, which
        equals ``phi2 (phi1 p)**(k-2) / (4 t)`` but stays finite when ``p``
        and ``t`` become tiny over thousands of rounds.
        """
        k, beta = self.k, self.beta
        p, t, pi = [self.p0], [self.t0], [0.0]
        zeta = [self.t0 / (self.phi1 * self.p0) ** (k - 1)]
        while zeta[-1] > self.zeta_stop:
            if len(p) > self.max_schedule:
                raise RuntimeError("schedule does not terminate within max_schedule rounds")
            prev_p, prev_t, prev_z = p[-1], t[-1], zeta[-1]
            pi_i = self.phi2 / (4 * self.phi1 * prev_z * prev_p)
            alpha_prime = 1 - beta * pi_i * prev_p / 6
            pi.append(pi_i)
            p.append(beta * prev_p)
            t.append(alpha_prime * beta ** (k - 1) * prev_t)
            zeta.append(alpha_prime * prev_z)
        return p, t, pi, zeta

    @property
    def T(self) -> int:
        """Number of rounds until ``zeta_T <= 1/(8k)``."""
        return len(self._schedule[0]) - 1

    @property
    def T_bound(self) -> float:
        """``24 (k-1) phi1 log(delta) / ((1 - phi2) phi2)``."""
        return 24 * (self.k - 1) * self.phi1 * math.log(self.delta) / ((1 - self.phi2) * self.phi2)

    def _at(self, seq: list[float], i: int) -> float:
        if not 0 <= i < len(seq):
            raise IndexError(f"round {i} outside 0..{len(seq) - 1}")
        return seq[i]

    def p(self, i: int) -> float:
        return self._at(self._schedule[0], i)

    def t(self, i: int) -> float:
        return self._at(self._schedule[1], i)

    def pi(self, i: int) -> float:
        if i < 1:
            raise IndexError("activation probability is defined from round 1")
        return self._at(self._schedule[2], i)

    def alpha(self, i: int) -> float:
        return 1 - self.beta * self.pi(i) * self.p(i - 1) / 5

    def alpha_prime(self, i: int) -> float:
        return 1 - self.beta * self.pi(i) * self.p(i - 1) / 6

    def weight_base(self, i: int) -> float:
        """``phi1 p_i``, the base of the size weights in the c-degree."""
        return self.phi1 * self.p(i)

    def zeta(self, i: int) -> float:
        """``t_i / (phi1 p_i)**(k-1)``."""
        return self._at(self._schedule[3], i)

    def p_approx(self, i: int) -> float:
        return (1 - self.epsilon / 8) ** i * self.p(i)

    def t_approx(self, i: int) -> float:
        return (1 + self.epsilon) ** i * self.t(i)

    def runnable(self, i: int) -> bool:
        """Whether round ``i`` has a usable schedule: ``t_i > 0``,
        ``phi1 p_i > 1`` and ``pi_i <= 1``."""
        return (1 <= i <= self.T and self.t(i) > 0 and self.weight_base(i) > 1
                and self.pi(i) <= 1)

    def to_json(self) -> dict:
        return {"k": self.k, "delta": self.delta, "phi1": self.phi1, "phi2": self.phi2,
                "C": self.C, "epsilon": self.epsilon, "relax_mode": self.relax_mode}

    @classmethod
    def from_json(cls, d: dict) -> "Params":
        return cls(int(d["k"]), float(d["delta"]), float(d["phi1"]), float(d["phi2"]),
                   int(d["C"]), float(d["epsilon"]), bool(d.get("relax_mode", False)))


def degree_scale(profile, k: int) -> float:
    """Smallest ``delta > e`` with ``Delta_l <= delta**((l-1)/(k-1)) log(delta)**((k-l)/(k-1))``
    for every size ``l`` present in ``profile``."""
    best = math.e * (1 + 1e-12)
    for l, d in profile.max_degree.items():
        if d <= 0:
            continue

        def g(x, l=l):
            return ((l - 1) * math.log(x) + (k - l) * math.log(math.log(x))) / (k - 1)

        target = math.log(d)
        lo, hi = math.e, math.e
        while g(hi) < target:
            lo, hi = hi, hi * 2
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if g(mid) < target:
                lo = mid
            else:
                hi = mid
        best = max(best, hi)
    return best
