"""Finish a partial nibble coloring.

Remaining vertices draw a uniform color from their final palette; while some
constraint edge is monochromatic in its own color, all of its vertices are
redrawn.  Vertices that cannot be handled this way (empty palette, exhausted
resampling budget) are colored greedily against the original hypergraph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from . import _rng
from .coloring import Coloring
from .hypercore import Edge
from .nibble import NibbleState

log = logging.getLogger(__name__)


class CompletionError(RuntimeError):
    """Raised when some vertices cannot be colored; ``vertices`` names them."""

    def __init__(self, message: str, vertices: list[int]):
        super().__init__(message)
        self.vertices = vertices


@dataclass(frozen=True)
class CompletionConfig:
    max_resample_rounds: int = 100_000
    fallback: str = "greedy"

    def __post_init__(self):
        if self.max_resample_rounds < 1:
            raise ValueError("max_resample_rounds must be at least 1")
        if self.fallback not in ("greedy", "fail"):
            raise ValueError(f"unknown fallback {self.fallback!r}")


@dataclass
class CompletionStats:
    resamples: int = 0
    greedy: int = 0


def complete(state: NibbleState, cfg: CompletionConfig = CompletionConfig(),
             stats: Optional[CompletionStats] = None) -> Coloring:
    """Total list coloring extending the nibble's partial coloring.

    Raises :class:`CompletionError` when the fallback is ``"fail"`` and a
    vertex has an empty palette or the budget runs out, or when the greedy
    fallback finds no admissible color.
    """
    stats = stats if stats is not None else CompletionStats()
    rng = _rng.stream(state.seed, _rng.COMPLETE)
    assign: dict[int, int] = {}
    empty = sorted(state.deferred | {u for u in state.uncolored if not state.palettes.get(u)})
    if empty and cfg.fallback == "fail":
        raise CompletionError(f"vertices with empty palettes: {empty}", empty)
    todo = sorted(state.uncolored - set(empty))
    pal = {u: sorted(state.palettes[u]) for u in todo}

    def draw(u: int) -> int:
        return pal[u][int(rng.integers(len(pal[u])))]

    for u in todo:
        assign[u] = draw(u)

    inc: dict[int, list[tuple[Edge, int]]] = {}
    edges: list[tuple[Edge, int]] = sorted((e, c) for c, e in state.constraints.items())
    for e, c in edges:
        for u in e:
            inc.setdefault(u, []).append((e, c))

    def violated(e: Edge, c: int) -> bool:
        return all(assign.get(v) == c for v in e)

    bad = {(e, c) for e, c in edges if violated(e, c)}
    while bad and stats.resamples < cfg.max_resample_rounds:
        e, c = min(bad)
        for v in e:
            assign[v] = draw(v)
        stats.resamples += 1
        for v in e:
            for ec in inc.get(v, ()):
                if violated(*ec):
                    bad.add(ec)
                else:
                    bad.discard(ec)

    greedy = list(empty)
    if bad:
        if cfg.fallback == "fail":
            verts = sorted({v for e, _ in bad for v in e})
            raise CompletionError(f"resampling budget exhausted with {len(bad)} violated edges", verts)
        log.warning("resampling budget exhausted; %d violated constraint edges go greedy", len(bad))
        for e, _ in bad:
            for v in e:
                assign.pop(v, None)
                greedy.append(v)

    colors = {v: c for v, (c, _) in state.colored.items()}
    colors.update(assign)
    if greedy:
        _greedy(state, sorted(set(greedy)), colors, inc)
        stats.greedy = len(set(greedy))

    out = Coloring()
    for v in range(state.hypergraph.num_vertices):
        out.colors[v] = state.colors[colors[v]]
        out.provenance[v] = f"nibble:{state.colored[v][1]}" if v in state.colored else "completion"
    return out


def _greedy(state: NibbleState, verts: list[int], colors: dict[int, int], inc) -> None:
    """Smallest admissible color per vertex in id order; palette colors first,
    then the rest of the original list.  A color is admissible if it completes
    no monochromatic original edge and no violated constraint edge."""
    h = state.hypergraph
    for v in verts:
        first = sorted(state.palettes.get(v, ()))
        rest = [c for c in state.lists.get(v, ()) if c not in set(first)]
        for c in first + rest:
            clash = any(all(colors.get(x) == c for x in e if x != v) for e in h.incident(v))
            clash = clash or any(cc == c and all(colors.get(x) == c for x in e if x != v)
                                 for e, cc in inc.get(v, ()))
            if not clash:
                colors[v] = c
                break
        else:
            raise CompletionError(f"no admissible color for vertex {v}", [v])
