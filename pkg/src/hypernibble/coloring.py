"""Colorings with provenance, and list assignments."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

Color = Hashable


def color_sort_key(c) -> tuple:
    return (type(c).__name__, c)


@dataclass
class Coloring:
    """Map vertex -> color, plus where each color came from
    (``"nibble:<round>"`` or ``"completion"``)."""

    colors: dict[int, Color] = field(default_factory=dict)
    provenance: dict[int, str] = field(default_factory=dict)

    def __getitem__(self, v: int) -> Color:
        return self.colors[v]

    def __contains__(self, v: int) -> bool:
        return v in self.colors

    def __len__(self) -> int:
        return len(self.colors)

    def is_total(self, num_vertices: int) -> bool:
        return all(v in self.colors for v in range(num_vertices))

    def to_json(self) -> dict:
        order = sorted(self.colors)
        return {"colors": {str(v): str(self.colors[v]) for v in order},
                "provenance": {str(v): self.provenance[v] for v in order if v in self.provenance}}

    @classmethod
    def from_json(cls, d: Mapping) -> "Coloring":
        colors = {int(v): c for v, c in d["colors"].items()}
        prov = {int(v): p for v, p in d.get("provenance", {}).items()}
        return cls(colors, prov)


def uniform_lists(num_vertices: int, colors: Iterable[Color]) -> dict[int, list[Color]]:
    palette = list(colors)
    return {v: list(palette) for v in range(num_vertices)}
