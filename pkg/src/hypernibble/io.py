"""JSON file formats.

Instance: ``{"num_vertices": n, "rank": k, "edges": [[v, ...], ...]}``
Lists:    ``{"lists": {"<vertex>": ["c1", ...]}}``
Coloring: ``{"colors": {"<vertex>": "<color>"}, "provenance": {"<vertex>": "nibble:<r>" | "completion"}}``
Policy:   ``{"base": b}`` for ``f(s, l) = b**(l-s)``, or
          ``{"thresholds": [[s, l, value], ...]}``
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .coloring import Coloring
from .hypercore import Hypergraph
from .reduction import ReductionPolicy

PathLike = Union[str, Path]


def dump_json(obj, path: PathLike) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_json(path: PathLike):
    with open(path) as fh:
        return json.load(fh)


def instance_to_json(h: Hypergraph) -> dict:
    return {"num_vertices": h.num_vertices, "rank": h.rank, "edges": [list(e) for e in h.edges]}


def instance_from_json(d: dict, allow_dup: bool = False) -> Hypergraph:
    try:
        n, edges = int(d["num_vertices"]), d["edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed instance: {exc}") from None
    return Hypergraph(n, edges, d.get("rank"), allow_dup=allow_dup)


def load_instance(path: PathLike, allow_dup: bool = False) -> Hypergraph:
    return instance_from_json(load_json(path), allow_dup)


def save_instance(h: Hypergraph, path: PathLike) -> None:
    dump_json(instance_to_json(h), path)


def load_lists(path: PathLike) -> dict[int, list]:
    d = load_json(path)
    try:
        return {int(v): list(cs) for v, cs in d["lists"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed lists file: {exc}") from None


def save_lists(lists: dict, path: PathLike) -> None:
    dump_json({"lists": {str(v): [str(c) for c in lists[v]] for v in sorted(lists)}}, path)


def load_coloring(path: PathLike) -> Coloring:
    return Coloring.from_json(load_json(path))


def save_coloring(c: Coloring, path: PathLike) -> None:
    dump_json(c.to_json(), path)


def policy_from_json(d: dict) -> ReductionPolicy:
    if "base" in d:
        return ReductionPolicy.geometric(float(d["base"]))
    if "thresholds" in d:
        return ReductionPolicy({(int(s), int(l)): float(v) for s, l, v in d["thresholds"]})
    raise ValueError("policy needs a 'base' or a 'thresholds' entry")


def load_policy(path: PathLike) -> ReductionPolicy:
    return policy_from_json(load_json(path))
