"""JSON interchange for topologies, filters and beta specifications.

A topology is ``{"n": 3, "opens": [[], [0], [1, 2], [0, 1, 2]]}``.  The
reader normalizes point lists and open families and rejects anything that
is not a topology with a diagnostic naming the failed axiom.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import GroundSet, SetMask, Topology, mask_of, points_of
from .errors import InvalidInput


def _points_to_mask(ground: GroundSet, points: Any, what: str) -> SetMask:
    if not isinstance(points, list):
        raise InvalidInput(f"{what} must be an array of point indices, got {points!r}")
    for p in points:
        if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p < ground.n:
            raise InvalidInput(f"{what} contains {p!r}, not a point of a {ground.n}-point ground set")
    return mask_of(points)


def topology_from_obj(obj: Any) -> Topology:
    if not isinstance(obj, dict) or "n" not in obj or "opens" not in obj:
        raise InvalidInput('topology must be an object with fields "n" and "opens"')
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInput(f'"n" must be an integer, got {n!r}')
    ground = GroundSet(n)
    if not isinstance(obj["opens"], list):
        raise InvalidInput('"opens" must be an array of arrays of point indices')
    masks = [_points_to_mask(ground, o, "open set") for o in obj["opens"]]
    return Topology.from_opens(ground, masks)


def topology_to_obj(t: Topology) -> dict:
    return {"n": t.n, "opens": [points_of(o) for o in t.opens]}


def filter_from_obj(ground: GroundSet, obj: Any):
    from .filters import FiniteFilter

    return FiniteFilter(ground, _points_to_mask(ground, obj, "filter"))


def filter_to_obj(f) -> list[int]:
    return points_of(f.min_member)


def beta_spec_from_obj(obj: Any):
    from .beta import BetaSpec

    if not isinstance(obj, dict) or not {"topology", "pivot", "filter"} <= obj.keys():
        raise InvalidInput('beta spec must be an object with fields "topology", "pivot", "filter"')
    t = topology_from_obj(obj["topology"])
    pivot = obj["pivot"]
    if isinstance(pivot, bool) or not isinstance(pivot, int):
        raise InvalidInput(f'"pivot" must be an integer, got {pivot!r}')
    return BetaSpec(t, pivot, filter_from_obj(t.ground, obj["filter"]))


def beta_spec_to_obj(spec) -> dict:
    return {
        "topology": topology_to_obj(spec.base),
        "pivot": spec.pivot,
        "filter": filter_to_obj(spec.filter),
    }


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: malformed JSON ({exc})") from exc


def load_topology(path: str | Path) -> Topology:
    return topology_from_obj(read_json(path))


def dumps_topology(t: Topology) -> str:
    return json.dumps(topology_to_obj(t))
