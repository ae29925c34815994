"""Two independent enumerations of all topologies on a small labeled ground set.

``enumerate_by_closure`` grows open families one set at a time, closing
under union and intersection after each addition.  ``enumerate_by_preorders``
lists every preorder, built point by point, and takes its up-sets.  Finite
topologies correspond exactly to preorders, so both must produce the same
family of topologies.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .core import MAX_ENUMERATION_POINTS, GroundSet, Preorder, Topology
from .errors import InternalInconsistency, InvalidInput


def default_jobs() -> int:
    raw = os.environ.get("TOPOLAT_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise InvalidInput(f"TOPOLAT_JOBS must be a positive integer, got {raw!r}") from None
    if jobs < 1:
        raise InvalidInput(f"TOPOLAT_JOBS must be a positive integer, got {raw!r}")
    return jobs


def _check_size(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_ENUMERATION_POINTS:
        raise InvalidInput(f"enumeration needs 1 <= n <= {MAX_ENUMERATION_POINTS}, got {n!r}")


def _add_open(opens: frozenset[int], a: int) -> frozenset[int]:
    # unions of finite intersections of opens and a: U | (V & a)
    cuts = {v & a for v in opens}
    return frozenset(u | c for u in opens for c in cuts)


def enumerate_by_closure(n: int) -> list[tuple[int, ...]]:
    """Open families reachable from the indiscrete topology by adding sets."""
    _check_size(n)
    full = (1 << n) - 1
    start = frozenset({0, full})
    seen = {start}
    stack = [start]
    while stack:
        opens = stack.pop()
        for a in range(1, full):
            if a in opens:
                continue
            grown = _add_open(opens, a)
            if grown not in seen:
                seen.add(grown)
                stack.append(grown)
    return sorted(tuple(sorted(f)) for f in seen)


def _extend(rows: tuple[int, ...], p: int):
    """Every preorder on ``0..p`` restricting to ``rows`` on ``0..p-1``.

    ``rows[x]`` is the set of points above ``x``.  The new point ``p`` gets a
    down-set ``down`` (points below it) and an up-set ``up`` (points above it),
    subject to ``down × up`` lying inside the relation.
    """
    full = (1 << p) - 1
    down_closed = []
    up_closed = []
    for m in range(full + 1):
        members = [x for x in range(p) if m >> x & 1]
        if all(rows[x] & ~m == 0 for x in members):
            up_closed.append(m)
        # m is down-closed iff no point outside m lies below a point of m
        if all(not (rows[y] & m) for y in range(p) if not m >> y & 1):
            down_closed.append(m)
    for down in down_closed:
        for up in up_closed:
            if any(rows[y] & up != up for y in range(p) if down >> y & 1):
                continue
            new_rows = tuple(
                r | (1 << p) if down >> y & 1 else r for y, r in enumerate(rows)
            ) + (up | (1 << p),)
            yield new_rows


def _preorders_below(prefix: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    level = [prefix]
    for p in range(len(prefix), n):
        level = [r for rows in level for r in _extend(rows, p)]
    return level


def _up_set_families(prefix: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    out = []
    for rows in _preorders_below(prefix, n):
        pre = Preorder(n, rows)
        if not (pre.is_reflexive() and pre.is_transitive()):
            raise InternalInconsistency(f"preorder extension produced a non-preorder {rows}")
        out.append(tuple(pre.up_sets()))
    return out


def enumerate_by_preorders(n: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """Up-set topologies of every preorder on ``n`` points.

    Work is split by the preorder on the first ``n - 1`` points.
    """
    _check_size(n)
    prefixes = _preorders_below((), n - 1) if n > 1 else [()]
    if jobs > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_up_set_families, prefixes, [n] * len(prefixes)))
    else:
        parts = [_up_set_families(p, n) for p in prefixes]
    return sorted(f for part in parts for f in part)


def enumerate_topologies(n: int, jobs: int = 1) -> list[Topology]:
    """All topologies on ``n`` labeled points, in canonical order.

    Both enumerators run and must agree as sets of open families.
    """
    by_closure = enumerate_by_closure(n)
    by_preorders = enumerate_by_preorders(n, jobs)
    if len(set(by_preorders)) != len(by_preorders):
        raise InternalInconsistency(f"preorder enumeration produced duplicates at n={n}")
    if by_closure != by_preorders:
        only_a = sorted(set(by_closure) - set(by_preorders))[:1]
        only_b = sorted(set(by_preorders) - set(by_closure))[:1]
        raise InternalInconsistency(
            f"enumerators disagree at n={n}: {len(by_closure)} vs {len(by_preorders)} "
            f"families; e.g. {only_a or only_b}"
        )
    g = GroundSet(n)
    return [Topology(g, opens) for opens in by_closure]
