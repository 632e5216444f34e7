"""Vertex-level and edge-vertex-level degree functionals.

Every catalog index is a fold of a per-edge kernel over endpoint values
drawn from one of these sources:

  plain        d(u)
  revan        max_degree + min_degree - d(u)
  banhatti     d(e)/(n - d(u)) for the incident edge e, d(e) = d(u)+d(v)-2
               (edge-vertex valued: depends on the edge, unlike the others)
  temperature  d(u)/(n - d(u))
  domination   minimum cardinality of a minimal dominating set containing u
  kv           product of the degrees of u's neighbors
  nbd          sum of the degrees of u's neighbors

plus closeness centrality and the maximum-degree-deviation (CL) degree used
by the standalone indices.  All functions are pure; per-source tables are
cached against the immutable graph.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import (
    BanhattiUndefined,
    DisconnectedGraph,
    GraphTooLarge,
    TemperatureUndefined,
)
from .graph import Graph, bfs_distances

SOURCES = ("plain", "banhatti", "revan", "domination", "temperature", "kv", "nbd")

DOMINATION_MAX_ENV = "TOPOIDX_DOMINATION_MAX"
DOMINATION_MAX_DEFAULT = 24


def domination_bound() -> int:
    return int(os.environ.get(DOMINATION_MAX_ENV, DOMINATION_MAX_DEFAULT))


def plain_degrees(g: Graph) -> tuple[int, ...]:
    return g.degrees


def revan_degrees(g: Graph) -> tuple[int, ...]:
    if g.n == 0:
        return ()
    hi, lo = max(g.degrees), min(g.degrees)
    return tuple(hi + lo - d for d in g.degrees)


def temperatures(g: Graph) -> tuple[Fraction, ...]:
    out = []
    for u, d in enumerate(g.degrees):
        if d >= g.n:
            # Impossible on a simple graph (d <= n-1) but the formula divides.
            raise TemperatureUndefined(f"vertex {u} has degree {d} = n")
        out.append(Fraction(d, g.n - d))
    return tuple(out)


def kv_products(g: Graph) -> tuple[int, ...]:
    out = []
    for nbrs in g.adj:
        prod = 1
        for w in nbrs:
            prod *= g.degrees[w]
        out.append(prod)
    return tuple(out)


def neighbor_degree_sums(g: Graph) -> tuple[int, ...]:
    return tuple(sum(g.degrees[w] for w in nbrs) for nbrs in g.adj)


def banhatti_pair(g: Graph, u: int, v: int) -> tuple[Fraction, Fraction]:
    """Banhatti degrees of both endpoints of the edge uv."""
    d_e = g.degrees[u] + g.degrees[v] - 2
    for w in (u, v):
        if g.degrees[w] >= g.n:
            raise BanhattiUndefined(f"vertex {w} has degree {g.degrees[w]} = n")
    return Fraction(d_e, g.n - g.degrees[u]), Fraction(d_e, g.n - g.degrees[v])


def closeness(g: Graph) -> tuple[Fraction, ...]:
    """Normalized closeness (n-1)/sum-of-distances; requires connectivity."""
    if g.n == 1:
        return (Fraction(1),)
    out = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if any(d is None for d in dist):
            raise DisconnectedGraph("closeness centrality needs a connected graph")
        out.append(Fraction(g.n - 1, sum(dist)))
    return tuple(out)


def cl_degrees(g: Graph) -> tuple[int, ...]:
    """Maximum absolute degree deviation from a neighbor; 0 for isolated vertices."""
    return tuple(
        max((abs(g.degrees[u] - g.degrees[w]) for w in g.adj[u]), default=0)
        for u in range(g.n)
    )


# --- domination degree -------------------------------------------------------
#
# d_d(v) = minimum size of a *minimal* dominating set containing v, where a
# dominating set is minimal when no proper subset dominates.  Domination is
# monotone, so minimality reduces to: dropping any single member breaks
# domination.  Enumeration ascends by cardinality and stops once every vertex
# has been hit, which keeps desk-scale graphs cheap even near the bound.


def _closed_masks(g: Graph) -> list[int]:
    masks = []
    for u in range(g.n):
        mask = 1 << u
        for w in g.adj[u]:
            mask |= 1 << w
        masks.append(mask)
    return masks


def domination_degrees(g: Graph, bound: int | None = None) -> tuple[int, ...]:
    bound = domination_bound() if bound is None else bound
    if g.n > bound:
        raise GraphTooLarge(
            f"{g.n} vertices exceeds domination solver bound {bound} "
            f"(override with {DOMINATION_MAX_ENV})"
        )
    if g.n == 0:
        return ()
    masks = _closed_masks(g)
    full = (1 << g.n) - 1
    result: list = [None] * g.n
    remaining = g.n
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            union = 0
            for u in combo:
                union |= masks[u]
            if union != full:
                continue
            minimal = True
            for drop in combo:
                rest = 0
                for u in combo:
                    if u != drop:
                        rest |= masks[u]
                if rest == full:
                    minimal = False
                    break
            if not minimal:
                continue
            for u in combo:
                if result[u] is None:
                    result[u] = size
                    remaining -= 1
        if remaining == 0:
            break
    # Every vertex lies in some maximal independent set, which is a minimal
    # dominating set, so the loop always terminates with all entries set.
    return tuple(result)


def domination_degrees_bruteforce(g: Graph) -> tuple[int, ...]:
    """Independent oracle: set-based, checks every proper subset literally.

    Deliberately shares no code or data structures with domination_degrees;
    only suitable for small graphs (all subsets of all subsets).
    """
    vertices = list(range(g.n))
    neighborhoods = {u: set(g.adj[u]) | {u} for u in vertices}

    def dominates(subset) -> bool:
        covered = set()
        for u in subset:
            covered |= neighborhoods[u]
        return len(covered) == g.n

    def is_minimal(subset) -> bool:
        members = list(subset)
        for k in range(len(members)):
            for smaller in combinations(members, k):
                if dominates(smaller):
                    return False
        return True

    best = {}
    for size in range(1, g.n + 1):
        for subset in combinations(vertices, size):
            if not dominates(subset):
                continue
            if not is_minimal(subset):
                continue
            for u in subset:
                best.setdefault(u, size)
        if len(best) == g.n:
            break
    return tuple(best[u] for u in vertices)


# --- dispatch ---------------------------------------------------------------


@lru_cache(maxsize=512)
def vertex_table(g: Graph, source: str) -> tuple:
    """Per-vertex values for any vertex-valued source (not banhatti)."""
    if source == "plain":
        return plain_degrees(g)
    if source == "revan":
        return revan_degrees(g)
    if source == "temperature":
        return temperatures(g)
    if source == "domination":
        return domination_degrees(g)
    if source == "kv":
        return kv_products(g)
    if source == "nbd":
        return neighbor_degree_sums(g)
    if source == "closeness":
        return closeness(g)
    if source == "cl":
        return cl_degrees(g)
    raise ValueError(f"unknown vertex-valued source {source!r}")


def edge_endpoint_values(g: Graph, source: str):
    """Yield (u, v, value_at_u, value_at_v) for every edge, per source."""
    if source == "banhatti":
        for u, v in g.edges:
            b_u, b_v = banhatti_pair(g, u, v)
            yield u, v, b_u, b_v
    else:
        table = vertex_table(g, source)
        for u, v in g.edges:
            yield u, v, table[u], table[v]
