"""Immutable simple undirected graphs and the standard family generators.

Vertices are 0..n-1.  Edges are canonical sorted pairs, deduplicated, with
self-loops rejected, so adjacency is symmetric and the handshake identity
holds by construction.  Generators number vertices deterministically
(hub first, then rim, outer, pendant) so file output is stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DisconnectedGraph,
    GraphFileError,
    InvalidFamilyParams,
    SelfLoop,
    VertexOutOfRange,
)


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "edges", "adj", "degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidFamilyParams(f"vertex count must be nonnegative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            seen.add((min(u, v), max(u, v)))
        canonical = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canonical:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", canonical)
        object.__setattr__(self, "adj", tuple(tuple(sorted(nbrs)) for nbrs in adj))
        object.__setattr__(self, "degrees", tuple(len(nbrs) for nbrs in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def degree_pair_census(self) -> dict[tuple[int, int], int]:
        """Count edges by sorted endpoint-degree pair (the edge partition)."""
        census: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            key = tuple(sorted((self.degrees[u], self.degrees[v])))
            census[key] = census.get(key, 0) + 1
        return census


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Deduplicating constructor for user-supplied edge lists."""
    return Graph(n, edge_list)


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; unreachable vertices get None."""
    if not (0 <= source < g.n):
        raise VertexOutOfRange(f"source {source} outside 0..{g.n - 1}")
    dist: list = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"{g!r} is not connected")


# --- family generators -----------------------------------------------------


def _gen_cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _gen_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _gen_complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _gen_complete_bipartite(m: int, n: int) -> Graph:
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def _gen_star(n: int) -> Graph:
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def _gen_double_star(p: int, q: int) -> Graph:
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return Graph(2 + p + q, edges)


def _gen_wheel(n: int) -> Graph:
    # Hub 0 joined to the rim cycle 1..n.
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, edges)


def _gen_sunflower(n: int) -> Graph:
    # Hub 0; rim cycle u_i = 1+i; outer w_i = n+1+i tied to u_i and the hub;
    # pendants p_i = 2n+1+i on the hub alone.  Degree census: hub 3n, rim 4,
    # outer 2, pendant 1, with n edges of each of the five types.
    hub = 0
    rim = [1 + i for i in range(n)]
    outer = [n + 1 + i for i in range(n)]
    pendant = [2 * n + 1 + i for i in range(n)]
    edges = [(rim[i], rim[(i + 1) % n]) for i in range(n)]
    edges += [(hub, u) for u in rim]
    edges += [(rim[i], outer[i]) for i in range(n)]
    edges += [(hub, w) for w in outer]
    edges += [(hub, p) for p in pendant]
    return Graph(3 * n + 1, edges)


def _gen_french_windmill(n: int, m: int) -> Graph:
    # m copies of K_n sharing vertex 0.
    edges = []
    for copy in range(m):
        block = [0] + [1 + copy * (n - 1) + i for i in range(n - 1)]
        edges += [(block[i], block[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(m * (n - 1) + 1, edges)


def _gen_regular(n: int, r: int) -> Graph:
    # Circulant with jumps 1..r/2; an odd r additionally needs n even and
    # uses the diameter chord i <-> i+n/2.
    edges = []
    for jump in range(1, r // 2 + 1):
        edges += [(i, (i + jump) % n) for i in range(n)]
    if r % 2 == 1:
        edges += [(i, i + n // 2) for i in range(n // 2)]
    return Graph(n, edges)


def _positive(name, value, minimum):
    if value < minimum:
        raise InvalidFamilyParams(f"{name} requires parameter >= {minimum}, got {value}")


_FAMILIES = {
    "regular": ("n", "r"),
    "cycle": ("n",),
    "path": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("m", "n"),
    "star": ("n",),
    "double_star": ("p", "q"),
    "wheel": ("n",),
    "sunflower": ("n",),
    "french_windmill": ("n", "m"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family at a concrete parameter point."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in _FAMILIES:
            known = ", ".join(sorted(_FAMILIES))
            raise InvalidFamilyParams(f"unknown family {self.family!r} (known: {known})")
        expected = _FAMILIES[self.family]
        if len(self.params) != len(expected):
            raise InvalidFamilyParams(
                f"{self.family} takes parameters {expected}, got {self.params}"
            )

    @property
    def param_names(self) -> tuple[str, ...]:
        return _FAMILIES[self.family]

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in zip(self.param_names, self.params))
        return f"{self.family}({inner})"

    def build(self) -> Graph:
        return generate(self)


def generate(spec: FamilySpec) -> Graph:
    """Build the family member, enforcing each family's parameter range."""
    family, params = spec.family, spec.params
    if family == "cycle":
        (n,) = params
        _positive("cycle", n, 3)
        return _gen_cycle(n)
    if family == "path":
        (n,) = params
        _positive("path", n, 2)
        return _gen_path(n)
    if family == "complete":
        (n,) = params
        _positive("complete", n, 1)
        return _gen_complete(n)
    if family == "complete_bipartite":
        m, n = params
        _positive("complete_bipartite m", m, 1)
        _positive("complete_bipartite n", n, 1)
        return _gen_complete_bipartite(m, n)
    if family == "star":
        (n,) = params
        _positive("star", n, 1)
        return _gen_star(n)
    if family == "double_star":
        p, q = params
        _positive("double_star p", p, 1)
        _positive("double_star q", q, 1)
        return _gen_double_star(p, q)
    if family == "wheel":
        (n,) = params
        _positive("wheel", n, 3)
        return _gen_wheel(n)
    if family == "sunflower":
        (n,) = params
        _positive("sunflower", n, 3)
        return _gen_sunflower(n)
    if family == "french_windmill":
        n, m = params
        _positive("french_windmill n", n, 3)
        _positive("french_windmill m", m, 3)
        return _gen_french_windmill(n, m)
    if family == "regular":
        n, r = params
        _positive("regular r", r, 1)
        if r >= n:
            raise InvalidFamilyParams(f"regular requires r < n, got r={r}, n={n}")
        if (n * r) % 2 != 0:
            raise InvalidFamilyParams(f"regular requires n*r even, got n={n}, r={r}")
        return _gen_regular(n, r)
    raise InvalidFamilyParams(f"unknown family {family!r}")


def generate_family(family: str, *params: int) -> Graph:
    return generate(FamilySpec(family, tuple(params)))


def family_names() -> tuple[str, ...]:
    return tuple(_FAMILIES)


# --- edge-list file format ---------------------------------------------------
#
# Optional comment lines start with '#'; the first non-comment line is
# ``n <vertex_count>``; every following line is ``u v`` (0-indexed).


def dumps(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {line}" for line in comment.splitlines()]
    lines.append(f"n {g.n}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFileError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFileError(f"line {lineno}: vertex count {fields[1]!r} is not an integer")
            continue
        if len(fields) != 2:
            raise GraphFileError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFileError(f"line {lineno}: endpoints {raw!r} are not integers")
        if u == v:
            raise GraphFileError(f"line {lineno}: self-loop at vertex {u}")
        if n is not None and not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise GraphFileError("missing 'n <count>' header line")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return loads(handle.read())


def write_graph(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(g, comment))
