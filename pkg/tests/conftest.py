"""Shared graph fixtures and helpers."""

import random

import pytest

from topoidx.graph import Graph, generate_family, is_connected


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Rejection-sample a connected G(n, p); deterministic for a seeded rng."""
    if n == 1:
        return Graph(1, [])
    while True:
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph(n, edges)
        if is_connected(g):
            return g


def family_grid(max_n: int) -> list[tuple[str, Graph]]:
    """One labelled graph per family parameter point up to size max_n."""
    out = []
    for n in range(3, max_n + 1):
        out.append((f"cycle({n})", generate_family("cycle", n)))
        out.append((f"wheel({n})", generate_family("wheel", n)))
        out.append((f"sunflower({n})", generate_family("sunflower", n)))
    for n in range(2, max_n + 1):
        out.append((f"path({n})", generate_family("path", n)))
        out.append((f"complete({n})", generate_family("complete", n)))
    for n in range(1, max_n):
        out.append((f"star({n})", generate_family("star", n)))
    for p in range(1, 4):
        for q in range(p, 4):
            out.append((f"double_star({p},{q})", generate_family("double_star", p, q)))
    for m in range(1, 5):
        for n in range(m, 5):
            out.append((f"complete_bipartite({m},{n})",
                        generate_family("complete_bipartite", m, n)))
    for n in range(3, max_n + 1):
        for r in (2, 3, 4):
            if r < n and (n * r) % 2 == 0:
                out.append((f"regular({n},{r})", generate_family("regular", n, r)))
    out.append(("french_windmill(3,3)", generate_family("french_windmill", 3, 3)))
    out.append(("french_windmill(4,3)", generate_family("french_windmill", 4, 3)))
    return out


@pytest.fixture(scope="session")
def small_families() -> list[tuple[str, Graph]]:
    return family_grid(8)
