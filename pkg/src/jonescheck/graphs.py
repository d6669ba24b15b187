"""Named graph constructors used throughout the tests and demos."""

from __future__ import annotations

from .multigraph import Multigraph


def path(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Multigraph:
    """Cycle on n >= 1 vertices; n=1 is a loop, n=2 a parallel pair."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    if n == 1:
        return Multigraph(1, ((0, 0),))
    if n == 2:
        return Multigraph(2, ((0, 1), (0, 1)))
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Multigraph:
    return Multigraph(
        n, tuple((i, j) for i in range(n) for j in range(i + 1, n))
    )


def wheel(n: int) -> Multigraph:
    """Wheel W_n: a hub (vertex n) joined to every vertex of a cycle C_n."""
    if n < 3:
        raise ValueError("wheel rim needs at least three vertices")
    rim = tuple((i, (i + 1) % n) for i in range(n))
    spokes = tuple((i, n) for i in range(n))
    return Multigraph(n + 1, rim + spokes)


def theta() -> Multigraph:
    """Two vertices joined by three parallel edges."""
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def prism() -> Multigraph:
    """Triangular prism K3 x K2, the 3-cut workhorse."""
    return Multigraph(
        6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5))
    )


def cube() -> Multigraph:
    """Q3, vertices are 3-bit strings, edges flip one bit."""
    edges = []
    for v in range(8):
        for b in (1, 2, 4):
            if v < v ^ b:
                edges.append((v, v ^ b))
    return Multigraph(8, tuple(edges))


def generalized_petersen(n: int, k: int) -> Multigraph:
    """GP(n, k): outer n-cycle, inner n-star of step k, matching spokes."""
    outer = tuple((i, (i + 1) % n) for i in range(n))
    spokes = tuple((i, n + i) for i in range(n))
    inner = tuple((n + i, n + (i + k) % n) for i in range(n))
    return Multigraph(2 * n, outer + spokes + inner)


def petersen() -> Multigraph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Multigraph:
    """The dodecahedral graph GP(10, 2)."""
    return generalized_petersen(10, 2)
