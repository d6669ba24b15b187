"""Connectivity and planarity analysis for small multigraphs.

Cut enumeration is exhaustive over edge subsets of size <= 3, which is
certifiable and fast at desk scale.  Planarity is decided on the underlying
simple graph (loops and parallel edges never affect planarity) with the
left-right-criterion implementation from networkx; loops and parallels are
reinserted into the rotation system afterwards next to their mates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .multigraph import Multigraph, delete_edges, delete_vertices


@dataclass(frozen=True)
class EdgeCut:
    """A minimal disconnecting edge set of size 1-3 with its side partition."""

    edges: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    trivial: bool  # some side has <= 1 vertex
    cyclic: bool  # both sides contain a cycle


# A dart is (edge_id, end) with end in {0, 1}: the dart leaves the vertex
# edges[edge_id][end].  A loop contributes both darts at the same vertex.
Dart = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of outgoing darts around each vertex."""

    rotations: tuple[tuple[Dart, ...], ...]

    def validate(self, g: Multigraph) -> None:
        if len(self.rotations) != g.n:
            raise ValueError("rotation system has wrong vertex count")
        seen = set()
        for v, rot in enumerate(self.rotations):
            for e, end in rot:
                if not (0 <= e < g.m) or end not in (0, 1):
                    raise ValueError(f"bad dart ({e},{end}) at vertex {v}")
                if g.edges[e][end] != v:
                    raise ValueError(f"dart ({e},{end}) does not leave vertex {v}")
                if (e, end) in seen:
                    raise ValueError(f"dart ({e},{end}) appears twice")
                seen.add((e, end))
        if len(seen) != 2 * g.m:
            raise ValueError("rotation system misses some edge-ends")


@dataclass(frozen=True)
class Face:
    """Closed walk of darts produced by face traversal of a rotation system."""

    walk: tuple[Dart, ...]
    vertices: tuple[int, ...]
    is_cycle: bool


# -- connectivity ----------------------------------------------------------


def edge_connectivity(g: Multigraph) -> int:
    """Exact edge connectivity; 0 for disconnected or single-vertex graphs."""
    if g.n <= 1 or not g.is_connected():
        return 0
    # unit-capacity max-flow from vertex 0 to every other vertex
    best = min(g.degrees())
    for t in range(1, g.n):
        best = min(best, _maxflow_edges(g, 0, t))
        if best == 0:
            break
    return best


def _maxflow_edges(g: Multigraph, s: int, t: int) -> int:
    # Edmonds-Karp on the doubled digraph; each undirected edge has one unit
    # of capacity shared between its two directions.
    cap: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(g.edges):
        if u != v:
            cap[(eid, 0)] = 1  # u -> v
            cap[(eid, 1)] = 1  # v -> u
    flow = 0
    while True:
        prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = [s]
        while queue and t not in prev:
            nxt = []
            for x in queue:
                for y, eid in g.adjacency[x]:
                    if y in prev:
                        continue
                    d = 0 if g.edges[eid][0] == x else 1
                    if cap.get((eid, d), 0) > 0:
                        prev[y] = (eid, d)
                        nxt.append(y)
            queue = nxt
        if t not in prev:
            return flow
        x = t
        while x != s:
            eid, d = prev[x]
            cap[(eid, d)] -= 1
            cap[(eid, 1 - d)] += 1
            x = g.edges[eid][d]
        flow += 1


def vertex_connectivity(g: Multigraph) -> int:
    """Exact vertex connectivity of the underlying simple graph."""
    s = g.underlying_simple()
    if s.n <= 1 or not s.is_connected():
        return 0
    for k in range(s.n - 1):
        for cut in itertools.combinations(range(s.n), k):
            h = delete_vertices(s, cut).graph
            if h.n > 0 and not h.is_connected():
                return k
    return s.n - 1


def _disconnects(g: Multigraph, removed: tuple[int, ...]) -> bool:
    h = delete_edges(g, removed).graph
    return h.component_count() > g.component_count()


def _side_has_cycle(g: Multigraph, side: tuple[int, ...]) -> bool:
    keep = set(side)
    sub_edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    idx = {v: i for i, v in enumerate(side)}
    sub = Multigraph(len(side), tuple((idx[u], idx[v]) for u, v in sub_edges))
    return not sub.is_forest()


def enumerate_cuts(g: Multigraph, k: int) -> list[EdgeCut]:
    """All minimal edge cuts of size exactly k (k in 1..3), sorted by edge ids."""
    if k not in (1, 2, 3):
        raise ValueError("cut size must be 1, 2 or 3")
    cuts = []
    for subset in itertools.combinations(range(g.m), k):
        if not _disconnects(g, subset):
            continue
        if any(
            _disconnects(g, sub)
            for r in range(1, k)
            for sub in itertools.combinations(subset, r)
        ):
            continue
        h = delete_edges(g, subset).graph
        # a minimal cut of a connected carrier splits one component in two
        labels = h._component_labels
        ends = {labels[g.edges[e][0]] for e in subset} | {
            labels[g.edges[e][1]] for e in subset
        }
        comps = [c for c in h.components() if labels[c[0]] in ends]
        if len(comps) != 2:
            continue
        side_a, side_b = sorted(comps)
        cuts.append(
            EdgeCut(
                edges=subset,
                side_a=side_a,
                side_b=side_b,
                trivial=min(len(side_a), len(side_b)) <= 1,
                cyclic=_side_has_cycle(g, side_a) and _side_has_cycle(g, side_b),
            )
        )
    cuts.sort(key=lambda c: c.edges)
    return cuts


def is_essentially_4ec(g: Multigraph) -> bool:
    """No removal of <= 3 edges leaves two components with >= 2 vertices each."""
    for k in (1, 2, 3):
        for cut in enumerate_cuts(g, k):
            if not cut.trivial:
                return False
    return True


def is_cyclically_4ec(g: Multigraph) -> bool:
    """No removal of <= 3 edges leaves two components that each contain a cycle.

    Vacuously true when no two vertex-disjoint cycles exist at all.
    """
    for k in (1, 2, 3):
        for cut in enumerate_cuts(g, k):
            if cut.cyclic:
                return False
    return True


# -- fast small-cut scans (batch-sweep path, cross-checked against the
# exhaustive enumerate_cuts route in tests) --------------------------------


def _component_stats_without(
    g: Multigraph, banned: tuple[int, ...]
) -> tuple[list[int], list[list[int]]]:
    """Component labels and per-component [vertices, edges] with `banned`
    edge ids removed."""
    banned_set = set(banned)
    label = [-1] * g.n
    stats: list[list[int]] = []
    for start in range(g.n):
        if label[start] != -1:
            continue
        comp = len(stats)
        stats.append([0, 0])
        label[start] = comp
        stack = [start]
        while stack:
            x = stack.pop()
            stats[comp][0] += 1
            for y, eid in g.adjacency[x]:
                if eid in banned_set:
                    continue
                if label[y] == -1:
                    label[y] = comp
                    stack.append(y)
    for eid, (u, v) in enumerate(g.edges):
        if eid not in banned_set:
            stats[label[u]][1] += 1
    return label, stats


def _removal_subsets(g: Multigraph, size: int):
    # loops never disconnect; skip them
    real = [e for e in range(g.m) if g.edges[e][0] != g.edges[e][1]]
    return itertools.combinations(real, size)


def small_cut_flags(g: Multigraph) -> tuple[bool, bool]:
    """(essentially_4ec, cyclically_4ec) in one sweep over <=3-edge removals."""
    essential = True
    cyclic = True
    for k in (1, 2, 3):
        for subset in _removal_subsets(g, k):
            _, stats = _component_stats_without(g, subset)
            if len(stats) <= g.component_count():
                continue
            big = sum(1 for nv, _ in stats if nv >= 2)
            cyc = sum(1 for nv, ne in stats if ne >= nv)
            if big >= 2:
                essential = False
            if cyc >= 2:
                cyclic = False
            if not essential and not cyclic:
                return False, False
    return essential, cyclic


def _build_cut(g: Multigraph, subset: tuple[int, ...]) -> EdgeCut | None:
    """EdgeCut for a minimal disconnecting subset, or None if it is not one."""
    if not _disconnects(g, subset):
        return None
    if any(
        _disconnects(g, sub)
        for r in range(1, len(subset))
        for sub in itertools.combinations(subset, r)
    ):
        return None
    label, _ = _component_stats_without(g, subset)
    ends = {label[g.edges[e][0]] for e in subset} | {label[g.edges[e][1]] for e in subset}
    comps: dict[int, list[int]] = {}
    for v in range(g.n):
        if label[v] in ends:
            comps.setdefault(label[v], []).append(v)
    if len(comps) != 2:
        return None
    side_a, side_b = sorted(tuple(c) for c in comps.values())
    return EdgeCut(
        edges=subset,
        side_a=side_a,
        side_b=side_b,
        trivial=min(len(side_a), len(side_b)) <= 1,
        cyclic=_side_has_cycle(g, side_a) and _side_has_cycle(g, side_b),
    )


def find_first_cut(
    g: Multigraph, size: int, nontrivial_only: bool = False
) -> EdgeCut | None:
    """First minimal edge cut of the given size in edge-id order, if any."""
    base = g.component_count()
    for subset in _removal_subsets(g, size):
        _, stats = _component_stats_without(g, subset)
        if len(stats) <= base:
            continue
        cut = _build_cut(g, subset)
        if cut is None:
            continue
        if nontrivial_only and cut.trivial:
            continue
        return cut
    return None


# -- planarity and embeddings ---------------------------------------------


def is_planar(g: Multigraph) -> bool:
    s = g.underlying_simple()
    nxg = nx.Graph()
    nxg.add_nodes_from(range(s.n))
    nxg.add_edges_from(s.edges)
    ok, _ = nx.check_planarity(nxg)
    return ok


def planar_embedding(g: Multigraph) -> RotationSystem:
    """A planar rotation system for g; raises ValueError if g is non-planar.

    Parallel edges are placed adjacently (nested), loops as adjacent dart
    pairs; both conventions are always planarity-preserving.
    """
    s = g.underlying_simple()
    nxg = nx.Graph()
    nxg.add_nodes_from(range(s.n))
    nxg.add_edges_from(s.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        raise ValueError("graph is not planar")

    by_pair: dict[tuple[int, int], list[int]] = {}
    for eid, (u, v) in enumerate(g.edges):
        if u != v:
            by_pair.setdefault((u, v), []).append(eid)
    rotations = []
    for v in range(g.n):
        rot: list[Dart] = []
        if nxg.degree(v) > 0:
            for u in emb.neighbors_cw_order(v):
                ids = by_pair[(min(u, v), max(u, v))]
                # nest parallel blocks: ascending on the lower endpoint,
                # descending on the higher one
                ordered = ids if v < u else list(reversed(ids))
                for eid in ordered:
                    end = 0 if g.edges[eid][0] == v else 1
                    rot.append((eid, end))
        for eid in g.loops[v]:
            rot.append((eid, 0))
            rot.append((eid, 1))
        rotations.append(tuple(rot))
    rs = RotationSystem(tuple(rotations))
    rs.validate(g)
    return rs


def faces(g: Multigraph, rot: RotationSystem) -> list[Face]:
    """Face walks of the embedding; orbits of the next-dart permutation."""
    rot.validate(g)
    succ: dict[Dart, Dart] = {}
    for v in range(g.n):
        r = rot.rotations[v]
        for i, d in enumerate(r):
            succ[d] = r[(i + 1) % len(r)]
    out = []
    seen: set[Dart] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        walk = []
        d = start
        while True:
            walk.append(d)
            seen.add(d)
            e, end = d
            rev = (e, 1 - end)
            d = succ[rev]
            if d == start:
                break
        verts = tuple(sorted({g.edges[e][end] for e, end in walk}))
        is_cycle = (
            len(walk) >= 1
            and len(verts) == len(walk)
            and len(set(e for e, _ in walk)) == len(walk)
        )
        out.append(Face(tuple(walk), verts, is_cycle))
    return out


# -- rotation system text format ------------------------------------------


def serialize_rotation(rot: RotationSystem) -> bytes:
    lines = []
    for v, r in enumerate(rot.rotations):
        ids = " ".join(str(e) for e, _ in r)
        lines.append(f"{v}: {ids}".rstrip())
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_rotation(data: bytes | str, g: Multigraph) -> RotationSystem:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != g.n:
        raise ValueError(f"expected {g.n} rotation lines, found {len(lines)}")
    rotations: list[tuple[Dart, ...]] = [()] * g.n
    for ln in lines:
        head, _, rest = ln.partition(":")
        v = int(head)
        ids = [int(t) for t in rest.split()]
        rot: list[Dart] = []
        used: dict[int, int] = {}
        for e in ids:
            end = used.get(e, 0)
            u0, u1 = g.edges[e]
            if u0 == u1 == v:
                rot.append((e, end))  # loop: first mention end 0, second end 1
                used[e] = end + 1
            elif u0 == v:
                rot.append((e, 0))
            elif u1 == v:
                rot.append((e, 1))
            else:
                raise ValueError(f"edge {e} not incident to vertex {v}")
        rotations[v] = tuple(rot)
    rs = RotationSystem(tuple(rotations))
    rs.validate(g)
    return rs
