"""Exact feedback vertex set, cycle packing and face packing solvers.

Every solver returns a witness object and re-verifies it against the carrier
graph before returning.  Brute-force oracles (subset enumeration) are kept
fully independent of the branch-and-bound paths they are used to check.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .multigraph import Multigraph, delete_vertices
from .structure import Face, RotationSystem, faces as face_walks

DEFAULT_CYCLE_CAP = 10**6


class SolverLimit(Exception):
    """A configured resource cap (time, cycle count, size guard) was hit."""


class Cycle(NamedTuple):
    edges: tuple[int, ...]
    vertices: tuple[int, ...]


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SolverLimit("time limit exceeded")


def _deadline(time_limit_s: float | None) -> float | None:
    return None if time_limit_s is None else time.monotonic() + time_limit_s


# -- witness types ---------------------------------------------------------


@dataclass(frozen=True)
class FeedbackSet:
    vertices: tuple[int, ...]
    size: int
    optimal: bool = False

    def verify(self, g: Multigraph) -> None:
        if not delete_vertices(g, self.vertices).graph.is_forest():
            raise AssertionError("feedback set does not leave a forest")
        if self.size != len(self.vertices):
            raise AssertionError("feedback set size mismatch")


def _is_cycle_subgraph(g: Multigraph, edge_ids: tuple[int, ...]) -> bool:
    ids = list(edge_ids)
    if len(ids) != len(set(ids)):
        return False
    if len(ids) == 1:
        u, v = g.edges[ids[0]]
        return u == v  # a loop is a cycle of length 1
    deg: dict[int, int] = {}
    for e in ids:
        u, v = g.edges[e]
        if u == v:
            return False
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity of the edge set
    verts = list(deg)
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for e in ids:
        u, v = g.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(verts)


@dataclass(frozen=True)
class CyclePacking:
    cycles: tuple[tuple[int, ...], ...]  # edge-id lists
    size: int
    optimal: bool = False

    def verify(self, g: Multigraph) -> None:
        if self.size != len(self.cycles):
            raise AssertionError("cycle packing size mismatch")
        used: set[int] = set()
        for ids in self.cycles:
            if not _is_cycle_subgraph(g, ids):
                raise AssertionError(f"edge set {ids} is not a cycle")
            verts = {w for e in ids for w in g.edges[e]}
            if used & verts:
                raise AssertionError("cycles are not vertex-disjoint")
            used |= verts


@dataclass(frozen=True)
class FacePacking:
    faces: tuple[int, ...]  # indices into the face list of the embedding
    size: int
    all_faces: tuple[Face, ...] = field(default=(), repr=False)

    def verify(self, g: Multigraph) -> None:
        if self.size != len(self.faces):
            raise AssertionError("face packing size mismatch")
        used: set[int] = set()
        for i in self.faces:
            f = self.all_faces[i]
            if not f.is_cycle:
                raise AssertionError("packed face is not a cycle")
            if used & set(f.vertices):
                raise AssertionError("faces are not vertex-disjoint")
            used |= set(f.vertices)


# -- cycle enumeration -----------------------------------------------------


def enumerate_cycles(g: Multigraph, cap: int = DEFAULT_CYCLE_CAP) -> list[Cycle]:
    """All simple cycles, each exactly once, deterministic order.

    Loops are cycles of length 1 and parallel pairs cycles of length 2.
    A cycle is reported from its minimal vertex; the traversal direction is
    fixed by requiring first edge id < last edge id.
    """
    out: list[Cycle] = []
    for v in range(g.n):
        for eid in g.loops[v]:
            out.append(Cycle((eid,), (v,)))
            if len(out) > cap:
                raise SolverLimit("cycle cap exceeded")
    adj = g.adjacency
    for root in range(g.n):
        path_edges: list[int] = []
        path_verts: list[int] = [root]
        on_path = {root}
        used_edges: set[int] = set()

        def dfs(x: int) -> None:
            for y, eid in adj[x]:
                if eid in used_edges:
                    continue
                if y == root and path_edges:
                    if path_edges[0] < eid:
                        out.append(
                            Cycle(tuple(path_edges) + (eid,), tuple(sorted(on_path)))
                        )
                        if len(out) > cap:
                            raise SolverLimit("cycle cap exceeded")
                elif y > root and y not in on_path:
                    path_edges.append(eid)
                    path_verts.append(y)
                    on_path.add(y)
                    used_edges.add(eid)
                    dfs(y)
                    used_edges.remove(eid)
                    on_path.remove(y)
                    path_verts.pop()
                    path_edges.pop()

        dfs(root)
    return out


# -- feedback vertex set ---------------------------------------------------


class _Work:
    """Mutable multigraph on original vertex labels for the FVS search."""

    __slots__ = ("adj", "nloops")

    def __init__(self, g: Multigraph | None = None):
        self.adj: dict[int, dict[int, int]] = {}
        self.nloops: dict[int, int] = {}
        if g is not None:
            self.adj = {v: {} for v in range(g.n)}
            self.nloops = {v: 0 for v in range(g.n)}
            for u, v in g.edges:
                if u == v:
                    self.nloops[u] += 1
                else:
                    self.adj[u][v] = self.adj[u].get(v, 0) + 1
                    self.adj[v][u] = self.adj[v].get(u, 0) + 1

    def copy(self) -> "_Work":
        w = _Work()
        w.adj = {v: dict(d) for v, d in self.adj.items()}
        w.nloops = dict(self.nloops)
        return w

    def degree(self, v: int) -> int:
        return sum(self.adj[v].values()) + 2 * self.nloops[v]

    def remove(self, v: int) -> None:
        for u in self.adj[v]:
            del self.adj[u][v]
        del self.adj[v]
        del self.nloops[v]

    def has_edges(self) -> bool:
        return any(self.adj[v] or self.nloops[v] for v in self.adj)


def _reduce(work: _Work, kept: set[int], chosen: list[int]) -> bool:
    """Apply loop/degree-1/degree-2 reductions to a fixpoint.

    Returns False if some kept vertex is forced into the feedback set.
    """
    changed = True
    while changed:
        changed = False
        for v in list(work.adj):
            if v not in work.adj:
                continue
            if work.nloops[v] > 0:
                if v in kept:
                    return False
                chosen.append(v)
                work.remove(v)
                changed = True
                continue
            d = work.degree(v)
            if d <= 1:
                work.remove(v)
                changed = True
            elif d == 2 and len(work.adj[v]) == 2:
                # bypass: distinct neighbors only; a parallel pair is left
                # for branching so no loop is created
                u, w = work.adj[v]
                work.remove(v)
                work.adj[u][w] = work.adj[u].get(w, 0) + 1
                work.adj[w][u] = work.adj[w].get(u, 0) + 1
                changed = True
    return True


def _greedy_disjoint_cycles(work: _Work) -> int:
    """Number of vertex-disjoint cycles found greedily; a valid FVS lower bound."""
    adj = {v: dict(d) for v, d in work.adj.items()}
    loops = {v for v in work.adj if work.nloops[v] > 0}
    count = len(loops)
    for v in loops:
        for u in adj[v]:
            del adj[u][v]
        del adj[v]
    alive = {v for v in adj if adj[v]}
    while alive:
        # walk forward without reusing the incoming edge until a repeat
        start = min(alive)
        if not any(sum(adj[x].values()) >= 2 for x in alive):
            break
        x = start
        if sum(adj[x].values()) < 2:
            alive.discard(x)
            continue
        seen_at = {x: 0}
        path = [x]
        prev_edge: tuple[int, int] | None = None
        cyc = None
        while True:
            nxt = None
            for y, mult in adj[x].items():
                e = (min(x, y), max(x, y))
                if mult >= 2 or e != prev_edge:
                    nxt = y
                    break
            if nxt is None:
                break
            e = (min(x, nxt), max(x, nxt))
            if nxt in seen_at:
                cyc = path[seen_at[nxt] :]
                break
            seen_at[nxt] = len(path)
            path.append(nxt)
            prev_edge = e
            x = nxt
        if cyc is None:
            alive.discard(start)
            continue
        count += 1
        for v in cyc:
            for u in adj[v]:
                del adj[u][v]
            del adj[v]
            alive.discard(v)
        alive = {v for v in alive if v in adj and adj[v]}
    return count


def _greedy_fvs(g: Multigraph) -> list[int]:
    work = _Work(g)
    chosen: list[int] = []
    while True:
        _reduce(work, set(), chosen)
        if not work.has_edges():
            return chosen
        v = max(work.adj, key=lambda x: (work.degree(x), -x))
        chosen.append(v)
        work.remove(v)


def fvs_exact(g: Multigraph, time_limit_s: float | None = None) -> FeedbackSet:
    """Minimum feedback vertex set by branch and bound with reductions."""
    deadline = _deadline(time_limit_s)
    best = sorted(_greedy_fvs(g))
    best_size = len(best)

    def search(work: _Work, chosen: list[int], kept: frozenset[int]) -> None:
        nonlocal best, best_size
        _check_deadline(deadline)
        if not _reduce(work, kept, chosen):
            return
        if len(chosen) >= best_size:
            return
        if not work.has_edges():
            best = sorted(chosen)
            best_size = len(chosen)
            return
        if len(chosen) + _greedy_disjoint_cycles(work) >= best_size:
            return
        cands = [v for v in work.adj if v not in kept]
        if not cands:
            return  # a cycle of kept vertices remains: infeasible branch
        v = max(cands, key=lambda x: (work.degree(x), -x))
        in_branch = work.copy()
        in_branch.remove(v)
        search(in_branch, chosen + [v], kept)
        search(work, list(chosen), kept | {v})

    search(_Work(g), [], frozenset())
    fs = FeedbackSet(tuple(best), best_size, optimal=True)
    fs.verify(g)
    return fs


def fvs_bruteforce(g: Multigraph) -> FeedbackSet:
    """Exhaustive subset enumeration in increasing size; oracle, n <= 16."""
    if g.n > 16:
        raise SolverLimit("brute-force FVS guard: n > 16")
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if delete_vertices(g, subset).graph.is_forest():
                fs = FeedbackSet(subset, k, optimal=True)
                fs.verify(g)
                return fs
    raise AssertionError("unreachable: deleting all vertices leaves a forest")


# -- cycle packing ---------------------------------------------------------


def _mis_over_masks(
    masks: list[int],
    weights_len: list[int],
    n_free: int,
    deadline: float | None,
) -> list[int]:
    """Maximum independent set over items with vertex bitmasks.

    Items must be sorted by increasing popcount; weights_len[i] is the number
    of vertices of item i (used for the packing upper bound).
    """
    best: list[int] = []
    greedy_mask = 0
    for i, mk in enumerate(masks):
        if not (mk & greedy_mask):
            best.append(i)
            greedy_mask |= mk
    best_size = len(best)
    chosen: list[int] = []

    def search(cands: list[int], mask: int, free: int) -> None:
        nonlocal best, best_size
        _check_deadline(deadline)
        if chosen and len(chosen) > best_size:
            best = list(chosen)
            best_size = len(chosen)
        if not cands:
            return
        minlen = weights_len[cands[0]]
        if len(chosen) + min(len(cands), free // minlen) <= best_size:
            return
        for idx, i in enumerate(cands):
            if len(chosen) + (len(cands) - idx) <= best_size:
                break
            mk = masks[i]
            sub = [j for j in cands[idx + 1 :] if not (masks[j] & (mask | mk))]
            chosen.append(i)
            search(sub, mask | mk, free - weights_len[i])
            chosen.pop()

    search(list(range(len(masks))), 0, n_free)
    return best


def cp_exact(
    g: Multigraph,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    time_limit_s: float | None = None,
) -> CyclePacking:
    """Maximum cycle packing via independent set over the cycle conflict graph."""
    deadline = _deadline(time_limit_s)
    try:
        cycles = enumerate_cycles(g, cap=cycle_cap)
    except SolverLimit:
        return _cp_branch(g, deadline)
    order = sorted(range(len(cycles)), key=lambda i: (len(cycles[i].vertices), cycles[i].edges))
    masks = []
    lens = []
    for i in order:
        mk = 0
        for v in cycles[i].vertices:
            mk |= 1 << v
        masks.append(mk)
        lens.append(max(1, len(cycles[i].vertices)))
    picked = _mis_over_masks(masks, lens, g.n, deadline)
    chosen = tuple(sorted(cycles[order[i]].edges for i in picked))
    cp = CyclePacking(chosen, len(chosen), optimal=True)
    cp.verify(g)
    return cp


def _cycles_through(adj, loops, v, alive) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Simple cycles through v in the residual graph, as (edge ids, vertices)."""
    out = []
    if loops.get(v):
        out.append(((loops[v][0],), (v,)))
    path_edges: list[int] = []
    on_path = [v]
    used: set[int] = set()

    def dfs(x: int) -> None:
        for y, eid in adj[x]:
            if y not in alive or eid in used:
                continue
            if y == v and path_edges:
                if path_edges[0] < eid:
                    out.append((tuple(path_edges) + (eid,), tuple(sorted(on_path))))
            elif y != v and y not in on_path:
                path_edges.append(eid)
                on_path.append(y)
                used.add(eid)
                dfs(y)
                used.discard(eid)
                on_path.pop()
                path_edges.pop()

    dfs(v)
    return out


def _cp_branch(g: Multigraph, deadline: float | None) -> CyclePacking:
    """Fallback direct branching for graphs whose cycle count trips the cap.

    Branches on the lowest-index vertex on a cycle: either it is unused
    (delete it) or some cycle through it joins the packing.
    """
    adj = g.adjacency
    loops = {v: list(g.loops[v]) for v in range(g.n)}
    best: list[tuple[int, ...]] = []

    def cyclomatic(alive: set[int]) -> int:
        sub = delete_vertices(g, [v for v in range(g.n) if v not in alive]).graph
        return sub.m - sub.n + sub.component_count()

    def search(alive: set[int], packed: list[tuple[int, ...]]) -> None:
        nonlocal best
        _check_deadline(deadline)
        if len(packed) > len(best):
            best = list(packed)
        bound = cyclomatic(alive)
        if len(packed) + bound <= len(best):
            return
        v = None
        for x in sorted(alive):
            if loops.get(x) or any(
                y in alive for y, _ in adj[x]
            ):
                cyc = _cycles_through(adj, loops, x, alive)
                if cyc:
                    v = x
                    break
        if v is None:
            return
        for ids, verts in cyc:
            packed.append(ids)
            search(alive - set(verts), packed)
            packed.pop()
        search(alive - {v}, packed)

    search(set(range(g.n)), [])
    cp = CyclePacking(tuple(sorted(best)), len(best), optimal=True)
    cp.verify(g)
    return cp


def cp_bruteforce(g: Multigraph, max_cycles: int = 20) -> CyclePacking:
    """Exhaustive search over all subsets of cycles; oracle."""
    cycles = enumerate_cycles(g)
    if len(cycles) > max_cycles:
        raise SolverLimit(f"brute-force CP guard: {len(cycles)} cycles > {max_cycles}")
    best: tuple[int, ...] = ()
    vsets = [set(c.vertices) for c in cycles]
    # disjoint cycles are independent in the cycle space, so the cyclomatic
    # number caps the packing size; sizes above it need not be enumerated
    rmax = min(len(cycles), g.m - g.n + g.component_count())
    for r in range(rmax, 0, -1):
        for subset in itertools.combinations(range(len(cycles)), r):
            used: set[int] = set()
            ok = True
            for i in subset:
                if used & vsets[i]:
                    ok = False
                    break
                used |= vsets[i]
            if ok:
                best = subset
                break
        if best:
            break
    cp = CyclePacking(
        tuple(sorted(cycles[i].edges for i in best)), len(best), optimal=True
    )
    cp.verify(g)
    return cp


# -- face packing ----------------------------------------------------------


def fp_fixed_embedding(
    g: Multigraph, rot: RotationSystem, time_limit_s: float | None = None
) -> FacePacking:
    """Maximum set of pairwise vertex-disjoint cycle-faces of a fixed embedding."""
    deadline = _deadline(time_limit_s)
    all_faces = tuple(face_walks(g, rot))
    cands = [i for i, f in enumerate(all_faces) if f.is_cycle]
    order = sorted(cands, key=lambda i: (len(all_faces[i].vertices), all_faces[i].walk))
    masks = []
    lens = []
    for i in order:
        mk = 0
        for v in all_faces[i].vertices:
            mk |= 1 << v
        masks.append(mk)
        lens.append(max(1, len(all_faces[i].vertices)))
    picked = _mis_over_masks(masks, lens, g.n, deadline)
    chosen = tuple(sorted(order[i] for i in picked))
    fp = FacePacking(chosen, len(chosen), all_faces=all_faces)
    fp.verify(g)
    return fp


# -- witness serialization -------------------------------------------------


def witness_to_dict(w: FeedbackSet | CyclePacking | FacePacking) -> dict:
    if isinstance(w, FeedbackSet):
        return {"kind": "fvs", "size": w.size, "vertices": list(w.vertices), "cycles": []}
    if isinstance(w, CyclePacking):
        return {
            "kind": "cp",
            "size": w.size,
            "vertices": [],
            "cycles": [list(c) for c in w.cycles],
        }
    return {
        "kind": "fp",
        "size": w.size,
        "vertices": [],
        "cycles": [sorted(e for e, _ in w.all_faces[i].walk) for i in w.faces],
    }
