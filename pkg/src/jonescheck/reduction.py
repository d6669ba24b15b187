"""Cut-based decompositions with witness lifting and machine-checked certificates.

Each decomposition derives smaller graphs from a parent along a low-degree
vertex, a bridge, a 2-edge-cut or a nontrivial 3-edge-cut, keeping explicit
vertex/edge maps back to the parent so feedback sets and cycle packings can
be lifted and re-verified.  Certificates evaluate only inequalities that are
valid for arbitrary graphs; conditional equalities that hold just for a
hypothetical minimal counterexample are recorded as observations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import Multigraph, add_edge, delete_vertices
from .structure import EdgeCut
from .solvers import CyclePacking, FeedbackSet, cp_exact, fvs_exact


@dataclass(frozen=True)
class Part:
    """A derived graph with maps back to the parent.

    vertex_map[i] is the parent vertex of part vertex i (-1 for a contraction
    vertex); edge_map[j] is the parent edge of part edge j (-1 for a virtual
    edge); virtual_edges maps a virtual edge id to the parent cut-edge pair
    it stands in for.
    """

    graph: Multigraph
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]
    virtual_edges: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def map_edges(self, edge_ids) -> tuple[int, ...]:
        out = []
        for e in edge_ids:
            p = self.edge_map[e]
            if p < 0:
                raise ValueError(f"edge {e} is virtual and has no parent edge")
            out.append(p)
        return tuple(out)

    def map_vertices(self, verts) -> tuple[int, ...]:
        out = []
        for v in verts:
            p = self.vertex_map[v]
            if p < 0:
                raise ValueError(f"vertex {v} is a contraction vertex")
            out.append(p)
        return tuple(sorted(out))


@dataclass(frozen=True)
class Decomposition:
    kind: str  # low_degree | bridge | cut2 | cut3
    parent: Multigraph
    cut: tuple[int, ...]  # parent edge ids, () for low_degree
    parts: dict[str, Part]
    boundary: dict[str, tuple[int, int, int]] = field(default_factory=dict)
    # boundary: cut label -> (parent edge id, endpoint on side 1, endpoint on side 2)


@dataclass(frozen=True)
class CertEntry:
    name: str
    left: int
    right: int
    relation: str  # "<=", ">=", "==", "=>"
    holds: bool


@dataclass(frozen=True)
class Certificate:
    entries: tuple[CertEntry, ...]
    observations: dict[str, bool] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)

    def to_dict(self) -> dict:
        out = {
            "holds": self.holds,
            "entries": [
                {
                    "name": e.name,
                    "left": e.left,
                    "right": e.right,
                    "relation": e.relation,
                    "holds": e.holds,
                }
                for e in self.entries
            ],
        }
        out.update(self.observations)
        return out


def _entry(name: str, left: int, rel: str, right: int) -> CertEntry:
    ok = {"<=": left <= right, ">=": left >= right, "==": left == right}[rel]
    return CertEntry(name, left, right, rel, ok)


def _induced_part(g: Multigraph, verts: tuple[int, ...]) -> Part:
    gone = [v for v in range(g.n) if v not in set(verts)]
    res = delete_vertices(g, gone)
    return Part(res.graph, res.vertex_map, res.edge_map)


def _with_virtual_edge(part: Part, u: int, v: int, tag: tuple[int, ...]) -> Part:
    h = add_edge(part.graph, u, v)
    new_id = h.m - 1
    return Part(
        h,
        part.vertex_map,
        part.edge_map + (-1,),
        dict(part.virtual_edges) | {new_id: tag},
    )


# -- low-degree reductions -------------------------------------------------


@dataclass(frozen=True)
class SuppressedVertex:
    """Result of suppressing a degree-2 vertex v: G' = G - v + uw."""

    parent: Multigraph
    graph: Multigraph
    suppressed: int
    u: int
    w: int
    vertex_map: tuple[int, ...]  # child vertex -> parent vertex
    edge_map: tuple[int, ...]  # child edge -> parent edge, -1 for the new uw edge
    virtual_edge: int  # child edge id of uw
    removed_edges: tuple[int, int]  # the parent edges vu, vw

    def cycle_to_parent(self, child_edges: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a child cycle under the cycle bijection."""
        out = []
        for e in child_edges:
            if e == self.virtual_edge:
                out.extend(self.removed_edges)
            else:
                out.append(self.edge_map[e])
        return tuple(sorted(out))

    def fvs_to_parent(self, s: FeedbackSet) -> FeedbackSet:
        """A feedback set of the child is one of the parent, same size."""
        verts = tuple(sorted(self.vertex_map[v] for v in s.vertices))
        out = FeedbackSet(verts, s.size, optimal=False)
        out.verify(self.parent)
        return out

    def fvs_to_child(self, s: FeedbackSet) -> FeedbackSet:
        """Parent feedback set mapped down: v is traded for u if present."""
        inv = {p: c for c, p in enumerate(self.vertex_map)}
        verts = set(s.vertices)
        if self.suppressed in verts:
            verts.discard(self.suppressed)
            verts.add(self.u)
        out = FeedbackSet(tuple(sorted(inv[v] for v in verts)), len(set(verts)))
        out.verify(self.graph)
        return out


def suppress_degree2(g: Multigraph, v: int) -> SuppressedVertex:
    inc = [(eid, u if w == v else w) for eid, (u, w) in enumerate(g.edges) if v in (u, w)]
    if g.degree(v) != 2 or len(inc) != 2:
        raise ValueError(f"vertex {v} does not have two non-loop incident edges")
    (e1, u), (e2, w) = inc
    res = delete_vertices(g, (v,))
    inv = {p: c for c, p in enumerate(res.vertex_map)}
    child = add_edge(res.graph, inv[u], inv[w])  # u = w gives a loop
    return SuppressedVertex(
        parent=g,
        graph=child,
        suppressed=v,
        u=u,
        w=w,
        vertex_map=res.vertex_map,
        edge_map=res.edge_map + (-1,),
        virtual_edge=child.m - 1,
        removed_edges=(e1, e2),
    )


def delete_degree_le1(g: Multigraph):
    """Iteratively strip degree <= 1 vertices; fvs and cp are unchanged."""
    cur = g
    vmap = tuple(range(g.n))
    emap = tuple(range(g.m))
    while True:
        low = [v for v in range(cur.n) if cur.degree(v) <= 1]
        if not low:
            return cur, vmap, emap
        res = delete_vertices(cur, low)
        vmap = tuple(vmap[v] for v in res.vertex_map)
        emap = tuple(emap[e] for e in res.edge_map)
        cur = res.graph


# -- bridges ---------------------------------------------------------------


def split_bridge(g: Multigraph, e: int) -> Decomposition:
    from .multigraph import delete_edges

    h = delete_edges(g, (e,)).graph
    if h.component_count() <= g.component_count():
        raise ValueError(f"edge {e} is not a bridge")
    u, v = g.edges[e]
    labels = h._component_labels
    side1 = tuple(x for x in range(g.n) if labels[x] == labels[u])
    side2 = tuple(x for x in range(g.n) if labels[x] == labels[v])
    if side2 < side1:
        side1, side2 = side2, side1
    parts = {"G1": _induced_part(g, side1), "G2": _induced_part(g, side2)}
    return Decomposition("bridge", g, (e,), parts)


def check_bridge_certificate(d: Decomposition) -> Certificate:
    fvs_g = fvs_exact(d.parent).size
    cp_g = cp_exact(d.parent).size
    f1 = fvs_exact(d.parts["G1"].graph).size
    f2 = fvs_exact(d.parts["G2"].graph).size
    c1 = cp_exact(d.parts["G1"].graph).size
    c2 = cp_exact(d.parts["G2"].graph).size
    return Certificate(
        (
            _entry("fvs_union", fvs_g, "<=", f1 + f2),
            _entry("cp_union", cp_g, ">=", c1 + c2),
        )
    )


# -- 2-edge-cuts -----------------------------------------------------------


def split_2cut(g: Multigraph, cut: EdgeCut) -> Decomposition:
    if len(cut.edges) != 2:
        raise ValueError("cut must have exactly 2 edges")
    e1, e2 = cut.edges
    side1, side2 = cut.side_a, cut.side_b
    in1 = set(side1)

    def ends(e: int) -> tuple[int, int]:
        a, b = g.edges[e]
        return (a, b) if a in in1 else (b, a)

    u1, u2 = ends(e1)
    v1, v2 = ends(e2)
    p1 = _induced_part(g, side1)
    p2 = _induced_part(g, side2)
    idx1 = {p: c for c, p in enumerate(p1.vertex_map)}
    idx2 = {p: c for c, p in enumerate(p2.vertex_map)}
    parts = {
        "G1": p1,
        "G2": p2,
        "G1p": _with_virtual_edge(p1, idx1[u1], idx1[v1], (e1, e2)),
        "G2p": _with_virtual_edge(p2, idx2[u2], idx2[v2], (e1, e2)),
    }
    boundary = {"A": (e1, u1, u2), "B": (e2, v1, v2)}
    return Decomposition("cut2", g, (e1, e2), parts, boundary)


def check_cut2_certificate(d: Decomposition) -> Certificate:
    fvs_g = fvs_exact(d.parent).size
    cp_g = cp_exact(d.parent).size
    f = {k: fvs_exact(p.graph).size for k, p in d.parts.items()}
    c = {k: cp_exact(p.graph).size for k, p in d.parts.items()}
    entries = [
        _entry("cp_sandwich_1_lo", c["G1"], "<=", c["G1p"]),
        _entry("cp_sandwich_1_hi", c["G1p"], "<=", c["G1"] + 1),
        _entry("cp_sandwich_2_lo", c["G2"], "<=", c["G2p"]),
        _entry("cp_sandwich_2_hi", c["G2p"], "<=", c["G2"] + 1),
        _entry("fvs_virtual_1", fvs_g, "<=", f["G1p"] + f["G2"]),
        _entry("fvs_virtual_2", fvs_g, "<=", f["G2p"] + f["G1"]),
        _entry("fvs_plus_one", fvs_g, "<=", f["G1"] + f["G2"] + 1),
        _entry("cp_union", cp_g, ">=", c["G1"] + c["G2"]),
    ]
    return Certificate(tuple(entries))


def combine_packings_2cut(
    d: Decomposition, p1: CyclePacking, p2: CyclePacking
) -> CyclePacking:
    """Combine packings of G1' and G2' into one of the parent.

    The two virtual-edge cycles, when both present, merge into a single
    parent cycle through both cut edges (size p1 + p2 - 1); otherwise only
    the cycles avoiding the virtual edges transfer.
    """
    if d.kind != "cut2":
        raise ValueError("decomposition is not a 2-cut")
    g1p, g2p = d.parts["G1p"], d.parts["G2p"]
    p1.verify(g1p.graph)
    p2.verify(g2p.graph)
    (v1,) = g1p.virtual_edges
    (v2,) = g2p.virtual_edges
    c1v = [c for c in p1.cycles if v1 in c]
    c2v = [c for c in p2.cycles if v2 in c]
    cycles: list[tuple[int, ...]] = []
    for c in p1.cycles:
        if v1 not in c:
            cycles.append(g1p.map_edges(c))
    for c in p2.cycles:
        if v2 not in c:
            cycles.append(g2p.map_edges(c))
    if c1v and c2v:
        merged = (
            g1p.map_edges(tuple(e for e in c1v[0] if e != v1))
            + g2p.map_edges(tuple(e for e in c2v[0] if e != v2))
            + d.cut
        )
        cycles.append(tuple(sorted(merged)))
    out = CyclePacking(tuple(sorted(cycles)), len(cycles))
    out.verify(d.parent)
    return out


# -- nontrivial 3-edge-cuts ------------------------------------------------

_PAIRS = {"AB": ("A", "B"), "AC": ("A", "C"), "BC": ("B", "C")}


def decompose_3cut(g: Multigraph, cut: EdgeCut) -> Decomposition:
    if len(cut.edges) != 3 or cut.trivial:
        raise ValueError("cut must be a nontrivial 3-edge-cut")
    e_a, e_b, e_c = cut.edges
    side1, side2 = cut.side_a, cut.side_b
    in1 = set(side1)

    def ends(e: int) -> tuple[int, int]:
        a, b = g.edges[e]
        return (a, b) if a in in1 else (b, a)

    boundary = {lab: (e,) + ends(e) for lab, e in zip("ABC", (e_a, e_b, e_c))}
    p1 = _induced_part(g, side1)
    p2 = _induced_part(g, side2)
    parts = {"G1": p1, "G2": p2}
    for i, (part, side) in enumerate(((p1, 1), (p2, 2)), start=1):
        idx = {p: c for c, p in enumerate(part.vertex_map)}
        for pair, (la, lb) in _PAIRS.items():
            ea, ua1, ua2 = boundary[la]
            eb, ub1, ub2 = boundary[lb]
            ua = ua1 if i == 1 else ua2
            ub = ub1 if i == 1 else ub2
            parts[f"G{i}_{pair}"] = _with_virtual_edge(part, idx[ua], idx[ub], (ea, eb))
    # G_i^{ABC}: contract the other side into one vertex x
    from .multigraph import contract_side_to_vertex

    for i, side in ((1, side1), (2, side2)):
        res = contract_side_to_vertex(g, side)
        parts[f"G{i}_ABC"] = Part(res.graph, res.vertex_map, res.edge_map)
    return Decomposition("cut3", g, (e_a, e_b, e_c), parts, boundary)


def tree_median(t: Multigraph, u: int, v: int, w: int) -> int:
    """The unique common vertex of the three pairwise paths in a forest."""
    if not t.is_forest():
        raise ValueError("carrier graph is not a forest")
    paths = [_forest_path(t, a, b) for a, b in ((u, v), (v, w), (w, u))]
    common = set(paths[0]) & set(paths[1]) & set(paths[2])
    if len(common) != 1:
        raise AssertionError(f"expected a single median vertex, got {sorted(common)}")
    return common.pop()


def _forest_path(t: Multigraph, a: int, b: int) -> tuple[int, ...]:
    if a == b:
        return (a,)
    prev = {a: -1}
    queue = [a]
    while queue:
        nxt = []
        for x in queue:
            for y, _ in t.adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        queue = nxt
    if b not in prev:
        raise ValueError(f"vertices {a} and {b} are in different components")
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def lift_fvs_3cut(
    d: Decomposition, s_abc: FeedbackSet, s_other: FeedbackSet, i: int = 1
) -> FeedbackSet:
    """Parent feedback set of size <= s_abc.size + s_other.size.

    s_abc is a feedback set of G_i^{ABC}, s_other one of G_{3-i}.  When the
    contraction vertex x is in s_abc, the forest left on the other side may
    still connect the boundary vertices; one extra vertex (a tree median for
    three boundary survivors, a path vertex for two) breaks every such
    connection.
    """
    if d.kind != "cut3":
        raise ValueError("decomposition is not a 3-cut")
    part_abc = d.parts[f"G{i}_ABC"]
    part_other = d.parts[f"G{3 - i}"]
    s_abc.verify(part_abc.graph)
    s_other.verify(part_other.graph)
    x = part_abc.vertex_map.index(-1)

    chosen: set[int] = set(part_other.map_vertices(s_other.vertices))
    if x not in s_abc.vertices:
        chosen |= set(part_abc.map_vertices(s_abc.vertices))
    else:
        chosen |= set(
            part_abc.map_vertices(v for v in s_abc.vertices if v != x)
        )
        # boundary survivors on the other side, in part-local indices
        inv = {p: c for c, p in enumerate(part_other.vertex_map)}
        forest = delete_vertices(part_other.graph, s_other.vertices)
        back = forest.vertex_map  # forest vertex -> part vertex
        fidx = {part: fv for fv, part in enumerate(back)}
        survivors = []
        for lab in "ABC":
            _, b1, b2 = d.boundary[lab]
            b = b1 if (3 - i) == 1 else b2
            local = inv[b]
            if local in fidx:
                survivors.append(fidx[local])
        t = forest.graph
        labels = t._component_labels
        by_comp: dict[int, list[int]] = {}
        for s in survivors:
            by_comp.setdefault(labels[s], []).append(s)
        for group in by_comp.values():
            if len(group) == 3:
                breaker = tree_median(t, *group)
            elif len(group) == 2:
                breaker = min(_forest_path(t, group[0], group[1]))
            else:
                continue
            chosen.add(part_other.vertex_map[back[breaker]])
    out = FeedbackSet(tuple(sorted(chosen)), len(chosen))
    out.verify(d.parent)
    if out.size > s_abc.size + s_other.size:
        raise AssertionError("lifted feedback set exceeds the size bound")
    return out


def check_cut3_certificate(d: Decomposition) -> Certificate:
    """Evaluate the universally valid inequalities around a nontrivial 3-cut.

    The conditional equalities that hold only for a minimal counterexample
    are recorded as observations (eq1..eq4), never asserted.
    """
    if d.kind != "cut3":
        raise ValueError("decomposition is not a 3-cut")
    f = {k: fvs_exact(p.graph).size for k, p in d.parts.items()}
    c = {k: cp_exact(p.graph).size for k, p in d.parts.items()}
    fvs_g = fvs_exact(d.parent).size
    cp_g = cp_exact(d.parent).size

    complement = {"A": "BC", "B": "AC", "C": "AB"}
    entries = [_entry("a_cp_union", cp_g, ">=", c["G1"] + c["G2"])]
    for i in (1, 2):
        entries.append(
            _entry(f"b_fvs_abc_{i}", fvs_g, "<=", f[f"G{i}_ABC"] + f[f"G{3 - i}"])
        )
    entries.append(_entry("c_fvs_plus_one", fvs_g, "<=", f["G1"] + f["G2"] + 1))
    for i in (1, 2):
        for x in "ABC":
            rhs = f[f"G{i}_{complement[x]}"] + max(
                f[f"G{3 - i}_{complement[y]}"] for y in "ABC" if y != x
            )
            entries.append(_entry(f"d_item_i_{i}{x}", fvs_g, "<=", rhs))
    for pair in _PAIRS:
        premise = (
            c[f"G1_{pair}"] == c["G1"] + 1 and c[f"G2_{pair}"] == c["G2"] + 1
        )
        conclusion = cp_g >= c["G1"] + c["G2"] + 1
        entries.append(
            CertEntry(
                f"e_item_iii_{pair}",
                int(premise),
                int(conclusion),
                "=>",
                (not premise) or conclusion,
            )
        )
    for i in (1, 2):
        for pair in _PAIRS:
            entries.append(
                _entry(f"f_cp_sandwich_{i}{pair}_lo", c[f"G{i}"], "<=", c[f"G{i}_{pair}"])
            )
            entries.append(
                _entry(
                    f"f_cp_sandwich_{i}{pair}_hi", c[f"G{i}_{pair}"], "<=", c[f"G{i}"] + 1
                )
            )
    observations = {
        "eq1": all(f[f"G{i}_ABC"] == f[f"G{i}"] + 1 for i in (1, 2)),
        "eq2": all(f[f"G{i}"] == 2 * c[f"G{i}"] for i in (1, 2)),
        "eq3": fvs_g == f["G1"] + f["G2"] + 1,
        "eq4": cp_g == c["G1"] + c["G2"],
    }
    return Certificate(tuple(entries), observations)


def certify(d: Decomposition) -> Certificate:
    if d.kind == "bridge":
        return check_bridge_certificate(d)
    if d.kind == "cut2":
        return check_cut2_certificate(d)
    if d.kind == "cut3":
        return check_cut3_certificate(d)
    return Certificate(())
