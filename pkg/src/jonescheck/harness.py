"""Corpus generation and batch verification of the packing/feedback bounds.

Corpora are enumerated exhaustively up to isomorphism: simple classes by
vertex augmentation (every connected graph on n vertices arises from a
connected graph on n-1 vertices by deleting a non-cut vertex), multigraph
classes by decorating simple planar backbones with edge multiplicities and
loops under the degree-3 cap.  Dedupe is by canonical form, so every graph
appears exactly once and the stream order is deterministic.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterator

from .canonical import canonical_form
from .multigraph import Multigraph
from . import structure
from . import solvers
from . import reduction

CORPUS_CLASSES = (
    "cubic-planar-simple",
    "subcubic-planar-simple",
    "subcubic-planar-multi",
)

MAX_N_SIMPLE = 14
MAX_N_MULTI = 10


@dataclass(frozen=True)
class CorpusSpec:
    cls: str
    max_n: int
    seed: int = 0  # kept for interface stability; enumeration is deterministic


# level cache: n -> {canonical form: graph}, connected subcubic planar simple
_SIMPLE_LEVELS: dict[int, dict[bytes, Multigraph]] = {}


def _simple_level(n: int) -> dict[bytes, Multigraph]:
    if n in _SIMPLE_LEVELS:
        return _SIMPLE_LEVELS[n]
    if n == 1:
        level = {canonical_form(Multigraph(1)): Multigraph(1)}
        _SIMPLE_LEVELS[1] = level
        return level
    prev = _simple_level(n - 1)
    seen: set[bytes] = set()
    level: dict[bytes, Multigraph] = {}
    for g in prev.values():
        deg = g.degrees()
        eligible = [v for v in range(g.n) if deg[v] < 3]
        for k in (1, 2, 3):
            for s in itertools.combinations(eligible, k):
                new = Multigraph(n, g.edges + tuple((v, n - 1) for v in s))
                cf = canonical_form(new)
                if cf in seen:
                    continue
                seen.add(cf)
                # extensions of non-planar graphs stay non-planar, so only
                # planar graphs enter the level
                if structure.is_planar(new):
                    level[cf] = new
    _SIMPLE_LEVELS[n] = level
    return level


def _multi_decorations(backbone: Multigraph) -> Iterator[Multigraph]:
    """All subcubic multigraphs whose underlying simple graph is `backbone`.

    Loops and extra parallel copies never affect planarity or connectivity.
    """
    slack = [3 - d for d in backbone.degrees()]
    m = backbone.m

    def assign(i: int, extra: list[int]) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(extra)
            return
        u, v = backbone.edges[i]
        max_extra = min(2, slack[u], slack[v])
        for x in range(max_extra + 1):
            slack[u] -= x
            slack[v] -= x
            extra.append(x)
            yield from assign(i + 1, extra)
            extra.pop()
            slack[u] += x
            slack[v] += x

    for extra in assign(0, []):
        used = [0] * backbone.n
        for i, x in enumerate(extra):
            u, v = backbone.edges[i]
            used[u] += x
            used[v] += x
        loop_cands = [
            v for v in range(backbone.n) if 3 - backbone.degree(v) - used[v] >= 2
        ]
        for r in range(len(loop_cands) + 1):
            for ls in itertools.combinations(loop_cands, r):
                edges = []
                for i, (u, v) in enumerate(backbone.edges):
                    edges.extend([(u, v)] * (1 + extra[i]))
                edges.extend((v, v) for v in ls)
                yield Multigraph(backbone.n, tuple(edges))


def generate_corpus(spec: CorpusSpec) -> Iterator[Multigraph]:
    """Stream of pairwise non-isomorphic connected graphs, deterministic order."""
    if spec.cls not in CORPUS_CLASSES:
        raise ValueError(f"unknown corpus class {spec.cls!r}")
    if spec.cls == "subcubic-planar-multi":
        if spec.max_n > MAX_N_MULTI:
            raise ValueError(f"max_n > {MAX_N_MULTI} for multigraph classes")
    elif spec.max_n > MAX_N_SIMPLE:
        raise ValueError(f"max_n > {MAX_N_SIMPLE} for simple classes")
    for n in range(1, spec.max_n + 1):
        level = _simple_level(n)
        if spec.cls == "cubic-planar-simple":
            out = [(cf, g) for cf, g in level.items() if g.is_cubic()]
            for _, g in sorted(out):
                yield g
        elif spec.cls == "subcubic-planar-simple":
            for _, g in sorted(level.items()):
                yield g
        else:
            decorated: dict[bytes, Multigraph] = {}
            for _, backbone in sorted(level.items()):
                for g in _multi_decorations(backbone):
                    cf = canonical_form(g)
                    if cf not in decorated:
                        decorated[cf] = g
            for _, g in sorted(decorated.items()):
                yield g


def graph_digest(g: Multigraph) -> str:
    return hashlib.sha256(canonical_form(g)).hexdigest()[:16]


# -- per-graph verification -------------------------------------------------


@dataclass(frozen=True)
class CheckConfig:
    checks: tuple[str, ...] = ("jones2", "triple", "munaro", "facepack")
    time_limit_s: float | None = 60.0
    cycle_cap: int = solvers.DEFAULT_CYCLE_CAP


# checks whose failure would contradict a theorem (assertion-level) versus
# checks of open conjectures (reported, never asserted)
ASSERT_CHECKS = ("jones2", "triple", "munaro")
CONJECTURE_CHECKS = ("facepack2",)


@dataclass(frozen=True)
class VerificationRecord:
    graph_id: str
    n: int
    m: int
    flags: dict[str, bool]
    values: dict[str, int]
    checks: dict[str, bool]
    wall_time: dict[str, float]
    skipped: tuple[str, ...] = ()

    def assertion_failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok and k in ASSERT_CHECKS]

    def conjecture_violations(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok and k in CONJECTURE_CHECKS]

    def to_json(self) -> str:
        return json.dumps(
            {
                "graph_id": self.graph_id,
                "n": self.n,
                "m": self.m,
                "flags": self.flags,
                "values": self.values,
                "checks": self.checks,
                "wall_time": {k: round(v, 6) for k, v in self.wall_time.items()},
                "skipped": list(self.skipped),
            },
            sort_keys=True,
        )


def run_checks(g: Multigraph, config: CheckConfig = CheckConfig()) -> VerificationRecord:
    ess4, cyc4 = structure.small_cut_flags(g)
    flags = {
        "planar": structure.is_planar(g),
        "subcubic": g.is_subcubic(),
        "cubic": g.is_cubic(),
        "simple": g.is_simple(),
        "cyclically_4ec": cyc4,
        "essentially_4ec": ess4,
    }
    values: dict[str, int] = {}
    wall: dict[str, float] = {}
    skipped: list[str] = []

    def timed(name, fn, *args, **kw):
        t0 = time.monotonic()
        try:
            res = fn(*args, **kw)
        except solvers.SolverLimit:
            skipped.append(name)
            return None
        finally:
            wall[name] = time.monotonic() - t0
        return res

    fvs = timed("fvs", solvers.fvs_exact, g, time_limit_s=config.time_limit_s)
    cp = timed(
        "cp",
        solvers.cp_exact,
        g,
        cycle_cap=config.cycle_cap,
        time_limit_s=config.time_limit_s,
    )
    if fvs is not None:
        values["fvs"] = fvs.size
    if cp is not None:
        values["cp"] = cp.size

    fp = None
    if flags["planar"] and "facepack" in config.checks:
        three_connected = flags["simple"] and structure.vertex_connectivity(g) >= 3
        flags["fp_is_exact"] = three_connected
        rot = structure.planar_embedding(g)
        fp = timed(
            "fp", solvers.fp_fixed_embedding, g, rot, time_limit_s=config.time_limit_s
        )
        if fp is not None:
            values["fp_fixed"] = fp.size

    checks: dict[str, bool] = {}
    have = fvs is not None and cp is not None
    if "jones2" in config.checks and flags["planar"] and flags["subcubic"] and have:
        checks["jones2"] = fvs.size <= 2 * cp.size
    if "triple" in config.checks and flags["planar"] and have:
        checks["triple"] = fvs.size <= 3 * cp.size
    if (
        "munaro" in config.checks
        and flags["simple"]
        and flags["subcubic"]
        and flags["planar"]
        and flags["cyclically_4ec"]
        and have
    ):
        checks["munaro"] = fvs.size <= 2 * cp.size
    if (
        "facepack" in config.checks
        and fp is not None
        and fvs is not None
        and flags.get("fp_is_exact")
    ):
        checks["facepack2"] = fvs.size <= 2 * fp.size
    return VerificationRecord(
        graph_id=graph_digest(g),
        n=g.n,
        m=g.m,
        flags=flags,
        values=values,
        checks=checks,
        wall_time=wall,
        skipped=tuple(skipped),
    )


# -- reduction pipeline ------------------------------------------------------


@dataclass(frozen=True)
class PipelineLeaf:
    graph: Multigraph
    label: str  # acyclic | essentially_4ec | small


@dataclass(frozen=True)
class PipelineResult:
    decompositions: tuple[reduction.Decomposition, ...]
    leaves: tuple[PipelineLeaf, ...]
    certificates: tuple[reduction.Certificate, ...] = ()


def _strip_low_degree(g: Multigraph) -> tuple[Multigraph, bool]:
    """Exhaustive degree-<=1 deletion and degree-2 suppression."""
    cur, _, _ = reduction.delete_degree_le1(g)
    changed = cur.n != g.n
    while True:
        v = next(
            (
                x
                for x in range(cur.n)
                if cur.degree(x) == 2 and not cur.loops[x]
            ),
            None,
        )
        if v is None:
            break
        cur = reduction.suppress_degree2(cur, v).graph
        changed = True
        nxt, _, _ = reduction.delete_degree_le1(cur)
        changed = changed or nxt.n != cur.n
        cur = nxt
    return cur, changed


def reduce_pipeline(g: Multigraph, with_certificates: bool = False) -> PipelineResult:
    """Recursively reduce along low-degree vertices, bridges, 2-cuts and
    nontrivial 3-cuts until every leaf is acyclic, essentially 4-edge-connected
    or has at most 4 vertices."""
    decs: list[reduction.Decomposition] = []
    leaves: list[PipelineLeaf] = []
    certs: list[reduction.Certificate] = []
    stack = [g]
    while stack:
        h = stack.pop()
        if not h.is_connected():
            for comp in h.components():
                stack.append(
                    reduction._induced_part(h, comp).graph  # component split
                )
            continue
        reduced, changed = _strip_low_degree(h)
        if changed:
            decs.append(
                reduction.Decomposition(
                    "low_degree",
                    h,
                    (),
                    {"reduced": reduction.Part(reduced, (), ())},
                )
            )
            h = reduced
        if h.is_forest():
            leaves.append(PipelineLeaf(h, "acyclic"))
            continue
        bridge = structure.find_first_cut(h, 1)
        if bridge is not None:
            d = reduction.split_bridge(h, bridge.edges[0])
            decs.append(d)
            if with_certificates:
                certs.append(reduction.check_bridge_certificate(d))
            stack.extend((d.parts["G1"].graph, d.parts["G2"].graph))
            continue
        cut2 = structure.find_first_cut(h, 2)
        if cut2 is not None:
            d = reduction.split_2cut(h, cut2)
            decs.append(d)
            if with_certificates:
                certs.append(reduction.check_cut2_certificate(d))
            stack.extend((d.parts["G1p"].graph, d.parts["G2p"].graph))
            continue
        cut3 = structure.find_first_cut(h, 3, nontrivial_only=True)
        if cut3 is not None:
            d = reduction.decompose_3cut(h, cut3)
            decs.append(d)
            if with_certificates:
                certs.append(reduction.check_cut3_certificate(d))
            stack.extend((d.parts["G1"].graph, d.parts["G2"].graph))
            continue
        # no bridge, 2-cut or nontrivial 3-cut remains
        leaves.append(PipelineLeaf(h, "small" if h.n <= 4 else "essentially_4ec"))
    return PipelineResult(tuple(decs), tuple(leaves), tuple(certs))
