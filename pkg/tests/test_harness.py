import itertools

import pytest

from jonescheck import graphs, harness, solvers, structure
from jonescheck.canonical import canonical_form
from jonescheck.multigraph import Multigraph


def _bruteforce_simple_classes(n):
    """All connected simple subcubic planar graphs on n labeled vertices,
    collapsed by canonical form — an independent oracle for the generator."""
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for bits in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
        g = Multigraph(n, edges)
        if not g.is_subcubic() or not g.is_connected():
            continue
        if not structure.is_planar(g):
            continue
        forms.add(canonical_form(g))
    return forms


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_generator_matches_bruteforce(n):
    spec = harness.CorpusSpec("subcubic-planar-simple", n)
    got = {canonical_form(g) for g in harness.generate_corpus(spec) if g.n == n}
    assert got == _bruteforce_simple_classes(n)


def test_cubic_class():
    gs = list(harness.generate_corpus(harness.CorpusSpec("cubic-planar-simple", 6)))
    assert [(g.n, g.m) for g in gs] == [(4, 6), (6, 9)]  # K4 and the prism
    assert all(g.is_cubic() for g in gs)
    # no cubic graph has an odd number of vertices
    assert not any(g.n % 2 for g in gs)


def test_multi_class_small():
    gs = list(harness.generate_corpus(harness.CorpusSpec("subcubic-planar-multi", 1)))
    assert [(g.n, g.m) for g in gs] == [(1, 0), (1, 1)]
    gs2 = [
        g
        for g in harness.generate_corpus(harness.CorpusSpec("subcubic-planar-multi", 2))
        if g.n == 2
    ]
    # K2 with multiplicity 1..3, K2 + one loop, K2 + two loops
    assert len(gs2) == 5
    assert all(g.is_subcubic() for g in gs2)


def test_corpus_deterministic():
    a = [
        canonical_form(g)
        for g in harness.generate_corpus(harness.CorpusSpec("subcubic-planar-simple", 6))
    ]
    b = [
        canonical_form(g)
        for g in harness.generate_corpus(harness.CorpusSpec("subcubic-planar-simple", 6))
    ]
    assert a == b
    assert len(set(a)) == len(a)  # pairwise non-isomorphic


def test_corpus_guards():
    with pytest.raises(ValueError):
        list(harness.generate_corpus(harness.CorpusSpec("subcubic-planar-simple", 15)))
    with pytest.raises(ValueError):
        list(harness.generate_corpus(harness.CorpusSpec("subcubic-planar-multi", 11)))
    with pytest.raises(ValueError):
        list(harness.generate_corpus(harness.CorpusSpec("nope", 3)))


def test_run_checks_prism():
    rec = harness.run_checks(graphs.prism())
    assert rec.values == {"cp": 2, "fvs": 2, "fp_fixed": 2}
    assert rec.checks["jones2"] and rec.checks["triple"]
    assert rec.flags["cubic"] and rec.flags["planar"]
    assert not rec.flags["cyclically_4ec"]
    assert rec.assertion_failures() == []
    assert not rec.skipped
    import json

    parsed = json.loads(rec.to_json())
    assert parsed["graph_id"] == rec.graph_id


def test_run_checks_nonplanar():
    rec = harness.run_checks(graphs.petersen())
    assert not rec.flags["planar"]
    assert "jones2" not in rec.checks  # conditional on planarity
    assert "fp_fixed" not in rec.values


def test_run_checks_time_limit():
    cfg = harness.CheckConfig(time_limit_s=1e-9)
    rec = harness.run_checks(graphs.dodecahedron(), cfg)
    assert "fvs" in rec.skipped


def test_pipeline_tree():
    res = harness.reduce_pipeline(graphs.path(6))
    assert all(l.label == "acyclic" for l in res.leaves)


def test_pipeline_prism():
    res = harness.reduce_pipeline(graphs.prism(), with_certificates=True)
    assert [d.kind for d in res.decompositions][0] == "cut3"
    assert all(
        l.label in ("acyclic", "essentially_4ec", "small") for l in res.leaves
    )
    assert all(c.holds for c in res.certificates)


def test_pipeline_dodecahedron():
    res = harness.reduce_pipeline(graphs.dodecahedron())
    assert len(res.leaves) == 1
    assert res.leaves[0].label == "essentially_4ec"
    assert res.decompositions == ()


def test_pipeline_disconnected():
    g = Multigraph(7, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    res = harness.reduce_pipeline(g)
    assert all(
        l.label in ("acyclic", "essentially_4ec", "small") for l in res.leaves
    )


def test_graph_digest_stable():
    assert harness.graph_digest(graphs.complete(4)) == harness.graph_digest(
        graphs.complete(4)
    )
    assert harness.graph_digest(graphs.complete(4)) != harness.graph_digest(
        graphs.prism()
    )
