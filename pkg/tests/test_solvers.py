import random

import pytest

from jonescheck import graphs, reduction, solvers, structure
from jonescheck.multigraph import Multigraph


def test_enumerate_cycles_counts():
    assert len(solvers.enumerate_cycles(graphs.complete(4))) == 7
    assert len(solvers.enumerate_cycles(graphs.theta())) == 3
    assert len(solvers.enumerate_cycles(graphs.cycle(5))) == 1
    assert len(solvers.enumerate_cycles(Multigraph(1, ((0, 0),)))) == 1
    assert solvers.enumerate_cycles(graphs.path(4)) == []


def test_enumerate_cycles_cap():
    with pytest.raises(solvers.SolverLimit):
        solvers.enumerate_cycles(graphs.complete(4), cap=3)


def test_fvs_examples():
    assert solvers.fvs_exact(graphs.complete(4)).size == 2
    assert solvers.fvs_bruteforce(graphs.complete(4)).size == 2
    assert solvers.fvs_exact(graphs.cycle(6)).size == 1
    assert solvers.fvs_exact(graphs.path(5)).size == 0
    for n in range(3, 11):
        assert solvers.fvs_exact(graphs.wheel(n)).size == 2


def test_fvs_multigraph_features():
    # loop vertex must be in every feedback set
    g = Multigraph(3, ((0, 0), (0, 1), (1, 2), (0, 2)))
    w = solvers.fvs_exact(g)
    assert 0 in w.vertices
    # parallel pair is a cycle of length two
    assert solvers.fvs_exact(graphs.theta()).size == 1


def test_cp_examples():
    assert solvers.cp_exact(graphs.complete(4)).size == 1
    assert solvers.cp_exact(graphs.prism()).size == 2
    assert solvers.cp_bruteforce(graphs.prism()).size == 2
    for n in range(3, 11):
        assert solvers.cp_exact(graphs.wheel(n)).size == 1
    assert solvers.cp_exact(graphs.theta()).size == 1


def test_witness_verification():
    g = graphs.prism()
    fvs = solvers.fvs_exact(g)
    fvs.verify(g)
    cp = solvers.cp_exact(g)
    cp.verify(g)
    bad = solvers.FeedbackSet(vertices=(0,), size=1, optimal=False)
    with pytest.raises(AssertionError):
        bad.verify(g)


def test_cp_witness_disjoint():
    g = graphs.dodecahedron()
    cp = solvers.cp_exact(g)
    seen = set()
    for cyc in cp.cycles:
        verts = set()
        for e in cyc:
            verts.update(g.edges[e])
        assert not (verts & seen)
        seen |= verts


def test_dodecahedron_frozen_values():
    # derived via fvs_bruteforce-style oracles once, then frozen
    d = graphs.dodecahedron()
    fvs = solvers.fvs_exact(d, time_limit_s=60)
    cp = solvers.cp_exact(d, time_limit_s=60)
    assert fvs.size == 6
    assert cp.size == 3
    assert fvs.size == 2 * cp.size


def test_oracle_equivalence_random():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.randrange(2, 8)
        edges = tuple(
            (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(0, 10))
        )
        g = Multigraph(n, edges)
        assert solvers.fvs_exact(g).size == solvers.fvs_bruteforce(g).size
        try:
            cycles = solvers.enumerate_cycles(g)
        except solvers.SolverLimit:
            continue
        if len(cycles) <= 20:
            assert solvers.cp_exact(g).size == solvers.cp_bruteforce(g).size


def test_weak_duality_and_monotonicity():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randrange(3, 8)
        edges = [
            (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(1, 10))
        ]
        g = Multigraph(n, tuple(edges))
        fvs = solvers.fvs_exact(g).size
        cp = solvers.cp_exact(g).size
        assert cp <= fvs  # disjoint cycles each need their own fvs vertex
        # deleting an edge cannot increase either quantity
        from jonescheck.multigraph import delete_edges

        h = delete_edges(g, [rng.randrange(g.m)]).graph
        assert solvers.fvs_exact(h).size <= fvs
        assert solvers.cp_exact(h).size <= cp


def test_suppression_preserves_fvs_cp():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randrange(4, 8)
        edges = [(i, (i + 1) % n) for i in range(n)]
        edges += [
            (rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(0, 3))
        ]
        g = Multigraph(n, tuple(edges))
        v = next(
            (x for x in range(n) if g.degree(x) == 2 and not g.loops[x]), None
        )
        if v is None:
            continue
        h = reduction.suppress_degree2(g, v).graph
        assert solvers.fvs_exact(h).size == solvers.fvs_exact(g).size
        assert solvers.cp_exact(h).size == solvers.cp_exact(g).size


def test_cp_branch_fallback_agrees():
    # force the branching path with a tiny cycle cap
    for g in (graphs.prism(), graphs.cube(), graphs.wheel(5)):
        direct = solvers.cp_exact(g)
        branched = solvers.cp_exact(g, cycle_cap=2)
        assert branched.size == direct.size
        branched.verify(g)


def test_fp_fixed_embedding():
    k4 = graphs.complete(4)
    fp = solvers.fp_fixed_embedding(k4, structure.planar_embedding(k4))
    assert fp.size == 1
    cube = graphs.cube()
    fp = solvers.fp_fixed_embedding(cube, structure.planar_embedding(cube))
    assert fp.size == 2
    fp.verify(cube)


def test_fp_le_cp():
    for g in (graphs.complete(4), graphs.prism(), graphs.cube(), graphs.dodecahedron()):
        rot = structure.planar_embedding(g)
        assert solvers.fp_fixed_embedding(g, rot).size <= solvers.cp_exact(g).size


def test_time_limit_raises():
    with pytest.raises(solvers.SolverLimit):
        solvers.fvs_exact(graphs.dodecahedron(), time_limit_s=0.0)


def test_witness_to_dict():
    g = graphs.complete(4)
    d = solvers.witness_to_dict(solvers.fvs_exact(g))
    assert d["kind"] == "fvs" and d["size"] == 2 and len(d["vertices"]) == 2
    d = solvers.witness_to_dict(solvers.cp_exact(g))
    assert d["kind"] == "cp" and d["size"] == 1
