import json

import pytest

from jonescheck import cli, graphs, io


def _run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    lines = [json.loads(l) for l in out.strip().splitlines() if l.strip()]
    return code, lines


@pytest.fixture()
def corpus_file(tmp_path):
    p = tmp_path / "graphs.s6"
    lines = [
        io.serialize(g, "s6").decode()
        for g in (graphs.complete(4), graphs.prism(), graphs.theta())
    ]
    p.write_text("\n".join(lines) + "\n")
    return str(p)


def test_solve(capsys, corpus_file):
    code, lines = _run(capsys, ["solve", "--input", corpus_file])
    assert code == 0
    summary = lines[-1]
    assert summary["summary"] and summary["graphs"] == 3
    k4 = lines[0]
    assert k4["fvs"]["size"] == 2 and k4["cp"]["size"] == 1
    assert k4["jones2"]


def test_solve_jobs(capsys, corpus_file):
    code1, lines1 = _run(capsys, ["solve", "--input", corpus_file])
    code2, lines2 = _run(capsys, ["solve", "--input", corpus_file, "--jobs", "2"])
    assert code1 == code2 == 0
    assert [l["graph_id"] for l in lines1[:-1]] == [l["graph_id"] for l in lines2[:-1]]


def test_cuts(capsys, corpus_file):
    code, lines = _run(capsys, ["cuts", "--input", corpus_file])
    assert code == 0
    prism = lines[1]
    nontrivial = [c for c in prism["cuts"] if not c["trivial"]]
    assert len(nontrivial) == 1 and len(nontrivial[0]["edges"]) == 3
    assert not prism["cyclically_4ec"]
    assert lines[0]["cyclically_4ec"]  # K4


def test_reduce(capsys, corpus_file):
    code, lines = _run(
        capsys, ["reduce", "--input", corpus_file, "--certificates"]
    )
    assert code == 0
    for rec in lines:
        for leaf in rec["leaves"]:
            assert leaf["label"] in ("acyclic", "essentially_4ec", "small")
        for cert in rec["certificates"]:
            assert cert["holds"]


def test_verify_corpus_class(capsys):
    code, lines = _run(
        capsys,
        ["verify", "--class", "subcubic-planar-simple", "--max-n", "6"],
    )
    assert code == 0
    summary = lines[-1]
    assert summary["graphs"] == 48
    assert summary["assertion_failures"] == 0
    assert summary["conjecture_violations"] == 0


def test_verify_stdin(capsys, monkeypatch):
    data = io.serialize(graphs.complete(4), "s6").decode() + "\n"
    import io as _io

    monkeypatch.setattr("sys.stdin", _io.StringIO(data))
    code, lines = _run(capsys, ["verify", "--stdin", "--check", "jones2,triple"])
    assert code == 0
    assert lines[0]["values"]["fvs"] == 2


def test_verify_edges_format(capsys, tmp_path):
    p = tmp_path / "g.edges"
    p.write_bytes(io.serialize(graphs.prism(), "edges"))
    code, lines = _run(
        capsys, ["verify", "--input", str(p), "--format", "edges"]
    )
    assert code == 0
    assert lines[0]["values"] == {"cp": 2, "fvs": 2, "fp_fixed": 2}


def test_generate(capsys, tmp_path):
    out = tmp_path / "c.s6"
    code = cli.main(
        ["generate", "--class", "cubic-planar-simple", "--max-n", "6", "--out", str(out)]
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2
    gs = [io.parse(l, "s6") for l in lines]
    assert [(g.n, g.m) for g in gs] == [(4, 6), (6, 9)]


def test_output_file(tmp_path, corpus_file):
    out = tmp_path / "report.jsonl"
    code = cli.main(["solve", "--input", corpus_file, "--output", str(out)])
    assert code == 0
    lines = [json.loads(l) for l in out.read_text().strip().splitlines()]
    assert lines[-1]["summary"]


def test_time_limit_skip(capsys, tmp_path):
    p = tmp_path / "d.s6"
    p.write_bytes(io.serialize(graphs.dodecahedron(), "s6") + b"\n")
    code, lines = _run(
        capsys, ["solve", "--input", str(p), "--time-limit-ms", "0"]
    )
    # 0 disables the limit rather than skipping everything
    assert code == 0 and lines[0]["status"] == "ok"
