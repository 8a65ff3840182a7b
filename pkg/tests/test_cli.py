import io
import json

import pytest

from strongclique.cli import main, parse_partition, parse_records, parse_vertex_list
from strongclique.errors import StrongCliqueError
from strongclique.generators import SatInstance, parse_dimacs_cnf
from strongclique.graph import format_edge_list, named, parse_edge_list, path_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


@pytest.fixture
def p4(write):
    return write("p4.txt", format_edge_list(path_graph(4)))


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_analyze_p4(capsys, p4):
    code, out, _ = run(capsys, "analyze", "--input", p4)
    assert code == 0
    recs = {r["problem"]: r for r in parse_records(out, "tsv")}
    assert set(recs) == {"Existence", "VertexCover", "EdgeCover", "PartitionExistence"}
    pe = recs["PartitionExistence"]
    assert pe["answer"] is True and pe["certificate"] == [[0, 1], [2, 3]] and pe["method"] == "c4free"


def test_analyze_with_clique_and_partition(capsys, p4):
    code, out, _ = run(capsys, "analyze", "--input", p4, "--clique", "1,2", "--partition", "0,1|2,3",
                       "--format", "jsonl")
    assert code == 0
    recs = {r["problem"]: r for r in parse_records(out, "jsonl")}
    assert recs["StrongClique"]["answer"] is False and recs["StrongClique"]["certificate"] == [0, 3]
    assert recs["Extension"]["answer"] is False
    assert recs["Partition"]["answer"] is True


def test_single_problem_exit_codes(capsys, p4):
    assert run(capsys, "analyze", "--input", p4, "--problem", "PartitionExistence")[0] == 0
    assert run(capsys, "analyze", "--input", p4, "--problem", "strong-clique", "--clique", "1,2")[0] == 1
    code, _, err = run(capsys, "analyze", "--input", p4, "--problem", "StrongClique")
    assert code == 2 and "--clique" in err
    assert run(capsys, "analyze", "--input", p4, "--problem", "nonsense")[0] == 2


def test_check_strong_and_extend(capsys, p4):
    code, out, _ = run(capsys, "check-strong", "--input", p4, "--clique", "1,2")
    assert code == 1 and parse_records(out, "tsv")[0]["certificate"] == [0, 3]
    assert run(capsys, "check-strong", "--input", p4, "--clique", "0,1")[0] == 0
    code, out, _ = run(capsys, "extend", "--input", p4, "--clique", "1")
    assert code == 0 and parse_records(out, "tsv")[0]["certificate"] == [0, 1]
    code, _, err = run(capsys, "check-strong", "--input", p4, "--clique", "0,2")
    assert code == 2 and "error" in err


def test_localizable(capsys, write):
    c5 = write("c5.txt", format_edge_list(named("cycle", 5)))
    code, out, _ = run(capsys, "localizable", "--input", c5, "--format", "jsonl")
    assert code == 1 and parse_records(out, "jsonl")[0]["answer"] is False


def test_classify_cubic(capsys, write):
    f3 = write("f3.txt", format_edge_list(named("F_n", 3)))
    code, out, _ = run(capsys, "classify-cubic", "--input", f3)
    assert code == 0 and parse_records(out, "tsv")[0]["certificate"]["tag"] == "Fn(3)"
    pet = write("pet.txt", format_edge_list(named("petersen")))
    code, out, _ = run(capsys, "classify-cubic", "--input", pet)
    assert code == 1 and parse_records(out, "tsv")[0]["certificate"]["tag"] == "NotLocalizable"
    code, _, _ = run(capsys, "classify-cubic", "--input", write("p.txt", format_edge_list(path_graph(3))))
    assert code == 2


def test_recognize_line(capsys, write):
    code, out, _ = run(capsys, "recognize-line", "--input", write("p3.txt", format_edge_list(path_graph(3))))
    rec = parse_records(out, "tsv")[0]
    assert code == 0 and rec["certificate"]["root_n"] == 4
    claw = write("claw.txt", format_edge_list(named("complete_bipartite", 1, 3)))
    code, out, _ = run(capsys, "recognize-line", "--input", claw)
    assert code == 1 and sorted(parse_records(out, "tsv")[0]["certificate"]["obstruction"]) == [0, 1, 2, 3]


def test_oracle_command(capsys, write):
    diamond = write("d.txt", format_edge_list(named("diamond")))
    code, out, _ = run(capsys, "oracle", "--input", diamond, "--format", "jsonl")
    cert = parse_records(out, "jsonl")[0]["certificate"]
    assert code == 0 and cert["alpha"] == 2 and cert["strong_cliques"] == [[0, 1, 2], [0, 1, 3]]
    assert cert["partition"] is None
    assert run(capsys, "oracle", "--input", diamond, "--oracle-cap", "3")[0] == 2


def test_oracle_cap_skip_record(capsys, write):
    g = write("g.txt", format_edge_list(named("complete", 5)))
    code, out, _ = run(capsys, "analyze", "--input", g, "--problem", "Extension", "--omega-cap", "2",
                       "--oracle-cap", "3")
    # K5 is C4-free, so no fallback is needed and the cap is irrelevant
    assert code == 0 and parse_records(out, "tsv")[0]["method"] == "c4free"
    claw_c4_k4 = "12 13\n0 1\n0 2\n0 3\n4 5\n5 6\n6 7\n7 4\n8 9\n8 10\n8 11\n9 10\n9 11\n10 11\n"
    path = write("h.txt", claw_c4_k4)
    code, out, _ = run(capsys, "extend", "--input", path, "--omega-cap", "3", "--oracle-cap", "10")
    rec = parse_records(out, "tsv")[0]
    assert code == 2 and rec["status"] == "skipped: cap" and rec["answer"] is None


def test_gen_and_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "F_n", "2")
    assert code == 0 and parse_edge_list(out) == named("F_n", 2)
    code, out, _ = run(capsys, "gen", "random", "--n", "7", "--seed", "3")
    assert code == 0 and parse_edge_list(out).n == 7
    assert run(capsys, "gen", "random", "--n", "7", "--seed", "3")[1] == out
    code, out, _ = run(capsys, "gen", "cubic", "--n", "10")
    assert code == 0 and set(parse_edge_list(out).degrees()) == {3}
    code, out, _ = run(capsys, "gen", "sat", "--n", "5", "--m", "7", "--enforce", "i,ii")
    assert code == 0 and parse_dimacs_cnf(out).every_literal_occurs
    assert run(capsys, "gen", "cubic", "--n", "7")[0] == 2
    monkeypatch.setattr("sys.stdin", io.StringIO(format_edge_list(path_graph(4))))
    code, out, _ = run(capsys, "localizable", "--input", "-")
    assert code == 0 and parse_records(out, "tsv")[0]["instance"] == "stdin"


def test_reduce_sat(capsys, write, tmp_path):
    phi = SatInstance(3, ((1, 2, 3), (-1, -2, 3), (1, -2, -3)))
    cnf = write("phi.cnf", phi.to_dimacs())
    labels = str(tmp_path / "labels.txt")
    code, out, _ = run(capsys, "reduce-sat", "--input", cnf, "--labels", labels)
    assert code == 0 and parse_edge_list(out).n == 9
    assert open(labels).read().splitlines()[0] == "0 clause c1"
    code, _, err = run(capsys, "reduce-sat", "--input", cnf, "--variant", "gprime")
    assert code == 2 and "(iii)" in err
    bad = write("bad.cnf", "p cnf 3 1\n1 2 3\n")
    code, _, err = run(capsys, "reduce-sat", "--input", bad)
    assert code == 2 and "line 2" in err


def test_input_errors(capsys, write):
    assert run(capsys, "localizable", "--input", "/nonexistent/file")[0] == 2
    assert run(capsys, "localizable")[0] == 2
    code, _, err = run(capsys, "localizable", "--input", write("bad.txt", "3 1\n0 9\n"))
    assert code == 2 and "line 2" in err
    with pytest.raises(SystemExit):
        main(["localizable", "--format", "xml"])


def test_verify_campaign_quick(capsys):
    code, out, _ = run(capsys, "verify-campaign", "--preset", "cubic-families", "--quick", "--format", "jsonl")
    recs = parse_records(out, "jsonl")
    assert code == 0 and recs and all(r["status"] == "ok" for r in recs)


def test_record_round_trip(capsys, p4):
    for fmt in ("tsv", "jsonl"):
        _, out, _ = run(capsys, "analyze", "--input", p4, "--clique", "1", "--format", fmt)
        recs = parse_records(out, fmt)
        assert len(recs) == 6
        for r in recs:
            assert isinstance(r["seconds"], float) and r["answer"] in (True, False)
            json.dumps(r)
    with pytest.raises(StrongCliqueError):
        parse_records("nonsense\n", "tsv")


def test_argument_parsers():
    assert parse_vertex_list(" 3,1 ") == (3, 1)
    assert parse_vertex_list("") == ()
    assert parse_partition("0,1|2") == [(0, 1), (2,)]
    with pytest.raises(StrongCliqueError):
        parse_vertex_list("a,b")
