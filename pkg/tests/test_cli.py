import json

import pytest

from tourpack import cli
from tourpack.core import LinearTournament, Triangle, validate_triangle_packing
from tourpack.formats import format_tournament, parse_packing, parse_tournament


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_tournament(path, t):
    path.write_text(format_tournament(t))
    return str(path)


def T(n, *backward):
    return LinearTournament(n, frozenset(backward))


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "t.txt"
    code, _, _ = run(capsys, "gen", "--random", "8", "--seed", "3", "-o", str(out))
    assert code == 0
    t = parse_tournament(out.read_text())
    assert t.n == 8
    # same seed, same instance
    out2 = tmp_path / "t2.txt"
    run(capsys, "gen", "--random", "8", "--seed", "3", "-o", str(out2))
    assert out.read_text() == out2.read_text()


def test_gen_sparse_kinds(tmp_path, capsys):
    out = tmp_path / "s.txt"
    code, _, _ = run(capsys, "gen", "--random-sparse", "9", "-o", str(out))
    assert code == 0
    code, _, _ = run(capsys, "gen", "--random-fully-sparse", "10", "-o", str(out))
    assert code == 0
    t = parse_tournament(out.read_text())
    assert 2 * len(t.backward) == t.n
    # odd vertex count cannot be fully covered
    code, _, err = run(capsys, "gen", "--random-fully-sparse", "7")
    assert code == 1 and "even" in err


def test_gen_sts_lists_triples(capsys):
    code, out, _ = run(capsys, "gen", "--sts", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 7
    assert all(len(line.split()) == 3 for line in lines)


def test_stats(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(4, (2, 0), (3, 1)))
    code, out, _ = run(capsys, "stats", path)
    assert code == 0
    assert "n 4" in out
    assert "sparse yes" in out
    assert "fully-sparse yes" in out
    assert "triangles 2" in out


def test_solve_exact(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(3, (2, 0)))
    code, out, _ = run(capsys, "solve", "--exact", path)
    assert code == 0
    assert out.splitlines()[0] == "optimum 1"
    assert "triangle 0 1 2" in out


def test_solve_json_reports_method(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(4, (2, 0), (3, 1)))
    code, out, _ = run(capsys, "solve", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["method"] == "sparse-poly"
    assert report["optimum"] == 1
    assert report["sparse"] and report["fully_sparse"]

    path = write_tournament(tmp_path / "d.txt", T(4, (2, 0), (3, 0)))
    code, out, _ = run(capsys, "solve", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["method"] == "exact"


def test_solve_cycles(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(4, (3, 0)))
    code, out, _ = run(capsys, "solve", "--exact", "--cycles", path)
    assert code == 0
    assert out.splitlines()[0] == "optimum 1"
    assert out.splitlines()[1].startswith("cycle ")


def test_solve_sparse_mode_rejects_dense(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(4, (2, 0), (3, 0)))
    code, _, err = run(capsys, "solve", "--sparse", path)
    assert code == 1
    assert "not sparse" in err


def test_solve_refuses_oversized_without_k(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(13, (2, 0), (3, 0)))
    code, _, err = run(capsys, "solve", path)
    assert code == 3
    assert "refusing" in err


def test_solve_fpt(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(3, (2, 0)))
    code, out, _ = run(capsys, "solve", "--fpt", "-k", "1", path)
    assert code == 0
    assert out.splitlines()[0] == "yes"
    assert "triangle 0 1 2" in out
    # --fpt without -k is a usage error
    code, _, _ = run(capsys, "solve", "--fpt", path)
    assert code == 2


def test_solve_auto_kernelize_path(tmp_path, capsys):
    # large, non-sparse (vertex 7 covered twice), still almost transitive
    t = T(16, (9, 7), (15, 7), (15, 2))
    path = write_tournament(tmp_path / "big.txt", t)
    code, out, _ = run(capsys, "solve", path, "-k", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["method"].startswith("kernelize")
    assert report["decision"] is True
    lifted = parse_packing("\n".join(report["witness"]) + "\n")
    assert validate_triangle_packing(t, lifted)


def test_solve_decision_no(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(4, (2, 0), (3, 1)))
    code, out, _ = run(capsys, "solve", "--exact", "-k", "2", path, "--json")
    assert code == 0
    report = json.loads(out)
    assert report["optimum"] == 1
    assert report["decision"] is False


def test_verify(tmp_path, capsys):
    tpath = write_tournament(tmp_path / "t.txt", T(3, (2, 0)))
    good = tmp_path / "good.txt"
    good.write_text("triangle 0 1 2\n")
    code, out, _ = run(capsys, "verify", tpath, str(good))
    assert code == 0 and out.startswith("pass")

    code, out, _ = run(capsys, "verify", tpath, str(good), "--size", "2")
    assert code == 1 and out.startswith("fail")

    bad = tmp_path / "bad.txt"
    bad.write_text("triangle 0 2 1\n")
    code, out, _ = run(capsys, "verify", tpath, str(bad))
    assert code == 1 and "absent" in out

    overlap = tmp_path / "overlap.txt"
    overlap.write_text("triangle 0 1 2\ncycle 0 1 2\n")
    code, out, _ = run(capsys, "verify", tpath, str(overlap))
    assert code == 1 and "used by both" in out


def test_kernelize_command(tmp_path, capsys):
    path = write_tournament(tmp_path / "t.txt", T(6, (2, 0)))
    code, out, _ = run(capsys, "kernelize", path, "-k", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "kernel"
    assert "tournament 3" in lines[1]
    assert any(line.startswith("# map") for line in lines)

    code, out, _ = run(capsys, "kernelize", path, "-k", "1")
    assert code == 0
    assert out.splitlines()[0] == "early-yes"


def test_reduce_and_certify_pipeline(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 2\n-1 2 -3 0\n1 -2 3 0\n")
    tfile = tmp_path / "reduced.txt"
    code, _, _ = run(capsys, "reduce", str(cnf), "-o", str(tfile))
    assert code == 0
    text = tfile.read_text()
    t = parse_tournament(text)
    assert t.n == 27
    assert "# threshold=67" in text
    meta = (tmp_path / "reduced.txt.meta").read_text()
    assert "alpha=15" in meta

    assignment = tmp_path / "a.txt"
    assignment.write_text("v1=1\nv2=1\nv3=1\n")
    packing_file = tmp_path / "p.txt"
    code, _, _ = run(capsys, "certify", str(cnf), str(assignment), "-o", str(packing_file))
    assert code == 0
    packing = parse_packing(packing_file.read_text())
    assert len(packing) == 67

    code, out, _ = run(
        capsys, "verify", str(tfile), str(packing_file), "--size", "67"
    )
    assert code == 0 and out.startswith("pass")


def test_certify_rejects_falsifying(tmp_path, capsys):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 2\n-1 2 -3 0\n1 -2 3 0\n")
    assignment = tmp_path / "a.txt"
    assignment.write_text("v1=1\nv2=0\nv3=1\n")
    code, _, err = run(capsys, "certify", str(cnf), str(assignment))
    assert code == 1
    assert "satisfy" in err

    # incomplete assignments are rejected up front
    assignment.write_text("v1=1\n")
    code, _, err = run(capsys, "certify", str(cnf), str(assignment))
    assert code == 1
    assert "missing" in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["gen"])
    assert exc.value.code == 2


def test_missing_file_is_data_error(capsys):
    code, _, err = run(capsys, "stats", "/nonexistent/file.txt")
    assert code == 1
    assert "error" in err
