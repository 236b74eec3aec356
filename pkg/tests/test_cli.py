import pytest

from synchro.cli import main

CNF = "p cnf 2 1\n1 2 -1 0\n"
CNF_N3 = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"
BAD_CNF = "p cnf 2 1\n1 1 2 0\n"


@pytest.fixture
def cnf_file(tmp_path):
    path = tmp_path / "f.cnf"
    path.write_text(CNF)
    return str(path)


def test_reduce_prints_constants(tmp_path, cnf_file, capsys):
    out = tmp_path / "aut.txt"
    code = main(["reduce", cnf_file, str(out), "--addresses"])
    captured = capsys.readouterr().out
    assert code == 0
    assert "d=57" in captured
    assert out.exists()
    assert "addr" in out.read_text()


def test_reduce_bad_cnf(tmp_path, capsys):
    path = tmp_path / "bad.cnf"
    path.write_text(BAD_CNF)
    assert main(["reduce", str(path), str(tmp_path / "o.txt")]) == 2


def test_reduce_dot_flag(tmp_path, cnf_file):
    out = tmp_path / "aut.txt"
    dot = tmp_path / "aut.dot"
    assert main(["reduce", cnf_file, str(out), "--dot", str(dot)]) == 0
    assert dot.read_text().startswith("digraph")


def test_witness_check_validate_flow(tmp_path, cnf_file, capsys):
    aut = tmp_path / "aut.txt"
    word = tmp_path / "w.txt"
    assert main(["reduce", cnf_file, str(aut)]) == 0
    assert main(["witness", cnf_file, "-o", str(word)]) == 0
    capsys.readouterr()

    assert main(["check", str(aut), str(word)]) == 0
    out = capsys.readouterr().out
    assert "RESET" in out and "final-size=1" in out

    assert main(["validate", str(aut)]) == 0
    out = capsys.readouterr().out
    assert "eulerian: true" in out
    assert "synchronizing: true" in out


def test_witness_explicit_assignment(tmp_path, cnf_file, capsys):
    assert main(["witness", cnf_file, "--assignment", "10"]) == 0
    w = capsys.readouterr().out.strip()
    assert w.startswith("aabaaa") and len(w) == 57
    assert main(["witness", cnf_file, "--assignment", "abc"]) == 2


def test_check_not_reset(tmp_path, cnf_file, capsys):
    aut = tmp_path / "aut.txt"
    word = tmp_path / "w.txt"
    main(["reduce", cnf_file, str(aut)])
    word.write_text("ab\n")
    assert main(["check", str(aut), str(word)]) == 1


def test_check_rejects_bad_word_file(tmp_path, cnf_file):
    aut = tmp_path / "aut.txt"
    main(["reduce", cnf_file, str(aut)])
    word = tmp_path / "w.txt"
    word.write_text("abc\n")
    assert main(["check", str(aut), str(word)]) == 2


def test_solve_cerny(tmp_path, capsys):
    from synchro.automaton import cerny, serialize_automaton

    aut = tmp_path / "c4.txt"
    aut.write_text(serialize_automaton(cerny(4)))
    assert main(["solve", str(aut), "--max-len", "9"]) == 0
    out = capsys.readouterr().out
    assert "length=9" in out
    assert main(["solve", str(aut), "--method", "greedy"]) == 0
    assert main(["solve", str(aut), "--decide", "8"]) == 1
    assert main(["solve", str(aut), "--decide", "9"]) == 0


def test_solve_unknown_under_tiny_cap(tmp_path, cnf_file, capsys):
    aut = tmp_path / "aut.txt"
    main(["reduce", cnf_file, str(aut)])
    capsys.readouterr()
    assert main(["solve", str(aut), "--decide", "57", "--mem-cap", "100000"]) == 3


def test_export(tmp_path, cnf_file):
    aut = tmp_path / "aut.txt"
    dot = tmp_path / "aut.dot"
    main(["reduce", cnf_file, str(aut), "--addresses"])
    assert main(["export", str(aut), str(dot), "--clusters"]) == 0
    assert "cluster" in dot.read_text()


def test_verify_reduction_sat(tmp_path, capsys):
    path = tmp_path / "f.cnf"
    path.write_text(CNF_N3)
    assert main(["verify-reduction", str(path)]) == 0
    out = capsys.readouterr().out
    assert "satisfiable: yes" in out and "all checks passed" in out


def test_verify_reduction_fault_injection(tmp_path, capsys):
    path = tmp_path / "f.cnf"
    path.write_text(CNF_N3)
    assert main(["verify-reduction", str(path), "--fault-inject"]) == 1


def test_missing_file_is_input_error(tmp_path):
    assert main(["reduce", str(tmp_path / "nope.cnf"), str(tmp_path / "o.txt")]) == 2


def test_verify_reduction_unsat(tmp_path, capsys):
    # all eight sign patterns over three variables: unsatisfiable
    lines = ["p cnf 3 8"]
    for a in (1, -1):
        for b in (2, -2):
            for c in (3, -3):
                lines.append("%d %d %d 0" % (a, b, c))
    path = tmp_path / "unsat.cnf"
    path.write_text("\n".join(lines) + "\n")
    assert main(["verify-reduction", str(path)]) == 0
    out = capsys.readouterr().out
    assert "satisfiable: no" in out and "all checks passed" in out
