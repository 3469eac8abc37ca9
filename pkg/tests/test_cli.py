from binframes.cli import run


def out_lines(capsys):
    return capsys.readouterr().out.rstrip("\n").split("\n")


def test_verify_parseval_frame(capsys):
    assert run(["verify", "3; 3,5,6,7"]) == 0
    assert out_lines(capsys) == [
        "frame: yes; parseval: yes; trivially-redundant: no"]


def test_verify_non_frame(capsys):
    assert run(["verify", "2; 3"]) == 1
    assert out_lines(capsys) == ["frame: no"]


def test_verify_frame_not_parseval(capsys):
    assert run(["verify", "3; 1,2,4,7"]) == 0
    assert out_lines(capsys) == [
        "frame: yes; parseval: no; trivially-redundant: no"]
    assert run(["verify", "3; 1,2,4,0"]) == 0
    assert out_lines(capsys) == [
        "frame: yes; parseval: yes; trivially-redundant: yes"]


def test_verify_parse_error(capsys):
    assert run(["verify", "3: 1,2"]) == 2
    assert run(["verify", "3; 9"]) == 2


def test_gram_output(capsys):
    assert run(["gram", "3; 3,5,6,7"]) == 0
    assert out_lines(capsys) == [
        "0110",
        "1010",
        "1100",
        "0001",
        "key: k4:3880",
    ]


def test_dual_output(capsys):
    assert run(["dual", "2; 1,2,3"]) == 0
    assert out_lines(capsys) == ["2; 1,2,0"]
    assert run(["dual", "2; 3"]) == 1
    assert out_lines(capsys) == ["NOT-SPANNING"]


def test_equiv_reference_pair(capsys):
    assert run(["equiv", "5; 18,26,22,29,19,15", "5; 10,26,14,29,11,23"]) == 0
    assert out_lines(capsys) == [
        "U:",
        "10000",
        "01000",
        "00100",
        "00001",
        "00010",
    ]


def test_equiv_switching_mode(capsys):
    assert run(["equiv", "3; 3,5,6,7", "3; 7,6,5,3", "--mode", "switching"]) == 0
    lines = out_lines(capsys)
    assert lines[0] == "U:"
    assert lines[-1].startswith("pi: ")
    pi = [int(p) for p in lines[-1][4:].split(",")]
    assert sorted(pi) == [1, 2, 3, 4]


def test_equiv_negative_and_errors(capsys):
    assert run(["equiv", "3; 3,5,6,7", "3; 7,5,6,3"]) == 1
    assert out_lines(capsys) == ["NOT-EQUIVALENT"]
    # non-Parseval inputs violate the precondition
    assert run(["equiv", "3; 1,2,4,7", "3; 1,2,4,7"]) == 2
    assert run(["equiv", "3; 1,2,4", "3; 3,5,6,7"]) == 2
    assert run(["equiv", "3; 1,2,4", "3; 1,2,4", "--mode", "sideways"]) == 2


def test_complement_command(capsys):
    assert run(["complement", "3; 1,2,4", "--drop-zero"]) == 0
    assert out_lines(capsys) == ["3; 3,5,6,7"]
    assert run(["complement", "3; 1,2,4"]) == 0
    assert out_lines(capsys) == ["3; 0,3,5,6,7"]
    assert run(["complement", "2; 1,2"]) == 2
    assert run(["complement", "3; 1,1,2"]) == 2


def test_enumerate_command(capsys):
    assert run(["enumerate", "3", "3"]) == 0
    assert out_lines(capsys) == ["3\t3\t1,2,4\tk3:94\t1"]
    assert run(["enumerate", "3", "8"]) == 2


def test_catalog_command(capsys):
    assert run(["catalog", "3"]) == 0
    assert out_lines(capsys) == [
        "3\t3\t1,2,4\tk3:94\t1",
        "3\t4\t3,5,6,7\tk4:3880\t1",
    ]


def test_catalog_out_file_and_worker_determinism(tmp_path, capsys):
    a = tmp_path / "w1.tsv"
    b = tmp_path / "w8.tsv"
    assert run(["catalog", "4", "--out", str(a)]) == 0
    assert run(["catalog", "4", "--workers", "8", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""
    c = tmp_path / "direct.tsv"
    assert run(["catalog", "4", "--no-complement-shortcut",
                "--out", str(c)]) == 0
    assert a.read_bytes() == c.read_bytes()


def test_counterexample_weight2(capsys):
    assert run(["counterexample", "weight2", "4"]) == 0
    assert out_lines(capsys) == [
        "4; 3,5,9,6,10,12",
        "parseval-identity: yes",
        "frame: no",
    ]
    assert run(["counterexample", "weight2", "3"]) == 0
    assert out_lines(capsys)[0] == "3; 1,6"


def test_counterexample_shift(capsys):
    assert run(["counterexample", "shift", "3"]) == 0
    assert out_lines(capsys) == [
        "110",
        "001",
        "000",
        "isometry: yes",
        "rank: 2",
        "unitary: no",
    ]


def test_counterexample_bad_dimension(capsys):
    assert run(["counterexample", "weight2", "1"]) == 2
    assert run(["counterexample", "shift", "1"]) == 2


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["--help"]) == 0


def test_cli_matches_library_verdicts(capsys):
    from binframes.equivalence import switching_equivalent, unitary_equivalent
    from binframes.frames import compute_dual, is_frame, parse_frame
    for lit in ("3; 1,2,4", "3; 3,5,6", "2; 1,2,3", "1; 1"):
        code = run(["verify", lit])
        assert (code == 0) == is_frame(parse_frame(lit))
        code = run(["dual", lit])
        assert (code == 0) == (compute_dual(parse_frame(lit)) is not None)
        capsys.readouterr()
    pairs = (("3; 3,5,6,7", "3; 7,6,5,3"), ("3; 3,5,6,7", "3; 3,5,6,7"),
             ("4; 1,2,4,8", "4; 8,4,2,1"))
    for a, b in pairs:
        F, H = parse_frame(a), parse_frame(b)
        assert (run(["equiv", a, b]) == 0) == (
            unitary_equivalent(F, H) is not None)
        assert (run(["equiv", a, b, "--mode", "switching"]) == 0) == (
            switching_equivalent(F, H) is not None)
        capsys.readouterr()
