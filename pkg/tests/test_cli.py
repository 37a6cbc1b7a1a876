import pytest

from quivercone.cli import main

from conftest import A2_TEXT


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.quiver"
    path.write_text(A2_TEXT)
    return str(path)


@pytest.fixture
def weight_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text("weight x 2 1\nweight y -1 -2\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_horn_listing(capsys, a2_file):
    code, out, err = run(capsys, ["horn", a2_file])
    assert code == 0 and not err
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[0] == "K\tx:{};y:{}\teul=0"
    assert "K\tx:{1};y:{2}\teul=0" in lines
    assert "K\tx:{1};y:{1}\teul=-1" not in out


def test_horn_essential_and_no_memo(capsys, a2_file):
    code, out, _ = run(capsys, ["horn", a2_file, "--essential"])
    assert code == 0
    assert all("eul=0" in line for line in out.splitlines())
    code, out2, _ = run(capsys, ["horn", a2_file, "--no-memo"])
    assert code == 0
    _, out3, _ = run(capsys, ["horn", a2_file])
    assert out2 == out3


def test_inequalities_records(capsys, a2_file):
    code, out, _ = run(capsys, ["inequalities", a2_file, "--essential"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "EQ\tsum[all] = 0"
    assert "K\tx:{1};y:{2}\teul=0\tsum[x:1,y:2] <= 0" in lines


def test_inequalities_prune(capsys, a2_file):
    code, out, _ = run(capsys, ["inequalities", a2_file, "--prune"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "EQ\tsum[all] = 0"
    assert len(lines) == 4  # three binding constraints survive


def test_check_member(capsys, a2_file, weight_file):
    code, out, _ = run(capsys, ["check", a2_file, "--weights", weight_file])
    assert code == 0
    assert out == "MEMBER\n"


def test_check_not_member(capsys, a2_file, tmp_path):
    wf = tmp_path / "bad.txt"
    wf.write_text("weight x 1 1\nweight y 0 -2\n")
    code, out, _ = run(capsys, ["check", a2_file, "--weights", str(wf)])
    assert code == 1
    assert out.startswith("NOT-MEMBER\t")


def test_check_input_error(capsys, a2_file, tmp_path):
    wf = tmp_path / "bad.txt"
    wf.write_text("weight x 0 1\nweight y 0 0\n")  # not dominant
    code, out, err = run(capsys, ["check", a2_file, "--weights", str(wf)])
    assert code == 2
    assert err.startswith("ERROR 2: ")
    assert len(err.splitlines()) == 1


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertex x 1\narrow x x\n")
    code, _, err = run(capsys, ["horn", str(bad)])
    assert code == 2
    assert err.startswith("ERROR 2: line 2: cycle detected")


def test_cap_error_exit_code(capsys, tmp_path):
    big = tmp_path / "big.quiver"
    labels = " ".join(str(i) for i in range(1, 15))
    big.write_text(f"vertex x {labels}\nvertex y {labels}\n")
    code, _, err = run(capsys, ["horn", str(big), "--cap", "1024"])
    assert code == 3
    assert err.startswith("ERROR 3: ")


def test_sigma_and_sigma_check(capsys, a2_file):
    code, out, _ = run(capsys, ["sigma", a2_file])
    assert code == 0
    assert out.splitlines()[0] == "EQ\tsum[x*2,y*2] = 0"
    code, out, _ = run(capsys, ["sigma-check", a2_file, "--sigma", "x=1,y=-1"])
    assert code == 0 and out == "MEMBER\n"
    code, out, _ = run(capsys, ["sigma-check", a2_file, "--sigma", "x=-1,y=1"])
    assert code == 1 and out == "NOT-MEMBER\n"
    code, _, err = run(capsys, ["sigma-check", a2_file, "--sigma", "x=1"])
    assert code == 2 and err.startswith("ERROR 2: ")


def test_classify_report(capsys, a2_file):
    code, out, _ = run(capsys, ["classify", a2_file, "--K", "x:1;y:2"])
    assert code == 0
    assert out == (
        "K\tx:{1};y:{2}\n"
        "eul\t0\n"
        "admissible\t1\n"
        "covering\t1\n"
        "ressayre\t1\n"
        "horn_element\t1\n"
    )


def test_oracle_report(capsys, a2_file):
    code, out, _ = run(capsys, ["oracle", a2_file, "--K", "x:1;y:2", "--seed", "5"])
    assert code == 0
    assert "ext_min\t0" in out
    assert "det_nonzero\t1" in out
    code, out, _ = run(capsys, ["oracle", a2_file, "--K", "x:1;y:1", "--seed", "5"])
    assert code == 0
    assert "ext_min\t1" in out
    assert "det_nonzero" not in out


def test_oracle_requires_seed(capsys, a2_file):
    with pytest.raises(SystemExit):
        main(["oracle", a2_file, "--K", "x:1;y:2"])


def test_selftest_file(capsys, a2_file):
    code, out, _ = run(capsys, ["selftest", a2_file, "--seed", "7"])
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "AGREEMENTS 16/16"
    assert all(line.endswith("agree=1") for line in lines[:-1])


def test_selftest_sweep(capsys):
    code, out, _ = run(capsys, ["selftest", "--sweep", "2,1,2", "--seed", "7"])
    assert code == 0
    assert out.splitlines()[-1].startswith("AGREEMENTS ")


def test_selftest_needs_input(capsys):
    code, _, err = run(capsys, ["selftest", "--seed", "7"])
    assert code == 2 and err.startswith("ERROR 2: ")


def test_lr_commands(capsys):
    code, out, _ = run(capsys, ["lr", "--lam", "2,1", "--mu", "2,1", "--nu", "3,2,1"])
    assert code == 0 and out == "2\n"
    code, out, _ = run(capsys, ["lr", "--lam", "1", "--mu", "1"])
    assert code == 0
    assert out == "NU\t2\t1\nNU\t1,1\t1\n"


def test_star_check_command(capsys):
    code, out, _ = run(
        capsys,
        ["star-check", "--n", "2", "--s", "2", "--lam", "1", "--lam", "1", "--mu", "1,1"],
    )
    assert code == 0
    assert out == "LR\t1\nCONE\t1\nAGREE\t1\n"
    code, _, err = run(
        capsys,
        ["star-check", "--n", "2", "--s", "2", "--lam", "1", "--mu", "1"],
    )
    assert code == 2 and err.startswith("ERROR 2: ")


@pytest.mark.parametrize(
    "argv",
    [
        ["horn", "{a2}"],
        ["horn", "{a2}", "--essential"],
        ["inequalities", "{a2}", "--essential", "--prune"],
        ["check", "{a2}", "--weights", "{w}"],
        ["sigma", "{a2}"],
        ["sigma-check", "{a2}", "--sigma", "x=1,y=-1"],
        ["classify", "{a2}", "--K", "x:1;y:2"],
        ["oracle", "{a2}", "--K", "x:1;y:2", "--seed", "9", "--trials", "4"],
        ["selftest", "{a2}", "--seed", "9"],
        ["lr", "--lam", "2,1", "--mu", "1,1"],
        ["star-check", "--n", "2", "--s", "2", "--lam", "2", "--lam", "1,1", "--mu", "2,2"],
    ],
)
def test_byte_identical_reruns(capsys, a2_file, weight_file, argv):
    argv = [a.format(a2=a2_file, w=weight_file) for a in argv]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second
