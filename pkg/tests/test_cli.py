import pytest

from wpmx.cli import run

from conftest import EXAMPLE_PWM


@pytest.fixture
def pwm(tmp_path):
    p = tmp_path / "example.pwm"
    p.write_text(EXAMPLE_PWM)
    return str(p)


def out_of(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_wpt(capsys, pwm):
    assert out_of(capsys, ["wpt", "-i", pwm, "-z", "4"])[:2] == (0, "5 1 5 3 3 1 1 3 1 1\n")


def test_shortest_covers(capsys, pwm):
    code, out, _ = out_of(capsys, ["covers", "-i", pwm, "-z", "4", "--shortest", "--materialize"])
    assert (code, out) == (0, "aba\n")


def test_cover_report(capsys, pwm):
    code, out, _ = out_of(capsys, ["covers", "-i", pwm, "-z", "4", "--materialize"])
    assert (code, out) == (0, "aba range=[3..3]\naba\n")


def test_query_modes(capsys, pwm):
    assert out_of(capsys, ["query", "-i", pwm, "-z", "4", "-p", "aba", "--mode", "report"])[1] == "aba: 1 3 5 8\n"
    assert out_of(capsys, ["query", "-i", pwm, "-z", "4", "-p", "aba", "--mode", "count"])[1] == "aba: 4\n"
    assert out_of(capsys, ["query", "-i", pwm, "-z", "4", "-p", "bbb", "--mode", "exists"])[1] == "bbb: true\n"
    assert out_of(capsys, ["query", "-i", pwm, "-z", "2", "-p", "bbb", "--mode", "exists"])[1] == "bbb: false\n"


def test_build_and_batch_query(capsys, pwm, tmp_path):
    idx = str(tmp_path / "ex.widx")
    assert out_of(capsys, ["build", "-i", pwm, "-z", "4", "-o", idx])[0] == 0
    pats = tmp_path / "pats.txt"
    pats.write_text("aba\nabab\nzz\n")
    code, out, _ = out_of(capsys, ["query", "-x", idx, "--patterns-file", str(pats)])
    assert code == 0
    assert out == "aba: 1 3 5 8\nabab: 1 3\nzz:\n"


def test_corrupted_index(capsys, pwm, tmp_path):
    idx = tmp_path / "ex.widx"
    run(["build", "-i", pwm, "-z", "4", "-o", str(idx)])
    data = bytearray(idx.read_bytes())
    data[-20] ^= 0xFF
    idx.write_bytes(bytes(data))
    code, out, err = out_of(capsys, ["query", "-x", str(idx), "-p", "a"])
    assert code == 1 and out == "" and "CRC" in err


def test_validate(capsys, pwm, tmp_path):
    assert out_of(capsys, ["validate", "-i", pwm])[:2] == (0, "ok: n=10 alphabet=ab\n")
    bad = tmp_path / "bad.pwm"
    bad.write_text("pwm v1\nalphabet: ab\nlength: 1\n1 a:0.3 b:0.3\n")
    code, out, err = out_of(capsys, ["validate", "-i", str(bad)])
    assert code == 1 and "sum" in err


def test_usage_errors(capsys, pwm):
    assert run([]) == 2
    assert run(["wpt", "-i", pwm]) == 2
    assert run(["wpt", "-i", pwm, "-z", "0.5"]) == 2
    assert run(["frobnicate"]) == 2
    capsys.readouterr()


def test_domain_errors(capsys, pwm, tmp_path):
    assert out_of(capsys, ["wpt", "-i", str(tmp_path / "missing.pwm"), "-z", "4"])[0] == 1
    assert out_of(capsys, ["query", "-i", pwm, "-p", "a"])[0] == 1


def test_gen_is_deterministic(capsys, tmp_path):
    a = out_of(capsys, ["gen", "-n", "30", "-s", "acgt", "--seed", "5", "--uncertain-frac", "0.4"])[1]
    b = out_of(capsys, ["gen", "-n", "30", "-s", "acgt", "--seed", "5", "--uncertain-frac", "0.4"])[1]
    assert a == b and a.startswith("pwm v1\nalphabet: acgt\nlength: 30\n")
    f = tmp_path / "g.pwm"
    assert run(["gen", "-n", "8", "-s", "ab", "-o", str(f)]) == 0
    assert out_of(capsys, ["validate", "-i", str(f)])[0] == 0


def test_selftest(capsys):
    code, out, _ = out_of(capsys, ["selftest", "-n", "1", "--sigma", "1", "-z", "1", "--cases", "1", "--seed", "0"])
    assert code == 0 and "failures: 0" in out
    code, out, _ = out_of(capsys, ["selftest", "-n", "6", "--sigma", "2", "--cases", "20", "--max-pattern", "3"])
    assert code == 0 and "instances: 20" in out


def test_dumps(capsys, pwm):
    code, out, _ = out_of(capsys, ["dump-trie", "-i", pwm, "-z", "4"])
    assert code == 0 and out.splitlines()[0] == "0 0 - -1 0 1 0 0" and len(out.splitlines()) == 27
    code, out, _ = out_of(capsys, ["dump-st", "-i", pwm, "-z", "4"])
    assert code == 0 and out.startswith("0 0 -1 edge=(0,0)")


def test_bench(capsys):
    code, out, _ = out_of(capsys, ["bench", "-n", "50", "-z", "2", "--queries", "10"])
    lines = out.splitlines()
    assert code == 0 and lines[0].split("\t") == ["n", "z", "build_s", "index_nodes", "queries_per_s"]
    assert lines[1].split("\t")[:2] == ["50", "2"]


def test_output_is_deterministic(capsys, pwm):
    a = out_of(capsys, ["dump-st", "-i", pwm, "-z", "4"])[1]
    b = out_of(capsys, ["dump-st", "-i", pwm, "-z", "4"])[1]
    assert a == b
