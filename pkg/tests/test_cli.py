import json

import pytest

from bmwgram.cli import main


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


def test_classify_example(capsys):
    rc, out = run(capsys, ["--output", "json", "classify", "--n", "6",
                           "--r=-q", "--e", "7", "--p", "0"])
    assert rc == 0
    data = json.loads(out)
    assert data["singular"] is True and data["clause"] == "main.1.2.a"


def test_gram_det_example(capsys):
    rc, out = run(capsys, ["gram", "--n", "3", "--f", "1",
                           "--lambda", "(1)", "--subst", "r=q^-1", "--det"])
    assert rc == 0
    assert "(q^4 + 1)" in out


def test_dims_example(capsys):
    rc, out = run(capsys, ["dims", "--n", "3"])
    assert rc == 0
    assert "sum of squares = 15" in out


def test_dims_csv(capsys):
    rc, out = run(capsys, ["--output", "csv", "dims", "--n", "3"])
    assert rc == 0
    assert out.splitlines()[0] == "f,lambda,dim"


def test_classify_brauer(capsys):
    rc, out = run(capsys, ["--output", "json", "classify-brauer",
                           "--n", "5", "--delta", "3"])
    assert rc == 0
    assert json.loads(out)["singular"] is True


def test_oracle_command(capsys):
    rc, out = run(capsys, ["--output", "json", "oracle", "--n", "3",
                           "--p", "5", "--q0", "2", "--r0", "3"])
    assert rc == 0
    data = json.loads(out)
    assert data["singular"] is False


def test_gram_rank(capsys):
    rc, out = run(capsys, ["gram", "--n", "3", "--f", "1", "--lambda", "(1)",
                           "--rank", "--p", "5", "--q0", "2", "--r0", "3"])
    assert rc == 0
    assert "rank = 3 of 3" in out


def test_gram_json_roundtrip(capsys):
    rc, out = run(capsys, ["--output", "json", "gram", "--n", "2",
                           "--f", "1", "--lambda", "()"])
    assert rc == 0
    from bmwgram.cellmod import GramMatrix
    g = GramMatrix.from_json(json.loads(out))
    assert g.dim() == 1


def test_domain_error_exit_code(capsys):
    rc = main(["gram", "--n", "3", "--f", "1", "--lambda", "(2)"])
    assert rc == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["classify"])
    assert err.value.code == 2


def test_sweep_deterministic_under_threads(capsys):
    rc1, out1 = run(capsys, ["--output", "csv", "sweep", "--nmax", "2",
                             "--primes", "5"])
    rc2, out2 = run(capsys, ["--output", "csv", "--threads", "4", "sweep",
                             "--nmax", "2", "--primes", "5"])
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_cache_warm(tmp_path, capsys):
    rc, out = run(capsys, ["--cache-dir", str(tmp_path), "cache",
                           "--warm", "2"])
    assert rc == 0
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    rc, out = run(capsys, ["--cache-dir", str(tmp_path), "cache", "--info"])
    assert rc == 0 and files[0].name in out


def test_verify_dims_suite(capsys):
    rc, out = run(capsys, ["verify", "--suite", "dims"])
    assert rc == 0
    assert "PASS" in out
