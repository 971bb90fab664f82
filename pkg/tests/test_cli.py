import pytest

from tmbench import build_demo_machines, emit_machine
from tmbench.cli import main


@pytest.fixture
def scanner_file(tmp_path):
    path = tmp_path / "scanner.tm"
    path.write_text(emit_machine(build_demo_machines()[0]))
    return str(path)


def invoke(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_accept(capsys, scanner_file):
    code, out, _ = invoke(capsys, "run", "--machine", scanner_file, "--input", "001")
    assert code == 0
    assert "verdict: accepted" in out
    assert "total_steps: 3" in out


def test_run_exit_status(capsys, scanner_file):
    code, _, _ = invoke(capsys, "run", "--machine", scanner_file,
                        "--input", "0000", "--exit-status")
    assert code == 1
    code, _, _ = invoke(capsys, "run", "--machine", scanner_file,
                        "--input", "001", "--exit-status")
    assert code == 0


def test_run_empty_word_token(capsys, scanner_file):
    code, out, _ = invoke(capsys, "run", "--machine", scanner_file, "--input", "eps")
    assert code == 0
    assert "verdict: rejected" in out
    assert "total_steps: 1" in out


def test_bad_machine_file_is_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.tm"
    path.write_text("states: a\n")
    code, _, err = invoke(capsys, "run", "--machine", str(path), "--input", "0")
    assert code == 2
    assert "error:" in err


def test_unknown_flag_is_exit_2(scanner_file):
    with pytest.raises(SystemExit) as excinfo:
        main(["run", "--machine", scanner_file, "--input", "0", "--frobnicate"])
    assert excinfo.value.code == 2


def test_gen_trie_round_trip(capsys, tmp_path, scanner_file):
    out_path = tmp_path / "trie.tm"
    code, _, err = invoke(capsys, "gen-trie", "--lang", "contains-1",
                          "--n", "2", "--out", str(out_path))
    assert code == 0
    assert "states=9" in err
    code, out, _ = invoke(capsys, "run", "--machine", str(out_path), "--input", "01")
    assert code == 0
    assert "verdict: accepted" in out
    assert "total_steps: 3" in out


def test_gen_trie_finite_language_file(capsys, tmp_path):
    lang = tmp_path / "lang.txt"
    lang.write_text("# tiny language\neps\n01\n")
    out_path = tmp_path / "trie.tm"
    code, _, _ = invoke(capsys, "gen-trie", "--lang", f"@{lang}",
                        "--n", "2", "--out", str(out_path))
    assert code == 0
    for word, expected in (("eps", "accepted"), ("01", "accepted"), ("1", "rejected")):
        _, out, _ = invoke(capsys, "run", "--machine", str(out_path), "--input", word)
        assert f"verdict: {expected}" in out


def test_verify_trie(capsys):
    code, out, _ = invoke(capsys, "verify-trie", "--lang", "palindrome", "--n", "3")
    assert code == 0
    assert "restriction: pass" in out
    assert "step_count: pass" in out


def test_converge(capsys):
    code, out, _ = invoke(capsys, "converge", "--lang", "all", "--k", "2", "--budget", "8")
    assert code == 0
    assert "n_k=2" in out


def test_profile_zeros(capsys, scanner_file):
    code, out, _ = invoke(capsys, "profile", "--machine", scanner_file,
                          "--lengths", "1..4", "--family", "zeros")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "length,max_counted_steps,argmax_input"
    assert lines[2:] == ["1,2,0", "2,3,00", "3,4,000", "4,5,0000"]


def test_profile_ones(capsys, scanner_file):
    code, out, _ = invoke(capsys, "profile", "--machine", scanner_file,
                          "--lengths", "1..4", "--family", "ones")
    rows = [line.split(",") for line in out.splitlines()[2:]]
    # first cell is already '1': one applied transition into the accept state
    assert all(row[1] == "1" for row in rows)


def test_profile_random_is_reproducible(capsys, scanner_file):
    args = ("profile", "--machine", scanner_file, "--lengths", "1..6",
            "--family", "random:count=8,seed=7")
    _, first, _ = invoke(capsys, *args)
    _, second, _ = invoke(capsys, *args)
    assert first == second
    assert "seed=7" in first.splitlines()[0]


def test_profile_all_cap(capsys, scanner_file):
    code, _, err = invoke(capsys, "profile", "--machine", scanner_file,
                          "--lengths", "17..17", "--family", "all")
    assert code == 2
    assert "capped" in err


def test_check_bound_pass_and_fail(capsys, tmp_path):
    trie_path = tmp_path / "trie.tm"
    invoke_args = ("gen-trie", "--lang", "contains-1", "--n", "3",
                   "--out", str(trie_path))
    assert main(list(invoke_args)) == 0
    code, out, _ = invoke(capsys, "check-bound", "--machine", str(trie_path),
                          "--g", "linear:a=1,b=1",
                          "--input", "eps", "--input", "0", "--input", "010")
    assert code == 0
    assert out.splitlines()[0] == "input,length,counted_steps,bound,pass"
    assert "# verdict=pass" in out
    code, out, _ = invoke(capsys, "check-bound", "--machine", str(trie_path),
                          "--g", "identity", "--input", "010")
    assert code == 3
    assert "# verdict=fail" in out


def test_nsearch(capsys, tmp_path):
    checker_path = tmp_path / "checker.tm"
    checker_path.write_text(emit_machine(build_demo_machines()[1].checker))
    code, out, _ = invoke(capsys, "nsearch", "--checker", str(checker_path),
                          "--delivery", "positioned", "--g", "log:a=1,b=1",
                          "--input", "0100")
    assert code == 0
    assert "accepted: true" in out
    assert "witness: 1" in out


def test_nsearch_budget_exceeded(capsys, tmp_path):
    checker_path = tmp_path / "checker.tm"
    checker_path.write_text(emit_machine(build_demo_machines()[1].checker))
    code, _, err = invoke(capsys, "nsearch", "--checker", str(checker_path),
                          "--delivery", "positioned", "--g", "linear:a=5,b=0",
                          "--input", "0000000000", "--budget", "100")
    assert code == 2
    assert "budget" in err


def test_demo_nlogtime_csv(capsys):
    code, out, _ = invoke(capsys, "demo-nlogtime", "--max-n", "4")
    assert code == 0
    assert out.splitlines() == [
        "n,scanner_counted,checker_max_counted,witness_len",
        "1,2,1,0",
        "2,3,1,1",
        "3,4,1,2",
        "4,5,1,2",
    ]


def test_demo_nlogtime_deterministic(capsys):
    _, first, _ = invoke(capsys, "demo-nlogtime", "--max-n", "12")
    _, second, _ = invoke(capsys, "demo-nlogtime", "--max-n", "12")
    assert first == second
