import json

from qschubert import cli


def run(*argv):
    return cli.run(list(argv))


def test_gw_command_golden():
    code, out = run("gw", "--space", "A", "--m", "3", "--n", "3",
                    "--lambda", "3,2,1", "--mu", "3,2,1", "--nu", "2,1", "--d", "1")
    assert (code, out) == (0, "2")


def test_gw_puzzle_method_matches():
    base = run("gw", "--space", "A", "--m", "3", "--n", "3",
               "--lambda", "3,2,1", "--mu", "3,2,1", "--nu", "2,1", "--d", "1")
    via_puzzle = run("gw", "--space", "A", "--m", "3", "--n", "3",
                     "--lambda", "3,2,1", "--mu", "3,2,1", "--nu", "2,1",
                     "--d", "1", "--method", "puzzle")
    assert base == via_puzzle == (0, "2")


def test_qprod_command_golden():
    code, out = run("qprod", "--space", "A", "--m", "3", "--n", "3",
                    "--lambda", "3,2,1", "--mu", "2", "--format", "text")
    assert (code, out) == (0, "s[3,3,2] + q*s[2] + q*s[1,1]")


def test_puzzle_command_golden():
    code, out = run("puzzle", "--type", "1step", "--nw", "101", "--ne", "101",
                    "--s", "011")
    assert (code, out) == (0, "1")


def test_string_command():
    code, out = run("string", "--m", "4", "--n", "5", "--lambda", "4,4,3,1",
                    "--d", "2")
    assert code == 0
    assert out.splitlines() == ["I=101101001", "w=2,5,7,8,1,3,4,6,9",
                                "J2=101202112"]


def test_gw_isotropic_spaces():
    code, out = run("gw", "--space", "LG", "--n", "2", "--lambda", "2,1",
                    "--mu", "2,1", "--nu", "2,1", "--d", "2")
    assert (code, out) == (0, "1")
    code, out = run("gw", "--space", "OG", "--n", "2", "--lambda", "2,1",
                    "--mu", "", "--nu", "", "--d", "0")
    assert (code, out) == (0, "1")
    via_duality = run("gw", "--space", "OG", "--n", "2", "--lambda", "2,1",
                      "--mu", "", "--nu", "", "--d", "0", "--method", "duality")
    assert via_duality == (0, "1")


def test_lr_command_both_methods():
    for method in ("pieri", "puzzle"):
        code, out = run("lr", "--m", "2", "--n", "2", "--lambda", "1",
                        "--mu", "1", "--nu", "1,1", "--method", method)
        assert (code, out) == (0, "1")


def test_empty_partition_spellings():
    for spelling in ("0", ""):
        code, out = run("qprod", "--space", "LG", "--n", "2",
                        "--lambda", spelling, "--mu", "1")
        assert (code, out) == (0, "s[1]")


def test_exit_codes():
    code, _ = run("gw", "--space", "A", "--m", "2", "--n", "2",
                  "--lambda", "3", "--mu", "1", "--nu", "1", "--d", "0")
    assert code == 1  # partition outside the box is a domain error
    code, _ = run("qprod", "--space", "LG", "--n", "2", "--lambda", "2,2",
                  "--mu", "1")
    assert code == 1  # non-strict partition on LG
    code, _ = run("nosuchcommand")
    assert code == 2
    code, _ = run("gw", "--space", "A", "--m", "2", "--n", "2",
                  "--lambda", "1,x", "--mu", "1", "--nu", "1", "--d", "0")
    assert code == 2  # malformed partition text is a usage error
    code, _ = run("gw", "--space", "LG", "--lambda", "1", "--mu", "1",
                  "--nu", "1", "--d", "0")
    assert code == 2  # missing --n
    code, _ = run("verify", "--suite", "nonsense")
    assert code == 2


def test_json_output_round_trips():
    code, out = run("qprod", "--space", "A", "--m", "2", "--n", "2",
                    "--lambda", "2,1", "--mu", "1", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True) == out
    assert parsed["result"] == [{"c": 1, "d": 1, "nu": []},
                                {"c": 1, "d": 0, "nu": [2, 2]}]


def test_output_determinism():
    args = ("qprod", "--space", "OG", "--n", "3", "--lambda", "2,1",
            "--mu", "2", "--format", "json")
    assert run(*args) == run(*args)


def test_cache_round_trip(tmp_path):
    cache = tmp_path / "cache.jsonl"
    args = ("qprod", "--space", "A", "--m", "3", "--n", "3",
            "--lambda", "3,2,1", "--mu", "3,2,1", "--format", "json",
            "--cache", str(cache))
    cold = run(*args)
    assert cache.exists() and cache.read_text().strip()
    warm = run(*args)
    no_cache = run(*args[:-2])
    assert cold == warm == no_cache
    # a second identical run appends nothing new
    assert len(cache.read_text().splitlines()) == 1


def test_cache_ignores_stale_versions(tmp_path):
    cache = tmp_path / "cache.jsonl"
    args = ("qprod", "--space", "A", "--m", "2", "--n", "2",
            "--lambda", "1", "--mu", "1", "--cache", str(cache))
    expected = run(*args)
    lines = cache.read_text().splitlines()
    record = json.loads(lines[0])
    record["version"] = "0.0.0"
    record["result"] = [[[2, 2], 5, 99]]
    cache.write_text(json.dumps(record) + "\n")
    assert run(*args) == expected


def test_verify_command_smoke():
    code, out = run("verify", "--suite", "line-numbers", "--max-n", "2")
    assert code == 0 and out.startswith("PASS")


def test_main_prints(capsys):
    assert cli.main(["puzzle", "--type", "2step", "--nw", "102021",
                     "--ne", "102021", "--s", "010212"]) == 0
    assert capsys.readouterr().out.strip() == "2"
