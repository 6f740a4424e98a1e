import json
import random

import pytest

from e8forms.cli import main, parse_record, format_record, ParseError
from e8forms.killing import E8Input
from e8forms.qform import Quaternion

CONSTRUCT = ["construct", "--q1", "-1,-1", "--q2", "1,1", "--q3", "-2,-5",
             "--q4", "3,7", "--c", "-7"]


def test_parse_record_round_trip():
    rng = random.Random(5)
    pool = [x for x in range(-9, 10) if x]
    for _ in range(20):
        inp = E8Input(
            rng.choice(("Q", "R")),
            *[Quaternion(rng.choice(pool), rng.choice(pool)) for _ in range(4)],
            rng.choice(pool),
        )
        assert parse_record(format_record(inp)) == inp


def test_parse_record_errors():
    with pytest.raises(ParseError):
        parse_record("q1=1,1 q2=1,1 q3=1,1 c=2")
    with pytest.raises(ParseError):
        parse_record("q1=1,1 q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=2")
    with pytest.raises(ParseError):
        parse_record("q1=0,1 q2=1,1 q3=1,1 q4=1,1 c=2")
    with pytest.raises(ParseError):
        parse_record("q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=2 hue=4")


def test_construct_single(capsys):
    assert main(CONSTRUCT + ["--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rost_zero"] is True
    assert payload["signature"] == 8
    assert payload["index_hint"] == "split"


def test_construct_output_is_stable(capsys):
    assert main(CONSTRUCT + ["--json"]) == 0
    first = capsys.readouterr().out
    assert main(CONSTRUCT + ["--json"]) == 0
    assert capsys.readouterr().out == first


def test_construct_text_mode(capsys):
    assert main(CONSTRUCT) == 0
    out = capsys.readouterr().out
    assert "redkill" in out and "signature" in out


def test_construct_missing_flag(capsys):
    assert main(["construct", "--q1", "1,1", "--c", "2"]) == 2


def test_construct_zero_entry(capsys):
    bad = ["construct", "--q1", "0,1", "--q2", "1,1", "--q3", "1,1",
           "--q4", "1,1", "--c", "2"]
    assert main(bad) == 2


def test_batch_lines_are_independent(tmp_path, capsys):
    records = tmp_path / "records.txt"
    records.write_text(
        "q1=-1,-1 q2=-1,-1 q3=-1,-1 q4=-1,-1 c=-1 field=R\n"
        "# comment line\n"
        "q1=0,1 q2=1,1 q3=1,1 q4=1,1 c=2\n"
        "q1=1,1 q2=1,1 q3=1,1 q4=1,1 c=1\n"
    )
    code = main(["construct", "--batch", str(records), "--json"])
    assert code == 2
    payload = json.loads(capsys.readouterr().out)
    lines = {entry["line"]: entry for entry in payload}
    assert lines[1]["report"]["real_class"] == "compact"
    assert "error" in lines[3]
    assert lines[4]["report"]["index_hint"] == "split"


def test_tits_command(capsys):
    args = ["tits", "--gamma3", "-1,-1,-1", "--phi3", "-1,-1,-1",
            "--phi5", "-1,-1,-1,-1,-1", "--field", "R", "--json"]
    assert main(args) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["signature"] == -248
    assert payload["rost15_zero"] is True


def test_descent_command(capsys):
    assert main(["descent", "--a", "5", "--c", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["form"] == "6,-30"
    assert payload["witt_equal_expected"] is True
    # square a is rejected as data error
    assert main(["descent", "--a", "4", "--c", "3"]) == 2


def test_crux_command(capsys):
    assert main(["crux", "--a", "5", "--b", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["witt_index"] == 4
    assert payload["hyperbolic"] is True


def test_roots_command(capsys):
    assert main(["roots", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["c4_centralizer"]["type"] == "D4"
    assert all(e["mismatches"] == 0 for e in payload["embeddings"])


def test_appendix_command(capsys):
    assert main(["appendix", "--s", "3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert all(search["none_below_s"] for search in payload["searches"])


def test_verify_paper_suite(capsys):
    assert main(["verify-paper", "--suite", "appendix", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"].get("fail", 0) == 0
    with pytest.raises(SystemExit):
        main(["verify-paper", "--suite", "nonsense"])
