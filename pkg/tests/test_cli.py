import json
from pathlib import Path

import pytest

import limitlab as ll
from limitlab import jsonio
from limitlab.cli import main

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"

EIGHTHS = "0/8,1/8,2/8,3/8,4/8,5/8,6/8,7/8,1"

GOLDEN_RUNS = [
    (
        "validate.json",
        ["validate", "--input", "set_family_bad.jsonl"],
        1,
    ),
    ("liminf.json", ["liminf", "--input", "open_family.jsonl"], 0),
    ("cover_sets.json", ["cover-sets", "--input", "set_family.jsonl"], 0),
    (
        "cover_semimeasure.json",
        ["cover-semimeasure", "--input", "semimeasure_flat.jsonl", "--grid", EIGHTHS],
        0,
    ),
    (
        "cover_tree.json",
        ["cover-tree", "--input", "semimeasure_tree.jsonl", "--grid", EIGHTHS],
        0,
    ),
    ("cover_open.json", ["cover-open", "--input", "open_family.jsonl", "--lmax", "2"], 0),
    (
        "cover_open_strong.json",
        ["cover-open-strong", "--input", "open_family_gran.jsonl", "--epsilon-prime", "3/4"],
        0,
    ),
    ("decompose.json", ["decompose", "--input", "open_family_gran.jsonl"], 0),
    (
        "lowbasis.json",
        ["lowbasis", "--input", "forcing.json", "--witness-length", "2"],
        0,
    ),
    ("complexity.json", ["complexity", "--lmax", "2", "--nmax", "2"], 0),
    (
        "deficiency.json",
        ["deficiency", "--input", "table.json", "--omega", "0000", "--horizon", "4", "--c", "1"],
        0,
    ),
    (
        "deficiency_family.jsonl",
        ["deficiency-family", "--input", "table.json", "--c", "0", "--nmin", "2", "--nmax", "4"],
        0,
    ),
    (
        "complexity_bounds.json",
        ["complexity-bounds", "--input", "open_family_levels.jsonl", "--c", "1"],
        0,
    ),
    (
        "randomness.json",
        ["randomness-report", "--input", "table.json", "--omega", "0000", "--c", "0"],
        0,
    ),
    ("freq.json", ["freq", "--input", "trace.json"], 0),
    (
        "trace_family.jsonl",
        ["trace-to-family", "--input", "trace.json", "--nmax", "4", "--grid", "0,1/4,1/2,3/4,1"],
        0,
    ),
]


def run(argv, tmp_path, name="out"):
    out = tmp_path / name
    code = main(argv + ["--output", str(out)])
    return code, out.read_bytes() if out.exists() else b""


def with_input_paths(argv):
    fixed = []
    for i, piece in enumerate(argv):
        if i > 0 and argv[i - 1] == "--input":
            fixed.append(str(FIXTURES / piece))
        else:
            fixed.append(piece)
    return fixed


@pytest.mark.parametrize("golden_name,argv,want_code", GOLDEN_RUNS)
def test_golden_outputs_are_byte_identical(golden_name, argv, want_code, tmp_path):
    code, body = run(with_input_paths(argv), tmp_path)
    assert code == want_code
    assert body == (GOLDEN / golden_name).read_bytes()
    again_code, again = run(with_input_paths(argv), tmp_path, name="out2")
    assert again_code == code and again == body


def test_validate_ok_exits_zero(tmp_path):
    code, body = run(["validate", "--input", str(FIXTURES / "set_family.jsonl")], tmp_path)
    assert code == 0
    assert json.loads(body) == {"valid": True, "problems": []}


def test_validate_bad_names_the_violation(tmp_path, capsys):
    code, body = run(["validate", "--input", str(FIXTURES / "set_family_bad.jsonl")], tmp_path)
    assert code == 1
    report = json.loads(body)
    assert not report["valid"]
    assert "capacity" in report["problems"][0] and "n=0" in report["problems"][0]
    assert "n=0" in capsys.readouterr().err


def test_cover_open_output_values(tmp_path):
    code, body = run(
        ["cover-open", "--input", str(FIXTURES / "open_family.jsonl"), "--lmax", "2"],
        tmp_path,
    )
    assert code == 0
    payload = json.loads(body)
    assert payload["intervals"] == ["0"] and payload["measure"] == "1/2"


def test_lowbasis_output_values(tmp_path):
    code, body = run(
        ["lowbasis", "--input", str(FIXTURES / "forcing.json"), "--witness-length", "2"],
        tmp_path,
    )
    assert code == 0
    payload = json.loads(body)
    assert payload["answers"] == [["T1", "halts"], ["T2", "diverges"]]
    assert payload["witness"] == "11"


def test_parse_error_exits_two(tmp_path):
    assert main(["cover-open", "--input", "/does/not/exist", "--lmax", "2"]) == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text("not json\n")
    assert main(["validate", "--input", str(bad)]) == 2


def test_missing_required_flag_exits_two():
    assert main(["cover-open", "--input", str(FIXTURES / "open_family.jsonl")]) == 2


def test_wrong_family_kind_exits_two():
    assert (
        main(
            [
                "cover-tree",
                "--input",
                str(FIXTURES / "semimeasure_flat.jsonl"),
                "--grid",
                EIGHTHS,
            ]
        )
        == 2
    )


def test_invalid_presentation_exits_one(tmp_path):
    code = main(
        [
            "cover-sets",
            "--input",
            str(FIXTURES / "set_family_bad.jsonl"),
            "--output",
            str(tmp_path / "x"),
        ]
    )
    assert code == 1


def test_csv_where_supported(tmp_path):
    code, body = run(
        [
            "deficiency",
            "--input",
            str(FIXTURES / "table.json"),
            "--omega",
            "0000",
            "--horizon",
            "4",
            "--c",
            "1",
            "--format",
            "csv",
        ],
        tmp_path,
    )
    assert code == 0
    lines = body.decode().splitlines()
    assert lines[0] == "prefix,d,dbar"
    assert lines[-1] == "0000,1,1"


def test_epsilon_flag_overrides_header(tmp_path):
    code, body = run(
        [
            "validate",
            "--input",
            str(FIXTURES / "open_family.jsonl"),
            "--epsilon",
            "1/8",
        ],
        tmp_path,
    )
    assert code == 1
    assert "measure bound" in json.loads(body)["problems"][0]


def test_k_flag_overrides_header(tmp_path):
    code, body = run(
        ["validate", "--input", str(FIXTURES / "set_family.jsonl"), "--k", "1"],
        tmp_path,
    )
    assert code == 1
    assert "capacity" in json.loads(body)["problems"][0]


def test_csv_unsupported_exits_two():
    assert (
        main(
            [
                "cover-sets",
                "--input",
                str(FIXTURES / "set_family.jsonl"),
                "--format",
                "csv",
            ]
        )
        == 2
    )


def test_emitted_event_logs_reparse_and_revalidate(tmp_path):
    family_path = tmp_path / "family.jsonl"
    assert (
        main(
            [
                "trace-to-family",
                "--input",
                str(FIXTURES / "trace.json"),
                "--nmax",
                "4",
                "--grid",
                "0,1/4,1/2,3/4,1",
                "--output",
                str(family_path),
            ]
        )
        == 0
    )
    assert main(["validate", "--input", str(family_path)]) == 0
    parsed = jsonio.parse_presentation(family_path.read_text())
    assert jsonio.dump_presentation(parsed) == family_path.read_text()


def test_deficiency_family_feeds_cover_open(tmp_path):
    family_path = tmp_path / "deficiency.jsonl"
    assert (
        main(
            [
                "deficiency-family",
                "--input",
                str(FIXTURES / "table.json"),
                "--c",
                "0",
                "--nmin",
                "2",
                "--nmax",
                "4",
                "--output",
                str(family_path),
            ]
        )
        == 0
    )
    out = tmp_path / "cover.json"
    assert (
        main(
            [
                "cover-open",
                "--input",
                str(family_path),
                "--lmax",
                "4",
                "--output",
                str(out),
            ]
        )
        == 0
    )
    payload = json.loads(out.read_text())
    region = ll.normalize(payload["intervals"])
    assert region.covers_string("0000") and region.covers_string("1111")


def test_depth_cap_env_applies_to_validation(tmp_path, monkeypatch):
    monkeypatch.setenv("LIMITLAB_MAX_DEPTH", "2")
    deep = tmp_path / "deep.jsonl"
    deep.write_text(
        '{"type": "open-family", "epsilon": "1/2", "granularity": null}\n'
        '{"stage": 0, "kind": "tail", "index": 0, "interval": "000"}\n'
    )
    code, body = run(["validate", "--input", str(deep)], tmp_path)
    assert code == 1
    assert "deeper" in json.loads(body)["problems"][0]


def test_line_format_table_parses():
    table = jsonio.parse_complexity_table((FIXTURES / "table_lines.txt").read_text())
    assert table.mode == "conditional"
    assert table.value("") == 2
    assert table.value("0") == 3


def test_table_json_round_trip():
    table = jsonio.parse_complexity_table((FIXTURES / "table.json").read_text())
    emitted = jsonio.dumps_artifact(jsonio.complexity_table_to_json(table))
    assert jsonio.parse_complexity_table(emitted).entries == table.entries


def test_presentation_round_trip_all_kinds():
    for name in (
        "set_family.jsonl",
        "semimeasure_flat.jsonl",
        "semimeasure_tree.jsonl",
        "open_family.jsonl",
        "open_family_gran.jsonl",
    ):
        text = (FIXTURES / name).read_text()
        parsed = jsonio.parse_presentation(text)
        assert jsonio.parse_presentation(jsonio.dump_presentation(parsed)) == parsed
