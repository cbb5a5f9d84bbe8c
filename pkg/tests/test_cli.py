"""End-to-end command tests, run in process through cli.main(argv).

Exit-code contract: 0 all checks pass, 1 a mathematical claim failed,
2 usage or input error. The verify path exercises the full round trip:
gen writes a document, verify reads only that document.
"""

import json

import pytest

from vislink.cli import main
from vislink.docio import read_doc, shutter_input_to_doc, write_doc
from vislink.kernel import point

K3 = (point(-1, -1), point(0, -2), point(1, -1))


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture()
def s22(tmp_path):
    path = str(tmp_path / "s22.json")
    assert run("gen", "--k", 2, "--n", 2, "--seed", 7, "--out", path) == 0
    return path


# ---------------------------------------------------------------------------
# gen


def test_gen_document_and_figure(tmp_path):
    doc_path = str(tmp_path / "c.json")
    svg_path = str(tmp_path / "c.svg")
    assert run("gen", "--k", 2, "--seed", 7, "--out", doc_path, "--svg-out", svg_path) == 0
    doc = read_doc(doc_path)
    assert doc["kind"] == "construction"
    assert doc["k"] == 2 and doc["n"] == 2 and doc["seed"] == 7
    assert len(doc["segments"]) == 6  # the hexagon
    svg = open(svg_path).read()
    assert svg.startswith("<svg") and svg.count("<line") == 6


def test_gen_writes_stdout_without_out_flag(capsys):
    assert run("gen", "--k", 2, "--seed", 1) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "construction"


def test_gen_rejects_bad_parameters(tmp_path):
    assert run("gen", "--k", 1, "--out", str(tmp_path / "x.json")) == 2
    assert run("gen", "--k", 3, "--n", 1, "--out", str(tmp_path / "x.json")) == 2


# ---------------------------------------------------------------------------
# verify


def test_verify_round_trip(s22, tmp_path):
    report = str(tmp_path / "report.json")
    assert run("verify", "--in", s22, "--tuples", 25, "--out", report) == 0
    doc = read_doc(report)
    assert doc["kind"] == "verify-report"
    assert doc["tuples_checked"] == 25
    assert doc["formula_failures"] == 0
    assert doc["no_common_viewer"]["final_empty"] is True
    assert all(w["method"] == "proof-formula" for w in doc["witnesses"])


def test_verify_larger_instance(tmp_path):
    path = str(tmp_path / "s43.json")
    assert run("gen", "--k", 3, "--n", 4, "--seed", 2, "--out", path) == 0
    assert run("verify", "--in", path, "--tuples", 10) == 0


def test_verify_drop_control(s22, tmp_path):
    report = str(tmp_path / "drop.json")
    for i in range(3):
        assert run("verify", "--in", s22, "--drop-target", i, "--out", report) == 0
        doc = read_doc(report)
        assert doc["kind"] == "drop-control-report"
        assert doc["nonempty"] is True
    assert run("verify", "--in", s22, "--drop-target", 99) == 2


def test_verify_tuples_from_document(s22, tmp_path):
    from vislink.docio import construction_from_doc
    from vislink.verify import sample_tuples

    c = construction_from_doc(read_doc(s22))
    ts = sample_tuples(c.complex, c.k, 4, seed=9)
    tdoc = {
        "schema": "1",
        "kind": "tuple-input",
        "tuples": [
            [[f"{p.x.numerator}/{p.x.denominator}", f"{p.y.numerator}/{p.y.denominator}"] for p in t]
            for t in ts
        ],
    }
    tpath = str(tmp_path / "tuples.json")
    write_doc(tpath, tdoc)
    assert run("verify", "--in", s22, "--tuples", tpath) == 0


def test_verify_corrupted_document_fails(s22, tmp_path):
    doc = read_doc(s22)
    a2, b0 = doc["polygon"][4], doc["polygon"][1]
    doc["segments"].append(sorted([a2, b0]))  # re-add a removed diagonal
    bad = str(tmp_path / "corrupt.json")
    write_doc(bad, doc)
    assert run("verify", "--in", bad, "--tuples", 5) == 1


def test_verify_malformed_inputs(s22, tmp_path):
    assert run("verify", "--in", str(tmp_path / "missing.json")) == 2
    doc = read_doc(s22)
    doc["schema"] = "9"
    bad = str(tmp_path / "bad.json")
    write_doc(bad, doc)
    assert run("verify", "--in", bad) == 2
    (tmp_path / "trash.json").write_text("{")
    assert run("verify", "--in", str(tmp_path / "trash.json")) == 2
    assert run("verify", "--in", s22, "--tuples", "-3") == 2


# ---------------------------------------------------------------------------
# shutter


def test_shutter_seeded_run(tmp_path):
    audit = str(tmp_path / "audit.json")
    assert run("shutter", "--k", 2, "--steps", 8, "--seed", 7, "--out", audit) == 0
    doc = read_doc(audit)
    assert doc["kind"] == "shutter-audit"
    assert doc["steps"] == 8
    assert len(doc["records"]) == 9
    assert all(r["viewer_absent"] for r in doc["records"])


def test_shutter_init_only_from_document(tmp_path):
    path = str(tmp_path / "input.json")
    write_doc(path, shutter_input_to_doc(K3, [(point(-1, -3), point(2, -1))]))
    audit = str(tmp_path / "audit.json")
    assert run("shutter", "--in", path, "--steps", 0, "--out", audit) == 0
    doc = read_doc(audit)
    assert doc["steps"] == 0
    assert len(doc["records"]) == 1


def test_shutter_upper_point_is_usage_error(tmp_path):
    path = str(tmp_path / "input.json")
    bad = (point(-1, -1), point(0, -2), point(1, 1))
    write_doc(path, shutter_input_to_doc(bad))
    assert run("shutter", "--in", path) == 2


def test_shutter_requires_k_or_input():
    assert run("shutter") == 2
    assert run("shutter", "--k", 1) == 2
    assert run("shutter", "--k", 2, "--steps", -1) == 2


# ---------------------------------------------------------------------------
# render


def test_render_from_document(s22, tmp_path):
    svg = str(tmp_path / "fig.svg")
    assert run("render", "--in", s22, "--svg-out", svg) == 0
    text = open(svg).read()
    assert text.count("<line") == 6
    assert ">a0<" in text and ">b2<" in text


def test_render_malformed_input(tmp_path):
    assert run("render", "--in", str(tmp_path / "nope.json"), "--svg-out", str(tmp_path / "x.svg")) == 2


# ---------------------------------------------------------------------------
# usage and determinism


def test_usage_errors():
    assert run() == 2
    assert run("frobnicate") == 2
    assert run("gen") == 2  # --k required


def test_byte_determinism(tmp_path):
    pairs = []
    for tag in ("one", "two"):
        doc = str(tmp_path / f"c-{tag}.json")
        svg = str(tmp_path / f"c-{tag}.svg")
        rep = str(tmp_path / f"r-{tag}.json")
        audit = str(tmp_path / f"a-{tag}.json")
        assert run("gen", "--k", 3, "--n", 3, "--seed", 11, "--out", doc, "--svg-out", svg) == 0
        assert run("verify", "--in", doc, "--tuples", 5, "--out", rep) == 0
        assert run("shutter", "--k", 2, "--steps", 5, "--seed", 11, "--out", audit) == 0
        pairs.append((doc, svg, rep, audit))
    for a, b in zip(*pairs):
        assert open(a, "rb").read() == open(b, "rb").read()
