"""Command-line interface: documents, reports, certificates, exit codes."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from ideals3.cli import main, parse_scalar_argument
from ideals3.report import (
    build_report,
    document_from_tensor,
    parse_tensor_document,
    tensor_from_document,
)
from ideals3.errors import ParseError
from ideals3.families import build, family_spec
from ideals3.scalar import FieldMode, GaussianRational

F = Fraction


def _write_family_doc(tmp_path, name, filename=None, **params):
    tensor = build(family_spec(name, FieldMode.REAL, **params))
    doc = document_from_tensor(tensor, name=name)
    from ideals3.report import document_to_json

    path = tmp_path / (filename or f"{name}.json")
    path.write_text(json.dumps(document_to_json(doc)))
    return path


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestScalarArguments:
    def test_rational_forms(self):
        assert parse_scalar_argument("3", FieldMode.REAL) == F(3)
        assert parse_scalar_argument("-7/2", FieldMode.REAL) == F(-7, 2)
        assert parse_scalar_argument(" 5/10 ", FieldMode.REAL) == F(1, 2)

    def test_complex_textual_forms(self):
        cases = {
            "i": GaussianRational(F(0), F(1)),
            "-i": GaussianRational(F(0), F(-1)),
            "2i": GaussianRational(F(0), F(2)),
            "-3/4i": GaussianRational(F(0), F(-3, 4)),
            "1+i": GaussianRational(F(1), F(1)),
            "1/2-3/4i": GaussianRational(F(1, 2), F(-3, 4)),
            "-2-i": GaussianRational(F(-2), F(-1)),
            "5": GaussianRational(F(5), F(0)),
        }
        for text, expected in cases.items():
            assert parse_scalar_argument(text, FieldMode.COMPLEX) == expected

    def test_i_forms_rejected_in_real_mode(self):
        with pytest.raises(ParseError):
            parse_scalar_argument("i", FieldMode.REAL)

    def test_garbage_rejected(self):
        for bad in ("", "x", "1.5", "1/0", "i+1"):
            with pytest.raises(ParseError):
                parse_scalar_argument(bad, FieldMode.COMPLEX)


class TestDocumentParsing:
    def test_minimal_document_defaults_to_real(self):
        doc = parse_tensor_document({"omega": [[["0"] * 3] * 3] * 3})
        assert doc.mode is FieldMode.REAL
        assert tensor_from_document(doc).is_zero()

    def test_missing_omega_rejected(self):
        with pytest.raises(ParseError):
            parse_tensor_document({"field": "real"})

    def test_unknown_key_rejected(self):
        with pytest.raises(ParseError):
            parse_tensor_document({"omega": [[["0"] * 3] * 3] * 3, "extra": 1})

    def test_bad_scalar_reports_path(self):
        data = {"omega": [[["0"] * 3] * 3] * 3}
        data["omega"] = json.loads(json.dumps(data["omega"]))
        data["omega"][1][2][0] = "oops"
        with pytest.raises(ParseError, match=r"omega\[1\]\[2\]\[0\]"):
            parse_tensor_document(data)

    def test_re_im_objects_need_complex_mode(self):
        data = {"omega": [[["0"] * 3] * 3] * 3}
        data["omega"] = json.loads(json.dumps(data["omega"]))
        data["omega"][0][0][0] = {"re": "1", "im": "2"}
        with pytest.raises(ParseError):
            parse_tensor_document(data)
        doc = parse_tensor_document(dict(data, field="complex"))
        assert doc.omega[0][0][0] == GaussianRational(F(1), F(2))

    def test_field_conflict_with_requested_mode(self):
        data = {"field": "complex", "omega": [[["0"] * 3] * 3] * 3}
        with pytest.raises(ParseError, match="conflicts"):
            parse_tensor_document(data, FieldMode.REAL)

    def test_booleans_rejected(self):
        data = {"omega": json.loads(json.dumps([[["0"] * 3] * 3] * 3))}
        data["omega"][0][0][0] = True
        with pytest.raises(ParseError):
            parse_tensor_document(data)


class TestClassify:
    def test_rank4_preset_report(self, capsys):
        code, out, _ = _run(capsys, ["classify", "--family", "section7-rank4"])
        assert code == 0
        report = json.loads(out)
        iv = report["two_dimensional"]["type_IV"]["points"]
        assert [(p["x"]["exact"], p["y"]["exact"]) for p in iv] == [
            ("0", "1"),
            ("1", "1"),
        ]
        assert report["two_dimensional"]["type_I"]["present"] is False
        assert report["two_dimensional"]["count"] == 2
        assert all(
            p["verification"] == "passed" for p in report["two_dimensional"]["planes"]
        )

    def test_all_ones_infinite_one_dim_no_type_I(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "all-ones")
        code, out, _ = _run(capsys, ["classify", str(path)])
        assert code == 0
        report = json.loads(out)
        assert report["one_dimensional"]["finite"] is False
        assert report["one_dimensional"]["family"]["whole_space"] is False
        assert report["two_dimensional"]["type_I"]["present"] is False

    def test_zero_tensor_note(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "zero")
        code, out, _ = _run(capsys, ["classify", str(path)])
        assert code == 0
        report = json.loads(out)
        assert report["notes"] == ["zero product: every subspace is an ideal"]
        assert report["one_dimensional"]["family"]["whole_space"] is True

    def test_malformed_json_exits_2_with_position(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"omega": [[[1,')
        code, _, err = _run(capsys, ["classify", str(path)])
        assert code == 2
        assert "line 1" in err and "column" in err

    def test_bad_scalar_exits_2_with_path(self, tmp_path, capsys):
        data = {"omega": json.loads(json.dumps([[["0"] * 3] * 3] * 3))}
        data["omega"][2][0][1] = "nope"
        path = tmp_path / "badscalar.json"
        path.write_text(json.dumps(data))
        code, _, err = _run(capsys, ["classify", str(path)])
        assert code == 2
        assert "omega[2][0][1]" in err

    def test_byte_identical_reports(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "section7-rank5")
        code1, out1, _ = _run(capsys, ["classify", str(path)])
        code2, out2, _ = _run(capsys, ["classify", str(path)])
        assert code1 == code2 == 0
        assert out1 == out2

    def test_check_round_trip(self, tmp_path, capsys):
        path = _write_family_doc(
            tmp_path, "diagonal-idempotent", variant="i"
        )
        code, out, _ = _run(capsys, ["classify", str(path), "--check"])
        assert code == 0
        report = json.loads(out)
        assert report["one_dimensional"]["count"] == 3

    def test_check_with_algebraic_parameters(self, tmp_path, capsys):
        data = {"omega": json.loads(json.dumps([[["0"] * 3] * 3] * 3))}
        data["omega"][0][0][1] = "1"
        data["omega"][0][1][0] = "2"
        data["omega"][1][0][0] = "2"
        data["omega"][1][1][1] = "2"
        path = tmp_path / "sqrt2.json"
        path.write_text(json.dumps(data))
        code, out, _ = _run(capsys, ["classify", str(path), "--check"])
        assert code == 0
        report = json.loads(out)
        roots = report["two_dimensional"]["type_II"]["roots"]
        assert [r["minimal_polynomial"] for r in roots] == [["-2", "0", "1"]] * 2
        for r in roots:
            region = r["isolating_region"]
            assert F(region["lo"]) < F(region["hi"])

    def test_quotient_table(self, capsys):
        code, out, _ = _run(
            capsys, ["classify", "--family", "section7-rank4", "--quotient", "1"]
        )
        assert code == 0
        report = json.loads(out)
        q = report["quotient"]
        assert q["ideal_index"] == 1
        assert q["dimension"] == 1
        assert q["coset_basis"] == ["e3"]

    def test_quotient_index_out_of_range_exits_2(self, capsys):
        code, _, err = _run(
            capsys, ["classify", "--family", "section7-rank4", "--quotient", "9"]
        )
        assert code == 2
        assert "out of range" in err

    def test_family_and_input_conflict(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "zero")
        code, _, err = _run(
            capsys, ["classify", str(path), "--family", "zero"]
        )
        assert code == 2

    def test_text_format(self, capsys):
        code, out, _ = _run(
            capsys,
            ["classify", "--family", "section7-rank4", "--format", "text"],
        )
        assert code == 0
        assert "type IV: (x, y) = (0.0, 1.0) [verified]" in out
        assert "type IV: (x, y) = (1.0, 1.0) [verified]" in out

    def test_family_with_params(self, capsys):
        code, out, _ = _run(
            capsys,
            [
                "classify",
                "--family",
                "dime1",
                "--param",
                "omega=0",
                "--param",
                "omega_tilde=0",
                "--param",
                "e3sq=1,0,0",
                "--format",
                "json",
            ],
        )
        assert code == 0
        report = json.loads(out)
        assert report["one_dimensional"]["finite"] is False
        assert report["annihilator"]["dimension"] == 2

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = _run(
            capsys,
            ["classify", "--family", "zero", "--output", str(target)],
        )
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())["notes"]


class TestVerify:
    def test_all_ones_line_passes(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "all-ones")
        code, out, _ = _run(
            capsys, ["verify", str(path), "--line", "1,1,-2", "--format", "text"]
        )
        assert code == 0
        assert "verdict: ideal" in out

    def test_zero_tensor_everything_passes(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "zero")
        for spec in (
            ["--line", "3,-1/2,7"],
            ["--plane", "I"],
            ["--plane", "IV", "--x", "2/3", "--y", "-5"],
        ):
            code, out, _ = _run(capsys, ["verify", str(path)] + spec)
            assert code == 0
            assert json.loads(out)["ideal"] is True

    def test_failing_plane_shows_nonzero_certificate(self, tmp_path, capsys):
        path = _write_family_doc(
            tmp_path, "diagonal-idempotent", variant="iii"
        )
        code, out, _ = _run(capsys, ["verify", str(path), "--plane", "I"])
        assert code == 1
        payload = json.loads(out)
        assert payload["ideal"] is False
        values = [c["value"] for c in payload["certificate"]]
        assert "1" in values

    def test_type_I_passes_when_products_avoid_e3(self, tmp_path, capsys):
        path = _write_family_doc(
            tmp_path, "diagonal-idempotent", variant="i"
        )
        code, out, _ = _run(capsys, ["verify", str(path), "--plane", "I"])
        assert code == 0
        assert json.loads(out)["ideal"] is True

    def test_malformed_line_exits_2(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "zero")
        for spec in (
            ["--line", "1,2"],
            ["--line", "0,0,0"],
            ["--plane", "V"],
            ["--plane", "I", "--x", "1"],
            ["--plane", "IV", "--x", "1", "--y", "0"],
            ["--line", "1,1,1", "--plane", "I"],
            [],
        ):
            code, _, err = _run(capsys, ["verify", str(path)] + spec)
            assert code == 2, spec

    def test_check_flag(self, tmp_path, capsys):
        path = _write_family_doc(tmp_path, "all-ones")
        code, _, _ = _run(
            capsys, ["verify", str(path), "--line", "1,1,-2", "--check"]
        )
        assert code == 0

    def test_round_trip_reverify_from_report(self, tmp_path, capsys):
        """Every ideal listed in a classify report passes cmd_verify."""
        path = _write_family_doc(tmp_path, "section7-rank4")
        code, out, _ = _run(capsys, ["classify", str(path)])
        assert code == 0
        report = json.loads(out)
        checked = 0
        for entry in report["ideals"]:
            if entry["kind"] == "line":
                coords = [c["exact"] for c in entry["coordinates"]]
                argv = ["verify", str(path), "--line", ",".join(coords)]
            else:
                argv = ["verify", str(path), "--plane", entry["type"]]
                for key in ("x", "y"):
                    if key in entry:
                        argv += [f"--{key}", entry[key]["exact"]]
            code, _, _ = _run(capsys, argv)
            assert code == 0, argv
            checked += 1
        assert checked == len(report["ideals"]) == 3


class TestBatch:
    def _make_variants(self, tmp_path):
        d = tmp_path / "docs"
        d.mkdir()
        for prefix, variant in (("a", "i"), ("b", "ii"), ("c", "iii")):
            _write_family_doc(
                d, "diagonal-idempotent",
                filename=f"{prefix}_{variant}.json", variant=variant,
            )
        return d

    def test_directory_summary_counts(self, tmp_path, capsys):
        d = self._make_variants(tmp_path)
        code, out, _ = _run(capsys, ["batch", str(d)])
        assert code == 0
        body = json.loads(out)
        assert [s["one_dimensional"] for s in body["summary"]] == [3, 2, 1]
        assert body["failed"] == 0
        assert sorted(body["reports"]) == ["a_i.json", "b_ii.json", "c_iii.json"]

    def test_manifest_ordering_and_failure(self, tmp_path, capsys):
        d = self._make_variants(tmp_path)
        (d / "z_bad.json").write_text("{nope")
        manifest = tmp_path / "manifest.txt"
        manifest.write_text(
            "\n".join(["z_bad.json", "c_iii.json", "a_i.json", "", "# comment"])
        )
        # manifest entries resolve relative to the manifest's directory
        manifest2 = d / "manifest.txt"
        manifest2.write_text(manifest.read_text())
        code, out, _ = _run(capsys, ["batch", str(manifest2)])
        assert code == 1
        body = json.loads(out)
        assert [s["file"] for s in body["summary"]] == [
            "a_i.json",
            "c_iii.json",
            "z_bad.json",
        ]
        assert body["summary"][-1]["status"] == "failed"
        assert body["failed"] == 1

    def test_empty_manifest_exit_0(self, tmp_path, capsys):
        manifest = tmp_path / "empty.txt"
        manifest.write_text("")
        code, out, _ = _run(capsys, ["batch", str(manifest)])
        assert code == 0
        body = json.loads(out)
        assert body["summary"] == [] and body["processed"] == 0

    def test_text_table(self, tmp_path, capsys):
        d = self._make_variants(tmp_path)
        code, out, _ = _run(capsys, ["batch", str(d), "--format", "text"])
        assert code == 0
        assert "processed 3, failed 0" in out
        assert "== a_i.json ==" in out


class TestFamilySubcommand:
    def test_list(self, capsys):
        code, out, _ = _run(capsys, ["family", "--list"])
        assert code == 0
        names = out.splitlines()
        assert "section7-rank4" in names and names == sorted(names)

    def test_materialized_document_classifies(self, tmp_path, capsys):
        code, out, _ = _run(capsys, ["family", "section7-rank3"])
        assert code == 0
        path = tmp_path / "rank3.json"
        path.write_text(out)
        code, out2, _ = _run(capsys, ["classify", str(path)])
        assert code == 0
        report = json.loads(out2)
        families = report["two_dimensional"]["type_IV"]["families"]
        assert len(families) == 1
        assert families[0]["shape"] == "fixed-y"
        assert families[0]["value"]["exact"] == "1"

    def test_unknown_family_exits_2(self, capsys):
        code, _, err = _run(capsys, ["family", "no-such"])
        assert code == 2

    def test_missing_name_exits_2(self, capsys):
        code, _, _ = _run(capsys, ["family"])
        assert code == 2


class TestConsoleEntryPoint:
    def test_module_invocation(self, tmp_path):
        doc = tmp_path / "zero.json"
        doc.write_text(json.dumps({"omega": [[["0"] * 3] * 3] * 3}))
        proc = subprocess.run(
            [sys.executable, "-m", "ideals3.cli", "classify", str(doc)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["notes"] == ["zero product: every subspace is an ideal"]

    def test_stdin_input(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ideals3.cli", "classify", "-", "--format", "text"],
            input=json.dumps({"omega": [[["0"] * 3] * 3] * 3}),
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "zero product" in proc.stdout


class TestReportInternals:
    def test_inconsistency_exit_3(self, capsys, monkeypatch):
        import ideals3.cli as cli_mod
        from ideals3.errors import InconsistencyDetected

        def boom(doc, quotient_index=None):
            raise InconsistencyDetected("synthetic certificate")

        monkeypatch.setattr(cli_mod, "build_report", boom)
        code = cli_mod.main(["classify", "--family", "zero"])
        captured = capsys.readouterr()
        assert code == 3
        assert "synthetic certificate" in captured.err

    def test_build_report_quotient_embedding(self):
        doc = document_from_tensor(
            build(family_spec("diagonal-idempotent", variant="i"))
        )
        report = build_report(doc, quotient_index=0)
        assert report["quotient"]["dimension"] == 2
        assert report["quotient"]["ideal_index"] == 0
