import json

import pytest

from mckayq import catalog
from mckayq.cli import main
from mckayq.errors import UnknownEntry
from mckayq.pipeline import Options, build_report, parse_job, run_job


def test_catalog_list_contains_required_families(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    for needle in (
        "typeCL-n1", "typeCL-n4", "typeC-n2", "typeBC-n1", "typeG22",
        "nongor", "d3-gor-n2", "d3-nonisolated-n2", "ade-A0", "ade-D4",
        "ade-E8",
    ):
        assert needle in out


def test_catalog_show_and_unknown(capsys):
    assert main(["catalog", "show", "typeG22"]) == 0
    out = capsys.readouterr().out
    assert '"p": 5' in out and '"m": 6' in out
    assert main(["catalog", "show", "nosuch"]) == 1
    err = capsys.readouterr().err
    assert "nosuch" in err


def test_analyze_catalog_entry(capsys, tmp_path):
    json_path = tmp_path / "report.json"
    dot_path = tmp_path / "quiver.dot"
    code = main([
        "analyze", "catalog:typeCL-n2",
        "--json", str(json_path), "--dot", str(dot_path),
    ])
    assert code == 0
    report = json.loads(json_path.read_text())
    assert report["schema"] == "mckayq-report/1"
    assert report["dynkin_type"] == {"family": "CLn~", "n": 2}
    assert report["class_group"]["invariant_factors"] == []
    assert report["group_order"] == 10
    dot = dot_path.read_text()
    assert dot.startswith("digraph mckay {")
    assert '"(2,1)"' in dot


def test_analyze_job_file(capsys, tmp_path):
    job = {
        "field": {"kind": "cyclotomic", "conductor": 5, "galois_generators": []},
        "group": {
            "dimension": 2,
            "generators": [{"matrix": [["z", "0"], ["0", "z^4"]], "aut": 1}],
        },
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    assert main(["analyze", str(path), "--json", "-"]) == 0
    out = capsys.readouterr().out
    assert '"group_order": 5' in out
    assert "An~" in out


def test_analyze_smallness_violation_exit_code(tmp_path, capsys):
    job = {
        "field": {"kind": "cyclotomic", "conductor": 4, "galois_generators": []},
        "group": {
            "dimension": 2,
            "generators": [{"matrix": [["-1", "0"], ["0", "1"]], "aut": 1}],
        },
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    assert main(["analyze", str(path)]) == 2
    assert "pseudo-reflection" in capsys.readouterr().err


def test_analyze_not_surjective_exit_code(tmp_path, capsys):
    job = {
        "field": {"kind": "cyclotomic", "conductor": 4, "galois_generators": [3]},
        "group": {
            "dimension": 2,
            "generators": [{"matrix": [["z", "0"], ["0", "z^3"]], "aut": 1}],
        },
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    assert main(["analyze", str(path)]) == 3


def test_analyze_split_too_small_exit_code(tmp_path, capsys):
    job = {
        "field": {"kind": "cyclotomic", "conductor": 5, "galois_generators": []},
        "group": {
            "dimension": 2,
            "generators": [{"matrix": [["-1", "0"], ["0", "-1"]], "aut": 1}],
        },
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    assert main(["analyze", str(path)]) == 4
    assert "enlargement" in capsys.readouterr().err


def test_analyze_cap_exceeded_exit_code(tmp_path, capsys):
    entry = catalog.get("nongor")
    path = tmp_path / "job.json"
    path.write_text(json.dumps(entry.job))
    assert main(["analyze", str(path), "--cap", "5"]) == 5


def test_analyze_ambiguous_exit_code_with_partial_report(tmp_path, capsys):
    # H = {+-I} with the full (non-cyclic) Galois group of Q(zeta_8): the
    # extension test must abstain, leaving the candidate set {1, 2}
    job = {
        "field": {"kind": "cyclotomic", "conductor": 8, "galois_generators": [3, 5]},
        "group": {
            "dimension": 2,
            "generators": [
                {"matrix": [["-1", "0"], ["0", "-1"]], "aut": 1},
                {"matrix": [["1", "0"], ["0", "1"]], "aut": 3},
                {"matrix": [["1", "0"], ["0", "1"]], "aut": 5},
            ],
        },
    }
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    out_path = tmp_path / "report.json"
    assert main(["analyze", str(path), "--json", str(out_path)]) == 6
    report = json.loads(out_path.read_text())
    assert report["ambiguous"] is True
    unresolved = [o for o in report["orbits"] if o["a"] is None]
    assert unresolved and unresolved[0]["candidates"] == [1, 2]
    assert report["vertices"] is None


def test_selftest_filter_subsets(capsys):
    assert main(["selftest", "--filter", "typeCL"]) == 0
    out = capsys.readouterr().out
    assert "typeCL-n1" in out and "nongor" not in out
    # empty subset is a vacuous pass
    assert main(["selftest", "--filter", "zzz-no-such"]) == 0
    out = capsys.readouterr().out
    assert "selftest: PASS" in out


def test_reports_byte_identical_across_runs():
    entry = catalog.get("typeG22")
    r1 = json.dumps(build_report(run_job(entry.job, Options())), indent=2)
    r2 = json.dumps(build_report(run_job(entry.job, Options())), indent=2)
    assert r1 == r2


def test_every_catalog_entry_matches_its_expected_fragment():
    # the cheap entries only; selftest covers all of them
    for name in ("typeCL-n1", "typeC-n2", "typeBC-n1", "nongor", "ade-A2"):
        entry = catalog.get(name)
        result = run_job(entry.job, Options())
        report = build_report(result)
        assert report["group_order"] == entry.expected["group_order"]
        assert report["kernel_order"] == entry.expected["kernel_order"]
        assert len(report["vertices"]) == entry.expected["vertex_count"]
        assert report["class_group"]["invariant_factors"] == entry.expected["class_group"]


def test_parse_job_diagnostics():
    from mckayq.errors import ParseError

    with pytest.raises(ParseError) as err:
        parse_job({"field": {"kind": "cyclotomic", "conductor": 0}})
    assert "field.conductor" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_job(
            {
                "field": {"kind": "cyclotomic", "conductor": 4},
                "group": {"dimension": 1, "generators": [{"matrix": [["1"]], "aut": 1}]},
            }
        )
    assert "dimension" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_job(
            {
                "field": {"kind": "cyclotomic", "conductor": 4},
                "group": {
                    "dimension": 2,
                    "generators": [{"matrix": [["w", "0"], ["0", "1"]], "aut": 1}],
                },
            }
        )
    assert "matrix[0][0]" in str(err.value)


def test_unknown_catalog_get():
    with pytest.raises(UnknownEntry):
        catalog.get("missing")


def test_report_contains_character_table_and_trace():
    entry = catalog.get("typeC-n2")
    report = build_report(run_job(entry.job, Options()))
    assert len(report["character_table"]["irreducible_values"]) == 4
    assert any("L3" in line or "L0" in line for line in report["solver_trace"])
    assert report["field"]["degree_over_k"] == 2


def test_finite_field_report_renders_t_grammar():
    entry = catalog.get("typeG22")
    result = run_job(entry.job, Options())
    report = build_report(result)
    assert report["field"]["modulus"].startswith("t^6")
    # every exported value parses back to the embedded element
    field = result.field
    for chi, rendered in zip(
        result.table.irreducibles, report["character_table"]["irreducible_values"]
    ):
        for value, text in zip(chi.values, rendered):
            assert field.parse(text) == result.table.embed_value(value)
