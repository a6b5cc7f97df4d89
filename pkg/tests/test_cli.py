"""CLI commands, JSON schemas, and certificate verification."""

import copy
import json

import pytest

from raagdim import io_json
from raagdim.cli import main
from raagdim.obstruction import certify_nonvanishing
from raagdim.verify import verify_certificate
from raagdim.zoo import ZOO, cycle, octahedron_boundary


def write_json(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(io_json.dumps(payload) if isinstance(payload, dict) else payload, encoding="utf-8")
    return str(p)


def c4_json():
    return io_json.complex_to_json(cycle(4))


def test_complex_json_roundtrip():
    for entry in ZOO[:10]:
        K = entry.complex()
        back = io_json.complex_from_json(io_json.complex_to_json(K))
        assert back.vertices == K.vertices
        assert back.faces == K.faces


def test_complex_json_graph_form():
    data = {"graph": {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]]}, "flag": True}
    K = io_json.complex_from_json(data)
    assert K.dim == 2  # the triangle fills in under the flag option
    data["flag"] = False
    assert io_json.complex_from_json(data).dim == 1


def test_malformed_inputs_carry_locations():
    with pytest.raises(io_json.MalformedInput) as err:
        io_json.complex_from_json({"maximal_simplices": [["a"], []]})
    assert "maximal_simplices[1]" in str(err.value)
    with pytest.raises(io_json.MalformedInput):
        io_json.complex_from_json({"maximal_simplices": [["a", "a"]]})
    with pytest.raises(io_json.MalformedInput):
        io_json.complex_from_json({})
    with pytest.raises(io_json.MalformedInput):
        io_json.complex_from_json({"maximal_simplices": [[{"x": 1}]]})


def test_cli_generate_analyze_verify_roundtrip(tmp_path, capsys):
    c4 = str(tmp_path / "c4.json")
    report = str(tmp_path / "report.json")
    cert = str(tmp_path / "cert.json")
    assert main(["generate", "cycle", "4", "--out", c4]) == 0
    assert main(["analyze", c4, "--out", report, "--certificate", cert, "--strict"]) == 0
    out = capsys.readouterr().out
    assert "actdim(A_L) = 4" in out
    assert main(["verify", cert, c4]) == 0
    data = json.loads(open(report, encoding="utf-8").read())
    assert data["schema"] == "report/1"
    assert data["actdim_AL"] == {"known": True, "lower": 4, "upper": 4, "exact": True}
    assert data["conjecture"] == "verified"


def test_cli_analyze_is_deterministic(tmp_path):
    c4 = str(tmp_path / "c4.json")
    main(["generate", "cycle", "4", "--out", c4])
    r1 = str(tmp_path / "r1.json")
    r2 = str(tmp_path / "r2.json")
    main(["analyze", c4, "--out", r1])
    main(["analyze", c4, "--out", r2])
    assert open(r1, "rb").read() == open(r2, "rb").read()


def test_cli_generate_join_and_expressions(tmp_path):
    out = str(tmp_path / "oct.json")
    assert main(["generate", "join(points(2),points(2),points(2))", "--out", out]) == 0
    K = io_json.complex_from_json(json.loads(open(out, encoding="utf-8").read()))
    assert K.face_counts() == (6, 12, 8)
    assert main(["generate", "simplex", "2", "--out", str(tmp_path / "s2.json")]) == 0
    assert main(["generate", "nonsense", "3"]) == 1


def test_cli_rejects_empty_and_non_flag(tmp_path, capsys):
    empty = write_json(tmp_path, "empty.json", {"maximal_simplices": []})
    assert main(["analyze", empty]) == 1
    hollow = write_json(
        tmp_path, "c3.json",
        {"maximal_simplices": [["a", "b"], ["b", "c"], ["a", "c"]]},
    )
    assert main(["analyze", hollow]) == 1
    assert main(["analyze", hollow, "--allow-non-flag"]) == 0


def test_cli_strict_flags_undetermined(tmp_path):
    # The doubled tetrahedron boundary needs the coboundary solve; with a
    # tiny cell budget the solve is skipped and the result is undetermined.
    tetra = write_json(
        tmp_path, "t.json",
        {"maximal_simplices": [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]]},
    )
    assert main(["analyze", tetra, "--allow-non-flag", "--strict", "--max-cells", "5"]) == 2
    assert main(["analyze", tetra, "--allow-non-flag", "--strict"]) in (0, 2)


def test_cli_malformed_json_file(tmp_path):
    bad = write_json(tmp_path, "bad.json", "{not json")
    assert main(["analyze", bad]) == 1
    assert main(["analyze", str(tmp_path / "missing.json")]) == 1


def test_cli_homology_and_octahedralize(tmp_path, capsys):
    c4 = str(tmp_path / "c4.json")
    main(["generate", "cycle", "4", "--out", c4])
    assert main(["homology", c4]) == 0
    assert "[0, 1]" in capsys.readouterr().out
    out = str(tmp_path / "oc4.json")
    assert main(["octahedralize", c4, "--out", out]) == 0
    K = io_json.complex_from_json(json.loads(open(out, encoding="utf-8").read()))
    assert K.face_counts() == (8, 16)


def test_cli_lemma_suite_passes_and_catches_faults(capsys):
    assert main(["lemma-suite", "--seed", "0", "--count", "3"]) == 0
    assert main(["lemma-suite", "--seed", "0", "--count", "3", "--inject", "mesh-flip"]) == 1
    out = capsys.readouterr().out
    assert "FAIL pullback" in out
    assert main(["lemma-suite", "--seed", "0", "--count", "3", "--inject", "transfer-drop"]) == 1
    assert "FAIL pushforward" in capsys.readouterr().out


def test_cli_lemma_suite_zero_count_vacuous():
    assert main(["lemma-suite", "--seed", "0", "--count", "0"]) == 0


# --- certificate verification paths ----------------------------------------


def test_verify_certificate_mutations(tmp_path):
    L = cycle(4)
    cert = certify_nonvanishing(L, 1)
    data = io_json.certificate_from_json(io_json.certificate_to_json(cert))
    assert verify_certificate(L, data).ok

    bad = copy.deepcopy(data)
    bad["Delta"] = ("c0", "c2")  # not even a face
    out = verify_certificate(L, bad)
    assert not out.ok and out.failed_check == "delta-membership"

    bad = copy.deepcopy(data)
    bad["M"] = [f for f in bad["M"] if f != bad["Delta"]]
    out = verify_certificate(L, bad)
    assert not out.ok and out.failed_check == "delta-membership"

    bad = copy.deepcopy(data)
    bad["M"] = bad["M"][:-1]  # no longer a cycle
    out = verify_certificate(L, bad)
    assert not out.ok and out.failed_check == "cycle-condition"

    bad = copy.deepcopy(data)
    bad["omega_support"] = bad["omega_support"][:-1]  # delete one cell
    out = verify_certificate(L, bad)
    assert not out.ok and out.failed_check in ("omega-cycle", "omega-evaluation")


def test_verify_certificate_octahedron_roundtrip():
    L = octahedron_boundary(2)
    cert = certify_nonvanishing(L, 2)
    data = io_json.certificate_from_json(io_json.certificate_to_json(cert))
    assert verify_certificate(L, data).ok


def test_verify_cli_failure_names_check(tmp_path, capsys):
    L = cycle(4)
    cert = certify_nonvanishing(L, 1)
    data = io_json.certificate_to_json(cert)
    data["omega_support"] = data["omega_support"][:-1]
    cpath = write_json(tmp_path, "cert.json", data)
    kpath = write_json(tmp_path, "c4.json", c4_json())
    assert main(["verify", cpath, kpath]) == 1
    assert "FAIL omega-" in capsys.readouterr().out


def test_report_json_non_flag_has_unknown_actdim(tmp_path):
    hollow = write_json(
        tmp_path, "c3.json",
        {"maximal_simplices": [["a", "b"], ["b", "c"], ["a", "c"]]},
    )
    report = str(tmp_path / "r.json")
    assert main(["analyze", hollow, "--allow-non-flag", "--out", report]) == 0
    data = json.loads(open(report, encoding="utf-8").read())
    assert data["actdim_AL"] == {"known": False}
    assert data["conjecture"] is None
    assert data["warnings"]


def test_cli_batch_mode(tmp_path, capsys):
    c4 = str(tmp_path / "c4.json")
    p3 = str(tmp_path / "p3.json")
    main(["generate", "cycle", "4", "--out", c4])
    main(["generate", "path", "3", "--out", p3])
    assert main(["analyze", c4, p3]) == 0
    out = capsys.readouterr().out
    assert out.count("actdim(A_L)") == 2
    assert main(["analyze", c4, str(tmp_path / "nope.json")]) == 1
