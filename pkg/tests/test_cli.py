import json

import pytest

from dpone.cli import main
from dpone.lattice import isometry_to_text
from dpone.weyl import CarterType3, representative_order3


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_curves(capsys):
    code, out, err = run(capsys, "list-curves")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 240
    assert lines[0].startswith("E8")
    assert any(line.startswith("bE8") for line in lines)


def test_list_curves_json(capsys):
    code, out, _ = run(capsys, "--json", "list-curves")
    doc = json.loads(out)
    assert code == 0
    assert len(doc) == 240
    assert {"id", "name", "family", "coeffs"} <= set(doc[0])


def test_list_roots(capsys):
    code, out, _ = run(capsys, "list-roots")
    assert code == 0
    assert len(out.splitlines()) == 240


def test_list_stars(capsys):
    code, out, _ = run(capsys, "list-stars")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "1120 stars"
    assert len(lines) == 1121


def test_classify_element_inline(capsys):
    code, out, _ = run(capsys, "classify-element", "-e", "(1 2 3)(4 5 6)")
    assert code == 0
    assert out.strip() == "order 3, rank 5, type A2^2"


def test_classify_element_word(capsys):
    code, out, _ = run(capsys, "classify-element", "-e", "s 1")
    assert code == 0
    assert out.strip() == "order 2, rank 8"


def test_classify_element_json(capsys):
    code, out, _ = run(capsys, "--json", "classify-element", "-e", "(1 2 3)")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"order": 3, "fixed_rank": 7, "carter_type": "A2"}


def test_classify_element_from_file_with_comments(capsys, tmp_path):
    path = tmp_path / "elt.txt"
    path.write_text("# an order-3 permutation\n(1 2 3)\n")
    code, out, _ = run(capsys, "classify-element", "-e", str(path))
    assert code == 0
    assert out.strip() == "order 3, rank 7, type A2"


def test_classify_element_matrix_file(capsys, tmp_path):
    m = representative_order3(CarterType3.A2x4)
    path = tmp_path / "m.txt"
    path.write_text(isometry_to_text(m) + "\n")
    code, out, _ = run(capsys, "classify-element", "-e", str(path))
    assert code == 0
    assert out.strip() == "order 3, rank 1, type A2^4"


def test_census_a2(capsys):
    code, out, _ = run(capsys, "census", "-e", "(1 2 3)")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "invariant curves: 72; faithful stars: 1; trivial stars: 120"
    assert lines[-1].startswith("pairwise: ")


def test_census_a2x4_matrix(capsys, tmp_path):
    m = representative_order3(CarterType3.A2x4)
    path = tmp_path / "m.txt"
    path.write_text(isometry_to_text(m))
    code, out, _ = run(capsys, "census", "-e", str(path))
    assert code == 0
    assert out.splitlines()[0] == (
        "invariant curves: 0; faithful stars: 40; trivial stars: 0"
    )


def test_census_json(capsys):
    code, out, _ = run(capsys, "--json", "census", "-e", "(1 2 3)(4 5 6)")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["invariant_curves"]) == 12
    assert len(doc["trivial_stars"]) == 2
    assert len(doc["faithful_stars"]) == 2
    assert doc["pairwise"]["asynchronized"] == 6
    assert doc["pairwise"]["overlapping"] == 0


def test_report_trivial(capsys):
    code, out, _ = run(capsys, "report")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "Rational"
    assert doc["rule"] == "rational_two_stars"
    assert doc["caveat"]
    assert doc["ranks"] == {"G": 9, "Gamma": 9, "combined": 9}
    assert len(doc["witness"]["stars"]) == 2


def test_report_gamma_inline(capsys):
    code, out, _ = run(capsys, "report", "-gamma", "(1 2 3)")
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "Rational"
    assert doc["ranks"]["Gamma"] == 7


def test_report_gamma_group_file(capsys, tmp_path):
    path = tmp_path / "gamma.txt"
    path.write_text("(1 2 3)\n\n(4 5 6)\n")
    code, out, _ = run(capsys, "report", "-gamma", str(path))
    doc = json.loads(out)
    assert code == 0
    assert doc["ranks"]["Gamma"] == 5
    assert doc["verdict"] == "Rational"


def test_report_not_rational(capsys, tmp_path):
    path = tmp_path / "g3.txt"
    path.write_text(isometry_to_text(representative_order3(CarterType3.A2x3)))
    code, out, _ = run(capsys, "report", "-gamma", str(path))
    doc = json.loads(out)
    assert code == 0
    assert doc["verdict"] == "NotRational"
    assert doc["rule"] == "not_rational_carter"
    assert doc["caveat"] is None
    assert doc["witness"]["elements"]


def test_report_minimality_for_g(capsys, tmp_path):
    path = tmp_path / "g4.txt"
    path.write_text(isometry_to_text(representative_order3(CarterType3.A2x4)))
    code, out, _ = run(capsys, "report", "-g", str(path))
    doc = json.loads(out)
    assert code == 0
    assert doc["ranks"] == {"G": 1, "Gamma": 9, "combined": 1}
    assert doc["minimality"] is not None
    assert doc["minimality"]["combined_rank"] == 1
    assert len(doc["minimality"]["stars"]) == 4


def test_verify_lemma_dp1lines(capsys):
    code, out, _ = run(capsys, "verify-lemma", "DP1lines")
    assert code == 0
    assert out.strip() == "240 curves; families 8/28/56/56/56/28/8; OK"


def test_verify_lemma_a2a22(capsys):
    code, out, _ = run(capsys, "verify-lemma", "A2A22")
    assert code == 0
    assert out.splitlines()[-1] == "OK"


def test_verify_lemma_json(capsys):
    code, out, _ = run(capsys, "--json", "verify-lemma", "A2A22")
    doc = json.loads(out)
    assert code == 0
    assert doc["lemma"] == "A2A22"
    assert doc["ok"] is True
    assert doc["detail"][-1] == "OK"


def test_verify_lemma_unknown(capsys):
    code, out, err = run(capsys, "verify-lemma", "NoSuchLemma")
    assert code == 2
    assert "unknown lemma" in err


def test_bad_element_exits_2(capsys):
    code, _, err = run(capsys, "classify-element", "-e", "(1 2")
    assert code == 2
    assert "error:" in err


def test_non_isometry_matrix_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    rows = [" ".join("0" for _ in range(9)) for _ in range(9)]
    path.write_text("\n".join(rows))
    code, _, err = run(capsys, "classify-element", "-e", str(path))
    assert code == 2


def test_missing_subcommand_exits_2(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_unknown_flag_exits_2(capsys):
    code, _, _ = run(capsys, "list-curves", "--frobnicate")
    assert code == 2


@pytest.mark.parametrize(
    "name",
    [
        "Davidinv",
        "Davidintersection",
        "2Daviddef",
        "Davidauto",
        "Davidmin",
        "Davidmin1",
        "Davidmin2",
        "RatCor-consistency",
    ],
)
def test_verify_lemma_catalogue(capsys, name):
    code, out, _ = run(capsys, "verify-lemma", name)
    assert code == 0
    assert out.splitlines()[-1] == "OK"
