"""Command-line behavior: exit codes, report formats, golden derivations."""

import io
import sys

import pytest

from ydalgebra.cli import main


def run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def sweedler_file(tmp_path):
    path = tmp_path / "sweedler.struct"
    code, _, _ = run_cli(["example", "sweedler", "--k", "1", "--out", str(path)])
    assert code == 0
    return path


def test_example_writes_and_check_passes(sweedler_file):
    code, out, _ = run_cli(["check", str(sweedler_file)])
    assert code == 0
    assert "ALL PASS" in out


def test_check_machine_report_deterministic(sweedler_file):
    code1, out1, _ = run_cli(["check", str(sweedler_file), "--report", "machine"])
    code2, out2, _ = run_cli(["check", str(sweedler_file), "--report", "machine"])
    assert code1 == code2 == 0
    assert out1 == out2
    assert "P-DELTA pass" in out1


def test_check_axiom_filter(sweedler_file):
    code, out, _ = run_cli(["check", str(sweedler_file), "--report", "machine",
                            "--axioms", "P-DOT,P-S"])
    assert code == 0
    assert out.splitlines() == ["P-S pass", "P-DOT pass"]  # suite order


def test_mutated_coefficient_fails_with_witness(tmp_path, sweedler_file):
    text = sweedler_file.read_text()
    mutated = text.replace("action 1 2 2 -1", "action 1 2 2 1")
    assert mutated != text
    bad = tmp_path / "bad.struct"
    bad.write_text(mutated)
    code, out, _ = run_cli(["check", str(bad), "--report", "machine"])
    assert code == 1
    assert any(line.split()[1] == "fail" for line in out.splitlines())
    assert "at=(" in out


def test_check_empty_file_is_input_error(tmp_path):
    empty = tmp_path / "empty.struct"
    empty.write_text("")
    code, _, err = run_cli(["check", str(empty)])
    assert code == 2
    assert "kind" in err


def test_check_missing_file_is_input_error(tmp_path):
    code, _, err = run_cli(["check", str(tmp_path / "no.struct")])
    assert code == 2


def test_kind_mismatch_is_input_error(sweedler_file):
    code, _, err = run_cli(["check", str(sweedler_file), "--kind", "hopf"])
    assert code == 2


def test_derive_subadjacent_golden(tmp_path, sweedler_file):
    out_path = tmp_path / "sub.struct"
    code, _, err = run_cli(["derive", str(sweedler_file), "--target", "subadjacent",
                            "--out", str(out_path)])
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("kind hopf\n")
    lines = text.splitlines()
    # bullet-side relations of the ordinary dim-4 Hopf algebra:
    # g*g = 1 present, x*x absent (zero), x*g = -g*x
    assert "mul 1 1 0 1" in lines
    assert not any(l.startswith("mul 2 2 ") for l in lines)
    assert "mul 1 2 3 -1" in lines and "mul 2 1 3 1" in lines
    # antipode: S(g) = g, S(x) = g*x
    assert "antipode 1 1 1" in lines
    assert "antipode 2 3 1" in lines


def test_derive_matchedpair_roundtrip_bytes(tmp_path, sweedler_file):
    mp_path = tmp_path / "mp.struct"
    code, _, _ = run_cli(["derive", str(sweedler_file), "--target", "matchedpair",
                          "--out", str(mp_path)])
    assert code == 0
    back_path = tmp_path / "back.struct"
    code, _, _ = run_cli(["derive", str(mp_path), "--target", "posthopf",
                          "--out", str(back_path)])
    assert code == 0
    original = sweedler_file.read_text()
    assert back_path.read_text() == original


def test_derive_postlie_zero_dim(tmp_path, sweedler_file):
    out_path = tmp_path / "pl.struct"
    code, _, _ = run_cli(["derive", str(sweedler_file), "--target", "postlie",
                          "--out", str(out_path)])
    assert code == 0
    text = out_path.read_text()
    assert "kind postlie" in text and "dim 0" in text


def test_derive_brace_and_rb(tmp_path, sweedler_file):
    for target, kind in (("brace", "ydbrace"), ("rb_l", "relrb")):
        out_path = tmp_path / f"{target}.struct"
        code, _, _ = run_cli(["derive", str(sweedler_file), "--target", target,
                              "--out", str(out_path)])
        assert code == 0
        assert out_path.read_text().startswith(f"kind {kind}\n")
        code, _, _ = run_cli(["check", str(out_path)])
        assert code == 0


def test_derive_post_m_roundtrip(tmp_path, sweedler_file):
    rb_path = tmp_path / "rb.struct"
    run_cli(["derive", str(sweedler_file), "--target", "rb_l", "--out", str(rb_path)])
    m_path = tmp_path / "m.struct"
    code, _, _ = run_cli(["derive", str(rb_path), "--target", "post_m",
                          "--out", str(m_path)])
    assert code == 0
    assert m_path.read_text() == sweedler_file.read_text()


def test_example_en_dim8(tmp_path):
    path = tmp_path / "en.struct"
    code, _, _ = run_cli(["example", "en", "--n", "2", "--A", "1,0;0,1",
                          "--out", str(path)])
    assert code == 0
    assert "dim 8" in path.read_text()


def test_example_grouprb(tmp_path):
    path = tmp_path / "g.struct"
    code, _, _ = run_cli(["example", "grouprb", "--group", "s3", "--rb", "inversion",
                          "--out", str(path)])
    assert code == 0
    code, out, _ = run_cli(["check", str(path), "--report", "machine"])
    assert code == 0


def test_example_adjoint_from_h4_is_structure_error(tmp_path):
    h4 = tmp_path / "h4.struct"
    run_cli(["example", "h4", "--out", str(h4)])
    code, _, err = run_cli(["example", "adjoint", "--from", str(h4),
                            "--out", str(tmp_path / "adj.struct")])
    assert code == 2
    assert "structure error" in err


def test_example_adjoint_from_group_algebra(tmp_path):
    base = tmp_path / "s3.struct"
    run_cli(["example", "group", "--group", "s3", "--out", str(base)])
    out_path = tmp_path / "adj.struct"
    code, _, _ = run_cli(["example", "adjoint", "--from", str(base),
                          "--out", str(out_path)])
    assert code == 0
    code, _, _ = run_cli(["check", str(out_path)])
    assert code == 0


def test_report_summary(sweedler_file):
    code, out, _ = run_cli(["report", str(sweedler_file)])
    assert code == 0
    assert "kind: ydpost" in out and "dim: 4" in out and "param k = 1" in out


def test_field_fp_example(tmp_path):
    path = tmp_path / "s5.struct"
    code, _, _ = run_cli(["example", "sweedler", "--k", "2", "--field", "Fp:5",
                          "--out", str(path)])
    assert code == 0
    assert "field Fp 5" in path.read_text()
    code, _, _ = run_cli(["check", str(path)])
    assert code == 0


def test_derive_post_r_and_sk(tmp_path, sweedler_file):
    rb_path = tmp_path / "rb.struct"
    run_cli(["derive", str(sweedler_file), "--target", "rb_l", "--out", str(rb_path)])
    r_path = tmp_path / "r.struct"
    code, _, _ = run_cli(["derive", str(rb_path), "--target", "post_r",
                          "--out", str(r_path)])
    assert code == 0
    assert r_path.read_text() == sweedler_file.read_text()
    sk_path = tmp_path / "sk.struct"
    code, _, _ = run_cli(["derive", str(rb_path), "--target", "sk",
                          "--out", str(sk_path)])
    assert code == 0
    text = sk_path.read_text()
    assert "k.antipode" in text
    code, _, _ = run_cli(["check", str(sk_path)])
    assert code == 0


def test_check_notes_derived_coaction(tmp_path, sweedler_file):
    rb_path = tmp_path / "rb.struct"
    run_cli(["derive", str(sweedler_file), "--target", "rb_l", "--out", str(rb_path)])
    # strip the stored coaction lines; the checker derives and reports it
    stripped = "\n".join(
        l for l in rb_path.read_text().splitlines() if not l.startswith("coaction ")
    ) + "\n"
    bare = tmp_path / "bare.struct"
    bare.write_text(stripped)
    code, _, err = run_cli(["check", str(bare)])
    assert code == 0
    assert "coaction derived" in err
