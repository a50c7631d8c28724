import re

import pytest

import semiring_lab as sl
from semiring_lab.cli import main
from semiring_lab.fileformat import serialize_semimodule, serialize_semiring


@pytest.fixture()
def b3_file(tmp_path, B3):
    path = tmp_path / "b3.sr"
    path.write_text(serialize_semiring(B3))
    return str(path)


@pytest.fixture()
def l3_file(tmp_path, L3):
    path = tmp_path / "l3.sr"
    path.write_text(serialize_semiring(L3))
    return str(path)


class TestBasicCommands:
    def test_check_ok(self, b3_file, capsys):
        assert main(["check", b3_file]) == 0
        assert "order 3" in capsys.readouterr().out

    def test_check_invalid_algebra_is_66(self, tmp_path, capsys):
        bad = tmp_path / "bad.sr"
        bad.write_text("semiring X\norder 2\none 1\nadd\n0 1\n1 0\nmul\n0 1\n1 1\n")
        assert main(["check", str(bad)]) == 66

    def test_check_parse_error_is_65(self, tmp_path):
        bad = tmp_path / "bad.sr"
        bad.write_text("semiring X\norder 2\none 1\nadd\n0 1\n")
        assert main(["check", str(bad)]) == 65

    def test_usage_error_is_64(self):
        assert main(["no-such-command"]) == 64
        assert main([]) == 64

    def test_classes(self, b3_file, capsys):
        assert main(["classes", b3_file]) == 0
        out = capsys.readouterr().out
        assert "infinite: 2" in out and "anti_bounded" in out

    def test_congruences(self, b3_file, capsys):
        assert main(["congruences", b3_file]) == 0
        assert "3 congruences" in capsys.readouterr().out

    def test_subobjects(self, b3_file, capsys):
        assert main(["subobjects", b3_file]) == 0
        out = capsys.readouterr().out
        assert "[0, 2]" in out

    def test_cyclic(self, b3_file, capsys):
        assert main(["cyclic", b3_file]) == 0
        assert "3 cyclic semimodules" in capsys.readouterr().out

    def test_radical_and_semisimple(self, b3_file, capsys):
        assert main(["radical", b3_file]) == 0
        assert main(["semisimple", b3_file]) == 1
        out = capsys.readouterr().out
        assert "radical: [0, 1, 2]" in out

    def test_simplicity(self, b3_file, capsys):
        assert main(["simplicity", b3_file]) == 0
        assert "congruence-simple: False" in capsys.readouterr().out


class TestConstruct:
    def test_construct_and_check_all(self, tmp_path, capsys):
        z2 = tmp_path / "z2.sr"
        assert main(["construct", "ring-z", "2", "--out", str(z2)]) == 0
        for spec in (["bN", "3"], ["b31"], ["lattice-bool", "2"],
                     ["lattice-chain", "4"], ["ext", str(z2)],
                     ["matrix", str(z2), "2"], ["product", str(z2), str(z2)]):
            out = tmp_path / ("x_" + spec[0] + ".sr")
            assert main(["construct", *spec, "--out", str(out)]) == 0
            assert main(["check", str(out)]) == 0

    def test_construct_regular_loads(self, tmp_path, b3_file):
        reg = tmp_path / "reg.sm"
        assert main(["construct", "regular", b3_file, "--out", str(reg)]) == 0
        M = sl.load_algebra(str(reg))
        assert isinstance(M, sl.FiniteSemimodule) and M.order == 3

    def test_construct_witnesses(self, tmp_path):
        for which, order in (("b4", 5), ("b31", 9)):
            out = tmp_path / which
            assert main(["construct", "witness", which, "--out", str(out)]) == 0
            M = sl.load_algebra(str(out / "ambient.sm"))
            assert M.order == order

    def test_construct_ext_of_non_ring_is_66(self, b3_file):
        assert main(["construct", "ext", b3_file]) == 66

    def test_construct_usage(self):
        assert main(["construct", "bN"]) == 64
        assert main(["construct", "bN", "x"]) == 64


class TestSearchCommands:
    def test_hom(self, tmp_path, b3_file, capsys):
        reg = tmp_path / "reg.sm"
        main(["construct", "regular", b3_file, "--out", str(reg)])
        capsys.readouterr()
        assert main(["hom", str(reg), str(reg)]) == 0
        assert "homomorphisms" in capsys.readouterr().out

    def test_extend_absent_is_1(self, tmp_path, capsys):
        w = tmp_path / "w"
        main(["construct", "witness", "b4", "--out", str(w)])
        reg = tmp_path / "reg.sm"
        main(["construct", "regular", str(w / "base.sr"), "--out", str(reg)])
        capsys.readouterr()
        code = main(["extend", str(w / "ambient.sm"), str(reg),
                     "--sub", "0,2,3,4", "--map", "0:0,2:1,3:2,4:3"])
        assert code == 1

    def test_extend_found_is_0(self, tmp_path, b3_file, capsys):
        reg = tmp_path / "reg.sm"
        main(["construct", "regular", b3_file, "--out", str(reg)])
        capsys.readouterr()
        code = main(["extend", str(reg), str(reg), "--sub", "0,2", "--map", "0:0,2:2"])
        assert code == 0
        assert "extension:" in capsys.readouterr().out

    def test_iso(self, tmp_path, b3_file, l3_file, capsys):
        assert main(["iso", b3_file, b3_file]) == 0
        assert main(["iso", b3_file, l3_file]) == 1

    def test_essential(self, tmp_path, b3_file, capsys):
        reg = tmp_path / "reg.sm"
        main(["construct", "regular", b3_file, "--out", str(reg)])
        assert main(["essential", str(reg), "--sub", "0,1,2"]) == 0
        assert main(["essential", str(reg), "--sub", "0,2"]) == 1


class TestVerdictCommands:
    def test_injective_holds(self, tmp_path, capsys):
        b = tmp_path / "b.sr"
        main(["construct", "bN", "1", "--out", str(b)])
        reg = tmp_path / "reg.sm"
        main(["construct", "regular", str(b), "--out", str(reg)])
        capsys.readouterr()
        assert main(["injective", str(reg), "--bound", "3"]) == 0
        assert "holds-at-bound" in capsys.readouterr().out

    def test_ci_exit_codes(self, b3_file, l3_file):
        assert main(["ci", b3_file, "--bound", "4"]) == 0
        assert main(["ci", l3_file, "--bound", "4"]) == 1

    def test_v_command(self, b3_file):
        assert main(["v", b3_file, "--simple-bound", "3", "--ext-bound", "4"]) == 0


class TestSuiteCommand:
    def test_fast_profile_passes(self, capsys):
        assert main(["paper-suite", "--fast"]) == 0
        out = capsys.readouterr().out
        assert "0 fail, 0 inconclusive" in out
        assert "b4-witness-mode" in out
        assert "b4-not-injective" not in out  # skipped by the fast profile

    def test_records_are_deterministic(self, tmp_path, capsys):
        r1 = tmp_path / "r1.jsonl"
        r2 = tmp_path / "r2.jsonl"
        assert main(["paper-suite", "--fast", "--records", str(r1)]) == 0
        assert main(["paper-suite", "--fast", "--records", str(r2)]) == 0
        assert r1.read_bytes() == r2.read_bytes()

    def test_human_output_deterministic_modulo_timing(self, capsys):
        main(["paper-suite", "--fast"])
        first = re.sub(r"\(\d+\.\d+s\)", "", capsys.readouterr().out)
        main(["paper-suite", "--fast"])
        second = re.sub(r"\(\d+\.\d+s\)", "", capsys.readouterr().out)
        assert first == second

    def test_mutated_fixture_fails_suite(self, capsys, monkeypatch, L3):
        import semiring_lab.constructions as C

        real = C.chain_semiring

        def fake(n):
            # swap in the chain *lattice* for the order-3 chain semiring
            return L3 if n == 2 else real(n)

        monkeypatch.setattr(C, "chain_semiring", fake)
        assert main(["paper-suite", "--fast"]) == 1
        out = capsys.readouterr().out
        assert "fail" in out
