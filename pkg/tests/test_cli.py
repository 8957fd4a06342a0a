from qroute.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestHashCost:
    def test_published_value(self, capsys):
        code, out, _ = run_cli(capsys, "hash-cost", "guadalupe16", "1")
        assert code == 0
        assert "total_cnots: 39" in out
        assert "status: MATCH" in out

    def test_formula_value_27q(self, capsys):
        code, out, _ = run_cli(capsys, "hash-cost", "falcon27", "5")
        assert code == 0 and "total_cnots: 339" in out

    def test_naive_flag(self, capsys):
        code, out, _ = run_cli(capsys, "hash-cost", "guadalupe16", "4",
                               "--naive")
        assert code == 0
        assert "baseline_cnots:" in out and "ratio:" in out

    def test_bad_device_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "hash-cost", "nodevice", "1")
        assert code == 2 and "error" in err


class TestHashSim:
    def test_member_consistent(self, capsys):
        code, out, _ = run_cli(capsys, "hash-sim", "5", "4", "5",
                               "--budget", "2000", "--seed", "1")
        assert code == 0
        assert "status: CONSISTENT" in out

    def test_deterministic_bytes(self, capsys):
        args = ("hash-sim", "5", "3", "2", "--budget", "400", "--seed", "7")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_composite_p_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "hash-sim", "8", "3", "1")
        assert code == 2


class TestQft:
    def test_builtin_total(self, capsys):
        code, out, _ = run_cli(capsys, "qft", "guadalupe16")
        assert code == 0 and "total_cnots: 325" in out

    def test_verify_line(self, capsys):
        code, out, _ = run_cli(capsys, "qft", "lnn8", "--verify")
        assert code == 0
        assert "structural: PASS" in out and "unitary: PASS" in out

    def test_custom_topology_file(self, capsys, tmp_path):
        topo = tmp_path / "line.topo"
        topo.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
        code, out, _ = run_cli(capsys, "qft", "--topology", str(topo),
                               "--n", "5", "--verify")
        assert code == 0 and "structural: PASS" in out


class TestSweep:
    def test_csv_contents(self, capsys, tmp_path):
        out_file = tmp_path / "sweep.csv"
        code, _, _ = run_cli(capsys, "sweep", "guadalupe16", "4",
                             str(out_file))
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert lines[0] == "l,optimized,naive,formula"
        first = lines[1].split(",")
        assert first[0] == "1" and first[1] == "39" and first[3] == "39"
        optimized = [int(ln.split(",")[1]) for ln in lines[1:]]
        assert optimized == sorted(optimized) and len(set(optimized)) == 4
        for ln in lines[1:]:
            _, opt, naive, formula = ln.split(",")
            assert opt == formula and int(naive) > int(opt)


class TestExport:
    def test_hash_roundtrip(self, capsys, tmp_path):
        out_file = tmp_path / "hash.qasm"
        code, out, _ = run_cli(capsys, "export", "hash-routed",
                               str(out_file), "--device", "guadalupe16",
                               "--l", "1")
        assert code == 0
        text = out_file.read_text()
        assert sum(1 for ln in text.splitlines() if ln.startswith("cx ")) == 39
        from qroute.qasm import parse_qasm
        assert parse_qasm(text).width == 16

    def test_logical_flag_enforced(self, capsys, tmp_path):
        out_file = tmp_path / "logical.qasm"
        code, _, err = run_cli(capsys, "export", "hash-logical",
                               str(out_file), "--p", "5", "--m", "3")
        assert code == 2
        code, _, _ = run_cli(capsys, "export", "hash-logical", str(out_file),
                             "--p", "5", "--m", "3", "--logical")
        assert code == 0

    def test_seed_env_override(self, capsys, tmp_path, monkeypatch):
        import importlib
        monkeypatch.setenv("QROUTE_SEED", "11")
        import qroute.cli as cli_mod
        importlib.reload(cli_mod)
        f1 = tmp_path / "a.qasm"
        f2 = tmp_path / "b.qasm"
        cli_mod.main(["export", "hash-routed", str(f1),
                      "--device", "guadalupe16"])
        cli_mod.main(["export", "hash-routed", str(f2),
                      "--device", "guadalupe16", "--seed", "11"])
        capsys.readouterr()
        assert f1.read_text() == f2.read_text()


class TestTopologyValidate:
    def test_builtin_valid(self, capsys):
        code, out, _ = run_cli(capsys, "topology-validate", "guadalupe16")
        assert code == 0 and "status: VALID" in out

    def test_invalid_file_exits_3(self, capsys, tmp_path):
        topo = tmp_path / "bad.topo"
        topo.write_text("2\n0 0\n")
        code, out, _ = run_cli(capsys, "topology-validate", "--file",
                               str(topo))
        assert code == 3 and "status: INVALID" in out

    def test_derive_chain(self, capsys, tmp_path):
        topo = tmp_path / "line.topo"
        topo.write_text("4\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "topology-validate", "--file",
                               str(topo), "--derive-start", "0")
        assert code == 0 and "chain: 0-1-2-3" in out


class TestAnglesSearch:
    def test_runs_and_is_deterministic(self, capsys):
        args = ("angles-search", "5", "3", "--budget", "500", "--seed", "2")
        code, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert code == 0 and out1 == out2
        assert "eps:" in out1
