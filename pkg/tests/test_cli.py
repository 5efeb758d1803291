import json

import pytest

from galois7.cli import main


class TestClassifyCommand:
    def test_kummer_foulkes(self, capsys):
        code = main(["classify", "--coeffs", "1,0,0,0,0,0,0,-2", "--method", "foulkes"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["label"] == "C7:C6"

    def test_staged_default(self, capsys):
        code = main(["classify", "--coeffs", "1,0,0,0,0,0,-1,-1"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["label"] == "S7"

    def test_ascending_flag(self, capsys):
        code = main(
            ["classify", "--coeffs=-2,0,0,0,0,0,0,1", "--ascending",
             "--method", "resolvent35"]
        )
        assert code == 0
        assert json.loads(capsys.readouterr().out)["label"] == "C7:C6"

    def test_malformed_coeffs_usage_error(self, capsys):
        code = main(["classify", "--coeffs", "1,2,spam,4,5,6,7,8"])
        err = capsys.readouterr().err
        assert code == 1
        assert "spam" in err

    def test_wrong_arity(self, capsys):
        code = main(["classify", "--coeffs", "1,2,3"])
        assert code == 1


class TestEnumerateCommand:
    def test_count_only_h1(self, capsys):
        code = main(["enumerate", "--height", "1", "--irreducible", "--count-only"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "916"

    def test_stream_format(self, capsys):
        code = main(["enumerate", "--height", "1"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert all(len(line.split(",")) == 8 for line in lines[:5])


class TestFamilyCommand:
    def test_c7_p29(self, capsys):
        code = main(["family", "c7", "--prime", "29"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "1,1,-12,-7,28,14,-9,1"

    def test_f21(self, capsys):
        code = main(["family", "f21", "--u", "1", "--v", "1"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "64,0,-896,0,3584,0,-3584,-512"

    def test_bad_prime(self, capsys):
        assert main(["family", "c7", "--prime", "31"]) == 1


class TestResolventCommand:
    def test_quadratic_dump(self, capsys):
        code = main(["resolvent", "--coeffs", "1,0,0,0,0,0,0,-2", "--kind", "quadratic"])
        out = capsys.readouterr().out.split()
        assert code == 0
        assert out[0] == "quadratic" and out[1] == "2"
        assert out[2] == "1"

    def test_35_symbolic_dump(self, capsys):
        code = main(["resolvent", "--coeffs", "1,0,0,0,0,0,0,-2", "--kind", "35"])
        out = capsys.readouterr().out.split()
        assert code == 0
        assert out[1] == "35" and len(out) == 2 + 36


class TestInvariantsCommand:
    def test_json_payload(self, capsys):
        code = main(
            ["invariants", "--coeffs", "1,1,-12,-7,28,14,-9,1", "--signature"]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert len(payload["xi"]) == 5
        assert payload["sig"] == 7


class TestPipelineCommands:
    def test_db_features_stats(self, tmp_path, capsys):
        db = tmp_path / "db.jsonl"
        import galois7.dataset as ds

        recs = [
            ds.annotate((1, 1, -12, -7, 28, 14, -9, 1)),
            ds.annotate((1, 0, 0, 0, 0, 0, -1, -1)),
        ]
        with open(db, "w") as fh:
            for r in recs:
                fh.write(r.to_json() + "\n")
        feats = tmp_path / "features.csv"
        assert main(["features", "--db", str(db), "--out", str(feats)]) == 0
        assert feats.exists()
        stats = tmp_path / "stats"
        assert main(["stats", "--db", str(db), "--out", str(stats)]) == 0
        assert (stats / "group_frequencies.csv").exists()


class TestLmfdbCommand:
    def test_offline_cached(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LMFDB_CACHE_DIR", str(tmp_path))
        from galois7.lmfdb import LmfdbClient

        client = LmfdbClient(cache_dir=str(tmp_path), offline=True)
        client._write_cache(
            client.page_url(0, 1),
            {"data": [{"coeffs": [-2, 0, 0, 0, 0, 0, 0, 1],
                       "disc_abs": 52706752, "disc_sign": -1,
                       "galois_label": "7T4"}]},
        )
        code = main(["lmfdb", "--offset", "0", "--limit", "1", "--offline"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["label"] == "C7:C6"

    def test_offline_empty_cache_errors(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("LMFDB_CACHE_DIR", str(tmp_path / "nothing"))
        assert main(["lmfdb", "--offline", "--limit", "3"]) == 1


class TestSelftest:
    def test_selftest_passes(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "selftest passed" in out
        assert "FAIL" not in out


class TestUsageErrors:
    def test_unknown_command_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_required_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate"])
        assert exc.value.code == 2
