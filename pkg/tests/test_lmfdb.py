import json

import pytest

from galois7.lmfdb import (
    TRANSITIVE_7T,
    LmfdbClient,
    LmfdbError,
    LmfdbNetworkError,
    LmfdbParseError,
    cross_check,
    dedupe_key,
    parse_records,
)
from galois7.perm import GaloisLabel, catalog


def canned_payload():
    # shaped like the nf_fields API: ascending coefficient lists
    return {
        "data": [
            {
                "coeffs": [-2, 0, 0, 0, 0, 0, 0, 1],
                "disc_abs": 52706752,
                "disc_sign": -1,
                "galois_label": "7T4",
            },
            {
                "coeffs": [1, -9, 14, 28, -7, -12, 1, 1],
                "disc_abs": 171903939769,
                "disc_sign": 1,
                "galt": 1,
            },
        ]
    }


class TestMapping:
    def test_bijective_onto_labels(self):
        assert set(TRANSITIVE_7T.values()) == set(GaloisLabel)

    def test_orders_consistent(self):
        groups = catalog()
        expected = {"7T1": 7, "7T2": 14, "7T3": 21, "7T4": 42,
                    "7T5": 168, "7T6": 2520, "7T7": 5040}
        for key, label in TRANSITIVE_7T.items():
            assert groups[label].order == expected[key]


class TestParsing:
    def test_parse_canned(self):
        records = parse_records(canned_payload())
        assert len(records) == 2
        assert records[0].coeffs == (1, 0, 0, 0, 0, 0, 0, -2)
        assert records[0].discriminant == -52706752
        assert records[0].label is GaloisLabel.F42
        assert records[1].label is GaloisLabel.C7  # via galt fallback

    def test_parse_rejects_shapes(self):
        with pytest.raises(LmfdbParseError):
            parse_records({"nope": 1})
        with pytest.raises(LmfdbParseError):
            parse_records({"data": [{"coeffs": [1, 2, 3]}]})

    def test_unknown_label(self):
        records = parse_records(
            {"data": [{"coeffs": [0] * 7 + [1], "galois_label": "7T9"}]}
        )
        with pytest.raises(LmfdbParseError):
            records[0].label


class TestClient:
    def test_cache_roundtrip_offline(self, tmp_path):
        client = LmfdbClient(cache_dir=str(tmp_path), offline=True)
        url = client.page_url(0, 2)
        client._write_cache(url, canned_payload())
        records = client.fetch_page(0, 2)
        assert len(records) == 2

    def test_offline_without_cache_raises(self, tmp_path):
        client = LmfdbClient(cache_dir=str(tmp_path), offline=True)
        with pytest.raises(LmfdbNetworkError):
            client.fetch_page(0, 5)

    def test_env_overrides(self, tmp_path, monkeypatch):
        monkeypatch.setenv("LMFDB_BASE_URL", "https://mirror.example")
        monkeypatch.setenv("LMFDB_CACHE_DIR", str(tmp_path / "cc"))
        client = LmfdbClient(offline=True)
        assert client.base_url == "https://mirror.example"
        assert str(tmp_path / "cc") == client.cache_dir

    def test_query_recorded_in_url(self, tmp_path):
        client = LmfdbClient(cache_dir=str(tmp_path), offline=True)
        url = client.page_url(40, 10, extra={"galois_label": "7T1"})
        assert "degree=7" in url and "_offset=40" in url and "galois_label=7T1" in url


class TestCrossCheck:
    def test_agreement_on_canned_records(self, tmp_path):
        records = parse_records(canned_payload())
        assert cross_check(records, 2) == 2

    def test_disagreement_raises_with_report(self):
        records = parse_records(
            {
                "data": [
                    {
                        "coeffs": [-2, 0, 0, 0, 0, 0, 0, 1],
                        "disc_abs": 52706752,
                        "disc_sign": -1,
                        "galois_label": "7T7",  # wrong on purpose
                    }
                ]
            }
        )
        with pytest.raises(LmfdbError) as err:
            cross_check(records, 1)
        assert "7T7" in str(err.value)


class TestDedupe:
    def test_sign_and_content_normalized(self):
        assert dedupe_key((-2, 0, 0, 0, 0, 0, 0, 4)) == (1, 0, 0, 0, 0, 0, 0, -2)
        assert dedupe_key((1, 0, 0, 0, 0, 0, 0, -2)) == (1, 0, 0, 0, 0, 0, 0, -2)
