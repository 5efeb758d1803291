"""Cache-first client for the LMFDB degree-7 number-field API.

Every response is cached on disk keyed by the request URL, so test suites
and offline machines replay previous pulls; live requests are rate-limited
with exponential backoff. The transitive-group labels 7T1..7T7 map onto the
catalog labels and the mapping is asserted against the group orders.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from urllib.parse import urlencode

from .perm import GaloisLabel, catalog

DEFAULT_BASE_URL = "https://www.lmfdb.org"
ENV_BASE_URL = "LMFDB_BASE_URL"
ENV_CACHE_DIR = "LMFDB_CACHE_DIR"

# standard transitive numbering for degree 7, frozen
TRANSITIVE_7T = {
    "7T1": GaloisLabel.C7,
    "7T2": GaloisLabel.D7,
    "7T3": GaloisLabel.F21,
    "7T4": GaloisLabel.F42,
    "7T5": GaloisLabel.PSL32,
    "7T6": GaloisLabel.A7,
    "7T7": GaloisLabel.S7,
}

_EXPECTED_ORDERS = {
    "7T1": 7, "7T2": 14, "7T3": 21, "7T4": 42, "7T5": 168, "7T6": 2520, "7T7": 5040,
}


def _assert_mapping():
    groups = catalog()
    for key, label in TRANSITIVE_7T.items():
        if groups[label].order != _EXPECTED_ORDERS[key]:
            raise AssertionError(f"transitive map broken at {key}")


_assert_mapping()


class LmfdbError(RuntimeError):
    pass


class LmfdbNetworkError(LmfdbError):
    pass


class LmfdbParseError(LmfdbError):
    pass


@dataclass(frozen=True)
class RemoteField:
    coeffs: tuple  # a7..a0
    discriminant: int
    galois_label_raw: str
    fetched_at: str

    @property
    def label(self):
        try:
            return TRANSITIVE_7T[self.galois_label_raw]
        except KeyError:
            raise LmfdbParseError(
                f"unknown transitive label {self.galois_label_raw!r}"
            ) from None


class LmfdbClient:
    """Paginated fetcher with a mandatory local cache."""

    def __init__(self, base_url=None, cache_dir=None, offline=False,
                 min_interval=0.6, max_retries=4):
        self.base_url = (base_url or os.environ.get(ENV_BASE_URL, DEFAULT_BASE_URL)).rstrip("/")
        self.cache_dir = cache_dir or os.environ.get(
            ENV_CACHE_DIR, os.path.expanduser("~/.cache/galois7/lmfdb")
        )
        self.offline = offline
        self.min_interval = min_interval
        self.max_retries = max_retries
        self._last_request = 0.0
        os.makedirs(self.cache_dir, exist_ok=True)

    # -- cache ---------------------------------------------------------
    def _cache_path(self, url):
        digest = hashlib.sha256(url.encode()).hexdigest()[:32]
        return os.path.join(self.cache_dir, f"{digest}.json")

    def _read_cache(self, url):
        path = self._cache_path(url)
        if os.path.exists(path):
            with open(path) as fh:
                return json.load(fh)
        return None

    def _write_cache(self, url, payload):
        path = self._cache_path(url)
        with open(path, "w") as fh:
            json.dump({"url": url, "response": payload}, fh)

    # -- transport ------------------------------------------------------
    def _get(self, url):
        cached = self._read_cache(url)
        if cached is not None:
            return cached["response"]
        if self.offline:
            raise LmfdbNetworkError(f"offline and no cache for {url}")
        import requests

        delay = 1.0
        for attempt in range(self.max_retries):
            wait = self.min_interval - (time.monotonic() - self._last_request)
            if wait > 0:
                time.sleep(wait)
            try:
                self._last_request = time.monotonic()
                resp = requests.get(url, timeout=30)
                if resp.status_code == 200:
                    payload = resp.json()
                    self._write_cache(url, payload)
                    return payload
                if resp.status_code in (429, 500, 502, 503, 504):
                    time.sleep(delay)
                    delay *= 2
                    continue
                raise LmfdbNetworkError(f"HTTP {resp.status_code} for {url}")
            except requests.RequestException as exc:
                if attempt == self.max_retries - 1:
                    raise LmfdbNetworkError(str(exc)) from exc
                time.sleep(delay)
                delay *= 2
        raise LmfdbNetworkError(f"retries exhausted for {url}")

    # -- API ------------------------------------------------------------
    def page_url(self, offset, limit, extra=None):
        query = {
            "degree": 7,
            "_format": "json",
            "_offset": offset,
            "_limit": limit,
            "_fields": "coeffs,disc_abs,disc_sign,galois_label,galt",
        }
        if extra:
            query.update(extra)
        return f"{self.base_url}/api/nf_fields/?{urlencode(sorted(query.items()))}"

    def fetch_page(self, offset=0, limit=100, extra=None):
        """One page of degree-7 records; the query used is recorded on each
        record set via the cache file."""
        url = self.page_url(offset, limit, extra)
        payload = self._get(url)
        return parse_records(payload)


def parse_records(payload):
    if not isinstance(payload, dict) or "data" not in payload:
        raise LmfdbParseError("response has no 'data' field")
    fetched = datetime.now(timezone.utc).isoformat()
    out = []
    for item in payload["data"]:
        try:
            coeffs_asc = [int(c) for c in item["coeffs"]]
            if len(coeffs_asc) != 8:
                raise LmfdbParseError(f"expected 8 coefficients, got {len(coeffs_asc)}")
            raw = item.get("galois_label")
            if raw is None and "galt" in item:
                raw = f"7T{int(item['galt'])}"
            if raw is None:
                raise LmfdbParseError("record lacks a Galois label")
            disc = int(item.get("disc_abs", 0)) * int(item.get("disc_sign", 1))
            out.append(
                RemoteField(
                    coeffs=tuple(reversed(coeffs_asc)),
                    discriminant=disc,
                    galois_label_raw=str(raw),
                    fetched_at=fetched,
                )
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise LmfdbParseError(f"bad record {item!r}: {exc}") from exc
    return out


def cross_check(records, sample_size=100):
    """Re-classify sampled remote records locally; any disagreement raises
    with a full report (either the pipeline or the mapping table is wrong)."""
    from .classify import classify_staged
    from .intpoly import IntPoly

    disagreements = []
    for rec in records[:sample_size]:
        f = IntPoly.from_descending(rec.coeffs)
        local = classify_staged(f)
        if local.label is not rec.label:
            disagreements.append((rec, local))
    if disagreements:
        lines = [
            f"  {rec.coeffs}: remote {rec.galois_label_raw} vs local {local.label.value}"
            for rec, local in disagreements
        ]
        raise LmfdbError(
            "local classification disagrees with remote labels:\n" + "\n".join(lines)
        )
    return len(records[:sample_size])


def dedupe_key(coeffs_desc):
    """Primitive sign-normalized tuple used when merging with local records."""
    from math import gcd

    g = 0
    for c in coeffs_desc:
        g = gcd(g, abs(c))
    g = g or 1
    tup = tuple(c // g for c in coeffs_desc)
    for c in tup:
        if c != 0:
            return tup if c > 0 else tuple(-x for x in tup)
    return tup
