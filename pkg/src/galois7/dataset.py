"""Height-bounded septic enumeration, the exact point-counting recursion,
database construction and aggregate statistics.

Tuples are primitive (gcd 1), sign-normalized (first nonzero coefficient
positive) and stored in the canonical descending order a7..a0. Projective
points are counted modulo sign.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass
from functools import cache
from itertools import product
from math import gcd

from .classify import InconsistentClassificationError, classify_staged
from .factorz import is_irreducible_deg7
from .forms import BinaryForm, invariants_xi, signature
from .intpoly import DomainError, IntPoly, discriminant7
from .perm import GaloisLabel


@cache
def count_primitive(n, h):
    """Primitive integer points of exact height h in P^n, counted mod sign:

    P_n(h) = ((2h+1)^(n+1) - (2h-1)^(n+1)) / 2 - sum over d | h, d >= 2 of
    P_n(h/d).
    """
    if n < 1 or h < 1:
        raise DomainError("need n >= 1 and h >= 1")
    total = ((2 * h + 1) ** (n + 1) - (2 * h - 1) ** (n + 1)) // 2
    for d in range(2, h + 1):
        if h % d == 0:
            total -= count_primitive(n, h // d)
    return total


def enumerate_tuples(h, exact_height=False, monic_only=False):
    """All primitive sign-normalized septic tuples (a7..a0) with height <= h
    (or exactly h), a7 > 0 and a0 != 0, in lexicographic order.

    monic_only restricts to a7 = 1; that slice with exact_height is the
    convention under which the published per-height irreducible counts
    (916 at h=1, 46552 at h=2) are reproduced.
    """
    if h < 1:
        raise DomainError("height must be >= 1")
    rng = range(-h, h + 1)
    for a7 in range(1, 2 if monic_only else h + 1):
        for mid in product(rng, repeat=6):
            for a0 in rng:
                if a0 == 0:
                    continue
                tup = (a7,) + mid + (a0,)
                if exact_height and max(abs(c) for c in tup) != h:
                    continue
                g = 0
                for c in tup:
                    g = gcd(g, abs(c))
                    if g == 1:
                        break
                if g != 1:
                    continue
                yield tup


def enumerate_septics(h, exact_height=False, irreducible_only=False, monic_only=False):
    """enumerate_tuples plus the irreducibility filter."""
    for tup in enumerate_tuples(h, exact_height, monic_only):
        if irreducible_only and not is_irreducible_deg7(IntPoly.from_descending(tup)):
            continue
        yield tup


@dataclass(frozen=True)
class SepticRecord:
    coeffs: tuple
    height: int
    disc: int
    sig: int
    xi: tuple
    label: str
    method: str

    def to_json(self):
        return json.dumps(
            {
                "coeffs": [str(c) for c in self.coeffs],
                "height": self.height,
                "disc": str(self.disc),
                "sig": self.sig,
                "xi": list(self.xi),
                "label": self.label,
                "method": self.method,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line):
        d = json.loads(line)
        return cls(
            tuple(int(c) for c in d["coeffs"]),
            d["height"],
            int(d["disc"]),
            d["sig"],
            tuple(d["xi"]),
            d["label"],
            d["method"],
        )


def annotate(tup, classify=True, census_primes=30):
    """Build the database record for one irreducible primitive tuple."""
    f = IntPoly.from_descending(tup)
    disc = discriminant7(f)
    if disc == 0:
        raise DomainError("repeated roots")
    label, method = "unknown", "none"
    if classify:
        try:
            result = classify_staged(f, census_primes)
            label, method = result.label.value, result.method
        except InconsistentClassificationError:
            pass
    xi = invariants_xi(BinaryForm.from_int_poly(f)).as_strings()
    return SepticRecord(
        coeffs=tup,
        height=max(abs(c) for c in tup),
        disc=disc,
        sig=signature(f),
        xi=xi,
        label=label,
        method=method,
    )


def _annotate_classified(tup):
    return annotate(tup, classify=True)


def _annotate_plain(tup):
    return annotate(tup, classify=False)


def build_database(h, out_path, exact_height=False, classify=True, progress=None,
                   checkpoint=False, jobs=1):
    """Annotate every irreducible tuple of height <= h into JSONL.

    Deterministic order even with jobs > 1 (an order-preserving worker pool),
    so repeated runs produce byte-identical files. Returns per-label counts.
    With checkpoint=True an interrupted run resumes after the last complete
    line.
    """
    counts = {}
    done = 0
    skip = 0
    mode = "w"
    if checkpoint and os.path.exists(out_path):
        with open(out_path) as fh:
            skip = sum(1 for _ in fh)
        mode = "a"

    def tuples():
        seen = 0
        for tup in enumerate_septics(h, exact_height, irreducible_only=True):
            seen += 1
            if seen <= skip:
                continue
            yield tup

    worker = _annotate_classified if classify else _annotate_plain
    with open(out_path, mode) as fh:
        if jobs and jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                records = pool.imap(worker, tuples(), chunksize=16)
                for rec in records:
                    fh.write(rec.to_json() + "\n")
                    counts[rec.label] = counts.get(rec.label, 0) + 1
                    done += 1
                    if progress and done % progress == 0:
                        print(f"  {done} records", flush=True)
        else:
            for tup in tuples():
                rec = worker(tup)
                fh.write(rec.to_json() + "\n")
                counts[rec.label] = counts.get(rec.label, 0) + 1
                done += 1
                if progress and done % progress == 0:
                    print(f"  {done} records", flush=True)
    return counts


def read_database(path):
    with open(path) as fh:
        return [SepticRecord.from_json(line) for line in fh if line.strip()]


# complexity index: ascending group order; A7 and S7 share the top bin
COMPLEXITY = {
    GaloisLabel.C7.value: 1,
    GaloisLabel.D7.value: 2,
    GaloisLabel.F21.value: 3,
    GaloisLabel.F42.value: 4,
    GaloisLabel.PSL32.value: 5,
    GaloisLabel.A7.value: 6,
    GaloisLabel.S7.value: 6,
}


def _log_height(rec):
    return math.log10(rec.height + 1)


def _log_disc(rec):
    return math.log10(abs(rec.disc)) if rec.disc else 0.0


def _quartiles(values):
    vals = sorted(values)
    n = len(vals)

    def pick(q):
        if n == 1:
            return vals[0]
        pos = q * (n - 1)
        lo = int(pos)
        hi = min(lo + 1, n - 1)
        return vals[lo] + (vals[hi] - vals[lo]) * (pos - lo)

    return pick(0.25), pick(0.5), pick(0.75)


def _histogram(values, bins=20):
    if not values:
        return []
    lo, hi = min(values), max(values)
    if hi == lo:
        return [(lo, hi, len(values))]
    width = (hi - lo) / bins
    counts = [0] * bins
    for v in values:
        k = min(int((v - lo) / width), bins - 1)
        counts[k] += 1
    return [(lo + i * width, lo + (i + 1) * width, c) for i, c in enumerate(counts)]


def write_stats(records, out_dir):
    """Aggregate CSV emissions for a database: frequencies, log-height
    distributions per group, quartiles, complexity means, discriminant
    histogram and the joint scatter table."""
    os.makedirs(out_dir, exist_ok=True)
    by_label = {}
    for rec in records:
        by_label.setdefault(rec.label, []).append(rec)
    empty = not records

    def path(name):
        return os.path.join(out_dir, name)

    with open(path("group_frequencies.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "count", "fraction"])
        total = len(records)
        for label in sorted(by_label):
            n = len(by_label[label])
            w.writerow([label, n, f"{n / total:.6f}" if total else "0"])

    with open(path("height_histograms.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "bin_lo", "bin_hi", "count"])
        for label in sorted(by_label):
            vals = [_log_height(r) for r in by_label[label]]
            for lo, hi, c in _histogram(vals):
                w.writerow([label, f"{lo:.6f}", f"{hi:.6f}", c])

    with open(path("height_quartiles.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "q1", "median", "q3", "mean"])
        for label in sorted(by_label):
            vals = [_log_height(r) for r in by_label[label]]
            q1, q2, q3 = _quartiles(vals)
            mean = sum(vals) / len(vals)
            w.writerow([label, f"{q1:.6f}", f"{q2:.6f}", f"{q3:.6f}", f"{mean:.6f}"])

    with open(path("mean_height_by_complexity.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["complexity", "labels", "mean_log_height", "count"])
        by_c = {}
        for rec in records:
            c = COMPLEXITY.get(rec.label)
            if c is not None:
                by_c.setdefault(c, []).append(rec)
        for c in sorted(by_c):
            vals = [_log_height(r) for r in by_c[c]]
            labels = sorted({r.label for r in by_c[c]})
            w.writerow([c, "|".join(labels), f"{sum(vals)/len(vals):.6f}", len(vals)])

    with open(path("disc_histogram.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["bin_lo", "bin_hi", "count"])
        for lo, hi, c in _histogram([_log_disc(r) for r in records]):
            w.writerow([f"{lo:.6f}", f"{hi:.6f}", c])

    with open(path("height_disc_scatter.csv"), "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["log_height", "log10_abs_disc", "label"])
        for rec in records:
            w.writerow([f"{_log_height(rec):.6f}", f"{_log_disc(rec):.6f}", rec.label])

    if empty:
        print("warning: empty database, stats files are headers only")
    return [
        "group_frequencies.csv",
        "height_histograms.csv",
        "height_quartiles.csv",
        "mean_height_by_complexity.csv",
        "disc_histogram.csv",
        "height_disc_scatter.csv",
    ]


def write_csv_projection(records, out_path):
    """Sidecar CSV mirror of a JSONL database for spreadsheet use."""
    from .features import signed_log

    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["a7", "a6", "a5", "a4", "a3", "a2", "a1", "a0", "height",
             "log10_abs_disc", "disc_sign", "sig",
             "xi0", "xi1", "xi2", "xi3", "xi4", "label"]
        )
        for rec in records:
            xi_logs = [f"{signed_log(_frac_to_float(s)):.12g}" for s in rec.xi]
            w.writerow(
                list(rec.coeffs)
                + [
                    rec.height,
                    f"{_log_disc(rec):.12g}",
                    1 if rec.disc > 0 else -1 if rec.disc < 0 else 0,
                    rec.sig,
                ]
                + xi_logs
                + [rec.label]
            )


def _frac_to_float(s):
    if "/" in s:
        num, den = s.split("/")
        return int(num) / int(den)
    return float(int(s))
