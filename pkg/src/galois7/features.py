"""Feature extraction and CSV export for the downstream learner.

The contract consumed by the baseline trainer is the header
a7,...,a0,disc_sign,disc_log,j0,...,j4,label; two sidecar columns (monic,
coeff_clipped) follow the contract columns. The j features are the invariant
generators under the signed log transform sign(x)*log10(1+|x|).
"""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .intpoly import DomainError

CONTRACT_HEADER = [
    "a7", "a6", "a5", "a4", "a3", "a2", "a1", "a0",
    "disc_sign", "disc_log", "j0", "j1", "j2", "j3", "j4", "label",
]

# coefficients beyond this magnitude cannot be represented exactly in the
# 12-significant-digit export and get flagged instead of silently rounded
_EXPORT_EXACT_LIMIT = 10 ** 12


def signed_log(x):
    """sign(x) * log10(1 + |x|); odd by construction."""
    if x == 0:
        return 0.0
    mag = math.log10(1.0 + abs(x))
    return mag if x > 0 else -mag


def signed_log_fraction(num, den=1):
    """signed_log of an exact rational, safe far beyond float range."""
    if num == 0:
        return 0.0
    sign = 1.0 if (num > 0) == (den > 0) else -1.0
    num, den = abs(num), abs(den)
    # 1 + num/den = (den + num)/den, exact in integer logs
    mag = math.log10(den + num) - math.log10(den)
    return sign * mag


def _parse_rational(s):
    if "/" in s:
        a, b = s.split("/")
        return int(a), int(b)
    return int(s), 1


@dataclass(frozen=True)
class FeatureRow:
    coeffs: tuple
    disc_sign: int
    disc_log: float
    j: tuple
    label: str
    monic: bool
    coeff_clipped: bool

    def as_csv_row(self):
        return (
            [str(c) for c in self.coeffs]
            + [str(self.disc_sign), f"{self.disc_log:.12g}"]
            + [f"{v:.12g}" for v in self.j]
            + [self.label, "1" if self.monic else "0", "1" if self.coeff_clipped else "0"]
        )


def extract(record):
    """Deterministic feature row for one database record."""
    if record.disc == 0:
        raise DomainError("records in scope have nonzero discriminant")
    disc_sign = 1 if record.disc > 0 else -1
    disc_log = signed_log_fraction(abs(record.disc))
    j = tuple(signed_log_fraction(*_parse_rational(s)) for s in record.xi)
    return FeatureRow(
        coeffs=record.coeffs,
        disc_sign=disc_sign,
        disc_log=disc_log,
        j=j,
        label=record.label,
        monic=record.coeffs[0] == 1,
        coeff_clipped=any(abs(c) > _EXPORT_EXACT_LIMIT for c in record.coeffs),
    )


def write_features_csv(records, out_path):
    rows = [extract(r) for r in records]
    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CONTRACT_HEADER + ["monic", "coeff_clipped"])
        for row in rows:
            w.writerow(row.as_csv_row())
    return len(rows)


def class_weights(counts):
    """w(c) = sqrt(median count / count(c))."""
    if not counts:
        raise DomainError("empty class counts")
    values = sorted(counts.values())
    n = len(values)
    median = (
        values[n // 2]
        if n % 2
        else (values[n // 2 - 1] + values[n // 2]) / 2
    )
    return {label: math.sqrt(median / c) for label, c in counts.items()}


def stratified_split(rows, train_fraction, seed, label_of=None):
    """Per-label deterministic split preserving proportions to rounding.

    Every label needs at least 2 rows; per-label train counts are
    floor(n * fraction + 0.5), clamped so both sides stay nonempty.
    """
    if not 0 < train_fraction < 1:
        raise DomainError("train fraction must be in (0, 1)")
    label_of = label_of or (lambda r: r.label)
    by_label = {}
    for row in rows:
        by_label.setdefault(label_of(row), []).append(row)
    for label, group in by_label.items():
        if len(group) < 2:
            raise DomainError(f"label {label!r} has fewer than 2 rows")
    rng = random.Random(seed)
    train, test = [], []
    for label in sorted(by_label):
        group = list(by_label[label])
        rng.shuffle(group)
        k = int(len(group) * train_fraction + 0.5)
        k = max(1, min(k, len(group) - 1))
        train.extend(group[:k])
        test.extend(group[k:])
    return train, test


def split_counts(class_sizes, train_fraction):
    """Per-label train counts under the same rounding as stratified_split."""
    out = {}
    for label, n in class_sizes.items():
        k = int(n * train_fraction + 0.5)
        out[label] = max(1, min(k, n - 1))
    return out
