"""Aperiodic/periodic correlations, correlation sums, and the defining
predicates (complementary set, CCC, N-shift cross-orthogonal family,
zero-correlation zone of a CCC).

All decisions on exact-mode scalars are tolerance-free: a correlation
value is zero iff its reduction modulo the cyclotomic polynomial is the
zero polynomial.  Approx-mode inputs use |residual| <= tol * energy.

`acorr` is the direct definitional sum and stays the reference path;
whole profiles are computed layer-by-layer with integer numpy
correlations when coefficient growth provably fits in int64, falling
back to the reference path otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cyclo import CycloNum, common_order
from .model import (
    APPROX,
    EXACT,
    Scalar,
    Sequence,
    SequenceFamily,
    SequenceSet,
    energy,
    scalar_is_zero,
    scalar_numeric,
    set_energy,
)

DEFAULT_TOL = 1e-9

_INT64_SAFE = 2 ** 62


def acorr(s: Sequence, t: Sequence, tau: int) -> Scalar:
    """Aperiodic correlation sum_l s(l) * conj(t(l + tau)), entries
    outside either index range counting as zero."""
    lo = max(0, -tau)
    hi = min(len(s), len(t) - tau)
    if s.mode == EXACT:
        total = CycloNum.zero()
        for l in range(lo, hi):
            total = total + s[l] * t[l + tau].conj()
        return total
    total = 0j
    for l in range(lo, hi):
        total += s[l] * t[l + tau].conjugate()
    return total


def pcorr(s: Sequence, t: Sequence, tau: int) -> Scalar:
    """Periodic correlation; both sequences must have the same length."""
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} vs {len(t)}")
    n = len(s)
    if s.mode == EXACT:
        total = CycloNum.zero()
        for l in range(n):
            total = total + s[l] * t[(l + tau) % n].conj()
        return total
    total = 0j
    for l in range(n):
        total += s[l] * t[(l + tau) % n].conjugate()
    return total


@dataclass
class CorrelationProfile:
    """Correlation values over every shift that could be nonzero.

    Shifts run symmetrically over [-(Lmax-1), Lmax-1] with
    Lmax = max(len(s), len(t)); values outside the true support are
    exact zeros, so the symmetric hull is always safe to scan.
    """

    min_shift: int
    values: list  # Scalar per shift, index tau - min_shift

    @property
    def max_shift(self) -> int:
        return self.min_shift + len(self.values) - 1

    def shifts(self) -> range:
        return range(self.min_shift, self.max_shift + 1)

    def at(self, tau: int) -> Scalar:
        if tau < self.min_shift or tau > self.max_shift:
            raise IndexError(f"shift {tau} outside profile range")
        return self.values[tau - self.min_shift]

    def __add__(self, other: "CorrelationProfile") -> "CorrelationProfile":
        if self.min_shift != other.min_shift or len(self.values) != len(other.values):
            raise ValueError("profiles cover different shift ranges")
        return CorrelationProfile(
            self.min_shift,
            [a + b for a, b in zip(self.values, other.values)],
        )


def _layer_arrays(s: Sequence, order: int):
    """Per-exponent integer coefficient arrays of an exact sequence,
    cached on the sequence."""
    key = ("layers", order)
    hit = s._cache.get(key)
    if hit is not None:
        return hit
    length = len(s)
    layers = {}
    maxc = 0
    for pos, x in enumerate(s.entries):
        c = x.promote(order)
        for j, cj in enumerate(c.coeffs):
            if cj:
                arr = layers.get(j)
                if arr is None:
                    arr = np.zeros(length, dtype=np.int64)
                    layers[j] = arr
                arr[pos] = cj
                if abs(cj) > maxc:
                    maxc = abs(cj)
    out = (layers, maxc)
    s._cache[key] = out
    return out


def corr_profile(s: Sequence, t: Sequence) -> CorrelationProfile:
    """Full aperiodic correlation profile of (s, t)."""
    if s.mode != t.mode:
        raise ValueError("mode mismatch between sequences")
    hull = max(len(s), len(t)) - 1
    shifts = range(-hull, hull + 1)

    if s.mode == APPROX:
        vals = [acorr(s, t, tau) for tau in shifts]
        return CorrelationProfile(-hull, vals)

    order = 1
    for x in s.entries:
        order = common_order(order, x.order)
    for x in t.entries:
        order = common_order(order, x.order)

    sl, smax = _layer_arrays(s, order)
    tl, tmax = _layer_arrays(t, order)
    bound = smax * tmax * min(len(s), len(t)) * max(order, 1)
    if bound >= _INT64_SAFE or not sl or not tl:
        vals = [acorr(s, t, tau) for tau in shifts]
        return CorrelationProfile(-hull, vals)

    # R(tau) = sum_l s(l) conj(t(l+tau)); with s(l) = sum_i A_i[l] z^i and
    # t(m) = sum_j B_j[m] z^j this is sum_{i,j} z^(i-j) * sum_l A_i[l] B_j[l+tau],
    # and sum_l A_i[l] B_j[l+tau] == np.correlate(B_j, A_i, 'full')[tau + len(s) - 1].
    width = 2 * hull + 1
    acc = {}
    offset = len(s) - 1
    for i, ai in sl.items():
        for j, bj in tl.items():
            cls = (i - j) % order
            z = np.correlate(bj, ai, mode="full")  # length len(t)+len(s)-1
            row = acc.get(cls)
            if row is None:
                row = np.zeros(width, dtype=np.int64)
                acc[cls] = row
            lo = -len(s) + 1
            hi = len(t) - 1
            row[(lo + hull):(hi + hull + 1)] += z
    vals = []
    classes = sorted(acc)
    for idx in range(width):
        coeffs = [0] * order
        nonzero = False
        for cls in classes:
            c = int(acc[cls][idx])
            if c:
                coeffs[cls] = c
                nonzero = True
        vals.append(CycloNum(order, coeffs) if nonzero else CycloNum.zero())
    return CorrelationProfile(-hull, vals)


def corr_sum(ss: SequenceSet, tt: SequenceSet, tau: int) -> Scalar:
    """Index-paired correlation sum of two equal-size sets at one shift."""
    if len(ss) != len(tt):
        raise ValueError(f"set sizes differ: {len(ss)} vs {len(tt)}")
    total = None
    for a, b in zip(ss, tt):
        r = acorr(a, b, tau)
        total = r if total is None else total + r
    return total


def corr_sum_profile(ss: SequenceSet, tt: SequenceSet) -> CorrelationProfile:
    if len(ss) != len(tt):
        raise ValueError(f"set sizes differ: {len(ss)} vs {len(tt)}")
    total = None
    for a, b in zip(ss, tt):
        p = corr_profile(a, b)
        total = p if total is None else total + p
    return total


# -- verification reports ----------------------------------------------


@dataclass
class PairResult:
    """Checked profile of one (set, set) pair: the full values over the
    scanned shifts, plus the shifts whose residual failed to vanish
    (the zero shift of an auto pair is allowed its energy peak)."""

    left: int
    right: int
    shifts: list
    values: list
    violations: list = field(default_factory=list)  # offending shifts

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class CheckReport:
    kind: str
    pairs: list = field(default_factory=list)
    problems: list = field(default_factory=list)  # structural failures

    @property
    def ok(self) -> bool:
        return not self.problems and all(p.ok for p in self.pairs)

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        lines = [f"check {self.kind}: {'PASS' if self.ok else 'FAIL'}"]
        for msg in self.problems:
            lines.append(f"  problem: {msg}")
        for p in self.pairs:
            if p.ok:
                continue
            lines.append(f"  pair ({p.left},{p.right}) violated at shifts:")
            for tau in p.violations:
                val = p.values[p.shifts.index(tau)]
                lines.append(f"    tau={tau}: residual {_fmt_scalar(val)}")
        if self.ok and self.pairs:
            lines.append(f"  {len(self.pairs)} pair profiles all clean")
        return "\n".join(lines)


def _fmt_scalar(x: Scalar) -> str:
    z = scalar_numeric(x)
    if isinstance(x, CycloNum):
        return f"{x!r} ~ {z:.6g}"
    return f"{z:.6g}"


def _zero_tol(fams, tol: float) -> float:
    """Absolute tolerance for approx-mode zero tests: tol * largest energy."""
    scale = 0.0
    for f in fams:
        e = abs(scalar_numeric(set_energy(f)))
        scale = max(scale, e)
    return tol * scale if scale > 0 else tol


def is_complementary_set(ss: SequenceSet, tol: float = DEFAULT_TOL) -> CheckReport:
    """Auto-correlation sum zero at every nonzero shift."""
    report = CheckReport(kind="complementary-set")
    tol_abs = 0.0 if ss.mode == EXACT else _zero_tol([ss], tol)
    prof = corr_sum_profile(ss, ss)
    pair = PairResult(0, 0, list(prof.shifts()), list(prof.values))
    for tau in prof.shifts():
        if tau != 0 and not scalar_is_zero(prof.at(tau), tol_abs):
            pair.violations.append(tau)
    report.pairs.append(pair)
    return report


def is_ccc(fam: SequenceFamily, tol: float = DEFAULT_TOL) -> CheckReport:
    """Every set complementary, every distinct pair of sets with
    identically zero cross-correlation sum."""
    report = CheckReport(kind="ccc")
    tol_abs = 0.0 if fam.mode == EXACT else _zero_tol(list(fam), tol)
    m_count = fam.family_size
    for m in range(m_count):
        prof = corr_sum_profile(fam[m], fam[m])
        pair = PairResult(m, m, list(prof.shifts()), list(prof.values))
        for tau in prof.shifts():
            if tau != 0 and not scalar_is_zero(prof.at(tau), tol_abs):
                pair.violations.append(tau)
        report.pairs.append(pair)
    for m in range(m_count):
        for mp in range(m + 1, m_count):
            prof = corr_sum_profile(fam[m], fam[mp])
            pair = PairResult(m, mp, list(prof.shifts()), list(prof.values))
            for tau in prof.shifts():
                if not scalar_is_zero(prof.at(tau), tol_abs):
                    pair.violations.append(tau)
            report.pairs.append(pair)
    return report


def is_n_co_sf(fam: SequenceFamily, n: int, tol: float = DEFAULT_TOL) -> CheckReport:
    """N-shift cross-orthogonality of a family of single-sequence sets:
    lengths divisible by n, auto sums zero at every nonzero n-shift,
    cross sums zero at every n-shift including zero."""
    if n < 1:
        raise ValueError("shift parameter must be >= 1")
    if fam.set_size != 1:
        raise ValueError(
            f"family of single-sequence sets required, set size is {fam.set_size}")
    report = CheckReport(kind=f"cosf:{n}")
    tol_abs = 0.0 if fam.mode == EXACT else _zero_tol(list(fam), tol)
    seqs = [ss[0] for ss in fam]
    for m, s in enumerate(seqs):
        if len(s) % n:
            report.problems.append(
                f"sequence {m} has length {len(s)} not divisible by {n}")
    m_count = len(seqs)
    for m in range(m_count):
        for mp in range(m, m_count):
            prof = corr_profile(seqs[m], seqs[mp])
            hull = prof.max_shift
            taus = [t for t in range(-(hull // n) * n, hull + 1, n)]
            vals = [prof.at(t) for t in taus]
            pair = PairResult(m, mp, taus, vals)
            for tau, v in zip(taus, vals):
                if m == mp and tau == 0:
                    continue
                if not scalar_is_zero(v, tol_abs):
                    pair.violations.append(tau)
            report.pairs.append(pair)
    return report


def zccc_zone(fam: SequenceFamily, tol: float = DEFAULT_TOL) -> int:
    """Width of the zone where correlation sums against the adjacent
    (cyclically next) sequence of every set also vanish.

    Requires a verified CCC with one common length L; returns the
    largest Z such that for all set pairs (m, m') and all 0 < tau <= Z
    the sum over n of R(c^m_{[n+1]_N}, c^{m'}_n, L - tau) is zero.
    """
    ccc = is_ccc(fam, tol)
    if not ccc.ok:
        raise ValueError("zone check requires a CCC:\n" + ccc.render())
    lengths = fam.length_set
    if len(lengths) != 1:
        raise ValueError(f"zone check requires one common length, got {sorted(lengths)}")
    (length,) = lengths
    n_size = fam.set_size
    tol_abs = 0.0 if fam.mode == EXACT else _zero_tol(list(fam), tol)
    for tau in range(1, length + 1):
        shift = length - tau
        for m in range(fam.family_size):
            for mp in range(fam.family_size):
                total = None
                for n in range(n_size):
                    r = acorr(fam[m][(n + 1) % n_size], fam[mp][n], shift)
                    total = r if total is None else total + r
                if not scalar_is_zero(total, tol_abs):
                    return tau - 1
    return length


def check_size_bound(fam: SequenceFamily, kind: str, n: Optional[int] = None) -> bool:
    """Family-size sanity gate: M <= N for the claimed kind."""
    if kind == "ccc":
        return fam.family_size <= fam.set_size
    if kind == "cosf":
        if n is None:
            raise ValueError("cosf bound check needs the shift parameter n")
        return fam.family_size <= n
    raise ValueError(f"unknown kind {kind!r}")
