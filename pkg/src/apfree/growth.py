"""Growth-rate analysis of the 3AP-free permutation counts.

For each fixed m, the counts along n = m * 2^t satisfy the two-sided
doubling inequality 2*theta(k)^2 <= theta(2k) <= 21*theta(k)^2, which
makes the root sequence theta(m*2^t)^(1/(m*2^t)) strictly increasing and
bounded, hence convergent to a limit depending on m. Any single point
brackets that limit:

    (2*theta(n))^(1/n)  <=  limit_m  <=  (21*theta(n))^(1/n),   n = m*2^t.

Separating two such limits therefore reduces to comparing one lower
bracket against another's upper bracket, an inequality between nth roots
of integers that cross-exponentiation turns into a finite comparison of
two (large) integers. Everything that decides a verdict in this module
is integer arithmetic; decimals are rendering only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError, ValueUnavailable
from .roots import ROUND_FLOOR, ROUND_NEAREST, DecimalRoot, decimal_nth_root
from .table import ThetaTable

DISPLAY_DIGITS_DEFAULT = 11

LOWER_FACTOR = 2
UPPER_FACTOR = 21


def global_theta_bounds(n: int) -> tuple[int, int]:
    """Universal bounds: 2^(n-1) <= count(n) <= floor((n+1)/2)! * ceil((n+1)/2)!."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 1 << (n - 1), math.factorial((n + 1) // 2) * math.factorial((n + 2) // 2)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exact inequality check."""

    name: str
    status: str  # "pass" | "fail" | "skip"
    numbers: tuple[int, ...] = ()
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def check_sandwich(k: int, tbl: ThetaTable) -> CheckReport:
    """2*theta(k)^2 <= theta(2k) <= 21*theta(k)^2, decided on exact integers."""
    tk = tbl.value(k)
    t2k = tbl.value(2 * k)
    lo = LOWER_FACTOR * tk * tk
    hi = UPPER_FACTOR * tk * tk
    ok = lo <= t2k <= hi
    return CheckReport(
        name=f"sandwich k={k}",
        status="pass" if ok else "fail",
        numbers=(lo, t2k, hi),
        detail=f"{lo} <= {t2k} <= {hi}",
    )


def check_halving(n: int, tbl: ThetaTable) -> CheckReport:
    """theta(n) <= 21 * theta(ceil(n/2)) * theta(floor(n/2)) for n >= 3."""
    if n < 3:
        raise ValueError(f"halving bound applies for n >= 3, got {n}")
    tn = tbl.value(n)
    hi = UPPER_FACTOR * tbl.value((n + 1) // 2) * tbl.value(n // 2)
    ok = tn <= hi
    return CheckReport(
        name=f"halving n={n}",
        status="pass" if ok else "fail",
        numbers=(tn, hi),
        detail=f"{tn} <= {hi}",
    )


def check_global_bounds(n: int, tbl: ThetaTable) -> CheckReport:
    """2^(n-1) <= theta(n) <= floor((n+1)/2)! * ceil((n+1)/2)!."""
    tn = tbl.value(n)
    lo, hi = global_theta_bounds(n)
    ok = lo <= tn <= hi
    return CheckReport(
        name=f"global n={n}",
        status="pass" if ok else "fail",
        numbers=(lo, tn, hi),
        detail=f"{lo} <= {tn} <= {hi}",
    )


@dataclass(frozen=True)
class SubsequencePoint:
    """One point of the doubling subsequence: theta(n)^(1/n) at n = m * 2^t.

    The decimal approximation is truncated at `precision_digits` places
    and certified by the exact bracket scaled^n <= theta(n)*10^(n*d) <
    (scaled+1)^n.
    """

    m: int
    t: int
    n: int
    root: DecimalRoot

    @property
    def value(self) -> str:
        return self.root.text

    @property
    def precision_digits(self) -> int:
        return self.root.digits


def subsequence_point(m: int, t: int, tbl: ThetaTable,
                      digits: int = DISPLAY_DIGITS_DEFAULT) -> SubsequencePoint:
    """theta(n)^(1/n) for n = m * 2^t, to `digits` certified decimal places."""
    if m < 1 or t < 0:
        raise ValueError(f"need m >= 1 and t >= 0, got m={m}, t={t}")
    n = m << t
    value = tbl.value(n)
    return SubsequencePoint(m, t, n, decimal_nth_root(value, n, digits, ROUND_FLOOR))


@dataclass(frozen=True)
class GrowthBound:
    """Exact two-sided bracket on the doubling-subsequence limit for index m.

    Stored as (radicand, root) pairs: the limit lies between
    lower_radicand^(1/root) and upper_radicand^(1/root). Never held as a
    float; decimals are produced on demand.
    """

    m: int
    t: int
    root: int
    lower_radicand: int
    upper_radicand: int

    def lower_decimal(self, digits: int = DISPLAY_DIGITS_DEFAULT) -> DecimalRoot:
        return decimal_nth_root(self.lower_radicand, self.root, digits, ROUND_NEAREST)

    def upper_decimal(self, digits: int = DISPLAY_DIGITS_DEFAULT) -> DecimalRoot:
        return decimal_nth_root(self.upper_radicand, self.root, digits, ROUND_NEAREST)


def limit_bracket(m: int, t: int, tbl: ThetaTable) -> GrowthBound:
    """Bracket the subsequence limit for index m using the point n = m * 2^t."""
    if m < 1 or t < 0:
        raise ValueError(f"need m >= 1 and t >= 0, got m={m}, t={t}")
    n = m << t
    value = tbl.value(n)
    return GrowthBound(m, t, n, LOWER_FACTOR * value, UPPER_FACTOR * value)


@dataclass(frozen=True)
class SeparationCertificate:
    """Exact proof that one subsequence limit exceeds another.

    With the lower bracket (A, a) for m_low and the upper bracket (B, b)
    for m_high, A^(1/a) > B^(1/b) holds iff A^b > B^a, since both sides
    exceed 1. lhs and rhs are those two integers in full.
    """

    m_low: int
    t_low: int
    m_high: int
    t_high: int
    lower_bound: GrowthBound
    upper_bound: GrowthBound
    theta_low: int
    theta_high: int
    provenance_low: str
    provenance_high: str
    lhs: int
    rhs: int
    separated: bool


def separate(m_low: int, t_low: int, m_high: int, t_high: int,
             tbl: ThetaTable) -> SeparationCertificate:
    """Attempt to prove limit(m_low) > limit(m_high) by cross-exponentiation."""
    lower = limit_bracket(m_low, t_low, tbl)
    upper = limit_bracket(m_high, t_high, tbl)
    lhs = lower.lower_radicand ** upper.root
    rhs = upper.upper_radicand ** lower.root
    return SeparationCertificate(
        m_low=m_low, t_low=t_low, m_high=m_high, t_high=t_high,
        lower_bound=lower, upper_bound=upper,
        theta_low=tbl.value(lower.root), theta_high=tbl.value(upper.root),
        provenance_low=tbl.provenance(lower.root),
        provenance_high=tbl.provenance(upper.root),
        lhs=lhs, rhs=rhs, separated=lhs > rhs,
    )


def certificate_text(cert: SeparationCertificate,
                     digits: int = DISPLAY_DIGITS_DEFAULT) -> str:
    """Serialize a certificate as a self-contained key/value document.

    Every integer appears in full decimal, so an independent checker can
    re-derive lhs and rhs and confirm the verdict with big-integer
    arithmetic alone.
    """
    lines = [
        "separation-certificate v1",
        f"m_low: {cert.m_low}",
        f"t_low: {cert.t_low}",
        f"n_low: {cert.lower_bound.root}",
        f"theta_low: {cert.theta_low}",
        f"theta_low_provenance: {cert.provenance_low}",
        f"lower_radicand: {cert.lower_bound.lower_radicand}",
        f"lower_root: {cert.lower_bound.root}",
        f"lower_decimal: {cert.lower_bound.lower_decimal(digits).text}",
        f"m_high: {cert.m_high}",
        f"t_high: {cert.t_high}",
        f"n_high: {cert.upper_bound.root}",
        f"theta_high: {cert.theta_high}",
        f"theta_high_provenance: {cert.provenance_high}",
        f"upper_radicand: {cert.upper_bound.upper_radicand}",
        f"upper_root: {cert.upper_bound.root}",
        f"upper_decimal: {cert.upper_bound.upper_decimal(digits).text}",
        f"lhs: {cert.lhs}",
        f"rhs: {cert.rhs}",
        f"separated: {'true' if cert.separated else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> dict[str, str]:
    """Parse the key/value certificate document into a dict of raw fields."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "separation-certificate v1":
        raise ParseError("missing certificate header", line=1)
    fields: dict[str, str] = {}
    for idx, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", line=idx)
        key, _, val = line.partition(":")
        fields[key.strip()] = val.strip()
    return fields


def verify_certificate_text(text: str) -> list[str]:
    """Re-derive every claim in a serialized certificate.

    Returns a list of discrepancies, empty when the document is sound.
    The checks: radicands are 2x and 21x the stated counts, the roots are
    m * 2^t, lhs and rhs re-derive bit for bit, and the verdict matches
    the integer comparison.
    """
    f = parse_certificate(text)
    problems = []
    try:
        m_low, t_low = int(f["m_low"]), int(f["t_low"])
        m_high, t_high = int(f["m_high"]), int(f["t_high"])
        n_low, n_high = int(f["n_low"]), int(f["n_high"])
        theta_low, theta_high = int(f["theta_low"]), int(f["theta_high"])
        lower_radicand = int(f["lower_radicand"])
        upper_radicand = int(f["upper_radicand"])
        lower_root, upper_root = int(f["lower_root"]), int(f["upper_root"])
        lhs, rhs = int(f["lhs"]), int(f["rhs"])
        separated = f["separated"] == "true"
    except KeyError as exc:
        return [f"missing field {exc}"]
    except ValueError as exc:
        return [f"non-integer field: {exc}"]
    if n_low != m_low << t_low:
        problems.append(f"n_low {n_low} != m_low * 2^t_low = {m_low << t_low}")
    if n_high != m_high << t_high:
        problems.append(f"n_high {n_high} != m_high * 2^t_high = {m_high << t_high}")
    if lower_root != n_low:
        problems.append(f"lower_root {lower_root} != n_low {n_low}")
    if upper_root != n_high:
        problems.append(f"upper_root {upper_root} != n_high {n_high}")
    if lower_radicand != LOWER_FACTOR * theta_low:
        problems.append("lower_radicand is not 2 * theta_low")
    if upper_radicand != UPPER_FACTOR * theta_high:
        problems.append("upper_radicand is not 21 * theta_high")
    if lhs != lower_radicand ** upper_root:
        problems.append("lhs does not re-derive as lower_radicand ** upper_root")
    if rhs != upper_radicand ** lower_root:
        problems.append("rhs does not re-derive as upper_radicand ** lower_root")
    if separated != (lhs > rhs):
        problems.append("separated flag disagrees with lhs > rhs")
    return problems


def monotone_report(m: int, tbl: ThetaTable,
                    max_n: Optional[int] = None) -> CheckReport:
    """Check the doubling subsequence for index m on all available steps.

    For each consecutive pair n = m * 2^t, 2n both present, verifies in
    exact integers that the sequence strictly increases
    (theta(2n) > theta(n)^2) and that the two-sided doubling inequality
    2*theta(n)^2 <= theta(2n) <= 21*theta(n)^2 holds; these are the
    (2n)-th powers of the root-form statements, so no roots are taken.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    points = []
    t = 0
    n = m
    limit = max_n if max_n is not None else (max(tbl.available()) if len(tbl) else 0)
    while n <= limit:
        if n in tbl:
            points.append((t, n))
        t += 1
        n <<= 1
    steps = [(t1, n1) for (t1, n1) in points if n1 * 2 in tbl and
             (max_n is None or n1 * 2 <= max_n)]
    if len(points) < 2 or not steps:
        return CheckReport(
            name=f"monotone m={m}",
            status="skip",
            detail="insufficient data: need two consecutive points",
        )
    details = []
    ok = True
    for t1, n1 in steps:
        a = tbl.value(n1)
        b = tbl.value(2 * n1)
        step_ok = (b > a * a) and (LOWER_FACTOR * a * a <= b <= UPPER_FACTOR * a * a)
        ok = ok and step_ok
        details.append(
            f"t={t1}->{t1 + 1}: {LOWER_FACTOR * a * a} <= {b} <= {UPPER_FACTOR * a * a}"
            f" and {b} > {a * a}: {'ok' if step_ok else 'VIOLATED'}"
        )
    return CheckReport(
        name=f"monotone m={m}",
        status="pass" if ok else "fail",
        detail="; ".join(details),
    )


REFERENCE_POINTS = (
    # Historical growth constants: (label, factor, n). Both reproduce from
    # exact counts; the n=16 one needs a computed or ingested value.
    ("(2*theta(10))^(1/10)", LOWER_FACTOR, 10),
    ("(2*theta(16))^(1/16)", LOWER_FACTOR, 16),
)


def reference_constants(tbl: ThetaTable, digits: int = 6) -> list[tuple[str, DecimalRoot]]:
    """Named historical constants derivable from the table, skipping absent ones."""
    out = []
    for label, factor, n in REFERENCE_POINTS:
        if n in tbl:
            out.append((label, decimal_nth_root(factor * tbl.value(n), n,
                                                digits, ROUND_NEAREST)))
    return out


@dataclass(frozen=True)
class EnvelopeReport:
    """Outermost proven estimates for the root sequence from large-n data:
    a lower estimate for its liminf and an upper estimate for its limsup,
    plus whichever named reference constants the table supports."""

    liminf_lower: DecimalRoot   # (2*theta(160))^(1/160)
    limsup_upper: DecimalRoot   # (21*theta(128))^(1/128)
    references: tuple[tuple[str, DecimalRoot], ...]


LIMINF_POINT = 160
LIMSUP_POINT = 128


def envelope_estimates(tbl: ThetaTable, digits: int = 5) -> EnvelopeReport:
    """Liminf and limsup estimates from the n=160 and n=128 counts."""
    lo_val = tbl.value(LIMINF_POINT)
    hi_val = tbl.value(LIMSUP_POINT)
    return EnvelopeReport(
        liminf_lower=decimal_nth_root(LOWER_FACTOR * lo_val, LIMINF_POINT,
                                      digits, ROUND_NEAREST),
        limsup_upper=decimal_nth_root(UPPER_FACTOR * hi_val, LIMSUP_POINT,
                                      digits, ROUND_NEAREST),
        references=tuple(reference_constants(tbl, digits)),
    )
