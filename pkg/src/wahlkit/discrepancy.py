"""Discrepancies of Wahl singularities, exactly.

Writing K for the canonical class of the minimal resolution of the
singularity with T-string [b_1..b_ell], the discrepancies a_1..a_ell are
defined by K = sum a_j C_j against the resolution chain, i.e. by the linear
system

    M a = (b_1 - 2, ..., b_ell - 2)^T,

where M is the tridiagonal intersection matrix (M_jj = -b_j, off-diagonal 1).
M is negative definite, so the solution is unique; we solve by exact
fraction-free forward elimination.  Key facts checked throughout the suite:
a_j in (-1, 0), a_1 + a_ell = -1, |det M| = p**2, and denominators divide
p**2.

canonical_pairing evaluates sum a_j v_j against a K-degree threshold: a curve
class F with incidences v_j = F.C_j must satisfy sum a_j v_j < K.F, which is
the workhorse necessary condition for the bad-curve analysis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .tstring import TString, as_entries, tstring_to_params


def intersection_matrix(t: TString | Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Tridiagonal matrix of the resolution chain: diag -b_j, off-diagonal 1."""
    b = as_entries(t)
    ell = len(b)
    return tuple(
        tuple(-b[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(ell))
        for i in range(ell)
    )


def chain_determinant(t: TString | Iterable[int]) -> int:
    """det of intersection_matrix(t) via the continuant recursion.

    d_k = -b_k d_{k-1} - d_{k-2} with d_0 = 1; |d_ell| = p**2 for T-strings.
    """
    b = as_entries(t)
    prev, cur = 0, 1  # d_{-1}, d_0
    for bk in b:
        prev, cur = cur, -bk * cur - prev
    return cur


def discrepancies(t: TString | Iterable[int]) -> tuple[Fraction, ...]:
    """Exact solution a of M a = (b_1 - 2, ..., b_ell - 2).

    Forward elimination on the tridiagonal system, then back substitution;
    all arithmetic in Fraction.  For T-strings every a_j lies strictly in
    (-1, 0) and a_1 + a_ell = -1.
    """
    b = as_entries(t)
    ell = len(b)
    rhs = [Fraction(x - 2) for x in b]
    diag = [Fraction(-x) for x in b]
    # eliminate the subdiagonal (all entries 1)
    for i in range(1, ell):
        factor = Fraction(1) / diag[i - 1]
        diag[i] -= factor  # 1 * factor * (superdiagonal 1)
        rhs[i] -= factor * rhs[i - 1]
    a = [Fraction(0)] * ell
    a[ell - 1] = rhs[ell - 1] / diag[ell - 1]
    for i in range(ell - 2, -1, -1):
        a[i] = (rhs[i] - a[i + 1]) / diag[i]
    return tuple(a)


def validate_discrepancies(t: TString | Iterable[int], a: Sequence[Fraction]) -> list[str]:
    """Return a list of violated invariants (empty when all hold)."""
    b = as_entries(t)
    problems: list[str] = []
    if len(a) != len(b):
        return [f"length mismatch: {len(a)} != {len(b)}"]
    if not all(Fraction(-1) < x < 0 for x in a):
        problems.append(f"some a_j outside (-1, 0): {a}")
    if a[0] + a[-1] != -1:
        problems.append(f"a_1 + a_ell = {a[0] + a[-1]} != -1")
    p = tstring_to_params(b).p
    if any(x.denominator > 0 and (p * p) % x.denominator != 0 for x in a):
        problems.append(f"denominator does not divide p**2 = {p * p}")
    # residual check M a = b - 2
    ell = len(b)
    for j in range(ell):
        lhs = -b[j] * a[j]
        if j > 0:
            lhs += a[j - 1]
        if j < ell - 1:
            lhs += a[j + 1]
        if lhs != b[j] - 2:
            problems.append(f"row {j + 1} residual: {lhs} != {b[j] - 2}")
    return problems


def canonical_pairing(
    t: TString | Iterable[int], v: Sequence[int], kF: int
) -> tuple[Fraction, bool]:
    """(sum a_j v_j, whether the strict inequality sum a_j v_j < kF holds).

    The boolean is the necessary condition for a curve with K-degree kF and
    chain incidences v to exist; False means the incidence pattern is
    impossible.
    """
    b = as_entries(t)
    if len(v) != len(b):
        raise ValueError(f"incidence vector length {len(v)} != ell = {len(b)}")
    a = discrepancies(b)
    value = sum((aj * vj for aj, vj in zip(a, v)), Fraction(0))
    return value, value < kF


def fraction_to_str(x: Fraction) -> str:
    """Serialize as "num/den" (den always present, e.g. "-1/2", "4/1")."""
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)
