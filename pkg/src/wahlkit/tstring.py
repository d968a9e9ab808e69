"""T-strings: the resolution chains of Wahl singularities.

A Wahl singularity is the cyclic quotient singularity 1/p**2 (pq-1, 1) for
coprime 0 < q < p.  Its minimal resolution is a chain of rational curves
C_1, ..., C_ell whose negative self-intersections b_j = -C_j**2 are read off
the minus (Hirzebruch-Jung) continued fraction

    p**2 / (pq - 1) = b_1 - 1/(b_2 - 1/(b_3 - ...)).

We call the sequence [b_1, ..., b_ell] a T-string.  This module provides the
expansion and its inverse, the two length-increasing moves

    L[b_1..b_ell] = [2, b_1, ..., b_{ell-1}, b_ell + 1]
    R[b_1..b_ell] = [b_1 + 1, b_2, ..., b_ell, 2]

which generate every T-string from [4], deterministic enumeration by length,
recognition by reverse reduction, and the (p, q) <-> string correspondence.

Everything here is exact integer / Fraction arithmetic; p grows like 2**ell,
so floats are never acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Iterator, Sequence

# Enumeration is capped by default because the census doubles per length.
DEFAULT_LENGTH_CAP = 16


@dataclass(frozen=True)
class WahlParams:
    """Coprime pair (p, q), 0 < q < p, labelling the singularity 1/p**2(pq-1,1)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p <= 0 or self.q <= 0:
            raise ValueError(f"p and q must be positive, got ({self.p}, {self.q})")
        if self.q >= self.p:
            raise ValueError(f"need 0 < q < p, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p}, {self.q})")

    def reversed(self) -> "WahlParams":
        # the reversed string corresponds to q -> p - q
        return WahlParams(self.p, self.p - self.q)

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class TString:
    """A T-string [b_1..b_ell], b_j >= 2 with checksum sum(b_j - 2) = ell + 1.

    The checksum is necessary but not sufficient; full membership is decided
    by :func:`is_tstring`.  Construction only enforces the cheap conditions so
    that candidate sequences can be rejected loudly and early.
    """

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if not self.b:
            raise ValueError("empty string")
        if any(x < 2 for x in self.b):
            raise ValueError(f"entries must be >= 2: {list(self.b)}")
        if sum(x - 2 for x in self.b) != len(self.b) + 1:
            raise ValueError(f"checksum sum(b_j - 2) != ell + 1: {list(self.b)}")

    @property
    def ell(self) -> int:
        return len(self.b)

    def reversed(self) -> "TString":
        return TString(self.b[::-1])

    def __iter__(self) -> Iterator[int]:
        return iter(self.b)

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, i):
        return self.b[i]

    def to_json(self) -> list[int]:
        return list(self.b)


def as_entries(t: TString | Iterable[int]) -> tuple[int, ...]:
    """Normalize a TString or raw sequence to a tuple of ints."""
    if isinstance(t, TString):
        return t.b
    return tuple(int(x) for x in t)


# ----- Continued fractions -----


def hj_expand(n: int, m: int) -> tuple[int, ...]:
    """Minus continued fraction of n/m: the unique [b_1..b_k] with all b_i >= 2.

    Requires coprime integers 0 < m < n.  Division steps: b = ceil(n/m), then
    recurse on m / (b*m - n).
    """
    if not (0 < m < n):
        raise ValueError(f"need 0 < m < n, got n={n}, m={m}")
    if gcd(n, m) != 1:
        raise ValueError(f"n and m must be coprime, got n={n}, m={m}")
    out: list[int] = []
    while m > 0:
        b = -(-n // m)  # ceil division
        out.append(b)
        n, m = m, b * m - n
    return tuple(out)


def eval_cf(b: TString | Iterable[int]) -> Fraction:
    """Value of b_1 - 1/(b_2 - 1/(... - 1/b_k)) as an exact Fraction."""
    entries = as_entries(b)
    if not entries:
        raise ValueError("empty continued fraction")
    if any(x < 2 for x in entries):
        raise ValueError(f"entries must be >= 2: {list(entries)}")
    value = Fraction(entries[-1])
    for x in entries[-2::-1]:
        value = x - 1 / value
    return value


def wahl_tstring(p: int | WahlParams, q: int | None = None) -> TString:
    """T-string of the Wahl singularity with parameters (p, q).

    Accepts either a WahlParams or the two integers.  gcd(p**2, pq-1) = 1
    automatically, so the expansion always exists.
    """
    params = p if isinstance(p, WahlParams) else WahlParams(p, int(q))
    return TString(hj_expand(params.p**2, params.p * params.q - 1))


# ----- Generation -----


def apply_L(t: TString | Iterable[int]) -> TString:
    """Left move: [b_1..b_ell] -> [2, b_1, ..., b_{ell-1}, b_ell + 1].

    On parameters this acts as (p, q) -> (2p - q, p).
    """
    b = as_entries(t)
    return TString((2,) + b[:-1] + (b[-1] + 1,))


def apply_R(t: TString | Iterable[int]) -> TString:
    """Right move: [b_1..b_ell] -> [b_1 + 1, b_2, ..., b_ell, 2].

    On parameters this acts as (p, q) -> (p + q, q).
    """
    b = as_entries(t)
    return TString((b[0] + 1,) + b[1:] + (2,))


def enumerate_tstrings(
    ell_max: int, cap: int = DEFAULT_LENGTH_CAP
) -> dict[int, tuple[TString, ...]]:
    """All T-strings of length <= ell_max, grouped by length.

    Breadth-first over the generation tree rooted at [4]; within a level each
    parent contributes its L-child then its R-child, so the order is fully
    deterministic.  Every length-ell level holds exactly 2**(ell-1) strings.
    """
    if ell_max < 1:
        raise ValueError(f"ell_max must be >= 1, got {ell_max}")
    if ell_max > cap:
        raise ValueError(f"ell_max={ell_max} exceeds cap={cap}; raise cap explicitly")
    levels: dict[int, tuple[TString, ...]] = {1: (TString((4,)),)}
    for ell in range(2, ell_max + 1):
        level: list[TString] = []
        for parent in levels[ell - 1]:
            level.append(apply_L(parent))
            level.append(apply_R(parent))
        levels[ell] = tuple(level)
    return levels


def iter_tstrings(ell_max: int, cap: int = DEFAULT_LENGTH_CAP) -> Iterator[TString]:
    """Flat iterator over enumerate_tstrings, shortest first."""
    levels = enumerate_tstrings(ell_max, cap=cap)
    for ell in sorted(levels):
        yield from levels[ell]


# ----- Recognition -----


@dataclass(frozen=True)
class Recognition:
    """Verdict of the reverse-reduction membership test.

    ``word`` lists the letters peeled outermost-first; applying them to [4]
    innermost-last rebuilds the input (e.g. word "RL" means the input is
    R(L([4]))).
    """

    accepted: bool
    word: str = ""
    reason: str | None = None


def is_tstring(seq: TString | Iterable[int]) -> Recognition:
    """Decide membership by peeling L/R moves down to [4].

    A sequence produced by L starts with 2 and ends >= 3 (strip the leading 2,
    decrement the last entry); R is the mirror image.  A sequence starting
    AND ending with 2 can never occur for T-strings of length >= 2, so it is
    rejected outright.  The checksum is only a necessary condition — e.g.
    [3, 4] passes it and is still rejected here.
    """
    entries = list(as_entries(seq))
    if not entries:
        return Recognition(False, reason="empty sequence")
    if any(x < 2 for x in entries):
        return Recognition(False, reason=f"entry < 2 in {entries}")
    if sum(x - 2 for x in entries) != len(entries) + 1:
        return Recognition(
            False,
            reason=f"checksum sum(b_j - 2) = {sum(x - 2 for x in entries)} != ell + 1 = {len(entries) + 1}",
        )
    word: list[str] = []
    while entries != [4]:
        starts2 = entries[0] == 2
        ends2 = entries[-1] == 2
        if starts2 and ends2:
            return Recognition(False, reason=f"stuck at {entries}: starts and ends with 2")
        if starts2:
            word.append("L")
            entries = entries[1:]
            entries[-1] -= 1
        elif ends2:
            word.append("R")
            entries = entries[:-1]
            entries[0] -= 1
        else:
            return Recognition(False, reason=f"stuck at {entries}: no leading or trailing 2")
        if any(x < 2 for x in entries):
            return Recognition(False, reason=f"reduction produced entry < 2: {entries}")
    return Recognition(True, word="".join(word))


def tstring_to_params(t: TString | Iterable[int]) -> WahlParams:
    """Recover (p, q) from a T-string: eval_cf gives p**2/(pq-1) in lowest terms.

    Raises ValueError when the input is not a T-string.  The result is
    revalidated against the expansion, and satisfies p <= 2**ell.
    """
    b = as_entries(t)
    value = eval_cf(b)
    n, m = value.numerator, value.denominator
    p = isqrt(n)
    if p * p != n:
        raise ValueError(f"not a T-string: eval_cf={n}/{m} has non-square numerator")
    if (m + 1) % p != 0:
        raise ValueError(f"not a T-string: denominator {m} is not pq-1 for p={p}")
    params = WahlParams(p, (m + 1) // p)
    if hj_expand(params.p**2, params.p * params.q - 1) != b:
        raise ValueError(f"expansion of {params} does not reproduce {list(b)}")
    return params


def checksum_ok(t: TString | Iterable[int]) -> bool:
    """Necessary condition sum(b_j - 2) == ell + 1."""
    b = as_entries(t)
    return sum(x - 2 for x in b) == len(b) + 1


def params_after_L(params: WahlParams) -> WahlParams:
    """Parameter image of the L move: (p, q) -> (2p - q, p)."""
    return WahlParams(2 * params.p - params.q, params.p)


def params_after_R(params: WahlParams) -> WahlParams:
    """Parameter image of the R move: (p, q) -> (p + q, q)."""
    return WahlParams(params.p + params.q, params.q)
