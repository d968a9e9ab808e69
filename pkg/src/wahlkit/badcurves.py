"""Classification and bounding of exceptional curves relative to a resolution chain.

Setting: the minimal resolution of a Wahl singularity has exceptional chain
C_1, .., C_ell with self-intersections -b_j given by the T-string.  An
exceptional curve of the first kind E in a blow-up can degenerate against
this chain; its components then split into the unique (-1)-sphere e,
"internal" chain spheres swallowed as components of E, and untouched
external spheres.  The incidence budget makes curves with
E . sum(C_j) = 1 ("bad" curves) the only obstruction to good length bounds,
so this module classifies them and bounds how many can coexist.

Shapes of bad curves (by the end-intervals of internal spheres):

  type A : internal = C_1..C_x and C_y..C_ell (both ends), e joins the two
           intervals, hitting C_{x'} (x' <= x) and C_{y'} (y' >= y);
  type B1: internal = C_1..C_x only; e hits C_{x'} inside and at most one
           more point (an external chain sphere C_{y'}, a second internal
           sphere, or somewhere off the chain);
  type B2: the mirror image of B1 at the right-hand end.

The case oracle rebuilds each syntactically possible configuration as an
explicit curve configuration and lets the blow-down engine decide its fate,
recording every independent reason the candidate dies:

  PATTERN_SINGLE / PATTERN_ENDPOINTS - forbidden incidence patterns of e;
  MAGIC_E / MAGIC_FULL - the discrepancy pairing inequality fails for e or
      for the whole divisor E;
  MULTI_EDGE / CYCLE / THREE_NEIGHBOR / DISCONNECTED_STAGE - structural
      violations of the exceptional-divisor tree shape at some stage of the
      contraction;
  NO_MINUS_ONE - the contraction gets stuck (E is not an exceptional curve
      of the first kind);
  SW - a contraction step produces a rational curve with K-degree <= -2, or
      = -1 without being a (-1)-sphere;
  MULT_NONPOSITIVE / ZERO_INCIDENCE - degenerate multiplicity bookkeeping.

Survivors are the configurations no combinatorial argument excludes; the
oracle checks that they obey the counting bounds 2n <= ell + 4 (single type)
and 2(n1 + n2) <= ell + 5 (coexisting B1 + B2), which feed the final length
bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .curveconfig import (
    CONTRACTED_TO_POINT,
    STUCK,
    SW_VIOLATION,
    BlowDownTrace,
    Curve,
    CurveConfig,
    Edge,
    chain_config,
    contract_all,
    derived_multiplicities,
    divisor_k,
    divisor_pairing,
    divisor_product,
)
from .discrepancy import canonical_pairing, discrepancies
from .tstring import TString, as_entries, enumerate_tstrings, is_tstring

ORACLE_LENGTH_CAP = 8

# check names recorded by the oracle
PATTERN_SINGLE = "PATTERN_SINGLE"
PATTERN_ENDPOINTS = "PATTERN_ENDPOINTS"
MAGIC_E = "MAGIC_E"
MAGIC_FULL = "MAGIC_FULL"
MULTI_EDGE = "MULTI_EDGE"
CYCLE = "CYCLE"
THREE_NEIGHBOR = "THREE_NEIGHBOR"
DISCONNECTED_STAGE = "DISCONNECTED_STAGE"
NO_MINUS_ONE = "NO_MINUS_ONE"
SW = "SW"
MULT_NONPOSITIVE = "MULT_NONPOSITIVE"
ZERO_INCIDENCE = "ZERO_INCIDENCE"

DIES = "DIES"
SURVIVES_BAD = "SURVIVES_BAD"
SURVIVES_GOOD = "SURVIVES_GOOD"


# ----- Incidence patterns of a single curve against the chain -----


@dataclass(frozen=True)
class PatternReport:
    """Forbidden-pattern scan for a curve with K-degree k_degree meeting the chain."""

    patterns: tuple[str, ...]
    pairing: Fraction
    pairing_ok: bool

    @property
    def ok(self) -> bool:
        return self.pairing_ok and not self.patterns


def forbidden_patterns(
    t: TString | Iterable[int], v: Sequence[int], k_degree: int = -1
) -> PatternReport:
    """Scan an incidence vector for the two forbidden patterns.

    Pattern SINGLE: the curve meets exactly one chain sphere, once.  Pattern
    ENDPOINTS: it meets C_1 and C_ell once each and nothing in between.
    Both kill the curve outright; the general necessary condition
    sum a_j v_j < k_degree is evaluated alongside (every flagged pattern
    also fails it).
    """
    b = as_entries(t)
    if len(v) != len(b):
        raise ValueError(f"incidence vector length {len(v)} != ell = {len(b)}")
    if any(x < 0 for x in v):
        raise ValueError(f"incidence vector must be nonnegative, got {list(v)}")
    patterns = []
    if sum(v) == 1:
        patterns.append(PATTERN_SINGLE)
    if len(b) >= 2 and v[0] == 1 and v[-1] == 1 and not any(v[1:-1]):
        patterns.append(PATTERN_ENDPOINTS)
    value, ok = canonical_pairing(b, v, k_degree)
    return PatternReport(tuple(patterns), value, ok)


@dataclass(frozen=True)
class UnbrokenReport:
    """Budget constraints on a curve none of whose pieces broke off into the chain."""

    total: int
    total_ok: bool
    entry_failures: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.total_ok and not self.entry_failures


def unbroken_checks(t: TString | Iterable[int], v: Sequence[int]) -> UnbrokenReport:
    """Check sum v_j >= 2 and v_j <= b_j - 1, equality only for b_j = 2.

    Equivalently v_j <= b_j - 2 unless b_j = 2, where v_j = 1 is allowed.
    Returns the 1-based indices of failing entries.
    """
    b = as_entries(t)
    if len(v) != len(b):
        raise ValueError(f"incidence vector length {len(v)} != ell = {len(b)}")
    failures = [
        j + 1
        for j, (bj, vj) in enumerate(zip(b, v))
        if not (vj <= bj - 2 or (bj == 2 and vj == 1))
    ]
    return UnbrokenReport(sum(v), sum(v) >= 2, tuple(failures))


# ----- Classification -----


@dataclass(frozen=True)
class ChainIncidence:
    """How a candidate divisor meets the chain.

    ``v`` is the (signed) vector E.C_j; ``internal`` the chain indices whose
    spheres are components of E; ``e_hits`` the chain indices met by the
    (-1)-sphere e, with repetition for a double point.
    """

    t: TString
    v: tuple[int, ...]
    internal: frozenset[int]
    e_hits: tuple[int, ...]

    def __post_init__(self):
        ell = self.t.ell
        if len(self.v) != ell:
            raise ValueError(f"v has length {len(self.v)}, expected {ell}")
        if not all(1 <= j <= ell for j in self.internal):
            raise ValueError(f"internal indices out of range: {sorted(self.internal)}")
        if not all(1 <= j <= ell for j in self.e_hits):
            raise ValueError(f"e_hits out of range: {self.e_hits}")
        if len(self.e_hits) > 2:
            raise ValueError(f"e meets at most two chain points, got {self.e_hits}")
        if tuple(sorted(self.e_hits)) != self.e_hits:
            raise ValueError(f"e_hits must be sorted: {self.e_hits}")

    @property
    def total(self) -> int:
        return sum(self.v)


@dataclass(frozen=True)
class BadCurveClass:
    """GOOD, or one of the bad shapes A / B1 / B2 with its index data."""

    kind: str
    x_prime: int | None = None
    x: int | None = None
    y: int | None = None
    y_prime: int | None = None

    def __post_init__(self):
        if self.kind not in ("GOOD", "A", "B1", "B2"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "A":
            if not (
                1 <= self.x_prime <= self.x
                and self.x < self.y - 1
                and self.y <= self.y_prime
            ):
                raise ValueError(
                    f"type A indices must satisfy 1 <= x' <= x < y-1 < y': "
                    f"x'={self.x_prime} x={self.x} y={self.y} y'={self.y_prime}"
                )


def _end_intervals(internal: frozenset[int], ell: int) -> tuple[int, int]:
    """(x, y): internal = {1..x} union {y..ell} with x = 0 / y = ell+1 for empty sides."""
    x = 0
    while x + 1 in internal:
        x += 1
    y = ell + 1
    while y - 1 in internal and y - 1 > x:
        y -= 1
    if internal != set(range(1, x + 1)) | set(range(y, ell + 1)):
        raise ValueError(
            f"internal spheres {sorted(internal)} are not end-intervals of 1..{ell}"
        )
    return x, y


def classify(inc: ChainIncidence) -> BadCurveClass:
    """Sort an incidence into GOOD or the unique bad shape it fits.

    GOOD means E . sum(C_j) >= 2.  A total of exactly 1 must come with
    internal spheres forming end-intervals matching one of the three bad
    shapes; anything else signals a modeling bug and raises.
    """
    ell = inc.t.ell
    if inc.total >= 2:
        return BadCurveClass("GOOD")
    if inc.total != 1:
        raise ValueError(
            f"a curve near the chain has E.sum(C_j) >= 1; got {inc.total}"
        )
    if not inc.internal:
        raise ValueError(
            "total incidence 1 with no internal spheres is the forbidden "
            "single-hit pattern"
        )
    x, y = _end_intervals(inc.internal, ell)
    if x >= 1 and y <= ell:
        left = [h for h in inc.e_hits if h <= x]
        right = [h for h in inc.e_hits if h >= y]
        if len(left) != 1 or len(right) != 1:
            raise ValueError(
                f"type A needs e to join the two intervals; e_hits={inc.e_hits}"
            )
        return BadCurveClass("A", x_prime=left[0], x=x, y=y, y_prime=right[0])
    if x >= 1:
        inside = [h for h in inc.e_hits if h <= x]
        outside = [h for h in inc.e_hits if h > x]
        if not inside:
            raise ValueError(f"type B1 needs e to meet the internal chain: {inc.e_hits}")
        return BadCurveClass(
            "B1", x_prime=min(inside), x=x, y_prime=outside[0] if outside else None
        )
    if y <= ell:
        inside = [h for h in inc.e_hits if h >= y]
        outside = [h for h in inc.e_hits if h < y]
        if not inside:
            raise ValueError(f"type B2 needs e to meet the internal chain: {inc.e_hits}")
        return BadCurveClass(
            "B2", x_prime=outside[0] if outside else None, y=y, y_prime=max(inside)
        )
    raise ValueError("empty internal set cannot be a bad curve")


# ----- Counting bounds -----


@dataclass(frozen=True)
class TypeBoundReport:
    """The per-type and joint counting bounds for maximal bad curves."""

    ell: int
    n_a: int
    n_b1: int
    n_b2: int
    a_ok: bool
    b1_ok: bool
    b2_ok: bool
    joint_ok: bool
    p_max: int
    p_ok: bool

    @property
    def passed(self) -> bool:
        return self.a_ok and self.b1_ok and self.b2_ok and self.joint_ok and self.p_ok


def type_bounds(ell: int, n_a: int = 0, n_b1: int = 0, n_b2: int = 0) -> TypeBoundReport:
    """Check the internal-sphere counts of maximal bad curves against ell.

    A maximal type-A curve with n internal spheres needs 2n <= ell + 4, the
    same for each of B1 and B2 alone, and coexisting B1 + B2 curves need
    2(n1 + n2) <= ell + 5.  The total number of bad curves is at most n (if
    a type-A curve exists) or n1 + n2, and always at most (ell + 5) / 2.
    """
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if min(n_a, n_b1, n_b2) < 0:
        raise ValueError("internal counts must be nonnegative")
    a_ok = 2 * n_a <= ell + 4
    b1_ok = 2 * n_b1 <= ell + 4
    b2_ok = 2 * n_b2 <= ell + 4
    joint_ok = 2 * (n_b1 + n_b2) <= ell + 5
    p_max = n_a if n_a else n_b1 + n_b2
    p_ok = 2 * p_max <= ell + 5
    return TypeBoundReport(ell, n_a, n_b1, n_b2, a_ok, b1_ok, b2_ok, joint_ok, p_max, p_ok)


def max_bad_curves(ell: int) -> int:
    """The largest number of bad curves the counting bounds permit."""
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    return (ell + 5) // 2


# ----- The contradiction machine on one candidate -----


@dataclass(frozen=True)
class CandidateOutcome:
    """One examined configuration: what it was and every reason it died."""

    t: tuple[int, ...]
    kind: str
    internal: tuple[int, ...]
    e_hits: tuple[int, ...]
    case: str | None
    checks: tuple[str, ...]
    verdict: str
    badness: int | None
    v: tuple[int, ...] | None
    mults: tuple[tuple[int, int], ...] | None

    @property
    def n_internal(self) -> int:
        return len(self.internal)

    def to_json(self) -> dict:
        return {
            "t": list(self.t),
            "kind": self.kind,
            "internal": list(self.internal),
            "e_hits": list(self.e_hits),
            "case": self.case,
            "checks": list(self.checks),
            "verdict": self.verdict,
            "badness": self.badness,
            "v": list(self.v) if self.v is not None else None,
            "mults": [list(m) for m in self.mults] if self.mults is not None else None,
        }


def build_candidate_config(
    t: TString | Iterable[int], internal: Iterable[int], e_hits: Sequence[int]
) -> tuple[CurveConfig, int]:
    """Chain plus the (-1)-sphere e wired to its hit points; returns (config, e id)."""
    b = as_entries(t)
    ell = len(b)
    e_id = ell + 1
    vertices = [Curve(j + 1, -bj, bj - 2, 0, f"C{j + 1}") for j, bj in enumerate(b)]
    vertices.append(Curve(e_id, -1, -1, 0, "e"))
    edges = [Edge(j, j + 1, 1) for j in range(1, ell)]
    hit_counts: dict[int, int] = {}
    for h in e_hits:
        hit_counts[h] = hit_counts.get(h, 0) + 1
    edges += [Edge(h, e_id, m) for h, m in sorted(hit_counts.items())]
    return CurveConfig.make(vertices, edges), e_id


def _component_subgraph(
    cfg: CurveConfig, comps: set[int]
) -> tuple[list[tuple[int, int, int]], bool]:
    """Edges induced on comps and whether the induced graph is connected."""
    edges = [(e.a, e.b, e.m) for e in cfg.edges if e.a in comps and e.b in comps]
    if not comps:
        return edges, True
    adj: dict[int, set[int]] = {v: set() for v in comps}
    for a, b, _ in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {min(comps)}
    frontier = [min(comps)]
    while frontier:
        v = frontier.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return edges, seen == comps


def staged_structure_checks(
    config: CurveConfig, components: Iterable[int], trace: BlowDownTrace
) -> set[str]:
    """Tree-shape invariants of the divisor at every stage the contraction reached.

    At each stage the remaining components of an exceptional curve of the
    first kind must form a connected tree with simple edges in which every
    (-1, -1) component meets the others at most twice in total.
    """
    fired: set[str] = set()
    remaining = set(components)
    stages = [config] + [s.config for s in trace.steps]
    for idx, cfg in enumerate(stages):
        if idx > 0:
            remaining.discard(trace.steps[idx - 1].vertex)
        if len(remaining) <= 1:
            continue
        edges, connected = _component_subgraph(cfg, remaining)
        if any(m >= 2 for _, _, m in edges):
            fired.add(MULTI_EDGE)
        if not connected:
            fired.add(DISCONNECTED_STAGE)
        elif len(edges) >= len(remaining):
            fired.add(CYCLE)
        for vid in remaining:
            v = cfg.curve(vid)
            if v.self_int == -1 and v.k_degree == -1:
                weight = sum(m for a, b, m in edges if vid in (a, b))
                if weight >= 3:
                    fired.add(THREE_NEIGHBOR)
    return fired


def _a_case(x_prime: int, x: int, y: int, y_prime: int, ell: int) -> str:
    left = "1" if x_prime == 1 else ("x" if x_prime == x else "mid")
    right = "ell" if y_prime == ell else ("y" if y_prime == y else "mid")
    if (left, right) == ("1", "ell"):
        return "A5"
    if (left, right) == ("mid", "mid"):
        return "A1"
    if "mid" in (left, right):
        return "A2"
    if (left, right) == ("x", "y"):
        return "A3"
    return "A4"  # ("1", "y") or ("x", "ell")


def _b_case(kind: str, hit: int, lo: int, hi: int) -> str:
    """Subcase of a B-type by where e meets the internal interval [lo, hi]."""
    if kind == "B1":
        if hit == lo:
            return "B1.1"
        return "B1.3" if hit == hi else "B1.2"
    if hit == hi:
        return "B2.1"
    return "B2.3" if hit == lo else "B2.2"


def examine_candidate(
    t: TString | Iterable[int],
    kind: str,
    internal: Iterable[int],
    e_hits: Sequence[int],
    disc: Sequence[Fraction] | None = None,
) -> CandidateOutcome:
    """Run every combinatorial obstruction against one candidate bad curve."""
    b = as_entries(t)
    ell = len(b)
    internal = tuple(sorted(internal))
    e_hits = tuple(sorted(e_hits))
    if disc is None:
        disc = discrepancies(b)

    config, e_id = build_candidate_config(b, internal, e_hits)
    comps = set(internal) | {e_id}
    externals = [j for j in range(1, ell + 1) if j not in internal]

    checks: set[str] = set()

    # incidence patterns of the bare (-1)-sphere
    v_e = [0] * ell
    for h in e_hits:
        v_e[h - 1] += 1
    pat = forbidden_patterns(b, v_e, k_degree=-1)
    checks.update(pat.patterns)
    if not pat.pairing_ok:
        checks.add(MAGIC_E)

    # contract E with the external chain frozen; the rational-curve rule
    # applies to every image, external or not
    trace = contract_all(config, frozen=externals)
    checks.update(staged_structure_checks(config, comps, trace))
    if trace.status == SW_VIOLATION:
        checks.add(SW)
    elif trace.status == STUCK:
        checks.add(NO_MINUS_ONE)

    badness: int | None = None
    v_full: tuple[int, ...] | None = None
    mult_items: tuple[tuple[int, int], ...] | None = None
    if trace.status == CONTRACTED_TO_POINT:
        mults = derived_multiplicities(trace)
        mult_items = tuple(sorted(mults.items()))
        if any(m <= 0 for m in mults.values()):
            checks.add(MULT_NONPOSITIVE)
        else:
            v_full = tuple(
                divisor_pairing(config, mults, j) for j in range(1, ell + 1)
            )
            badness = sum(v_full)
            k_e = divisor_k(config, mults)
            if k_e != -1:
                raise AssertionError(f"contracted divisor has K-degree {k_e}, not -1")
            if badness <= 0:
                checks.add(ZERO_INCIDENCE)
            value = sum((aj * vj for aj, vj in zip(disc, v_full)), Fraction(0))
            if not value < k_e:
                checks.add(MAGIC_FULL)

    if checks:
        verdict = DIES
    else:
        verdict = SURVIVES_BAD if badness == 1 else SURVIVES_GOOD

    case: str | None = None
    if kind == "A":
        x, y = _end_intervals(frozenset(internal), ell)
        case = _a_case(e_hits[0], x, y, e_hits[1], ell)
    elif kind in ("B1", "B2") and len(set(e_hits)) == len(e_hits):
        lo, hi = min(internal), max(internal)
        inside = [h for h in e_hits if lo <= h <= hi]
        outside = [h for h in e_hits if not lo <= h <= hi]
        if len(inside) == 1 and len(outside) <= 1:
            case = _b_case(kind, inside[0], lo, hi)

    return CandidateOutcome(
        t=b,
        kind=kind,
        internal=internal,
        e_hits=e_hits,
        case=case,
        checks=tuple(sorted(checks)),
        verdict=verdict,
        badness=badness,
        v=v_full,
        mults=mult_items,
    )


def enumerate_candidates(ell: int) -> list[tuple[str, tuple[int, ...], tuple[int, ...]]]:
    """All syntactically admissible (kind, internal, e_hits) for a chain of length ell.

    Type A: internal end-intervals {1..x}, {y..ell} with a nonempty gap, e
    joining them at (x', y').  Types B1/B2: one end-interval, e meeting it
    at one point and at most one more point anywhere (including the same
    point twice, another internal point, an external sphere, or nothing --
    the last standing in for a hit somewhere off the chain).
    """
    out: list[tuple[str, tuple[int, ...], tuple[int, ...]]] = []
    for x in range(1, ell - 1):
        for y in range(x + 2, ell + 1):
            internal = tuple(range(1, x + 1)) + tuple(range(y, ell + 1))
            for xp in range(1, x + 1):
                for yp in range(y, ell + 1):
                    out.append(("A", internal, (xp, yp)))
    for x in range(1, ell):
        internal = tuple(range(1, x + 1))
        for xp in range(1, x + 1):
            out.append(("B1", internal, (xp,)))
            for h in range(xp, ell + 1):
                out.append(("B1", internal, (xp, h)))
    for y in range(2, ell + 1):
        internal = tuple(range(y, ell + 1))
        for yp in range(y, ell + 1):
            out.append(("B2", internal, (yp,)))
            for h in range(1, yp + 1):
                out.append(("B2", internal, (h, yp)))
    return out


# ----- Pair compatibility -----


def _remap_e(mults: Mapping[int, int], old_e: int, new_e: int) -> dict[int, int]:
    return {(new_e if vid == old_e else vid): m for vid, m in mults.items()}


def pair_product(
    t: TString | Iterable[int], s1: CandidateOutcome, s2: CandidateOutcome
) -> int:
    """E1 . E2 for two candidates over the same chain, each with its own e."""
    b = as_entries(t)
    ell = len(b)
    e1, e2 = ell + 1, ell + 2
    vertices = [Curve(j + 1, -bj, bj - 2, 0, f"C{j + 1}") for j, bj in enumerate(b)]
    vertices += [Curve(e1, -1, -1, 0, "e1"), Curve(e2, -1, -1, 0, "e2")]
    edges = [Edge(j, j + 1, 1) for j in range(1, ell)]
    for hits, eid in ((s1.e_hits, e1), (s2.e_hits, e2)):
        counts: dict[int, int] = {}
        for h in hits:
            counts[h] = counts.get(h, 0) + 1
        edges += [Edge(h, eid, m) for h, m in sorted(counts.items())]
    combined = CurveConfig.make(vertices, edges)
    m1 = _remap_e(dict(s1.mults), ell + 1, e1)
    m2 = _remap_e(dict(s2.mults), ell + 1, e2)
    return divisor_product(combined, m1, m2)


# ----- The oracle -----


@dataclass(frozen=True)
class FamilyResult:
    ell: int
    literal: tuple[int, ...]
    literal_is_tstring: bool
    corrected: tuple[int, ...]
    corrected_bad_survivors: int
    reversed_bad_survivors: int


@dataclass(frozen=True)
class JointRecord:
    t: tuple[int, ...]
    b1_internal: tuple[int, ...]
    b2_internal: tuple[int, ...]
    product: int
    compatible: bool
    joint_ok: bool


@dataclass(frozen=True)
class OracleReport:
    ell_max: int
    outcomes: tuple[CandidateOutcome, ...]
    bound_failures: tuple[CandidateOutcome, ...]
    joint_records: tuple[JointRecord, ...]
    joint_failures: tuple[JointRecord, ...]
    a1_unkilled: tuple[CandidateOutcome, ...]
    a1_off_certificate: tuple[CandidateOutcome, ...]
    a5_unkilled: tuple[CandidateOutcome, ...]
    a5_off_certificate: tuple[CandidateOutcome, ...]
    reversal_failures: tuple[tuple[CandidateOutcome, str], ...]
    family_results: tuple[FamilyResult, ...]

    @property
    def survivors_bad(self) -> tuple[CandidateOutcome, ...]:
        return tuple(o for o in self.outcomes if o.verdict == SURVIVES_BAD)

    @property
    def passed(self) -> bool:
        return not (
            self.bound_failures
            or self.joint_failures
            or self.a1_unkilled
            or self.a1_off_certificate
            or self.a5_unkilled
            or self.a5_off_certificate
            or self.reversal_failures
            or any(
                f.corrected_bad_survivors or f.reversed_bad_survivors
                for f in self.family_results
            )
        )


def _mirror_key(o: CandidateOutcome) -> tuple:
    ell = len(o.t)
    kind = {"A": "A", "B1": "B2", "B2": "B1"}[o.kind]
    internal = tuple(sorted(ell + 1 - j for j in o.internal))
    hits = tuple(sorted(ell + 1 - j for j in o.e_hits))
    return (tuple(reversed(o.t)), kind, internal, hits)


def case_oracle(ell_max: int) -> OracleReport:
    """Exhaustively examine every candidate bad curve for chains of length <= ell_max.

    Checks, beyond the per-candidate verdicts: the A1 and A5 cases always
    die with their expected certificates; bad survivors obey 2n <= ell + 4;
    compatible B1 + B2 survivor pairs obey 2(n1 + n2) <= ell + 5; the
    surviving set is closed under string reversal (with B1 and B2 swapped);
    and the string family [2, .., 2, ell + 3] (and its reversal) has no bad
    survivors at all.  The literal family [2, .., 2, ell + 1] fails the
    checksum, so its entry in the report is vacuous; the corrected family is
    the content-bearing one.
    """
    if not 1 <= ell_max <= ORACLE_LENGTH_CAP:
        raise ValueError(f"ell_max must be in 1..{ORACLE_LENGTH_CAP}, got {ell_max}")

    outcomes: list[CandidateOutcome] = []
    by_string: dict[tuple[int, ...], list[CandidateOutcome]] = {}
    for ell, strings in sorted(enumerate_tstrings(ell_max).items()):
        for t in sorted(as_entries(s) for s in strings):
            disc = discrepancies(t)
            rows = [
                examine_candidate(t, kind, internal, hits, disc)
                for kind, internal, hits in enumerate_candidates(ell)
            ]
            rows.sort(key=lambda o: (o.kind, o.internal, o.e_hits))
            outcomes.extend(rows)
            by_string[t] = rows

    bound_failures = []
    joint_records: list[JointRecord] = []
    joint_failures = []
    a1_unkilled, a1_off = [], []
    a5_unkilled, a5_off = [], []
    for t, rows in by_string.items():
        ell = len(t)
        bad = [o for o in rows if o.verdict == SURVIVES_BAD]
        bound_failures += [o for o in bad if 2 * o.n_internal > ell + 4]
        for o in rows:
            if o.case == "A1":
                if o.verdict != DIES:
                    a1_unkilled.append(o)
                elif not {THREE_NEIGHBOR, NO_MINUS_ONE} & set(o.checks):
                    a1_off.append(o)
            elif o.case == "A5":
                if o.verdict != DIES:
                    a5_unkilled.append(o)
                elif PATTERN_ENDPOINTS not in o.checks:
                    a5_off.append(o)
        b1 = [o for o in bad if o.kind == "B1"]
        b2 = [o for o in bad if o.kind == "B2"]
        for s1 in b1:
            for s2 in b2:
                if set(s1.internal) & set(s2.internal):
                    continue  # shared components across types cannot coexist
                product = pair_product(t, s1, s2)
                compatible = product == 0
                n12 = s1.n_internal + s2.n_internal
                ok = (not compatible) or 2 * n12 <= ell + 5
                rec = JointRecord(
                    t, s1.internal, s2.internal, product, compatible, ok
                )
                joint_records.append(rec)
                if not ok:
                    joint_failures.append(rec)

    verdict_of: dict[tuple, str] = {
        (o.t, o.kind, o.internal, o.e_hits): o.verdict for o in outcomes
    }
    reversal_failures = []
    for o in outcomes:
        mirror = verdict_of.get(_mirror_key(o))
        if mirror is None:
            reversal_failures.append((o, "mirror candidate missing"))
        elif mirror != o.verdict:
            reversal_failures.append((o, f"mirror verdict {mirror} != {o.verdict}"))

    def count_bad(s: tuple[int, ...]) -> int:
        return sum(1 for o in by_string.get(s, ()) if o.verdict == SURVIVES_BAD)

    family_results = []
    for ell in range(1, ell_max + 1):
        literal = tuple([2] * (ell - 1) + [ell + 1])
        corrected = tuple([2] * (ell - 1) + [ell + 3])
        rev = tuple(reversed(corrected))
        assert is_tstring(corrected).accepted, corrected
        family_results.append(
            FamilyResult(
                ell=ell,
                literal=literal,
                literal_is_tstring=is_tstring(literal).accepted,
                corrected=corrected,
                corrected_bad_survivors=count_bad(corrected),
                reversed_bad_survivors=count_bad(rev),
            )
        )

    return OracleReport(
        ell_max=ell_max,
        outcomes=tuple(outcomes),
        bound_failures=tuple(bound_failures),
        joint_records=tuple(joint_records),
        joint_failures=tuple(joint_failures),
        a1_unkilled=tuple(a1_unkilled),
        a1_off_certificate=tuple(a1_off),
        a5_unkilled=tuple(a5_unkilled),
        a5_off_certificate=tuple(a5_off),
        reversal_failures=tuple(reversal_failures),
        family_results=tuple(family_results),
    )


def oracle_jsonl(report: OracleReport) -> list[str]:
    """One byte-stable line per examined candidate, in enumeration order."""
    return [
        json.dumps(o.to_json(), separators=(",", ":")) for o in report.outcomes
    ]


# ----- The interior-hit contradiction on -2-chains -----


def interior_hit_contradiction(n: int, i: int) -> BlowDownTrace:
    """A (-1)-sphere meeting an interior sphere of a -2-chain, contracted.

    For a chain of n >= 3 spheres of self-intersection -2 and e meeting C_i
    once (2 <= i <= n-1), repeatedly blowing down (-1)-spheres always
    produces a rational curve violating the K-degree rule, proving e cannot
    exist.  Returns the trace; callers assert the SW_VIOLATION status.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not 2 <= i <= n - 1:
        raise ValueError(f"interior index required: i={i} not in [2, {n - 1}]")
    base = chain_config([-2] * n)
    e_id = n + 1
    config = CurveConfig.make(
        list(base.vertices) + [Curve(e_id, -1, -1, 0, "e")],
        list(base.edges) + [Edge(i, e_id, 1)],
    )
    return contract_all(config)
