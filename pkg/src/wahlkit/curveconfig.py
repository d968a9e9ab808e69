"""Blow-up / blow-down calculus on configurations of rational curves.

A configuration is a weighted intersection graph: each vertex is an
irreducible rational curve carrying its self-intersection C**2, its K-degree
K.C, and a nonnegative multiplicity in a tracked divisor class; each edge
carries a positive intersection multiplicity.  Only this homological data is
tracked — genus and singularities of images are out of scope because every
argument in the package needs nothing else.

The central notion is an *exceptional curve of the first kind*: the total
transform of a (-1)-curve under a sequence of blow-ups, i.e. a configuration
that can be contracted step by step, each step blowing down a curve with
C**2 = K.C = -1.  Such divisors E satisfy a rigid list of structural
properties (checked by :func:`validate_zariski`):

  (1) every component has negative self-intersection;
  (2) distinct components meet at most once, transversely;
  (3) the dual graph is a connected tree;
  (5) component multiplicities obey a linear recursion (two indexing
      conventions are reported, see validate_zariski);
  (6) E.A_i = 0 for every component contracted before the last and
      E.A_last = -1; consequently E**2 = -1 and K.E = -1;
  (7) some component is a (-1)-curve and every (-1)-component has at most
      two neighbours.

The "SW rule" encodes the smooth-rational-curve obstruction available in the
ambient manifolds we care about: a rational curve with K.A <= -1 must be a
(-1)-curve (K.A = -1, A**2 = -1).  Anything else with K.A <= -1 cannot
exist, and sw_check flags it.

Configs are immutable; every operation returns a new value.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

# Terminal states of contract_all.
CONTRACTED_TO_POINT = "CONTRACTED_TO_POINT"
STUCK = "STUCK"
SW_VIOLATION = "SW_VIOLATION"


@dataclass(frozen=True)
class Curve:
    id: int
    self_int: int
    k_degree: int
    mult: int = 0
    label: str = ""


@dataclass(frozen=True)
class Edge:
    """Unordered pair a < b with intersection multiplicity m >= 1."""

    a: int
    b: int
    m: int = 1


@dataclass(frozen=True)
class CurveConfig:
    vertices: tuple[Curve, ...]
    edges: tuple[Edge, ...]

    @staticmethod
    def make(vertices: Iterable[Curve], edges: Iterable[Edge]) -> "CurveConfig":
        """Canonicalize (sort) and validate a configuration."""
        vs = tuple(sorted(vertices, key=lambda v: v.id))
        ids = [v.id for v in vs]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate vertex ids: {ids}")
        known = set(ids)
        norm = []
        for e in edges:
            a, b = (e.a, e.b) if e.a < e.b else (e.b, e.a)
            if a == b:
                raise ValueError(f"self-edge at vertex {a}")
            if a not in known or b not in known:
                raise ValueError(f"edge ({e.a},{e.b}) references missing vertex")
            if e.m < 1:
                raise ValueError(f"edge ({a},{b}) has multiplicity {e.m} < 1")
            norm.append(Edge(a, b, e.m))
        es = tuple(sorted(norm, key=lambda e: (e.a, e.b)))
        pairs = [(e.a, e.b) for e in es]
        if len(set(pairs)) != len(pairs):
            raise ValueError(f"duplicate edges: {pairs}")
        return CurveConfig(vs, es)

    def ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def curve(self, vid: int) -> Curve:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(f"no vertex {vid}")

    def has_vertex(self, vid: int) -> bool:
        return any(v.id == vid for v in self.vertices)

    def pair(self, u: int, w: int) -> int:
        """Intersection number of two distinct curves (0 when no edge)."""
        if u == w:
            raise ValueError("pair() is for distinct curves; use self_int")
        a, b = (u, w) if u < w else (w, u)
        for e in self.edges:
            if e.a == a and e.b == b:
                return e.m
        return 0

    def neighbors(self, vid: int) -> dict[int, int]:
        """Map neighbour id -> intersection multiplicity."""
        out: dict[int, int] = {}
        for e in self.edges:
            if e.a == vid:
                out[e.b] = e.m
            elif e.b == vid:
                out[e.a] = e.m
        return out


def single_curve(
    self_int: int = -1, k_degree: int = -1, mult: int = 1, label: str = "E1"
) -> CurveConfig:
    """One-vertex configuration, the usual seed for blow-up experiments."""
    return CurveConfig.make([Curve(1, self_int, k_degree, mult, label)], [])


def chain_config(self_ints: Sequence[int], mults: Sequence[int] | None = None) -> CurveConfig:
    """A chain of embedded rational curves with the given self-intersections.

    K-degrees are filled in by adjunction (K.C = -2 - C**2); ids run 1..n.
    """
    n = len(self_ints)
    if mults is None:
        mults = [0] * n
    vertices = [
        Curve(i + 1, s, -2 - s, mults[i], f"C{i + 1}") for i, s in enumerate(self_ints)
    ]
    edges = [Edge(i, i + 1, 1) for i in range(1, n)]
    return CurveConfig.make(vertices, edges)


# ----- Point specifications for blow-up -----


@dataclass(frozen=True)
class GenericOn:
    """A generic point on curve v (away from all other curves)."""

    v: int


@dataclass(frozen=True)
class Intersection:
    """One of the intersection points of curves v and w."""

    v: int
    w: int


@dataclass(frozen=True)
class FreePoint:
    """A point on no tracked curve."""


PointSpec = GenericOn | Intersection | FreePoint


# ----- Blow-up / blow-down -----


def blow_up(c: CurveConfig, point: PointSpec, label: str | None = None) -> CurveConfig:
    """Blow up a point, replacing every curve through it by its total transform.

    The new exceptional curve e has e**2 = K.e = -1.  A curve through the
    point loses 1 from its self-intersection and gains 1 of K-degree; e
    inherits the sum of the multiplicities of the curves through the point
    (so the tracked divisor class is replaced by its total transform).
    """
    new_id = max((v.id for v in c.vertices), default=0) + 1
    lab = label if label is not None else f"E{new_id}"
    if isinstance(point, FreePoint):
        e = Curve(new_id, -1, -1, 0, lab)
        return CurveConfig.make(c.vertices + (e,), c.edges)
    if isinstance(point, GenericOn):
        v = c.curve(point.v)
        e = Curve(new_id, -1, -1, v.mult, lab)
        vertices = [replace(u, self_int=u.self_int - 1, k_degree=u.k_degree + 1)
                    if u.id == v.id else u for u in c.vertices]
        edges = list(c.edges) + [Edge(v.id, new_id, 1)]
        return CurveConfig.make(vertices + [e], edges)
    if isinstance(point, Intersection):
        v, w = c.curve(point.v), c.curve(point.w)
        if c.pair(v.id, w.id) < 1:
            raise ValueError(f"curves {v.id} and {w.id} do not intersect")
        e = Curve(new_id, -1, -1, v.mult + w.mult, lab)
        vertices = [replace(u, self_int=u.self_int - 1, k_degree=u.k_degree + 1)
                    if u.id in (v.id, w.id) else u for u in c.vertices]
        a, b = (v.id, w.id) if v.id < w.id else (w.id, v.id)
        edges = []
        for ed in c.edges:
            if ed.a == a and ed.b == b:
                if ed.m > 1:
                    edges.append(Edge(a, b, ed.m - 1))
            else:
                edges.append(ed)
        edges += [Edge(v.id, new_id, 1), Edge(w.id, new_id, 1)]
        return CurveConfig.make(vertices + [e], edges)
    raise TypeError(f"unknown point kind: {point!r}")


def blow_down(c: CurveConfig, vid: int) -> CurveConfig:
    """Blow down a curve with self-intersection -1 and K-degree -1.

    Standard total-transform bookkeeping: for curves C, D meeting the
    contracted curve with multiplicities (C.e), (D.e), the images satisfy
    C.D += (C.e)(D.e), C**2 += (C.e)**2 and K.C -= C.e.  Multiplicities of
    the remaining curves are unchanged.
    """
    v = c.curve(vid)
    if v.self_int != -1 or v.k_degree != -1:
        raise ValueError(
            f"vertex {vid} has (self, K) = ({v.self_int}, {v.k_degree}), need (-1, -1)"
        )
    hits = c.neighbors(vid)
    vertices = []
    for u in c.vertices:
        if u.id == vid:
            continue
        h = hits.get(u.id, 0)
        if h:
            u = replace(u, self_int=u.self_int + h * h, k_degree=u.k_degree - h)
        vertices.append(u)
    pairs: dict[tuple[int, int], int] = {}
    for e in c.edges:
        if vid in (e.a, e.b):
            continue
        pairs[(e.a, e.b)] = e.m
    touched = sorted(hits)
    for i in range(len(touched)):
        for j in range(i + 1, len(touched)):
            key = (touched[i], touched[j])
            pairs[key] = pairs.get(key, 0) + hits[key[0]] * hits[key[1]]
    edges = [Edge(a, b, m) for (a, b), m in pairs.items() if m > 0]
    return CurveConfig.make(vertices, edges)


# ----- SW obstruction rule -----


@dataclass(frozen=True)
class SWViolation:
    vertex: int
    self_int: int
    k_degree: int
    rule: str


def sw_check(c: CurveConfig, exempt: Iterable[int] = ()) -> tuple[SWViolation, ...]:
    """Flag curves that cannot exist: K.A <= -2, or K.A = -1 with A**2 != -1."""
    skip = set(exempt)
    out = []
    for v in c.vertices:
        if v.id in skip:
            continue
        if v.k_degree <= -2:
            out.append(SWViolation(v.id, v.self_int, v.k_degree, "k_degree <= -2"))
        elif v.k_degree == -1 and v.self_int != -1:
            out.append(
                SWViolation(v.id, v.self_int, v.k_degree, "k_degree = -1 but self_int != -1")
            )
    return tuple(out)


# ----- Full contraction -----


@dataclass(frozen=True)
class ContractionStep:
    """One blow-down: the contracted vertex, the config after it, violations found."""

    vertex: int
    config: CurveConfig
    violations: tuple[SWViolation, ...] = ()

    def summary(self) -> dict:
        return {
            "contracted": self.vertex,
            "remaining": [
                [v.id, v.self_int, v.k_degree] for v in self.config.vertices
            ],
            "violations": [
                {"vertex": w.vertex, "rule": w.rule} for w in self.violations
            ],
        }


@dataclass(frozen=True)
class BlowDownTrace:
    initial: CurveConfig
    steps: tuple[ContractionStep, ...]
    status: str

    @property
    def final_config(self) -> CurveConfig:
        return self.steps[-1].config if self.steps else self.initial

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(s.vertex for s in self.steps)


def contract_all(
    c: CurveConfig,
    frozen: Iterable[int] = (),
    sw_exempt: Iterable[int] = (),
    tie_break: str = "lowest",
) -> BlowDownTrace:
    """Blow down (-1,-1)-curves until none are left, checking the SW rule each step.

    Vertices in ``frozen`` are never contracted (they ride along and absorb
    bookkeeping); vertices in ``sw_exempt`` are excluded from the SW rule.
    Ties are broken by lowest id (or highest, for the order-independence
    check).  Terminal status:

    - CONTRACTED_TO_POINT: every non-frozen vertex was contracted;
    - STUCK: non-frozen vertices remain but none is a (-1,-1)-curve;
    - SW_VIOLATION: a step produced a curve violating the SW rule.
    """
    if tie_break not in ("lowest", "highest"):
        raise ValueError(f"tie_break must be 'lowest' or 'highest', got {tie_break!r}")
    hold = frozenset(frozen)
    steps: list[ContractionStep] = []
    cur = c
    while True:
        candidates = [
            v.id
            for v in cur.vertices
            if v.id not in hold and v.self_int == -1 and v.k_degree == -1
        ]
        if not candidates:
            remaining = [v for v in cur.vertices if v.id not in hold]
            status = CONTRACTED_TO_POINT if not remaining else STUCK
            return BlowDownTrace(c, tuple(steps), status)
        vid = min(candidates) if tie_break == "lowest" else max(candidates)
        cur = blow_down(cur, vid)
        violations = sw_check(cur, exempt=sw_exempt)
        steps.append(ContractionStep(vid, cur, violations))
        if violations:
            return BlowDownTrace(c, tuple(steps), SW_VIOLATION)


def derived_multiplicities(trace: BlowDownTrace) -> dict[int, int]:
    """Component multiplicities of the contracted divisor, from the trace.

    Reading the contraction backwards as a creation history, the first-created
    component (contracted last) has multiplicity 1, and each later component
    inherits the multiplicity-weighted sum of its intersections with the
    components already present at its creation stage.  This reproduces the
    total-transform bookkeeping of blow_up exactly.
    """
    if trace.status != CONTRACTED_TO_POINT:
        raise ValueError(f"trace did not contract to a point: {trace.status}")
    order = trace.order
    n = len(order)
    creation = order[::-1]

    def stage(i: int) -> CurveConfig:
        # config in which the i-th created component is newest: n - i steps done
        k = n - i
        return trace.initial if k == 0 else trace.steps[k - 1].config

    mult: dict[int, int] = {}
    for i in range(1, n + 1):
        ai = creation[i - 1]
        if i == 1:
            mult[ai] = 1
            continue
        cfg = stage(i)
        mult[ai] = sum(mult[creation[j - 1]] * cfg.pair(creation[j - 1], ai) for j in range(1, i))
    return mult


# ----- Divisor-class arithmetic -----


def divisor_pairing(c: CurveConfig, mults: Mapping[int, int], target: int) -> int:
    """(sum m_i A_i) . C_target, including the self-term when target is a component."""
    total = mults.get(target, 0) * c.curve(target).self_int
    for vid, m in mults.items():
        if vid != target and m:
            total += m * c.pair(vid, target)
    return total


def divisor_self(c: CurveConfig, mults: Mapping[int, int]) -> int:
    """(sum m_i A_i)**2."""
    items = [(vid, m) for vid, m in sorted(mults.items()) if m]
    total = sum(m * m * c.curve(vid).self_int for vid, m in items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            total += 2 * items[i][1] * items[j][1] * c.pair(items[i][0], items[j][0])
    return total


def divisor_k(c: CurveConfig, mults: Mapping[int, int]) -> int:
    """K . (sum m_i A_i)."""
    return sum(m * c.curve(vid).k_degree for vid, m in mults.items())


def divisor_product(c: CurveConfig, m1: Mapping[int, int], m2: Mapping[int, int]) -> int:
    """(sum m1_i A_i) . (sum m2_j B_j) for divisors with disjoint components."""
    shared = {v for v, m in m1.items() if m} & {v for v, m in m2.items() if m}
    if shared:
        raise ValueError(f"divisors share components: {sorted(shared)}")
    total = 0
    for v1, a in m1.items():
        if not a:
            continue
        for v2, b in m2.items():
            if b:
                total += a * b * c.pair(v1, v2)
    return total


# ----- Structural validation -----


def _induced_edges(c: CurveConfig, comp: set[int]) -> list[Edge]:
    return [e for e in c.edges if e.a in comp and e.b in comp]


def _connected(comp: set[int], edges: list[Edge]) -> bool:
    if not comp:
        return False
    seen = {next(iter(sorted(comp)))}
    frontier = list(seen)
    adj: dict[int, set[int]] = {v: set() for v in comp}
    for e in edges:
        adj[e.a].add(e.b)
        adj[e.b].add(e.a)
    while frontier:
        v = frontier.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen == comp


@dataclass(frozen=True)
class ZariskiReport:
    """Property report for a candidate exceptional curve of the first kind.

    ``passed`` covers the unambiguous properties.  The two multiplicity-
    recursion fields are informational: they report which indexing convention
    of the component-multiplicity recursion reproduces the given
    multiplicities (creation order with stage intersections, and contraction
    order with original intersections), without taking a side.
    """

    contraction_status: str
    negative_self_ints: bool
    simple_edges: bool
    connected_tree: bool
    pairing_zero_nonfinal: bool
    pairing_final: bool
    pairing_total: bool
    self_pairing: bool
    k_pairing: bool
    has_minus_one: bool
    minus_one_neighbors_ok: bool
    mult_recursion_creation_order: bool | None
    mult_recursion_contraction_order: bool | None
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def validate_zariski(
    c: CurveConfig, mults: Mapping[int, int] | None = None
) -> ZariskiReport:
    """Check the structural properties of an exceptional curve of the first kind.

    ``mults`` assigns the divisor multiplicities; by default the stored
    per-vertex multiplicities are used.  Components are the keys with m >= 1;
    all other vertices are frozen bystanders during the contraction.
    """
    if mults is None:
        mults = {v.id: v.mult for v in c.vertices if v.mult > 0}
    mults = {vid: m for vid, m in mults.items() if m}
    comp = set(mults)
    if not comp:
        raise ValueError("no components: empty multiplicity assignment")
    frozen = [v.id for v in c.vertices if v.id not in comp]
    # Contractibility is an abstract property of the divisor; the SW rule is a
    # separate ambient obstruction, applied by callers when it is in force.
    trace = contract_all(c, frozen=frozen, sw_exempt=c.ids())

    failures: list[str] = []

    def need(name: str, ok: bool) -> bool:
        if not ok:
            failures.append(name)
        return ok

    negative_self_ints = need(
        "negative_self_ints", all(c.curve(v).self_int < 0 for v in comp)
    )
    induced = _induced_edges(c, comp)
    simple_edges = need("simple_edges", all(e.m == 1 for e in induced))
    connected_tree = need(
        "connected_tree", _connected(comp, induced) and len(induced) == len(comp) - 1
    )
    minus_ones = [
        v for v in comp if c.curve(v).self_int == -1 and c.curve(v).k_degree == -1
    ]
    has_minus_one = need("has_minus_one", bool(minus_ones))
    minus_one_neighbors_ok = need(
        "minus_one_neighbors_ok",
        all(
            sum(m for u, m in c.neighbors(v).items() if u in comp) <= 2
            for v in minus_ones
        ),
    )

    contracted = need("contraction", trace.status == CONTRACTED_TO_POINT)
    if contracted:
        last = trace.order[-1]
        pairing_zero_nonfinal = need(
            "pairing_zero_nonfinal",
            all(divisor_pairing(c, mults, v) == 0 for v in comp if v != last),
        )
        pairing_final = need("pairing_final", divisor_pairing(c, mults, last) == -1)
        pairing_total = need(
            "pairing_total", sum(divisor_pairing(c, mults, v) for v in comp) == -1
        )
        self_pairing = need("self_pairing", divisor_self(c, mults) == -1)
        k_pairing = need("k_pairing", divisor_k(c, mults) == -1)
        derived = derived_multiplicities(trace)
        creation_ok = derived == dict(mults)
        # printed convention: contraction-order indices, original intersections
        order = trace.order
        rec: dict[int, int] = {}
        for idx, vid in enumerate(order):
            if idx == 0:
                rec[vid] = 1
            else:
                rec[vid] = sum(rec[u] * c.pair(u, vid) for u in order[:idx])
        contraction_ok = rec == dict(mults)
    else:
        pairing_zero_nonfinal = pairing_final = pairing_total = False
        self_pairing = k_pairing = False
        creation_ok = contraction_ok = None

    return ZariskiReport(
        contraction_status=trace.status,
        negative_self_ints=negative_self_ints,
        simple_edges=simple_edges,
        connected_tree=connected_tree,
        pairing_zero_nonfinal=pairing_zero_nonfinal,
        pairing_final=pairing_final,
        pairing_total=pairing_total,
        self_pairing=self_pairing,
        k_pairing=k_pairing,
        has_minus_one=has_minus_one,
        minus_one_neighbors_ok=minus_one_neighbors_ok,
        mult_recursion_creation_order=creation_ok,
        mult_recursion_contraction_order=contraction_ok,
        failures=tuple(failures),
    )


def is_nested(e1: Iterable[int], e2: Iterable[int]) -> bool:
    """Whether one component set contains the other."""
    s1, s2 = set(e1), set(e2)
    return s1 <= s2 or s2 <= s1


def nesting_conflicts(divisors: Sequence[Iterable[int]]) -> list[tuple[int, int]]:
    """Index pairs of divisors that share components without being nested.

    Exceptional curves of the first kind appearing in one ambient limit must
    be nested as soon as they share a component, so any pair returned here
    signals an impossible combination.
    """
    sets = [set(d) for d in divisors]
    bad = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j] and not is_nested(sets[i], sets[j]):
                bad.append((i, j))
    return bad


# ----- Iterated blow-down of a chain against a transverse curve -----


@dataclass(frozen=True)
class IteratedBlowdown:
    """Outcome of contracting a chain away from a transverse rational curve S.

    ``k_final`` is the K-degree of the image T of S; the bound
    k_final <= k_start - 2(n-1) holds for every valid chain, with equality in
    particular when i = 2 and the trailing spheres are all -2-curves.
    ``profile`` records, per step, (contracted id, S.contracted, remaining
    chain ids S meets afterwards).
    """

    n: int
    i: int
    chain: tuple[int, ...]
    k_start: int
    k_final: int
    trace: BlowDownTrace
    profile: tuple[tuple[int, int, tuple[int, ...]], ...]

    @property
    def reduction(self) -> int:
        return self.k_start - self.k_final

    @property
    def bound_holds(self) -> bool:
        return self.k_final <= self.k_start - 2 * (self.n - 1)


def iterated_blowdown_trace(
    n: int, i: int, chain_self_ints: Sequence[int], kS: int
) -> IteratedBlowdown:
    """Contract a chain F_1..F_n (unique (-1)-curve F_i, i interior) under S.

    S meets F_i once transversely and nothing else.  The chain must be an
    exceptional curve of the first kind (checked by contracting it alone).
    Returns the trace with S frozen and the K-degree of the image of S;
    raises on invalid input, and on violation of the invariants the contraction
    is guaranteed to satisfy (each step meets S, the contracted set stays an
    interval, and the final bound K.T <= K.S - 2(n-1)).
    """
    chain = tuple(int(x) for x in chain_self_ints)
    if len(chain) != n:
        raise ValueError(f"chain has {len(chain)} entries, expected n={n}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 2 <= i <= n - 1:
        raise ValueError(f"the (-1)-curve must be interior: i={i} not in [2, {n - 1}]")
    if any(x > -1 for x in chain):
        raise ValueError(f"chain entries must be <= -1: {list(chain)}")
    if chain[i - 1] != -1:
        raise ValueError(f"chain[{i}] = {chain[i - 1]}, expected -1")
    if chain.count(-1) != 1:
        raise ValueError(f"chain must contain exactly one -1, got {list(chain)}")

    bare = chain_config(chain)
    bare_trace = contract_all(bare, sw_exempt=bare.ids())
    if bare_trace.status != CONTRACTED_TO_POINT:
        raise ValueError(
            f"chain {list(chain)} is not an exceptional curve of the first kind "
            f"({bare_trace.status})"
        )

    s_id = n + 1
    vertices = list(chain_config(chain).vertices) + [Curve(s_id, 0, kS, 0, "S")]
    edges = [Edge(j, j + 1, 1) for j in range(1, n)] + [Edge(i, s_id, 1)]
    full = CurveConfig.make(vertices, edges)
    trace = contract_all(full, frozen=[s_id], sw_exempt=full.ids())
    if trace.status != CONTRACTED_TO_POINT:
        raise AssertionError(f"chain stopped contracting under S: {trace.status}")

    profile = []
    contracted: set[int] = set()
    prev = full
    for step in trace.steps:
        s_hit = prev.pair(step.vertex, s_id)
        if s_hit < 1:
            raise AssertionError(f"contracted curve {step.vertex} missed S")
        contracted.add(step.vertex)
        span = range(min(contracted), max(contracted) + 1)
        if set(span) - contracted:
            raise AssertionError(f"contracted set {sorted(contracted)} is not an interval")
        meets = tuple(
            v.id for v in step.config.vertices
            if v.id != s_id and step.config.pair(v.id, s_id) > 0
        )
        boundary = {j for j in (min(contracted) - 1, max(contracted) + 1) if 1 <= j <= n}
        if set(meets) != boundary:
            raise AssertionError(
                f"S meets {meets}, expected the interval boundary {sorted(boundary)}"
            )
        profile.append((step.vertex, s_hit, meets))
        prev = step.config

    k_final = trace.final_config.curve(s_id).k_degree
    result = IteratedBlowdown(
        n=n, i=i, chain=chain, k_start=kS, k_final=k_final,
        trace=trace, profile=tuple(profile),
    )
    if not result.bound_holds:
        raise AssertionError(
            f"K.T = {k_final} exceeds K.S - 2(n-1) = {kS - 2 * (n - 1)}"
        )
    return result


def random_blowup(rng: random.Random, depth: int) -> CurveConfig:
    """Total transform of a (-1)-curve under `depth` random blow-ups.

    Starts from a single (-1, -1) curve of multiplicity 1 and repeatedly
    blows up either a generic point of a random component or a random
    intersection point, so the tracked divisor stays an exceptional curve of
    the first kind.  Deterministic for a given rng state.
    """
    c = single_curve()
    for _ in range(depth):
        choices: list[PointSpec] = [GenericOn(v.id) for v in c.vertices]
        choices += [Intersection(e.a, e.b) for e in c.edges]
        c = blow_up(c, rng.choice(choices))
    return c


# ----- Serialization -----


def config_to_json(c: CurveConfig) -> dict:
    return {
        "vertices": [
            {
                "id": v.id,
                "self_int": v.self_int,
                "k_degree": v.k_degree,
                "mult": v.mult,
                "label": v.label,
            }
            for v in c.vertices
        ],
        "edges": [{"a": e.a, "b": e.b, "m": e.m} for e in c.edges],
    }


def config_from_json(data: dict) -> CurveConfig:
    vertices = [
        Curve(
            int(v["id"]),
            int(v["self_int"]),
            int(v["k_degree"]),
            int(v.get("mult", 0)),
            str(v.get("label", "")),
        )
        for v in data["vertices"]
    ]
    edges = [Edge(int(e["a"]), int(e["b"]), int(e.get("m", 1))) for e in data["edges"]]
    return CurveConfig.make(vertices, edges)


def load_config(path: str) -> CurveConfig:
    with open(path, encoding="utf-8") as fh:
        return config_from_json(json.load(fh))


def trace_jsonl_lines(trace: BlowDownTrace) -> list[str]:
    """One line per step plus a terminal status line (byte-stable)."""
    lines = []
    for k, step in enumerate(trace.steps, start=1):
        lines.append(json.dumps({"step": k, **step.summary()}, separators=(",", ":")))
    lines.append(
        json.dumps(
            {"status": trace.status, "steps": len(trace.steps)}, separators=(",", ":")
        )
    )
    return lines
