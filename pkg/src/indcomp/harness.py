"""Theorem-level verification over enumerated or streamed graph corpora.

Five per-graph checks are available:

    main           ternary graphs have point- or single-sphere homology and
                   the recursive classifier agrees with the homology engine
    converse       non-ternary graphs carry an induced cycle of length 3k+3
                   whose independence complex has two k-spheres' worth of
                   homology
    total-betti    every induced subgraph of a ternary graph has total
                   reduced Betti number at most 1
    euler          ternary iff every induced subgraph has |chi| <= 1
    subadditivity  betti_i(G) <= betti_i(G - v) + betti_{i-1}(G - N[v])
                   for all v and i (all graphs)

Induced-subgraph quantifiers are exhaustive for hosts with n <= 8 and
sampled (with the known witness subgraph forced in) above that.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

from .classifier import (
    STAR,
    Classifier,
    HomotopyClass,
    NonTernaryDetected,
    classify,
)
from .complexes import independence_complex
from .cycles import CycleWitness, is_ternary
from .enumeration import enumerate_graphs
from .formats import encode_graph6, parse_graph6
from .graphs import Graph, GraphError, bits, popcount
from .homology import HomologyGroups, classify_groups, reduced_homology

CHECK_ORDER = ("main", "converse", "total-betti", "euler", "subadditivity")

EXHAUSTIVE_SUBSET_LIMIT = 8  # hosts up to this size get every induced subgraph
DEFAULT_SUBSET_SAMPLES = 1000


class InducedHomologyCache:
    """Reduced homology of induced subgraphs of one host graph, memoized.

    Residual graphs G(X|Y), vertex deletions, and subgraph quantifiers all
    land on vertex-subset masks of the host, so one mask-keyed cache serves
    every check.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._memo: dict[int, HomologyGroups] = {}

    def groups(self, mask: int) -> HomologyGroups:
        cached = self._memo.get(mask)
        if cached is None:
            sub, _ = self.graph.induced(mask)
            cached = reduced_homology(independence_complex(sub))
            self._memo[mask] = cached
        return cached

    def full(self) -> HomologyGroups:
        return self.groups(self.graph.vertex_mask)


class AlternatingSumCache:
    """Signed independent-set counts per induced subgraph of a host.

    alt(S) = sum over independent A inside S of (-1)^|A| (empty set
    included), computed by deleting the lowest vertex of S: sets without it
    plus sets with it.  chi(S) = -alt(S) is the reduced Euler characteristic
    of the independence complex of the subgraph on S.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._memo: dict[int, int] = {0: 1}

    def alt(self, mask: int) -> int:
        memo = self._memo
        cached = memo.get(mask)
        if cached is not None:
            return cached
        stack = [mask]
        adj = self.graph.adj
        while stack:
            s = stack[-1]
            if s in memo:
                stack.pop()
                continue
            v = (s & -s).bit_length() - 1
            without = s & ~(1 << v)
            dropped = s & ~(adj[v] | 1 << v)
            a = memo.get(without)
            b = memo.get(dropped)
            if a is None:
                stack.append(without)
            if b is None:
                stack.append(dropped)
            if a is not None and b is not None:
                memo[s] = a - b
                stack.pop()
        return memo[mask]

    def chi(self, mask: int) -> int:
        return -self.alt(mask)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str | None = None
    witness: dict | None = None


def _subset_masks(g: Graph, rng: random.Random | None, samples: int, forced: Iterable[int]) -> list[int]:
    full = g.vertex_mask
    if g.n <= EXHAUSTIVE_SUBSET_LIMIT or (1 << g.n) <= samples:
        return list(range(full + 1))
    rng = rng or random.Random(0)
    masks = {full, 0}
    masks.update(forced)
    while len(masks) < samples:
        masks.add(rng.getrandbits(g.n) & full)
    return sorted(masks)


def _witness_subgraph(mask: int, check: str) -> dict:
    return {"type": "induced-subgraph", "check": check, "vertices": list(bits(mask))}


def compare_classifier_with_homology(
    g: Graph,
    groups: HomologyGroups,
    classifier: Classifier | None = None,
) -> CheckResult:
    """Homology-level class vs recursive classification of one graph."""
    htype = classify_groups(groups)
    if htype.kind == "other":
        return CheckResult(
            "main", False, detail=f"homology is not point- or sphere-like: {groups!r}"
        )
    try:
        cls = classify(g, classifier)
    except NonTernaryDetected as exc:
        return CheckResult("main", False, detail=f"classifier signalled non-ternary: {exc}")
    if htype.kind == "point":
        ok = cls.is_contractible
    else:
        ok = cls.sphere_dim == htype.dim
    detail = None if ok else f"classifier says {cls}, homology says {htype}"
    return CheckResult("main", ok, detail=detail)


def check_main_theorem(
    g: Graph,
    *,
    ternary: bool | None = None,
    cache: InducedHomologyCache | None = None,
    classifier: Classifier | None = None,
) -> CheckResult:
    """Ternary graphs: homology of a point or single sphere, classifier agrees."""
    if ternary is None:
        ternary = is_ternary(g)[0]
    if not ternary:
        return CheckResult("main", True, detail="vacuous: non-ternary")
    cache = cache or InducedHomologyCache(g)
    return compare_classifier_with_homology(g, cache.full(), classifier)


def check_converse(
    g: Graph,
    *,
    witness: CycleWitness | None = None,
    cache: InducedHomologyCache | None = None,
) -> CheckResult:
    """Non-ternary graphs: the witness cycle C_{3k+3} has two k-spheres' homology."""
    if witness is None:
        ternary, witness = is_ternary(g)
        if ternary:
            raise GraphError("check_converse requires a non-ternary graph")
    cache = cache or InducedHomologyCache(g)
    mask = 0
    for v in witness.vertices:
        mask |= 1 << v
    k = witness.length // 3 - 1
    groups = cache.groups(mask)
    ok = classify_groups(groups).kind == "other" and groups.rank(k) == 2
    detail = None
    result_witness = {"type": "cycle-length-divisible-by-3", "vertices": list(witness.vertices)}
    if not ok:
        detail = (
            f"induced C_{witness.length} should have rank 2 in dimension {k}, got {groups!r}"
        )
    return CheckResult("converse", ok, detail=detail, witness=result_witness)


def check_total_betti_bound(
    g: Graph,
    *,
    ternary: bool | None = None,
    cache: InducedHomologyCache | None = None,
    rng: random.Random | None = None,
    subset_samples: int = DEFAULT_SUBSET_SAMPLES,
) -> CheckResult:
    """Ternary graphs: total reduced Betti number <= 1 on every induced subgraph."""
    if ternary is None:
        ternary = is_ternary(g)[0]
    if not ternary:
        return CheckResult("total-betti", True, detail="vacuous: non-ternary")
    cache = cache or InducedHomologyCache(g)
    for mask in _subset_masks(g, rng, subset_samples, forced=()):
        total = cache.groups(mask).total_betti
        if total > 1:
            return CheckResult(
                "total-betti",
                False,
                detail=f"induced subgraph has total Betti number {total}",
                witness=_witness_subgraph(mask, "total-betti"),
            )
    return CheckResult("total-betti", True)


def check_euler_bound(
    g: Graph,
    *,
    ternary: bool | None = None,
    witness: CycleWitness | None = None,
    alt_cache: AlternatingSumCache | None = None,
    rng: random.Random | None = None,
    subset_samples: int = DEFAULT_SUBSET_SAMPLES,
) -> CheckResult:
    """Biconditional: ternary iff every induced subgraph has |chi| <= 1."""
    if ternary is None:
        ternary, witness = is_ternary(g)
    alt_cache = alt_cache or AlternatingSumCache(g)
    forced = []
    if witness is not None:
        mask = 0
        for v in witness.vertices:
            mask |= 1 << v
        forced.append(mask)
    bad_mask = None
    for mask in _subset_masks(g, rng, subset_samples, forced=forced):
        if abs(alt_cache.chi(mask)) > 1:
            bad_mask = mask
            break
    if ternary and bad_mask is not None:
        return CheckResult(
            "euler",
            False,
            detail=f"ternary graph has induced subgraph with chi = {alt_cache.chi(bad_mask)}",
            witness=_witness_subgraph(bad_mask, "euler"),
        )
    if not ternary and bad_mask is None:
        return CheckResult(
            "euler", False, detail="non-ternary graph but all checked subgraphs have |chi| <= 1"
        )
    return CheckResult("euler", True)


def check_mv_subadditivity(
    g: Graph,
    *,
    cache: InducedHomologyCache | None = None,
) -> CheckResult:
    """betti_i(G) <= betti_i(G - v) + betti_{i-1}(G - N[v]), all v, all i."""
    cache = cache or InducedHomologyCache(g)
    full_groups = cache.full()
    full = g.vertex_mask
    for v in range(g.n):
        minus_v = cache.groups(full & ~(1 << v))
        minus_nv = cache.groups(full & ~g.closed_neighborhood(v))
        for i in range(0, full_groups.top_dimension + 1):
            left = full_groups.rank(i)
            right = minus_v.rank(i) + minus_nv.rank(i - 1)
            if left > right:
                return CheckResult(
                    "subadditivity",
                    False,
                    detail=f"dimension {i}, vertex {v}: {left} > {right}",
                    witness={"type": "vertex", "check": "subadditivity", "vertices": [v]},
                )
    return CheckResult("subadditivity", True)


@dataclass
class VerificationReport:
    """Per-graph outcome of an enabled-check run."""

    g6: str
    n: int
    ternary: bool
    homotopy: str
    betti: list[int]
    has_torsion: bool
    chi: int
    checks: dict[str, bool]
    witness: dict | None = None
    details: dict[str, str] = field(default_factory=dict)

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_json_dict(self) -> dict:
        return {
            "g6": self.g6,
            "n": self.n,
            "ternary": self.ternary,
            "class": self.homotopy,
            "betti": self.betti,
            "torsion": self.has_torsion,
            "chi": self.chi,
            "checks": self.checks,
            "witness": self.witness,
            "details": self.details,
        }


def _normalize_checks(checks: Sequence[str] | None) -> list[str]:
    if checks is None:
        return list(CHECK_ORDER)
    bad = [c for c in checks if c not in CHECK_ORDER]
    if bad:
        raise ValueError(f"unknown checks: {bad}; valid: {list(CHECK_ORDER)}")
    return [c for c in CHECK_ORDER if c in set(checks)]


def run_checks(
    g: Graph,
    checks: Sequence[str] | None = None,
    *,
    classifier: Classifier | None = None,
    seed: int = 0,
    subset_samples: int = DEFAULT_SUBSET_SAMPLES,
) -> VerificationReport:
    """Run the enabled checks on one graph and summarize its invariants."""
    enabled = _normalize_checks(checks)
    g6 = encode_graph6(g)
    rng = random.Random(f"{seed}:{g6}")
    ternary, cycle_witness = is_ternary(g)
    cache = InducedHomologyCache(g)
    alt_cache = AlternatingSumCache(g)
    full_groups = cache.full()

    homotopy = "n/a"
    if ternary:
        try:
            homotopy = str(classify(g, classifier))
        except NonTernaryDetected:
            homotopy = "signal:non-ternary"  # a 'main' check failure, recorded there

    results: list[CheckResult] = []
    for name in enabled:
        if name == "main":
            results.append(
                check_main_theorem(g, ternary=ternary, cache=cache, classifier=classifier)
            )
        elif name == "converse":
            if ternary:
                results.append(CheckResult("converse", True, detail="vacuous: ternary"))
            else:
                results.append(check_converse(g, witness=cycle_witness, cache=cache))
        elif name == "total-betti":
            results.append(
                check_total_betti_bound(
                    g, ternary=ternary, cache=cache, rng=rng, subset_samples=subset_samples
                )
            )
        elif name == "euler":
            results.append(
                check_euler_bound(
                    g,
                    ternary=ternary,
                    witness=cycle_witness,
                    alt_cache=alt_cache,
                    rng=rng,
                    subset_samples=subset_samples,
                )
            )
        elif name == "subadditivity":
            results.append(check_mv_subadditivity(g, cache=cache))

    witness: dict | None = None
    details: dict[str, str] = {}
    for res in results:
        if not res.passed:
            details[res.name] = res.detail or "failed"
            if witness is None and res.witness is not None:
                witness = res.witness
    if witness is None and cycle_witness is not None:
        witness = {
            "type": "cycle-length-divisible-by-3",
            "vertices": list(cycle_witness.vertices),
        }

    return VerificationReport(
        g6=g6,
        n=g.n,
        ternary=ternary,
        homotopy=homotopy,
        betti=full_groups.betti_vector,
        has_torsion=full_groups.has_torsion,
        chi=full_groups.euler,
        checks={res.name: res.passed for res in results},
        witness=witness,
        details=details,
    )


@dataclass
class AggregateReport:
    """Campaign outcome: per-graph reports plus rollup counts."""

    source: str
    checks: list[str]
    n_graphs: int = 0
    n_ternary: int = 0
    n_failures: int = 0
    check_failures: dict[str, int] = field(default_factory=dict)
    parse_errors: list[dict] = field(default_factory=list)
    reports: list[VerificationReport] = field(default_factory=list)
    generated_at: str = ""

    @property
    def passed(self) -> bool:
        return self.n_failures == 0 and not self.parse_errors

    def summary_dict(self) -> dict:
        return {
            "source": self.source,
            "checks": self.checks,
            "graphs": self.n_graphs,
            "ternary": self.n_ternary,
            "failures": self.n_failures,
            "check_failures": self.check_failures,
            "parse_errors": self.parse_errors,
            "generated_at": self.generated_at,
        }

    def to_json(self, include_reports: bool = True) -> str:
        payload = self.summary_dict()
        if include_reports:
            payload["reports"] = [r.to_json_dict() for r in self.reports]
        return json.dumps(payload, sort_keys=True)

    def to_json_lines(self) -> str:
        lines = [json.dumps(r.to_json_dict(), sort_keys=True) for r in self.reports]
        lines.append(json.dumps({"summary": self.summary_dict()}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        header = "g6,n,ternary,class,betti,chi,torsion,failed_checks"
        rows = [header]
        for r in self.reports:
            betti = ";".join(str(b) for b in r.betti)
            failed = ";".join(r.failed_checks)
            rows.append(
                f"{r.g6},{r.n},{int(r.ternary)},{r.homotopy},{betti},{r.chi},"
                f"{int(r.has_torsion)},{failed}"
            )
        return "\n".join(rows) + "\n"


def _aggregate(
    source: str,
    enabled: list[str],
    reports: Iterable[VerificationReport],
    parse_errors: list[dict] | None = None,
) -> AggregateReport:
    agg = AggregateReport(
        source=source,
        checks=enabled,
        check_failures={name: 0 for name in enabled},
        parse_errors=parse_errors or [],
        generated_at=datetime.now(timezone.utc).isoformat(),
    )
    for report in reports:
        agg.n_graphs += 1
        agg.n_ternary += report.ternary
        failed = report.failed_checks
        if failed:
            agg.n_failures += 1
            for name in failed:
                agg.check_failures[name] += 1
        agg.reports.append(report)
    return agg


def _check_worker(args: tuple[str, list[str], int, int]) -> VerificationReport:
    g6, enabled, seed, subset_samples = args
    return run_checks(parse_graph6(g6), enabled, seed=seed, subset_samples=subset_samples)


def verify_exhaustive(
    max_n: int,
    checks: Sequence[str] | None = None,
    *,
    jobs: int = 1,
    seed: int = 0,
    subset_samples: int = DEFAULT_SUBSET_SAMPLES,
) -> AggregateReport:
    """Run the checks over one representative per isomorphism class, n = 1..max_n."""
    if max_n > EXHAUSTIVE_SUBSET_LIMIT:
        raise GraphError(f"exhaustive verification caps at n={EXHAUSTIVE_SUBSET_LIMIT}")
    enabled = _normalize_checks(checks)
    graphs = [g for n in range(1, max_n + 1) for g in enumerate_graphs(n, dedup=True)]
    if jobs > 1:
        work = [(encode_graph6(g), enabled, seed, subset_samples) for g in graphs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_check_worker, work, chunksize=16))
    else:
        reports = [
            run_checks(g, enabled, seed=seed, subset_samples=subset_samples) for g in graphs
        ]
    return _aggregate(f"exhaustive:max_n={max_n}", enabled, reports)


def verify_stream(
    lines: Iterable[str],
    checks: Sequence[str] | None = None,
    *,
    seed: int = 0,
    subset_samples: int = DEFAULT_SUBSET_SAMPLES,
) -> AggregateReport:
    """Run the checks over a stream of graph6 lines.

    Lines that fail to parse are recorded with their line number and
    skipped; blank lines are ignored.
    """
    enabled = _normalize_checks(checks)
    reports = []
    parse_errors = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except GraphError as exc:
            parse_errors.append({"line": lineno, "error": str(exc)})
            continue
        reports.append(run_checks(g, enabled, seed=seed, subset_samples=subset_samples))
    return _aggregate("stream", enabled, reports, parse_errors)


# -- samplers and the triple-shape property ---------------------------------


def sample_random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def sample_ternary_graphs(
    rng: random.Random,
    count: int,
    n_low: int = 9,
    n_high: int = 13,
) -> list[Graph]:
    """Rejection-sample ternary graphs from sparse G(n, c/n).

    Density c/n with c in [1.8, 3.2] keeps the triangle-free rejection rate
    workable at these sizes (denser draws essentially never survive), and
    graphs with isolated vertices are rejected too: their complexes are
    cones, which would make the sample trivially contractible.
    """
    out = []
    while len(out) < count:
        n = rng.randint(n_low, n_high)
        c = rng.uniform(1.8, 3.2)
        g = sample_random_graph(rng, n, p=c / n)
        if g.isolated_vertices():
            continue
        if is_ternary(g)[0]:
            out.append(g)
    return out


def homology_d_value(cache: InducedHomologyCache, x: int, y: int) -> "int | object | None":
    """d-value of the residual (X|Y) computed by the homology engine.

    STAR when X is dependent or the residual complex is point-like, the
    sphere dimension when it is sphere-like, and None when the homology is
    neither (which for a ternary host would itself be a theorem violation).
    """
    g = cache.graph
    if x & y:
        raise GraphError("x and y overlap")
    if not g.is_independent(x):
        return STAR
    mask = g.vertex_mask & ~g.closed_neighborhood_of_set(x) & ~y
    htype = classify_groups(cache.groups(mask))
    if htype.kind == "point":
        return STAR
    if htype.kind == "sphere":
        return htype.dim
    return None


def triple_shape_allowed(t0, t1, t2) -> bool:
    """Whether (d(X|Y), d(X+v|Y), d(X|Y+v)) is one of the four legal shapes:
    (*,*,*), (k,*,k), (*,k,k), (k+1,k,*)."""
    if t0 is None or t1 is None or t2 is None:
        return False
    s0, s1, s2 = t0 is STAR, t1 is STAR, t2 is STAR
    if s0 and s1 and s2:
        return True
    if s1 and not s0 and not s2:
        return t0 == t2
    if s0 and not s1 and not s2:
        return t1 == t2
    if s2 and not s0 and not s1:
        return t0 == t1 + 1
    return False


def sample_xyv_triple(g: Graph, rng: random.Random) -> tuple[int, int, int] | None:
    """One random (X, Y, v): X independent, Y disjoint, X or Y nonempty,
    v outside N[X] and Y.  None when the graph admits no such triple."""
    if g.n < 2:
        return None
    full = g.vertex_mask
    for _ in range(64):
        x = 0
        order = list(range(g.n))
        rng.shuffle(order)
        want = rng.randint(0, g.n // 2)
        for v in order:
            if x.bit_count() >= want:
                break
            if not g.adj[v] & x and not x >> v & 1:
                x |= 1 << v
        y = rng.getrandbits(g.n) & full & ~x
        if not (x | y):
            continue
        candidates = full & ~g.closed_neighborhood_of_set(x) & ~y
        if not candidates:
            continue
        v = rng.choice(list(bits(candidates)))
        return x, y, v
    return None


def check_triple_shapes(
    g: Graph,
    rng: random.Random | None = None,
    samples: int = 500,
    cache: InducedHomologyCache | None = None,
) -> list[dict]:
    """Sample (X, Y, v) triples and verify each homology-computed d-value
    triple matches a legal shape.  Returns the violations (empty = pass)."""
    rng = rng or random.Random(0)
    cache = cache or InducedHomologyCache(g)
    violations = []
    for _ in range(samples):
        triple = sample_xyv_triple(g, rng)
        if triple is None:
            break
        x, y, v = triple
        t0 = homology_d_value(cache, x, y)
        t1 = homology_d_value(cache, x | 1 << v, y)
        t2 = homology_d_value(cache, x, y | 1 << v)
        if not triple_shape_allowed(t0, t1, t2):
            violations.append(
                {
                    "x": list(bits(x)),
                    "y": list(bits(y)),
                    "v": v,
                    "triple": [repr(t0), repr(t1), repr(t2)],
                }
            )
    return violations
