"""Verification suites: asserted identities and measured sweeps.

Two different strengths of claim run here.  Asserted properties (the
switching algebra, invariance of the Seidel polynomial, the sufficiency
direction of the edge criterion, class sizes under complement) fail the
run on any violation.  Swept claims (symmetric-difference closure of
identity-switch families, the core partition, the edge-removal remark,
the necessity direction) only emit findings; a counterexample there is
a result, not a bug.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .classes import census, census_labeled_components, check_complement_class, switching_class
from .generators import (
    complete,
    complete_bipartite,
    cube_q3,
    cycle,
    empty,
    half_join,
    path,
    path_plus_clique,
    path_with_isolated,
    paw,
    prism_c3p2,
    star,
    tadpole,
)
from .graph6 import from_graph6, to_graph6
from .graphs import Graph, VertexSet, complement, relabel
from .invariants import seidel_char_poly
from .iso import (
    automorphism_count,
    canonical_form,
    is_isomorphic,
    nonisomorphic_graphs,
    similarity_orbits,
)
from .iss import (
    complemented_core_agreement,
    core_neighborhoods_partition,
    degree_extremes_adjacent,
    edge_iss_conditions,
    edge_iss_direct,
    edge_removed_agreement,
    is_iss,
    iss_family,
    vertex_iss_set,
)
from .switching import switch_sequence, switch_set, switch_vertex

SUITES = ("algebra", "iso", "invariants", "iss", "edge-iss", "classes", "constructions")

# exhaustive sweeps stay at or below these orders no matter what the
# caller asks for; fixture checks are gated by max_order alone
SWEEP_CAP = 7
CENSUS_CAP = 7
SEED = 20260819


@dataclass(frozen=True)
class Finding:
    claim_id: str
    graph6: str
    witness_masks: tuple[int, ...]
    detail: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "claim-id": self.claim_id,
                "graph6": self.graph6,
                "witness-masks": list(self.witness_masks),
                "detail": self.detail,
            }
        )

    def sort_key(self):
        return (self.claim_id, self.graph6, self.witness_masks)


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    violations: list[str] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def finish(self) -> "SuiteResult":
        self.findings.sort(key=Finding.sort_key)
        return self


def _reps_upto(max_order: int, cap: int = SWEEP_CAP):
    for n in range(1, min(max_order, cap) + 1):
        yield n, nonisomorphic_graphs(n)


def _map_jobs(fn, items, jobs: int):
    # kernels drop the interpreter lock, so threads shard real work;
    # map() preserves order, keeping output deterministic
    if jobs <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def suite_algebra(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("algebra")
    for n in range(1, min(max_order, 5) + 1):
        stats = _kernels.algebra_sweep(n)
        graphs, checks, bad = int(stats[0]), int(stats[1]), int(stats[2])
        res.checks += checks
        res.lines.append(f"order {n}: {graphs} labeled graphs, {checks} identity checks")
        if bad:
            kind = {0: "fold asc", 1: "fold desc", 2: "trivial subsets", 3: "complement subset",
                    4: "complement commutes", 5: "symmetric difference"}[int(stats[6])]
            res.violations.append(
                f"algebra identity failed: order {n} code {int(stats[3])} "
                f"s={int(stats[4])} t={int(stats[5])} ({kind})"
            )
    # sequence folding at the python level, seeded but fixed
    rng = random.Random(SEED)
    for n in range(2, min(max_order, 5) + 1):
        for g in nonisomorphic_graphs(n):
            for _ in range(4):
                seq = [rng.randrange(n) for _ in range(rng.randrange(1, 7))]
                parity = 0
                for v in seq:
                    parity ^= 1 << v
                res.checks += 1
                if switch_sequence(g, seq) != switch_set(g, VertexSet(n, parity)):
                    res.violations.append(
                        f"sequence fold failed: {to_graph6(g)} seq {seq}"
                    )
    res.lines.append("vertex-sequence folds agree with one-shot subset switches")
    return res.finish()


def suite_iso(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("iso")
    rng = random.Random(SEED)
    for n, reps in _reps_upto(max_order):
        relabels = 0
        for g in reps:
            cf = canonical_form(g)
            for _ in range(3):
                perm = list(range(n))
                rng.shuffle(perm)
                relabels += 1
                res.checks += 1
                if canonical_form(relabel(g, tuple(perm))) != cf:
                    res.violations.append(f"canonical form not relabeling-invariant: {to_graph6(g)}")
            # orbit-stabilizer: group order divides n!, orbit sizes divide group order
            order = automorphism_count(g)
            fact = 1
            for i in range(2, n + 1):
                fact *= i
            res.checks += 1
            if fact % order:
                res.violations.append(f"automorphism count {order} does not divide {n}!: {to_graph6(g)}")
            for orb in similarity_orbits(g):
                res.checks += 1
                if order % len(orb):
                    res.violations.append(f"orbit size {len(orb)} does not divide group order: {to_graph6(g)}")
        res.lines.append(f"order {n}: {len(reps)} classes, {relabels} relabelings checked")
        # counting identity: sum over classes of n!/|Aut| = number of labeled graphs
        labeled = sum(fact // automorphism_count(g) for g in reps)
        res.checks += 1
        if labeled != 1 << (n * (n - 1) // 2):
            res.violations.append(f"labeled count identity failed at order {n}: {labeled}")
    # same-orbit vertices always switch to isomorphic graphs
    pairs = 0
    for n, reps in _reps_upto(min(max_order, 6)):
        for g in reps:
            for orb in similarity_orbits(g):
                u = orb[0]
                gu = switch_vertex(g, u)
                for v in orb[1:]:
                    pairs += 1
                    res.checks += 1
                    if not is_isomorphic(gu, switch_vertex(g, v)):
                        res.violations.append(
                            f"same-orbit switches differ: {to_graph6(g)} vertices {u},{v}"
                        )
    res.lines.append(f"same-orbit switch agreement: {pairs} vertex pairs")
    if max_order >= 6:
        t = tadpole(3, 4)
        h1, h3 = switch_vertex(t, 1), switch_vertex(t, 3)
        orbs = similarity_orbits(t)
        o1 = next(o for o in orbs if 1 in o)
        res.checks += 1
        if is_isomorphic(h1, h3) and 3 not in o1:
            res.lines.append(
                "tadpole(3,4): vertices 1 and 3 switch to isomorphic graphs from distinct orbits"
            )
        else:
            res.violations.append("tadpole converse-failure fixture broke")
    if max_order >= 5:
        res.checks += 1
        if not is_isomorphic(cycle(5), complement(cycle(5))):
            res.violations.append("5-cycle should be self-complementary")
    return res.finish()


def suite_invariants(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("invariants")
    fixtures = [
        (complete(2), (-1, 0, 1)),
        (empty(2), (-1, 0, 1)),
        (complete(3), (2, -3, 0, 1)),
    ]
    for g, want in fixtures:
        res.checks += 1
        if seidel_char_poly(g) != want:
            res.violations.append(f"pinned polynomial wrong for {to_graph6(g)}")

    def work(arg):
        # per-graph seed keeps the run deterministic under any job count
        n, idx, g = arg
        rng = random.Random(f"{SEED}:{n}:{idx}")
        poly = seidel_char_poly(g)
        bad = []
        if poly[n] != 1 or poly[n - 1] != 0:
            bad.append(f"leading/trace coefficient wrong: {to_graph6(g)}")
        checks = 1
        for half in range(1 << (n - 1)):
            checks += 1
            if seidel_char_poly(switch_set(g, VertexSet(n, half << 1))) != poly:
                bad.append(f"polynomial moved under switch: {to_graph6(g)} mask {half << 1}")
                break
        perm = list(range(n))
        rng.shuffle(perm)
        checks += 1
        if seidel_char_poly(relabel(g, tuple(perm))) != poly:
            bad.append(f"polynomial moved under relabeling: {to_graph6(g)}")
        return checks, bad

    for n, reps in _reps_upto(min(max_order, 6)):
        outs = _map_jobs(work, [(n, i, g) for i, g in enumerate(reps)], jobs)
        polys = sum(o[0] for o in outs)
        res.checks += polys
        for _, bad in outs:
            res.violations.extend(bad)
        res.lines.append(
            f"order {n}: {len(reps)} classes, every subset switch checked ({polys} evaluations)"
        )
    return res.finish()


def suite_iss(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("iss")
    rng = random.Random(SEED)
    premise = 0
    closure_fails = 0
    for n, reps in _reps_upto(max_order):
        fams = _map_jobs(iss_family, reps, jobs)
        for g, fam in zip(reps, fams):
            masks = {m.mask for m in fam.members}
            full = (1 << n) - 1
            res.checks += 2
            if 0 not in masks or full not in masks:
                res.violations.append(f"trivial switches missing from family: {to_graph6(g)}")
            if any((m ^ full) not in masks for m in masks):
                res.violations.append(f"family not complement-closed: {to_graph6(g)}")
            # spot-check the scan against the direct predicate on both sides
            sample = rng.sample(sorted(masks), min(3, len(masks)))
            non = [m for m in range(1 << n) if m not in masks]
            sample += rng.sample(non, min(3, len(non)))
            for m in sample:
                res.checks += 1
                if is_iss(g, VertexSet(n, m)) != (m in masks):
                    res.violations.append(f"family scan disagrees with direct check: {to_graph6(g)} mask {m}")
            if not fam.closed_under_delta:
                closure_fails += 1
                a, b, c = fam.witness
                res.findings.append(Finding(
                    "iss-family-delta-closure",
                    to_graph6(g),
                    (a.mask, b.mask, c.mask),
                    f"members {a.mask} and {b.mask} have symmetric difference {c.mask} outside the family",
                ))
            # singleton verdicts constant on automorphism orbits
            vset = vertex_iss_set(g).mask
            for orb in similarity_orbits(g):
                res.checks += 1
                hits = [v for v in orb if (vset >> v) & 1]
                if hits and len(hits) != len(orb):
                    res.violations.append(f"orbit with mixed singleton verdicts: {to_graph6(g)} orbit {orb}")
            verdict = degree_extremes_adjacent(g)
            if verdict is not None:
                premise += 1
                res.checks += 1
                if verdict is not True:
                    res.violations.append(f"degree extremes not adjacent despite all-singleton premise: {to_graph6(g)}")
        res.lines.append(f"order {n}: {len(reps)} families enumerated")
    res.lines.append(
        f"symmetric-difference closure fails for {closure_fails} graphs (findings); "
        f"degree-extremes premise held {premise} times"
    )
    return res.finish()


def suite_edge_iss(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("edge-iss")

    def work(g: Graph):
        checks = 0
        edges = direct = conds = agree = 0
        bad: list[str] = []
        found: list[Finding] = []
        for (x, y) in g.edges():
            edges += 1
            r = edge_iss_conditions(g, x, y)
            checks += 1
            if r.direct:
                direct += 1
            if r.by_conditions:
                conds += 1
            if r.agree:
                agree += 1
            if r.by_conditions and not r.direct:
                bad.append(
                    f"conditions held but switch not isomorphic: {to_graph6(g)} edge ({x},{y})"
                )
            if r.direct and not r.by_conditions:
                found.append(Finding(
                    "edge-iss-conditions-necessity",
                    to_graph6(g),
                    ((1 << x) | (1 << y),),
                    f"edge ({x},{y}) is an identity switch but condition_i={r.condition_i} "
                    f"condition_ii={r.condition_ii}",
                ))
            if r.direct:
                checks += 1
                if not core_neighborhoods_partition(g, x, y):
                    found.append(Finding(
                        "core-partition",
                        to_graph6(g),
                        ((1 << x) | (1 << y),),
                        f"edge ({x},{y}) is an identity switch but the core neighborhoods overlap or miss vertices",
                    ))
            checks += 1
            if not edge_removed_agreement(g, x, y):
                found.append(Finding(
                    "edge-removed-equivalence",
                    to_graph6(g),
                    ((1 << x) | (1 << y),),
                    f"verdict for ({x},{y}) changes when the edge is deleted",
                ))
            checks += 1
            if not complemented_core_agreement(g, x, y):
                bad.append(
                    f"complementing the core changed the verdict: {to_graph6(g)} edge ({x},{y})"
                )
        return checks, edges, direct, conds, agree, bad, found

    for n, reps in _reps_upto(max_order):
        outs = _map_jobs(work, reps, jobs)
        edges = sum(o[1] for o in outs)
        direct = sum(o[2] for o in outs)
        conds = sum(o[3] for o in outs)
        agree = sum(o[4] for o in outs)
        res.checks += sum(o[0] for o in outs)
        for o in outs:
            res.violations.extend(o[5])
            res.findings.extend(o[6])
        rate = 100.0 * agree / edges if edges else 100.0
        res.lines.append(
            f"order {n}: {edges} edges, {direct} identity switches, "
            f"{conds} by conditions, agreement {agree}/{edges} ({rate:.1f}%)"
        )
    if max_order > SWEEP_CAP:
        res.lines.append(f"exhaustive sweep capped at order {SWEEP_CAP}")
    return res.finish()


def suite_classes(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("classes")
    for n in range(1, min(max_order, CENSUS_CAP) + 1):
        recs = census(n)
        iso_total = sum(r.iso_class_count for r in recs)
        lab_total = sum(r.labeled_count for r in recs)
        res.checks += 3
        if iso_total != len(nonisomorphic_graphs(n)):
            res.violations.append(f"census does not cover the isomorphism classes at order {n}")
        if lab_total != 1 << (n * (n - 1) // 2):
            res.violations.append(f"census labeled counts wrong at order {n}")
        dual = census_labeled_components(n)
        mine = {canonical_form(from_graph6(r.rep_g6)): r.labeled_count for r in recs}
        if mine != dual:
            res.violations.append(f"dual census routes disagree at order {n}")
        res.lines.append(
            f"order {n}: {len(recs)} switching classes over {iso_total} isomorphism classes; "
            f"labeled counts cross-checked by vertex-switch components"
        )
    # complement classes have equal size
    pairs = 0
    for n, reps in _reps_upto(min(max_order, 6)):
        for g in reps:
            pairs += 1
            res.checks += 1
            if not check_complement_class(g):
                res.violations.append(f"complement class size differs: {to_graph6(g)}")
    res.lines.append(f"complement-class sizes agree for {pairs} graphs")
    # no self-complementary graph when the pair count is odd
    for n in (2, 3, 6, 7):
        if n > min(max_order, SWEEP_CAP):
            continue
        res.checks += 1
        if any(is_isomorphic(g, complement(g)) for g in nonisomorphic_graphs(n)):
            res.violations.append(f"unexpected self-complementary graph at order {n}")
        res.lines.append(f"order {n}: no self-complementary graph, classes pair up under complement")
    if max_order >= 4:
        recs = census(4)
        res.checks += 1
        got = {switching_class(g).representative for g in (path(4), cycle(4), complete(4))}
        if len(recs) != 3 or len(got) != 3:
            res.violations.append("order-4 classes are not the three expected ones")
        else:
            res.lines.append("order 4: the three classes carry the path, the 4-cycle, and the complete graph")
    return res.finish()


def suite_constructions(max_order: int, jobs: int = 1) -> SuiteResult:
    res = SuiteResult("constructions")

    def check(cond: bool, msg: str):
        res.checks += 1
        if not cond:
            res.violations.append(msg)

    if max_order >= 4:
        g = paw()
        check(sorted(switch_vertex(g, 0).edges()) == [(0, 3), (1, 2), (2, 3)],
              "paw switched at 0 gave the wrong edges")
        res.lines.append("paw switched at vertex 0 reproduces the pinned edge set")
    if max_order >= 5:
        check(switch_vertex(star(5), 0) == empty(5), "star center switch should empty the graph")
        for g, where in ((path(5), 2), (path_with_isolated(3, 2), 1)):
            check(list(vertex_iss_set(g).indices()) == [where],
                  f"unique singleton identity switch wrong for {to_graph6(g)}")
        res.lines.append("order-5 fixtures: unique singleton identity switches sit at the centers")
        check(not is_iss(cycle(5), VertexSet.singleton(5, 0)),
              "5-cycle singleton should not be an identity switch")
    if max_order >= 5:
        g = complete_bipartite(2, 3)
        check(sorted(vertex_iss_set(g).indices()) == [2, 3, 4],
              "complete bipartite 2+3: singleton identity switches should be the larger part")
    for n in range(1, 4):
        if 2 * n + 1 > max_order:
            break
        g = complete_bipartite(n, n + 1)
        check(sorted(vertex_iss_set(g).indices()) == list(range(n, 2 * n + 1)),
              f"complete bipartite {n}+{n+1}: wrong singleton set")
    if max_order >= 6:
        g = complete(6)
        h = switch_set(g, VertexSet.from_indices(6, (0, 1, 2)))
        check(sorted(h.edges()) == [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)],
              "complete graph switched by a triple should leave two triangles")
        p = prism_c3p2()
        for (x, y) in p.edges():
            in_triangle = any(p.has_edge(x, z) and p.has_edge(y, z) for z in range(6))
            check(edge_iss_direct(p, x, y) == (not in_triangle),
                  f"prism edge ({x},{y}) identity-switch verdict wrong")
        res.lines.append("prism: cross edges are identity switches, triangle edges are not")
    if max_order >= 8:
        q = cube_q3()
        check(all(not edge_iss_direct(q, x, y) for (x, y) in q.edges()),
              "cube should have no edge identity switch")
        res.lines.append("cube: no edge identity switches (degree sums fall short)")
    kmn = 0
    for m in range(1, 5):
        for n2 in range(m, 5):
            if m + n2 > max_order:
                continue
            g = complete_bipartite(m, n2)
            for (x, y) in g.edges():
                kmn += 1
                check(edge_iss_direct(g, x, y),
                      f"complete bipartite {m}+{n2} edge ({x},{y}) should be an identity switch")
    if kmn:
        res.lines.append(f"complete bipartite blocks: all {kmn} edges are identity switches")
    hj = 0
    for m in range(2, 5):
        for n2 in range(2, 5):
            if (m * n2) % 2 or m + n2 > max_order:
                continue
            for ac in (True, False):
                for bc in (True, False):
                    g = half_join(m, n2, ac, bc)
                    amask = VertexSet(m + n2, (1 << m) - 1)
                    hj += 1
                    cross = sum(1 for (u, v) in g.edges() if (u < m) != (v < m))
                    check(cross == m * n2 // 2, f"half join {m},{n2} cross edge count off")
                    check(is_iss(g, amask) and is_iss(g, amask.complement()),
                          f"half join {m},{n2} a_complete={ac} b_complete={bc}: blocks must be identity switches")
    if hj:
        res.lines.append(f"half-join: both blocks verified as identity switches in {hj} variants")
    if max_order >= 4:
        check(is_isomorphic(half_join(2, 2, True, True), cycle(4)),
              "half join of two complete pairs should be the 4-cycle")
    ppc = 0
    for p in range(1, 5):
        if p + 2 > max_order:
            continue
        for k in range(p + 1):
            g = path_plus_clique(p, k)
            ppc += 1
            check(edge_iss_direct(g, 0, 1),
                  f"clique-attached edge should be an identity switch (p={p}, split {k})")
            block = VertexSet(p + 2, ((1 << (p + 2)) - 1) ^ 0b11)
            check(is_iss(g, block),
                  f"clique block should be an identity switch (p={p}, split {k})")
    if ppc:
        res.lines.append(f"edge-plus-clique: edge and block verified in {ppc} splits")
    return res.finish()


_SUITE_FNS = {
    "algebra": suite_algebra,
    "iso": suite_iso,
    "invariants": suite_invariants,
    "iss": suite_iss,
    "edge-iss": suite_edge_iss,
    "classes": suite_classes,
    "constructions": suite_constructions,
}


def run_suite(name: str, max_order: int, jobs: int = 1) -> SuiteResult:
    if name not in _SUITE_FNS:
        raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)} or all)")
    return _SUITE_FNS[name](max_order, jobs)


def run_suites(name: str, max_order: int, jobs: int = 1) -> list[SuiteResult]:
    if name == "all":
        return [run_suite(s, max_order, jobs) for s in SUITES]
    return [run_suite(name, max_order, jobs)]
