"""Named check suites runnable from the command line.

Each suite is a fixed list of checks over small universes, exercising
the theorem-level properties of the operations: implication-definition
agreement, overlap of distinction sets, the Boolean core laws, the
negation identities, the pinned non-distributivity example, and the
tautology engine.  Suites return structured results; the CLI renders
them and turns failures into its exit code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    boolean_core,
    check_join_decomposition,
    core_from_subset,
    double_pi_negation,
    excluded_middle_partition,
)
from .core import BinaryRelation, Partition, enumerate_partitions, refines
from .formula import find_partition_counterexample, is_subset_tautology, parse, pi_negation_transform
from .ops import (
    AND,
    IMPLIES,
    OR,
    all_binary_ops,
    binary_op_graph,
    implication_adjunctive,
    implication_blocks,
    implication_graph,
    implication_interior,
    join,
    meet,
    pi_negation,
    retained_links,
)

CLASSICAL_TAUTOLOGIES: tuple[tuple[str, str], ...] = (
    ("identity", "s -> s"),
    ("excluded middle", "s \\/ ~s"),
    ("double negation elimination", "~~s -> s"),
    ("double negation introduction", "s -> ~~s"),
    ("non-contradiction", "~(s /\\ ~s)"),
    ("Peirce's law", "((s -> p) -> s) -> s"),
    ("modus ponens", "(s /\\ (s -> p)) -> p"),
    ("De Morgan for disjunction", "(~(s \\/ p) -> (~s /\\ ~p)) /\\ ((~s /\\ ~p) -> ~(s \\/ p))"),
    ("De Morgan for conjunction", "(~(s /\\ p) -> (~s \\/ ~p)) /\\ ((~s \\/ ~p) -> ~(s /\\ p))"),
    ("linearity", "(s -> p) \\/ (p -> s)"),
    ("weakening", "s -> (p -> s)"),
    ("contraposition", "(s -> p) -> (~p -> ~s)"),
    ("hypothetical syllogism", "((s -> p) /\\ (p -> q)) -> (s -> q)"),
    ("distribution of implication", "(s -> (p -> q)) -> ((s -> p) -> (s -> q))"),
    ("disjunctive syllogism", "((s \\/ p) /\\ ~s) -> p"),
)

NON_TAUTOLOGIES: tuple[tuple[str, str], ...] = (
    ("bare variable", "s"),
    ("bare implication", "s -> p"),
    ("bare disjunction", "s \\/ p"),
    ("converse implication", "(s -> p) -> (p -> s)"),
    ("negated variable", "~s"),
)

TRANSFORM_VARIABLE = "z"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _pinned_example() -> tuple[Partition, Partition, Partition]:
    sigma = Partition.from_blocks([[0], [1, 2, 3]], 4)
    pi = Partition.from_blocks([[0, 1], [2, 3]], 4)
    expected = Partition.from_blocks([[0, 1], [2], [3]], 4)
    return sigma, pi, expected


def suite_implication_equivalence(jobs: int = 1) -> list[CheckResult]:
    results = []
    sigma, pi, expected = _pinned_example()
    results.append(CheckResult(
        "pinned example: block rule gives {{a,b},{c},{d}}",
        implication_blocks(sigma, pi) == expected,
    ))
    results.append(CheckResult(
        "pinned example: exactly one retained link a-b",
        retained_links(IMPLIES, sigma, pi).pairs() == frozenset({(0, 1), (1, 0)}),
    ))
    results.append(CheckResult(
        "pinned example: all four definitions agree",
        implication_graph(sigma, pi) == expected
        and implication_interior(sigma, pi) == expected
        and implication_adjunctive(sigma, pi) == expected,
    ))
    for n in range(2, 7):
        parts = list(enumerate_partitions(n))
        bad = 0
        for s in parts:
            for p in parts:
                reference = implication_blocks(s, p)
                if implication_graph(s, p) != reference or implication_interior(s, p) != reference:
                    bad += 1
        results.append(CheckResult(
            f"block = graph = interior on all {len(parts)}^2 pairs, n={n}",
            bad == 0,
            "" if bad == 0 else f"{bad} disagreements",
        ))
    for n in range(2, 6):
        parts = list(enumerate_partitions(n))
        ok = all(
            implication_adjunctive(s, p) == implication_blocks(s, p)
            for s in parts
            for p in parts
        )
        results.append(CheckResult(f"adjunctive oracle agrees on all pairs, n={n}", ok))
    ok = True
    for n in range(2, 5):
        parts = list(enumerate_partitions(n))
        off = BinaryRelation.identity(n).complement()
        for op in all_binary_ops():
            for s in parts:
                for p in parts:
                    true_links = off - retained_links(op, s, p)
                    if binary_op_graph(op, s, p).ditset != true_links.interior():
                        ok = False
    results.append(CheckResult("all 16 truth functions: components match interior of true links, n<=4", ok))
    for name, op, lattice_op in (("disjunction", OR, join), ("conjunction", AND, meet)):
        ok = True
        for n in range(2, 6):
            parts = list(enumerate_partitions(n))
            for s in parts:
                for p in parts:
                    if binary_op_graph(op, s, p) != lattice_op(s, p):
                        ok = False
        results.append(CheckResult(f"{name} table matches the lattice operation, n<=5", ok))
    return results


def suite_common_dits(jobs: int = 1) -> list[CheckResult]:
    results = []
    for n in range(2, 7):
        nontrivial = [p for p in enumerate_partitions(n) if p != Partition.indiscrete(n)]
        ok = all(
            len(p.ditset & q.ditset) > 0
            for p in nontrivial
            for q in nontrivial
        )
        results.append(CheckResult(f"non-empty ditsets pairwise overlap, n={n}", ok))
    ok = True
    for n in range(2, 7):
        atomic = [p for p in enumerate_partitions(n) if p.num_blocks == 2]
        for p, q in combinations(atomic, 2):
            if len(p.ditset & q.ditset) == 0:
                ok = False
    results.append(CheckResult("two-block partitions pairwise overlap, n<=6", ok))
    return results


def suite_boolean_core(jobs: int = 1) -> list[CheckResult]:
    size_ok = iso_ok = complement_ok = cardinality_ok = True
    for n in range(1, 6):
        for pi in enumerate_partitions(n):
            core = boolean_core(pi)
            k = len(core.ns_blocks)
            if len(core) != 2**k or core.bottom != pi or core.top != Partition.discrete(n):
                size_ok = False
            subsets = list(range(1 << k))
            for a in subsets:
                member_a = core.members[a]
                if core_from_subset(core, [i for i in range(k) if a >> i & 1]) != member_a:
                    iso_ok = False
                if pi_negation(member_a, pi) != core.members[(~a) & ((1 << k) - 1)]:
                    iso_ok = False
                for b in subsets:
                    member_b = core.members[b]
                    if join(member_a, member_b) != core.members[a | b]:
                        iso_ok = False
                    if meet(member_a, member_b) != core.members[a & b]:
                        iso_ok = False
            for member in core.members:
                negated = pi_negation(member, pi)
                if meet(member, negated) != pi or join(member, negated) != Partition.discrete(n):
                    complement_ok = False
            singletons = pi.num_blocks - k
            if 2**pi.num_blocks != len(core) * 2**singletons:
                cardinality_ok = False
    return [
        CheckResult("core size is 2^(non-singleton blocks), with bottom pi and top discrete, n<=5", size_ok),
        CheckResult("subset maps preserve join, meet, and complement, n<=5", iso_ok),
        CheckResult("complement laws: meet with negation is pi, join is discrete, n<=5", complement_ok),
        CheckResult("powerset cardinality identity, n<=5", cardinality_ok),
    ]


def suite_identities(jobs: int = 1) -> list[CheckResult]:
    closure_ok = join_below_ok = em_above_pi_ok = em_negation_ok = True
    em_dense_ok = decomposition_ok = triple_ok = True
    for n in range(1, 6):
        parts = list(enumerate_partitions(n))
        top = Partition.discrete(n)
        for sigma in parts:
            for pi in parts:
                ddn = double_pi_negation(sigma, pi)
                em = excluded_middle_partition(sigma, pi)
                if not refines(sigma, ddn):
                    closure_ok = False
                if not refines(join(sigma, pi), ddn):
                    join_below_ok = False
                if not refines(pi, em):
                    em_above_pi_ok = False
                if pi_negation(em, pi) != pi:
                    em_negation_ok = False
                if double_pi_negation(em, pi) != top:
                    em_dense_ok = False
                if not check_join_decomposition(sigma, pi):
                    decomposition_ok = False
                neg = pi_negation(sigma, pi)
                if pi_negation(double_pi_negation(sigma, pi), pi) != neg:
                    triple_ok = False
    return [
        CheckResult("sigma refines into its double negation, n<=5", closure_ok),
        CheckResult("the join with pi refines into the double negation, n<=5", join_below_ok),
        CheckResult("pi refines into the excluded-middle partition, n<=5", em_above_pi_ok),
        CheckResult("negating the excluded-middle partition gives back pi, n<=5", em_negation_ok),
        CheckResult("the excluded-middle partition is dense: double negation is discrete, n<=5", em_dense_ok),
        CheckResult("join decomposition through the core, n<=5", decomposition_ok),
        CheckResult("triple negation collapses to single negation, n<=5", triple_ok),
    ]


def suite_figure3(jobs: int = 1) -> list[CheckResult]:
    pi = Partition.from_blocks([[0, 1], [2]], 3)
    sigma = Partition.from_blocks([[0], [1, 2]], 3)
    tau = Partition.from_blocks([[1], [0, 2]], 3)
    bottom = Partition.indiscrete(3)
    top = Partition.discrete(3)
    left = join(pi, meet(sigma, tau))
    right = meet(join(pi, sigma), join(pi, tau))
    return [
        CheckResult("the two side partitions meet to the bottom", meet(sigma, tau) == bottom),
        CheckResult("each pair of middle partitions joins to the top",
                    join(pi, sigma) == top and join(pi, tau) == top),
        CheckResult("join over the meet stays at pi", left == pi),
        CheckResult("meet of the joins is the top", right == top),
        CheckResult("the two sides differ, so the lattice is not distributive", left != right),
    ]


def suite_tautologies(jobs: int = 1) -> list[CheckResult]:
    results = []
    modus_ponens = parse("(s /\\ (s -> p)) -> p")
    weak_em = parse("(s -> p) \\/ ((s -> p) -> p)")
    results.append(CheckResult(
        "modus ponens has no counterexample up to n=4",
        find_partition_counterexample(modus_ponens, max_n=4, jobs=jobs) is None,
    ))
    results.append(CheckResult(
        "weak excluded middle has no counterexample up to n=4",
        find_partition_counterexample(weak_em, max_n=4, jobs=jobs) is None,
    ))
    em_cex = find_partition_counterexample(parse("s \\/ ~s"), max_n=4, jobs=jobs)
    results.append(CheckResult(
        "excluded middle survives n=2 and fails first at n=3",
        em_cex is not None and em_cex.n == 3
        and em_cex.bindings["s"] == Partition.from_blocks([[0, 1], [2]], 3),
        "" if em_cex else "no counterexample found",
    ))
    bare_cex = find_partition_counterexample(parse("s"), max_n=4, jobs=jobs)
    results.append(CheckResult(
        "a bare variable fails at n=2",
        bare_cex is not None and bare_cex.n == 2,
    ))
    for name, text in CLASSICAL_TAUTOLOGIES:
        f = parse(text)
        transformed = pi_negation_transform(f, TRANSFORM_VARIABLE)
        results.append(CheckResult(
            f"transform of {name} has no counterexample up to n=4",
            is_subset_tautology(f)
            and find_partition_counterexample(transformed, max_n=4, jobs=jobs) is None,
        ))
    for name, text in NON_TAUTOLOGIES:
        f = parse(text)
        cex = find_partition_counterexample(f, max_n=2, jobs=jobs)
        results.append(CheckResult(
            f"{name} is no classical tautology and fails at n=2",
            not is_subset_tautology(f) and cex is not None and cex.n == 2,
        ))
    return results


SUITES = {
    "common-dits": suite_common_dits,
    "implication-equivalence": suite_implication_equivalence,
    "boolean-core": suite_boolean_core,
    "identities": suite_identities,
    "tautologies": suite_tautologies,
    "figure3": suite_figure3,
}
