import pytest
from hypothesis import given

from partlogic import (
    AND,
    IMPLIES,
    OR,
    AdjunctiveLimitError,
    BinaryRelation,
    BoolOp2,
    Partition,
    all_binary_ops,
    binary_op_graph,
    enumerate_partitions,
    implication_adjunctive,
    implication_blocks,
    implication_graph,
    implication_interior,
    join,
    meet,
    negation,
    pi_negation,
    refines,
    retained_links,
)

from conftest import partition_pairs, partition_triples


def all_parts(n):
    return list(enumerate_partitions(n))


def pinned_example():
    sigma = Partition.from_blocks([[0], [1, 2, 3]], 4)
    pi = Partition.from_blocks([[0, 1], [2, 3]], 4)
    expected = Partition.from_blocks([[0, 1], [2], [3]], 4)
    return sigma, pi, expected


class TestLattice:
    def test_join_examples(self):
        pi = Partition.from_blocks([[0, 1], [2]], 3)
        sigma = Partition.from_blocks([[0], [1, 2]], 3)
        assert join(pi, sigma) == Partition.discrete(3)
        for n in range(1, 6):
            for p in all_parts(n):
                assert join(p, Partition.indiscrete(n)) == p
                assert join(p, p) == p

    def test_meet_examples(self):
        sigma = Partition.from_blocks([[0], [1, 2]], 3)
        tau = Partition.from_blocks([[1], [0, 2]], 3)
        assert meet(sigma, tau) == Partition.indiscrete(3)
        for n in range(1, 6):
            for p in all_parts(n):
                assert meet(p, Partition.discrete(n)) == p
                assert meet(p, p) == p

    def test_meet_two_definitions_agree(self):
        # generated-equivalence route vs interior of the ditset intersection
        for n in range(1, 6):
            for p in all_parts(n):
                for q in all_parts(n):
                    by_interior = (p.ditset & q.ditset).interior()
                    assert meet(p, q).ditset == by_interior

    def test_join_ditset_law(self):
        # the one operation whose ditset needs no interior
        for n in range(1, 7):
            for p in all_parts(n):
                for q in all_parts(n):
                    assert join(p, q).ditset == p.ditset | q.ditset

    def test_mismatched_universes(self):
        with pytest.raises(ValueError, match="mismatch"):
            join(Partition.discrete(2), Partition.discrete(3))
        with pytest.raises(ValueError, match="mismatch"):
            meet(Partition.discrete(2), Partition.discrete(3))

    def test_lattice_identities(self):
        for n in range(1, 7):
            top = Partition.discrete(n)
            bottom = Partition.indiscrete(n)
            for p in all_parts(n):
                assert meet(top, p) == p
                assert join(bottom, p) == p

    @given(partition_pairs())
    def test_commutative(self, pair):
        p, q = pair
        assert join(p, q) == join(q, p)
        assert meet(p, q) == meet(q, p)

    @given(partition_triples())
    def test_associative_and_absorbing(self, triple):
        p, q, r = triple
        assert join(join(p, q), r) == join(p, join(q, r))
        assert meet(meet(p, q), r) == meet(p, meet(q, r))
        assert join(p, meet(p, q)) == p
        assert meet(p, join(p, q)) == p

    @given(partition_pairs())
    def test_join_meet_order_consistency(self, pair):
        p, q = pair
        assert refines(p, join(p, q))
        assert refines(meet(p, q), p)


class TestImplication:
    def test_pinned_example_all_definitions(self):
        sigma, pi, expected = pinned_example()
        assert implication_blocks(sigma, pi) == expected
        assert implication_graph(sigma, pi) == expected
        assert implication_interior(sigma, pi) == expected
        assert implication_adjunctive(sigma, pi) == expected

    def test_pinned_example_single_link(self):
        sigma, pi, _ = pinned_example()
        assert retained_links(IMPLIES, sigma, pi).pairs() == {(0, 1), (1, 0)}

    def test_top_iff_refines(self):
        for n in range(1, 6):
            top = Partition.discrete(n)
            for sigma in all_parts(n):
                for pi in all_parts(n):
                    assert (implication_blocks(sigma, pi) == top) == refines(sigma, pi)

    def test_indiscrete_antecedent_gives_top(self):
        pi = Partition.from_blocks([[0, 1], [2, 3]], 4)
        assert implication_blocks(Partition.indiscrete(4), pi) == Partition.discrete(4)

    def test_self_implication_is_top(self):
        for n in range(1, 6):
            for p in all_parts(n):
                assert implication_graph(p, p) == Partition.discrete(n)

    def test_discrete_consequent_gives_top(self):
        for n in range(1, 5):
            for sigma in all_parts(n):
                assert implication_interior(sigma, Partition.discrete(n)) == Partition.discrete(n)

    def test_four_definitions_agree(self):
        for n in range(1, 5):
            for sigma in all_parts(n):
                for pi in all_parts(n):
                    reference = implication_blocks(sigma, pi)
                    assert implication_graph(sigma, pi) == reference
                    assert implication_interior(sigma, pi) == reference
                    assert implication_adjunctive(sigma, pi) == reference

    def test_adjunction_property(self):
        # dit(tau) & dit(sigma) <= dit(pi) exactly when tau lies below sigma => pi
        for n in range(1, 5):
            parts = all_parts(n)
            for sigma in parts:
                for pi in parts:
                    result = implication_blocks(sigma, pi)
                    assert result.ditset & sigma.ditset <= pi.ditset  # the unit
                    for tau in parts:
                        lhs = tau.ditset & sigma.ditset <= pi.ditset
                        assert lhs == refines(tau, result)

    def test_adjunctive_limit(self):
        big = Partition.discrete(9)
        with pytest.raises(AdjunctiveLimitError, match="adjunctive oracle limit"):
            implication_adjunctive(big, big)
        # the bound is overridable
        assert implication_adjunctive(Partition.discrete(5), Partition.discrete(5), limit=5)

    def test_mismatched_universes(self):
        with pytest.raises(ValueError, match="mismatch"):
            implication_blocks(Partition.discrete(2), Partition.discrete(3))


class TestNegation:
    def test_absolute_negation(self):
        assert negation(Partition.indiscrete(3)) == Partition.discrete(3)
        assert negation(Partition.from_blocks([[0], [1, 2]], 3)) == Partition.indiscrete(3)
        for n in range(2, 6):
            assert negation(Partition.discrete(n)) == Partition.indiscrete(n)
            for p in all_parts(n):
                if p != Partition.indiscrete(n):
                    assert negation(p) == Partition.indiscrete(n)

    def test_pi_negation_endpoints(self):
        for n in range(1, 6):
            for pi in all_parts(n):
                assert pi_negation(Partition.discrete(n), pi) == pi
                assert pi_negation(pi, pi) == Partition.discrete(n)

    def test_triple_negation_collapse(self):
        for n in range(1, 5):
            for sigma in all_parts(n):
                for pi in all_parts(n):
                    once = pi_negation(sigma, pi)
                    thrice = pi_negation(pi_negation(once, pi), pi)
                    assert thrice == once


class TestCommonDits:
    def test_nonempty_ditsets_overlap(self):
        for n in range(2, 6):
            nontrivial = [p for p in all_parts(n) if p != Partition.indiscrete(n)]
            for p in nontrivial:
                for q in nontrivial:
                    assert len(p.ditset & q.ditset) > 0

    def test_atomic_partitions_overlap(self):
        for n in range(2, 6):
            atomic = [p for p in all_parts(n) if p.num_blocks == 2]
            for p in atomic:
                for q in atomic:
                    assert len(p.ditset & q.ditset) > 0


class TestGraphMethod:
    def test_or_matches_join_and_matches_meet(self):
        for n in range(1, 5):
            for p in all_parts(n):
                for q in all_parts(n):
                    assert binary_op_graph(OR, p, q) == join(p, q)
                    assert binary_op_graph(AND, p, q) == meet(p, q)

    def test_constant_true_gives_top(self):
        always = BoolOp2((True, True, True, True))
        for n in range(1, 5):
            for p in all_parts(n):
                assert binary_op_graph(always, p, p) == Partition.discrete(n)

    def test_left_operand_feeds_first_argument(self):
        # projection onto the left operand: true exactly on the left dits,
        # so the retained links are the left partition's indits
        left_projection = BoolOp2.from_function(lambda a, b: a)
        for n in range(2, 5):
            for p in all_parts(n):
                for q in all_parts(n):
                    assert binary_op_graph(left_projection, p, q) == p
        sigma, pi, expected = (
            Partition.from_blocks([[0], [1, 2, 3]], 4),
            Partition.from_blocks([[0, 1], [2, 3]], 4),
            Partition.from_blocks([[0, 1], [2], [3]], 4),
        )
        assert binary_op_graph(IMPLIES, sigma, pi) == expected
        assert binary_op_graph(IMPLIES, pi, sigma) != expected

    def test_all_ops_match_interior_formulation(self):
        for n in range(1, 4):
            off = BinaryRelation.identity(n).complement()
            for op in all_binary_ops():
                for p in all_parts(n):
                    for q in all_parts(n):
                        true_links = off - retained_links(op, p, q)
                        assert binary_op_graph(op, p, q).ditset == true_links.interior()

    def test_sixteen_distinct_ops(self):
        ops = all_binary_ops()
        assert len(ops) == len(set(ops)) == 16

    def test_table_validation(self):
        with pytest.raises(ValueError, match="four boolean"):
            BoolOp2((True, False))
        assert IMPLIES(True, False) is False
        assert IMPLIES(False, False) is True
