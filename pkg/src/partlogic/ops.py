"""Lattice operations and logical operations on partitions.

Join and meet make the partitions on a universe a lattice; implication
upgrades it to an algebra.  Implication comes in four equivalent
formulations: the block rule is the production implementation and the
other three are kept as oracles for cross-checking.  The link-labelling
method generalizes to all sixteen binary truth functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import BinaryRelation, Partition, _require_same_universe, enumerate_partitions


@dataclass(frozen=True)
class BoolOp2:
    """One of the 16 binary truth functions, as a 4-entry truth table.

    ``table`` is indexed by ``2*left + right``, so the entries are the
    values at (F,F), (F,T), (T,F), (T,T).
    """

    table: tuple[bool, bool, bool, bool]

    def __post_init__(self):
        if len(self.table) != 4 or not all(isinstance(v, bool) for v in self.table):
            raise ValueError("truth table needs exactly four boolean entries")

    @classmethod
    def from_function(cls, fn: Callable[[bool, bool], bool]) -> "BoolOp2":
        return cls((fn(False, False), fn(False, True), fn(True, False), fn(True, True)))

    def __call__(self, left: bool, right: bool) -> bool:
        return self.table[2 * left + right]


OR = BoolOp2((False, True, True, True))
AND = BoolOp2((False, False, False, True))
IMPLIES = BoolOp2((True, True, False, True))


def all_binary_ops() -> tuple[BoolOp2, ...]:
    """All sixteen binary truth functions."""
    return tuple(
        BoolOp2((bool(k & 1), bool(k >> 1 & 1), bool(k >> 2 & 1), bool(k >> 3 & 1)))
        for k in range(16)
    )


def join(p: Partition, q: Partition) -> Partition:
    """Least upper bound in the refinement order.

    Blocks are the non-empty intersections of a block of ``p`` with a
    block of ``q``; the distinctions of the join are the union of the
    operands' distinctions.
    """
    _require_same_universe(p, q)
    return Partition.from_labels(tuple(zip(p.rgs, q.rgs)))


def meet(p: Partition, q: Partition) -> Partition:
    """Greatest lower bound in the refinement order.

    Elements end up together exactly when a chain of overlapping blocks
    of the two operands connects them, i.e. the blocks are the classes
    of the equivalence relation generated by keeping together whatever
    either operand keeps together.
    """
    _require_same_universe(p, q)
    return Partition.from_equivalence((p.inditset | q.inditset).closure())


def implication_blocks(sigma: Partition, pi: Partition) -> Partition:
    """Implication by the block rule: the production implementation.

    Every block of ``pi`` that lies inside a block of ``sigma`` dissolves
    into singletons; every other block stays whole.  The result is the
    discrete partition exactly when ``pi`` refines ``sigma``.
    """
    _require_same_universe(sigma, pi)
    labels: list[tuple[str, int]] = [("", 0)] * pi.n
    for b, block in enumerate(pi.blocks):
        first = sigma.rgs[block[0]]
        if all(sigma.rgs[u] == first for u in block):
            for u in block:
                labels[u] = ("single", u)
        else:
            for u in block:
                labels[u] = ("whole", b)
    return Partition.from_labels(labels)


implication = implication_blocks


class AdjunctiveLimitError(ValueError):
    """The adjunctive oracle was asked for a universe beyond its enumeration bound."""


def implication_adjunctive(sigma: Partition, pi: Partition, limit: int = 8) -> Partition:
    """Implication as the largest partition adjoint to intersecting with ``dit(sigma)``.

    Its ditset is the union of every ditset whose intersection with
    ``dit(sigma)`` lands inside ``dit(pi)``.  Enumerates all partitions
    of the universe, so it exists for verification, not production;
    raises :class:`AdjunctiveLimitError` past ``limit``.
    """
    _require_same_universe(sigma, pi)
    if sigma.n > limit:
        raise AdjunctiveLimitError(
            f"adjunctive oracle limit: universe size {sigma.n} exceeds bound {limit}"
        )
    dit_sigma = sigma.ditset
    dit_pi = pi.ditset
    bits = 0
    for tau in enumerate_partitions(sigma.n):
        if tau.ditset & dit_sigma <= dit_pi:
            bits |= tau.ditset.bits
    return Partition.from_equivalence(BinaryRelation(sigma.n, bits).complement())


def retained_links(op: BoolOp2, p: Partition, q: Partition) -> BinaryRelation:
    """Off-diagonal pairs whose truth values evaluate to false under ``op``.

    A pair counts as true for a partition when it is one of its
    distinctions.  These are the links that survive the deletion step of
    the link-labelling method; for implication they are exactly the
    pairs distinguished by ``p`` but not by ``q``.
    """
    _require_same_universe(p, q)
    n = p.n
    off = BinaryRelation.identity(n).complement().bits
    dp = p.ditset.bits
    dq = q.ditset.bits
    bits = 0
    for left in (False, True):
        for right in (False, True):
            if not op(left, right):
                bits |= (dp if left else ~dp) & (dq if right else ~dq) & off
    return BinaryRelation(n, bits)


def binary_op_graph(op: BoolOp2, p: Partition, q: Partition) -> Partition:
    """Evaluate any binary truth function on partitions by the link-labelling method.

    Label every link of the complete graph on the universe with the pair
    of truth values the operands give it, delete the links evaluating to
    true, and read the blocks off the connected components of what
    remains.  ``p`` supplies the left truth-table argument and ``q`` the
    right one.  Isolated vertices become singleton blocks.
    """
    links = retained_links(op, p, q)
    parent = list(range(p.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in links:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return Partition.from_labels([find(u) for u in range(p.n)])


def implication_graph(sigma: Partition, pi: Partition) -> Partition:
    """Implication by the link-labelling method."""
    return binary_op_graph(IMPLIES, sigma, pi)


def implication_interior(sigma: Partition, pi: Partition) -> Partition:
    """Implication through distinction sets.

    Form ``dit(sigma)^c | dit(pi)``, which need not be a ditset, and
    take its interior; the partition is read back off the complementary
    equivalence relation.
    """
    _require_same_universe(sigma, pi)
    target = (sigma.ditset.complement() | pi.ditset).interior()
    return Partition.from_equivalence(target.complement())


def negation(sigma: Partition) -> Partition:
    """Absolute negation: implication into the indiscrete partition.

    Collapses everything except the indiscrete partition itself, whose
    negation is discrete.
    """
    return implication_blocks(sigma, Partition.indiscrete(sigma.n))


def pi_negation(sigma: Partition, pi: Partition) -> Partition:
    """Negation of ``sigma`` relative to ``pi``.

    The same operation as ``implication_blocks(sigma, pi)``, named for
    the role it plays when ``pi`` is held fixed.
    """
    return implication_blocks(sigma, pi)
