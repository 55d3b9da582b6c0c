"""The Boolean algebra sitting above a fixed partition.

For a fixed partition ``pi``, the partitions of the form
``sigma => pi`` are exactly the partitions that discretize some subset
of the non-singleton blocks of ``pi`` and leave the rest whole.  They
form a Boolean algebra inside the segment from ``pi`` up to the discrete
partition, isomorphic to the powerset of those non-singleton blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .core import Partition, _require_same_universe, refines
from .ops import join, meet, pi_negation

MAX_CORE_BLOCKS = 20


@dataclass(frozen=True)
class BooleanCore:
    """All partitions of the form ``sigma => pi`` for a fixed ``pi``.

    ``members[mask]`` discretizes exactly the blocks of ``ns_blocks``
    whose bit is set in ``mask``, so ``members[0]`` is ``pi`` itself and
    the last member is the discrete partition.
    """

    pi: Partition
    ns_blocks: tuple[tuple[int, ...], ...]
    members: tuple[Partition, ...]

    @property
    def bottom(self) -> Partition:
        return self.members[0]

    @property
    def top(self) -> Partition:
        return self.members[-1]

    @cached_property
    def _member_masks(self) -> dict[Partition, int]:
        return {member: mask for mask, member in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, p: Partition) -> bool:
        return p in self._member_masks


def boolean_core(pi: Partition) -> BooleanCore:
    """Materialize the Boolean core of ``pi``.

    Builds one member per subset of the non-singleton blocks and checks
    each member is a double-negation fixed point.  The discrete
    partition has no non-singleton blocks, so its core is the
    one-element algebra.
    """
    ns_blocks = tuple(block for block in pi.blocks if len(block) > 1)
    if len(ns_blocks) > MAX_CORE_BLOCKS:
        raise ValueError(
            f"core would have 2**{len(ns_blocks)} members, past the bound 2**{MAX_CORE_BLOCKS}"
        )
    whole = {u: b for b, block in enumerate(ns_blocks) for u in block}
    members = []
    for mask in range(1 << len(ns_blocks)):
        labels: list[tuple[str, int]] = []
        for u in range(pi.n):
            b = whole.get(u)
            if b is None or mask >> b & 1:
                labels.append(("single", u))
            else:
                labels.append(("whole", b))
        members.append(Partition.from_labels(labels))
    core = BooleanCore(pi, ns_blocks, tuple(members))
    for member in members:
        if double_pi_negation(member, pi) != member:
            raise RuntimeError("core member failed the double-negation round-trip")
    return core


def core_from_subset(core: BooleanCore, chosen: Iterable[int]) -> Partition:
    """The member discretizing exactly the chosen non-singleton blocks."""
    mask = 0
    for i in chosen:
        if not (0 <= i < len(core.ns_blocks)):
            raise ValueError(f"block index {i} out of range for {len(core.ns_blocks)} non-singleton blocks")
        mask |= 1 << i
    return core.members[mask]


def core_to_subset(core: BooleanCore, member: Partition) -> frozenset[int]:
    """The set of discretized non-singleton blocks of a core member."""
    mask = core._member_masks.get(member)
    if mask is None:
        raise ValueError("partition is not a member of the core")
    return frozenset(i for i in range(len(core.ns_blocks)) if mask >> i & 1)


def double_pi_negation(sigma: Partition, pi: Partition) -> Partition:
    """Negate ``sigma`` relative to ``pi`` twice.

    This is the closure of ``sigma`` into the core: the blocks of ``pi``
    that lie inside blocks of ``sigma`` stay whole and everything else
    discretizes, so ``sigma`` always refines into the result.
    """
    _require_same_universe(sigma, pi)
    return pi_negation(pi_negation(sigma, pi), pi)


def excluded_middle_partition(sigma: Partition, pi: Partition) -> Partition:
    """The join of ``sigma`` with its negation relative to ``pi``.

    Not the discrete partition in general, but dense relative to ``pi``:
    its double negation is always discrete.
    """
    _require_same_universe(sigma, pi)
    return join(sigma, pi_negation(sigma, pi))


def check_join_decomposition(sigma: Partition, pi: Partition) -> bool:
    """Verify that the join splits through the core.

    The join of ``sigma`` and ``pi`` must equal the meet of the
    excluded-middle partition with the double negation of ``sigma``.
    """
    _require_same_universe(sigma, pi)
    lhs = join(sigma, pi)
    rhs = meet(excluded_middle_partition(sigma, pi), double_pi_negation(sigma, pi))
    return lhs == rhs


def check_core_distribution(phi: Partition, pi: Partition, sigma: Partition, tau: Partition) -> bool:
    """Verify that ``phi`` distributes over negated elements.

    ``phi`` must lie in the segment from ``pi`` up to the discrete
    partition; both distributive equations over the relative negations
    of ``sigma`` and ``tau`` are checked.
    """
    _require_same_universe(phi, pi)
    _require_same_universe(sigma, tau)
    _require_same_universe(phi, sigma)
    if not refines(pi, phi):
        raise ValueError("phi must refine pi (lie in the segment above pi)")
    neg_sigma = pi_negation(sigma, pi)
    neg_tau = pi_negation(tau, pi)
    over_meet = join(phi, meet(neg_sigma, neg_tau)) == meet(join(phi, neg_sigma), join(phi, neg_tau))
    over_join = meet(phi, join(neg_sigma, neg_tau)) == join(meet(phi, neg_sigma), meet(phi, neg_tau))
    return over_meet and over_join
