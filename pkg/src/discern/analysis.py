"""Additivity checks, Shannon-entropy contrast, and rater comparison.

The knowledge measure is not sub-additive in two distinct senses: the summed
knowledge of two raters may not be realizable by any partition cardinality,
and one rater's knowledge on a whole set may differ from the sum over
disjoint blocks.  Shannon entropy over class-size frequencies, by contrast,
decomposes additively across blocks.
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import InputError
from .measures import (
    KnowledgeMetrics,
    knowledge_entropy_of_partition,
    knowledge_of_partition,
    metrics,
)
from .model import ObjectSet, Partition, WeakOrder, preference_sequence

#: Slack used when deciding whether an implied cardinality is realizable.
FEASIBILITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class AdditivityReport:
    """Outcome of asking whether summed knowledge levels are realizable.

    `implied_cardinality` solves the knowledge formula for the summed level;
    it is feasible when it lies inside [n, n*n].  For decomposition checks,
    `k_whole` is the knowledge on the undivided set and `gap` is the block
    sum minus `k_whole`.
    """

    n: int
    k_values: tuple[float, ...]
    k_sum: float
    implied_cardinality: float
    feasible: bool
    k_whole: float | None = None
    gap: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "k_values", tuple(self.k_values))
        in_range = (
            self.n - FEASIBILITY_TOLERANCE
            <= self.implied_cardinality
            <= self.n * self.n + FEASIBILITY_TOLERANCE
        )
        if self.feasible != in_range:
            raise ValueError("feasible flag contradicts the implied cardinality")


@dataclass(frozen=True)
class AdditivityContrast:
    """Side-by-side decomposition of knowledge entropy and Shannon entropy
    over the same blocks.

    The Shannon side reconstructs the whole-set entropy as the between-block
    entropy plus the size-weighted within-block entropies; the reconstruction
    is exact whenever every equivalence class lies inside a single block
    (`blocks_align_with_classes`).  The knowledge-entropy side compares the
    whole-set value with the plain block sum, which overshoots.
    """

    n: int
    knowledge_entropy_whole: float
    knowledge_entropy_blocks: tuple[float, ...]
    knowledge_entropy_block_sum: float
    knowledge_entropy_gap: float
    knowledge_entropy_gap_nonzero: bool
    shannon_whole: float
    shannon_between_blocks: float
    shannon_within_blocks: tuple[float, ...]
    shannon_weighted_blocks: float
    shannon_gap: float
    blocks_align_with_classes: bool


@dataclass(frozen=True)
class RaterRecord:
    """One rater's judgment (a partition or a weak order) with its measures."""

    rater_id: str
    source: Partition | WeakOrder
    metrics: KnowledgeMetrics


def rater_record(rater_id: str, source: Partition | WeakOrder) -> RaterRecord:
    """Bundle a rater's judgment with its computed measures."""
    if isinstance(source, WeakOrder):
        m = metrics(preference_sequence(source))
    elif isinstance(source, Partition):
        m = metrics(source)
    else:
        raise TypeError(f"expected a Partition or WeakOrder, got {type(source).__name__}")
    return RaterRecord(rater_id=rater_id, source=source, metrics=m)


def _implied_cardinality(k_sum: float, n: int) -> float:
    # invert knowledge = log(n*n / cardinality) / log(n)
    return (n * n) * math.exp(-k_sum * math.log(n))


def pairwise_additivity_check(k_a: float, k_b: float, n: int) -> AdditivityReport:
    """Would the summed knowledge of two raters be realizable by a single
    partition of n objects?"""
    if n < 2:
        raise ValueError(f"need at least 2 objects, got {n}")
    for k in (k_a, k_b):
        if not 0.0 <= k <= 1.0:
            raise ValueError(f"knowledge level {k} outside [0, 1]")
    k_sum = k_a + k_b
    implied = _implied_cardinality(k_sum, n)
    feasible = (
        n - FEASIBILITY_TOLERANCE <= implied <= n * n + FEASIBILITY_TOLERANCE
    )
    return AdditivityReport(
        n=n,
        k_values=(k_a, k_b),
        k_sum=k_sum,
        implied_cardinality=implied,
        feasible=feasible,
    )


def _checked_blocks(p: Partition, blocks: Sequence[ObjectSet]) -> tuple[ObjectSet, ...]:
    blocks = tuple(blocks)
    if len(blocks) < 2:
        raise InputError("need at least two blocks")
    seen: set[str] = set()
    for block in blocks:
        for name in block:
            if name not in p.base:
                raise InputError(f"block member {name!r} is not in the object set")
            if name in seen:
                raise InputError(f"object {name!r} appears in more than one block")
            seen.add(name)
    if len(seen) != p.base.n:
        missing = [m for m in p.base if m not in seen]
        raise InputError(f"blocks do not cover the object set; missing {missing}")
    return blocks


def _restrict(p: Partition, block: ObjectSet) -> Partition:
    members = frozenset(block.members)
    classes = [cls & members for cls in p.classes if cls & members]
    return Partition(block, tuple(classes))


def decomposition_check(p: Partition, blocks: Sequence[ObjectSet]) -> AdditivityReport:
    """Compare one rater's knowledge on a whole set against the sum of their
    knowledge on disjoint blocks of it.

    Blocks must partition the base set and each needs at least two objects
    (the knowledge level is undefined on smaller sets).
    """
    blocks = _checked_blocks(p, blocks)
    k_whole = knowledge_of_partition(p)
    block_ks = tuple(knowledge_of_partition(_restrict(p, b)) for b in blocks)
    k_sum = sum(block_ks)
    implied = _implied_cardinality(k_sum, p.base.n)
    feasible = (
        p.base.n - FEASIBILITY_TOLERANCE
        <= implied
        <= p.base.n * p.base.n + FEASIBILITY_TOLERANCE
    )
    return AdditivityReport(
        n=p.base.n,
        k_values=block_ks,
        k_sum=k_sum,
        implied_cardinality=implied,
        feasible=feasible,
        k_whole=k_whole,
        gap=k_sum - k_whole,
    )


def shannon_entropy(weights: Iterable[float]) -> float:
    """Shannon entropy of a probability distribution, in nats."""
    weights = tuple(float(w) for w in weights)
    if not weights:
        raise InputError("empty distribution")
    if any(w <= 0 for w in weights):
        raise InputError("weights must be positive")
    total = sum(weights)
    if abs(total - 1.0) > 1e-9:
        raise InputError(f"weights must sum to 1, got {total}")
    # + 0.0 normalizes the -0.0 that a certain outcome would produce
    return -sum(w * math.log(w) for w in weights) + 0.0


def class_size_distribution(p: Partition) -> tuple[float, ...]:
    """Relative class sizes of a partition, in canonical class order."""
    n = p.base.n
    return tuple(size / n for size in p.class_sizes)


def additivity_contrast_report(
    p: Partition, blocks: Sequence[ObjectSet]
) -> AdditivityContrast:
    """Contrast how knowledge entropy and Shannon entropy behave when a set
    is split into disjoint blocks."""
    blocks = _checked_blocks(p, blocks)
    n = p.base.n

    entropy_whole = knowledge_entropy_of_partition(p)
    restrictions = [_restrict(p, b) for b in blocks]
    entropy_blocks = tuple(knowledge_entropy_of_partition(r) for r in restrictions)
    entropy_sum = sum(entropy_blocks)
    entropy_gap = entropy_sum - entropy_whole

    block_members = [frozenset(b.members) for b in blocks]
    aligned = all(
        any(cls <= members for members in block_members) for cls in p.classes
    )
    shannon_whole = shannon_entropy(class_size_distribution(p))
    weights = [b.n / n for b in blocks]
    shannon_between = shannon_entropy(weights)
    shannon_within = tuple(shannon_entropy(class_size_distribution(r)) for r in restrictions)
    shannon_weighted = shannon_between + sum(
        w * h for w, h in zip(weights, shannon_within)
    )
    return AdditivityContrast(
        n=n,
        knowledge_entropy_whole=entropy_whole,
        knowledge_entropy_blocks=entropy_blocks,
        knowledge_entropy_block_sum=entropy_sum,
        knowledge_entropy_gap=entropy_gap,
        knowledge_entropy_gap_nonzero=abs(entropy_gap) > FEASIBILITY_TOLERANCE,
        shannon_whole=shannon_whole,
        shannon_between_blocks=shannon_between,
        shannon_within_blocks=shannon_within,
        shannon_weighted_blocks=shannon_weighted,
        shannon_gap=shannon_whole - shannon_weighted,
        blocks_align_with_classes=aligned,
    )


def rank_raters(records: Iterable[RaterRecord]) -> tuple[RaterRecord, ...]:
    """Order rater records by descending knowledge, breaking ties by rater id.

    All records must cover the same object set and carry distinct rater ids;
    the result does not depend on the input order.
    """
    records = tuple(records)
    if not records:
        return ()
    ids: set[str] = set()
    for record in records:
        if record.rater_id in ids:
            raise InputError(f"duplicate rater id {record.rater_id!r}")
        ids.add(record.rater_id)
        if record.source.base != records[0].source.base:
            raise InputError("records cover different object sets")
    return tuple(sorted(records, key=lambda r: (-r.metrics.knowledge, r.rater_id)))
