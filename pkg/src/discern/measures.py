"""Knowledge, ignorance, and knowledge-entropy measures.

Knowledge and ignorance are complementary (they sum to 1), and knowledge
entropy equals ignorance plus one.  Both identities are asserted from
independently computed values rather than assumed, to catch transcription
or floating-point bugs.
"""

import math
from dataclasses import dataclass

from .errors import InputError
from .model import Partition, PreferenceSequence, sequence_cardinality, uncertainty

#: Tolerance for the arithmetic identities between the measures.
IDENTITY_TOLERANCE = 1e-12

PARTITION_BASED = "partition-based"
PREFERENCE_BASED = "preference-based"


def _knowledge(n: int, cardinality: int) -> float:
    return math.log((n * n) / cardinality) / math.log(n)


def _ignorance(n: int, cardinality: int) -> float:
    return math.log(cardinality / n) / math.log(n)


def _entropy(n: int, cardinality: int) -> float:
    return math.log(cardinality) / math.log(n)


def knowledge_of_partition(p: Partition) -> float:
    """log(n*n / uncertainty(p)) / log(n): 1.0 when every object is
    distinguished, 0.0 when none are."""
    return _knowledge(p.base.n, uncertainty(p))


def ignorance_of_partition(p: Partition) -> float:
    """log(uncertainty(p) / n) / log(n), the complement of the knowledge
    level."""
    return _ignorance(p.base.n, uncertainty(p))


def knowledge_entropy_of_partition(p: Partition) -> float:
    """log(uncertainty(p)) / log(n), in [1, 2]; equals ignorance plus one."""
    return _entropy(p.base.n, uncertainty(p))


def knowledge_of_sequence(ps: PreferenceSequence) -> float:
    """Knowledge level of a preference sequence: the partition formula with
    the sequence cardinality in place of the partition uncertainty."""
    return _knowledge(ps.base.n, sequence_cardinality(ps))


def ignorance_of_sequence(ps: PreferenceSequence) -> float:
    return _ignorance(ps.base.n, sequence_cardinality(ps))


def knowledge_entropy_of_sequence(ps: PreferenceSequence) -> float:
    return _entropy(ps.base.n, sequence_cardinality(ps))


@dataclass(frozen=True)
class KnowledgeMetrics:
    """Bundled measures for one partition or preference sequence.

    The residual fields record how far the computed values drift from the
    exact identities knowledge + ignorance = 1 and entropy = ignorance + 1.
    """

    n: int
    cardinality: int
    knowledge: float
    ignorance: float
    entropy: float
    source_kind: str
    complement_residual: float
    entropy_residual: float

    def __post_init__(self) -> None:
        if self.source_kind not in (PARTITION_BASED, PREFERENCE_BASED):
            raise ValueError(f"unknown source kind {self.source_kind!r}")
        if not self.n <= self.cardinality <= self.n * self.n:
            raise ValueError(
                f"cardinality {self.cardinality} outside [{self.n}, {self.n * self.n}]"
            )
        if self.complement_residual >= IDENTITY_TOLERANCE:
            raise ValueError("knowledge and ignorance do not sum to 1")
        if self.entropy_residual >= IDENTITY_TOLERANCE:
            raise ValueError("entropy does not equal ignorance plus one")


def metrics(source: Partition | PreferenceSequence) -> KnowledgeMetrics:
    """All measures of a partition or preference sequence, with identity
    residuals."""
    if isinstance(source, Partition):
        n, cardinality, kind = source.base.n, uncertainty(source), PARTITION_BASED
    elif isinstance(source, PreferenceSequence):
        n, cardinality, kind = source.base.n, sequence_cardinality(source), PREFERENCE_BASED
    else:
        raise TypeError(
            f"expected a Partition or PreferenceSequence, got {type(source).__name__}; "
            "convert a WeakOrder with tie_partition() or preference_sequence()"
        )
    knowledge = _knowledge(n, cardinality)
    ignorance = _ignorance(n, cardinality)
    entropy = _entropy(n, cardinality)
    return KnowledgeMetrics(
        n=n,
        cardinality=cardinality,
        knowledge=knowledge,
        ignorance=ignorance,
        entropy=entropy,
        source_kind=kind,
        complement_residual=abs(knowledge + ignorance - 1.0),
        entropy_residual=abs(entropy - ignorance - 1.0),
    )


def entropy_exchange_residual(p_before: Partition, p_after: Partition) -> float:
    """Residual of the exchange identity: the knowledge gained between two
    partitions equals the knowledge entropy lost.

    Always zero up to floating-point noise; exposed so the identity can be
    checked rather than trusted.
    """
    if p_before.base != p_after.base:
        raise InputError("partitions are over different object sets")
    gained = knowledge_of_partition(p_after) - knowledge_of_partition(p_before)
    released = knowledge_entropy_of_partition(p_before) - knowledge_entropy_of_partition(p_after)
    return gained - released
