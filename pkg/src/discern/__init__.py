"""Quantify how sharply raters discriminate objects.

Equivalence judgments and ties-permitted rankings both induce a combinatorial
uncertainty over an object set; from it the package derives complementary
knowledge and ignorance levels, a knowledge entropy, additivity analyses, and
the log-linear model linking uncertainty to either variable.
"""

from .analysis import (
    AdditivityContrast,
    AdditivityReport,
    RaterRecord,
    additivity_contrast_report,
    class_size_distribution,
    decomposition_check,
    pairwise_additivity_check,
    rank_raters,
    rater_record,
    shannon_entropy,
)
from .dynamics import IGNORANCE, KNOWLEDGE, EvolutionModel, calibrate
from .errors import InputError, RankingParseError
from .ingest import (
    MeasurementTable,
    RankingExpression,
    group_measurements,
    load_dataset,
    load_measurement_table,
    load_rankings,
    parse_ranking,
    render_ranking,
)
from .measures import (
    IDENTITY_TOLERANCE,
    KnowledgeMetrics,
    entropy_exchange_residual,
    ignorance_of_partition,
    ignorance_of_sequence,
    knowledge_entropy_of_partition,
    knowledge_entropy_of_sequence,
    knowledge_of_partition,
    knowledge_of_sequence,
    metrics,
)
from .model import (
    ObjectSet,
    Partition,
    PreferenceSequence,
    WeakOrder,
    is_refinement,
    partition_from_labels,
    preference_sequence,
    sequence_cardinality,
    tie_partition,
    uncertainty,
)

__version__ = "0.1.0"

__all__ = [
    "AdditivityContrast",
    "AdditivityReport",
    "EvolutionModel",
    "IDENTITY_TOLERANCE",
    "IGNORANCE",
    "InputError",
    "KNOWLEDGE",
    "KnowledgeMetrics",
    "MeasurementTable",
    "ObjectSet",
    "Partition",
    "PreferenceSequence",
    "RankingExpression",
    "RankingParseError",
    "RaterRecord",
    "WeakOrder",
    "additivity_contrast_report",
    "calibrate",
    "class_size_distribution",
    "decomposition_check",
    "entropy_exchange_residual",
    "group_measurements",
    "ignorance_of_partition",
    "ignorance_of_sequence",
    "is_refinement",
    "knowledge_entropy_of_partition",
    "knowledge_entropy_of_sequence",
    "knowledge_of_partition",
    "knowledge_of_sequence",
    "load_dataset",
    "load_measurement_table",
    "load_rankings",
    "metrics",
    "pairwise_additivity_check",
    "parse_ranking",
    "partition_from_labels",
    "preference_sequence",
    "rank_raters",
    "rater_record",
    "render_ranking",
    "sequence_cardinality",
    "shannon_entropy",
    "tie_partition",
    "uncertainty",
]
