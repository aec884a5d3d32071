"""Object sets, equivalence partitions, ties-permitted rankings, and the
combinatorial cardinalities the knowledge measures are built on.

All types are immutable after construction and every operation is a pure
function, so values can be shared freely between threads.
"""

from collections.abc import Mapping
from dataclasses import dataclass

from .errors import InputError

_RESERVED_CHARS = frozenset(">~,")


def _check_name(name: str) -> None:
    if not isinstance(name, str):
        raise TypeError(f"object name must be a string, got {type(name).__name__}")
    if not name or any(ch.isspace() for ch in name) or _RESERVED_CHARS & set(name):
        raise ValueError(
            f"invalid object name {name!r}: names are non-empty and may not "
            "contain whitespace, '>', '~', or ','"
        )


@dataclass(frozen=True)
class ObjectSet:
    """Ordered collection of at least two distinct object names."""

    members: tuple[str, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if len(members) < 2:
            raise ValueError(f"an object set needs at least 2 members, got {len(members)}")
        positions: dict[str, int] = {}
        for i, name in enumerate(members):
            _check_name(name)
            if name in positions:
                raise ValueError(f"duplicate object name {name!r}")
            positions[name] = i
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_positions", positions)

    @property
    def n(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def position(self, name: str) -> int:
        """Index of `name` in the declared member order."""
        return self._positions[name]


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty classes covering an object set.

    Classes are stored in a canonical order (by the base position of each
    class's earliest member) so equal partitions compare and render equal.
    """

    base: ObjectSet
    classes: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        classes = tuple(frozenset(c) for c in self.classes)
        if any(not c for c in classes):
            raise ValueError("empty equivalence class")
        by_object: dict[str, frozenset[str]] = {}
        for cls in classes:
            for name in cls:
                if name not in self.base:
                    raise ValueError(f"class member {name!r} is not in the object set")
                if name in by_object:
                    raise ValueError(f"object {name!r} appears in more than one class")
                by_object[name] = cls
        if len(by_object) != self.base.n:
            missing = [m for m in self.base if m not in by_object]
            raise ValueError(f"classes do not cover the object set; missing {missing}")
        classes = tuple(sorted(classes, key=lambda c: min(self.base.position(m) for m in c)))
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "_by_object", by_object)

    def class_of(self, name: str) -> frozenset[str]:
        """Equivalence class containing `name`."""
        try:
            return self._by_object[name]
        except KeyError:
            raise KeyError(f"unknown object {name!r}") from None

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class WeakOrder:
    """Ties-permitted ranking: ordered tiers, first tier most preferred.

    Tier order is significant; order inside a tier is not.
    """

    base: ObjectSet
    tiers: tuple[frozenset[str], ...]

    def __post_init__(self) -> None:
        tiers = tuple(frozenset(t) for t in self.tiers)
        if any(not t for t in tiers):
            raise ValueError("empty tier")
        seen: set[str] = set()
        for tier in tiers:
            for name in tier:
                if name not in self.base:
                    raise ValueError(f"tier member {name!r} is not in the object set")
                if name in seen:
                    raise ValueError(f"object {name!r} appears in more than one tier")
                seen.add(name)
        if len(seen) != self.base.n:
            missing = [m for m in self.base if m not in seen]
            raise ValueError(f"tiers do not cover the object set; missing {missing}")
        object.__setattr__(self, "tiers", tiers)


@dataclass(frozen=True)
class PreferenceSequence:
    """Per-object sets of possible ranking positions, aligned with the base
    member order.

    Tied objects carry identical position sets, every set is a contiguous
    integer range, and the distinct sets tile 1..n.
    """

    base: ObjectSet
    entries: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        entries = tuple(frozenset(e) for e in self.entries)
        n = self.base.n
        if len(entries) != n:
            raise ValueError(f"expected {n} entries, got {len(entries)}")
        counts: dict[frozenset[int], int] = {}
        for entry in entries:
            if not entry:
                raise ValueError("empty position set")
            if min(entry) < 1 or max(entry) > n:
                raise ValueError(f"positions {sorted(entry)} outside 1..{n}")
            if max(entry) - min(entry) + 1 != len(entry):
                raise ValueError(f"positions {sorted(entry)} are not contiguous")
            counts[entry] = counts.get(entry, 0) + 1
        covered: set[int] = set()
        for entry, count in counts.items():
            if count != len(entry):
                raise ValueError(
                    f"positions {sorted(entry)} are shared by {count} objects, "
                    f"expected {len(entry)}"
                )
            if covered & entry:
                raise ValueError("distinct position sets overlap")
            covered |= entry
        # disjointness plus the per-entry counts force covered == {1..n}
        object.__setattr__(self, "entries", entries)

    def positions_of(self, name: str) -> frozenset[int]:
        return self.entries[self.base.position(name)]


def partition_from_labels(assignments: Mapping[str, object]) -> Partition:
    """Group objects into equivalence classes by label equality.

    Objects share a class exactly when their labels compare equal; the object
    order of the mapping becomes the base order.
    """
    base = ObjectSet(tuple(assignments))
    groups: dict[object, list[str]] = {}
    for name in base:
        groups.setdefault(assignments[name], []).append(name)
    return Partition(base, tuple(frozenset(g) for g in groups.values()))


def uncertainty(partition: Partition) -> int:
    """Total class-size mass: the sum over objects of their class's size,
    equal to the sum of squared class sizes.

    Ranges from n (all singletons) to n*n (a single class).
    """
    return sum(len(c) * len(c) for c in partition.classes)


def preference_sequence(order: WeakOrder) -> PreferenceSequence:
    """Possible ranking positions per object: a tier's objects share the
    contiguous position range that the tier occupies."""
    by_name: dict[str, frozenset[int]] = {}
    placed = 0
    for tier in order.tiers:
        span = frozenset(range(placed + 1, placed + len(tier) + 1))
        for name in tier:
            by_name[name] = span
        placed += len(tier)
    return PreferenceSequence(order.base, tuple(by_name[m] for m in order.base))


def sequence_cardinality(sequence: PreferenceSequence) -> int:
    """Sum of entry sizes: n for a strict total order, n*n for total
    indifference."""
    return sum(len(e) for e in sequence.entries)


def tie_partition(order: WeakOrder) -> Partition:
    """Partition whose classes are exactly the tie groups of a weak order."""
    return Partition(order.base, order.tiers)


def is_refinement(fine: Partition, coarse: Partition) -> bool:
    """True iff every class of `fine` lies inside some class of `coarse`."""
    if fine.base != coarse.base:
        raise InputError("partitions are over different object sets")
    return all(cls <= coarse.class_of(next(iter(cls))) for cls in fine.classes)
