import pytest

from discern import (
    InputError,
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


class TestObjectSet:
    def test_members_and_positions(self):
        objects = ObjectSet(("a", "b", "c"))
        assert objects.n == 3
        assert list(objects) == ["a", "b", "c"]
        assert "b" in objects
        assert "z" not in objects
        assert objects.position("c") == 2

    def test_rejects_fewer_than_two_members(self):
        with pytest.raises(ValueError, match="at least 2"):
            ObjectSet(("solo",))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            ObjectSet(("a", "b", "a"))

    @pytest.mark.parametrize("name", ["", "a b", "a>b", "a~b", "a,b", "a\tb"])
    def test_rejects_reserved_names(self, name):
        with pytest.raises(ValueError, match="invalid object name"):
            ObjectSet((name, "ok"))

    def test_rejects_non_string_names(self):
        with pytest.raises(TypeError):
            ObjectSet((1, 2))


class TestPartition:
    def test_canonical_class_order(self):
        objects = ObjectSet(("a", "b", "c", "d"))
        p = Partition(objects, ({"d"}, {"b", "c"}, {"a"}))
        assert p.classes == (frozenset({"a"}), frozenset({"b", "c"}), frozenset({"d"}))
        assert p.class_sizes == (1, 2, 1)
        assert p.class_of("c") == {"b", "c"}

    def test_rejects_empty_class(self):
        objects = ObjectSet(("a", "b"))
        with pytest.raises(ValueError, match="empty"):
            Partition(objects, ({"a", "b"}, set()))

    def test_rejects_overlapping_classes(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="more than one class"):
            Partition(objects, ({"a", "b"}, {"b", "c"}))

    def test_rejects_uncovered_objects(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="missing"):
            Partition(objects, ({"a"}, {"b"}))

    def test_rejects_foreign_members(self):
        objects = ObjectSet(("a", "b"))
        with pytest.raises(ValueError, match="not in the object set"):
            Partition(objects, ({"a", "b"}, {"z"}))

    def test_class_of_unknown_object(self):
        objects = ObjectSet(("a", "b"))
        with pytest.raises(KeyError):
            Partition(objects, ({"a"}, {"b"})).class_of("z")


class TestWeakOrder:
    def test_tier_order_is_significant(self):
        objects = ObjectSet(("a", "b"))
        assert WeakOrder(objects, ({"a"}, {"b"})) != WeakOrder(objects, ({"b"}, {"a"}))

    def test_rejects_non_partitioning_tiers(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="more than one tier"):
            WeakOrder(objects, ({"a", "b"}, {"b", "c"}))
        with pytest.raises(ValueError, match="missing"):
            WeakOrder(objects, ({"a"}, {"b"}))
        with pytest.raises(ValueError, match="empty tier"):
            WeakOrder(objects, ({"a", "b", "c"}, set()))


class TestPreferenceSequence:
    def test_rejects_wrong_entry_count(self, alternatives):
        with pytest.raises(ValueError, match="expected 5 entries"):
            PreferenceSequence(alternatives, ({1}, {2}, {3}, {4}))

    def test_rejects_non_contiguous_entry(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="not contiguous"):
            PreferenceSequence(objects, ({1, 3}, {1, 3}, {2}))

    def test_rejects_wrong_multiplicity(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="shared by"):
            PreferenceSequence(objects, ({1, 2}, {1, 2}, {1, 2}))

    def test_rejects_overlapping_distinct_entries(self):
        objects = ObjectSet(("a", "b", "c"))
        with pytest.raises(ValueError, match="overlap|shared"):
            PreferenceSequence(objects, ({1, 2}, {2, 3}, {1, 2}))

    def test_rejects_positions_out_of_range(self):
        objects = ObjectSet(("a", "b"))
        with pytest.raises(ValueError, match="outside"):
            PreferenceSequence(objects, ({2, 3}, {2, 3}))


class TestPartitionFromLabels:
    def test_weighing_example(self, john):
        assert [sorted(c) for c in john.classes] == [
            ["egg1"],
            ["egg2", "egg3"],
            ["egg4", "egg5"],
        ]

    def test_single_label_gives_one_class(self):
        p = partition_from_labels({f"o{i}": "same" for i in range(5)})
        assert p.class_sizes == (5,)

    def test_distinct_labels_give_singletons(self):
        p = partition_from_labels({"a": 1, "b": 2, "c": 3})
        assert p.class_sizes == (1, 1, 1)

    def test_rejects_single_object(self):
        with pytest.raises(ValueError, match="at least 2"):
            partition_from_labels({"a": 1})


class TestUncertainty:
    def test_weighing_example(self, john):
        assert uncertainty(john) == 9

    def test_extremes(self):
        singletons = partition_from_labels({f"o{i}": i for i in range(5)})
        lumped = partition_from_labels({f"o{i}": 0 for i in range(5)})
        assert uncertainty(singletons) == 5
        assert uncertainty(lumped) == 25


class TestPreferenceSequenceConstruction:
    def test_four_object_example(self):
        objects = ObjectSet(("x1", "x2", "x3", "x4"))
        order = WeakOrder(objects, ({"x1"}, {"x2", "x3"}, {"x4"}))
        ps = preference_sequence(order)
        assert ps.entries == (
            frozenset({1}),
            frozenset({2, 3}),
            frozenset({2, 3}),
            frozenset({4}),
        )
        assert sequence_cardinality(ps) == 6

    def test_expert2_example(self, expert2):
        ps = preference_sequence(expert2)
        assert ps.entries == (
            frozenset({1}),
            frozenset({2, 3, 4}),
            frozenset({2, 3, 4}),
            frozenset({2, 3, 4}),
            frozenset({5}),
        )
        assert sequence_cardinality(ps) == 11

    def test_total_indifference(self, alternatives):
        order = WeakOrder(alternatives, (set(alternatives.members),))
        ps = preference_sequence(order)
        assert all(entry == frozenset(range(1, 6)) for entry in ps.entries)
        assert sequence_cardinality(ps) == 25

    def test_strict_order(self, alternatives):
        order = WeakOrder(alternatives, tuple({m} for m in alternatives))
        assert sequence_cardinality(preference_sequence(order)) == 5

    def test_positions_of(self, expert1):
        ps = preference_sequence(expert1)
        assert ps.positions_of("x3") == {2, 3}


class TestTiePartition:
    def test_tiers_become_classes(self):
        objects = ObjectSet(("x1", "x2", "x3", "x4"))
        order = WeakOrder(objects, ({"x1"}, {"x2", "x3"}, {"x4"}))
        assert tie_partition(order).class_sizes == (1, 2, 1)

    def test_single_tier(self, alternatives):
        order = WeakOrder(alternatives, (set(alternatives.members),))
        assert tie_partition(order).class_sizes == (5,)

    def test_cardinality_paths_agree(self, expert1):
        assert uncertainty(tie_partition(expert1)) == sequence_cardinality(
            preference_sequence(expert1)
        ) == 9


class TestIsRefinement:
    def test_singletons_refine_everything(self):
        base = ObjectSet(("a", "b", "c"))
        singletons = Partition(base, ({"a"}, {"b"}, {"c"}))
        lumped = Partition(base, ({"a", "b", "c"},))
        assert is_refinement(singletons, lumped)
        assert is_refinement(singletons, singletons)

    def test_crossing_classes_do_not_refine(self):
        base = ObjectSet(("a", "b", "c"))
        p = Partition(base, ({"a", "b"}, {"c"}))
        q = Partition(base, ({"a"}, {"b", "c"}))
        assert not is_refinement(p, q)
        assert not is_refinement(q, p)

    def test_weighing_example_refines(self, john, jack):
        assert is_refinement(jack, john)
        assert not is_refinement(john, jack)

    def test_rejects_mismatched_object_sets(self, john, cassie):
        with pytest.raises(InputError, match="different object sets"):
            is_refinement(john, cassie)
