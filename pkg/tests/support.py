"""Shared oracles and random generators for the test suite."""

from discern import ObjectSet, Partition, WeakOrder, partition_from_labels


def make_objects(n):
    return ObjectSet(tuple(f"o{i}" for i in range(1, n + 1)))


def object_sum_uncertainty(p):
    # independent oracle: walk the objects instead of squaring class sizes
    return sum(len(p.class_of(name)) for name in p.base)


def all_partitions(members):
    """Brute-force enumeration of every partition of `members`."""
    members = list(members)
    if not members:
        yield []
        return
    head, rest = members[0], members[1:]
    for sub in all_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [sub[i] + [head]] + sub[i + 1 :]
        yield [[head]] + sub


def random_partition(rng, base):
    k = rng.randint(1, base.n)
    return partition_from_labels({name: rng.randrange(k) for name in base})


def random_weak_order(rng, base):
    members = list(base)
    rng.shuffle(members)
    tiers = [[members[0]]]
    for name in members[1:]:
        if rng.random() < 0.5:
            tiers.append([name])
        else:
            tiers[-1].append(name)
    return WeakOrder(base, tuple(frozenset(t) for t in tiers))


def random_refinement_pair(rng, base):
    """(fine, coarse) with fine a strict refinement of coarse."""
    while True:
        coarse = random_partition(rng, base)
        if any(len(c) > 1 for c in coarse.classes):
            break
    while True:
        classes = []
        split_any = False
        for cls in coarse.classes:
            parts = {}
            for name in cls:
                parts.setdefault(rng.randrange(2) if len(cls) > 1 else 0, []).append(name)
            parts = [p for p in parts.values() if p]
            if len(parts) > 1:
                split_any = True
            classes.extend(parts)
        if split_any:
            fine = Partition(base, tuple(frozenset(c) for c in classes))
            return fine, coarse
