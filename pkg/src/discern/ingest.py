"""Parsing of ranking expressions and grouping of measurement tables.

Ranking DSL, one expression per rater::

    ranking := group ('>' group)*
    group   := id ('~' id)*

'>' separates strictly preferred groups (left is better), '~' ties objects
within a group, and whitespace around tokens is ignored.  Ids may not contain
whitespace, '>', '~', or ','.

Measurement tables are delimiter-separated text: a header row
``object,<rater1>,<rater2>,...`` followed by one row per object with decimal
values.  Equal (or near-equal, under a tolerance) values in a rater's column
form that rater's equivalence classes.
"""

from dataclasses import dataclass
from pathlib import Path

from .errors import InputError, RankingParseError
from .model import ObjectSet, Partition, WeakOrder, partition_from_labels

# Relative slack applied to tolerance comparisons so that differences of
# short decimals (which are not exactly representable as doubles) still
# compare the way the printed numbers do.
_TOLERANCE_SLACK = 1e-9

_STRICT = "strict"
_TIE = "tie"
_NAME = "name"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split a ranking expression into (kind, value, 1-based column) tokens."""
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == ">":
            tokens.append((_STRICT, ch, i + 1))
            i += 1
        elif ch == "~":
            tokens.append((_TIE, ch, i + 1))
            i += 1
        elif ch == ",":
            raise RankingParseError("unexpected ','", position=i + 1)
        else:
            start = i
            while i < len(text) and not text[i].isspace() and text[i] not in ">~,":
                i += 1
            tokens.append((_NAME, text[start:i], start + 1))
    return tokens


def _parse_groups(text: str) -> list[list[tuple[str, int]]]:
    tokens = _tokenize(text)
    if not tokens:
        raise RankingParseError("empty ranking", position=1)
    groups: list[list[tuple[str, int]]] = [[]]
    expect_name = True
    for kind, value, position in tokens:
        if expect_name:
            if kind != _NAME:
                raise RankingParseError(
                    f"expected an object name before {value!r}", position=position
                )
            groups[-1].append((value, position))
            expect_name = False
        elif kind == _NAME:
            raise RankingParseError(
                f"expected '>' or '~' before {value!r}", position=position
            )
        elif kind == _TIE:
            expect_name = True
        else:
            groups.append([])
            expect_name = True
    if expect_name:
        raise RankingParseError("ranking ends with a dangling separator",
                                position=len(text))
    return groups


def ranking_object_names(text: str) -> tuple[str, ...]:
    """Object names appearing in a ranking expression, in reading order,
    without validating them against any object set."""
    seen: dict[str, None] = {}
    for group in _parse_groups(text):
        for name, _ in group:
            seen.setdefault(name)
    return tuple(seen)


def parse_ranking(text: str, objects: ObjectSet) -> WeakOrder:
    """Parse a ranking expression that must mention every member of
    `objects` exactly once."""
    groups = _parse_groups(text)
    seen: set[str] = set()
    for group in groups:
        for name, position in group:
            if name not in objects:
                raise RankingParseError(f"unknown object {name!r}", position=position)
            if name in seen:
                raise RankingParseError(f"duplicate object {name!r}", position=position)
            seen.add(name)
    missing = [m for m in objects if m not in seen]
    if missing:
        raise RankingParseError(f"ranking is missing objects: {', '.join(missing)}")
    tiers = tuple(frozenset(name for name, _ in group) for group in groups)
    return WeakOrder(objects, tiers)


def render_ranking(order: WeakOrder) -> str:
    """Canonical text for a weak order; parsing it again gives an equal
    order."""
    return " > ".join(
        " ~ ".join(sorted(tier, key=order.base.position)) for tier in order.tiers
    )


@dataclass(frozen=True)
class RankingExpression:
    """A ranking expression together with its parsed weak order."""

    source_text: str
    parsed: WeakOrder

    @classmethod
    def parse(cls, text: str, objects: ObjectSet) -> "RankingExpression":
        return cls(source_text=text, parsed=parse_ranking(text, objects))

    @property
    def canonical_text(self) -> str:
        return render_ranking(self.parsed)


@dataclass(frozen=True)
class MeasurementTable:
    """Rectangular table of per-rater numeric readings, one row per object."""

    objects: tuple[str, ...]
    raters: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    units: str | None = None

    def __post_init__(self) -> None:
        objects = tuple(self.objects)
        raters = tuple(self.raters)
        rows = tuple(tuple(float(v) for v in row) for row in self.rows)
        if not raters:
            raise InputError("table has no rater columns")
        if len(set(raters)) != len(raters):
            raise InputError("duplicate rater column")
        if len(set(objects)) != len(objects):
            raise InputError("duplicate object row")
        if len(rows) != len(objects):
            raise InputError("one row per object required")
        if any(len(row) != len(raters) for row in rows):
            raise InputError("table is not rectangular")
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "raters", raters)
        object.__setattr__(self, "rows", rows)

    def column(self, rater: str) -> tuple[float, ...]:
        """All readings of one rater, in object order."""
        if rater not in self.raters:
            raise InputError(
                f"unknown rater {rater!r}; available: {', '.join(self.raters)}"
            )
        j = self.raters.index(rater)
        return tuple(row[j] for row in self.rows)


def group_measurements(table: MeasurementTable, rater: str,
                       tolerance: float = 0.0) -> Partition:
    """Equivalence classes implied by one rater's column.

    With tolerance 0, objects with exactly equal readings share a class.
    With a positive tolerance, readings are sorted and chained into one class
    wherever consecutive values differ by at most the tolerance; chaining
    keeps the result a partition even though near-equality is not transitive.
    """
    if tolerance < 0:
        raise ValueError(f"tolerance must be non-negative, got {tolerance}")
    values = table.column(rater)
    base = ObjectSet(table.objects)
    if tolerance == 0:
        return partition_from_labels(dict(zip(table.objects, values)))
    order = sorted(range(base.n), key=lambda i: (values[i], i))
    classes: list[list[str]] = [[table.objects[order[0]]]]
    for prev, cur in zip(order, order[1:]):
        gap = values[cur] - values[prev]
        slack = _TOLERANCE_SLACK * max(tolerance, abs(values[cur]), abs(values[prev]))
        if gap <= tolerance + slack:
            classes[-1].append(table.objects[cur])
        else:
            classes.append([table.objects[cur]])
    return Partition(base, tuple(frozenset(c) for c in classes))


def load_rankings(path: str | Path) -> list[tuple[str, WeakOrder]]:
    """Read a rankings file: one `rater_id: <ranking>` per line, '#' starts
    a comment line.  All raters must rank the same objects; the first rater's
    reading order fixes the object order."""
    path = Path(path)
    records: list[tuple[str, WeakOrder]] = []
    objects: ObjectSet | None = None
    seen_raters: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            rater, sep, expression = line.partition(":")
            rater = rater.strip()
            if not sep or not rater or not expression.strip():
                raise InputError(f"{path}:{lineno}: expected 'rater_id: <ranking>'")
            if rater in seen_raters:
                raise InputError(f"{path}:{lineno}: duplicate rater {rater!r}")
            seen_raters.add(rater)
            try:
                if objects is None:
                    names = ranking_object_names(expression)
                    if len(names) < 2:
                        raise InputError("a ranking needs at least 2 objects")
                    objects = ObjectSet(names)
                order = parse_ranking(expression, objects)
            except (RankingParseError, InputError, ValueError) as exc:
                raise InputError(f"{path}:{lineno}: {exc}") from exc
            records.append((rater, order))
    if not records:
        raise InputError(f"{path}: no records")
    return records


def load_measurement_table(path: str | Path) -> MeasurementTable:
    """Read a measurement table file (see the module docstring for the
    format)."""
    path = Path(path)
    raters: tuple[str, ...] | None = None
    objects: list[str] = []
    rows: list[tuple[float, ...]] = []
    seen_objects: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line:
                continue
            cells = [cell.strip() for cell in line.split(",")]
            if raters is None:
                if len(cells) < 2:
                    raise InputError(f"{path}:{lineno}: header needs at least one rater column")
                header = tuple(cells[1:])
                if any(not name for name in header):
                    raise InputError(f"{path}:{lineno}: empty rater name in header")
                if len(set(header)) != len(header):
                    raise InputError(f"{path}:{lineno}: duplicate rater in header")
                raters = header
                continue
            if len(cells) != len(raters) + 1:
                raise InputError(
                    f"{path}:{lineno}: expected {len(raters) + 1} fields, got {len(cells)}"
                )
            name = cells[0]
            if not name:
                raise InputError(f"{path}:{lineno}: empty object name")
            if name in seen_objects:
                raise InputError(f"{path}:{lineno}: duplicate object {name!r}")
            seen_objects.add(name)
            values = []
            for rater, cell in zip(raters, cells[1:]):
                try:
                    values.append(float(cell))
                except ValueError:
                    raise InputError(
                        f"{path}:{lineno}: column {rater!r}: not a number: {cell!r}"
                    ) from None
            objects.append(name)
            rows.append(tuple(values))
    if raters is None or not rows:
        raise InputError(f"{path}: no records")
    if len(objects) < 2:
        raise InputError(f"{path}: needs at least 2 objects, got {len(objects)}")
    return MeasurementTable(tuple(objects), raters, tuple(rows))


RANKINGS = "rankings"
MEASUREMENTS = "measurements"


def load_dataset(path: str | Path, kind: str,
                 tolerance: float = 0.0) -> list[tuple[str, Partition | WeakOrder]]:
    """Load per-rater sources from a file.

    kind 'rankings' yields (rater_id, WeakOrder) pairs; kind 'measurements'
    groups every rater column of a measurement table into a Partition under
    the given tolerance.
    """
    if kind == RANKINGS:
        return list(load_rankings(path))
    if kind == MEASUREMENTS:
        table = load_measurement_table(path)
        return [(r, group_measurements(table, r, tolerance)) for r in table.raters]
    raise ValueError(f"unknown dataset kind {kind!r}")
