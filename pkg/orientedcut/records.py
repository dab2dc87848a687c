"""Sampled-prefix record files.

A record is a header line naming the kind and its declared data, followed by
"<index> <value>" lines in increasing index order.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .almost import AlmostNatural, AlmostRational
from .errors import ConstructionError
from .executor import Sampled
from .oriented import OrientedReal
from .rational import UnionValues, parse_rational, render_rational, top_value

ORIENTED = "oriented-real"
NATURAL = "almost-natural"
RATIONAL = "almost-rational"
VERSION = "v1"
# larger value sets are written as their bounds
LISTED_VALUES_LIMIT = 64


@dataclass
class Record:
    kind: str
    params: Dict[str, str]
    entries: List[Tuple[int, object]]

    @property
    def values(self):
        return [value for _, value in self.entries]


def header(value: Sampled) -> str:
    if isinstance(value, OrientedReal):
        return f"{ORIENTED} {VERSION} bound={render_rational(value.strict_bound)}"
    if isinstance(value, AlmostNatural):
        return f"{NATURAL} {VERSION} cap={value.cap}"
    if isinstance(value, AlmostRational):
        return f"{RATIONAL} {VERSION} {_value_set(value.values)}"
    raise ConstructionError(f"no record format for {type(value).__name__}")


def _size_at_most(values):
    if isinstance(values, UnionValues):
        return sum(_size_at_most(part) for part in values.parts)
    return len(values)


def _lowest(values):
    if isinstance(values, UnionValues):
        return min(_lowest(part) for part in values.parts)
    return values[0]


def _value_set(values):
    """values=<p/q,...> for small sets, range=<lowest>:<highest> otherwise; unions are never merged."""
    if _size_at_most(values) <= LISTED_VALUES_LIMIT:
        return "values=" + ",".join(render_rational(v) for v in values)
    return f"range={render_rational(_lowest(values))}:{render_rational(top_value(values))}"


def dump_record(value: Sampled, length: int) -> str:
    """Header plus the first length samples."""
    lines = [header(value)]
    render = str if isinstance(value, AlmostNatural) else render_rational
    for index, item in enumerate(value.prefix(length)):
        lines.append(f"{index} {render(item)}")
    return "\n".join(lines) + "\n"


def write_record(path: str, value: Sampled, length: int) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dump_record(value, length))


def parse_record(text):
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ConstructionError("empty record")
    head = lines[0].split()
    if len(head) != 3 or head[0] not in (ORIENTED, NATURAL, RATIONAL) or head[1] != VERSION:
        raise ConstructionError(f"unrecognised record header {lines[0]!r}")
    key, sep, raw = head[2].partition("=")
    if not sep:
        raise ConstructionError(f"malformed header parameter {head[2]!r}")
    entries = []
    for number, line in enumerate(lines[1:], 2):
        parts = line.split()
        if len(parts) != 2 or not parts[0].isdigit():
            raise ConstructionError(f"malformed record line {number}: {line!r}")
        index = int(parts[0])
        if entries and index <= entries[-1][0]:
            raise ConstructionError(f"record indices must increase, line {number}")
        value = int(parts[1]) if head[0] == NATURAL else parse_rational(parts[1])
        entries.append((index, value))
    return Record(head[0], {key: raw}, entries)


def read_record(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_record(handle.read())
