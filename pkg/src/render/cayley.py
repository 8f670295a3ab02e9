"""
Cayley tables of the unit group: construction, classification and CSV / text views.
"""

import csv
import io
from dataclasses import dataclass
from enum import IntEnum

import numpy as np
import pandas as pd

from core.arith import totient
from core.errors import DomainError
from core.unit_group import UnitGroup, build_group

CORNER = "*"
DEFAULT_MAX_ORDER = 4096


class CellTag(IntEnum):
    PLAIN = 0
    IDENTITY = 1
    CO_OPPOSITE = 2


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """phi(m) x phi(m) products of canonical representatives"""
    group: UnitGroup
    cells: np.ndarray
    tags: np.ndarray

    @property
    def order(self) -> int:
        return len(self.group)

    def value(self, a: int, b: int) -> int:
        """Product cell for the rows and columns labelled a and b"""
        return int(self.cells[self.group.index(a), self.group.index(b)])

    def to_frame(self) -> pd.DataFrame:
        labels = list(self.group.elements)
        return pd.DataFrame(self.cells, index=labels, columns=labels)

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return (self.group == other.group and np.array_equal(self.cells, other.cells)
                and np.array_equal(self.tags, other.tags))


def classify(cells: np.ndarray, modulus: int) -> np.ndarray:
    """Tag identity cells and co-opposite (m - 1) cells; identity wins for m = 2"""
    tags = np.full(cells.shape, CellTag.PLAIN, dtype=np.int8)
    tags[cells == modulus - 1] = CellTag.CO_OPPOSITE
    tags[cells == 1] = CellTag.IDENTITY
    return tags


def check_table_order(m: int, max_order: int = DEFAULT_MAX_ORDER) -> int:
    """phi(m) when a table modulo m fits within max_order, checked before any group is built"""
    if m < 2:
        raise DomainError(f"the unit group needs m >= 2, got {m}")
    # phi(m) >= sqrt(m / 2), so moduli past this bound are rejected without factoring
    if m > 2 * max_order ** 2:
        raise DomainError(f"Cayley table modulo {m} exceeds the order limit of {max_order}")
    order = totient(m)
    if order > max_order:
        raise DomainError(f"Cayley table of order {order} exceeds the limit of {max_order}")
    return order


def build_table(group: UnitGroup, max_order: int = DEFAULT_MAX_ORDER) -> CayleyTable:
    """Full product grid of the group, rows and columns in ascending rep order"""
    if len(group) > max_order:
        raise DomainError(
            f"Cayley table of order {len(group)} exceeds the limit of {max_order}"
        )
    reps = np.array(group.elements, dtype=np.int64)
    cells = np.outer(reps, reps) % group.modulus
    cells.flags.writeable = False
    tags = classify(cells, group.modulus)
    tags.flags.writeable = False
    return CayleyTable(group, cells, tags)


def export_table_csv(table: CayleyTable) -> str:
    """Header row and column of representatives, comma separated, LF endings"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([CORNER, *table.group.elements])
    for rep, row in zip(table.group.elements, table.cells.tolist()):
        writer.writerow([rep, *row])
    return buffer.getvalue()


def _strict_lines(text: str):
    if not text.endswith("\n") or "\r" in text:
        raise DomainError("Cayley CSV must use LF line endings and end with a newline")
    lines = text[:-1].split("\n")
    width = len(lines[0].split(","))
    for number, line in enumerate(lines, start=1):
        fields = line.split(",")
        if len(fields) != width or "" in fields:
            raise DomainError(f"Cayley CSV line {number} is ragged or has an empty field")
    if lines[0].split(",")[0] != CORNER:
        raise DomainError(f"Cayley CSV must start with the corner cell {CORNER!r}")
    return lines


def parse_table_csv(text: str) -> CayleyTable:
    """Strict inverse of export_table_csv; the products are re-checked"""
    _strict_lines(text)
    try:
        frame = pd.read_csv(io.StringIO(text), index_col=0, dtype=str)
        labels = [int(label) for label in frame.columns]
        index = [int(label) for label in frame.index]
        cells = frame.to_numpy().astype(np.int64)
    except ValueError as e:
        raise DomainError(f"Cayley CSV holds a non-integer entry: {e}") from e

    if labels != index or not labels:
        raise DomainError("Cayley CSV header row and column disagree")
    group = build_group(labels[-1] + 1)
    if list(group.elements) != labels:
        raise DomainError(f"header {labels} is not the unit group modulo {labels[-1] + 1}")

    table = build_table(group, max_order=len(labels))
    if not np.array_equal(table.cells, cells):
        raise DomainError("Cayley CSV cells do not match the group products")
    return table


def format_table_text(table: CayleyTable) -> str:
    """Aligned grid for terminal display"""
    return table.to_frame().to_string() + "\n"


def export_line_csv(points) -> str:
    """x,y,coprime,prime_pair rows for the points of x + y = 2m"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["x", "y", "coprime", "prime_pair"])
    for point in points:
        writer.writerow([point.x, point.y, int(point.coprime), int(point.prime_pair)])
    return buffer.getvalue()
