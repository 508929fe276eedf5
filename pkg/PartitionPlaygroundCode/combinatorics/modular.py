"""
k-modular diagrams

Each part is written as quotient * k + residue with 0 <= residue < k. The
text renderer follows the classical display: the residue sits on top of a
column when nonzero, otherwise the topmost k-cell takes its place.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .partition_core import Partition, make_partition
from ..utils.helpers import require_positive


class ModularColumn(NamedTuple):
    quotient: int
    residue: int


@dataclass(frozen=True)
class KModularDiagram:
    k: int
    columns: Tuple[ModularColumn, ...] = ()

    def partition(self) -> Partition:
        """Reassemble the partition (quotient * k + residue per column)."""
        return make_partition(c.quotient * self.k + c.residue for c in self.columns)


def k_modular_diagram(p: Partition, k: int) -> KModularDiagram:
    """
    Write every part as quotient * k + residue.

    Args:
        p: Partition to display
        k: Modulus, at least 1

    Returns:
        KModularDiagram with one column per part, in part order
    """
    require_positive("k", k)
    columns = tuple(ModularColumn(*divmod(part, k)) for part in p.parts)
    return KModularDiagram(k=k, columns=columns)


def _column_cells(column: ModularColumn, k: int) -> List[str]:
    if column.residue:
        return [str(column.residue)] + [str(k)] * column.quotient
    # residue 0: the top k-cell is promoted into the residue row
    return [str(k)] * column.quotient


def render_text(d: KModularDiagram) -> str:
    """
    Render the diagram as a grid, one column per part.

    Cells are right-aligned to the widest cell and separated by a single
    space; trailing blanks are stripped from every row.
    """
    if not d.columns:
        return ""

    cells = [_column_cells(column, d.k) for column in d.columns]
    height = max(len(column) for column in cells)
    width = max(len(cell) for column in cells for cell in column)

    rows = []
    for r in range(height):
        row = [column[r] if r < len(column) else "" for column in cells]
        rows.append(" ".join(cell.rjust(width) for cell in row).rstrip())
    return "\n".join(rows)
