"""
Plain-text PPM (P3) rasters of Cayley tables and orbit masks.

Pixels are assembled as numpy RGB arrays, scaled by whole cells and serialized
row by row, so the output bytes depend only on the table and the cell size.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.errors import DomainError
from core.goldbach import goldbach_pairs
from core.unit_group import UnitClass, cyclic_subgroup
from render.cayley import CayleyTable, CellTag

IDENTITY_RGB = (0, 170, 0)
CO_OPPOSITE_RGB = (255, 140, 0)
HIGHLIGHT_RGB = (0, 0, 0)
BACKGROUND_RGB = (255, 255, 255)
ACCENT_RGB = (200, 0, 120)

DEFAULT_MAX_SIDE = 16384


@dataclass(frozen=True, eq=False)
class OrbitMask:
    """Cells of a Cayley table whose value lies in the orbit of a generator"""
    table: CayleyTable
    generator: UnitClass
    grid: np.ndarray
    accent: Optional[np.ndarray] = None

    @property
    def group(self):
        return self.table.group

    def highlighted(self) -> int:
        return int(np.count_nonzero(self.grid))


def build_orbit_mask(table: CayleyTable, generator: UnitClass,
                     accent: Optional[np.ndarray] = None) -> OrbitMask:
    if generator.modulus != table.group.modulus:
        raise DomainError(
            f"generator modulo {generator.modulus} does not belong to the table modulo {table.group.modulus}"
        )
    members = cyclic_subgroup(generator).reps()
    grid = np.isin(table.cells, members)
    grid.flags.writeable = False
    return OrbitMask(table, generator, grid, accent)


def goldbach_accent(table: CayleyTable) -> np.ndarray:
    """Cells holding a member of a prime pair summing to the (even) modulus"""
    modulus = table.group.modulus
    if modulus % 2 or modulus < 4:
        raise DomainError(f"prime pair accents need an even modulus >= 4, got {modulus}")
    members = sorted({p for pair in goldbach_pairs(modulus).prime_pairs for p in pair})
    return np.isin(table.cells, members)


def _check_side(order: int, cell_px: int, max_side: int) -> int:
    if cell_px < 1:
        raise DomainError(f"cell size must be at least one pixel, got {cell_px}")
    side = order * cell_px
    if side > max_side:
        raise DomainError(f"image side {side} px exceeds the limit of {max_side} px")
    return side


def _scale(rgb: np.ndarray, cell_px: int) -> np.ndarray:
    return np.repeat(np.repeat(rgb, cell_px, axis=0), cell_px, axis=1)


def encode_ppm(rgb: np.ndarray) -> bytes:
    """P3 header, then one LF-terminated line of space separated values per row"""
    height, width, _ = rgb.shape
    lines = [f"P3\n{width} {height}\n255\n"]
    for row in rgb.reshape(height, width * 3).tolist():
        lines.append(" ".join(map(str, row)) + "\n")
    return "".join(lines).encode("ascii")


def table_rgb(table: CayleyTable) -> np.ndarray:
    """One pixel per cell: identity and co-opposite colours, grey ramp elsewhere"""
    modulus = table.group.modulus
    grey = (255 - (255 * table.cells) // modulus).astype(np.uint8)
    rgb = np.repeat(grey[:, :, np.newaxis], 3, axis=2)
    rgb[table.tags == CellTag.IDENTITY] = IDENTITY_RGB
    rgb[table.tags == CellTag.CO_OPPOSITE] = CO_OPPOSITE_RGB
    return rgb


def mask_rgb(mask: OrbitMask) -> np.ndarray:
    rgb = np.empty(mask.grid.shape + (3,), dtype=np.uint8)
    rgb[:] = BACKGROUND_RGB
    if mask.accent is not None:
        rgb[mask.accent & ~mask.grid] = ACCENT_RGB
    rgb[mask.grid] = HIGHLIGHT_RGB
    return rgb


def render_table_ppm(table: CayleyTable, cell_px: int, max_side: int = DEFAULT_MAX_SIDE) -> bytes:
    _check_side(table.order, cell_px, max_side)
    return encode_ppm(_scale(table_rgb(table), cell_px))


def render_orbit_mask(mask: OrbitMask, cell_px: int, max_side: int = DEFAULT_MAX_SIDE) -> bytes:
    _check_side(mask.table.order, cell_px, max_side)
    return encode_ppm(_scale(mask_rgb(mask), cell_px))
