"""
Shape Core Module
Unshifted/shifted, straight/skew shapes in absolute cell coordinates, masks,
and the four neighbor relations used by every jeu de taquin move.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from utils import JdtError


# A cell is (row, col), both 1-based; col is absolute (shifted rows are indented)
Cell = Tuple[int, int]

# Direction name -> (row offset, column offset)
DIRECTIONS: Dict[str, Cell] = {
    "right": (0, 1),
    "below": (1, 0),
    "left": (0, -1),
    "above": (-1, 0),
}

# Each direction and the one that undoes it
OPPOSITE = {
    "right": "left",
    "left": "right",
    "below": "above",
    "above": "below",
}


@dataclass(frozen=True)
class Shape:
    """
    A (shifted) skew shape outer/inner.

    ``inner`` is zero-padded to the length of ``outer``. Build instances with
    make_shape(), which validates the partitions.
    """

    outer: Tuple[int, ...]
    inner: Tuple[int, ...]
    shifted: bool = False

    @property
    def rows(self) -> int:
        return len(self.outer)

    @property
    def n(self) -> int:
        return sum(m - l for m, l in zip(self.outer, self.inner))

    @property
    def is_straight(self) -> bool:
        return not any(self.inner)

    def row_span(self, i: int) -> Tuple[int, int]:
        """First and last absolute column of row i (last < first for an empty row)."""
        mu, lam = self.outer[i - 1], self.inner[i - 1]
        if self.shifted:
            return i + lam, i + mu - 1
        return lam + 1, mu

    def __contains__(self, cell: Cell) -> bool:
        i, j = cell
        if not 1 <= i <= self.rows:
            return False
        first, last = self.row_span(i)
        return first <= j <= last

    @cached_property
    def cells(self) -> Tuple[Cell, ...]:
        return tuple(
            (i, j)
            for i in range(1, self.rows + 1)
            for j in range(self.row_span(i)[0], self.row_span(i)[1] + 1)
        )

    @cached_property
    def index(self) -> Dict[Cell, int]:
        """Row-major position of every member cell."""
        return {cell: k for k, cell in enumerate(self.cells)}

    @cached_property
    def width(self) -> int:
        """Number of columns of the bounding grid."""
        return max((self.row_span(i)[1] for i in range(1, self.rows + 1)), default=0)

    def __str__(self) -> str:
        return format_shape_spec(self)


@dataclass(frozen=True)
class Mask:
    """A subset of a shape's cells; neighbors outside it count as absent."""

    shape: Shape
    included: FrozenSet[Cell]

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.included

    def __len__(self) -> int:
        return len(self.included)


def _is_weakly_decreasing(parts: Sequence[int]) -> bool:
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def _is_strict(parts: Sequence[int]) -> bool:
    positive = [p for p in parts if p > 0]
    return all(positive[k] > positive[k + 1] for k in range(len(positive) - 1))


def make_shape(outer: Iterable[int], inner: Iterable[int] = (), shifted: bool = False) -> Shape:
    """
    Validate two partitions and build a Shape.

    Args:
        outer: Outer partition mu (trailing zeros allowed)
        inner: Inner partition lambda, shorter lists are zero-padded
        shifted: Build the shifted diagram (row i indented i-1 cells)

    Returns:
        Validated Shape

    Raises:
        JdtError: REJECT_NOT_PARTITION, REJECT_NOT_STRICT, REJECT_INNER_EXCEEDS
    """
    outer = tuple(int(p) for p in outer)
    inner = tuple(int(p) for p in inner)

    for name, parts in (("outer", outer), ("inner", inner)):
        if any(p < 0 for p in parts):
            raise JdtError("REJECT_NOT_PARTITION", f"{name} {parts} has a negative part")
        if not _is_weakly_decreasing(parts):
            raise JdtError("REJECT_NOT_PARTITION", f"{name} {parts} is not weakly decreasing")
        if shifted and not _is_strict(parts):
            raise JdtError("REJECT_NOT_STRICT", f"{name} {parts} repeats a positive part")

    if len(inner) > len(outer):
        if any(inner[len(outer):]):
            raise JdtError("REJECT_INNER_EXCEEDS", f"inner {inner} has more rows than outer {outer}")
        inner = inner[:len(outer)]
    inner = inner + (0,) * (len(outer) - len(inner))

    for i, (mu, lam) in enumerate(zip(outer, inner), start=1):
        if lam > mu:
            raise JdtError("REJECT_INNER_EXCEEDS", f"inner part {lam} exceeds outer part {mu} in row {i}")

    return Shape(outer=outer, inner=inner, shifted=shifted)


def cells(shape: Shape) -> Tuple[Cell, ...]:
    """Member cells in row-major order."""
    return shape.cells


def full_mask(shape: Shape) -> Mask:
    return Mask(shape, frozenset(shape.cells))


def restrict_mask(mask: Mask, predicate: Callable[[Cell], bool]) -> Mask:
    return Mask(mask.shape, frozenset(c for c in mask.included if predicate(c)))


def neighbor(shape: Shape, c: Cell, direction: str, mask: Optional[Mask] = None) -> Optional[Cell]:
    """
    Adjacent member cell in a direction, or None.

    Args:
        shape: The shape
        c: A member cell (and a mask cell when a mask is given)
        direction: 'right', 'below', 'left' or 'above'
        mask: Optional mask restricting which neighbors count

    Returns:
        The neighbor cell or None if it lies outside the shape/mask

    Raises:
        JdtError: ERR_CELL_OUTSIDE, ERR_NOT_IN_MASK
    """
    if c not in shape:
        raise JdtError("ERR_CELL_OUTSIDE", f"{c} is not a cell of {shape}")
    if mask is not None and c not in mask:
        raise JdtError("ERR_NOT_IN_MASK", f"{c} is not in the mask")
    dr, dc = DIRECTIONS[direction]
    target = (c[0] + dr, c[1] + dc)
    if target not in shape:
        return None
    if mask is not None and target not in mask:
        return None
    return target


def format_shape_spec(shape: Shape) -> str:
    """Canonical `OUTER[/INNER][:shifted]` text for a shape."""
    text = ",".join(str(p) for p in shape.outer)
    inner = list(shape.inner)
    while inner and inner[-1] == 0:
        inner.pop()
    if inner:
        text += "/" + ",".join(str(p) for p in inner)
    if shape.shifted:
        text += ":shifted"
    return text


if __name__ == "__main__":
    # Shapes drawn in the introduction
    for outer, inner, shifted in [
        ((4, 3, 3, 1), (), False),
        ((5, 4, 2, 1), (), True),
        ((5, 5, 4, 3, 2), (4, 4, 1), False),
        ((7, 6, 4, 2, 1), (5, 3), True),
    ]:
        shape = make_shape(outer, inner, shifted)
        print(f"{shape}: n={shape.n}, cells={list(cells(shape))}")
