"""
Tableaux Module
Fillings (tabloids), standard tableaux, permutations and their action,
enumeration in lexicographic reading-word order, canonical orders and hook products.
"""

import bisect
import logging
from dataclasses import dataclass
from functools import cached_property
from math import factorial, prod
from typing import Dict, Iterable, List, Sequence, Tuple

from shape_core import Cell, Shape, neighbor
from utils import ENUMERATION_CAP, JdtError, check_cap, safe_divide


logger = logging.getLogger(__name__)

# Labelling rules accepted by canonical_order
ORDER_KINDS = ("nps_column", "rowwise_bottomup_rl")


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation: word[i-1] = pi(i)."""

    word: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise JdtError("ERR_NOT_PERMUTATION", f"{self.word} is not a permutation of 1..{len(self.word)}")

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.word)


def permutation_from_word(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(int(v) for v in word))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p.word, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation i -> p(q(i))."""
    if len(p) != len(q):
        raise JdtError("ERR_SHAPE_MISMATCH", "permutations of different sizes")
    return Permutation(tuple(p(q(i)) for i in range(1, len(q) + 1)))


@dataclass(frozen=True)
class Filling:
    """
    A bijective filling of a shape's cells with 1..n.

    ``entries`` lists the entries of the member cells in row-major order, so
    it is also the reading word.
    """

    shape: Shape
    entries: Tuple[int, ...]

    def __post_init__(self):
        n = self.shape.n
        if len(self.entries) != n or sorted(self.entries) != list(range(1, n + 1)):
            raise JdtError(
                "ERR_NOT_PERMUTATION",
                f"entries {self.entries} are not a bijection onto 1..{n} for shape {self.shape}"
            )

    @classmethod
    def from_rows(cls, shape: Shape, rows: Sequence[Sequence[int]]) -> "Filling":
        """Build a filling from the member entries of each row, top to bottom."""
        if len(rows) != shape.rows:
            raise JdtError("ERR_SHAPE_MISMATCH", f"{len(rows)} rows given for a shape with {shape.rows}")
        entries: List[int] = []
        for i, row in enumerate(rows, start=1):
            first, last = shape.row_span(i)
            if len(row) != max(0, last - first + 1):
                raise JdtError("ERR_SHAPE_MISMATCH", f"row {i} has {len(row)} entries, shape needs {last - first + 1}")
            entries.extend(int(v) for v in row)
        return cls(shape, tuple(entries))

    def to_rows(self) -> List[List[int]]:
        rows: List[List[int]] = [[] for _ in range(self.shape.rows)]
        for (i, _), v in zip(self.shape.cells, self.entries):
            rows[i - 1].append(v)
        return rows

    @cached_property
    def positions(self) -> Dict[int, Cell]:
        """Entry -> cell holding it."""
        return {v: cell for cell, v in zip(self.shape.cells, self.entries)}

    def entry_at(self, cell: Cell) -> int:
        try:
            return self.entries[self.shape.index[cell]]
        except KeyError:
            raise JdtError("ERR_CELL_OUTSIDE", f"{cell} is not a cell of {self.shape}") from None

    def cell_of(self, entry: int) -> Cell:
        try:
            return self.positions[entry]
        except KeyError:
            raise JdtError("ERR_NOT_FOUND", f"entry {entry} does not occur") from None

    @property
    def n(self) -> int:
        return self.shape.n


def is_standard(f: Filling) -> bool:
    """Rows increase left to right and columns top to bottom (member cells only)."""
    shape = f.shape
    for cell in shape.cells:
        e = f.entry_at(cell)
        for direction in ("right", "below"):
            other = neighbor(shape, cell, direction)
            if other is not None and f.entry_at(other) < e:
                return False
    return True


def require_standard(s: Filling, role: str = "order") -> None:
    if not is_standard(s):
        raise JdtError("ERR_NOT_STANDARD", f"{role} filling {s.entries} is not standard")


def enumerate_standard(shape: Shape, force: bool = False) -> List[Filling]:
    """
    All standard fillings of a shape, sorted by reading word.

    Entries 1..n are placed one at a time on cells whose left and upper member
    neighbors already hold smaller entries, so every result is standard.

    Args:
        shape: Any valid shape
        force: Allow n above ENUMERATION_CAP

    Returns:
        List of standard fillings in lexicographic reading-word order

    Raises:
        JdtError: ERR_TOO_LARGE
    """
    n = shape.n
    check_cap(n, ENUMERATION_CAP, "enumerate_standard", force)
    cells = shape.cells
    index = shape.index
    preds: List[List[int]] = []
    for cell in cells:
        preds.append([
            index[other]
            for other in (neighbor(shape, cell, "left"), neighbor(shape, cell, "above"))
            if other is not None
        ])

    found: List[Tuple[int, ...]] = []
    entries = [0] * n

    def place(value: int) -> None:
        if value > n:
            found.append(tuple(entries))
            return
        for k in range(n):
            if entries[k] == 0 and all(entries[p] for p in preds[k]):
                entries[k] = value
                place(value + 1)
                entries[k] = 0

    place(1)
    found.sort()
    logger.debug("enumerated %d standard fillings of %s", len(found), shape)
    return [Filling(shape, word) for word in found]


def standard_count(shape: Shape, force: bool = False) -> int:
    """Number of standard fillings; uses n!/hook product for unshifted straight shapes."""
    if not shape.shifted and shape.is_straight:
        count = safe_divide(factorial(shape.n), hook_product(shape))
        if count is not None:
            return count
    return len(enumerate_standard(shape, force=force))


def reading_word(f: Filling) -> Permutation:
    """Entries read row by row, top to bottom, left to right within a row."""
    return Permutation(f.entries)


def lex_index(f: Filling, universe: Sequence[Filling]) -> int:
    """
    0-based rank of a standard filling in a lex-sorted universe.

    Raises:
        JdtError: ERR_NOT_FOUND
    """
    words = [g.entries for g in universe]
    k = bisect.bisect_left(words, f.entries)
    if k == len(words) or words[k] != f.entries:
        raise JdtError("ERR_NOT_FOUND", f"{f.entries} is not in the universe")
    return k


def apply_permutation(s: Filling, p: Permutation) -> Filling:
    """S_pi: every entry e becomes pi(e)."""
    if len(p) != s.n:
        raise JdtError("ERR_SHAPE_MISMATCH", f"permutation of {len(p)} acting on a filling of {s.n}")
    return Filling(s.shape, tuple(p(e) for e in s.entries))


def canonical_order(shape: Shape, kind: str) -> Filling:
    """
    Standard filling defining a canonical processing order.

    nps_column labels cells column by column, left to right, top to bottom
    within a column. rowwise_bottomup_rl labels cells 1..n in row-major order,
    so modified jeu de taquin (largest label first) runs from the bottom row
    upwards and right to left within a row.

    Raises:
        JdtError: ERR_UNSUPPORTED, ERR_NOT_STANDARD
    """
    if kind not in ORDER_KINDS:
        raise JdtError("ERR_UNSUPPORTED", f"unknown order {kind!r}; expected one of {ORDER_KINDS}")
    if kind == "nps_column":
        if shape.shifted:
            raise JdtError("ERR_UNSUPPORTED", "the column order is defined for unshifted shapes only")
        ordered = sorted(shape.cells, key=lambda c: (c[1], c[0]))
    else:
        ordered = list(shape.cells)

    label = {cell: k for k, cell in enumerate(ordered, start=1)}
    f = Filling(shape, tuple(label[c] for c in shape.cells))
    if not is_standard(f):
        raise JdtError("ERR_NOT_STANDARD", f"{kind} labelling of {shape} is not standard")
    return f


def hook_lengths(shape: Shape) -> Dict[Cell, int]:
    if shape.shifted or not shape.is_straight:
        raise JdtError("ERR_UNSUPPORTED", f"hook lengths need an unshifted straight shape, got {shape}")
    outer = shape.outer
    hooks = {}
    for i, j in shape.cells:
        arm = outer[i - 1] - j
        leg = sum(1 for mu in outer[i:] if mu >= j)
        hooks[(i, j)] = arm + leg + 1
    return hooks


def hook_product(shape: Shape) -> int:
    """Product of all hook lengths of an unshifted straight shape."""
    return prod(hook_lengths(shape).values())


def random_permutation(n: int, rng) -> Permutation:
    return Permutation(tuple(int(v) for v in rng.permutation(n) + 1))


if __name__ == "__main__":
    from shape_core import make_shape

    shape = make_shape((3, 3, 2))
    tableaux = enumerate_standard(shape)
    print(f"{len(tableaux)} standard tableaux of shape {shape}")
    print(f"hook product: {hook_product(shape)}")
    print(f"column order: {canonical_order(shape, 'nps_column').to_rows()}")
