"""
Jeu de Taquin Engine Module
Forward and backward jeu de taquin, modified jeu de taquin MJ_S, the elementary
paired steps J^i / J_i, and the paired operations FJ and BJ.

Every paired operation moves entries in one filling and replays the recorded
transcript onto the other; there is no second code path for the companion.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from shape_core import DIRECTIONS, Cell, Mask, Shape, full_mask, neighbor
from tableaux import Filling, require_standard
from utils import JdtError


Move = Tuple[Cell, Cell]

# Sentinel entries for cells outside the shape (or the mask)
INFINITY = float("inf")
ZERO = 0


@lru_cache(maxsize=256)
def neighbor_table(shape: Shape) -> Tuple[Tuple[int, ...], ...]:
    """Row-major index of the right/below/left/above member neighbor of each cell, -1 if none."""
    index = shape.index
    table = []
    for direction in ("right", "below", "left", "above"):
        column = []
        for cell in shape.cells:
            other = neighbor(shape, cell, direction)
            column.append(index[other] if other is not None else -1)
        table.append(tuple(column))
    return tuple(table)


@dataclass(frozen=True)
class Transcript:
    """Ordered adjacent transpositions performed by one or more jdt runs."""

    moves: Tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __add__(self, other: "Transcript") -> "Transcript":
        return Transcript(self.moves + other.moves)

    def replay(self, f: Filling) -> Filling:
        """Apply every transposition, in order, to a filling of the same shape."""
        entries = list(f.entries)
        index = f.shape.index
        for a, b in self.moves:
            ia, ib = index[a], index[b]
            entries[ia], entries[ib] = entries[ib], entries[ia]
        return Filling(f.shape, tuple(entries))

    def replay_stepwise(self, f: Filling) -> Iterator[Filling]:
        """Yield the filling after each single transposition."""
        for move in self.moves:
            f = Transcript((move,)).replay(f)
            yield f

    def directions(self) -> List[str]:
        """Direction of each move, from its first cell to its second."""
        names = {offset: name for name, offset in DIRECTIONS.items()}
        out = []
        for (r1, c1), (r2, c2) in self.moves:
            step = (r2 - r1, c2 - c1)
            if step not in names:
                raise JdtError("ERR_CELL_OUTSIDE", f"move {(r1, c1)}->{(r2, c2)} is not between adjacent cells")
            out.append(names[step])
        return out


class PairedState(NamedTuple):
    """A pair of fillings of one shape acted on simultaneously."""

    first: Filling
    second: Filling


class Step(NamedTuple):
    """One elementary step of MJ, FJ or BJ: the label processed, the state after it, its moves."""

    label: int
    state: Union[Filling, PairedState]
    transcript: Transcript


def switch(state: PairedState) -> PairedState:
    return PairedState(state.second, state.first)


def _check_same_shape(a: Filling, b: Filling) -> None:
    if a.shape != b.shape:
        raise JdtError("ERR_SHAPE_MISMATCH", f"fillings of shapes {a.shape} and {b.shape}")


def _check_member(shape: Shape, cell: Cell) -> None:
    if cell not in shape:
        raise JdtError("ERR_CELL_OUTSIDE", f"{cell} is not a cell of {shape}")


def _forward_moves(entries: List[int], shape: Shape, k: int) -> List[Tuple[int, int]]:
    """Slide entries[k] right/down in place; returns the index pairs swapped."""
    right, below, _, _ = neighbor_table(shape)
    moves = []
    e = entries[k]
    while True:
        r, b = right[k], below[k]
        a_val = entries[r] if r >= 0 else INFINITY
        b_val = entries[b] if b >= 0 else INFINITY
        if a_val < b_val:
            target, smallest = r, a_val
        else:
            target, smallest = b, b_val
        if e < smallest:
            return moves
        # distinct entries: equality only between two sentinels, which is > e
        entries[k], entries[target] = smallest, e
        moves.append((k, target))
        k = target


def _backward_moves(entries: List[int], shape: Shape, k: int, allowed: Sequence[bool]) -> List[Tuple[int, int]]:
    """Slide entries[k] left/up in place within the allowed cells."""
    _, _, left, above = neighbor_table(shape)
    moves = []
    e = entries[k]
    while True:
        l = left[k] if left[k] >= 0 and allowed[left[k]] else -1
        u = above[k] if above[k] >= 0 and allowed[above[k]] else -1
        if l < 0 and u < 0:
            return moves
        l_val = entries[l] if l >= 0 else ZERO
        u_val = entries[u] if u >= 0 else ZERO
        target = l if l_val > u_val else u
        entries[k], entries[target] = entries[target], e
        moves.append((k, target))
        k = target


def _to_transcript(shape: Shape, moves: List[Tuple[int, int]]) -> Transcript:
    cells = shape.cells
    return Transcript(tuple((cells[a], cells[b]) for a, b in moves))


def forward_jdt(t: Filling, start: Cell) -> Tuple[Filling, Transcript]:
    """
    Forward jeu de taquin with the entry in a cell.

    The moving entry is exchanged with the smaller of its right and lower
    neighbors (absent neighbors count as infinity) until it is smaller than both.

    Args:
        t: Any filling
        start: Member cell holding the entry to move

    Returns:
        Tuple of (resulting filling, transcript of right/down moves)

    Raises:
        JdtError: ERR_CELL_OUTSIDE
    """
    shape = t.shape
    _check_member(shape, start)
    entries = list(t.entries)
    moves = _forward_moves(entries, shape, shape.index[start])
    return Filling(shape, tuple(entries)), _to_transcript(shape, moves)


def backward_jdt(t: Filling, start: Cell, mask: Optional[Mask] = None) -> Tuple[Filling, Transcript]:
    """
    Backward jeu de taquin with the entry in a cell, inside a mask.

    The moving entry is exchanged with the larger of its left and upper
    neighbors inside the mask (absent ones count as 0) until it has neither.

    Args:
        t: Any filling
        start: Member cell of the mask holding the entry to move
        mask: Cells the entry may use; the full shape when omitted

    Returns:
        Tuple of (resulting filling, transcript of left/up moves)

    Raises:
        JdtError: ERR_CELL_OUTSIDE, ERR_NOT_IN_MASK
    """
    shape = t.shape
    _check_member(shape, start)
    if mask is None:
        mask = full_mask(shape)
    if start not in mask:
        raise JdtError("ERR_NOT_IN_MASK", f"{start} is not in the mask")
    allowed = [cell in mask for cell in shape.cells]
    entries = list(t.entries)
    moves = _backward_moves(entries, shape, shape.index[start], allowed)
    return Filling(shape, tuple(entries)), _to_transcript(shape, moves)


def iter_modified_jdt(t: Filling, s: Filling) -> Iterator[Step]:
    """Forward jdt for labels n, n-1, ..., 1 of s; yields the filling after each label."""
    _check_same_shape(t, s)
    require_standard(s)
    shape = t.shape
    entries = list(t.entries)
    for label in range(shape.n, 0, -1):
        moves = _forward_moves(entries, shape, shape.index[s.cell_of(label)])
        yield Step(label, Filling(shape, tuple(entries)), _to_transcript(shape, moves))


def modified_jdt(t: Filling, s: Filling) -> Filling:
    """
    MJ_S(T): forward jeu de taquin with the entries of t, in decreasing order
    of the labels of s in their cells.

    Raises:
        JdtError: ERR_SHAPE_MISMATCH, ERR_NOT_STANDARD
    """
    _check_same_shape(t, s)
    require_standard(s)
    shape = t.shape
    entries = list(t.entries)
    index = shape.index
    for label in range(shape.n, 0, -1):
        _forward_moves(entries, shape, index[s.cell_of(label)])
    return Filling(shape, tuple(entries))


def _step_up(i: int, st: PairedState) -> Tuple[PairedState, Transcript]:
    _check_same_shape(st.first, st.second)
    first, transcript = forward_jdt(st.first, st.second.cell_of(i))
    return PairedState(first, transcript.replay(st.second)), transcript


def _step_down(i: int, st: PairedState) -> Tuple[PairedState, Transcript]:
    _check_same_shape(st.first, st.second)
    shape = st.first.shape
    start = st.first.cell_of(i)
    mask = Mask(shape, frozenset(c for c, v in zip(shape.cells, st.first.entries) if v >= i))
    second, transcript = backward_jdt(st.second, start, mask)
    return PairedState(transcript.replay(st.first), second), transcript


def step_up(i: int, st: PairedState) -> PairedState:
    """J^i: forward jdt in the first filling from the cell labelled i in the second; replayed onto the second."""
    return _step_up(i, st)[0]


def step_down(i: int, st: PairedState) -> PairedState:
    """
    J_i: backward jdt in the second filling from the cell of entry i in the
    first, inside the cells whose first-filling entry is >= i; replayed onto the first.
    """
    return _step_down(i, st)[0]


def iter_fj(t: Filling, s: Filling) -> Iterator[Step]:
    """J^n, J^(n-1), ..., J^1 applied to (t, s); yields the pair after each step (before SWITCH)."""
    _check_same_shape(t, s)
    require_standard(s)
    state = PairedState(t, s)
    for i in range(t.n, 0, -1):
        state, transcript = _step_up(i, state)
        yield Step(i, state, transcript)


def iter_bj(s1: Filling, t1: Filling) -> Iterator[Step]:
    """J_1, J_2, ..., J_n applied to (s1, t1); yields the pair after each step (before SWITCH)."""
    _check_same_shape(s1, t1)
    require_standard(t1)
    state = PairedState(s1, t1)
    for i in range(1, s1.n + 1):
        state, transcript = _step_down(i, state)
        yield Step(i, state, transcript)


def fj(t: Filling, s: Filling) -> PairedState:
    """
    FJ(T, S) = SWITCH J^1 ... J^n (T, S) = (S', MJ_S(T)).

    Raises:
        JdtError: ERR_SHAPE_MISMATCH, ERR_NOT_STANDARD
    """
    state = PairedState(t, s)
    for step in iter_fj(t, s):
        state = step.state
    return switch(state)


def bj(s1: Filling, t1: Filling) -> PairedState:
    """
    BJ(S', T') = SWITCH J_n ... J_1 (S', T'), the inverse of FJ.

    Raises:
        JdtError: ERR_SHAPE_MISMATCH, ERR_NOT_STANDARD
    """
    state = PairedState(s1, t1)
    for step in iter_bj(s1, t1):
        state = step.state
    result = switch(state)
    require_standard(result.second, role="bj output")
    return result


def eq1_composition(t: Filling, s: Filling) -> PairedState:
    """
    SWITCH J^1 ... J^(k-1) J^(k+1) ... J^n J_1 (t, s), where k is the label of s
    in the cell holding 1 in t. Equals fj(t, s).
    """
    _check_same_shape(t, s)
    state = PairedState(t, s)
    if t.n == 0:
        return switch(state)
    k = s.entry_at(t.cell_of(1))
    state = step_down(1, state)
    for i in range(t.n, 0, -1):
        if i != k:
            state = step_up(i, state)
    return switch(state)


if __name__ == "__main__":
    from shape_core import make_shape

    shape = make_shape((3, 3, 2))
    t = Filling.from_rows(shape, [[8, 1, 4], [2, 3, 5], [6, 7]])
    result, transcript = forward_jdt(t, (1, 1))
    print(f"forward jdt with 8: {result.to_rows()} via {list(transcript)}")
    back, _ = backward_jdt(result, transcript.moves[-1][1])
    print(f"backward jdt with 8: {back.to_rows()}")
