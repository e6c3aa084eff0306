"""
Batch Jeu de Taquin Module
Modified jeu de taquin on many tabloids at once with numpy.

A batch is an (N, n) integer array; column c holds the entry of the c-th cell
in row-major order. Column n is a sentinel column holding n + 1, standing in
for the infinite entries outside the shape.
"""

import logging
from itertools import islice, permutations
from typing import Sequence

import numpy as np

from jdt_engine import neighbor_table
from shape_core import Shape
from tableaux import Filling
from utils import JdtError


logger = logging.getLogger(__name__)


def _padded_tables(shape: Shape):
    """Right/below neighbor indices with -1 replaced by the sentinel column n."""
    right, below, _, _ = neighbor_table(shape)
    n = shape.n
    right = np.array([r if r >= 0 else n for r in right] + [n], dtype=np.intp)
    below = np.array([b if b >= 0 else n for b in below] + [n], dtype=np.intp)
    return right, below


def batch_modified_jdt(shape: Shape, order: Filling, tabloids: np.ndarray) -> np.ndarray:
    """
    MJ_order applied row by row to a batch of tabloids.

    Args:
        shape: Shape of every tabloid
        order: Standard filling giving the processing order
        tabloids: (N, n) array of entries in row-major cell order

    Returns:
        (N, n) array of the resulting fillings
    """
    n = shape.n
    if tabloids.ndim != 2 or tabloids.shape[1] != n:
        raise JdtError("ERR_SHAPE_MISMATCH", f"batch of width {tabloids.shape[-1]} for a shape with {n} cells")
    right, below = _padded_tables(shape)
    count = tabloids.shape[0]

    work = np.empty((count, n + 1), dtype=np.int16)
    work[:, :n] = tabloids
    work[:, n] = n + 1

    index = shape.index
    for label in range(n, 0, -1):
        start = index[order.cell_of(label)]
        rows = np.arange(count)
        pos = np.full(count, start, dtype=np.intp)
        while rows.size:
            e = work[rows, pos]
            r, b = right[pos], below[pos]
            r_val, b_val = work[rows, r], work[rows, b]
            go_right = r_val < b_val
            target = np.where(go_right, r, b)
            smallest = np.where(go_right, r_val, b_val)
            moving = e > smallest
            rows, pos, target, smallest, e = (
                rows[moving], pos[moving], target[moving], smallest[moving], e[moving]
            )
            work[rows, pos] = smallest
            work[rows, target] = e
            pos = target
    return work[:, :n]


# (n + 1) ** n must fit in int64
MAX_KEY_CELLS = 15


def word_keys(words: np.ndarray, n: int) -> np.ndarray:
    """
    Integer key of each reading word; keys sort exactly like the words.

    Raises:
        JdtError: ERR_TOO_LARGE above MAX_KEY_CELLS cells
    """
    if n > MAX_KEY_CELLS:
        raise JdtError("ERR_TOO_LARGE", f"reading-word keys need n <= {MAX_KEY_CELLS}, got n = {n}")
    weights = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return words.astype(np.int64) @ weights


def batch_mj_indices(shape: Shape, order: Filling, tabloids: np.ndarray, universe_keys: np.ndarray) -> np.ndarray:
    """
    Lex index, within the standard universe, of MJ_order of each tabloid.

    Raises:
        JdtError: ERR_NOT_STANDARD if an output is not in the universe
    """
    out = batch_modified_jdt(shape, order, tabloids)
    keys = word_keys(out, shape.n)
    idx = np.searchsorted(universe_keys, keys)
    idx = np.minimum(idx, len(universe_keys) - 1)
    if not np.array_equal(universe_keys[idx], keys):
        bad = out[np.flatnonzero(universe_keys[idx] != keys)[0]]
        raise JdtError("ERR_NOT_STANDARD", f"modified jeu de taquin produced non-standard {bad.tolist()}")
    return idx


def permutation_block(n: int, start: int, stop: int) -> np.ndarray:
    """Permutations of 1..n with lexicographic ranks start..stop-1, as rows pi(1)..pi(n)."""
    block = list(islice(permutations(range(1, n + 1)), start, stop))
    return np.array(block, dtype=np.int16).reshape(len(block), n)


def permuted_tabloids(order: Filling, perms: np.ndarray) -> np.ndarray:
    """Rows P_pi for each permutation row pi: the entry e of P becomes pi(e)."""
    p_entries = np.array(order.entries, dtype=np.intp)
    return perms[:, p_entries - 1]


def count_row(shape: Shape, order: Filling, perms: np.ndarray, universe_keys: np.ndarray) -> np.ndarray:
    """Counts of MJ_P(P_pi) over the given permutation rows, indexed by lex index."""
    if perms.shape[0] == 0:
        return np.zeros(len(universe_keys), dtype=np.int64)
    idx = batch_mj_indices(shape, order, permuted_tabloids(order, perms), universe_keys)
    return np.bincount(idx, minlength=len(universe_keys)).astype(np.int64)


def count_block(shape: Shape, tableaux: Sequence[Filling], start: int, stop: int) -> np.ndarray:
    """
    Partial count matrix over the permutation ranks start..stop-1.

    Blocks over disjoint rank ranges add up to the full matrix in any order.
    """
    n = shape.n
    universe_keys = word_keys(np.array([t.entries for t in tableaux], dtype=np.int64).reshape(len(tableaux), n), n)
    perms = permutation_block(n, start, stop)
    counts = np.zeros((len(tableaux), len(tableaux)), dtype=np.int64)
    for p, order in enumerate(tableaux):
        counts[p] = count_row(shape, order, perms, universe_keys)
    logger.debug("block %d..%d of %s done", start, stop, shape)
    return counts
