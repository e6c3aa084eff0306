"""
Analysis Module
Count matrices A_{P,Q} and exhaustive or sampled verification of the symmetry
theorem, the FJ/BJ identities, the constancy of canonical orders and the
path properties of jeu de taquin.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from multiprocessing import Pool
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

import batch_jdt
from jdt_engine import (
    PairedState, backward_jdt, bj, eq1_composition, fj, iter_bj, iter_fj, iter_modified_jdt, modified_jdt,
)
from shape_core import Mask, Shape, format_shape_spec
from tableaux import (
    Filling, Permutation, apply_permutation, canonical_order, enumerate_standard, hook_product, inverse,
    is_standard, random_permutation, require_standard,
)
from utils import EXHAUSTIVE_CAP, JdtError, check_cap


logger = logging.getLogger(__name__)

# Label for the row/column order of every count matrix
MATRIX_ORDER = "lex-reading-word"


@dataclass(frozen=True)
class Mode:
    """How a property is swept: every case, or count cases from a seeded generator."""

    kind: str = "exhaustive"
    seed: Optional[int] = None
    count: Optional[int] = None

    @classmethod
    def exhaustive(cls) -> "Mode":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, seed: int, count: int) -> "Mode":
        if seed < 0:
            raise JdtError("ERR_PARSE", f"seed must be non-negative, got {seed}")
        return cls("sampled", seed, count)

    def to_dict(self) -> Dict:
        if self.kind == "exhaustive":
            return {"kind": self.kind}
        return {"kind": self.kind, "seed": self.seed, "count": self.count}


@dataclass
class CountMatrix:
    """A_{P,Q} with rows indexed by P and columns by Q, both in lex reading-word order."""

    shape: Shape
    tableaux: List[Filling]
    counts: np.ndarray

    @property
    def size(self) -> int:
        return len(self.tableaux)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.counts, self.counts.T))

    def row_sums(self) -> np.ndarray:
        return self.counts.sum(axis=1)

    def column_sums(self) -> np.ndarray:
        return self.counts.sum(axis=0)

    def values(self) -> List[int]:
        return sorted(int(v) for v in np.unique(self.counts))

    def words(self) -> List[List[int]]:
        return [list(t.entries) for t in self.tableaux]

    def to_frame(self) -> pd.DataFrame:
        labels = ["".join(str(v) if v < 10 else f"({v})" for v in t.entries) for t in self.tableaux]
        return pd.DataFrame(self.counts, index=pd.Index(labels, name="P"), columns=labels)

    def to_dict(self) -> Dict:
        return {
            "shape": format_shape_spec(self.shape),
            "order": MATRIX_ORDER,
            "tableaux": self.words(),
            "matrix": self.counts.tolist(),
        }


@dataclass
class VerificationReport:
    """Outcome of one property sweep; a failed report carries its first counterexample."""

    property_name: str
    shape: Shape
    mode: Mode
    passed: bool
    checked: int = 0
    counterexample: Optional[Dict[str, object]] = None
    details: Dict[str, object] = field(default_factory=dict)

    def summary(self) -> str:
        status = "PASSED" if self.passed else "FAILED"
        return f"{self.property_name} on {format_shape_spec(self.shape)} ({self.mode.kind}): {status}, {self.checked} cases"


def _chunks(total: int, parts: int) -> List[Tuple[int, int]]:
    """Contiguous rank ranges covering 0..total-1."""
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    return [(bounds[k], bounds[k + 1]) for k in range(parts)]


def a_matrix(shape: Shape, workers: int = 1, force: bool = False) -> CountMatrix:
    """
    Count matrix A_{P,Q} over all standard P, Q of a shape.

    For each P the n! tabloids are enumerated as P_pi, pi running through the
    symmetric group in lexicographic order; the permutation ranks are split
    into contiguous ranges whose partial matrices are added up.

    Args:
        shape: Any valid shape
        workers: Number of worker processes (1 runs in-process)
        force: Allow n above EXHAUSTIVE_CAP, up to batch_jdt.MAX_KEY_CELLS

    Returns:
        CountMatrix

    Raises:
        JdtError: ERR_TOO_LARGE
    """
    n = shape.n
    check_cap(n, EXHAUSTIVE_CAP, "a_matrix", force)
    check_cap(n, batch_jdt.MAX_KEY_CELLS, "a_matrix reading-word keys")
    tableaux = enumerate_standard(shape, force=force)
    total = factorial(n)
    started = time.perf_counter()

    if workers <= 1:
        counts = batch_jdt.count_block(shape, tableaux, 0, total)
    else:
        jobs = [(shape, tableaux, start, stop) for start, stop in _chunks(total, workers)]
        with Pool(processes=workers) as pool:
            blocks = pool.starmap(batch_jdt.count_block, jobs)
        counts = np.zeros((len(tableaux), len(tableaux)), dtype=np.int64)
        for block in blocks:
            counts += block

    logger.info("a_matrix %s: %dx%d in %.2fs with %d worker(s)",
                shape, len(tableaux), len(tableaux), time.perf_counter() - started, workers)
    return CountMatrix(shape, tableaux, counts)


def a_matrix_row(shape: Shape, order: Filling, force: bool = False) -> Tuple[List[Filling], np.ndarray]:
    """The single row A_{order, .} and the lex-ordered standard fillings indexing it."""
    check_cap(shape.n, EXHAUSTIVE_CAP, "a_matrix_row", force)
    check_cap(shape.n, batch_jdt.MAX_KEY_CELLS, "a_matrix_row reading-word keys")
    require_standard(order)
    tableaux = enumerate_standard(shape, force=force)
    n = shape.n
    universe_keys = batch_jdt.word_keys(np.array([t.entries for t in tableaux], dtype=np.int64).reshape(len(tableaux), n), n)
    perms = batch_jdt.permutation_block(n, 0, factorial(n))
    return tableaux, batch_jdt.count_row(shape, order, perms, universe_keys)


def scalar_a_matrix(shape: Shape, force: bool = False) -> CountMatrix:
    """A_{P,Q} by running modified_jdt on every tabloid one at a time."""
    check_cap(shape.n, EXHAUSTIVE_CAP, "scalar_a_matrix", force)
    tableaux = enumerate_standard(shape, force=force)
    position = {t.entries: k for k, t in enumerate(tableaux)}
    counts = np.zeros((len(tableaux), len(tableaux)), dtype=np.int64)
    for p, order in enumerate(tableaux):
        for word in permutations(range(1, shape.n + 1)):
            q = modified_jdt(Filling(shape, word), order)
            counts[p, position[q.entries]] += 1
    return CountMatrix(shape, tableaux, counts)


def _cases(shape: Shape, mode: Mode, force: bool) -> Iterator[Tuple[Filling, Permutation]]:
    """(standard S, pi) pairs; the tabloid of a case is S_pi."""
    universe = enumerate_standard(shape, force=force)
    n = shape.n
    if mode.kind == "exhaustive":
        check_cap(n, EXHAUSTIVE_CAP, "exhaustive sweep", force)
        for s in universe:
            for word in permutations(range(1, n + 1)):
                yield s, Permutation(word)
    else:
        rng = np.random.default_rng(mode.seed)
        for _ in range(mode.count):
            s = universe[int(rng.integers(len(universe)))]
            yield s, random_permutation(n, rng)


def _sweep(name: str, shape: Shape, mode: Mode, check: Callable, force: bool) -> VerificationReport:
    started = time.perf_counter()
    checked = 0
    for s, pi in _cases(shape, mode, force):
        checked += 1
        failure = check(s, pi)
        if failure is not None:
            logger.info("%s on %s failed after %d cases", name, shape, checked)
            return VerificationReport(name, shape, mode, False, checked, failure)
    logger.info("%s on %s: %d cases in %.2fs", name, shape, checked, time.perf_counter() - started)
    return VerificationReport(name, shape, mode, True, checked)


def _check_symmetry(p: Filling, pi: Permutation) -> Optional[Dict]:
    q = modified_jdt(apply_permutation(p, pi), p)
    back = modified_jdt(apply_permutation(q, inverse(pi)), q)
    if back != p:
        return {"P": p, "pi": pi, "Q": q, "MJ_Q(Q_pi_inverse)": back}
    return None


def _check_involution(s: Filling, pi: Permutation) -> Optional[Dict]:
    t = apply_permutation(s, pi)
    once = fj(t, s)
    twice = fj(once.first, once.second)
    if twice != PairedState(t, s):
        return {"T": t, "S": s, "fj_first": once.first, "fj_second": once.second,
                "fj_fj_first": twice.first, "fj_fj_second": twice.second}
    return None


def _check_fj_eq_bj(s: Filling, pi: Permutation) -> Optional[Dict]:
    t = apply_permutation(s, pi)
    forward, backward = fj(t, s), bj(t, s)
    if forward != backward:
        return {"T": t, "S": s, "fj_first": forward.first, "fj_second": forward.second,
                "bj_first": backward.first, "bj_second": backward.second}
    return None


def _check_eq1(s: Filling, pi: Permutation) -> Optional[Dict]:
    t = apply_permutation(s, pi)
    forward, composed = fj(t, s), eq1_composition(t, s)
    if forward != composed:
        return {"T": t, "S": s, "fj_first": forward.first, "fj_second": forward.second,
                "eq1_first": composed.first, "eq1_second": composed.second}
    return None


def _check_pi_tracking(s: Filling, pi: Permutation) -> Optional[Dict]:
    t = apply_permutation(s, pi)
    state = PairedState(t, s)
    for step in iter_fj(t, s):
        pairs = zip(step.transcript.replay_stepwise(state.first), step.transcript.replay_stepwise(state.second))
        for x, y in pairs:
            if x != apply_permutation(y, pi):
                return {"T": t, "S": s, "pi": pi, "label": step.label, "X": x, "Y": y}
        state = step.state
    return None


def _check_paths(s: Filling, pi: Permutation) -> Optional[Dict]:
    t = apply_permutation(s, pi)
    shape = t.shape
    current = t
    for step in iter_modified_jdt(t, s):
        directions = set(step.transcript.directions())
        if not directions <= {"right", "below"}:
            return {"T": t, "S": s, "label": step.label, "reason": f"forward moves {sorted(directions)}"}
        if sorted(step.state.entries) != sorted(current.entries):
            return {"T": t, "S": s, "label": step.label, "reason": "entries changed"}
        if len(step.transcript):
            landing = step.transcript.moves[-1][1]
            region = Mask(shape, frozenset(c for c in shape.cells if s.entry_at(c) >= step.label))
            undone, _ = backward_jdt(step.state, landing, region)
            if undone != current:
                return {"T": t, "S": s, "label": step.label, "reason": "backward jdt did not undo the slide"}
        current = step.state
    if not is_standard(current):
        return {"T": t, "S": s, "MJ_S(T)": current, "reason": "output not standard"}

    state = PairedState(t, s)
    for step in iter_fj(t, s):
        mover = state.first.entry_at(state.second.cell_of(step.label))
        if mover == 1 and len(step.transcript):
            return {"T": t, "S": s, "label": step.label, "reason": "entry 1 moved by its own forward pass"}
        state = step.state

    out = fj(t, s)
    for step in iter_bj(out.first, out.second):
        directions = set(step.transcript.directions())
        if not directions <= {"left", "above"}:
            return {"T": t, "S": s, "label": step.label, "reason": f"backward moves {sorted(directions)}"}
    return None


def verify_symmetry(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    """MJ_P(P_pi) = Q implies MJ_Q(Q_pi^-1) = P over all (P, pi); sweeping all Q and pi gives the converse."""
    return _sweep("symmetry", shape, mode, _check_symmetry, force)


def verify_involution(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    return _sweep("involution", shape, mode, _check_involution, force)


def verify_fj_eq_bj(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    return _sweep("fj-eq-bj", shape, mode, _check_fj_eq_bj, force)


def verify_identity_eq1(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    return _sweep("eq1", shape, mode, _check_eq1, force)


def verify_pi_tracking(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    """Every intermediate pair (X, Y) of fj(P_pi, P) satisfies X = Y_pi."""
    return _sweep("pi-tracking", shape, mode, _check_pi_tracking, force)


def verify_paths(shape: Shape, mode: Mode = Mode(), force: bool = False) -> VerificationReport:
    """
    Path properties of every run: forward moves go right/down and are undone by
    backward jdt inside the processed region, MJ outputs are standard, entry 1
    never moves on its own pass in fj, and bj moves go left/up.
    """
    return _sweep("paths", shape, mode, _check_paths, force)


def verify_constancy(shape: Shape, order: Filling, force: bool = False) -> VerificationReport:
    """
    Row A_{order, .} is constant.

    For an unshifted straight shape with the column order, the common value
    must also equal the hook product.
    """
    tableaux, row = a_matrix_row(shape, order, force=force)
    values = sorted(set(int(v) for v in row))
    passed = len(values) == 1
    details: Dict[str, object] = {"values": values}
    if passed:
        details["common_value"] = values[0]

    if not shape.shifted and shape.is_straight and order == canonical_order(shape, "nps_column"):
        hooks = hook_product(shape)
        details["hook_product"] = hooks
        passed = passed and values[0] == hooks

    counterexample = None
    if not passed:
        k = int(np.argmin(row)) if len(values) > 1 else 0
        counterexample = {"order": order, "Q": tableaux[k], "count": int(row[k])}
    return VerificationReport("constancy", shape, Mode.exhaustive(), passed, len(row), counterexample, details)


def verify_matrix_symmetry(shape: Shape, workers: int = 1, force: bool = False) -> VerificationReport:
    """A_{P,Q} = A_{Q,P} and every row and column sums to n!."""
    matrix = a_matrix(shape, workers=workers, force=force)
    total = factorial(shape.n)
    details = {"size": matrix.size, "values": matrix.values()}
    counts = matrix.counts
    bad = np.argwhere(counts != counts.T)
    if bad.size:
        p, q = (int(v) for v in bad[0])
        counterexample = {"P": matrix.tableaux[p], "Q": matrix.tableaux[q],
                          "A_PQ": int(counts[p, q]), "A_QP": int(counts[q, p])}
        return VerificationReport("matrix-symmetry", shape, Mode.exhaustive(), False, matrix.size ** 2, counterexample, details)
    for axis_name, sums in (("row", matrix.row_sums()), ("column", matrix.column_sums())):
        off = np.flatnonzero(sums != total)
        if off.size:
            k = int(off[0])
            counterexample = {"P" if axis_name == "row" else "Q": matrix.tableaux[k], f"{axis_name}_sum": int(sums[k])}
            return VerificationReport("matrix-symmetry", shape, Mode.exhaustive(), False, matrix.size ** 2, counterexample, details)
    return VerificationReport("matrix-symmetry", shape, Mode.exhaustive(), True, matrix.size ** 2, None, details)


# Properties swept over (tabloid, standard order) cases
PROPERTIES: Dict[str, Callable[..., VerificationReport]] = {
    "symmetry": verify_symmetry,
    "involution": verify_involution,
    "fj-eq-bj": verify_fj_eq_bj,
    "eq1": verify_identity_eq1,
    "pi-tracking": verify_pi_tracking,
    "paths": verify_paths,
}


def run_suite(shapes: Sequence[Shape], properties: Sequence[str], mode: Mode = Mode(),
              force: bool = False) -> List[VerificationReport]:
    """Every named property on every shape, in the given order."""
    reports = []
    for shape in shapes:
        for name in properties:
            reports.append(PROPERTIES[name](shape, mode, force=force))
    return reports


if __name__ == "__main__":
    from shape_core import make_shape

    shape = make_shape((3, 3, 2))
    report = verify_constancy(shape, canonical_order(shape, "nps_column"))
    print(report.summary(), report.details)
