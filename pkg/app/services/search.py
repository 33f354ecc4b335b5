"""
Exhaustive first-row search for propus triples and two-circulant pairs.

Rows of every slot are enumerated as bit masks and reduced to their PAF
vectors over shifts 1..n//2. Slot 0 is split by row prefix into work packets;
each packet is joined against a hash index of the remaining slot(s). Results
are merged and sorted, so the output does not depend on packet order.
"""
import asyncio
import gc
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import PropusError, SearchBudgetExceeded
from app.core.logger import get_logger
from app.models.matrices import ConferencePair, DOptimalPair, PropusTriple, TurynPair
from app.models.schemas import FirstRow, SearchSpec
from app.services.matrix_core import circulant, gram
from app.services.propus import has_additive_property
from app.utils.bitrows import canonical_mask, enumerate_rows, paf_table, row_count

log = get_logger("search")

Row = Tuple[int, ...]

# per slot: (symmetric, zero diagonal)
SLOT_LAYOUT: Dict[str, Tuple[Tuple[bool, bool], ...]] = {
    "propus": ((True, False), (True, False), (True, False)),
    "turyn": ((True, True), (True, False)),
    "conference": ((True, True), (True, False)),
    "doptimal": ((True, False), (False, False)),
}


@dataclass
class _Slot:
    rows: np.ndarray
    sums: np.ndarray
    pafs: np.ndarray


def _exact_sqrt(value: int) -> Optional[int]:
    if value < 0:
        return None
    r = isqrt(value)
    return r if r * r == value else None


def _layout(spec: SearchSpec) -> List[Tuple[bool, bool]]:
    layout = list(SLOT_LAYOUT[spec.kind])
    if spec.symmetric is not None:
        layout = [(sym, zero) for sym, (_, zero) in zip(spec.symmetric, layout)]
    return layout


def nodes_required(spec: SearchSpec) -> int:
    counts = [row_count(spec.n, sym, zero) for sym, zero in _layout(spec)]
    nodes = sum(counts)
    if spec.kind == "propus":
        nodes += counts[0] * counts[2]
    return nodes


def _load_slot(n: int, symmetric: bool, zero_diagonal: bool,
               row_sum: Optional[int], canonical: bool) -> _Slot:
    rows = enumerate_rows(n, symmetric, zero_diagonal)
    if canonical:
        rows = rows[canonical_mask(rows, symmetric)]
    sums = rows.sum(axis=1, dtype=np.int64)
    if row_sum is not None:
        keep = sums == row_sum
        rows, sums = rows[keep], sums[keep]
    return _Slot(rows=rows, sums=sums, pafs=paf_table(rows, n // 2))


def _index(slot: _Slot) -> Dict[Tuple[int, bytes], List[int]]:
    index: Dict[Tuple[int, bytes], List[int]] = {}
    for i in range(len(slot.rows)):
        index.setdefault((int(slot.sums[i]), slot.pafs[i].tobytes()), []).append(i)
    return index


def _partitions(rows: np.ndarray, prefix_len: int) -> List[np.ndarray]:
    if len(rows) == 0:
        return []
    _, inverse = np.unique(rows[:, :prefix_len], axis=0, return_inverse=True)
    inverse = inverse.ravel()
    return [np.nonzero(inverse == g)[0] for g in range(int(inverse.max()) + 1)]


# ---------------------------------------------------------
# JOINS
# ---------------------------------------------------------
def _pair_worker(x: _Slot, y_index, paf_target: int, total: int):
    def work(part: np.ndarray) -> List[Tuple[int, int]]:
        need = (paf_target - x.pafs[part]).astype(np.int32)
        out = []
        for k, ix in enumerate(part):
            r = _exact_sqrt(total - int(x.sums[ix]) ** 2)
            if r is None:
                continue
            key = need[k].tobytes()
            for ysum in sorted({r, -r}):
                out.extend((int(ix), iy) for iy in y_index.get((ysum, key), ()))
        return out
    return work


def _propus_worker(a: _Slot, b_index, d: _Slot, n: int):
    d_groups = {int(s): np.nonzero(d.sums == s)[0] for s in np.unique(d.sums)}

    def work(part: np.ndarray) -> List[Tuple[int, int, int]]:
        out = []
        for ia in part:
            sa = int(a.sums[ia])
            for sd, d_idx in d_groups.items():
                rest = 4 * n - sa * sa - sd * sd
                if rest < 0 or rest % 2:
                    continue
                r = _exact_sqrt(rest // 2)
                if r is None:
                    continue
                total = a.pafs[ia][None, :] + d.pafs[d_idx]
                even = ~(total % 2).astype(bool).any(axis=1)
                need = (-(total // 2)).astype(np.int32)
                for k in np.nonzero(even)[0]:
                    key = need[k].tobytes()
                    for sb in sorted({r, -r}):
                        out.extend((int(ia), ib, int(d_idx[k])) for ib in b_index.get((sb, key), ()))
        return out
    return work


async def _run_packets(work: Callable, packets: Sequence[np.ndarray]) -> List[list]:
    sem = asyncio.Semaphore(settings.SEARCH_WORKERS)

    async def process_packet(part: np.ndarray):
        async with sem:
            return await asyncio.to_thread(work, part)

    results = await asyncio.gather(*[process_packet(p) for p in packets])
    gc.collect()
    return results


# ---------------------------------------------------------
# PUBLIC SEARCHES
# ---------------------------------------------------------
def search_rows(spec: SearchSpec) -> List[Tuple[Row, ...]]:
    """Sorted first-row tuples of every solution (truncated to spec.limit)."""
    budget = spec.budget or settings.SEARCH_NODE_BUDGET
    required = nodes_required(spec)
    if required > budget:
        raise SearchBudgetExceeded(required, budget)

    n = spec.n
    sums = spec.row_sums or (None,) * len(_layout(spec))
    slots = [
        _load_slot(n, sym, zero, rs, spec.canonical_only)
        for (sym, zero), rs in zip(_layout(spec), sums)
    ]
    packets = _partitions(slots[0].rows, settings.SEARCH_PREFIX_LEN)
    log.info(f"{spec.kind} n={n}: {required} nodes, {len(packets)} packets")

    if spec.kind == "propus":
        work = _propus_worker(slots[0], _index(slots[1]), slots[2], n)
    elif spec.kind == "doptimal":
        work = _pair_worker(slots[0], _index(slots[1]), 2, 4 * n - 2)
    else:
        work = _pair_worker(slots[0], _index(slots[1]), 0, 2 * n - 1)

    found = set()
    for chunk in asyncio.run(_run_packets(work, packets)):
        for combo in chunk:
            found.add(tuple(
                tuple(int(v) for v in slot.rows[i]) for slot, i in zip(slots, combo)
            ))
    results = sorted(found)
    if spec.limit is not None:
        results = results[:spec.limit]
    log.info(f"{spec.kind} n={n}: {len(found)} solutions, returning {len(results)}")
    return results


def _recheck(ok: bool, kind: str, rows) -> None:
    if not ok:
        raise PropusError(f"{kind} search produced an entry failing the Gram check: {rows}")


def search_propus(spec: SearchSpec) -> List[PropusTriple]:
    if spec.kind != "propus":
        raise ValueError(f"search_propus needs kind 'propus', got {spec.kind!r}")
    out = []
    for rows in search_rows(spec):
        frs = tuple(FirstRow.of(r) for r in rows)
        t = PropusTriple(*(circulant(fr) for fr in frs), rows=frs)
        _recheck(has_additive_property(t), "propus", rows)
        out.append(t)
    return out


def _pair_matrices(rows):
    frs = tuple(FirstRow.of(r) for r in rows)
    X, Y = (circulant(fr) for fr in frs)
    return frs, X, Y


def search_turyn_pair(spec: SearchSpec) -> List[TurynPair]:
    if spec.kind not in ("turyn", "conference"):
        raise ValueError(f"search_turyn_pair needs kind 'turyn', got {spec.kind!r}")
    out = []
    for rows in search_rows(spec):
        frs, X, Y = _pair_matrices(rows)
        target = (2 * spec.n - 1) * np.eye(spec.n, dtype=np.int64)
        _recheck(np.array_equal(gram(X) + gram(Y), target), spec.kind, rows)
        out.append(TurynPair(X, Y, rows=frs))
    return out


def search_two_circulant(spec: SearchSpec) -> List:
    """Conference pairs (kind 'conference') or D-optimal pairs (kind 'doptimal')."""
    if spec.kind == "conference":
        return [ConferencePair(p.X, p.Y, rows=p.rows) for p in search_turyn_pair(spec)]
    if spec.kind != "doptimal":
        raise ValueError(f"search_two_circulant needs 'conference' or 'doptimal', got {spec.kind!r}")
    n = spec.n
    target = (2 * n - 2) * np.eye(n, dtype=np.int64) + 2
    out = []
    for rows in search_rows(spec):
        frs, X, Y = _pair_matrices(rows)
        _recheck(np.array_equal(gram(X) + gram(Y), target), "doptimal", rows)
        out.append(DOptimalPair(X, Y, rows=frs))
    return out


def search_symmetric_rows(n: int, row_sum: int, paf_values: Sequence[int]) -> List[Row]:
    """Symmetric +/-1 rows with a given sum and PAF(s) for s = 1..n//2."""
    return search_circulant_rows(n, row_sum, paf_values, symmetric=True)


def search_circulant_rows(n: int, row_sum: int, paf_values: Sequence[int],
                          symmetric: bool = False, budget: Optional[int] = None) -> List[Row]:
    """+/-1 rows with a given sum and PAF(s) for s = 1..n//2, sorted."""
    budget = budget or settings.SEARCH_NODE_BUDGET
    required = row_count(n, symmetric)
    if required > budget:
        raise SearchBudgetExceeded(required, budget)
    rows = enumerate_rows(n, symmetric=symmetric)
    sums = rows.sum(axis=1, dtype=np.int64)
    pafs = paf_table(rows, n // 2)
    want = np.asarray(paf_values, dtype=np.int32)
    keep = (sums == row_sum) & (pafs == want).all(axis=1)
    return sorted(tuple(int(v) for v in r) for r in rows[keep])
