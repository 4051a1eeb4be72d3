"""
Bruhat order on S_n via the dot-table criterion.

For a permutation w and 1 <= k, l <= n, the dot table counts
``w[k, l] = |{i <= k : w(i) >= l}|``; then v <= w in Bruhat order iff
every dot-table entry of v is <= the corresponding entry of w.  The
order on any subset of S_n (an explicit "universe") is the induced one,
and ``poset_view`` computes its covering edges by a pure betweenness
check, independent of any covering-move machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perms import Perm, inversions

Label = tuple[int, int]


@lru_cache(maxsize=None)
def dot_table(p: Perm) -> tuple[tuple[int, ...], ...]:
    """The n x n grid of counts w[k, l] = |{i <= k : w(i) >= l}|.

    Row index k and column index l are 1-based in the maths; the returned
    grid is indexed ``table[k-1][l-1]``.
    """
    n = len(p)
    rows = []
    prev = [0] * n
    for k in range(1, n + 1):
        v = p[k - 1]
        row = [prev[l - 1] + (1 if v >= l else 0) for l in range(1, n + 1)]
        rows.append(tuple(row))
        prev = row
    return tuple(rows)


@lru_cache(maxsize=None)
def _flat_table(p: Perm) -> tuple[int, ...]:
    return tuple(entry for row in dot_table(p) for entry in row)


@lru_cache(maxsize=1 << 20)
def bruhat_leq(p: Perm, q: Perm) -> bool:
    """True iff p <= q in the Bruhat order on S_n (dot criterion)."""
    if len(p) != len(q):
        raise ValueError(f"size mismatch: {len(p)} vs {len(q)}")
    if p == q:
        return True
    ta, tb = _flat_table(p), _flat_table(q)
    return all(a <= b for a, b in zip(ta, tb))


def bruhat_less(p: Perm, q: Perm) -> bool:
    return p != q and bruhat_leq(p, q)


def interval(p: Perm, q: Perm, universe) -> tuple[Perm, ...]:
    """All z in ``universe`` with p <= z <= q, endpoints included.

    Raises if p is not below q; the universe is any iterable of
    permutations of the same size.
    """
    if not bruhat_leq(p, q):
        raise ValueError(f"{p} is not <= {q} in Bruhat order")
    return tuple(
        sorted(z for z in universe if bruhat_leq(p, z) and bruhat_leq(z, q))
    )


@dataclass(frozen=True)
class PosetView:
    """A finite induced subposet: elements plus covering edges.

    ``labels`` maps a covering edge to its rise label when one is known
    (an edge of the ambient involution order) and to None otherwise.
    """

    elements: tuple[Perm, ...]
    covers: tuple[tuple[Perm, Perm], ...]
    labels: dict[tuple[Perm, Perm], Label | None] | None = None

    def upper_covers(self, x: Perm) -> tuple[Perm, ...]:
        return tuple(b for a, b in self.covers if a == x)

    def lower_covers(self, x: Perm) -> tuple[Perm, ...]:
        return tuple(a for a, b in self.covers if b == x)


class UniverseIndex:
    """Bitset index of the induced Bruhat order on a fixed element set.

    Each element gets an index; up-sets and down-sets are stored as int
    bitmasks over indices, which makes betweenness and interval queries
    cheap even for a few hundred elements.  Built purely from the dot
    criterion.
    """

    def __init__(self, universe):
        elements = tuple(sorted(set(universe)))
        if not elements:
            raise ValueError("empty universe")
        sizes = {len(p) for p in elements}
        if len(sizes) != 1:
            raise ValueError(f"mixed sizes in universe: {sorted(sizes)}")
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        m = len(elements)
        up = [0] * m  # up[i]: strict up-set of element i, as a bitmask
        down = [0] * m
        # Bruhat comparability needs strictly fewer inversions below, so
        # only pairs with inv(a) < inv(b) are tested.
        by_inv = sorted(range(m), key=lambda i: inversions(elements[i]))
        tables = [_flat_table(p) for p in elements]
        invs = [inversions(p) for p in elements]
        for a_pos, i in enumerate(by_inv):
            ti, inv_i = tables[i], invs[i]
            for j in by_inv[a_pos + 1:]:
                if invs[j] == inv_i:
                    continue
                tj = tables[j]
                if all(x <= y for x, y in zip(ti, tj)):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up = up
        self.down = down

    def leq(self, p: Perm, q: Perm) -> bool:
        i, j = self.index[p], self.index[q]
        return i == j or bool(self.up[i] >> j & 1)

    def bits(self, mask: int):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) where j covers i in the induced order."""
        pairs = []
        for i in range(len(self.elements)):
            up_i = self.up[i]
            for j in self.bits(up_i):
                if not up_i & self.down[j]:
                    pairs.append((i, j))
        return pairs


def poset_view(universe) -> PosetView:
    """Covering edges of the order induced on ``universe``.

    An edge x -> y means y covers x: x < y with no universe element
    strictly between.
    """
    idx = UniverseIndex(universe)
    covers = tuple(
        sorted((idx.elements[i], idx.elements[j]) for i, j in idx.cover_pairs())
    )
    return PosetView(elements=idx.elements, covers=covers)
