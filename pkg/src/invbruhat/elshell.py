"""
EL-labelling verification for induced involution orders.

An edge labelling of a bounded graded poset is an EL-labelling when
every interval has exactly one saturated chain with a weakly increasing
label word, and that chain is lexicographically minimal among the
interval's chains.  Covers of a class view inherit the rise label of the
ambient involution order when they are covers there; covers that jump
more than one ambient rank carry no label and make EL verification
inapplicable.

The fixed-point-free class is EL-labelled by the rise labels under the
*reversed* lexicographic label order; the full involution order uses the
standard one.  ``find_escaping_interval`` exhibits why the construction
stops there: for other count sets some length-2 interval of the ambient
order has its increasing or decreasing chain escape the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bruhat import PosetView, bruhat_less
from .chains import Chain, decreasing_chain, increasing_chain
from .fpclasses import (
    FixedPointSpec,
    class_view,
    enumerate_class,
    in_class,
    is_graded_bruteforce,
    rank_in_involutions,
)
from .moves import Label, cover_map
from .perms import Perm, count_involutions, num_fixed_points


class LabelOrder(Enum):
    STANDARD_LEX = "standard-lex"
    REVERSED_LEX = "reversed-lex"

    def key(self, label: Label):
        if self is LabelOrder.STANDARD_LEX:
            return label
        return (-label[0], -label[1])


@dataclass(frozen=True)
class ELReport:
    applicable: bool
    is_el: bool
    violations: tuple[tuple[Perm, Perm, str], ...]


def labelled_class_view(spec: FixedPointSpec) -> PosetView:
    """Class covering graph with each cover carrying its rise label when
    it is also a cover of the full involution order, else None."""
    view = class_view(spec)
    labels: dict[tuple[Perm, Perm], Label | None] = {}
    for x, y in view.covers:
        labels[(x, y)] = cover_map(x).get(y)
    return PosetView(elements=view.elements, covers=view.covers, labels=labels)


class _ViewIndex:
    """Reachability bitmasks over a view's covering graph."""

    def __init__(self, view: PosetView):
        self.elements = view.elements
        self.index = {p: i for i, p in enumerate(view.elements)}
        m = len(view.elements)
        self.out: list[list[tuple[Label, int]]] = [[] for _ in range(m)]
        indeg = [0] * m
        assert view.labels is not None
        for (a, b), label in view.labels.items():
            ia, ib = self.index[a], self.index[b]
            self.out[ia].append((label, ib))
            indeg[ib] += 1
        self.indeg = indeg
        # strict up-reachability, accumulated against topological order
        order, stack = [], [i for i in range(m) if indeg[i] == 0]
        remaining = indeg[:]
        while stack:
            i = stack.pop()
            order.append(i)
            for _, j in self.out[i]:
                remaining[j] -= 1
                if remaining[j] == 0:
                    stack.append(j)
        if len(order) != m:
            raise ValueError("covering graph has a cycle; not a poset view")
        up = [0] * m
        for i in reversed(order):
            for _, j in self.out[i]:
                up[i] |= (1 << j) | up[j]
        self.up = up


def _greedy_lex_min(idx: _ViewIndex, x: int, y: int, order: LabelOrder) -> tuple[Label, ...]:
    """Label word of the lex-minimal x-y chain inside the view interval.

    Greedy choice of the smallest feasible label is lex-minimal because
    all chains of an interval in a graded poset have equal length.
    """
    word = []
    here = x
    while here != y:
        feasible = [
            (label, z) for label, z in idx.out[here]
            if z == y or (idx.up[z] >> y) & 1
        ]
        label, here = min(feasible, key=lambda lz: order.key(lz[0]))
        word.append(label)
    return tuple(word)


def _increasing_chains(idx: _ViewIndex, x: int, y: int, order: LabelOrder,
                       cap: int = 2) -> list[tuple[Label, ...]]:
    """Label words of weakly increasing x-y chains, at most ``cap`` found."""
    found: list[tuple[Label, ...]] = []

    def walk(here: int, last: Label | None, word: list[Label]):
        if here == y:
            found.append(tuple(word))
            return
        for label, z in idx.out[here]:
            if len(found) >= cap:
                return
            if last is not None and order.key(label) < order.key(last):
                continue
            if z == y or (idx.up[z] >> y) & 1:
                word.append(label)
                walk(z, label, word)
                word.pop()

    walk(x, None, [])
    return found


def el_check(view: PosetView, order: LabelOrder) -> ELReport:
    """Verify the EL-labelling condition on every interval of ``view``.

    The view must be bounded and graded (ValueError otherwise) and fully
    labelled (reported as not applicable otherwise).  A violation lists
    (bottom, top, reason) for its interval.
    """
    if view.labels is None or any(l is None for l in view.labels.values()):
        return ELReport(applicable=False, is_el=False, violations=())
    report = is_graded_bruteforce(view)
    if not report.graded:
        raise ValueError("view is not graded")
    idx = _ViewIndex(view)
    m = len(idx.elements)
    if sum(1 for i in range(m) if idx.indeg[i] == 0) != 1 \
            or sum(1 for i in range(m) if not idx.out[i]) != 1:
        raise ValueError("view is not bounded")
    for i in range(m):
        labels_here = [label for label, _ in idx.out[i]]
        if len(set(labels_here)) != len(labels_here):
            raise ValueError(f"element {idx.elements[i]} repeats a cover label")

    violations = []
    for x in range(m):
        up_x = idx.up[x]
        for y in idx_bits(up_x):
            increasing = _increasing_chains(idx, x, y, order)
            if len(increasing) != 1:
                reason = "no-increasing-chain" if not increasing \
                    else "multiple-increasing-chains"
                violations.append((idx.elements[x], idx.elements[y], reason))
                continue
            if increasing[0] != _greedy_lex_min(idx, x, y, order):
                violations.append(
                    (idx.elements[x], idx.elements[y], "increasing-not-lex-min")
                )
    violations.sort()
    return ELReport(applicable=True, is_el=not violations,
                    violations=tuple(violations))


def idx_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def el_check_by_enumeration(view: PosetView, order: LabelOrder,
                            max_chains: int = 10_000) -> ELReport:
    """Oracle twin of ``el_check`` that lists every chain per interval."""
    if view.labels is None or any(l is None for l in view.labels.values()):
        return ELReport(applicable=False, is_el=False, violations=())
    if not is_graded_bruteforce(view).graded:
        raise ValueError("view is not graded")
    idx = _ViewIndex(view)
    m = len(idx.elements)

    def chains(x: int, y: int) -> list[tuple[Label, ...]]:
        out: list[tuple[Label, ...]] = []

        def walk(here: int, word: list[Label]):
            if here == y:
                out.append(tuple(word))
                if len(out) > max_chains:
                    raise RuntimeError("chain guard exceeded")
                return
            for label, z in idx.out[here]:
                if z == y or (idx.up[z] >> y) & 1:
                    word.append(label)
                    walk(z, word)
                    word.pop()

        walk(x, [])
        return out

    violations = []
    for x in range(m):
        for y in idx_bits(idx.up[x]):
            words = chains(x, y)
            keyed = [tuple(order.key(l) for l in w) for w in words]
            rising = [w for w, kw in zip(words, keyed)
                      if all(a <= b for a, b in zip(kw, kw[1:]))]
            if len(rising) != 1:
                reason = "no-increasing-chain" if not rising \
                    else "multiple-increasing-chains"
                violations.append((idx.elements[x], idx.elements[y], reason))
            elif tuple(order.key(l) for l in rising[0]) != min(keyed):
                violations.append(
                    (idx.elements[x], idx.elements[y], "increasing-not-lex-min")
                )
    violations.sort()
    return ELReport(applicable=True, is_el=not violations,
                    violations=tuple(violations))


def fpf_decreasing_chain(p: Perm, q: Perm) -> tuple[bool, Chain]:
    """For p < q fixed-point-free, the decreasing ambient chain and
    whether all its interior elements are fixed-point-free too."""
    for w in (p, q):
        if num_fixed_points(w) != 0:
            raise ValueError(f"{w} has fixed points")
    chain = decreasing_chain(p, q)
    holds = all(num_fixed_points(w) == 0 for w in chain.elements[1:-1])
    return holds, chain


def find_escaping_interval(spec: FixedPointSpec, kind: str = "any"
                           ) -> tuple[Perm, Perm, str] | None:
    """A pair p < q in the class whose increasing (or decreasing) chain
    in the ambient involution order has length 2 with its midpoint
    outside the class.

    Only meaningful off the fixed-point-free class: requires counts
    other than {0} and {n}, and a class smaller than all involutions.
    Searches ambient-rank-difference-2 pairs in word order; absence
    within that bound proves nothing beyond it.
    """
    if kind not in ("any", "increasing", "decreasing"):
        raise ValueError(f"bad kind {kind!r}")
    n = spec.n
    if spec.counts == {0}:
        raise ValueError("the fixed-point-free class is excluded")
    if spec.counts == {n}:
        raise ValueError("the one-element class {identity} is excluded")
    elements = enumerate_class(spec)
    if len(elements) == count_involutions(n):
        raise ValueError("the class is the whole involution order")
    by_rank: dict[int, list[Perm]] = {}
    for p in elements:
        by_rank.setdefault(rank_in_involutions(p), []).append(p)
    for r in sorted(by_rank):
        for p in by_rank[r]:
            for q in by_rank.get(r + 2, ()):
                if not bruhat_less(p, q):
                    continue
                if kind in ("any", "increasing"):
                    mid = increasing_chain(p, q).elements[1]
                    if not in_class(mid, spec):
                        return p, q, "increasing"
                if kind in ("any", "decreasing"):
                    mid = decreasing_chain(p, q).elements[1]
                    if not in_class(mid, spec):
                        return p, q, "decreasing"
    return None
