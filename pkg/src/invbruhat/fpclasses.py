"""
Conjugation-invariant involution classes selected by fixed-point count.

For a size n and a set A of fixed-point counts (all of n's parity), the
class holds every involution of S_n whose number of fixed points lies
in A, ordered by the induced Bruhat order.  The module provides:

* gradedness, twice over: a brute-force check on the covering graph and
  a closed-form rule on A (graded iff A - {n} is empty or a step-2 run
  {a1, a1+2, ..., a2} with a1 in {0, 1}, or a2 = n - 2, or a2 - a1 >= 2);
* the rank function (inv + exc - n + a~)/2 (+1 when n is in A), where
  a~ = max(A - {n}), valid exactly in the graded cases;
* the unique maximum and the minimal elements of every class;
* two witness constructions producing bottom-to-top chains of unequal
  length in the non-graded cases: one for an isolated count (i in A,
  i-2 and i+2 not in A) and one for a gapped count set (i not in A,
  i-2 and i+2m in A).  Witness chains are re-verified edge by edge
  against the induced order rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bruhat import PosetView, bruhat_leq, bruhat_less, poset_view
from .moves import classify_rise, ct, SUITABLE
from .perms import (
    Perm,
    enumerate_involutions,
    is_involution,
    num_fixed_points,
    statistics,
)


@dataclass(frozen=True)
class FixedPointSpec:
    """A class of involutions: size n plus allowed fixed-point counts."""

    n: int
    counts: frozenset[int]

    @property
    def a_min(self) -> int:
        return min(self.counts)

    @property
    def a_tilde(self) -> int | None:
        """max(A - {n}), the parameter of the rank formula; None for A = {n}."""
        rest = self.counts - {self.n}
        return max(rest) if rest else None

    def run_params(self) -> tuple[int, int] | None:
        """(a1, a2) when A - {n} is the full step-2 run {a1, a1+2, ..., a2}."""
        rest = sorted(self.counts - {self.n})
        if not rest:
            return None
        if any(b - a != 2 for a, b in zip(rest, rest[1:])):
            return None
        return rest[0], rest[-1]

    def describe(self) -> str:
        return f"F_{self.n}^{{{','.join(str(a) for a in sorted(self.counts))}}}"


def make_spec(n: int, counts) -> FixedPointSpec:
    """Validate and build a class description.

    Counts must be nonempty, lie in 0..n, and share n's parity (an
    involution of S_n always has n-congruent fixed-point count mod 2).
    """
    counts = frozenset(counts)
    if n < 1:
        raise ValueError("size must be >= 1")
    if not counts:
        raise ValueError("empty fixed-point count set")
    for a in counts:
        if not 0 <= a <= n:
            raise ValueError(f"count {a} outside 0..{n}")
        if a % 2 != n % 2:
            raise ValueError(f"count {a} has the wrong parity for n = {n}")
    return FixedPointSpec(n=n, counts=counts)


def all_specs(n: int) -> list[FixedPointSpec]:
    """Every valid nonempty count set for size n, in a fixed order."""
    values = list(range(n % 2, n + 1, 2))
    out = []
    for mask in range(1, 1 << len(values)):
        counts = frozenset(v for k, v in enumerate(values) if mask >> k & 1)
        out.append(FixedPointSpec(n=n, counts=counts))
    out.sort(key=lambda s: sorted(s.counts))
    return out


def spec_at_most(n: int, a: int) -> FixedPointSpec:
    """Counts a, a-2, ... down to n's parity floor."""
    return make_spec(n, range(n % 2, a + 1, 2))


def spec_at_least(n: int, a: int) -> FixedPointSpec:
    """Counts a, a+2, ... up to n."""
    return make_spec(n, range(a, n + 1, 2))


def spec_between(n: int, a1: int, a2: int) -> FixedPointSpec:
    """Counts a1, a1+2, ..., a2 (a2 > a1 required)."""
    if a2 <= a1:
        raise ValueError("need a2 > a1")
    return make_spec(n, range(a1, a2 + 1, 2))


def in_class(p: Perm, spec: FixedPointSpec) -> bool:
    return (
        len(p) == spec.n
        and is_involution(p)
        and num_fixed_points(p) in spec.counts
    )


@lru_cache(maxsize=None)
def _class_elements(n: int, counts: frozenset[int]) -> tuple[Perm, ...]:
    return tuple(
        p for p in enumerate_involutions(n) if num_fixed_points(p) in counts
    )


def enumerate_class(spec: FixedPointSpec) -> tuple[Perm, ...]:
    """The class elements in lexicographic word order."""
    return _class_elements(spec.n, spec.counts)


def class_view(spec: FixedPointSpec) -> PosetView:
    """Covering graph of the induced order on the class."""
    return poset_view(enumerate_class(spec))


@dataclass(frozen=True)
class GradedReport:
    graded: bool
    ranks: dict[Perm, int] | None


def is_graded_bruteforce(view: PosetView) -> GradedReport:
    """Check that all maximal chains of ``view`` have equal length.

    Works on the covering graph: the poset is graded iff the longest and
    shortest cover-paths from minimal elements agree at every element
    and all maximal elements sit at the same height.  The memoised walk
    is linear in the number of covering edges, so arbitrarily chain-rich
    posets stay cheap.  When graded, returns the unique rank map sending
    minimal elements to 0.
    """
    below: dict[Perm, list[Perm]] = {x: [] for x in view.elements}
    above: dict[Perm, list[Perm]] = {x: [] for x in view.elements}
    for a, b in view.covers:
        below[b].append(a)
        above[a].append(b)

    down_min: dict[Perm, int] = {}
    down_max: dict[Perm, int] = {}
    pending = dict.fromkeys(view.elements)  # preserves element order
    while pending:
        progressed = False
        for x in list(pending):
            if all(y in down_min for y in below[x]):
                lows = [down_min[y] for y in below[x]]
                highs = [down_max[y] for y in below[x]]
                down_min[x] = 1 + min(lows) if lows else 0
                down_max[x] = 1 + max(highs) if highs else 0
                del pending[x]
                progressed = True
        if not progressed:
            raise ValueError("covering graph has a cycle; not a poset view")

    if any(down_min[x] != down_max[x] for x in view.elements):
        return GradedReport(graded=False, ranks=None)
    top_ranks = {down_min[x] for x in view.elements if not above[x]}
    if len(top_ranks) > 1:
        return GradedReport(graded=False, ranks=None)
    return GradedReport(graded=True, ranks=dict(down_min))


def is_graded_rule(spec: FixedPointSpec) -> bool:
    """Closed-form gradedness rule on the count set alone."""
    run = spec.run_params()
    if spec.counts == {spec.n}:
        return True
    if run is None:
        return False
    a1, a2 = run
    return a1 in (0, 1) or a2 == spec.n - 2 or a2 - a1 >= 2


def rank_in_involutions(p: Perm) -> int:
    """Rank of an involution in the full involution order: (inv + exc)/2."""
    if not is_involution(p):
        raise ValueError(f"not an involution: {p}")
    inv, exc, _ = statistics(p)
    assert (inv + exc) % 2 == 0
    return (inv + exc) // 2


def rank_value(p: Perm, spec: FixedPointSpec) -> int:
    """Class rank of p: (inv + exc - n + a~)/2, plus 1 when n is in A.

    Defined only for graded classes other than {identity}; refuses
    service otherwise since no canonical rank exists.  When the identity
    belongs to the class it is the unique minimum and sits at rank 0;
    the shifted formula covers every other element (evaluating it at the
    identity would go negative once a~ < n - 2).
    """
    if not in_class(p, spec):
        raise ValueError(f"{p} is not in {spec.describe()}")
    if spec.a_tilde is None:
        raise ValueError(
            "rank formula needs max(A - {n}); the one-element class "
            "{identity} is graded of rank 0 by convention"
        )
    if not is_graded_rule(spec):
        raise ValueError(f"{spec.describe()} is not graded; no rank function")
    if spec.n in spec.counts and num_fixed_points(p) == spec.n:
        return 0
    inv, exc, _ = statistics(p)
    numerator = inv + exc - spec.n + spec.a_tilde
    assert numerator % 2 == 0
    return numerator // 2 + (1 if spec.n in spec.counts else 0)


def poset_rank(spec: FixedPointSpec) -> int:
    """Rank of the whole graded class: the class rank of its maximum."""
    if spec.counts == {spec.n}:
        return 0
    return rank_value(top_element(spec), spec)


def top_element(spec: FixedPointSpec) -> Perm:
    """The unique Bruhat maximum of the class.

    With a = min A, alpha = (n-a)/2 and beta = (n+a)/2, the word is
    n (n-1) ... (beta+1) | (alpha+1) ... beta | alpha ... 1: the longest
    word on the outer letters around a middle block of fixed points.
    """
    n, a = spec.n, spec.a_min
    alpha, beta = (n - a) // 2, (n + a) // 2
    word = list(range(n, beta, -1)) + list(range(alpha + 1, beta + 1)) \
        + list(range(alpha, 0, -1))
    return tuple(word)


def minimal_elements(spec: FixedPointSpec) -> tuple[Perm, ...]:
    """All minimal elements of the induced order on the class."""
    elements = enumerate_class(spec)
    return tuple(
        x for x in elements
        if not any(bruhat_less(y, x) for y in elements)
    )


@dataclass(frozen=True)
class WitnessReport:
    """Two verified bottom-to-top chains of different lengths in a class."""

    spec: FixedPointSpec
    bottom: Perm
    top: Perm
    long_chain: tuple[Perm, ...]
    short_chain: tuple[Perm, ...]


def _pad(core: list[int], n: int, i: int) -> Perm:
    """Extend a core word: letters k+1..k+i-2 fixed, the rest swapped in
    adjacent pairs, so the total fixed-point count grows by i - 2."""
    k = len(core)
    word = list(core) + list(range(k + 1, k + i - 1))
    v = k + i - 1
    while v < n:
        word.extend((v + 1, v))
        v += 2
    if len(word) != n:
        raise ValueError(f"padding of core size {k} does not reach n = {n}")
    return tuple(word)


def _verify_class_chain(chain, elements) -> None:
    """Assert a chain is saturated in the induced order on ``elements``."""
    pool = set(elements)
    for x in chain:
        if x not in pool:
            raise AssertionError(f"chain element {x} is outside the class")
    for x, y in zip(chain, chain[1:]):
        if not bruhat_less(x, y):
            raise AssertionError(f"chain step {x} -> {y} is not an order step")
        for z in elements:
            if z != x and z != y and bruhat_less(x, z) and bruhat_less(z, y):
                raise AssertionError(
                    f"chain step {x} -> {y} is not a cover: {z} lies between"
                )


def isolated_count_witness(n: int, i: int) -> WitnessReport:
    """Unequal-length chains in the class with counts {i}, for an
    isolated count: 2 <= i <= n - 4 and i of n's parity.

    The size-6 core interval carries a length-3 chain and a length-2
    chain; padding with fixed letters and swapped pairs lifts it to any
    valid (n, i).
    """
    if not 2 <= i <= n - 4:
        raise ValueError(f"need 2 <= i <= n - 4, got i = {i}, n = {n}")
    if i % 2 != n % 2:
        raise ValueError(f"count {i} has the wrong parity for n = {n}")
    cores = {
        "bottom": [1, 2, 4, 3, 6, 5],
        "top": [4, 2, 6, 1, 5, 3],
        "long": [[1, 2, 4, 3, 6, 5], [1, 4, 3, 2, 6, 5],
                 [4, 2, 3, 1, 6, 5], [4, 2, 6, 1, 5, 3]],
        "short": [[1, 2, 4, 3, 6, 5], [2, 1, 6, 4, 5, 3], [4, 2, 6, 1, 5, 3]],
    }
    spec = make_spec(n, {i})
    long_chain = tuple(_pad(w, n, i) for w in cores["long"])
    short_chain = tuple(_pad(w, n, i) for w in cores["short"])
    elements = enumerate_class(spec)
    _verify_class_chain(long_chain, elements)
    _verify_class_chain(short_chain, elements)
    return WitnessReport(
        spec=spec,
        bottom=_pad(cores["bottom"], n, i),
        top=_pad(cores["top"], n, i),
        long_chain=long_chain,
        short_chain=short_chain,
    )


def gapped_counts_witness(n: int, i: int, m: int) -> WitnessReport:
    """Unequal-length chains in the class with counts {i-2, i+2m}, for a
    gapped count set: i is skipped while i - 2 and i + 2m are allowed.

    On the core letters 1..k, k = 2m + 4, the long chain applies k - 2
    moves through fixed-point-preserving rises; the short chain jumps
    via the fixed-point-free pairing of adjacent letters.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if i < 2:
        raise ValueError("need i >= 2")
    if i % 2 != n % 2:
        raise ValueError(f"count {i} has the wrong parity for n = {n}")
    k = 2 * m + 4
    if n < k + i - 2:
        raise ValueError(f"need n >= 2m + i + 2 = {k + i - 2}, got n = {n}")

    sigma = list(range(1, k - 1)) + [k, k - 1]
    tau = [k] + list(range(2, k)) + [1]
    long_core = [tuple(sigma)]
    for a in range(k - 2, 0, -1):
        long_core.append(ct(long_core[-1], (a, a + 1)))
    if long_core[-1] != tuple(tau):
        raise AssertionError("long-chain moves do not reach the interval top")
    pi = tuple(sigma)
    for a in range(1, k - 2, 2):
        pi = ct(pi, (a, a + 1))  # pair the fixed letters adjacently
    short_core = [tuple(sigma), pi, tuple(tau)]

    spec = make_spec(n, {i - 2, i + 2 * m})
    long_chain = tuple(_pad(list(w), n, i) for w in long_core)
    short_chain = tuple(_pad(list(w), n, i) for w in short_core)
    elements = enumerate_class(spec)
    _verify_class_chain(long_chain, elements)
    _verify_class_chain(short_chain, elements)
    return WitnessReport(
        spec=spec,
        bottom=_pad(sigma, n, i),
        top=_pad(tau, n, i),
        long_chain=long_chain,
        short_chain=short_chain,
    )
