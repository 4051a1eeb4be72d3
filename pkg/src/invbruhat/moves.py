"""
Rise classification and covering moves on involutions.

For an involution w, a pair i < j with w(i) < w(j) is a rise; it is free
when no k strictly between i and j has w(k) strictly between w(i) and
w(j).  A free rise is suitable when the pattern of (i, j), each point
being a fixed point (f), exceedance (e), or deficiency (d), is one of

    ff    fe    ef    ee non-crossing    ee crossing    ed
    T1    T2    T3    T4                 T5             T6

where an ee rise is crossing iff w(i) < j.  Free rises with a deficiency
first, or pattern fd, fit none of the six shapes and yield no move.

Each suitable rise defines a covering move ``ct`` producing the upper
cover of w obtained by composing w with a short cycle (cycle applied
first, so ct(w)(x) = w(c(x))):

    T1: c = (i j)            T2: c = (i j w(j))     T3: c = (i j w(i))
    T4: c = (i j)(w(i) w(j)) T5: c = (i j w(j) w(i)) T6: c = (i j)(w(i) w(j))

``covers`` lists all moves of w; ``ict`` inverts a move when a preimage
exists.  The moves generate exactly the covering relation of the Bruhat
order on involutions, which the test suite checks against an
order-theoretic oracle.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .perms import Perm, is_involution

Label = tuple[int, int]


class RiseClass(Enum):
    NOT_A_RISE = "not-a-rise"
    NON_FREE = "non-free-rise"
    UNSUITABLE = "free-unsuitable-rise"
    TYPE1_FF = "type1-ff"
    TYPE2_FE = "type2-fe"
    TYPE3_EF = "type3-ef"
    TYPE4_EE_NONCROSSING = "type4-ee-noncrossing"
    TYPE5_EE_CROSSING = "type5-ee-crossing"
    TYPE6_ED = "type6-ed"


SUITABLE = frozenset({
    RiseClass.TYPE1_FF,
    RiseClass.TYPE2_FE,
    RiseClass.TYPE3_EF,
    RiseClass.TYPE4_EE_NONCROSSING,
    RiseClass.TYPE5_EE_CROSSING,
    RiseClass.TYPE6_ED,
})


def _check_label(p: Perm, label: Label) -> None:
    i, j = label
    if not (1 <= i < j <= len(p)):
        raise ValueError(f"bad index pair {label} for size {len(p)}")


def classify_rise(p: Perm, label: Label) -> RiseClass:
    """Classify the pair ``label`` = (i, j), i < j, for the involution p."""
    if not is_involution(p):
        raise ValueError(f"not an involution: {p}")
    _check_label(p, label)
    i, j = label
    vi, vj = p[i - 1], p[j - 1]
    if vi >= vj:
        return RiseClass.NOT_A_RISE
    if any(vi < p[k - 1] < vj for k in range(i + 1, j)):
        return RiseClass.NON_FREE
    first = "f" if vi == i else ("e" if vi > i else "d")
    second = "f" if vj == j else ("e" if vj > j else "d")
    pattern = first + second
    if pattern == "ff":
        return RiseClass.TYPE1_FF
    if pattern == "fe":
        return RiseClass.TYPE2_FE
    if pattern == "ef":
        return RiseClass.TYPE3_EF
    if pattern == "ee":
        return RiseClass.TYPE5_EE_CROSSING if vi < j else RiseClass.TYPE4_EE_NONCROSSING
    if pattern == "ed":
        return RiseClass.TYPE6_ED
    return RiseClass.UNSUITABLE


def _apply_cycles(p: Perm, *cycles: tuple[int, ...]) -> Perm:
    """Compose p with the given cycles applied first: result(x) = p(c(x))."""
    image = {}
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a] = b
    word = list(p)
    for x, cx in image.items():
        word[x - 1] = p[cx - 1]
    return tuple(word)


def ct(p: Perm, label: Label) -> Perm:
    """Apply the covering move at a suitable rise; the result covers p."""
    kind = classify_rise(p, label)
    if kind not in SUITABLE:
        raise ValueError(f"{label} is not a suitable rise of {p}: {kind.value}")
    i, j = label
    vi, vj = p[i - 1], p[j - 1]
    if kind is RiseClass.TYPE1_FF:
        return _apply_cycles(p, (i, j))
    if kind is RiseClass.TYPE2_FE:
        return _apply_cycles(p, (i, j, vj))
    if kind is RiseClass.TYPE3_EF:
        return _apply_cycles(p, (i, j, vi))
    if kind is RiseClass.TYPE5_EE_CROSSING:
        return _apply_cycles(p, (i, j, vj, vi))
    # T4 and T6 share the double-transposition shape.
    return _apply_cycles(p, (i, j), (vi, vj))


@lru_cache(maxsize=None)
def covers(p: Perm) -> tuple[tuple[Label, Perm], ...]:
    """All covering moves of p, sorted by label: the upper covers of p
    in the Bruhat order on involutions."""
    if not is_involution(p):
        raise ValueError(f"not an involution: {p}")
    n = len(p)
    out = []
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if classify_rise(p, (i, j)) in SUITABLE:
                out.append(((i, j), ct(p, (i, j))))
    return tuple(out)


def cover_map(p: Perm) -> dict[Perm, Label]:
    """Upper cover -> label.  Each cover arises from exactly one label."""
    out: dict[Perm, Label] = {}
    for label, q in covers(p):
        if q in out:
            raise AssertionError(f"two labels produce the same cover of {p}")
        out[q] = label
    return out


def _ict_candidates(q: Perm, label: Label):
    """Candidate preimages of q under a move at ``label``, one per move
    shape.  Inverting each shape determines the preimage from q's values
    at i, j, except that shapes T3 and T5 leave one point to recover by
    scanning the fixed points of q strictly between i and j."""
    i, j = label
    qi, qj = q[i - 1], q[j - 1]
    yield _apply_cycles(q, (i, j))                      # T1
    if qi > j:
        yield _apply_cycles(q, (qi, j, i))              # T2: w(j) = q(i)
    if len({i, j, qi, qj}) == 4:
        yield _apply_cycles(q, (i, j), (qj, qi))        # T4/T6: w(i)=q(j), w(j)=q(i)
    for mid in range(i + 1, j):
        if q[mid - 1] == mid:
            yield _apply_cycles(q, (mid, j, i))          # T3: w(i) = mid
            if qi > j:
                yield _apply_cycles(q, (mid, qi, j, i))  # T5: w(i)=mid, w(j)=q(i)


def ict(q: Perm, label: Label) -> Perm | None:
    """The unique involution p with ct(p, label) = q, or None.

    ``label`` must be an inversion of q; every candidate preimage is
    validated by replaying the forward move.
    """
    if not is_involution(q):
        raise ValueError(f"not an involution: {q}")
    _check_label(q, label)
    i, j = label
    if q[i - 1] <= q[j - 1]:
        raise ValueError(f"{label} is not an inversion of {q}")
    found: set[Perm] = set()
    for p in _ict_candidates(q, label):
        if p in found or not is_involution(p):
            continue
        if classify_rise(p, label) in SUITABLE and ct(p, label) == q:
            found.add(p)
    if len(found) > 1:
        raise AssertionError(f"move at {label} into {q} has several preimages")
    return found.pop() if found else None


def ict_bruteforce(q: Perm, label: Label, universe) -> Perm | None:
    """Oracle for ict: scan an explicit set of involutions."""
    found = [p for p in universe
             if classify_rise(p, label) in SUITABLE and ct(p, label) == q]
    if len(found) > 1:
        raise AssertionError(f"move at {label} into {q} has several preimages")
    return found[0] if found else None
