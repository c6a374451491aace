"""Finite posets as bitmask up-sets, plus construction and test utilities.

Elements are indexed 0..n-1 in list order; the order relation is stored as
one "up-mask" per element (the bitmask of everything greater or equal), so
leq is a single bit test and up-set checks are word-parallel.
"""

import random
from dataclasses import dataclass, field

from .errors import (
    CycleDetectedError,
    DuplicateElementError,
    TooLargeError,
    UnknownElementError,
)

DEFAULT_MAX_ELEMENTS = 64


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """Immutable finite partially ordered set.

    up_masks[i] holds the bitmask of indices j with element i <= element j
    (always including i itself). Instances compare by identity; all
    operations on them are pure.
    """

    elements: tuple
    up_masks: tuple
    _index: dict = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {e: i for i, e in enumerate(self.elements)}
        )

    @property
    def n(self):
        return len(self.elements)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def index(self, element):
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElementError(f"unknown element: {element!r}") from None

    def leq_index(self, i, j):
        return bool(self.up_masks[i] >> j & 1)

    def up_mask(self, element):
        """Bitmask of everything >= element."""
        return self.up_masks[self.index(element)]

    def down_mask(self, element):
        """Bitmask of everything <= element."""
        j = self.index(element)
        mask = 0
        for i in range(self.n):
            if self.up_masks[i] >> j & 1:
                mask |= 1 << i
        return mask

    def strict_down_mask(self, element):
        return self.down_mask(element) & ~(1 << self.index(element))


@dataclass(frozen=True)
class CoverRelation:
    """Hasse diagram: the transitive reduction of a poset's order."""

    pairs: tuple


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _transitive_closure(up):
    n = len(up)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in _bits(acc):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return up


def poset_from_relations(elements, pairs, max_elements=DEFAULT_MAX_ELEMENTS):
    """Build a poset from generating pairs (lower, upper).

    The result is the reflexive-transitive closure of the pairs. Raises
    CycleDetectedError if the closure violates antisymmetry, reporting the
    lexicographically smallest 2-cycle.
    """
    elements = tuple(elements)
    seen = set()
    for e in elements:
        if e in seen:
            raise DuplicateElementError(f"duplicate element: {e!r}")
        seen.add(e)
    if len(elements) > max_elements:
        raise TooLargeError(
            f"poset has {len(elements)} elements, cap is {max_elements}"
        )
    index = {e: i for i, e in enumerate(elements)}
    up = [1 << i for i in range(len(elements))]
    for lower, upper in pairs:
        if lower not in index:
            raise UnknownElementError(f"unknown element: {lower!r}")
        if upper not in index:
            raise UnknownElementError(f"unknown element: {upper!r}")
        up[index[lower]] |= 1 << index[upper]
    _transitive_closure(up)

    cycles = []
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if up[i] >> j & 1 and up[j] >> i & 1:
                cycles.append(tuple(sorted((elements[i], elements[j]))))
    if cycles:
        raise CycleDetectedError(min(cycles))

    return FinitePoset(elements, tuple(up))


def leq(poset, a, b):
    """Whether a <= b in the poset."""
    return poset.leq_index(poset.index(a), poset.index(b))


def transitive_reduction(poset):
    """Minimal cover pairs whose closure reproduces the poset."""
    n = poset.n
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not poset.leq_index(i, j):
                continue
            # (i, j) is a cover unless some k sits strictly between.
            between = poset.up_masks[i] & ~(1 << i) & ~(1 << j)
            if not any(poset.leq_index(k, j) for k in _bits(between)):
                covers.append((poset.elements[i], poset.elements[j]))
    covers.sort()
    return CoverRelation(tuple(covers))


def is_monotone(poset, f):
    """Whether the 0/1-valued map f respects the order."""
    for i in range(poset.n):
        if not f[poset.elements[i]]:
            continue
        # f(i) = 1, so everything above i must also map to 1
        for j in _bits(poset.up_masks[i]):
            if not f[poset.elements[j]]:
                return False
    return True


def _signature(poset, i):
    return (
        bin(poset.up_masks[i]).count("1"),
        bin(poset.down_mask(poset.elements[i])).count("1"),
    )


def find_isomorphism(p, q):
    """Order isomorphism p -> q as an element dict, or None.

    Backtracking over assignments, pruned by (up-set size, down-set size)
    signatures; exact, intended for small posets.
    """
    if p.n != q.n:
        return None
    sig_p = [_signature(p, i) for i in range(p.n)]
    sig_q = [_signature(q, i) for i in range(q.n)]
    if sorted(sig_p) != sorted(sig_q):
        return None

    # Assign the most constrained (rarest signature) elements first.
    order = sorted(range(p.n), key=lambda i: (sig_p[i], i))
    assign = [None] * p.n
    used = [False] * q.n

    def extend(k):
        if k == p.n:
            return True
        i = order[k]
        for j in range(q.n):
            if used[j] or sig_p[i] != sig_q[j]:
                continue
            ok = True
            for k2 in range(k):
                i2 = order[k2]
                j2 = assign[i2]
                if (
                    p.leq_index(i, i2) != q.leq_index(j, j2)
                    or p.leq_index(i2, i) != q.leq_index(j2, j)
                ):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                assign[i] = None
                used[j] = False
        return False

    if not extend(0):
        return None
    return {p.elements[i]: q.elements[assign[i]] for i in range(p.n)}


def random_poset(n, seed, density, max_elements=DEFAULT_MAX_ELEMENTS):
    """Reproducible random poset on elements e0..e{n-1}.

    Samples each strict upper-triangular pair (in index order) with the
    given probability, then takes the transitive closure; never cyclic.
    """
    rng = random.Random(seed)
    elements = [f"e{i}" for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                pairs.append((elements[i], elements[j]))
    return poset_from_relations(elements, pairs, max_elements=max_elements)
