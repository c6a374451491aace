"""Bound-preserving complete-lattice homomorphisms from a dual lattice to
the two-element chain, and the round trip back to the base poset.

A valid hom is determined by the top of its kernel (the sup of the
preimage of 0), so homs are stored by that single member; comparing homs
is then one mask comparison.
"""

from dataclasses import dataclass

from .errors import (
    BaseMismatchError,
    NoWitnessError,
    TooLargeError,
)
from .poset import _bits
from .dual import enumerate_dual, lambda_of

DEFAULT_BRUTEFORCE_CAP = 20
DEFAULT_DEFINITION_CAP = 16


@dataclass(frozen=True)
class BoundedHom:
    """A lattice hom to {0, 1}, stored by the sup of its zero-preimage."""

    lattice: object
    kernel_top: object

    def value(self, x):
        self.lattice.check_member(x)
        return 0 if x.support & ~self.kernel_top.support == 0 else 1

    def values(self):
        """Value at every member, in canonical member order."""
        return tuple(self.value(x) for x in self.lattice.members)


def hom_leq(g, h):
    """Pointwise order on homs: reverse inclusion of kernel ideals."""
    if g.lattice is not h.lattice:
        raise BaseMismatchError("homs over different lattices")
    return h.kernel_top.support & ~g.kernel_top.support == 0


def _ones_mask_ok(lattice, ones_mask):
    # Pairwise form of the hom conditions on the map whose preimage of 1
    # is the given member-index mask: bounds, zero side downward closed
    # and join closed, one side meet closed (upward closure follows).
    m = len(lattice.members)
    if ones_mask & 1:
        return False  # bottom must map to 0
    if not ones_mask >> (m - 1) & 1:
        return False  # top must map to 1
    down, _ = lattice._intervals()
    zeros_mask = lattice.full_member_mask & ~ones_mask
    members = lattice.members
    index_of = lattice._member_index

    zeros = []
    mm = zeros_mask
    while mm:
        low = mm & -mm
        i = low.bit_length() - 1
        if down[i] & ones_mask:
            return False
        zeros.append(i)
        mm ^= low
    for a, i in enumerate(zeros):
        si = members[i].support
        for j in zeros[a + 1:]:
            if ones_mask >> index_of[si | members[j].support] & 1:
                return False
    ones = list(_bits(ones_mask))
    for a, i in enumerate(ones):
        si = members[i].support
        for j in ones[a + 1:]:
            if not ones_mask >> index_of[si & members[j].support] & 1:
                return False
    return True


def is_bounded_complete_hom(lattice, values):
    """Check a candidate map (values per member, canonical order).

    Uses bound checks plus pairwise join/meet preservation; in a finite
    lattice this is equivalent to preserving arbitrary sups and infs
    (see satisfies_hom_definition, kept as the definitional oracle).
    """
    ones_mask = 0
    for i, v in enumerate(values):
        if v:
            ones_mask |= 1 << i
    return _ones_mask_ok(lattice, ones_mask)


def satisfies_hom_definition(lattice, values, max_members=DEFAULT_DEFINITION_CAP):
    """Definitional hom check: every subset's sup and inf are preserved.

    Exponential in the member count; this is the oracle the faster
    pairwise check is validated against.
    """
    m = len(lattice.members)
    if m > max_members:
        raise TooLargeError(
            f"definitional hom check over {m} members exceeds cap {max_members}"
        )
    members = lattice.members
    index_of = lattice._member_index
    if values[0] != 0 or values[m - 1] != 1:
        return False
    for subset in range(1 << m):
        union = 0
        inter = lattice.base.full_mask
        vmax = 0
        vmin = 1
        for i in _bits(subset):
            union |= members[i].support
            inter &= members[i].support
            vmax = max(vmax, values[i])
            vmin = min(vmin, values[i])
        if values[index_of[union]] != vmax:
            return False
        if values[index_of[inter]] != vmin:
            return False
    return True


def _hom_from_ones_mask(lattice, ones_mask):
    union = 0
    for i in _bits(lattice.full_member_mask & ~ones_mask):
        union |= lattice.members[i].support
    kernel_top = lattice.members[lattice.index_of_support(union)]
    return BoundedHom(lattice, kernel_top)


def enumerate_second_dual_bruteforce(lattice, cap=DEFAULT_BRUTEFORCE_CAP):
    """All valid homs, found by filtering every 2-valued map on members.

    Canonically ordered by kernel top. Independent of the evaluation-hom
    construction; this is the oracle side of the isomorphism check.
    """
    m = len(lattice.members)
    if m > cap:
        raise TooLargeError(
            f"brute-force hom enumeration over {m} members exceeds cap {cap}"
        )
    homs = []
    # Bottom must map to 0, so only even ones-masks can qualify.
    for ones_mask in range(0, 1 << m, 2):
        if _ones_mask_ok(lattice, ones_mask):
            homs.append(_hom_from_ones_mask(lattice, ones_mask))
    homs.sort(key=lambda h: lattice.member_index(h.kernel_top))
    return homs


def evaluation_hom(lattice, element):
    """The hom sending each member to its value at the given base element."""
    bit = 1 << lattice.base.index(element)
    union = 0
    for x in lattice.members:
        if not x.support & bit:
            union |= x.support
    kernel_top = lattice.members[lattice.index_of_support(union)]
    return BoundedHom(lattice, kernel_top)


def point_of_hom(lattice, hom):
    """Recover the base element whose evaluation hom this is."""
    if hom.lattice is not lattice:
        raise BaseMismatchError("hom over a different lattice")
    for p in lattice.base.elements:
        if lambda_of(lattice, p).support == hom.kernel_top.support:
            return p
    raise NoWitnessError(
        f"no base element matches kernel top {hom.kernel_top.support_elements()}"
    )


@dataclass(frozen=True)
class IsomorphismReport:
    """Outcome of checking base <-> second dual round trips and order."""

    forward: dict
    backward: dict
    round_trip_ok: bool
    order_preserved_ok: bool
    brute_force_matched: object  # True/False, or None when skipped
    failures: tuple = ()

    @property
    def ok(self):
        return (
            self.round_trip_ok
            and self.order_preserved_ok
            and self.brute_force_matched is not False
        )


def verify_isomorphism(
    poset,
    use_bruteforce=False,
    max_members=None,
    bruteforce_cap=DEFAULT_BRUTEFORCE_CAP,
):
    """Build the second dual over the poset and check it mirrors the poset.

    Checks the round trip (recovering each element from its evaluation
    hom), the order embedding in both directions, and, when requested and
    small enough, that the evaluation homs are exactly the brute-force
    enumerated ones. Failures are reported, not raised.
    """
    if max_members is None:
        lattice = enumerate_dual(poset)
    else:
        lattice = enumerate_dual(poset, max_members=max_members)
    failures = []

    forward = {p: evaluation_hom(lattice, p) for p in poset.elements}

    backward = {}
    round_trip_ok = True
    for p, hom in forward.items():
        try:
            q = point_of_hom(lattice, hom)
        except NoWitnessError:
            q = None
        backward[hom] = q
        if q != p:
            round_trip_ok = False
            failures.append(f"round trip broke at {p!r} (got {q!r})")

    order_preserved_ok = True
    for p in poset.elements:
        for q in poset.elements:
            expected = poset.leq_index(poset.index(p), poset.index(q))
            if hom_leq(forward[p], forward[q]) != expected:
                order_preserved_ok = False
                failures.append(f"order embedding broke at ({p!r}, {q!r})")

    brute_force_matched = None
    if use_bruteforce and len(lattice) <= bruteforce_cap:
        enumerated = enumerate_second_dual_bruteforce(lattice, cap=bruteforce_cap)
        brute_force_matched = set(enumerated) == set(forward.values())
        if not brute_force_matched:
            failures.append(
                f"brute force found {len(enumerated)} homs, "
                f"evaluation gives {len(forward)}"
            )

    return IsomorphismReport(
        forward=forward,
        backward=backward,
        round_trip_ok=round_trip_ok,
        order_preserved_ok=order_preserved_ok,
        brute_force_matched=brute_force_matched,
        failures=tuple(failures),
    )
