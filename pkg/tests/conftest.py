"""Shared brute-force oracles and small-poset catalogs.

Everything here is deliberately independent of the library's own lattice
machinery: subsets are filtered, bounds are found by full scans, and
posets are generated by filtering raw relations.
"""

from itertools import combinations, product

from posetdual import find_isomorphism, poset_from_relations, random_poset


def upset_masks_bruteforce(poset):
    """All up-sets of a poset by filtering every subset."""
    n = poset.n
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1 and poset.up_masks[i] & ~mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def least_upper_bound_scan(lattice, maps):
    """Order-theoretic LUB: collect all upper bounds, pick the least.

    Returns None if no unique least upper bound exists (never happens in
    a lattice, which is the point of the check).
    """
    ubs = [
        y
        for y in lattice.members
        if all(x.support & ~y.support == 0 for x in maps)
    ]
    least = [
        c for c in ubs if all(c.support & ~u.support == 0 for u in ubs)
    ]
    return least[0] if len(least) == 1 else None


def greatest_lower_bound_scan(lattice, maps):
    lbs = [
        y
        for y in lattice.members
        if all(y.support & ~x.support == 0 for x in maps)
    ]
    greatest = [
        c for c in lbs if all(l.support & ~c.support == 0 for l in lbs)
    ]
    return greatest[0] if len(greatest) == 1 else None


def all_labeled_posets(n):
    """Every partial order on elements 0..n-1, by filtering raw relations.

    Each unordered pair is independently oriented one way, the other, or
    left incomparable; transitivity is then checked directly.
    """
    elements = [f"x{i}" for i in range(n)]
    pairs_idx = list(combinations(range(n), 2))
    posets = []
    for choice in product((0, 1, 2), repeat=len(pairs_idx)):
        rel = [[False] * n for _ in range(n)]
        for i in range(n):
            rel[i][i] = True
        for (i, j), c in zip(pairs_idx, choice):
            if c == 1:
                rel[i][j] = True
            elif c == 2:
                rel[j][i] = True
        transitive = True
        for k in range(n):
            for i in range(n):
                if not rel[i][k]:
                    continue
                for j in range(n):
                    if rel[k][j] and not rel[i][j]:
                        transitive = False
                        break
                if not transitive:
                    break
            if not transitive:
                break
        if not transitive:
            continue
        strict_pairs = [
            (elements[i], elements[j])
            for i in range(n)
            for j in range(n)
            if i != j and rel[i][j]
        ]
        posets.append(poset_from_relations(elements, strict_pairs))
    return posets


def poset_catalog(max_n):
    """Representatives of every isomorphism class on 0..max_n elements."""
    reps = []
    for n in range(max_n + 1):
        classes = []
        for p in all_labeled_posets(n):
            if not any(find_isomorphism(p, q) for q in classes):
                classes.append(p)
        reps.extend(classes)
    return reps


def random_suite(count=200, max_n=6):
    """Deterministic spread of random posets, sizes 0..max_n."""
    out = []
    for seed in range(count):
        n = seed % (max_n + 1)
        density = (seed * 7 % 11) / 10.0
        out.append(random_poset(n, seed, density))
    return out
