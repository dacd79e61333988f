"""Shared oracles and random generators for the test suite."""

import itertools

from arfcurves.errors import ValidationError
from arfcurves.mult_tree import (MultiplicityTree, tree_intersection,
                                 tree_to_semigroup)
from arfcurves.numerical import MultiplicitySequence, arf_closure, semigroup_to_seq


def xyz_closure_oracle(generators):
    """Close <G> under x + y - z (x >= y >= z members) inside [0, 2*max(G)]."""
    top = 2 * max(generators)
    member = [False] * (top + 1)
    member[0] = True
    for n in range(1, top + 1):
        member[n] = any(g <= n and member[n - g] for g in generators)
    changed = True
    while changed:
        changed = False
        members = [n for n in range(top + 1) if member[n]]
        for y in members:
            for z in members:
                if z > y:
                    break
                for x in members:
                    if x < y:
                        continue
                    t = x + y - z
                    if t <= top and not member[t]:
                        member[t] = True
                        changed = True
    return [n for n in range(top + 1) if member[n]]


def random_arf_sequence(rng, max_len=5, max_entry=9):
    """Random valid multiplicity sequence, built from the tail upward."""
    tail = [1] * (max_entry + 1)
    length = rng.randrange(max_len + 1)
    for _ in range(length):
        k = rng.randrange(1, max_entry)
        e = sum(tail[:k])
        if e > max_entry:
            e = tail[0]
        tail.insert(0, e)
    return MultiplicitySequence(tail)


def random_tree(rng, d_max=3, max_len=4, max_entry=6, split_max=4):
    """Random valid multiplicity tree, by rejection on the subtree-sum check."""
    d = rng.randint(1, d_max)
    while True:
        branches = [random_arf_sequence(rng, max_len, max_entry) for _ in range(d)]
        splits = [rng.randint(0, split_max) for _ in range(d - 1)]
        try:
            return MultiplicityTree(branches, splits)
        except ValidationError:
            continue


def enumerate_smallest_arf(V):
    """Intersection of every tree semigroup over the coordinate closures that
    contains V, enumerated over all split vectors below the depth bound."""
    vectors = [tuple(v) for v in V if any(v)]
    d = len(vectors[0])
    branches = [semigroup_to_seq(arf_closure([v[j] for v in vectors]))
                for j in range(d)]

    def index_of(j, value):
        k = 0
        while branches[j].prefix_sum(k + 1) < value:
            k += 1
        return k

    N = max(index_of(j, v[j]) for v in vectors for j in range(d)) + 1
    best = None
    for splits in itertools.product(range(N), repeat=d - 1):
        try:
            tree = MultiplicityTree(branches, splits)
        except ValidationError:
            continue
        semi = tree_to_semigroup(tree)
        if all(semi.contains(v) for v in vectors):
            best = tree if best is None else tree_intersection(best, tree)
    return tree_to_semigroup(best)
