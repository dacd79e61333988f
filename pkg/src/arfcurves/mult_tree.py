"""Multiplicity trees of N^d: validity, tree/semigroup conversion, pinching
order, split profiles, intersection and canonical form.

A tree is encoded by its d branch multiplicity sequences plus the split
levels of the d-1 consecutive branch pairs: splits[j] is the level of the
branching node of branches j+1 and j+2 (1-based), so the pair shares one
node per level i <= splits[j] and is separate afterwards.  Glued branch
groups are intervals of consecutive indices and gluing is downward closed,
hence the split level of an arbitrary pair is the minimum of the
consecutive split levels between them.
"""

import itertools

import numpy as np

from .errors import DomainError, ValidationError
from .good_semigroup import (GoodSemigroup, is_arf_good, is_local,
                             plane_projection, projection, residue)
from .numerical import MultiplicitySequence, decomposition_lengths, semigroup_to_seq


class MultiplicityTree:
    """Leveled tree of multiplicity vectors encoding a local Arf semigroup of N^d."""

    __slots__ = ("branches", "splits")

    def __init__(self, branches, splits=(), validate=True):
        seqs = tuple(b if isinstance(b, MultiplicitySequence)
                     else MultiplicitySequence(b) for b in branches)
        if not seqs:
            raise ValidationError("a tree needs at least one branch")
        self.branches = seqs
        self.splits = tuple(int(s) for s in splits)
        if len(self.splits) != len(seqs) - 1:
            raise ValidationError("expected %d split levels for %d branches, got %d"
                                  % (len(seqs) - 1, len(seqs), len(self.splits)))
        if any(s < 0 for s in self.splits):
            raise ValidationError("split levels must be natural numbers")
        if validate:
            failure = _condition_c_failure(self.branches, self.splits)
            if failure is not None:
                i, j, h = failure
                raise ValidationError(
                    "condition c fails at the level-%d node of branches %d-%d"
                    % (i, j + 1, h + 1))

    @property
    def d(self):
        return len(self.branches)

    @property
    def stable_level(self):
        """First level from which every node vector is a unit vector."""
        levels = [len(seq.prefix) for seq in self.branches]
        levels.extend(s + 1 for s in self.splits)
        return max(levels, default=0)

    def pair_split(self, j, h):
        """Level of the branching node of branches j and h (0-based, j != h)."""
        lo, hi = min(j, h), max(j, h)
        return min(self.splits[lo:hi])

    def groups(self, level):
        """Glued branch groups at a level, as 0-based index ranges."""
        out = []
        start = 0
        for j in range(self.d - 1):
            if self.splits[j] < level:
                out.append(range(start, j + 1))
                start = j + 1
        out.append(range(start, self.d))
        return out

    def node_vector(self, level, group):
        return tuple(self.branches[h].entry(level) if h in group else 0
                     for h in range(self.d))

    def __eq__(self, other):
        return (isinstance(other, MultiplicityTree)
                and self.branches == other.branches
                and self.splits == other.splits)

    def __hash__(self):
        return hash(("MultiplicityTree", self.branches, self.splits))

    def __repr__(self):
        return "MultiplicityTree(%r, splits=%r)" % (
            [list(seq.prefix) for seq in self.branches], list(self.splits))


def _condition_c_failure(branches, splits):
    """First (level, j, h) where a node vector is not a rooted-subtree sum.

    A node at level i glued over branches j..h forces subtree depth
    i + k_i per branch; the depths coexist in one subtree iff equal or the
    pair splits no later than the shallower forced depth.
    """
    d = len(branches)
    ks = [decomposition_lengths(seq) for seq in branches]

    def k(j, i):
        return ks[j][i] if i < len(ks[j]) else 1

    top = max((min(splits[j:h]) for j in range(d) for h in range(j + 1, d)),
              default=-1)
    top = min(top, max((len(table) for table in ks), default=0))
    for i in range(top + 1):
        for j in range(d):
            for h in range(j + 1, d):
                s = min(splits[j:h])
                if i > s:
                    continue
                kj, kh = k(j, i), k(h, i)
                if kj != kh and s > i + min(kj, kh):
                    return (i, j, h)
    return None


def validate_tree(candidate):
    """Check tree validity; returns (True, None) or (False, message).

    Accepts a MultiplicityTree (checks the subtree-sum condition; the
    encoding guarantees the structural conditions) or a node-list dict,
    which is additionally checked structurally: unit vectors beyond the
    stable level, zero coordinates exactly off-branch, interval gluing,
    consistent parent links.
    """
    if not isinstance(candidate, MultiplicityTree):
        try:
            candidate = tree_from_dict(candidate, validate=False)
        except (DomainError, ValidationError) as exc:
            return False, str(exc)
    failure = _condition_c_failure(candidate.branches, candidate.splits)
    if failure is None:
        return True, None
    i, j, h = failure
    return False, ("condition c fails at the level-%d node of branches %d-%d"
                   % (i, j + 1, h + 1))


def tree_to_semigroup(T):
    """Semigroup of sums over rooted subtrees of the tree.

    A rooted subtree reaching depth m_j on branch j yields the member
    (prefix_sum(m_j + 1))_j; the depth profile only needs to satisfy
    m_j >= min(m_h, split(j,h)), since deeper glued neighbors re-enter the
    branch-j path.  Depth profiles are enumerated through one level past
    every split and every non-unit entry; members beyond follow the cap
    rule of the box representation.
    """
    ok, message = validate_tree(T)
    if not ok:
        raise ValidationError(message)
    d = T.d
    deepest = max((len(seq.prefix) - 1 for seq in T.branches), default=-1)
    M = max((max(T.splits, default=-1), deepest)) + 1
    sums = [[seq.prefix_sum(n) for n in range(M + 2)] for seq in T.branches]
    pair_split = [[T.pair_split(j, h) if j != h else 0 for h in range(d)]
                  for j in range(d)]
    grid = np.zeros(tuple(sums[j][M + 1] + 1 for j in range(d)), dtype=bool)
    grid[(0,) * d] = True
    for m in itertools.product(range(M + 1), repeat=d):
        valid = True
        for j in range(d):
            mj = m[j]
            for h in range(d):
                if h != j and mj < min(m[h], pair_split[j][h]):
                    valid = False
                    break
            if not valid:
                break
        if valid:
            grid[tuple(sums[j][m[j] + 1] for j in range(d))] = True
    return GoodSemigroup.from_member_grid(grid)


def semigroup_to_tree(S):
    """Multiplicity tree of a local Arf semigroup; inverse of tree_to_semigroup.

    Branch j carries the multiplicity sequence of the j-th projection;
    consecutive branches stay glued at level k+1 while the residue of their
    plane projection at the sum through level k is local.
    """
    if not is_local(S):
        raise DomainError("only local semigroups have a multiplicity tree")
    if not is_arf_good(S):
        raise DomainError("the semigroup is not Arf; it has no multiplicity tree")
    branches = [semigroup_to_seq(projection(S, j + 1)) for j in range(S.d)]
    splits = []
    for j in range(S.d - 1):
        plane = plane_projection(S, j + 1, j + 2)
        bound = (max(len(branches[j].prefix), len(branches[j + 1].prefix))
                 + max(plane.conductor) + 2)
        for level in range(bound + 1):
            alpha = (branches[j].prefix_sum(level + 1),
                     branches[j + 1].prefix_sum(level + 1))
            if not plane.contains(alpha):
                raise DomainError("not a tree semigroup: node sum %r of branches "
                                  "%d, %d is missing" % (list(alpha), j + 1, j + 2))
            if not is_local(residue(plane, alpha)):
                splits.append(level)
                break
        else:
            raise DomainError("branches %d and %d never split" % (j + 1, j + 2))
    return MultiplicityTree(branches, splits)


def node_path_sum(T, j, level):
    """Sum of the node vectors from the root through the level-th node on
    branch j (1-based); always a member of the tree's semigroup."""
    if not 1 <= j <= T.d:
        raise DomainError("branch index %d out of range 1..%d" % (j, T.d))
    l = j - 1
    return tuple(
        T.branches[h].prefix_sum((level if h == l else min(level, T.pair_split(l, h))) + 1)
        for h in range(T.d))


def split_profile(T, N):
    """Profile (n_1, ..., n_{d-1}) with n_j = N - split level of pair (j, j+1)."""
    if T.splits and N <= max(T.splits):
        raise DomainError("branches are not all distinct at level %d" % (N,))
    return tuple(N - s for s in T.splits)


def pinch(T, j):
    """Merge the two nodes immediately over the branching node of the pair
    (j, j+1), summing their labels: the split level rises by one.  The
    result may fail validate_tree."""
    if not 1 <= j <= T.d - 1:
        raise DomainError("no branch pair %d to pinch" % (j,))
    splits = list(T.splits)
    splits[j - 1] += 1
    return MultiplicityTree(T.branches, splits, validate=False)


def _same_branch_collection(T1, T2):
    if T1.branches != T2.branches:
        raise DomainError("the trees have different branch collections")


def tree_leq(T1, T2):
    """Tree order on a common branch collection: T1 <= T2 iff T1 is reachable
    from T2 by pinchings, iff the semigroup of T1 is contained in that of T2,
    iff every split of T1 is at least the corresponding split of T2."""
    _same_branch_collection(T1, T2)
    return all(a >= b for a, b in zip(T1.splits, T2.splits))


def tree_intersection(T1, T2):
    """Tree of the intersection of the two semigroups: splits are the
    pointwise maxima (profiles the pointwise minima)."""
    _same_branch_collection(T1, T2)
    return MultiplicityTree(T1.branches,
                            tuple(max(a, b) for a, b in zip(T1.splits, T2.splits)))


def _serialize(T):
    return tuple(tuple(T.node_vector(i, g) for g in T.groups(i))
                 for i in range(T.stable_level + 1))


def canonical_form(T):
    """Minimal representative under branch permutation, plus the witnessing
    permutation p (1-based: canonical branch i is original branch p[i-1]).

    Only permutations that keep every glued group an interval are admissible;
    among those, the lexicographically smallest level-major serialization of
    the node vectors wins, with the permutation itself as tie break.
    """
    d = T.d
    best = None
    for perm in itertools.permutations(range(d)):
        splits = [T.pair_split(perm[i], perm[i + 1]) for i in range(d - 1)]
        consistent = all(
            min(splits[j:h]) == T.pair_split(perm[j], perm[h])
            for j in range(d) for h in range(j + 1, d))
        if not consistent:
            continue
        candidate = MultiplicityTree([T.branches[p] for p in perm], splits,
                                     validate=False)
        key = (_serialize(candidate), perm)
        if best is None or key < best[0]:
            best = (key, candidate, perm)
    _, tree, perm = best
    return tree, tuple(p + 1 for p in perm)


def noether_sum(T, j, h):
    """Sum of e_i^j * e_i^h over the glued levels i of branches j != h (1-based)."""
    for index in (j, h):
        if not 1 <= index <= T.d:
            raise DomainError("branch index %d out of range 1..%d" % (index, T.d))
    if j == h:
        raise DomainError("the two branch indices must differ")
    s = T.pair_split(j - 1, h - 1)
    return sum(T.branches[j - 1].entry(i) * T.branches[h - 1].entry(i)
               for i in range(s + 1))


def tree_to_dict(T):
    """Node-list form: one node per glued group, level-major, parent indices."""
    nodes = []
    previous = {}
    for level in range(T.stable_level + 1):
        current = {}
        for g in T.groups(level):
            index = len(nodes)
            parent = previous.get(g[0]) if level else None
            nodes.append({"level": level,
                          "vector": list(T.node_vector(level, g)),
                          "parent": parent})
            for h in g:
                current[h] = index
        previous = current
    return {"d": T.d, "stable_level": T.stable_level, "nodes": nodes}


def tree_from_dict(data, validate=True):
    """Parse the node-list form, checking the structural tree conditions."""
    for key in ("d", "nodes"):
        if key not in data:
            raise ValidationError("tree literal needs d and nodes")
    d = int(data["d"])
    if d < 1:
        raise ValidationError("d must be >= 1")
    by_level = {}
    parsed = []
    for position, node in enumerate(data["nodes"]):
        try:
            level = int(node["level"])
            vector = [int(x) for x in node["vector"]]
            parent = node["parent"]
        except (KeyError, TypeError, ValueError):
            raise ValidationError("node %d needs level, vector and parent" % position)
        if len(vector) != d:
            raise ValidationError("node %d has a vector of dimension %d, expected %d"
                                  % (position, len(vector), d))
        if level < 0 or any(x < 0 for x in vector):
            raise ValidationError("node %d has negative entries" % position)
        support = [h for h, x in enumerate(vector) if x > 0]
        if not support:
            raise ValidationError("node %d has an empty branch set" % position)
        if support != list(range(support[0], support[-1] + 1)):
            raise ValidationError("node %d is glued over non-consecutive branches"
                                  % position)
        parsed.append((level, vector, parent, support))
        by_level.setdefault(level, []).append(position)
    levels = sorted(by_level)
    if not levels:
        raise ValidationError("node list is empty; the root must cover every branch")
    if levels != list(range(len(levels))):
        raise ValidationError("node levels must cover 0..max contiguously")
    top = levels[-1]
    for level in levels:
        covered = []
        for position in by_level[level]:
            covered.extend(parsed[position][3])
        if sorted(covered) != list(range(d)):
            raise ValidationError("level %d nodes do not cover every branch exactly once"
                                  % level)
    if len(by_level[0]) != 1:
        raise ValidationError("the root must cover every branch (local trees only)")
    for position, (level, vector, parent, support) in enumerate(parsed):
        if level == 0:
            if parent is not None:
                raise ValidationError("the root cannot have a parent")
            continue
        if not isinstance(parent, int) or not 0 <= parent < len(parsed):
            raise ValidationError("node %d has an invalid parent index" % position)
        plevel, _, _, psupport = parsed[parent]
        if plevel != level - 1 or not set(support) <= set(psupport):
            raise ValidationError("node %d is not attached to a covering node "
                                  "one level down" % position)
    for position in by_level[top]:
        _, vector, _, support = parsed[position]
        if len(support) > 1 or vector[support[0]] != 1:
            raise ValidationError("node list must extend through the stable level; "
                                  "the top row must consist of unit vectors")
    prefixes = [[parsed[position][1][h]
                 for level in levels for position in by_level[level]
                 if h in parsed[position][3]]
                for h in range(d)]
    splits = []
    for j in range(d - 1):
        glued = [level for level in levels
                 for position in by_level[level]
                 if {j, j + 1} <= set(parsed[position][3])]
        if sorted(glued) != list(range(len(glued))):
            raise ValidationError("branches %d and %d are glued on non-contiguous "
                                  "levels" % (j + 1, j + 2))
        splits.append(max(glued))
    return MultiplicityTree(prefixes, splits, validate=validate)


def render_ascii(T):
    """Levels top-down with the root on the last line, one node per group."""
    lines = []
    for level in range(T.stable_level, -1, -1):
        row = "  ".join("(" + ",".join(str(x) for x in T.node_vector(level, g)) + ")"
                        for g in T.groups(level))
        lines.append("level %d: %s" % (level, row))
    width = max(len(line) for line in lines)
    return "\n".join(line.center(width).rstrip() for line in lines)


def render_dot(T):
    """Graphviz form; rankdir BT places the root at the bottom."""
    data = tree_to_dict(T)
    lines = ["digraph multiplicity_tree {", "  rankdir=BT;",
             "  node [shape=plaintext];"]
    for index, node in enumerate(data["nodes"]):
        label = "(" + ",".join(str(x) for x in node["vector"]) + ")"
        lines.append('  n%d [label="%s"];' % (index, label))
    for index, node in enumerate(data["nodes"]):
        if node["parent"] is not None:
            lines.append("  n%d -> n%d;" % (index, node["parent"]))
    lines.append("}")
    return "\n".join(lines)
