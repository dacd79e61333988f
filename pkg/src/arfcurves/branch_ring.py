"""Algebroid curves given by parametrizations, and their value semigroups.

A curve with d branches is presented as the complete local algebra

    A = k[[g_1, ..., g_n]],   g_i in k[[t_1]] x ... x k[[t_d]],

with every generator a SeriesTuple of exact truncated series and zero
constant terms.  All invariants are derived from values: the value of a
nonzerodivisor is its componentwise order, and the value set of A is
computed by saturating a finite basis of elements indexed by their values
capped at a bound box.  Within the box [0, bound], a component order above
bound_j and an identically zero component carry the same information, so
both are stored as the sentinel bound_j + 1; keys that are sentinels in
every component are discarded.

The saturation closes the basis under products, under pairwise sums
f + lambda*g (which realize componentwise minima), and under leading-term
eliminations; inserting an element reduces it against the basis entry with
the same key, so collisions surface the deeper values created by
cancellation, for example v(t^6+t^7) = 6 and v((t^6+t^7)^2 - (t^4)^3) = 13.

Blowing up divides the maximal ideal by an element of minimal value, and
iterated blowups assemble the multiplicity tree: at each level every still
glued group of branches contributes its fine multiplicity vector as a node,
and a group splits when the blown-up algebra restricted to a pair of
branches stops being local.  Two curves are equivalent exactly when their
multiplicity trees agree up to branch renumbering.

Every computation is exact below the truncation order and fails loudly
(TruncationError) rather than extrapolate past it.
"""

from .errors import DomainError, InputError, TruncationError, ValidationError
from .mult_tree import MultiplicityTree, canonical_form, tree_to_semigroup
from .numerical import MultiplicitySequence
from .series import SeriesTuple, TruncatedSeries, parse_series, valuation

DEFAULT_TRUNCATION = 64

_DEFAULT_VARIABLES = ("t", "u", "v", "w")


class LocalAlgebra:
    """Subalgebra of a product of power-series rings, given by generators.

    Public constructions require every generator to have zero constant
    term in every component, so the generators lie in the would-be maximal
    ideal.  Internal constructions (blowups, branch restrictions) instead
    normalize each generator by the constant of its first component; a
    remaining constant in a later component is then genuine evidence that
    the algebra is not local.
    """

    __slots__ = ("d", "generators", "truncation_order", "_cache")

    def __init__(self, generators, truncation_order=None, validate=True):
        generators = list(generators)
        if not generators:
            raise DomainError("a curve presentation needs at least one generator")
        d = generators[0].d
        for g in generators:
            if not isinstance(g, SeriesTuple) or g.d != d:
                raise DomainError("all generators must be series tuples with the same d")
        if validate:
            for i, g in enumerate(generators):
                for j, c in enumerate(g.constant_vector()):
                    if c != 0:
                        raise ValidationError(
                            "generator %d has a nonzero constant term in component %d"
                            % (i + 1, j + 1)
                        )
            for j in range(d):
                if all(g.components[j].is_zero() for g in generators):
                    raise ValidationError(
                        "no generator has a nonzero component on branch %d" % (j + 1,)
                    )
            kept = [g for g in generators if not g.is_zero()]
        else:
            one = SeriesTuple.constant(1, d)
            kept = []
            for g in generators:
                c = g.components[0].constant_term()
                if c != 0:
                    g = g - one.scale(c)
                if not g.is_zero():
                    kept.append(g)
            if not kept:
                raise DomainError("every generator reduced to zero")
        self.d = d
        self.generators = tuple(kept)
        if truncation_order is None:
            truncation_order = min(
                component.truncation for g in kept for component in g.components
            )
        self.truncation_order = int(truncation_order)
        self._cache = {}

    def __repr__(self):
        return "LocalAlgebra(d=%d, generators=%d, truncation_order=%d)" % (
            self.d,
            len(self.generators),
            self.truncation_order,
        )


def _capped_key(element, bound):
    """Componentwise order capped at bound+1; sentinel for zero-or-beyond."""
    key = []
    for j, component in enumerate(element.components):
        order = component.order()
        if order is not None and order <= bound[j]:
            key.append(order)
        elif component.truncation > bound[j]:
            key.append(bound[j] + 1)
        else:
            raise TruncationError(
                "truncation order %d cannot decide values up to %d on branch %d; "
                "rerun with a larger truncation order"
                % (component.truncation, bound[j], j + 1)
            )
    return tuple(key)


def _saturate(algebra, bound):
    """Value-indexed basis of the algebra, complete within [0, bound]."""
    cached = algebra._cache.get(bound)
    if cached is not None:
        return cached
    d = algebra.d
    big = tuple(b + 1 for b in bound)
    zero_key = (0,) * d

    basis = {}

    def insert(element):
        while True:
            key = _capped_key(element, bound)
            if key == big:
                return False
            existing = basis.get(key)
            if existing is None:
                basis[key] = element
                return True
            # same key: cancel the leading term of the first finite
            # component; the key strictly increases, so this terminates
            j = next(i for i in range(d) if key[i] <= bound[i])
            mu = (
                element.components[j].coefficients[key[j]]
                / existing.components[j].coefficients[key[j]]
            )
            element = element - existing.scale(mu)
            if element.is_zero():
                return False

    insert(SeriesTuple.constant(1, d))
    for g in algebra.generators:
        insert(g)

    processed = set()
    grew = True
    while grew:
        grew = False
        items = sorted(basis.items())
        for i1, (k1, f1) in enumerate(items):
            for k2, f2 in items[i1:]:
                if (k1, k2) in processed:
                    continue
                processed.add((k1, k2))
                if k1 != zero_key and k2 != zero_key:
                    product_key = tuple(min(a + b, m) for a, b, m in zip(k1, k2, big))
                    if product_key != big:
                        grew |= insert(f1 * f2)
                if k1 == k2:
                    continue
                min_key = tuple(map(min, k1, k2))
                if min_key not in basis:
                    # some lambda below avoids cancellation in every
                    # component where the orders agree
                    for lam in range(1, d + 2):
                        grew |= insert(f1 + f2.scale(lam))
                for j in range(d):
                    if k1[j] == k2[j] and k1[j] <= bound[j]:
                        mu = (
                            f1.components[j].coefficients[k1[j]]
                            / f2.components[j].coefficients[k2[j]]
                        )
                        grew |= insert(f1 - f2.scale(mu))

    algebra._cache[bound] = basis
    return basis


def _fm_bound(algebra):
    """Componentwise minimum of the generator orders; bounds the fine multiplicity."""
    bound = []
    for j in range(algebra.d):
        orders = [g.components[j].order() for g in algebra.generators]
        orders = [o for o in orders if o is not None]
        if not orders:
            raise TruncationError(
                "no generator has a known term on branch %d; the presentation is "
                "degenerate or the truncation order too small" % (j + 1,)
            )
        bound.append(min(orders))
    return tuple(bound)


def _local_witness(basis):
    """A basis key proving non-locality: zero in one component, not in all."""
    for key in sorted(basis):
        if any(key) and min(key) == 0:
            return key
    return None


def is_local_ring(algebra):
    """True when the nonunits form an ideal.

    The algebra fails to be local exactly when it contains an element that
    is a unit in some components and a nonunit in others; after constants
    are normalized away, such an element shows up in the saturated basis as
    a key with a zero coordinate next to a nonzero one.
    """
    return _local_witness(_saturate(algebra, _fm_bound(algebra))) is None


def value_set(algebra, bound):
    """All values of nonzerodivisors inside the box [0, bound], as tuples."""
    if isinstance(bound, int):
        bound = (bound,)
    bound = tuple(int(b) for b in bound)
    if len(bound) != algebra.d:
        raise DomainError("bound has dimension %d, expected %d" % (len(bound), algebra.d))
    if any(b < 0 for b in bound):
        raise DomainError("bound coordinates must be natural numbers: %r" % (list(bound),))
    for j in range(algebra.d):
        for g in algebra.generators:
            if g.components[j].truncation <= bound[j]:
                raise TruncationError(
                    "truncation order %d cannot decide values up to %d on branch %d; "
                    "rerun with truncation order at least %d"
                    % (g.components[j].truncation, bound[j], j + 1, bound[j] + 1)
                )
    basis = _saturate(algebra, bound)
    return {key for key in basis if all(key[j] <= bound[j] for j in range(algebra.d))}


def blowup(algebra):
    """The algebra of the maximal ideal divided by an element of minimal value."""
    bound = _fm_bound(algebra)
    basis = _saturate(algebra, bound)
    if _local_witness(basis) is not None:
        raise DomainError("blowup requires a local algebra; blow up its local pieces instead")
    x = basis.get(bound)
    if x is None:
        raise DomainError(
            "no element of minimal value %r was found; the presentation is degenerate"
            % (list(bound),)
        )
    return LocalAlgebra([x] + [g / x for g in algebra.generators], validate=False)


def branch_multiplicity_sequence(algebra):
    """Multiplicities of the successive blowups of a one-branch curve."""
    if algebra.d != 1:
        raise DomainError(
            "multiplicity sequences belong to one-branch curves; got %d branches"
            % algebra.d
        )
    prefix = []
    current = algebra
    for _ in range(algebra.truncation_order + 2):
        multiplicity = _fm_bound(current)[0]
        if multiplicity == 1:
            return MultiplicitySequence(prefix)
        prefix.append(multiplicity)
        current = blowup(current)
    raise TruncationError(
        "the multiplicity sequence does not reach 1 within the truncation order; "
        "the branch has infinite index in its normalization or the truncation "
        "order is too small"
    )


def _restricted(algebra, positions):
    gens = [SeriesTuple([g.components[p] for p in positions]) for g in algebra.generators]
    return LocalAlgebra(gens, validate=False)


def _partition(algebra):
    """Group the branches into the local components of the algebra.

    Branch pairs whose restricted algebra is local stay glued; gluedness is
    transitive, so the groups are the classes of that relation.  Groups are
    ordered by first member, members by index.
    """
    d = algebra.d
    parent = list(range(d))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(d):
        for b in range(a + 1, d):
            if find(a) != find(b) and is_local_ring(_restricted(algebra, [a, b])):
                parent[find(b)] = find(a)

    groups = {}
    for a in range(d):
        groups.setdefault(find(a), []).append(a)
    return [groups[root] for root in sorted(groups, key=lambda r: groups[r][0])]


def multiplicity_tree_of_curve(algebra):
    """Multiplicity tree of the blowup sequence of a local curve.

    Level i holds one node per group of branches still glued in the i-th
    blowup, labelled by the fine multiplicity vector of that component.
    Branches keep their input order as long as every split cuts them into
    consecutive blocks (true for all trees this package serializes);
    otherwise they are listed in separation order.
    """
    if not is_local_ring(algebra):
        raise DomainError("the curve is not local; only local curves have a multiplicity tree")
    # slots: still-glued branch groups in output order, with their algebras;
    # boundaries[i] is the level at which slots i and i+1 separated
    slots = [{"alg": algebra, "branches": list(range(algebra.d)), "active": True}]
    boundaries = []
    entries = [[] for _ in range(algebra.d)]
    max_levels = algebra.truncation_order + 2
    for level in range(max_levels):
        for slot in slots:
            if not slot["active"]:
                continue
            fm = _fm_bound(slot["alg"])
            for position, branch in enumerate(slot["branches"]):
                entries[branch].append(fm[position])
            if len(slot["branches"]) == 1 and fm == (1,):
                slot["active"] = False
        if not any(slot["active"] for slot in slots):
            break
        next_slots = []
        next_boundaries = []
        for index, slot in enumerate(slots):
            if index:
                next_boundaries.append(boundaries[index - 1])
            if not slot["active"]:
                next_slots.append(slot)
                continue
            blown = blowup(slot["alg"])
            parts = _partition(blown) if len(slot["branches"]) > 1 else [[0]]
            for part_index, part in enumerate(parts):
                if part_index:
                    next_boundaries.append(level)
                next_slots.append(
                    {
                        "alg": _restricted(blown, part) if len(parts) > 1 else blown,
                        "branches": [slot["branches"][p] for p in part],
                        "active": True,
                    }
                )
        slots = next_slots
        boundaries = next_boundaries
    else:
        raise TruncationError(
            "the branches fail to separate and stabilize within the truncation "
            "order; rerun with a larger truncation order"
        )
    order = [branch for slot in slots for branch in slot["branches"]]
    return MultiplicityTree([entries[branch] for branch in order], boundaries)


def curves_equivalent(first, second):
    """True when the curves have the same multiplicity tree up to renumbering."""
    if first.d != second.d:
        return False
    return (
        canonical_form(multiplicity_tree_of_curve(first))[0]
        == canonical_form(multiplicity_tree_of_curve(second))[0]
    )


def arf_closure_value_semigroup(algebra):
    """Value semigroup of the Arf closure, read off the multiplicity tree."""
    return tree_to_semigroup(multiplicity_tree_of_curve(algebra))


def _variable_names(d):
    names = list(_DEFAULT_VARIABLES[:d])
    while len(names) < d:
        names.append("t%d" % (len(names) + 1,))
    return names


def curve_from_dict(data):
    """Build a LocalAlgebra from a curve literal.

    Expected shape:

        {"d": 2, "variables": ["t", "u"], "truncation": 64,
         "generators": [["t^4", "u^2"], ["t^6+t^7", "u^5"]]}

    `variables` defaults to t, u, v, w, ... and `truncation` to 64.  Every
    generator component is parsed in its branch variable.
    """
    if not isinstance(data, dict) or "d" not in data or "generators" not in data:
        raise InputError("a curve literal needs d and generators")
    d = int(data["d"])
    if d < 1:
        raise InputError("d must be at least 1, got %d" % d)
    variables = data.get("variables")
    if variables is None:
        variables = _variable_names(d)
    variables = [str(v) for v in variables]
    if len(variables) != d or len(set(variables)) != d:
        raise InputError("variables must be %d distinct names, got %r" % (d, variables))
    truncation = int(data.get("truncation", DEFAULT_TRUNCATION))
    if truncation <= 0:
        raise InputError("truncation must be positive, got %d" % truncation)
    generators = data["generators"]
    if not isinstance(generators, (list, tuple)) or not generators:
        raise InputError("generators must be a non-empty list")
    parsed = []
    for i, generator in enumerate(generators):
        if not isinstance(generator, (list, tuple)) or len(generator) != d:
            raise InputError("generator %d must list %d component series" % (i + 1, d))
        parsed.append(
            SeriesTuple(
                [parse_series(str(text), variables[j], truncation) for j, text in enumerate(generator)]
            )
        )
    return LocalAlgebra(parsed, truncation_order=truncation, validate=True)


def curve_to_dict(algebra, variables=None):
    """Curve literal for the algebra, rendering each generator component."""
    if variables is None:
        variables = _variable_names(algebra.d)
    return {
        "d": algebra.d,
        "variables": list(variables),
        "truncation": algebra.truncation_order,
        "generators": [
            [g.components[j].to_string(variables[j]) for j in range(algebra.d)]
            for g in algebra.generators
        ],
    }
