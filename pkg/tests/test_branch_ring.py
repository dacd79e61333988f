from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arfcurves.branch_ring import (LocalAlgebra, arf_closure_value_semigroup, blowup,
                                   branch_multiplicity_sequence, curve_from_dict,
                                   curve_to_dict, curves_equivalent, is_local_ring,
                                   multiplicity_tree_of_curve, value_set)
from arfcurves.errors import DomainError, InputError, TruncationError, ValidationError
from arfcurves.good_semigroup import GoodSemigroup
from arfcurves.mult_tree import MultiplicityTree, noether_sum
from arfcurves.numerical import (MultiplicitySequence, NumericalSemigroup, arf_closure,
                                 semigroup_to_seq)
from arfcurves.series import SeriesTuple, parse_series


def curve(*generators, **kwargs):
    data = {"d": len(generators[0]), "generators": list(generators)}
    data.update(kwargs)
    return curve_from_dict(data)


# One branch, value semigroup <4,6,13>: (t^6+t^7)^2 - (t^4)^3 has order 13.
R46 = curve(["t^4"], ["t^6+t^7"])
R4613 = curve(["t^4"], ["t^6"], ["t^13"])
# Two transverse branches glued by the diagonal (t^2,u^2).
C4 = curve(["t^2", "u^2"], ["0", "u^3"], ["t^3", "0"])
# Three monomial curves with the same tree, glued one level past the root.
U = curve(["t^4", "u^2"], ["t^9", "u^4"], ["t^6", "u^5"])
# The same class presented with its conductor tail spelled out.
REP = curve(["t^4", "u^2"], ["t^6", "0"], ["t^8", "0"], ["t^9", "0"],
            ["t^10", "0"], ["t^11", "0"], ["0", "u^4"], ["0", "u^5"])
# Two-generator curve in the same class; its own value set is smaller.
UT = curve(["t^4", "u^2"], ["t^6+t^7", "u^5"])
# Two presentations of one class with branches 2,1,... and 3,2,1,... split at 2.
E2A = curve(["t^2", "u^3"], ["t^3", "u^5"], ["t^4", "u^7"])
E2B = curve(["t^2", "u^3"], ["t^3", "u^5"], ["t^6", "u^6"])
# Same branch pair, three different contact orders: splits at 0, 2 and 3.
C1 = curve(["t^4", "u^3"], ["t^6+t^7", "u^2"])
C2 = curve(["t^4", "2u^2"], ["t^6+t^7", "u^3"])
C3 = curve(["t^4", "u^2"], ["t^6+t^7", "u^3"])
# Two coordinate lines plus the diagonal: local despite the zero components.
FP = curve(["t", "0"], ["0", "u"], ["t", "u"])

T_PAIR = MultiplicityTree([[2], [2]], splits=(1,))
T_EX1 = MultiplicityTree([[4, 2, 2], [2, 2]], splits=(1,))
T_EX2 = MultiplicityTree([[2], [3, 2]], splits=(2,))
E_PAIR = ([4, 2, 2], [2])

EX1 = GoodSemigroup(2, (8, 4), [(0, 0), (4, 2), (6, 4), (8, 4)])
EX2 = GoodSemigroup(2, (4, 6), [(0, 0), (2, 3), (3, 5), (4, 6)])


def tuples(*texts, truncation=64, variables=("t", "u")):
    return SeriesTuple([parse_series(text, variables[j], truncation)
                        for j, text in enumerate(texts)])


def test_rejects_nonzero_constant_term():
    with pytest.raises(ValidationError,
                       match="generator 2 has a nonzero constant term in component 2"):
        curve(["t", "u"], ["t^2", "1+u"])


def test_rejects_uncovered_branch():
    with pytest.raises(ValidationError,
                       match="no generator has a nonzero component on branch 2"):
        curve(["t", "0"], ["t^2", "0"])


def test_rejects_empty_presentation():
    with pytest.raises(DomainError, match="at least one generator"):
        LocalAlgebra([])


def test_internal_constants_normalize_by_first_component():
    # A diagonal constant is a unit times 1 and goes away; a mismatched
    # constant survives in the second component and certifies non-locality.
    diagonal = LocalAlgebra([tuples("1+t", "1+u"), tuples("t", "u")], validate=False)
    assert all(g.constant_vector() == (0, 0) for g in diagonal.generators)
    assert is_local_ring(diagonal)
    skew = LocalAlgebra([tuples("1+t", "2+u"), tuples("t", "u")], validate=False)
    assert not is_local_ring(skew)
    with pytest.raises(DomainError, match="every generator reduced to zero"):
        LocalAlgebra([SeriesTuple.constant(3, 2)], validate=False)


def test_value_set_one_branch():
    values = {key[0] for key in value_set(R46, 20)}
    assert values == {0, 4, 6, 8, 10, 12, 13, 14, 16, 17, 18, 19, 20}


def test_value_set_two_branches():
    assert value_set(UT, (20, 8)) == {
        (0, 0), (4, 2), (6, 4), (6, 5), (8, 4), (10, 6), (10, 7),
        (12, 6), (12, 8), (13, 6), (14, 8), (16, 8), (17, 8),
    }


def test_value_set_is_min_closed_on_goldens():
    for algebra, bound in ((UT, (20, 8)), (C4, (8, 8))):
        values = value_set(algebra, bound)
        for a in values:
            for b in values:
                assert tuple(map(min, a, b)) in values


def test_value_set_checks_bound():
    with pytest.raises(DomainError, match="bound has dimension 1, expected 2"):
        value_set(C4, (5,))
    with pytest.raises(DomainError, match="natural numbers"):
        value_set(C4, (5, -1))
    shallow = curve(["t^4", "u^2"], ["t^6+t^7", "u^5"], truncation=20)
    with pytest.raises(TruncationError, match="at least 21"):
        value_set(shallow, (20, 8))


def test_value_set_transverse_pair():
    # (3,3) = v(z+y), (3,4) = v(z+x^2), (4,3) = v(x^2+y), (5,5) = v(zx+xy).
    values = value_set(C4, (8, 8))
    assert {(2, 2), (3, 3), (3, 4), (4, 3), (4, 4), (5, 5)} <= values
    assert (1, 1) not in values and (2, 3) not in values
    # u^4 and t^4 only enter together through x^2, so (4,5) and (5,4) are
    # values of the closure but not of the presentation.
    closure = arf_closure_value_semigroup(C4)
    assert closure == GoodSemigroup(2, (3, 3), [(0, 0), (2, 2), (3, 3)])
    assert all(closure.contains(v) for v in values)
    assert closure.contains((4, 5)) and (4, 5) not in values
    assert closure.contains((5, 4)) and (5, 4) not in values


def test_locality_goldens():
    assert is_local_ring(C4)
    first = blowup(C4)
    assert is_local_ring(first)
    assert not is_local_ring(blowup(first))
    assert is_local_ring(FP)
    assert is_local_ring(R46)


def test_blowup_matches_explicit_presentation():
    # Dividing the section-4 curve by (t^2,u^2) lands on k[[(t^2,u^2),(0,u),(t,0)]].
    explicit = curve(["t^2", "u^2"], ["0", "u"], ["t", "0"])
    assert value_set(blowup(C4), (6, 6)) == value_set(explicit, (6, 6))


def test_blowup_requires_local():
    with pytest.raises(DomainError, match="local"):
        blowup(blowup(blowup(C4)))


def test_multiplicity_sequences():
    assert branch_multiplicity_sequence(R46) == MultiplicitySequence([4, 2, 2])
    seq = branch_multiplicity_sequence(R4613)
    assert seq == MultiplicitySequence([4, 2, 2, 2, 2])
    assert seq == semigroup_to_seq(arf_closure([4, 6, 13]))


def test_multiplicity_sequence_needs_one_branch():
    with pytest.raises(DomainError, match="one-branch"):
        branch_multiplicity_sequence(C4)


def test_tree_of_transverse_pair():
    tree = multiplicity_tree_of_curve(C4)
    assert tree == T_PAIR
    assert noether_sum(tree, 1, 2) == 5


def test_tree_goldens():
    assert multiplicity_tree_of_curve(U) == T_EX1
    assert multiplicity_tree_of_curve(REP) == T_EX1
    assert multiplicity_tree_of_curve(UT) == T_EX1
    assert multiplicity_tree_of_curve(E2A) == T_EX2
    assert multiplicity_tree_of_curve(E2B) == T_EX2


def test_contact_order_moves_the_split():
    for algebra, split in ((C1, 0), (C2, 2), (C3, 3)):
        assert multiplicity_tree_of_curve(algebra) == MultiplicityTree(
            E_PAIR, splits=(split,))
    for first, second in ((C1, C2), (C1, C3), (C2, C3)):
        assert not curves_equivalent(first, second)


def test_equivalences():
    assert curves_equivalent(U, REP)
    assert curves_equivalent(U, UT)
    assert curves_equivalent(E2A, E2B)
    assert not curves_equivalent(R46, C4)
    assert curves_equivalent(R46, R4613) == (
        branch_multiplicity_sequence(R46) == branch_multiplicity_sequence(R4613))


def test_tree_requires_local():
    skew = LocalAlgebra([tuples("t", "u"), tuples("1+t", "2+u")], validate=False)
    with pytest.raises(DomainError, match="not local"):
        multiplicity_tree_of_curve(skew)


def test_diagonal_never_separates():
    with pytest.raises(TruncationError, match="fail to separate"):
        multiplicity_tree_of_curve(curve(["t", "u"], truncation=12))


def test_closure_semigroups():
    assert arf_closure_value_semigroup(U) == EX1
    assert arf_closure_value_semigroup(E2A) == EX2
    closure = arf_closure_value_semigroup(R46).to_numerical()
    assert closure == NumericalSemigroup(8, [0, 4, 6])


def test_value_set_strictly_inside_closure_one_branch():
    # v(R) = <4,6,13> sits strictly inside the closure's {0,4,6,8,...}.
    values = {key[0] for key in value_set(R46, 20)}
    closure = arf_closure_value_semigroup(R46).to_numerical()
    assert all(closure.contains(n) for n in values)
    assert 9 not in values and closure.contains(9)


def test_value_set_strictly_inside_closure_two_branches():
    # Strictness means the value set is not its own Arf closure, so the
    # value semigroup of this presentation is not an Arf good semigroup.
    values = value_set(UT, (20, 8))
    closure = arf_closure_value_semigroup(UT)
    assert closure == EX1
    assert all(closure.contains(v) for v in values)
    assert (6, 6) not in values and closure.contains((6, 6))


def test_curve_dict_round_trip():
    data = curve_to_dict(C2)
    assert data["variables"] == ["t", "u"]
    assert data["generators"][0] == ["t^4", "2*u^2"]
    again = curve_from_dict(data)
    assert again.generators == C2.generators
    assert curve_to_dict(again) == data


def test_curve_dict_errors():
    with pytest.raises(InputError, match="needs d and generators"):
        curve_from_dict({"generators": [["t"]]})
    with pytest.raises(InputError, match="d must be at least 1"):
        curve_from_dict({"d": 0, "generators": [[]]})
    with pytest.raises(InputError, match="2 distinct names"):
        curve_from_dict({"d": 2, "variables": ["t", "t"], "generators": [["t", "t"]]})
    with pytest.raises(InputError, match="generator 1 must list 2 component series"):
        curve_from_dict({"d": 2, "generators": [["t^2"]]})
    with pytest.raises(InputError, match="truncation must be positive"):
        curve_from_dict({"d": 1, "truncation": 0, "generators": [["t"]]})
    with pytest.raises(InputError, match="non-empty list"):
        curve_from_dict({"d": 1, "generators": []})


def test_results_stable_under_truncation_doubling():
    for generators in ((["t^4", "u^2"], ["t^6+t^7", "u^5"]),
                       (["t^2", "u^3"], ["t^3", "u^5"], ["t^4", "u^7"])):
        coarse = curve(*generators, truncation=64)
        fine = curve(*generators, truncation=128)
        assert multiplicity_tree_of_curve(coarse) == multiplicity_tree_of_curve(fine)
    coarse = {key[0] for key in value_set(curve(["t^4"], ["t^6+t^7"]), 20)}
    fine = {key[0] for key in value_set(curve(["t^4"], ["t^6+t^7"], truncation=128), 20)}
    assert coarse == fine


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=9), min_size=2, max_size=3,
                unique=True).map(sorted).filter(lambda xs: reduce(gcd, xs) == 1))
def test_monomial_branch_sequence_matches_closure(exponents):
    algebra = curve(*[["t^%d" % e] for e in exponents], truncation=40)
    assert branch_multiplicity_sequence(algebra) == semigroup_to_seq(
        arf_closure(exponents))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.tuples(st.integers(min_value=1, max_value=5),
                          st.integers(min_value=1, max_value=5)),
                min_size=2, max_size=3, unique=True))
def test_monomial_value_sets_are_min_closed(orders):
    algebra = LocalAlgebra(
        [tuples("t^%d" % a, "u^%d" % b, truncation=12) for a, b in orders])
    values = value_set(algebra, (8, 8))
    for a in values:
        for b in values:
            assert tuple(map(min, a, b)) in values
