"""Class algebra: avoidance classes, basis search, the one-point extension,
closure operators, and class-level enumeration."""
import pytest

from permpat import (
    PermClass,
    SizeGuardError,
    avoiding,
    class_from_json,
    class_to_json,
    closure_member,
    closure_member_tree,
    contains,
    downward_closure,
    enumerate_members,
    increasing_oscillations,
    minimal_nonmembers,
    plus_one_basis,
    plus_one_member,
    simples_in_class,
    union_basis,
)

SEPARABLE = avoiding((2, 4, 1, 3), (3, 1, 4, 2))
LINEAR = avoiding((3, 2, 1), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3))


class TestPermClass:
    def test_member_anchor(self):
        assert avoiding((5, 4, 3, 2, 1)).member((4, 3, 2, 6, 7, 9, 1, 8, 5))
        assert not SEPARABLE.member((2, 4, 1, 3))

    def test_empty_basis_is_everything(self):
        assert PermClass(()).member((3, 1, 2))

    def test_basis_is_minimalized_and_sorted(self):
        c = PermClass(((1, 2, 3), (1, 2)))
        assert c.basis == ((1, 2),)

    def test_empty_perm_membership(self):
        assert SEPARABLE.member(())
        assert not avoiding(()).member(())  # empty pattern forbids everything

    def test_json_round_trip(self):
        c = avoiding((2, 4, 1, 3), (3, 1, 4, 2), name="separable")
        c2 = class_from_json(class_to_json(c))
        assert c2.basis == c.basis and c2.name == "separable"


class TestEnumeration:
    def test_catalan(self):
        av321 = avoiding((3, 2, 1))
        assert [len(enumerate_members(av321, n)) for n in range(1, 7)] == [
            1, 2, 5, 14, 42, 132,
        ]

    def test_schroeder(self):
        assert [len(enumerate_members(SEPARABLE, n)) for n in range(1, 7)] == [
            1, 2, 6, 22, 90, 394,
        ]

    def test_guard_and_override(self):
        with pytest.raises(SizeGuardError):
            enumerate_members(avoiding((1, 2)), 11)
        # the override widens the guard rather than silently truncating
        assert len(enumerate_members(SEPARABLE, 5, max_n=12)) == 90

    def test_sorted_output(self):
        ms = enumerate_members(SEPARABLE, 3)
        assert ms == tuple(sorted(ms))


class TestMinimalNonmembers:
    def test_separable_basis_recovered(self):
        found = minimal_nonmembers(SEPARABLE.member, 5)
        assert found == ((2, 4, 1, 3), (3, 1, 4, 2))

    def test_oscillation_closure_basis(self):
        # downward closure of the increasing oscillations = the linear-forest
        # class: its basis is recovered by bounded search
        pool = [p for n in range(1, 13) for p in increasing_oscillations(n)]

        def oracle(pi):
            return any(contains(pi, big) for big in pool)

        assert minimal_nonmembers(oracle, 5) == (
            (3, 2, 1),
            (2, 3, 4, 1),
            (3, 4, 1, 2),
            (4, 1, 2, 3),
        )

    def test_false_on_empty_perm(self):
        assert minimal_nonmembers(lambda p: False, 4) == ((),)

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            minimal_nonmembers(SEPARABLE.member, 10)


class TestUnionBasis:
    def test_anchor(self):
        got = union_basis(avoiding((1, 2)), avoiding((2, 1)))
        assert got.basis == ((1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2))

    def test_bound_respected(self):
        m1 = avoiding((1, 2, 3))
        m2 = avoiding((3, 2, 1))
        for b in union_basis(m1, m2).basis:
            assert len(b) <= 3 + 3

    def test_members_match(self):
        u = union_basis(avoiding((1, 2)), avoiding((2, 1)))
        for n in range(1, 5):
            for pi in enumerate_members(PermClass(()), n):
                expected = avoiding((1, 2)).member(pi) or avoiding((2, 1)).member(pi)
                assert u.member(pi) == expected


class TestPlusOne:
    def test_plus_one_member_definition(self):
        c = avoiding((1, 2))
        assert plus_one_member((), c)
        assert plus_one_member((1, 2), c)       # delete either entry
        assert not plus_one_member((1, 2, 3), c)  # every deletion keeps 12

    def test_av12_basis_anchor(self):
        r = plus_one_basis(avoiding((1, 2)))
        assert r.exact and r.searched_to == 6
        assert r.basis_class.basis == (
            (1, 2, 3),
            (2, 1, 4, 3),
            (2, 4, 1, 3),
            (3, 1, 4, 2),
            (3, 4, 1, 2),
        )

    def test_av1_basis(self):
        r = plus_one_basis(avoiding((1,)))
        assert r.exact and r.searched_to == 2
        assert r.basis_class.basis == ((1, 2), (2, 1))

    def test_cap_gives_evidence_only(self):
        r = plus_one_basis(avoiding((3, 2, 1)), cap=5)
        assert not r.exact and r.searched_to == 5

    def test_search_bound_guard(self):
        # m(m+1) = 12 for a length-3 basis pattern: needs a cap
        with pytest.raises(SizeGuardError):
            plus_one_basis(avoiding((3, 2, 1)))


class TestClosures:
    def test_sum_closure(self):
        c = avoiding((1, 2), name=None)
        # components of 2143 are 21, 21 -- both in Av(12)
        assert closure_member((2, 1, 4, 3), c, "sum")
        # 12 itself is 1 + 1, a direct sum of two members
        assert closure_member((1, 2), c, "sum")
        # 231 is sum-indecomposable and contains 12, so it stays out
        assert not closure_member((2, 3, 1), c, "sum")

    def test_skew_closure(self):
        c = avoiding((2, 1))
        assert closure_member((3, 4, 1, 2), c, "skew")
        # 21 itself is the skew sum of two singleton members
        assert closure_member((2, 1), c, "skew")
        # 132 is skew-indecomposable and contains 21, so it stays out
        assert not closure_member((1, 3, 2), c, "skew")

    def test_substitution_closure_matches_tree(self):
        c = avoiding((1, 2), (2, 1))  # only length-1 members
        for pi in [(1,), (1, 2), (2, 1), (2, 4, 1, 3), (1, 3, 2)]:
            assert closure_member(pi, c, "substitution") == closure_member_tree(pi, c)

    def test_substitution_closure_of_trivial_class(self):
        c = avoiding((1,))  # no nonempty members
        assert closure_member((), c, "substitution")
        assert not closure_member((1,), c, "substitution")
        assert not closure_member_tree((1,), c)

    def test_separable_closure(self):
        c = avoiding((1, 2), (2, 1))
        assert closure_member((2, 1, 4, 3), c, "separable")
        assert not closure_member((2, 4, 1, 3), c, "separable")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            closure_member((1,), SEPARABLE, "transitive")


class TestSimplesInClass:
    def test_separable_has_only_trivial_simples(self):
        assert simples_in_class(SEPARABLE, 8) == ((1, 2), (2, 1))

    def test_unrestricted_simples(self):
        assert simples_in_class(PermClass(()), 4) == (
            (1, 2),
            (2, 1),
            (2, 4, 1, 3),
            (3, 1, 4, 2),
        )

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            simples_in_class(PermClass(()), 10)


class TestDownwardClosure:
    def test_patterns_collected(self):
        assert downward_closure([(3, 2, 1)], 2) == ((2, 1),)

    def test_short_members_skipped(self):
        assert downward_closure([(1,), (2, 1, 3)], 2) == ((1, 2), (2, 1))
