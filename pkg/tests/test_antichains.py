"""Tests for the infinite antichain families: oscillating sequences,
increasing oscillations, the four member generators, anchors, and the
incomparability certificates."""

import pytest

from permpat import (
    FAMILY_IDS,
    FILLED,
    HOLLOW,
    TWO_ANTICHAIN,
    amr_oscillation_anchors,
    amr_oscillation_member,
    amr_tarjan_anchors,
    amr_tarjan_member,
    antichain_member,
    avoids,
    contains,
    delete_entry,
    increasing_oscillations,
    index_for_length,
    inversion_graph,
    labeled_antichain_member,
    labeled_contains,
    member_length,
    oscillating_sequence,
    oscillations_by_filter,
    reduce_sequence,
    verify_antichain,
    widdershins_member,
)

# minimal elements not in the downward closure of the increasing oscillations
OSCILLATION_CLOSURE_BASIS = ((3, 2, 1), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3))

LENGTH_16_MEMBERS = {
    "amr-oscillation": (4, 1, 2, 6, 3, 8, 5, 10, 7, 12, 9, 14, 11, 15, 16, 13),
    "amr-tarjan": (2, 15, 4, 1, 6, 3, 8, 5, 10, 7, 12, 9, 14, 11, 16, 13),
    "widdershins": (15, 1, 13, 2, 11, 4, 9, 6, 10, 8, 12, 7, 14, 5, 16, 3),
    "labeled-path": (3, 1, 5, 2, 7, 4, 9, 6, 11, 8, 13, 10, 15, 12, 16, 14),
}


class TestOscillatingSequence:
    def test_first_terms(self):
        assert oscillating_sequence(7) == (2, 4, 1, 6, 3, 8, 5)
        assert oscillating_sequence(9) == (2, 4, 1, 6, 3, 8, 5, 10, 7)

    def test_empty(self):
        assert oscillating_sequence(0) == ()

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            oscillating_sequence(-1)

    def test_all_values_distinct(self):
        t = oscillating_sequence(40)
        assert len(set(t)) == 40


class TestIncreasingOscillations:
    def test_small_lengths(self):
        assert increasing_oscillations(1) == frozenset({(1,)})
        assert increasing_oscillations(2) == frozenset({(2, 1)})
        assert sorted(increasing_oscillations(5)) == [
            (2, 4, 1, 5, 3),
            (3, 1, 5, 2, 4),
        ]

    def test_counts(self):
        assert [len(increasing_oscillations(n)) for n in range(1, 9)] == [
            1, 1, 2, 2, 2, 2, 2, 2,
        ]

    def test_filter_characterisation_agrees(self):
        # sum-indecomposable with a path inversion graph, by brute force
        for n in range(1, 7):
            assert oscillations_by_filter(n) == increasing_oscillations(n)

    def test_members_avoid_the_closure_basis(self):
        for n in range(1, 9):
            for pi in increasing_oscillations(n):
                assert avoids(pi, OSCILLATION_CLOSURE_BASIS)


class TestFamilyMembers:
    def test_family_ids(self):
        assert FAMILY_IDS == (
            "amr-oscillation",
            "amr-tarjan",
            "widdershins",
            "labeled-path",
        )

    def test_first_members(self):
        assert amr_oscillation_member(1) == (4, 1, 2, 5, 6, 3)
        assert amr_tarjan_member(1) == (2, 3, 4, 1)
        assert widdershins_member(1) == (3, 1, 4, 2)
        first = labeled_antichain_member(1)
        assert first.perm == (2, 1)
        assert first.labels == (FILLED, FILLED)

    def test_length_16_members(self):
        assert amr_oscillation_member(6) == LENGTH_16_MEMBERS["amr-oscillation"]
        assert amr_tarjan_member(7) == LENGTH_16_MEMBERS["amr-tarjan"]
        assert widdershins_member(4) == LENGTH_16_MEMBERS["widdershins"]
        labeled = labeled_antichain_member(15)
        assert labeled.perm == LENGTH_16_MEMBERS["labeled-path"]
        filled_at = tuple(
            i + 1 for i, lab in enumerate(labeled.labels) if lab == FILLED
        )
        assert filled_at == (2, 15)

    def test_dispatch(self):
        for family in FAMILY_IDS:
            assert antichain_member(family, 2) == {
                "amr-oscillation": amr_oscillation_member(2),
                "amr-tarjan": amr_tarjan_member(2),
                "widdershins": widdershins_member(2),
                "labeled-path": labeled_antichain_member(2).perm,
            }[family]

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            antichain_member("spiral", 1)
        with pytest.raises(ValueError):
            member_length("spiral", 1)

    def test_index_must_be_positive(self):
        for fn in (
            amr_oscillation_member,
            amr_tarjan_member,
            widdershins_member,
            labeled_antichain_member,
        ):
            with pytest.raises(ValueError):
                fn(0)

    def test_labeled_members_mark_the_path_ends(self):
        for k in range(1, 13):
            member = labeled_antichain_member(k)
            assert len(member.perm) == k + 1
            filled = [i for i, lab in enumerate(member.labels, start=1) if lab == FILLED]
            assert len(filled) == 2
            g = inversion_graph(member.perm)
            for v in range(1, len(member.perm) + 1):
                expected = FILLED if g.degree(v) <= 1 else HOLLOW
                assert member.labels[v - 1] == expected


class TestLengthsAndIndexing:
    def test_member_length_formulas(self):
        for k in range(1, 6):
            assert member_length("amr-oscillation", k) == 2 * k + 4
            assert member_length("amr-tarjan", k) == 2 * k + 2
            assert member_length("widdershins", k) == 4 * k
            assert member_length("labeled-path", k) == k + 1

    def test_member_length_matches_members(self):
        for family in FAMILY_IDS:
            for k in range(1, 5):
                assert len(antichain_member(family, k)) == member_length(family, k)

    def test_index_for_length_16(self):
        assert index_for_length("amr-oscillation", 16) == 6
        assert index_for_length("amr-tarjan", 16) == 7
        assert index_for_length("widdershins", 16) == 4
        assert index_for_length("labeled-path", 16) == 15

    def test_index_for_missing_length(self):
        with pytest.raises(ValueError):
            index_for_length("widdershins", 6)
        with pytest.raises(ValueError):
            index_for_length("amr-oscillation", 7)


class TestAnchors:
    def test_anchor_positions(self):
        assert amr_oscillation_anchors(6) == (2, 3, 14, 15)
        assert amr_oscillation_anchors(1) == (2, 3, 4, 5)
        assert amr_tarjan_anchors(1) == (1, 2)
        assert amr_tarjan_anchors(9) == (1, 2)

    @staticmethod
    def _delete_positions(pi, positions):
        for i in sorted(positions, reverse=True):
            pi = delete_entry(pi, i)
        return pi

    def test_deleting_anchors_leaves_closure_members(self):
        # without its anchor entries, each member falls into the downward
        # closure of the increasing oscillations
        for k in range(1, 6):
            body = self._delete_positions(
                amr_oscillation_member(k), amr_oscillation_anchors(k)
            )
            assert avoids(body, OSCILLATION_CLOSURE_BASIS)
            body = self._delete_positions(amr_tarjan_member(k), amr_tarjan_anchors(k))
            assert avoids(body, OSCILLATION_CLOSURE_BASIS)

    def test_members_with_anchors_are_not_closure_members(self):
        for k in range(1, 6):
            assert not avoids(amr_oscillation_member(k), OSCILLATION_CLOSURE_BASIS)
            assert not avoids(amr_tarjan_member(k), OSCILLATION_CLOSURE_BASIS)


class TestVerification:
    def test_comparable_pair_found_forward(self):
        assert verify_antichain([(1,), (2, 1)], contains) == (False, (1, 2))

    def test_comparable_pair_found_backward(self):
        # the smaller member coming second is still reported, original indices
        assert verify_antichain([(2, 1), (1,)], contains) == (False, (2, 1))

    def test_trivial_sequences(self):
        assert verify_antichain([], contains) == (True, None)
        assert verify_antichain([(1, 2)], contains) == (True, None)

    def test_amr_oscillation_first_five(self):
        members = [amr_oscillation_member(k) for k in range(1, 6)]
        assert verify_antichain(members, contains) == (True, None)

    def test_amr_tarjan_first_six(self):
        members = [amr_tarjan_member(k) for k in range(1, 7)]
        assert verify_antichain(members, contains) == (True, None)

    def test_widdershins_members_nest(self):
        # honest negative: this family's rule does NOT yield an antichain —
        # member 1 embeds in member 2 (its positions 3..6 reduce to member 1)
        w1 = widdershins_member(1)
        w2 = widdershins_member(2)
        assert reduce_sequence(w2[2:6]) == w1
        assert contains(w1, w2)
        members = [widdershins_member(k) for k in range(1, 5)]
        assert verify_antichain(members, contains) == (False, (1, 2))

    def test_labeled_family_first_six(self):
        members = [labeled_antichain_member(k) for k in range(1, 7)]
        leq = lambda a, b: labeled_contains(a, b, TWO_ANTICHAIN)
        assert verify_antichain(members, leq) == (True, None)

    def test_labels_do_the_blocking(self):
        # the underlying permutations nest; only the labels keep the
        # labeled family incomparable
        p1 = labeled_antichain_member(1)
        p4 = labeled_antichain_member(4)
        assert contains(p1.perm, p4.perm)
        assert not labeled_contains(p1, p4, TWO_ANTICHAIN)
