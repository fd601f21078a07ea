"""Grouping loop against the naive re-run, plus partition bookkeeping."""

import io
import random
from fractions import Fraction

import pytest

from fragmap.distance import cluster_dist
from fragmap.errors import FragmapError
from fragmap.graphs import LabeledGraph
from fragmap.lattice import Lattice
from fragmap.miner import mine
from fragmap.occurrence import OccurrenceSet, OccurrenceStore
from fragmap.pregroup import (
    access_savings,
    check_partition,
    load_grouping,
    pregroup,
)
from fragmap.synthetic import chain_lattice_instance

from .conftest import random_database
from .oracles import naive_pregroup_partition


def hand_lattice(spec):
    """Build a lattice from {pid: (label-chain length, occurrence bits)} plus
    an edge list; pattern pid is a path of ``size`` vertices labeled by its
    chain tag."""
    patterns, supports = {}, {}
    chains, edges = spec
    universe = None
    store = None
    for pid, (tag, size, bits) in chains.items():
        g = LabeledGraph([tag] * size, [(i, i + 1, 0) for i in range(size - 1)])
        s = OccurrenceSet.from_bitstring(bits)
        if store is None:
            universe = s.universe
            store = OccurrenceStore(universe)
        patterns[pid] = g
        supports[pid] = s.support
        store.add(pid, s)
    return Lattice(1, patterns, supports, store, edges)


def mined_lattices(count=8, max_patterns=20):
    rng = random.Random(424242)
    out = []
    while len(out) < count:
        lattice = mine(random_database(rng), rng.randint(1, 3))
        if 2 <= len(lattice) <= max_patterns:
            out.append(lattice)
    return out


class TestPreGroupBasics:
    def test_chain_merges_fully_at_maxdist_one(self):
        # root 6, child 4, grandchild 3: merges end in a single group
        lattice = hand_lattice((
            {0: (0, 1, "11111100"), 1: (0, 2, "11110000"), 2: (0, 3, "11100000")},
            [(0, 1), (1, 2)],
        ))
        grouping = pregroup(lattice, 1.0)
        assert grouping.member_sets() == [frozenset({0, 1, 2})]
        merged_at = [ev.dist for ev in grouping.groups[0].trace]
        assert merged_at == [Fraction(1, 4), Fraction(1, 2)]

    def test_maxdist_zero_merges_only_equal_occurrences(self):
        lattice = hand_lattice((
            {
                0: (0, 1, "11110000"),
                1: (0, 2, "11110000"),  # same occurrences as 0
                2: (0, 3, "11100000"),  # one less
                3: (1, 1, "00001111"),
            },
            [(0, 1), (1, 2)],
        ))
        grouping = pregroup(lattice, 0.0)
        assert set(grouping.member_sets()) == {
            frozenset({0, 1}),
            frozenset({2}),
            frozenset({3}),
        }

    def test_unrelated_patterns_never_merge(self):
        lattice = hand_lattice((
            {0: (0, 1, "11110000"), 1: (1, 1, "11110000")},
            [],
        ))
        for maxdist in (0.0, 0.5, 1.0):
            grouping = pregroup(lattice, maxdist)
            assert set(grouping.member_sets()) == {frozenset({0}), frozenset({1})}

    def test_maxdist_out_of_range(self):
        lattice = chain_lattice_instance(n_chains=5, blocks=5, block_size=40,
                                         base_support=20, core_support=16)
        with pytest.raises(FragmapError):
            pregroup(lattice, 1.5)
        with pytest.raises(FragmapError):
            pregroup(lattice, -0.1)

    def test_representatives_smallest_then_lowest_id(self):
        lattice = hand_lattice((
            {0: (0, 2, "11110000"), 1: (0, 3, "11110000"), 2: (0, 1, "11110000")},
            [(2, 0), (0, 1)],
        ))
        grouping = pregroup(lattice, 1.0)
        assert grouping.member_sets() == [frozenset({0, 1, 2})]
        assert grouping.groups[0].representative == 2  # the single vertex


class TestNaiveEquivalence:
    @pytest.mark.parametrize("maxdist", [0.0, 0.1, 0.5, 1.0])
    def test_matches_naive_rerun_on_mined_lattices(self, maxdist):
        for lattice in mined_lattices():
            got = set(pregroup(lattice, maxdist).member_sets())
            expected = naive_pregroup_partition(lattice, maxdist)
            assert got == expected

    def test_matches_naive_on_synthetic_chains(self):
        lattice = chain_lattice_instance(
            n_chains=5, chain_len=3, blocks=1, block_size=60,
            base_support=30, core_support=24, seed=3,
        )
        for maxdist in (0.0, 0.05, 0.2, 1.0):
            got = set(pregroup(lattice, maxdist).member_sets())
            assert got == naive_pregroup_partition(lattice, maxdist)


class TestGroupingInvariants:
    def test_partition_and_trace_bounds(self):
        for lattice in mined_lattices(count=4):
            maxdist = 0.5
            grouping = pregroup(lattice, maxdist)
            check_partition(lattice, grouping)
            for group in grouping.groups:
                for ev in group.trace:
                    assert 0 <= ev.dist <= Fraction(maxdist)

    def test_merged_groups_connected_by_relations(self):
        for lattice in mined_lattices(count=4):
            grouping = pregroup(lattice, 1.0)
            for group in grouping.groups:
                members = set(group.members)
                if len(members) == 1:
                    continue
                # walk the supergraph relation restricted to the group
                adj = {m: set() for m in members}
                for a in members:
                    for b in members:
                        if a != b and lattice.related(a, b):
                            adj[a].add(b)
                            adj[b].add(a)
                seen, stack = set(), [next(iter(members))]
                while stack:
                    x = stack.pop()
                    if x in seen:
                        continue
                    seen.add(x)
                    stack.extend(adj[x] - seen)
                assert seen == members

    def test_deterministic(self):
        lattice = mined_lattices(count=1)[0]
        a = pregroup(lattice, 0.4)
        b = pregroup(lattice, 0.4)
        assert a == b

    def test_merges_only_within_threshold(self):
        # recomputing cluster_dist on the final partition cannot find a
        # mergeable related pair strictly below every recorded merge
        lattice = mined_lattices(count=1)[0]
        grouping = pregroup(lattice, 0.0)
        sets = grouping.member_sets()
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                d = cluster_dist(sets[i], sets[j], lattice)
                assert d == -1 or d > 0


class TestAccessSavings:
    def test_paper_scale_pair_count(self):
        n = 1229
        assert n * (n - 1) // 2 == 754_606

    def test_one_group_zero_pairs(self):
        lattice = hand_lattice((
            {0: (0, 1, "1111"), 1: (0, 2, "1111")},
            [(0, 1)],
        ))
        grouping = pregroup(lattice, 1.0)
        assert access_savings(lattice, grouping) == (1, 0)

    def test_no_merges_equal_pairs(self):
        lattice = hand_lattice((
            {0: (0, 1, "1100"), 1: (1, 1, "0011")},
            [],
        ))
        grouping = pregroup(lattice, 1.0)
        before, after = access_savings(lattice, grouping)
        assert before == after == 1


def test_grouping_json_round_trip():
    lattice = hand_lattice((
        {0: (0, 1, "11111100"), 1: (0, 2, "11110000"), 2: (0, 3, "11100000")},
        [(0, 1), (1, 2)],
    ))
    grouping = pregroup(lattice, 1.0)
    buf = io.StringIO()
    grouping.dump(buf)
    loaded = load_grouping(buf.getvalue())
    assert loaded.maxdist == grouping.maxdist
    assert loaded.member_sets() == grouping.member_sets()
    assert [g.representative for g in loaded.groups] == [
        g.representative for g in grouping.groups
    ]
    assert [g.trace for g in loaded.groups] == [g.trace for g in grouping.groups]
