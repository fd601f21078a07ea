"""Mining against brute-force enumeration, and lattice structure checks."""

import random

import pytest

from fragmap.errors import FormatError
from fragmap.graphs import GraphDatabase, LabeledGraph, canonical_code
from fragmap.miner import mine

from .conftest import random_database
from .oracles import brute_force_mine, exhaustive_subgraph_iso, perm_canonical

C, O = 0, 2
SINGLE, DOUBLE = 1, 2


def edge(u, v, label=SINGLE):
    return (u, v, label)


class TestMineSmall:
    def test_three_graph_example(self):
        # db = {C-C, C-C, C-O}, minsupp=2: C everywhere, C-C twice, O/C-O once
        db = GraphDatabase(
            [
                LabeledGraph([C, C], [edge(0, 1)]),
                LabeledGraph([C, C], [edge(0, 1)]),
                LabeledGraph([C, O], [edge(0, 1)]),
            ]
        )
        lattice = mine(db, 2)
        forms = {perm_canonical(lattice.graph(pid)): lattice.support(pid)
                 for pid in lattice.pattern_ids}
        expected = {
            perm_canonical(LabeledGraph([C], [])): 3,
            perm_canonical(LabeledGraph([C, C], [edge(0, 1)])): 2,
        }
        assert forms == expected

    def test_single_transaction_all_subgraphs(self, rng):
        for _ in range(10):
            g = random_database(rng, max_transactions=1, max_vertices=5, max_edges=6)
            lattice = mine(g, 1)
            oracle = brute_force_mine(g, 1)
            assert len(lattice) == len(oracle)
            assert all(lattice.support(pid) == 1 for pid in lattice.pattern_ids)

    def test_minsupp_zero_rejected(self):
        db = GraphDatabase([LabeledGraph([C], [])])
        with pytest.raises(FormatError):
            mine(db, 0)

    def test_empty_db_rejected(self):
        with pytest.raises(FormatError):
            mine(GraphDatabase([]), 1)


class TestMineOracle:
    def test_matches_brute_force(self):
        rng = random.Random(20_000)
        for _ in range(12):
            db = random_database(rng)
            minsupp = rng.randint(1, 3)
            lattice = mine(db, minsupp)
            oracle = brute_force_mine(db, minsupp)
            mined = {
                perm_canonical(lattice.graph(pid)): frozenset(
                    lattice.occurrences(pid).members()
                )
                for pid in lattice.pattern_ids
            }
            assert len(mined) == len(lattice), "isomorphic duplicates in output"
            assert mined == {form: occ for form, (_, occ) in oracle.items()}

    def test_supports_equal_occurrence_cardinalities(self, rng):
        db = random_database(rng)
        lattice = mine(db, 1)
        for pid in lattice.pattern_ids:
            assert lattice.support(pid) == lattice.occurrences(pid).support


class TestLatticeStructure:
    def build(self, seed=7, minsupp=2):
        rng = random.Random(seed)
        return mine(random_database(rng), minsupp)

    def test_edges_are_one_edge_extensions(self):
        lattice = self.build()
        for p, c in lattice.edges:
            gp, gc = lattice.graph(p), lattice.graph(c)
            assert gc.edge_count == gp.edge_count + 1
            assert exhaustive_subgraph_iso(gp, gc)

    def test_anti_monotone_supports(self):
        lattice = self.build()
        for p, c in lattice.edges:
            assert lattice.support(c) <= lattice.support(p)

    def test_every_non_root_has_a_parent(self):
        for seed in (1, 2, 3):
            lattice = self.build(seed=seed, minsupp=1)
            for pid in lattice.pattern_ids:
                if lattice.graph(pid).edge_count > 0:
                    assert lattice.parents(pid), f"pattern {pid} is an orphan"

    def test_all_frequent_parents_linked(self):
        # every one-edge deletion that stays connected must be a lattice edge
        lattice = self.build(seed=11, minsupp=1)
        by_code = {canonical_code(lattice.graph(pid)): pid for pid in lattice.pattern_ids}
        from fragmap.miner import _generalizations

        for pid in lattice.pattern_ids:
            expected_parents = {
                by_code[canonical_code(par)]
                for par in _generalizations(lattice.graph(pid))
            }
            assert set(lattice.parents(pid)) == expected_parents

    def test_roots_are_single_vertices(self):
        lattice = self.build(seed=13, minsupp=1)
        roots = [pid for pid in lattice.pattern_ids if not lattice.parents(pid)]
        assert roots, "no roots"
        assert all(lattice.graph(pid).vertex_count == 1 for pid in roots)

    def test_deterministic_ids(self):
        rng = random.Random(31)
        db = random_database(rng)
        a = mine(db, 2)
        b = mine(db, 2)
        assert a.pattern_ids == b.pattern_ids
        assert [a.graph(p) for p in a.pattern_ids] == [b.graph(p) for p in b.pattern_ids]
        assert a.edges == b.edges
        # ids ordered by (vertex count, canonical code)
        keys = [
            (a.graph(p).vertex_count, canonical_code(a.graph(p)))
            for p in a.pattern_ids
        ]
        assert keys == sorted(keys)
