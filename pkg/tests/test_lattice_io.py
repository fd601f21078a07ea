"""Lattice JSON round trip and import validation."""

import io
import json

import pytest

from fragmap.errors import FormatError
from fragmap.lattice import import_lattice
from fragmap.miner import mine

from .conftest import random_database


def lattice_json(**overrides):
    """A small valid two-pattern lattice: C (support 5) over C=O (support 4)."""
    obj = {
        "minsupp": 1,
        "patterns": [
            {
                "id": 0,
                "vertices": [0],
                "edges": [],
                "support": 5,
                "occurrences": "0,3,3,2",
            },
            {
                "id": 1,
                "vertices": [0, 2],
                "edges": [[0, 1, 2]],
                "support": 4,
                "occurrences": "1,4,3",
            },
        ],
        "edges": [[0, 1]],
    }
    obj.update(overrides)
    return obj


class TestImport:
    def test_round_trip_structurally_equal(self, rng):
        lattice = mine(random_database(rng), 2)
        buf = io.StringIO()
        lattice.dump(buf)
        again = import_lattice(buf.getvalue())
        assert again.minsupp == lattice.minsupp
        assert again.pattern_ids == lattice.pattern_ids
        assert again.edges == lattice.edges
        for pid in lattice.pattern_ids:
            assert again.graph(pid) == lattice.graph(pid)
            assert again.support(pid) == lattice.support(pid)
            assert again.occurrences(pid).runs == lattice.occurrences(pid).runs
        # and the serialized form is byte-stable
        buf2 = io.StringIO()
        again.dump(buf2)
        assert buf2.getvalue() == buf.getvalue()

    def test_example_two_fragment_toy(self):
        lattice = import_lattice(json.dumps(lattice_json(edges=[])))
        assert lattice.support(0) == 5
        assert lattice.support(1) == 4
        assert lattice.occurrences(0).members() == [0, 1, 2, 6, 7]
        assert lattice.universe == 8

    def test_parent_child_pair_loads(self):
        # C=O extends C and occurs in a subset of its transactions
        obj = lattice_json()
        obj["patterns"][1]["occurrences"] = "0,2,4,2"  # 11000011, subset-sized
        lattice = import_lattice(json.dumps(obj))
        assert lattice.parents(1) == [0]
        assert lattice.children(0) == [1]

    def test_malformed_json(self):
        with pytest.raises(FormatError):
            import_lattice("{not json")

    def test_duplicate_ids(self):
        obj = lattice_json()
        obj["patterns"][1]["id"] = 0
        with pytest.raises(FormatError):
            import_lattice(json.dumps(obj))

    def test_anti_monotonicity_violation(self):
        obj = lattice_json()
        # child claims more occurrences than its parent
        obj["patterns"][0]["occurrences"] = "0,3,5"
        obj["patterns"][0]["support"] = 3
        with pytest.raises(FormatError, match="support"):
            import_lattice(json.dumps(obj))

    def test_edge_size_delta_must_be_one(self):
        obj = lattice_json()
        obj["patterns"][1]["vertices"] = [0, 2, 0]
        obj["patterns"][1]["edges"] = [[0, 1, 2], [1, 2, 1]]
        with pytest.raises(FormatError, match="one more edge"):
            import_lattice(json.dumps(obj))

    def test_parent_must_be_subgraph(self):
        obj = lattice_json()
        obj["patterns"][0]["vertices"] = [7]  # label not present in the child
        with pytest.raises(FormatError, match="subgraph"):
            import_lattice(json.dumps(obj))

    def test_support_cardinality_mismatch(self):
        obj = lattice_json()
        obj["patterns"][0]["support"] = 4
        with pytest.raises(FormatError, match="cardinality|support"):
            import_lattice(json.dumps(obj))

    def test_support_below_minsupp(self):
        obj = lattice_json(minsupp=5)
        with pytest.raises(FormatError, match="minsupp"):
            import_lattice(json.dumps(obj))

    def test_isomorphic_duplicates_rejected(self):
        obj = lattice_json(edges=[])
        obj["patterns"][1] = {
            "id": 1,
            "vertices": [0],
            "edges": [],
            "support": 5,
            "occurrences": "0,3,3,2",
        }
        with pytest.raises(FormatError, match="isomorphic"):
            import_lattice(json.dumps(obj))

    def test_occurrence_length_mismatch(self):
        obj = lattice_json()
        obj["patterns"][1]["occurrences"] = "1,4,3,1"
        with pytest.raises(FormatError):
            import_lattice(json.dumps(obj))

    def test_disconnected_pattern_rejected(self):
        obj = lattice_json(edges=[])
        obj["patterns"][1]["vertices"] = [0, 2]
        obj["patterns"][1]["edges"] = []
        with pytest.raises(FormatError, match="connected"):
            import_lattice(json.dumps(obj))

    def test_unknown_edge_endpoint(self):
        obj = lattice_json(edges=[[0, 9]])
        with pytest.raises(FormatError, match="unknown"):
            import_lattice(json.dumps(obj))


class TestReachability:
    def test_ancestor_closure(self, rng):
        lattice = mine(random_database(rng), 1)
        # reachability must agree with explicit DFS over the edge list
        children = {pid: [] for pid in lattice.pattern_ids}
        for p, c in lattice.edges:
            children[p].append(c)

        def reaches(a, b):
            stack, seen = [a], set()
            while stack:
                x = stack.pop()
                if x == b:
                    return True
                for c in children[x]:
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
            return False

        ids = lattice.pattern_ids
        related = set(lattice.related_pairs())
        for a in ids:
            for b in ids:
                if a == b:
                    continue
                assert lattice.is_ancestor(a, b) == reaches(a, b)
                if reaches(a, b):
                    assert (a, b) in related
