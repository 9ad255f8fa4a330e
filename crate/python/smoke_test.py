"""Smoke test for the graphconv_py extension.

Build and install it first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import graphconv_py as gc


def main():
    p3 = gc.Graph.from_edge_list("n 3\n0 1\n1 2\n")
    assert p3 == gc.Graph.path(3)
    assert p3.to_edge_list() == "n 3\n0 1\n1 2\n"
    assert p3.closed_neighborhood(1) == [0, 1, 2]
    assert p3.adherence([0]) == [0, 1]
    assert p3.interior([0, 1]) == [0]
    assert not p3.is_transitive()
    assert p3.min_dominating_set() == [1]
    edges, internal = p3.min_internal_spanning_tree()
    assert edges == [(0, 1), (1, 2)] and internal == [1]

    report = p3.analyze()
    assert report["kind"] == "analysis"
    assert report["format_version"] == gc.FORMAT_VERSION
    assert report["topological"]["witness"] == [0, 1, 2]

    k2, k1 = gc.Graph.complete(2), gc.Graph.complete(1)
    assert k2.is_continuous_map([0, 0], k1)
    assert not k2.is_homomorphism([0, 0], k1)

    assert gc.verify("idempotent_iff_transitive", 5)["verdict"]["status"] == "pass"
    assert len(gc.theorems()) == 14

    fan = gc.family_report("fanray", 16)
    assert fan["compactness"]["verdict"] == "verified"
    assert fan["dominating_set_size"] == 1

    try:
        gc.Graph.from_edge_list("")
    except ValueError as e:
        assert "line 1" in str(e)
    else:
        raise AssertionError("empty input parsed")

    print("smoke test passed")


if __name__ == "__main__":
    main()
