import random

import pytest

from indcert.complexes import (
    SimplicialComplex,
    collapse_core,
    collapse_oracle,
    complex_from_faces,
    complexes_equal,
    euler_reduced,
    f_vector,
    independence_complex,
    join,
    point_pair,
    sphere,
)
from indcert.euler import FaceBudgetExceeded
from indcert.graphs import GraphError, cylinder, grid, make_graph
from indcert.moves import ADD_EDGE, DEL_EDGE, DEL_VERTEX, OpStep


def faces_of(g, budget=None):
    return independence_complex(g, budget=budget).faces()


def test_triangle_complex_is_three_points():
    k = independence_complex(cylinder(1, 3))
    assert k.faces() == {
        frozenset(), frozenset({"r1c1"}), frozenset({"r1c2"}), frozenset({"r1c3"})
    }


def test_edgeless_pair_gives_full_simplex():
    k = independence_complex(make_graph(["a", "b"]))
    assert k.faces() == {
        frozenset(), frozenset({"a"}), frozenset({"b"}), frozenset({"a", "b"})
    }


def test_looped_vertex_contributes_nothing():
    k = independence_complex(make_graph(["a"], [], ["a"]))
    assert k.faces() == {frozenset()}
    assert k.vertices == ()


def test_join_unit():
    unit = sphere(-1)
    k = independence_complex(grid(1, 3))
    assert complexes_equal(join(unit, k), k)


def test_two_point_join_is_circle():
    s = join(point_pair("a", "b"), point_pair("c", "d"))
    assert f_vector(s) == (1, 4, 4)


def test_sphere_small_cases():
    assert sphere(-1).faces() == {frozenset()}
    assert f_vector(sphere(0)) == (1, 2)
    assert f_vector(sphere(2)) == (1, 6, 12, 8)


def test_f_vector_examples():
    assert f_vector(sphere(1)) == (1, 4, 4)
    assert f_vector(independence_complex(grid(1, 2))) == (1, 2)
    assert f_vector(independence_complex(cylinder(1, 4))) == (1, 4, 2)


def test_complex_of_disjoint_union_is_join():
    rng = random.Random(11)
    for _ in range(15):
        na, nb = rng.randint(1, 6), rng.randint(1, 6)
        ga = make_graph(
            [f"a{i}" for i in range(na)],
            [(f"a{i}", f"a{j}") for i in range(na) for j in range(i + 1, na)
             if rng.random() < 0.4],
        )
        gb = make_graph(
            [f"b{i}" for i in range(nb)],
            [(f"b{i}", f"b{j}") for i in range(nb) for j in range(i + 1, nb)
             if rng.random() < 0.4],
        )
        u = ga.disjoint_union(gb)
        assert complexes_equal(
            independence_complex(u),
            join(independence_complex(ga), independence_complex(gb)),
        )


def test_join_f_vector_is_convolution():
    k, l = sphere(1), independence_complex(grid(1, 3))
    fk, fl, fj = f_vector(k), f_vector(l), f_vector(join(k, l, suffix="_r"))
    conv = [0] * (len(fk) + len(fl) - 1)
    for i, a in enumerate(fk):
        for j, b in enumerate(fl):
            conv[i + j] += a * b
    assert list(fj) == conv


def test_downward_closure_of_constructions():
    assert independence_complex(grid(2, 3)).is_downward_closed()
    assert sphere(2).is_downward_closed()
    assert join(sphere(0), sphere(0), suffix="_r").is_downward_closed()


def test_complex_requires_empty_face():
    with pytest.raises(GraphError):
        SimplicialComplex(("a",), frozenset({1}))


def test_face_budget_is_reported():
    with pytest.raises(FaceBudgetExceeded):
        independence_complex(make_graph([f"v{i}" for i in range(20)]), budget=100)


def test_dump_format():
    k = independence_complex(cylinder(1, 3))
    assert k.dump_lines() == ["()", "r1c1", "r1c2", "r1c3"]


def test_collapse_core_preserves_euler():
    k = independence_complex(grid(2, 4))
    core = collapse_core(k.face_masks)
    before = euler_reduced(k)
    after = sum(-1 if m.bit_count() % 2 == 0 else 1 for m in core)
    assert before == after
    assert len(core) < k.n_faces()


# -- the collapse oracle ------------------------------------------------------


def test_oracle_del_vertex_smallest_example():
    g = make_graph(["u", "v", "w"], [("v", "w")])
    residual, report = collapse_oracle(g, OpStep(DEL_VERTEX, "v", "u"))
    assert report.ok and report.residual_equals_edited
    assert residual.faces() == {
        frozenset(), frozenset({"u"}), frozenset({"w"}), frozenset({"u", "w"})
    }


def test_oracle_add_edge_path_example():
    g = make_graph(
        ["u", "x", "y", "z", "v"],
        [("u", "x"), ("x", "y"), ("y", "z"), ("z", "v")],
    )
    step = OpStep(ADD_EDGE, ("u", "v"), "y")
    residual, report = collapse_oracle(g, step)
    assert report.ok
    assert residual.faces() == faces_of(g.add_edge("u", "v"))


def test_oracle_del_edge_direction():
    g = make_graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    step = OpStep(DEL_EDGE, ("a", "b"), "c")
    residual, report = collapse_oracle(g, step)
    assert report.ok
    assert report.direction == "I(edited) onto I(G)"
    assert residual.faces() == faces_of(g)


def test_oracle_random_del_vertex_matches_brute_force():
    rng = random.Random(5)
    found = 0
    while found < 12:
        n = 8
        names = [f"v{i}" for i in range(n)]
        g = make_graph(
            names,
            [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < 0.3],
        )
        candidates = [
            (v, u)
            for v in names
            for u in names
            if u != v
            and u not in g.closed_neighborhood(v)
            and not (g.adjacency[u] - g.closed_neighborhood(v))
        ]
        if not candidates:
            continue
        v, u = candidates[rng.randrange(len(candidates))]
        residual, report = collapse_oracle(g, OpStep(DEL_VERTEX, v, u))
        assert report.ok, report.detail
        assert residual.faces() == faces_of(g.delete_vertices({v}))
        found += 1


def test_oracle_counts_every_doomed_face():
    g = make_graph(["u", "v", "w"], [("v", "w")])
    _, report = collapse_oracle(g, OpStep(DEL_VERTEX, "v", "u"))
    doomed = [f for f in faces_of(g) if "v" in f]
    assert report.matched_pairs == len(doomed) // 2
    assert report.collapses_executed == report.matched_pairs
