import pytest

from indcert.complexes import independence_complex
from indcert.graphs import GraphError, cylinder, make_graph
from indcert.moves import (
    ADD_EDGE,
    DEL_EDGE,
    DEL_VERTEX,
    Certificate,
    OpStep,
    PreconditionError,
    apply_step,
    certificate_from_json,
    check_step,
    replay,
    step_direction,
)


def path(*names):
    return make_graph(list(names), list(zip(names, names[1:])))


def test_add_edge_precondition_on_length_four_path():
    g = path("u", "x", "y", "z", "v")
    assert check_step(g, OpStep(ADD_EDGE, ("u", "v"), "y")).ok


def test_witness_must_survive_deletion():
    g = path("a", "b", "c")
    check = check_step(g, OpStep(DEL_VERTEX, "b", "a"))
    assert not check.ok and "survive" in check.reason


def test_witness_must_be_isolated():
    g = make_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    assert not check_step(g, OpStep(DEL_VERTEX, "a", "c")).ok
    h = make_graph(["a", "b", "c"], [("a", "b")])
    assert check_step(h, OpStep(DEL_VERTEX, "a", "c")).ok


def test_looped_witness_rejected():
    g = make_graph(["a", "b", "c"], [("a", "b")], ["c"])
    check = check_step(g, OpStep(DEL_VERTEX, "a", "c"))
    assert not check.ok and "loop" in check.reason


def test_del_edge_precondition():
    g = path("a", "b", "c")
    assert check_step(g, OpStep(DEL_EDGE, ("a", "b"), "c")).ok
    with pytest.raises(GraphError):
        check_step(g, OpStep(DEL_EDGE, ("a", "c"), "b"))


def test_add_edge_requires_absent_edge():
    g = path("a", "b", "c")
    with pytest.raises(GraphError):
        check_step(g, OpStep(ADD_EDGE, ("a", "b"), "c"))


def test_step_construction_guards():
    with pytest.raises(GraphError):
        OpStep(DEL_VERTEX, "v", "v")
    with pytest.raises(GraphError):
        OpStep(DEL_EDGE, ("a", "b"), "a")
    with pytest.raises(GraphError):
        OpStep(ADD_EDGE, ("a", "a"), "u")
    with pytest.raises(GraphError):
        OpStep("remove", "v", "u")


def test_apply_step_raises_with_diagnostic():
    g = path("a", "b", "c")
    with pytest.raises(PreconditionError, match="survive"):
        apply_step(g, OpStep(DEL_VERTEX, "b", "a"))


def test_apply_step_edits():
    g = path("u", "x", "y", "z", "v")
    h = apply_step(g, OpStep(ADD_EDGE, ("u", "v"), "y"))
    assert h.has_edge("u", "v")
    h2 = apply_step(h, OpStep(DEL_EDGE, ("u", "x"), "z"))
    assert not h2.has_edge("u", "x")
    h3 = apply_step(h2, OpStep(DEL_VERTEX, "z", "x"))
    assert "z" not in h3.vertex_set


def test_face_counts_move_the_right_way():
    g = path("u", "x", "y", "z", "v")
    n0 = independence_complex(g).n_faces()
    h = apply_step(g, OpStep(ADD_EDGE, ("u", "v"), "y"))
    assert independence_complex(h).n_faces() < n0
    h2 = apply_step(h, OpStep(DEL_EDGE, ("u", "x"), "z"))
    assert independence_complex(h2).n_faces() > independence_complex(h).n_faces()
    h3 = apply_step(h2, OpStep(DEL_VERTEX, "z", "x"))
    assert independence_complex(h3).n_faces() < independence_complex(h2).n_faces()


def test_step_directions():
    assert step_direction(OpStep(DEL_VERTEX, "v", "u")) == "collapse"
    assert step_direction(OpStep(ADD_EDGE, ("a", "b"), "u")) == "collapse"
    assert step_direction(OpStep(DEL_EDGE, ("a", "b"), "u")) == "expansion"


def test_replay_passes_and_checks_chi():
    g = path("u", "x", "y", "z", "v")
    final = make_graph(["u", "v", "x", "y"], [("u", "v"), ("x", "y")])
    cert = Certificate(
        "edge-to-path", g,
        (
            OpStep(ADD_EDGE, ("u", "v"), "y"),
            OpStep(DEL_EDGE, ("u", "x"), "z"),
            OpStep(DEL_VERTEX, "z", "x"),
        ),
        final,
    )
    report = replay(cert, checks="chi+betti")
    assert report.passed
    chis = {s.chi_after for s in report.steps}
    assert len(chis) == 1


def test_replay_reordered_steps_fails_at_first_broken_step():
    g = path("u", "x", "y", "z", "v")
    final = make_graph(["u", "v", "x", "y"], [("u", "v"), ("x", "y")])
    cert = Certificate(
        "reordered", g,
        (
            OpStep(DEL_EDGE, ("u", "x"), "z"),
            OpStep(ADD_EDGE, ("u", "v"), "y"),
            OpStep(DEL_VERTEX, "z", "x"),
        ),
        final,
    )
    report = replay(cert)
    assert not report.passed
    assert report.failure == "precondition"
    assert "step 0" in report.failure_detail


def test_replay_detects_final_mismatch():
    g = path("a", "b", "c")
    wrong_final = path("a", "b", "c")
    cert = Certificate(
        "wrong-final", g, (OpStep(DEL_VERTEX, "c", "a"),), wrong_final
    )
    report = replay(cert)
    assert not report.passed and report.failure == "final_mismatch"


def test_certificate_json_round_trip():
    text = """
    {
      "name": "demo",
      "initial": {"family": "C", "m": 1, "n": 6},
      "steps": [
        {"op": "add_edge", "target": ["r1c1", "r1c5"], "witness": "r1c3"},
        {"op": "del_edge", "target": ["r1c1", "r1c2"], "witness": "r1c4"},
        {"op": "del_vertex", "target": "r1c4", "witness": "r1c2"}
      ],
      "expected_final": {
        "vertices": ["r1c1", "r1c2", "r1c3", "r1c5", "r1c6"],
        "edges": [["r1c1", "r1c5"], ["r1c1", "r1c6"], ["r1c5", "r1c6"],
                  ["r1c2", "r1c3"]],
        "loops": []
      },
      "note": "wrap a hexagon down to a triangle and a detached edge"
    }
    """
    cert = certificate_from_json(text)
    assert len(cert.steps) == 3
    report = replay(cert, checks="chi")
    assert report.passed, report.failure_detail
    again = certificate_from_json(cert.to_json())
    assert again.steps == cert.steps
    assert again.name == cert.name
