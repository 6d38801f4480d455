"""The quadruple relation, its gadget, and the compiled reduction."""

import itertools
import random

import pytest

from helpers import (
    gadget_images_rigid,
    occurrences_switched_coherently,
    reduction_occurrences,
)
from sephom import BLUE, RED, SignedGraph, walk_sign
from sephom.hardness import (
    QuadCsp,
    build_gadget,
    build_reduction,
    csp_solve,
    quad_relation,
)
from sephom.solver import check_solution, solve_oracle
from sephom.targets import build_reduction_target

TRUE_QUADS = [
    (1, 1, 1, 1),
    (1, 0, 0, 0),
    (0, 0, 1, 0),
    (0, 1, 1, 0),
    (1, 1, 0, 0),
    (1, 1, 0, 1),
    (0, 1, 1, 1),
]
FALSE_QUADS = [
    (1, 0, 1, 0),
    (0, 1, 0, 0),
    (1, 1, 1, 0),
    (0, 1, 0, 1),
]


def test_quad_relation_pinned_values():
    for q in TRUE_QUADS:
        assert quad_relation(*q)
    for q in FALSE_QUADS:
        assert not quad_relation(*q)


def test_quad_relation_full_table():
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        assert quad_relation(a, b, c, d) == ((a == b == c == d) or (a != c))


def test_quad_relation_is_zero_and_one_valid():
    assert quad_relation(0, 0, 0, 0)
    assert quad_relation(1, 1, 1, 1)


def test_quadcsp_validation():
    with pytest.raises(ValueError, match="duplicate variable"):
        QuadCsp(("p", "p"), ())
    with pytest.raises(ValueError, match="length"):
        QuadCsp(("p",), (("p", "p", "p"),))
    with pytest.raises(ValueError, match="undeclared"):
        QuadCsp(("p",), (("p", "p", "p", "q"),))


def test_csp_solve_examples():
    csp = QuadCsp(("p", "q"), (("p", "q", "p", "q"),))
    assert csp_solve(csp) == {"p": 0, "q": 0}
    csp = QuadCsp(("p", "q"), (("p", "p", "q", "p"), ("q", "q", "p", "q")))
    assert csp_solve(csp) == {"p": 0, "q": 0}


def test_every_quadcsp_is_satisfiable():
    # The relation holds on all-equal tuples, so all-zeros always works and
    # the unsatisfiable branch of the reduction can only be exercised
    # vacuously.
    rng = random.Random(7)
    names = ("p", "q", "r", "s")
    for _ in range(200):
        quads = tuple(
            tuple(rng.choice(names) for _ in range(4))
            for _ in range(rng.randint(1, 3))
        )
        sol = csp_solve(QuadCsp(names, quads))
        assert sol is not None
        assert all(
            quad_relation(sol[a], sol[b], sol[c], sol[d]) for a, b, c, d in quads
        )


def test_build_gadget_validates_the_parameter():
    for bad in (3, 4, 6, -1):
        with pytest.raises(ValueError, match="odd count >= 5"):
            build_gadget(bad)


def test_gadget_signs_are_frozen():
    g5 = build_gadget(5)
    spine = [g5.graph.colour(i, i + 1) for i in range(5)]
    assert spine == [RED, BLUE, RED, RED, BLUE]
    assert g5.graph.colour(3, 6) is BLUE
    assert g5.graph.colour(2, 7) is BLUE

    g7 = build_gadget(7)
    spine = [g7.graph.colour(i, i + 1) for i in range(7)]
    assert spine == [BLUE, BLUE, BLUE, RED, BLUE, BLUE, BLUE]
    assert g7.graph.colour(3, 8) is BLUE
    assert g7.graph.colour(4, 9) is BLUE


def test_gadget_lists():
    g = build_gadget(5)
    assert g.lists[0] == frozenset({0})
    assert g.lists[5] == frozenset({5})
    assert g.lists[6] == frozenset({0})
    assert g.lists[7] == frozenset({5})
    assert g.lists[1] == frozenset({1, 6})
    assert g.lists[2] == frozenset({2, 7})
    assert g.lists[3] == frozenset({3, 6})
    assert g.lists[4] == frozenset({4, 7})
    assert (g.a, g.b, g.c, g.d) == (0, 6, 5, 7)


def gadget_walk_checks(ell):
    b_at, d_at = 3, ell - 3
    step = 1 if d_at >= b_at else -1
    between = list(range(b_at, d_at + step, step))
    return [
        (list(range(0, b_at + 1)) + [ell + 1], "+"),
        (list(range(ell, d_at - 1, -1)) + [ell + 2], "+"),
        (list(range(0, ell + 1)), "-"),
        (list(range(0, d_at + 1)) + [ell + 2], "-"),
        ([ell + 1] + list(range(b_at, ell + 1)), "-"),
        ([ell + 1] + between + [ell + 2], "-"),
    ]


def test_gadget_satisfies_the_six_sign_constraints():
    for ell in (5, 7, 9):
        g = build_gadget(ell)
        for walk, want in gadget_walk_checks(ell):
            assert walk_sign(g.graph, walk) == want


def test_printed_sign_assignment_also_satisfies_the_constraints():
    colours = [RED, BLUE, RED, BLUE, RED]
    edges = [(i, i + 1, colours[i]) for i in range(5)]
    edges.append((3, 6, BLUE))
    edges.append((2, 7, BLUE))
    graph = SignedGraph(8, edges)
    for walk, want in gadget_walk_checks(5):
        assert walk_sign(graph, walk) == want


def test_reduction_layout():
    csp = QuadCsp(("p", "q", "r", "s"), (("p", "q", "r", "s"),))
    inst = build_reduction(csp, 5)
    assert inst.g.n == 8

    csp = QuadCsp(("p", "q"), (("p", "q", "p", "q"),))
    inst = build_reduction(csp, 5)
    assert inst.g.n == 16
    assert inst.lists[8:12] == (
        frozenset({1}),
        frozenset({2}),
        frozenset({3}),
        frozenset({4}),
    )

    two_left = QuadCsp(("p", "q", "r"), (("p", "p", "q", "r"),))
    inst = build_reduction(two_left, 5)
    assert inst.g.n == 9
    assert inst.lists[8] == frozenset({1})

    two_right = QuadCsp(("p", "q", "r"), (("p", "q", "r", "r"),))
    inst = build_reduction(two_right, 5)
    assert inst.g.n == 9
    assert inst.lists[8] == frozenset({4})


def test_reduction_instances_solve_like_the_csp():
    rng = random.Random(11)
    names = ("p", "q", "r", "s")
    for _ in range(30):
        quads = tuple(
            tuple(rng.choice(names) for _ in range(4))
            for _ in range(rng.randint(1, 3))
        )
        csp = QuadCsp(names, quads)
        for ell in (5, 7):
            inst = build_reduction(csp, ell)
            h = build_reduction_target(ell)
            sol = solve_oracle(inst, h)
            assert (sol is not None) == (csp_solve(csp) is not None)
            assert sol is not None
            assert check_solution(inst, h, sol) == []
            assert gadget_images_rigid(sol.mapping, len(csp.quads), ell)
            occ = reduction_occurrences(csp, ell)
            assert occurrences_switched_coherently(occ, sol.switching.flipped)
