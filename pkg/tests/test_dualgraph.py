"""Graph validation, canonical divisor, diagonal reconstruction."""

from fractions import Fraction

import pytest

import frozen
from mmideal import (
    SingularityClass,
    attach_ideals,
    build_graph,
    derive_diagonal,
    graph_from_adjacency,
    singularity_class,
)
from mmideal.errors import (
    BadOffDiagonal,
    Disconnected,
    DivisionByZero,
    LengthMismatch,
    NonIntegralSelfIntersection,
    NotAntinef,
    NotNegativeDefinite,
    NotSymmetric,
    NotTree,
)


def test_rat6_canonical_and_fundamental(rat6):
    assert rat6.graph.canonical == frozen.RAT6_CANONICAL
    assert rat6.graph.fundamental == frozen.RAT6_FUNDAMENTAL


def test_rat6_excesses(rat6):
    for i in range(rat6.r):
        for j in range(rat6.size):
            assert rat6.excesses[i][j] == frozen.RAT6_EXCESSES.get((i + 1, j + 1), 0)


def test_chain10_diagonal_and_canonical_round_trip():
    diagonal = derive_diagonal(
        frozen.CHAIN10_EDGES, frozen.CHAIN10_CANONICAL, one_based=True
    )
    assert diagonal == frozen.CHAIN10_DIAGONAL
    graph = graph_from_adjacency(
        frozen.CHAIN10_EDGES, frozen.CHAIN10_CANONICAL, one_based=True
    )
    assert graph.canonical == tuple(Fraction(k) for k in frozen.CHAIN10_CANONICAL)


def test_chain10_is_a_chain(chain10):
    # ten components in a path: two leaves, eight valence-2 vertices
    valences = sorted(chain10.graph.valence(j) for j in range(10))
    assert valences == [1, 1] + [2] * 8
    assert not any(chain10.graph.rupture)


def test_nest14_diagonal(nest14):
    diagonal = tuple(nest14.graph.matrix[j][j] for j in range(nest14.size))
    assert diagonal == frozen.NEST14_DIAGONAL


def test_nest14_inconsistent_canonical_rejected():
    with pytest.raises(NonIntegralSelfIntersection):
        derive_diagonal(
            frozen.NEST14_EDGES,
            frozen.NEST14_CANONICAL_INCONSISTENT,
            one_based=True,
        )


def test_prop16_diagonal_and_excesses(prop16):
    diagonal = tuple(prop16.graph.matrix[j][j] for j in range(prop16.size))
    assert diagonal == frozen.PROP16_DIAGONAL
    for i in range(prop16.r):
        for j in range(prop16.size):
            assert prop16.excesses[i][j] == frozen.PROP16_EXCESSES.get(
                (i + 1, j + 1), 0
            )


def test_prop16_bad_tail_is_not_antinef(prop16):
    bad = list(frozen.PROP16_F1)
    bad[15] = frozen.PROP16_BAD_TAIL
    with pytest.raises(NotAntinef):
        attach_ideals(prop16.graph, [bad])


def test_validation_chain():
    with pytest.raises(NotSymmetric):
        build_graph([[-2, 1], [0, -2]])
    with pytest.raises(BadOffDiagonal):
        build_graph([[-2, 2], [2, -2]])
    with pytest.raises(NotNegativeDefinite):
        build_graph([[0]])
    with pytest.raises(Disconnected):
        build_graph([[-2, 0], [0, -2]])
    with pytest.raises(NotTree):
        build_graph(
            [[-3, 1, 1], [1, -3, 1], [1, 1, -3]]
        )
    with pytest.raises(NotNegativeDefinite):
        build_graph([[-1, 1], [1, -1]])
    with pytest.raises(LengthMismatch):
        build_graph([])


def test_derive_diagonal_division_by_zero():
    with pytest.raises(DivisionByZero):
        derive_diagonal((), (Fraction(-1),))


def test_attach_ideals_validation(rat6):
    graph = rat6.graph
    with pytest.raises(LengthMismatch):
        attach_ideals(graph, [(1, 2, 3)])
    with pytest.raises(NotAntinef):
        attach_ideals(graph, [(0, 0, 0, 0, 0, 0)])
    with pytest.raises(NotAntinef):
        attach_ideals(graph, [(1, 1, 1, 1, 1, 1)])  # positive products
    with pytest.raises(NotAntinef):
        attach_ideals(graph, [[-3, -2, -3, -1, -1, -1]])


def test_singularity_classes(tuples):
    assert singularity_class(tuples["RAT6"].graph) is SingularityClass.LOG_CANONICAL_ONLY
    assert singularity_class(tuples["CHAIN10"].graph) is SingularityClass.LOG_TERMINAL
    assert singularity_class(tuples["SMOOTH1"].graph) is SingularityClass.LOG_TERMINAL
    # star with a (-2) center and four (-3) arms has a center coefficient -2
    size = 5
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = -2
    for arm in range(1, size):
        rows[arm][arm] = -3
        rows[0][arm] = rows[arm][0] = 1
    graph = build_graph(rows)
    assert graph.canonical[0] == Fraction(-2)
    assert singularity_class(graph) is SingularityClass.NEITHER


def test_labels(rat6):
    graph = rat6.graph
    assert graph.label(0) == "E1"
    assert graph.index_of("E6") == 5
    with pytest.raises(LengthMismatch):
        graph.index_of("E7")
