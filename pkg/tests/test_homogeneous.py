from __future__ import annotations

import random

import pytest

from flagcalc.dynkin import parse_diagram, positive_roots
from flagcalc.errors import DomainError, ParseError
from flagcalc.homogeneous import (
    MarkedDiagram,
    contraction_fiber,
    dimension,
    enumerate_two_bundles,
    is_projective_space,
    is_two_bundle_pair,
    parse_marked,
    picard_number,
)

from oracles import expected_two_bundle_keys


def entry_key(e):
    return (e.diagram.components[0][0], e.diagram.rank, (e.i, e.j))


def test_parse_marked():
    m = parse_marked("B3{1,3}")
    assert m.diagram.render() == "B3" and m.marks == (1, 3)
    assert m.render() == "B3{1,3}"


def test_parse_marked_normalizes_coincidences():
    # the center of the raw rank-3 D diagram becomes the middle node of A3
    m = parse_marked("D3{1,3}")
    assert m.diagram.render() == "A3" and m.marks == (2, 3)


def test_parse_marked_errors():
    with pytest.raises(ParseError):
        parse_marked("B3")
    with pytest.raises(DomainError):
        parse_marked("B3{4}")
    with pytest.raises(DomainError):
        MarkedDiagram(parse_diagram("A2"), ())


@pytest.mark.parametrize("n", range(1, 9))
def test_dimension_projective_space(n):
    assert dimension(parse_marked(f"A{n}{{1}}")) == n


def test_dimension_examples():
    assert dimension(parse_marked("B3{1}")) == 5
    assert dimension(parse_marked("A2{1,2}")) == 3
    assert dimension(parse_marked("B3{1,3}")) == 8


def test_dimension_complete_flag_is_root_count():
    for text in ["A3", "B3", "C4", "D4", "G2", "F4"]:
        d = parse_diagram(text)
        all_marks = tuple(d.nodes)
        assert dimension(MarkedDiagram(d, all_marks)) == len(positive_roots(d).roots)


def test_dimension_strictly_monotone():
    rng = random.Random(7)
    diagrams = [parse_diagram(t) for t in ["A5", "B4", "C5", "D5", "F4", "E6"]]
    for _ in range(200):
        d = rng.choice(diagrams)
        nodes = list(d.nodes)
        size_j = rng.randint(2, len(nodes))
        j = set(rng.sample(nodes, size_j))
        i = set(rng.sample(sorted(j), rng.randint(1, size_j - 1)))
        assert dimension(MarkedDiagram(d, tuple(i))) < dimension(MarkedDiagram(d, tuple(j)))


def test_picard_number():
    assert picard_number(parse_marked("A5{2}")) == 1
    assert picard_number(parse_marked("G2{1,2}")) == 2
    assert picard_number(parse_marked("A3{1,2,3}")) == 3


def test_contraction_fiber_examples():
    f = contraction_fiber(parse_diagram("B3"), {1, 3}, {1})
    assert f.fiber.render() == "B2{2}"
    assert dimension(f.fiber) == 3
    assert f.dropped is None

    f = contraction_fiber(parse_diagram("A5"), {1, 5}, {1})
    assert f.fiber.render() == "A4{4}"

    f = contraction_fiber(parse_diagram("F4"), {2, 3}, {3})
    assert f.fiber.render() == "A2{2}"
    assert f.dropped is not None and f.dropped.render() == "A1"


def test_contraction_fiber_errors():
    d = parse_diagram("A3")
    with pytest.raises(DomainError):
        contraction_fiber(d, {1, 2}, {3})
    with pytest.raises(DomainError):
        contraction_fiber(d, {1, 2}, {1, 2})
    with pytest.raises(DomainError):
        contraction_fiber(d, {1, 2}, set())


def test_fiber_dimension_additivity():
    rng = random.Random(11)
    diagrams = [parse_diagram(t) for t in ["A6", "B5", "C4", "D6", "F4", "E7"]]
    for _ in range(200):
        d = rng.choice(diagrams)
        nodes = list(d.nodes)
        size_j = rng.randint(2, len(nodes))
        j = set(rng.sample(nodes, size_j))
        i = set(rng.sample(sorted(j), rng.randint(1, size_j - 1)))
        fiber = contraction_fiber(d, j, i)
        total = dimension(MarkedDiagram(d, tuple(j)))
        base = dimension(MarkedDiagram(d, tuple(i)))
        assert total == base + dimension(fiber.fiber)


def test_is_projective_space():
    assert is_projective_space(parse_marked("A4{4}")) == 4
    assert is_projective_space(parse_marked("A4{1}")) == 4
    assert is_projective_space(parse_marked("C3{1}")) == 5
    assert is_projective_space(parse_marked("B3{1}")) is None
    assert is_projective_space(parse_marked("B2{2}")) == 3
    assert is_projective_space(parse_marked("C2{1}")) == 3
    assert is_projective_space(parse_marked("B2{1}")) is None
    assert is_projective_space(parse_marked("A4{2}")) is None
    assert is_projective_space(parse_marked("A4{1,4}")) is None
    assert is_projective_space(parse_marked("A2+A1{1}")) is None
    assert is_projective_space(parse_marked("D4{1}")) is None


def test_is_projective_space_dimension_consistency():
    # whenever a marked diagram is reported as projective r-space its
    # dimension must be r
    for text in ["A1{1}", "A5{5}", "C2{1}", "C4{1}", "B2{2}"]:
        m = parse_marked(text)
        r = is_projective_space(m)
        assert r is not None and dimension(m) == r


def test_enumerate_rank_two():
    got = {entry_key(e) for e in enumerate_two_bundles(2)}
    assert got == {("A", 2, (1, 2)), ("B", 2, (1, 2)), ("G", 2, (1, 2))}


def test_enumerate_rank_three():
    got = {entry_key(e) for e in enumerate_two_bundles(3)}
    assert got == {
        ("A", 2, (1, 2)),
        ("A", 3, (1, 2)),
        ("A", 3, (2, 3)),
        ("A", 3, (1, 3)),
        ("B", 2, (1, 2)),
        ("B", 3, (2, 3)),
        ("B", 3, (1, 3)),
        ("C", 3, (1, 2)),
        ("C", 3, (2, 3)),
        ("G", 2, (1, 2)),
    }


def test_enumerate_matches_classification_list():
    for max_rank in (2, 3, 4, 6, 8):
        got = {entry_key(e) for e in enumerate_two_bundles(max_rank)}
        assert got == expected_two_bundle_keys(max_rank), max_rank


def test_enumerate_d4_triality_collapsed():
    entries = [e for e in enumerate_two_bundles(4) if e.diagram.render() == "D4"]
    assert [(e.i, e.j) for e in entries] == [(3, 4)]
    # the raw triality images are two-bundle pairs too
    d4 = parse_diagram("D4")
    assert is_two_bundle_pair(d4, 1, 3) is not None
    assert is_two_bundle_pair(d4, 1, 4) is not None


def test_enumerate_relative_dimensions():
    by_key = {entry_key(e): e for e in enumerate_two_bundles(6)}
    e = by_key[("A", 5, (1, 2))]
    assert (e.r_minus, e.r_plus) == (1, 4)
    e = by_key[("B", 3, (1, 3))]
    assert (e.r_minus, e.r_plus) == (2, 3)
    e = by_key[("C", 4, (1, 2))]
    assert (e.r_minus, e.r_plus) == (1, 5)
    e = by_key[("G", 2, (1, 2))]
    assert (e.r_minus, e.r_plus) == (1, 1)


def test_enumerate_entry_dimensions_consistent():
    for e in enumerate_two_bundles(6):
        m = MarkedDiagram(e.diagram, (e.i, e.j))
        assert e.dim == dimension(m)
        base_plus = dimension(MarkedDiagram(e.diagram, (e.i,)))
        base_minus = dimension(MarkedDiagram(e.diagram, (e.j,)))
        assert e.dim == base_plus + e.r_plus
        assert e.dim == base_minus + e.r_minus


def test_enumerate_stable_under_automorphisms():
    from flagcalc.dynkin import automorphisms
    from flagcalc.homogeneous import _canonical_pair

    entries = enumerate_two_bundles(8)
    keys = {(e.diagram, e.i, e.j) for e in entries}
    for e in entries:
        if len(e.diagram.components) != 1:
            continue
        for sigma in automorphisms(e.diagram):
            image = _canonical_pair(e.diagram, sigma[e.i - 1], sigma[e.j - 1])
            assert image in keys


def test_enumerate_swapping_marks_is_harmless():
    d = parse_diagram("B3")
    assert is_two_bundle_pair(d, 1, 3) == (2, 3)
    # the unordered pair is what the enumeration stores
    entries = [e for e in enumerate_two_bundles(3) if e.diagram.render() == "B3"]
    assert all(e.i < e.j for e in entries)


def test_enumerate_rejects_small_rank():
    with pytest.raises(DomainError):
        enumerate_two_bundles(1)
