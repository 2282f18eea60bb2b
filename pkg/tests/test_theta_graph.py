"""Normal forms, refactorization and enumeration on small graphs."""

import random

import pytest

from twograph import (
    BLUE,
    RED,
    BadRangeError,
    Degree,
    IdOutOfRangeError,
    NotBijectiveError,
    PatternMismatchError,
    SizeLimitError,
    SpecMismatchError,
    TwoGraph,
    flip_graph,
    random_two_graph,
    twin_graph,
)

from _oracles import randomized_reorder


def test_degree_lattice():
    a, b = Degree(2, 1), Degree(1, 3)
    assert a + b == b + a == Degree(3, 4)
    assert (a + b) - b == a
    assert a.join(b) == Degree(2, 3)
    assert a.meet(b) == Degree(1, 1)
    assert not a.leq(b) and not b.leq(a)
    assert a.leq(a.join(b)) and b.leq(a.join(b))


def test_degree_addition_cancels():
    for a in (Degree(0, 0), Degree(1, 2), Degree(3, 0)):
        for b in (Degree(0, 1), Degree(2, 2)):
            for c in (Degree(1, 1), Degree(0, 3)):
                if a + c == b + c:
                    assert a == b


# -- validation ---------------------------------------------------------------


def test_validate_trivial_graph():
    g = TwoGraph(1, 1, {(0, 0): (0, 0)})
    assert g.commute_blue_red(0, 0) == (0, 0)


def test_validate_flip():
    flip_graph(2, 2).validate()


def test_validate_rejects_repeated_image():
    rows = [(0, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1)]
    with pytest.raises(NotBijectiveError) as exc:
        TwoGraph(2, 2, rows)
    assert exc.value.witness is not None


def test_validate_rejects_missing_pair():
    rows = [(0, 0, 0, 0)]
    with pytest.raises(NotBijectiveError) as exc:
        TwoGraph(2, 2, rows)
    assert exc.value.witness == (0, 1)


def test_validate_rejects_out_of_range_ids():
    with pytest.raises(IdOutOfRangeError):
        TwoGraph(2, 2, {(0, 0): (0, 5), (0, 1): (0, 0), (1, 0): (1, 1), (1, 1): (1, 0)})


# -- the commutation rule ------------------------------------------------------


def test_commute_flip_swaps_unchanged():
    g = flip_graph(2, 2)
    assert g.commute_blue_red(1, 0) == (0, 1)


def test_commute_twin_carries_indices():
    g = twin_graph(2)
    assert g.commute_blue_red(1, 0) == (1, 0)


def test_commute_trivial():
    g = TwoGraph(1, 1, {(0, 0): (0, 0)})
    assert g.commute_blue_red(0, 0) == (0, 0)


def test_commute_red_blue_inverts_blue_red():
    rng = random.Random(7)
    for _ in range(10):
        g = random_two_graph(rng.randint(1, 3), rng.randint(1, 3), rng)
        for e in range(g.n_blue):
            for f in range(g.n_red):
                ff, ee = g.commute_blue_red(e, f)
                assert g.commute_red_blue(ff, ee) == (e, f)


def test_commute_twin_red_blue():
    g = twin_graph(2)
    assert g.commute_red_blue(1, 0) == (1, 0)


def test_commute_rejects_out_of_range():
    g = flip_graph(2, 2)
    with pytest.raises(IdOutOfRangeError):
        g.commute_blue_red(2, 0)


# -- reorder -------------------------------------------------------------------


def test_reorder_flip_keeps_ids():
    g = flip_graph(2, 2)
    path = g.path("b0 r1")
    assert path.reorder("RB") == [(RED, 1), (BLUE, 0)]


def test_reorder_twin_moves_indices():
    g = twin_graph(2)
    path = g.path("b0 r1")
    assert path.reorder("RB") == [(RED, 0), (BLUE, 1)]


def test_reorder_normal_form_is_identity():
    rng = random.Random(3)
    g = random_two_graph(3, 2, rng)
    for path in g.enumerate_paths((2, 2)):
        assert path.reorder("BBRR") == path.word()


def test_reorder_rejects_wrong_pattern():
    g = flip_graph(2, 2)
    with pytest.raises(PatternMismatchError):
        g.path("b0 r1").reorder("BB")


# -- segment -------------------------------------------------------------------


def test_segment_full_range_is_identity():
    g = twin_graph(2)
    path = g.path("b0 b1 r1 r0")
    assert path.segment((0, 0), path.degree) == path


def test_segment_twin_middle_block():
    g = twin_graph(2)
    path = g.path("b0 r1")
    assert path.segment((0, 1), (1, 1)) == g.blue_path(1)


def test_segment_empty():
    g = twin_graph(2)
    path = g.path("b0 r1")
    empty = path.segment((1, 0), (1, 0))
    assert empty.degree == Degree(0, 0)


def test_segment_rejects_bad_range():
    g = twin_graph(2)
    path = g.path("b0 r1")
    with pytest.raises(BadRangeError):
        path.segment((1, 1), (0, 0))
    with pytest.raises(BadRangeError):
        path.segment((0, 0), (2, 2))


# -- compose -------------------------------------------------------------------


def test_compose_unit():
    g = twin_graph(2)
    path = g.path("b0 r1")
    assert path * g.empty_path() == path
    assert g.empty_path() * path == path


def test_compose_flip():
    g = flip_graph(2, 2)
    assert g.red_path(0) * g.blue_path(1) == g.path("b1 r0")


def test_compose_twin():
    g = twin_graph(2)
    assert g.red_path(0) * g.blue_path(1) == g.path("b0 r1")


def test_compose_degree_adds():
    rng = random.Random(11)
    g = random_two_graph(2, 3, rng)
    x, y = g.path("b0 r2 r1"), g.path("b1 b0 r0")
    assert (x * y).degree == x.degree + y.degree


def test_compose_rejects_other_graph():
    with pytest.raises(SpecMismatchError):
        flip_graph(2, 2).blue_path(0) * twin_graph(2).blue_path(0)


# -- enumeration ---------------------------------------------------------------


def test_enumerate_count_mixed():
    g = flip_graph(2, 3)
    assert len(g.enumerate_paths((2, 1))) == 12


def test_enumerate_empty_degree():
    g = flip_graph(2, 3)
    assert g.enumerate_paths((0, 0)) == [g.empty_path()]


def test_enumerate_square():
    g = flip_graph(2, 2)
    assert len(g.enumerate_paths((1, 1))) == 4


def test_enumerate_is_lexicographic():
    g = flip_graph(2, 2)
    words = [p.pretty() for p in g.enumerate_paths((1, 1))]
    assert words == sorted(words)


def test_enumerate_cap():
    g = flip_graph(3, 3)
    with pytest.raises(SizeLimitError):
        g.enumerate_paths((4, 4), cap=10)


def test_cardinality_random():
    rng = random.Random(5)
    for _ in range(5):
        g = random_two_graph(rng.randint(1, 3), rng.randint(1, 3), rng)
        for n1 in range(3):
            for n2 in range(3):
                expected = g.n_blue**n1 * g.n_red**n2
                assert len(g.enumerate_paths((n1, n2))) == expected


# -- factorization properties ---------------------------------------------------


def _random_pattern(degree, rng):
    pattern = [BLUE] * degree.n1 + [RED] * degree.n2
    rng.shuffle(pattern)
    return pattern


def test_reorder_confluence_sampled():
    rng = random.Random(17)
    for _ in range(5):
        g = random_two_graph(rng.randint(2, 3), rng.randint(2, 3), rng)
        for n1 in range(3):
            for n2 in range(3):
                for path in g.enumerate_paths((n1, n2)):
                    for pattern in (
                        [RED] * n2 + [BLUE] * n1,
                        _random_pattern(path.degree, rng),
                    ):
                        expected = path.reorder(pattern)
                        for _ in range(2):
                            got = randomized_reorder(g, path, pattern, rng)
                            assert got == expected


def test_reorder_round_trip():
    rng = random.Random(23)
    for _ in range(5):
        g = random_two_graph(rng.randint(2, 3), rng.randint(2, 3), rng)
        for path in g.enumerate_paths((2, 2)):
            pattern = _random_pattern(path.degree, rng)
            word = path.reorder(pattern)
            assert g.path(word) == path


def test_segment_compose_consistency():
    rng = random.Random(29)
    for _ in range(4):
        g = random_two_graph(rng.randint(2, 3), rng.randint(2, 3), rng)
        for n1 in range(3):
            for n2 in range(3):
                for path in g.enumerate_paths((n1, n2)):
                    for p1 in range(n1 + 1):
                        for p2 in range(n2 + 1):
                            cut = Degree(p1, p2)
                            head = path.segment((0, 0), cut)
                            tail = path.segment(cut, path.degree)
                            assert head * tail == path


def test_segment_three_way():
    g = twin_graph(3)
    path = g.path("b0 b2 r1 r2")
    p, q = Degree(1, 1), Degree(2, 1)
    parts = (
        path.segment((0, 0), p)
        * path.segment(p, q)
        * path.segment(q, path.degree)
    )
    assert parts == path


# -- serialization ---------------------------------------------------------------


def test_json_round_trip():
    rng = random.Random(31)
    g = random_two_graph(3, 2, rng)
    assert TwoGraph.from_json(g.to_json()) == g


def test_json_file_round_trip(tmp_path):
    import json

    g = twin_graph(3)
    target = tmp_path / "graph.json"
    target.write_text(json.dumps(g.to_json()))
    assert TwoGraph.from_file(str(target)) == g


def test_json_rejects_non_bijection():
    with pytest.raises(NotBijectiveError):
        TwoGraph.from_json(
            {"n1": 2, "n2": 2, "theta": [[0, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]]}
        )


def test_path_parsing_and_pretty():
    g = twin_graph(2)
    path = g.path("r1, b0")
    assert path == g.path([(RED, 1), (BLUE, 0)])
    assert g.empty_path().pretty() == "e"


def test_path_equality_is_word_equality():
    g = flip_graph(2, 2)
    assert g.path("b0 r1") == g.path("r1 b0")
    assert g.path("b0 r1") != g.path("b1 r1")
    assert hash(g.path("b0 r1")) == hash(g.path("r1 b0"))
