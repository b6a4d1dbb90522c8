"""Core complex operations against brute-force subset oracles."""

from itertools import combinations

import pytest

from grapes import (
    Complex,
    InputError,
    alexander_dual,
    complex_from_json,
    complex_to_json,
    cone_apexes,
    cone_over,
    deletion,
    enumerate_complexes,
    equals,
    extend_ground,
    full_simplex,
    irrelevant_complex,
    is_subcomplex,
    join,
    link,
    minimal_nonfaces,
    new_complex,
    restrict_ground,
    simplex_boundary,
    suspension,
    void_complex,
)
from grapes.generators import cycle_complex


def fs(*names):
    return frozenset(names)


def cx(ground, *facets):
    return new_complex(ground, [frozenset(f) for f in facets])


def all_subsets(ground):
    for k in range(len(ground) + 1):
        for combo in combinations(ground, k):
            yield frozenset(combo)


def brute_faces(c):
    """Oracle: scan every subset of the ground set for facet containment."""
    return {s for s in all_subsets(c.ground) if any(s <= f for f in c.facets)}


def brute_dual_faces(c):
    full = frozenset(c.ground)
    faces = brute_faces(c)
    return {s for s in all_subsets(c.ground) if (full - s) not in faces}


def brute_minimal_nonfaces(c):
    faces = brute_faces(c)
    out = set()
    for s in all_subsets(c.ground):
        if s in faces:
            continue
        if all((s - {x}) in faces for x in s):
            out.add(s)
    return out


# -- construction ------------------------------------------------------------


def test_new_complex_absorbs_nonmaximal_faces():
    c = cx("ab", "a", "ab")
    assert c.facets == {fs("a", "b")}


def test_new_complex_void_and_irrelevant():
    assert cx("ab").is_void
    assert cx("ab", "").is_irrelevant
    assert cx("ab", "").facets == {frozenset()}


def test_new_complex_rejects_unknown_elements():
    with pytest.raises(InputError):
        cx("ab", "ac")


def test_ground_must_be_distinct_nonempty_names():
    with pytest.raises(InputError):
        Complex(("a", "a"), frozenset())
    with pytest.raises(InputError):
        Complex(("",), frozenset())


# -- faces / vertices ----------------------------------------------------------


def test_faces_of_edge():
    c = cx("ab", "ab")
    assert c.faces() == {fs(), fs("a"), fs("b"), fs("a", "b")}


def test_faces_of_void_is_empty():
    assert void_complex("ab").faces() == frozenset()


def test_faces_of_two_points():
    c = cx("ab", "a", "b")
    assert c.faces() == {fs(), fs("a"), fs("b")}


def test_faces_matches_subset_scan_oracle():
    c = cx("abcd", "abc", "bd")
    assert set(c.faces()) == brute_faces(c)


def test_vertices():
    c = cx("abcd", "ab", "c")
    assert c.vertices() == fs("a", "b", "c")
    assert irrelevant_complex("ab").vertices() == frozenset()
    assert void_complex("ab").vertices() == frozenset()


# -- deletion / link -------------------------------------------------------------


def test_deletion_and_link_of_path_complex():
    c = cx("abc", "ab", "bc")
    assert equals(deletion(c, "b"), cx("ac", "a", "c"))
    assert equals(link(c, "b"), cx("ac", "a", "c"))
    assert deletion(c, "b").ground == ("a", "c")


def test_link_of_independence_complex_center():
    # link at the middle vertex of {ac, b}: only the empty face survives
    c = cx("abc", "ac", "b")
    result = link(c, "b")
    assert result.is_irrelevant
    assert result.ground == ("a", "c")
    # oracle: faces sigma with b not in sigma and sigma + {b} a face
    faces = brute_faces(c)
    expected = {s for s in faces if "b" not in s and (s | {"b"}) in faces}
    assert brute_faces(result) == expected


def test_deletion_link_require_ground_element():
    c = cx("ab", "ab")
    with pytest.raises(InputError):
        deletion(c, "z")
    with pytest.raises(InputError):
        link(c, "z")


def test_link_of_nonvertex_is_void():
    c = cx("abc", "ab")
    assert link(c, "c").is_void


# -- join / cone / suspension ------------------------------------------------------


def test_join_of_two_points_is_edge():
    a = cx("xy", "x")
    b = cx("xy", "y")
    assert join(a, b).facets == {fs("x", "y")}


def test_join_with_void_is_void():
    assert join(void_complex("xy"), cx("xy", "x")).is_void


def test_join_of_zero_spheres_is_four_cycle():
    ground = "abcd"
    s1 = cx(ground, "a", "b")
    s2 = cx(ground, "c", "d")
    four_cycle = cx(ground, "ac", "ad", "bc", "bd")
    assert equals(join(s1, s2), four_cycle)


def test_join_requires_shared_ground():
    with pytest.raises(InputError):
        join(cx("ab", "a"), cx("ac", "a"))


def test_cone_over_irrelevant_is_point():
    c = cone_over(irrelevant_complex(()), "v")
    assert c.facets == {fs("v")}
    assert c.ground == ("v",)


def test_cone_rejects_existing_vertex():
    with pytest.raises(InputError):
        cone_over(cx("ab", "ab"), "a")


def test_cone_over_nonvertex_ground_element_is_allowed():
    c = cone_over(cx("ab", "a"), "b")
    assert c.facets == {fs("a", "b")}


def test_suspension_of_irrelevant_is_two_points():
    c = suspension(irrelevant_complex(()), "x", "y")
    assert c.facets == {fs("x"), fs("y")}


def test_suspension_of_two_points_is_four_cycle():
    s0 = cx("ab", "a", "b")
    result = suspension(s0, "x", "y")
    # oracle: expand the join definition over {void face, x, y}
    expected_facets = {fs("a", "x"), fs("a", "y"), fs("b", "x"), fs("b", "y")}
    assert result.facets == expected_facets


def test_suspension_rejects_duplicate_or_used_points():
    with pytest.raises(InputError):
        suspension(cx("ab", "a"), "x", "x")
    with pytest.raises(InputError):
        suspension(cx("ab", "a"), "a", "y")


# -- cones -------------------------------------------------------------------------


def test_cone_apexes_simple():
    assert cone_apexes(cx("abc", "ab", "ac")) == fs("a")
    assert cone_apexes(cx("ab", "a")) == fs("a")


def test_five_cycle_is_not_a_cone():
    c5 = cycle_complex(5)
    # oracle: no vertex lies in all five edge facets
    assert not any(
        all(v in f for f in c5.facets) for v in c5.vertices()
    )
    assert cone_apexes(c5) == frozenset()


def test_void_and_irrelevant_are_not_cones():
    assert cone_apexes(void_complex("ab")) == frozenset()
    assert cone_apexes(irrelevant_complex("ab")) == frozenset()


# -- minimal non-faces and the dual --------------------------------------------------


def test_minimal_nonfaces_of_five_cycle_are_the_diagonals():
    c5 = cycle_complex(5)
    expected = {fs("a", "c"), fs("a", "d"), fs("b", "d"), fs("b", "e"), fs("c", "e")}
    assert minimal_nonfaces(c5) == expected
    assert brute_minimal_nonfaces(c5) == expected


def test_minimal_nonfaces_of_full_simplex_is_empty():
    assert minimal_nonfaces(full_simplex("abc")) == frozenset()


def test_minimal_nonfaces_of_void():
    assert minimal_nonfaces(void_complex("ab")) == {frozenset()}


def test_dual_of_void_is_full_simplex():
    assert equals(alexander_dual(void_complex("abc")), full_simplex("abc"))


def test_dual_of_irrelevant_is_simplex_boundary():
    assert equals(alexander_dual(irrelevant_complex("abc")), simplex_boundary("abc"))


def test_dual_of_two_points_on_two_elements_is_irrelevant():
    c = cx("ab", "a", "b")
    assert alexander_dual(c).is_irrelevant


def test_dual_matches_brute_force_face_test():
    for c in (
        cx("abcd", "abc", "bd"),
        cycle_complex(5),
        cx("abc", "a"),
        void_complex("abc"),
        irrelevant_complex("abc"),
    ):
        assert brute_faces(alexander_dual(c)) == brute_dual_faces(c)


def test_dual_depends_on_ground_set():
    small = alexander_dual(cx("ab", "a"))
    big = alexander_dual(cx("abc", "a"))
    assert small.facets != big.facets


# -- ground plumbing ------------------------------------------------------------------


def test_restrict_ground():
    c = cx("ab", "a")
    r = restrict_ground(c)
    assert r.ground == ("a",)
    assert r.facets == c.facets
    assert restrict_ground(void_complex("ab")).ground == ()
    assert restrict_ground(cx("ab", "ab")).ground == ("a", "b")


def test_extend_ground():
    c = extend_ground(cx("v", "v"), ["w"])
    assert c.ground == ("v", "w")
    assert c.facets == {fs("v")}
    # extending with an existing element is a no-op
    assert extend_ground(c, ["v"]).ground == ("v", "w")


def test_is_subcomplex_link_in_deletion():
    for c in (cx("abc", "ab", "bc"), cycle_complex(4), cx("abc", "abc")):
        for a in c.ground:
            assert is_subcomplex(link(c, a), deletion(c, a))


def test_is_subcomplex_requires_equal_grounds():
    with pytest.raises(InputError):
        is_subcomplex(cx("ab", "a"), cx("abc", "a"))


def test_double_dual_on_all_small_complexes():
    for ground in ("", "a", "ab", "abc", "abcd"):
        for c in enumerate_complexes(ground):
            assert equals(alexander_dual(alexander_dual(c)), c)


# -- JSON ------------------------------------------------------------------------------


def test_json_round_trip():
    c = cx("abc", "ab", "c")
    data = complex_to_json(c)
    assert data == {"ground": ["a", "b", "c"], "facets": [["c"], ["a", "b"]]}
    assert equals(complex_from_json(data), c)


def test_json_void_and_irrelevant_encoding():
    assert complex_to_json(void_complex("ab"))["facets"] == []
    assert complex_to_json(irrelevant_complex("ab"))["facets"] == [[]]
    assert complex_from_json({"ground": ["a"], "facets": []}).is_void
    assert complex_from_json({"ground": ["a"], "facets": [[]]}).is_irrelevant


def test_json_rejects_malformed_input():
    with pytest.raises(InputError):
        complex_from_json({"ground": "ab", "facets": []})
    with pytest.raises(InputError):
        complex_from_json({"ground": ["a"], "facets": [["b"]]})
    with pytest.raises(InputError):
        complex_from_json([1, 2])


# -- enumeration ------------------------------------------------------------------------


def test_enumerate_complexes_counts():
    # numbers of antichains in the boolean lattice (Dedekind numbers)
    expected = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168}
    for n, count in expected.items():
        ground = "abcd"[:n]
        assert sum(1 for _ in enumerate_complexes(ground)) == count
