import pytest

import harem


def test_finite_solver():
    g = harem.Graph.parse("A 0: 0 1 2 3\nA 1: 0 1 2 3\n")
    m = harem.solve_harem(g, 2)
    assert m == {0: [0, 1], 1: [2, 3]}
    assert len(harem.brute_force_harem(g, 2)) == 6
    assert harem.check_hall_harem(g, 2)
    assert harem.verify_matching(g, 2, m) == []
    assert harem.verify_matching(g, 2, {0: [0, 1], 1: [2]}) == [
        "left 1 has 1 partners",
        "right 3 uncovered",
    ]


def test_infeasible_and_parse_error():
    g = harem.Graph.parse("A 0: 0\nA 1: 0\n")
    assert harem.solve_harem(g, 1) is None
    with pytest.raises(harem.ParseError):
        harem.Graph.parse("A 0: 1 1\n")


def test_optional_rights():
    g = harem.Graph.from_rows({0: [0, 1, 2]})
    m = harem.solve_harem(g, 1, required_right=[2], optional_right=[0, 1])
    assert m == {0: [2]}


def test_words():
    assert harem.reduce(2, "abBA") == "e"
    assert harem.mul(2, "ab", "Ba") == "aa"
    assert harem.inv(2, "ab") == "BA"
    assert [harem.index_to_word(2, i) for i in range(5)] == ["e", "a", "A", "b", "B"]
    assert harem.word_to_index(2, "ab") == 6
    assert len(harem.ball(2, 0, 2)) == 17


def test_witness_and_folner():
    assert harem.wbt_free(2, ["a", "b"]) == ("a", "b")
    assert harem.wbt_free(2, ["a", "aa", "A"]) is None
    assert harem.folner_search(1, ["a"], 3, 3, 5) == [0, 1, 2, 3]
    assert harem.folner_search(2, ["a", "b"], 2, 2, 5) is None


def test_engine():
    e = harem.Engine.free_group()
    step = e.run_step()
    assert step == {"left": 0, "rights": [0, 1], "pivot": "L0", "radius": 5}
    assert e.match_right(8) == 2
    assert e.committed() == {0: [0, 1], 2: [2, 8]}
    with pytest.raises(harem.BallBudgetExceeded):
        harem.Engine.free_group(max_ball=10).match_left(0)
    f = harem.Engine.finite(harem.Graph.parse("A 0: 0\nA 1: 0\n"), 1)
    with pytest.raises(harem.CEHHCViolation):
        f.run_step()


def test_decomposition_and_cli():
    rows = harem.classic_rows(0, 3).splitlines()
    assert rows[1] == "0\te\t0\te\t4\tB\te\tB"
    assert harem.verify_classic(1000)
    code, out, _ = harem.run_cli(["wbt", "--rank", "2", "--set", "a,b"])
    assert (code, out) == (0, "WITNESS a b\n")
