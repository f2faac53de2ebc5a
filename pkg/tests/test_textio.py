import pytest
from hypothesis import given, settings, strategies as st

from krasner.fixtures import FIXTURE_FILES, fixture_text, load_fixture
from krasner.textio import (ParseError, format_set, format_tuple, parse_label_list,
                            parse_structure, serialize)

TINY = """hyperring Z2
m 2
n 2
elements a b
zero a
one b
commutative add
commutative mul
add a a -> a
add a b -> b
add b b -> a
mul a a -> a
mul a b -> a
mul b b -> b
endo id: a->a b->b
"""


def _without(text, line):
    return "\n".join(x for x in text.splitlines() if x.strip() != line) + "\n"


def test_tiny_parses():
    sf = parse_structure(TINY)
    assert sf.table.size == 2 and sf.endos == {"id": {"a": "a", "b": "b"}}
    assert sf.line_map[("add", ("a", "b"))] == 10


def test_missing_tuple_message():
    with pytest.raises(ParseError, match=r"missing tuple \(a,b\)"):
        parse_structure(_without(TINY, "add a b -> b"))


def test_s4_missing_row():
    text = _without(fixture_text("S4"), "add 2 3 -> 1")
    with pytest.raises(ParseError, match=r"missing tuple \(2,3\)"):
        parse_structure(text)


@pytest.mark.parametrize("extra, pattern", [
    ("add a a -> b", "duplicate tuple"),
    ("add a c -> a", "unknown element 'c'"),
    ("mul a a a -> a", "has 3 arguments"),
    ("add b a -> a", "disagree"),
    ("frobnicate", "unknown directive"),
    ("m 3", "duplicate 'm'"),
    ("mul b a -> a b", "exactly one"),
    ("endo id: a->a b->b", "duplicate endo"),
    ("endo half: a->a", "not total"),
])
def test_errors_carry_location(extra, pattern):
    with pytest.raises(ParseError, match=pattern) as info:
        parse_structure(TINY + extra + "\n", "tiny.hkr")
    if info.value.line is not None:
        assert str(info.value).startswith("tiny.hkr:")


def test_missing_zero():
    with pytest.raises(ParseError, match="missing zero"):
        parse_structure(_without(TINY, "zero a"))


def test_bad_integer_has_line_and_column():
    with pytest.raises(ParseError) as info:
        parse_structure(TINY.replace("m 2", "  m two"))
    assert (info.value.line, info.value.column) == (2, 3)


@pytest.mark.parametrize("key", sorted(FIXTURE_FILES))
def test_round_trip(key):
    sf = load_fixture(key)
    text = serialize(sf.table, sf.endos)
    again = parse_structure(text)
    assert again.table.structurally_equal(sf.table)
    assert again.endos == sf.endos
    assert serialize(again.table, again.endos) == text


def test_round_trip_modulo_whitespace():
    text = fixture_text("P")
    out = serialize(load_fixture("P").table, load_fixture("P").endos)

    def norm(t):
        return [" ".join(x.split("#")[0].split()) for x in t.splitlines() if x.split("#")[0].strip()]
    assert norm(out) == norm(text)


@given(st.permutations(range(7)), st.lists(st.sampled_from(["", "   ", "# note"]), min_size=7,
                                            max_size=7))
@settings(max_examples=40, deadline=None)
def test_row_order_and_noise_do_not_matter(order, noise):
    head, rows = TINY.splitlines()[:8], TINY.splitlines()[8:15]
    shuffled = [rows[i] + (" " + n if n.startswith("#") else n) for i, n in zip(order, noise)]
    sf = parse_structure("\n".join(head + shuffled) + "\n")
    assert sf.table.structurally_equal(parse_structure(TINY).table)


def test_label_lists():
    assert parse_label_list("0,1") == ["0", "1"]
    assert parse_label_list("(0,0),(0,1)") == ["(0,0)", "(0,1)"]
    assert parse_label_list(" [0,1] , [2,3] ") == ["[0,1]", "[2,3]"]
    assert parse_label_list("") == []


def test_printed_witnesses_reparse(PP):
    t = (PP.index("(1,0)"), PP.index("(0,1)"))
    text = format_tuple(PP, t)
    assert text == "((1,0),(0,1))"
    assert tuple(PP.index(x) for x in parse_label_list(text[1:-1])) == t
    S = frozenset(t)
    assert {PP.index(x) for x in parse_label_list(format_set(PP, S)[1:-1])} == S
