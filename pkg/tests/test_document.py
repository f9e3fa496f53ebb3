import pytest

from cantrans import ParseError, minimize, parse, serialize, validate
from cantrans.document import parse_prefix_map, serialize_prefix_map
from cantrans.algebra import PrefixCodeMap
from cantrans import fixtures


def test_fixture_integrity():
    for name, doc in fixtures.ALL.items():
        t = parse(doc)
        assert validate(t) == [], name


def test_roundtrip_on_fixtures():
    for doc in fixtures.ALL.values():
        t = parse(doc)
        assert serialize(parse(serialize(t))) == serialize(t)


def test_serialize_is_normal_form_of_document():
    # whitespace and comments normalize away
    messy = """
# a comment
cantor-transducer 1
alphabet   n=2   r=1
initial q0
q0 .0 -> s : .0    # echo
s 0 -> s : 0
s 1 -> s : 1
"""
    t = parse(messy)
    assert serialize(parse(serialize(t))) == serialize(t)


def test_header_required():
    with pytest.raises(ParseError) as err:
        parse("alphabet n=2 r=1\n")
    assert err.value.line == 1


def test_missing_transition_reported_with_line():
    doc = """cantor-transducer 1
alphabet n=2 r=1
initial q0
q0 .0 -> s : .0
s 0 -> s : 0
"""
    with pytest.raises(ParseError) as err:
        parse(doc)
    assert "incomplete transition table" in str(err.value)
    assert "(s, 1)" in str(err.value).replace("'", "")


def test_degenerate_document_rejected_with_line():
    doc = """cantor-transducer 1
alphabet n=2 r=1
initial q0
q0 .0 -> s : .0
s 0 -> s : -
s 1 -> s : 1
"""
    with pytest.raises(ParseError) as err:
        parse(doc)
    assert "cycle" in str(err.value)
    doc2 = doc.replace("q0 .0 -> s : .0", "q0 .0 -> s : -")
    with pytest.raises(ParseError) as err:
        parse(doc2)
    assert "pre-root" in str(err.value) and "line 6" in str(err.value)


def test_syntax_error_position():
    doc = """cantor-transducer 1
alphabet n=2 r=1
initial q0
q0 .0 -> s
"""
    with pytest.raises(ParseError) as err:
        parse(doc)
    assert err.value.line == 4


def test_duplicate_transition_rejected():
    doc = """cantor-transducer 1
alphabet n=2 r=1
initial q0
q0 .0 -> s : .0
s 0 -> s : 0
s 0 -> s : 1
s 1 -> s : 1
"""
    with pytest.raises(ParseError) as err:
        parse(doc)
    assert "duplicate" in str(err.value)


def test_core_document_roundtrip():
    t = parse(fixtures.SYNCHRONOUS_CORE_3)
    assert t.mode == "core"
    assert t.r is None
    again = parse(serialize(t))
    assert again.trans == t.trans


def test_minimized_machine_serializes():
    t = minimize(parse(fixtures.SAMPLE_3_2))
    doc = serialize(t)
    assert parse(doc).trans == t.trans


def test_prefix_map_parse_and_serialize():
    text = """.0 0 -> .1
.0 1 -> .0 0
.1 -> .0 1
"""
    dom, ran = parse_prefix_map(text)
    pm = PrefixCodeMap(dom, ran)
    assert serialize_prefix_map(pm) == text
    with pytest.raises(ParseError):
        parse_prefix_map(".0 0 .1\n")


def test_serialize_parse_fuzz():
    from cantrans import Alphabet, serialize
    from cantrans.randgen import random_transducer
    for seed in range(25):
        t = random_transducer(Alphabet(3, 2), 4, 2, 70_000 + seed)
        again = parse(serialize(t))
        assert again.trans == t.trans
        assert again.initial == t.initial
        assert set(again.states) == set(t.states)


def test_bad_alphabet_values_are_parse_errors():
    doc = """cantor-transducer 1
alphabet n=2 r=2
initial q0
q0 .0 -> s : .0
q0 .1 -> s : .1
s 0 -> s : 0
s 1 -> s : 1
"""
    with pytest.raises(ParseError) as err:
        parse(doc)
    assert err.value.line == 2
