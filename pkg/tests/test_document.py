from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sharksfin.document import DocumentError, InputDocument, parse_document

SHARKSFIN_DOC = """\
# the sharksfin seed
mode: germ
order: 4
term 1 1 1 1
term 2 2 0 1
term 2 0 2 1
term 2 3 0 1   # cubic
"""


def test_parse_germ():
    doc = parse_document(SHARKSFIN_DOC)
    assert doc.mode == "germ" and doc.order == 4 and not doc.floating
    f = doc.germ()
    assert f.f1[1, 1] == 1 and f.f2[3, 0] == 1


def test_terms_are_sorted_and_canonical():
    doc = parse_document("mode: germ\norder: 3\nterm 2 0 2 2/4\nterm 1 1 1 -3\n")
    assert doc.terms == ((1, 1, 1, -3), (2, 0, 2, Fraction(1, 2)))
    assert "term 2 0 2 1/2" in doc.to_text()


def test_decimals_mark_floating():
    doc = parse_document("mode: germ\norder: 3\nterm 1 1 1 1\nterm 2 2 0 0.5\n")
    assert doc.floating
    assert doc.germ().kind == "float"


def test_umbrella_and_motion():
    u = parse_document("mode: umbrella\nc3: 1\nd20: -1\nd02: 1\nd12: 1/3\n")
    assert u.umbrella().d12 == Fraction(1, 3)
    m = parse_document("mode: motion\na1: 1\na2: 0, 1\nb1: 0 1\nb2: 1\nomega: 0, 0\n")
    assert m.motion().a2 == (0, 1)
    assert m.germ(order=3).f1[2, 0] == 1


@pytest.mark.parametrize("text,needle", [
    ("order: 3\nterm 1 1 1 1\n", "missing 'mode:'"),
    ("mode: germ\nterm 1 1 1 1\n", "need an 'order:'"),
    ("mode: germ\norder: 2\nterm 1 3 0 1\n", "exceeds order"),
    ("mode: germ\norder: 2\nterm 3 1 0 1\n", "component"),
    ("mode: germ\norder: 2\nterm 1 0 0 1\n", "vanish at the origin"),
    ("mode: germ\norder: 2\nterm 1 1 0 1\nterm 1 1 0 2\n", "duplicate"),
    ("mode: germ\norder: 2\nterm 1 1 0 1/0\n", "zero denominator"),
    ("mode: germ\norder: 2\nterm 1 1 0 abc\n", "not a number"),
    ("mode: germ\norder: 2\nterm 1 1 0 inf\n", "non-finite"),
    ("mode: surface\n", "unknown mode"),
    ("mode: umbrella\nc3: 1\nd20: 1\n", "need d02"),
    ("mode: umbrella\nc3: 1\nd20: 1\nd02: 1\nq: 1\n", "unexpected key"),
    ("mode: motion\na1: 1\n", "need omega"),
    ("mode: motion\nomega: 1\n", "two coordinates"),
    ("mode: germ\norder: 2\njunk\n", "cannot parse"),
])
def test_malformed(text, needle):
    with pytest.raises(DocumentError, match=needle):
        parse_document(text)


def test_error_reports_line():
    with pytest.raises(DocumentError) as exc:
        parse_document("mode: germ\norder: 2\n\nterm 1 1 0 x\n")
    assert exc.value.line == 4


def test_invalid_umbrella_values():
    doc = parse_document("mode: umbrella\nc3: -1\nd20: 1\nd02: 1\n")
    with pytest.raises(DocumentError):
        doc.umbrella()


numbers = st.one_of(
    st.fractions(min_value=-50, max_value=50, max_denominator=20),
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False),
)


@st.composite
def germ_docs(draw):
    order = draw(st.integers(min_value=1, max_value=6))
    keys = st.tuples(st.sampled_from([1, 2]), st.integers(0, order), st.integers(0, order)).filter(
        lambda k: 1 <= k[1] + k[2] <= order)
    table = draw(st.dictionaries(keys, numbers, max_size=10))
    terms = tuple(sorted((c, i, j, v) for (c, i, j), v in table.items()))
    return InputDocument("germ", order, terms)


@st.composite
def umbrella_docs(draw):
    keys = draw(st.lists(st.sampled_from(["d11", "d30", "d21", "d12", "d03"]), unique=True))
    vals = {"c3": draw(numbers), "d20": draw(numbers), "d02": draw(numbers)}
    vals.update({k: draw(numbers) for k in keys})
    order_ = ("c3", "d20", "d11", "d02", "d30", "d21", "d12", "d03")
    return InputDocument("umbrella", draw(st.one_of(st.none(), st.integers(3, 6))), (),
                         tuple((k, vals[k]) for k in order_ if k in vals))


@st.composite
def motion_docs(draw):
    keys = draw(st.lists(st.sampled_from(["a1", "a2", "p", "b1", "b2", "q"]), unique=True))
    vals = {k: tuple(draw(st.lists(numbers, min_size=1, max_size=4))) for k in keys}
    vals["omega"] = (draw(numbers), draw(numbers))
    order_ = ("a1", "a2", "p", "b1", "b2", "q", "omega")
    return InputDocument("motion", None, (), tuple((k, vals[k]) for k in order_ if k in vals))


@given(st.one_of(germ_docs(), umbrella_docs(), motion_docs()))
def test_round_trip(doc):
    again = parse_document(doc.to_text())
    assert again == doc
    assert parse_document(again.to_text()).to_text() == doc.to_text()
