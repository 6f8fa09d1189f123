"""Curve and certificate file round-trips and line-precise errors."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepcurve import (CurveFileError, TernaryForm, certify_totally_real,
                      document_of_form, get_fixture, parse_certificate,
                      parse_curve, serialize_certificate, serialize_curve,
                      serialize_pencil)
from sepcurve.pencil import Pencil

GOOD = """\
format 1
name demo circle
note unit circle
degree 2
coeff 2 0 0 1 1
coeff 0 2 0 1 1
coeff 0 0 2 -1 1
"""


def test_round_trip_identity():
    doc = parse_curve(GOOD)
    assert doc.name == "demo circle"
    assert doc.notes == ("unit circle",)
    assert doc.degree == 2
    text = serialize_curve(doc)
    assert parse_curve(text) == doc
    assert serialize_curve(parse_curve(text)) == text


def test_comments_and_blanks_ignored():
    doc = parse_curve("# header\n\n" + GOOD + "\n# trailer\n")
    assert doc == parse_curve(GOOD)


@pytest.mark.parametrize("text,line,frag", [
    ("format 2\ndegree 1\ncoeff 1 0 0 1 1\n", 1, "format version"),
    ("format 1\ncoeff 1 0 0 1 1\n", 2, "before degree"),
    ("format 1\ndegree 2\ncoeff 1 0 0 1 1\n", 3, "!= degree"),
    ("format 1\ndegree 1\ncoeff 1 0 0 1 -1\n", 3, "positive"),
    ("format 1\ndegree 1\ncoeff 1 0 0 2 4\n", 3, "not reduced"),
    ("format 1\ndegree 1\ncoeff 1 0 0 0 1\n", 3, "zero coefficient"),
    ("format 1\ndegree 1\ncoeff 1 0 0 1 1\ncoeff 1 0 0 2 1\n", 4,
     "duplicate"),
    ("format 1\ndegree 1\nslope 3\n", 3, "unknown field"),
    ("format 1\ndegree 0\n", 2, ">= 1"),
    ("format 1\n", 2, "missing degree"),
])
def test_line_precise_errors(text, line, frag):
    with pytest.raises(CurveFileError) as ei:
        parse_curve(text)
    assert ei.value.line == line
    assert frag in ei.value.reason


exponent_triples = st.tuples(st.integers(0, 3), st.integers(0, 3),
                             st.integers(0, 3))
small_q = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@settings(max_examples=80, deadline=None)
@given(st.dictionaries(exponent_triples, small_q, min_size=1, max_size=8))
def test_random_form_round_trip(raw):
    degree = max(sum(t) for t in raw)
    coeffs = {t: q for t, q in raw.items() if sum(t) == degree and q != 0}
    if not coeffs:
        return
    doc = document_of_form(TernaryForm(degree, coeffs), name="rand")
    again = parse_curve(serialize_curve(doc))
    assert again == doc
    assert again.form.coeffs == coeffs


def test_certificate_round_trip():
    circle = get_fixture("circle").form
    f = TernaryForm(1, {(1, 0, 0): 1, (0, 0, 1): -2})
    g = TernaryForm(1, {(0, 1, 0): 1})
    pencil = Pencil(1, f, g, ())
    cert = certify_totally_real(circle, pencil)
    text = serialize_certificate(cert, pencil)
    cert2, pencil2 = parse_certificate(text)
    assert cert2.verdict == cert.verdict
    assert cert2.witness == cert.witness
    assert cert2.per_interval_counts == cert.per_interval_counts
    assert [(iv.low, iv.high) for iv in cert2.critical_parameters] == \
        [(iv.low, iv.high) for iv in cert.critical_parameters]
    assert (pencil2.k, pencil2.f.coeffs, pencil2.g.coeffs,
            pencil2.base_points) == \
        (pencil.k, pencil.f.coeffs, pencil.g.coeffs, pencil.base_points)
    # serialization is stable
    assert serialize_certificate(cert2, pencil2) == text


def test_pencil_only_document():
    f = TernaryForm(1, {(1, 0, 0): 1})
    g = TernaryForm(1, {(0, 1, 0): 1})
    text = serialize_pencil(Pencil(1, f, g, ()))
    cert, pencil = parse_certificate(text)
    assert cert is None
    assert (pencil.f.coeffs, pencil.g.coeffs) == (f.coeffs, g.coeffs)


def test_certificate_bad_verdict():
    with pytest.raises(CurveFileError) as ei:
        parse_certificate("format 1\nverdict maybe\n")
    assert ei.value.line == 2
