"""Text file formats: curve documents and total-reality certificates.

Curve documents are line-oriented: a ``format`` version, optional ``name``
and ``note`` metadata, a ``degree`` line, and one ``coeff a b c num den``
record per monomial x^a y^b z^c with exact reduced rational num/den.
Parsing is strict (line-precise errors, no non-reduced fractions, no
exponent mismatches, no duplicate monomials) and serialization is canonical
(records sorted by exponent triple), so parse -> serialize -> parse is the
identity on the document data.

Certificate files record a certification run: the verdict, the exact
isolating intervals of the critical parameters, the per-interval sample
counts, the witness parameter on failure, and the two pencil generators
inline in the curve record syntax.  Field order is fixed for diffing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ProjectivePoint, Q, TernaryForm
from .pencil import (Pencil, PencilParameter, TotalRealityCertificate)
from .realroots import IsolatingInterval

FORMAT_VERSION = 1


class CurveFileError(ValueError):
    """Parse failure with a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


@dataclass(frozen=True)
class CurveDocument:
    degree: int
    coefficients: tuple            # ((a, b, c, Fraction), ...) sorted
    name: str = ""
    notes: tuple = ()

    @property
    def form(self) -> TernaryForm:
        return TernaryForm(self.degree,
                           {(a, b, c): q for (a, b, c, q) in self.coefficients})


def document_of_form(F: TernaryForm, name: str = "",
                     notes=()) -> CurveDocument:
    coeffs = tuple(sorted((a, b, c, q)
                          for (a, b, c), q in F.coeffs.items()))
    return CurveDocument(F.degree, coeffs, name, tuple(notes))


def _split_fields(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        yield lineno, parts[0], parts[1:]


def _parse_int(lineno: int, token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CurveFileError(lineno, f"{what} is not an integer: {token!r}")


def _parse_rational_pair(lineno: int, num_tok: str, den_tok: str) -> Fraction:
    num = _parse_int(lineno, num_tok, "numerator")
    den = _parse_int(lineno, den_tok, "denominator")
    if den <= 0:
        raise CurveFileError(lineno, f"denominator must be positive: {den}")
    if math.gcd(abs(num), den) != 1:
        raise CurveFileError(lineno, f"fraction not reduced: {num}/{den}")
    return Fraction(num, den)


def parse_curve(text: str) -> CurveDocument:
    degree = None
    name = ""
    notes = []
    records = {}
    order = []
    for lineno, key, args in _split_fields(text):
        if key == "format":
            if len(args) != 1 or _parse_int(lineno, args[0], "format") \
                    != FORMAT_VERSION:
                raise CurveFileError(lineno, "unsupported format version")
        elif key == "name":
            name = " ".join(args)
        elif key == "note":
            notes.append(" ".join(args))
        elif key == "degree":
            if len(args) != 1:
                raise CurveFileError(lineno, "degree takes one integer")
            degree = _parse_int(lineno, args[0], "degree")
            if degree < 1:
                raise CurveFileError(lineno, f"degree must be >= 1: {degree}")
        elif key == "coeff":
            if degree is None:
                raise CurveFileError(lineno, "coeff before degree")
            if len(args) != 5:
                raise CurveFileError(lineno, "coeff takes a b c num den")
            a = _parse_int(lineno, args[0], "exponent")
            b = _parse_int(lineno, args[1], "exponent")
            c = _parse_int(lineno, args[2], "exponent")
            if min(a, b, c) < 0:
                raise CurveFileError(lineno, "negative exponent")
            if a + b + c != degree:
                raise CurveFileError(
                    lineno, f"exponents {a}+{b}+{c} != degree {degree}")
            q = _parse_rational_pair(lineno, args[3], args[4])
            if q == 0:
                raise CurveFileError(lineno, "zero coefficient record")
            if (a, b, c) in records:
                raise CurveFileError(lineno, f"duplicate monomial {(a, b, c)}")
            records[(a, b, c)] = q
            order.append(lineno)
        else:
            raise CurveFileError(lineno, f"unknown field {key!r}")
    if degree is None:
        raise CurveFileError(1 + text.count("\n"), "missing degree")
    if not records:
        raise CurveFileError(1 + text.count("\n"), "no coefficients")
    coeffs = tuple(sorted((a, b, c, q) for (a, b, c), q in records.items()))
    return CurveDocument(degree, coeffs, name, tuple(notes))


def serialize_curve(doc: CurveDocument) -> str:
    lines = [f"format {FORMAT_VERSION}"]
    if doc.name:
        lines.append(f"name {doc.name}")
    for n in doc.notes:
        lines.append(f"note {n}")
    lines.append(f"degree {doc.degree}")
    for (a, b, c, q) in sorted(doc.coefficients):
        lines.append(f"coeff {a} {b} {c} {q.numerator} {q.denominator}")
    return "\n".join(lines) + "\n"


def load_curve(path) -> CurveDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_curve(fh.read())


def save_curve(doc: CurveDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_curve(doc))


# ---------------------------------------------------------------------------
# certificate files
# ---------------------------------------------------------------------------

def _fmt_q(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _parse_q(lineno: int, tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/", 1)
        return _parse_rational_pair(lineno, num, den)
    return Fraction(_parse_int(lineno, tok, "rational"))


def _fmt_param(par: PencilParameter) -> str:
    return "inf" if par.infinite else _fmt_q(par.lam)


def _parse_param(lineno: int, tok: str) -> PencilParameter:
    if tok == "inf":
        return PencilParameter(infinite=True)
    return PencilParameter(lam=_parse_q(lineno, tok))


def serialize_certificate(cert: TotalRealityCertificate,
                          pencil: Pencil) -> str:
    lines = [f"format {FORMAT_VERSION}", f"verdict {cert.verdict}"]
    for iv in cert.critical_parameters:
        lines.append(f"critical {_fmt_q(iv.low)} {_fmt_q(iv.high)}")
    for par, real, total in cert.per_interval_counts:
        lines.append(f"count {_fmt_param(par)} {real} {total}")
    if cert.witness is not None:
        lines.append(f"witness {_fmt_param(cert.witness)}")
    lines.append(f"pencil-degree {pencil.k}")
    for pt in pencil.base_points:
        x, y, z = pt.coords()
        lines.append(f"base-point {_fmt_q(x)} {_fmt_q(y)} {_fmt_q(z)}")
    for label, gen in (("f", pencil.f), ("g", pencil.g)):
        lines.append(f"generator {label}")
        for (a, b, c), q in sorted(gen.coeffs.items()):
            lines.append(
                f"coeff {a} {b} {c} {q.numerator} {q.denominator}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str):
    """(TotalRealityCertificate, Pencil) back from a certificate file."""
    verdict = None
    criticals = []
    counts = []
    witness = None
    k = None
    base_points = []
    gens = {}
    current_gen = None
    for lineno, key, args in _split_fields(text):
        if key == "format":
            if len(args) != 1 or _parse_int(lineno, args[0], "format") \
                    != FORMAT_VERSION:
                raise CurveFileError(lineno, "unsupported format version")
        elif key == "verdict":
            verdict = args[0] if args else None
            if verdict not in ("totally-real", "not-totally-real"):
                raise CurveFileError(lineno, f"unknown verdict {verdict!r}")
        elif key == "critical":
            if len(args) != 2:
                raise CurveFileError(lineno, "critical takes low high")
            criticals.append(IsolatingInterval(
                _parse_q(lineno, args[0]), _parse_q(lineno, args[1]), 1))
        elif key == "count":
            if len(args) != 3:
                raise CurveFileError(lineno, "count takes param real total")
            counts.append((_parse_param(lineno, args[0]),
                           _parse_int(lineno, args[1], "count"),
                           _parse_int(lineno, args[2], "count")))
        elif key == "witness":
            witness = _parse_param(lineno, args[0])
        elif key == "pencil-degree":
            k = _parse_int(lineno, args[0], "pencil degree")
        elif key == "base-point":
            if len(args) != 3:
                raise CurveFileError(lineno, "base-point takes x y z")
            base_points.append(ProjectivePoint(*[_parse_q(lineno, t)
                                                 for t in args]))
        elif key == "generator":
            if k is None:
                raise CurveFileError(lineno, "generator before pencil-degree")
            current_gen = args[0] if args else None
            if current_gen not in ("f", "g") or current_gen in gens:
                raise CurveFileError(lineno, "generators must be f then g")
            gens[current_gen] = {}
        elif key == "coeff":
            if current_gen is None:
                raise CurveFileError(lineno, "coeff outside a generator")
            if len(args) != 5:
                raise CurveFileError(lineno, "coeff takes a b c num den")
            a, b, c = (_parse_int(lineno, t, "exponent") for t in args[:3])
            if a + b + c != k:
                raise CurveFileError(
                    lineno, f"exponents {a}+{b}+{c} != degree {k}")
            gens[current_gen][(a, b, c)] = _parse_rational_pair(
                lineno, args[3], args[4])
        else:
            raise CurveFileError(lineno, f"unknown field {key!r}")
    end = 1 + text.count("\n")
    if k is None or set(gens) != {"f", "g"}:
        raise CurveFileError(end, "missing pencil generators")
    pencil = Pencil(k, TernaryForm(k, gens["f"]), TernaryForm(k, gens["g"]),
                    tuple(base_points))
    if verdict is None:
        # pencil-only document (output of `pencil build`): no certificate
        return None, pencil
    cert = TotalRealityCertificate(verdict, tuple(criticals), tuple(counts),
                                   witness)
    return cert, pencil


def serialize_pencil(pencil: Pencil) -> str:
    """Pencil-only document: certificate syntax without the verdict block."""
    lines = [f"format {FORMAT_VERSION}", f"pencil-degree {pencil.k}"]
    for pt in pencil.base_points:
        x, y, z = pt.coords()
        lines.append(f"base-point {_fmt_q(x)} {_fmt_q(y)} {_fmt_q(z)}")
    for label, gen in (("f", pencil.f), ("g", pencil.g)):
        lines.append(f"generator {label}")
        for (a, b, c), q in sorted(gen.coeffs.items()):
            lines.append(
                f"coeff {a} {b} {c} {q.numerator} {q.denominator}")
    return "\n".join(lines) + "\n"
