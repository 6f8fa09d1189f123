"""Command-line front end.

Commands: ``topology``, ``pencil build|certify|search``, ``quintic``,
``bounds``, ``render``.  Exit codes are a stable contract:

* 0 success (including a certified totally real pencil)
* 2 curve/certificate file parse error
* 3 singular input curve
* 4 invalid arguments
* 10 pencil certified *not* totally real (a verdict, not an error)
* 11 search budget exhausted without a certified pencil

Reports are byte-deterministic given (inputs, seed, version): timings go to
stderr, never into a report.  With ``--output``, report-producing commands
also render an SVG figure next to the report file; figures are
presentational and never feed back into verdicts.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import ProjectivePoint, Q
from .catalog import FIXTURES
from .curvefile import (CurveFileError, document_of_form, load_curve,
                        parse_certificate, serialize_certificate)
from .invariants import (check_partition_against_theory, gabard_bound,
                         genus_of_degree, harnack_bound, m2_sepgon_range,
                         semigroup_cones)
from .orientation import OrientationError, classify_quintic
from .pencil import (PencilError, PencilParameter, build_pencil,
                     certify_totally_real, degree_partition,
                     search_totally_real_pencil)
from .topology import (GenericPositionError, SingularCurveError,
                       compute_topology)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_BADARGS = 4
EXIT_NOT_TOTALLY_REAL = 10
EXIT_EXHAUSTED = 11


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the CLI contract reserves 2 for
    # file parse errors and uses 4 for bad arguments
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(EXIT_BADARGS)


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_form(path: str):
    if path.startswith("fixture:"):
        name = path.split(":", 1)[1]
        if name not in FIXTURES:
            raise CliFailure(EXIT_BADARGS, f"unknown fixture {name!r}")
        doc = document_of_form(FIXTURES[name].form, name=name)
        digest = hashlib.sha256(path.encode()).hexdigest()[:16]
        return doc, digest
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CliFailure(EXIT_BADARGS, f"cannot read {path}: {e}")
    try:
        from .curvefile import parse_curve
        doc = parse_curve(text)
    except CurveFileError as e:
        raise CliFailure(EXIT_PARSE, f"{path}: {e}")
    return doc, hashlib.sha256(text.encode()).hexdigest()[:16]


def _topology_or_fail(form, seed: int):
    try:
        return compute_topology(form, seed)
    except SingularCurveError as e:
        raise CliFailure(EXIT_SINGULAR, f"singular curve: {e}")
    except GenericPositionError as e:
        raise CliFailure(EXIT_SINGULAR, f"degenerate configuration: {e}")
    except ValueError as e:
        # e.g. a form with an identically vanishing partial (a cone)
        raise CliFailure(EXIT_SINGULAR, f"degenerate curve: {e}")


def _parse_points(spec: str):
    pts = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = chunk.split(",")
        if len(coords) != 2:
            raise CliFailure(EXIT_BADARGS, f"bad point {chunk!r}")
        try:
            pts.append(ProjectivePoint.affine(Fraction(coords[0]),
                                              Fraction(coords[1])))
        except (ValueError, ZeroDivisionError):
            raise CliFailure(EXIT_BADARGS, f"bad point {chunk!r}")
    if not pts:
        raise CliFailure(EXIT_BADARGS, "no points given")
    return pts


def _resolve_degree(opt: str, curve_degree: int) -> int:
    if opt == "auto":
        k = curve_degree - 3
        if k < 1:
            raise CliFailure(EXIT_BADARGS,
                             f"degree auto needs curve degree >= 4")
        return k
    try:
        k = int(opt)
    except ValueError:
        raise CliFailure(EXIT_BADARGS, f"bad pencil degree {opt!r}")
    if k < 1:
        raise CliFailure(EXIT_BADARGS, "pencil degree must be >= 1")
    return k


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

class Report:
    """Ordered key/value report; text or tab-delimited machine rendering."""

    def __init__(self, command: str, digest: str):
        self.rows = [("command", command), ("version", __version__),
                     ("input-digest", digest)]

    def add(self, key: str, value):
        self.rows.append((key, str(value)))

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return "".join(f"{k}\t{v}\n" for k, v in self.rows)
        width = max(len(k) for k, _ in self.rows)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in self.rows)


def _emit(report: Report, args, figure=None):
    text = report.render(args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        if figure is not None:
            figure(Path(args.output).with_suffix(".svg"))
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_topology(args) -> int:
    doc, digest = _load_form(args.curve)
    T = _topology_or_fail(doc.form, args.seed)
    rep = Report("topology", digest)
    rep.add("degree", T.degree)
    rep.add("genus", T.genus)
    rep.add("components", len(T.components))
    rep.add("ovals", len(T.ovals()))
    rep.add("pseudo-line", "yes" if T.pseudo_line() is not None else "no")
    for comp in T.components:
        parent = T.nesting[comp.index]
        rep.add(f"component-{comp.index}",
                f"{comp.kind} witness=({comp.witness.x},{comp.witness.y})"
                + (f" inside={parent}" if parent is not None else ""))
    def figure(path):
        from .render import render_arrangement
        render_arrangement(T, path, title=doc.name or "curve")
    _emit(rep, args, figure)
    return EXIT_OK


def _certify_and_report(form, T, pencil, args, digest, attempts=None,
                        cert=None):
    if cert is None:
        cert = certify_totally_real(form, pencil)
    rep = Report("pencil-certify", digest)
    rep.add("verdict", cert.verdict)
    rep.add("pencil-degree", pencil.k)
    rep.add("critical-parameters", len(cert.critical_parameters))
    if attempts is not None:
        rep.add("search-attempts", attempts)
    if cert.verdict == "totally-real":
        if T is not None:
            dp = degree_partition(form, T, pencil, cert)
            rep.add("degree-partition", ",".join(map(str, dp.entries)))
    elif cert.witness is not None:
        rep.add("witness-parameter", cert.witness)
    cert_text = serialize_certificate(cert, pencil)
    if args.output:
        Path(args.output).write_text(cert_text, encoding="utf-8")
        report_path = Path(args.output).with_suffix(".report")
        report_path.write_text(rep.render(args.format), encoding="utf-8")
        if T is not None:
            from .render import render_arrangement
            members = [c[0] for c in cert.per_interval_counts
                       if not c[0].infinite][:8]
            render_arrangement(T, Path(args.output).with_suffix(".svg"),
                               pencil=pencil, member_parameters=members)
    else:
        sys.stdout.write(rep.render(args.format))
    return EXIT_OK if cert.verdict == "totally-real" \
        else EXIT_NOT_TOTALLY_REAL


def cmd_pencil(args) -> int:
    doc, digest = _load_form(args.curve)
    form = doc.form
    k = _resolve_degree(args.degree, form.degree)
    if args.action == "build":
        if not args.points:
            raise CliFailure(EXIT_BADARGS, "build requires --points")
        pts = _parse_points(args.points)
        try:
            pencil = build_pencil(pts, k)
        except PencilError as e:
            raise CliFailure(EXIT_BADARGS, str(e))
        rep = Report("pencil-build", digest)
        rep.add("pencil-degree", k)
        rep.add("base-points", len(pencil.base_points))
        if args.output:
            from .curvefile import serialize_pencil
            Path(args.output).write_text(serialize_pencil(pencil),
                                         encoding="utf-8")
            report_path = Path(args.output).with_suffix(".report")
            report_path.write_text(rep.render(args.format), encoding="utf-8")
        else:
            sys.stdout.write(rep.render(args.format))
        return EXIT_OK
    if args.action == "certify":
        if args.points:
            pts = _parse_points(args.points)
            try:
                pencil = build_pencil(pts, k)
            except PencilError as e:
                raise CliFailure(EXIT_BADARGS, str(e))
        elif args.pencil:
            try:
                _, pencil = parse_certificate(
                    Path(args.pencil).read_text(encoding="utf-8"))
            except CurveFileError as e:
                raise CliFailure(EXIT_PARSE, f"{args.pencil}: {e}")
            except OSError as e:
                raise CliFailure(EXIT_BADARGS, str(e))
        else:
            raise CliFailure(EXIT_BADARGS,
                             "certify requires --points or --pencil")
        T = None
        if args.output:
            T = _topology_or_fail(form, args.seed)
        return _certify_and_report(form, T, pencil, args, digest)
    # search
    T = _topology_or_fail(form, args.seed)
    outcome = search_totally_real_pencil(form, T, degree=k,
                                         budget=args.budget, seed=args.seed)
    if not outcome.pencils:
        rep = Report("pencil-search", digest)
        rep.add("verdict", "exhausted")
        rep.add("attempts", len(outcome.attempts))
        for i, att in enumerate(outcome.attempts):
            rep.add(f"attempt-{i}", att.outcome)
        _emit(rep, args)
        return EXIT_EXHAUSTED
    pencil, cert = outcome.pencils[0]
    return _certify_and_report(form, T, pencil, args, digest,
                               attempts=len(outcome.attempts), cert=cert)


def cmd_quintic(args) -> int:
    doc, digest = _load_form(args.curve)
    if doc.form.degree != 5:
        raise CliFailure(EXIT_BADARGS,
                         f"quintic command needs degree 5, got {doc.degree}")
    try:
        verdict = classify_quintic(doc.form, args.seed)
    except SingularCurveError as e:
        raise CliFailure(EXIT_SINGULAR, f"singular curve: {e}")
    rep = Report("quintic", digest)
    rep.add("position", verdict.position)
    rep.add("conclusion", verdict.separating_conclusion)
    if verdict.triangle_witness is not None:
        w = verdict.triangle_witness
        rep.add("distinguished-oval", w.distinguished_oval)
        rep.add("vertex-ovals", ",".join(map(str, w.vertex_ovals)))
        for i, pt in enumerate(w.vertices):
            rep.add(f"vertex-{i}", f"({pt.x},{pt.y})")
    def figure(path):
        from .render import render_arrangement
        T = compute_topology(doc.form, args.seed)
        render_arrangement(T, path, triangle=verdict.triangle_witness,
                           title=f"{verdict.position} position")
    _emit(rep, args, figure)
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = Report("bounds", "-")
    if args.curve_degree is not None:
        d = args.curve_degree
        if d < 1:
            raise CliFailure(EXIT_BADARGS, "degree must be >= 1")
        g = genus_of_degree(d)
        rep.add("degree", d)
        rep.add("genus", g)
        rep.add("harnack-bound", harnack_bound(d))
        if g >= 2:
            l = g - 1
            rep.add("m2-components", l)
            if 1 <= l <= g + 1:
                rep.add("m2-gabard-bound", gabard_bound(g, l))
            rep.add("m2-sepgon-range",
                    ",".join(map(str, sorted(m2_sepgon_range(g)))))
        genus = g
    elif args.genus is not None:
        genus = args.genus
        rep.add("genus", genus)
        if args.components is not None:
            try:
                rep.add("gabard-bound", gabard_bound(genus, args.components))
            except ValueError as e:
                raise CliFailure(EXIT_BADARGS, str(e))
        if genus >= 2:
            rep.add("m2-sepgon-range",
                    ",".join(map(str, sorted(m2_sepgon_range(genus)))))
    else:
        raise CliFailure(EXIT_BADARGS, "bounds needs --degree or --genus")
    if args.partition:
        try:
            entries = tuple(int(t) for t in args.partition.split(","))
        except ValueError:
            raise CliFailure(EXIT_BADARGS,
                             f"bad partition {args.partition!r}")
        rep.add("partition", ",".join(map(str, entries)))
        if genus >= 3:
            try:
                cones = semigroup_cones(genus, args.case)
            except ValueError as e:
                raise CliFailure(EXIT_BADARGS, str(e))
            for cone in cones:
                anchor = ",".join(map(str, cone.anchor))
                if len(entries) == cone.length:
                    member = cone.membership(entries)
                    rep.add(f"cone-({anchor})",
                            "member" if member else "not-member")
                else:
                    rep.add(f"cone-({anchor})", "length-mismatch")
    _emit(rep, args)
    return EXIT_OK


def cmd_render(args) -> int:
    doc, digest = _load_form(args.curve)
    T = _topology_or_fail(doc.form, args.seed)
    pencil = None
    members = []
    if args.certificate:
        try:
            cert, pencil = parse_certificate(
                Path(args.certificate).read_text(encoding="utf-8"))
        except CurveFileError as e:
            raise CliFailure(EXIT_PARSE, f"{args.certificate}: {e}")
        except OSError as e:
            sys.stderr.write(f"warning: skipping overlay: {e}\n")
        else:
            members = [c[0] for c in cert.per_interval_counts
                       if not c[0].infinite][:args.members]
    triangle = None
    if args.triangle:
        if doc.form.degree != 5:
            sys.stderr.write("warning: triangle overlay needs a quintic; "
                             "skipped\n")
        else:
            verdict = classify_quintic(doc.form, args.seed)
            triangle = verdict.triangle_witness
            if triangle is None:
                sys.stderr.write("warning: no triangle witness (position: "
                                 f"{verdict.position}); skipped\n")
    out = args.output or "arrangement.svg"
    from .render import render_arrangement
    render_arrangement(T, out, pencil=pencil, member_parameters=members,
                       triangle=triangle, title=doc.name or "curve")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=("text", "machine"), default="text")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sepcurve",
                     description="exact topology of real plane curves and "
                                 "totally real pencils")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topology", help="real topology of a curve")
    p.add_argument("curve", help="curve file path or fixture:<name>")
    _add_common(p)
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("pencil", help="build/certify/search pencils")
    p.add_argument("action", choices=("build", "certify", "search"))
    p.add_argument("curve")
    p.add_argument("--points", default=None,
                   help="semicolon-separated x,y rational pairs")
    p.add_argument("--pencil", default=None,
                   help="certificate file providing the pencil")
    p.add_argument("--degree", default="auto",
                   help="pencil degree, integer or 'auto' (= curve degree-3)")
    p.add_argument("--budget", type=int, default=50)
    _add_common(p)
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("quintic", help="convex-position classification")
    p.add_argument("curve")
    _add_common(p)
    p.set_defaults(func=cmd_quintic)

    p = sub.add_parser("bounds", help="closed-form bounds")
    p.add_argument("--degree", dest="curve_degree", type=int, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--components", type=int, default=None)
    p.add_argument("--partition", default=None)
    p.add_argument("--case", choices=("g-1", "g", "unknown"),
                   default="unknown")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("render", help="SVG arrangement figure")
    p.add_argument("curve")
    p.add_argument("--certificate", default=None)
    p.add_argument("--members", type=int, default=8)
    p.add_argument("--triangle", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        code = args.func(args)
    except CliFailure as e:
        sys.stderr.write(f"error: {e}\n")
        return e.code
    except (PencilError, OrientationError, GenericPositionError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_BADARGS
    sys.stderr.write(f"elapsed {time.monotonic() - t0:.1f}s\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
