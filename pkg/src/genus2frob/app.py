"""Command line entry point, curve-file ingestion and report output.

    python -m genus2frob enumerate f2
    python -m genus2frob classify --f "-1,0,1,0,0,0" --h "1,0,0,1"
    python -m genus2frob batch --input curves.txt --output out.json
"""
import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, is_dataclass

from . import __version__
from . import fixtures as fx

EXIT_OK, EXIT_CONDITIONS, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class InputError(ValueError):
    pass


class VerificationError(RuntimeError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    threads: int = 1
    seed: int = 0
    input: str = None
    output: str = None
    format: str = "text"
    bound: int = 40
    options: dict = field(default_factory=dict)


@dataclass
class Report:
    kind: str
    results: list
    columns: list
    summary: list = field(default_factory=list)
    status: int = EXIT_OK


# -- curve files --------------------------------------------------------------

def _parse_line(text, lineno):
    from .classify import CurveOverQ
    label = None
    body = text
    head, sep, rest = text.partition(":")
    if sep and not head.strip().startswith("["):
        label, body = head.strip(), rest
    try:
        data = json.loads("".join(body.split()))
    except json.JSONDecodeError as exc:
        raise InputError("line %d: %s" % (lineno, exc.msg)) from None
    if (not isinstance(data, list) or len(data) != 2
            or not all(isinstance(x, list) for x in data)
            or not all(isinstance(c, int) and not isinstance(c, bool) for x in data for c in x)):
        raise InputError("line %d: expected [[f0,...,fk],[h0,...,hm]] with integers" % lineno)
    f, h = data
    if len(f) > 7:
        raise InputError("line %d: f has degree above 6" % lineno)
    if len(h) > 4:
        raise InputError("line %d: h has degree above 3" % lineno)
    try:
        return CurveOverQ(tuple(f), tuple(h), label)
    except ValueError as exc:
        raise InputError("line %d: %s" % (lineno, exc)) from None


def parse_curves(text):
    out = []
    for i, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append(_parse_line(s, i))
    return out


def ingest_curves(path):
    """One curve per line: optional 'label:' then [[f0,...],[h0,...]]."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror)) from None
    return parse_curves(text)


def format_curve(c):
    body = "[[%s],[%s]]" % (",".join(map(str, c.f)), ",".join(map(str, c.h)))
    return "%s:%s" % (c.label, body) if c.label else body


def write_curves(curves, path):
    with open(path, "w") as fh:
        for c in curves:
            fh.write(format_curve(c) + "\n")


# -- output -------------------------------------------------------------------

def _plain(x):
    if is_dataclass(x):
        x = asdict(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):
        x = x.item()
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return "" if v is None else str(v)


def render(report, fmt, config=None):
    results = [_plain(r) for r in report.results]
    if fmt == "json":
        # the destination path is left out so reruns are byte-identical
        cfg = {k: v for k, v in _plain(config).items() if k != "output"} if config else {}
        meta = {"seed": config.seed if config else 0, "version": __version__, "config": cfg}
        return json.dumps({"meta": meta, "kind": report.kind, "results": results,
                           "summary": report.summary}, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(report.columns)
        for r in results:
            w.writerow([_cell(r.get(c)) for c in report.columns])
        return buf.getvalue()
    if fmt == "text":
        rows = [[_cell(r.get(c)) for c in report.columns] for r in results]
        widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(report.columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(report.columns, widths)).rstrip()]
        for row in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        return "\n".join(lines + list(report.summary)) + "\n"
    raise InputError("unknown format %r" % fmt)


def emit_report(report, fmt="json", path=None, config=None):
    text = render(report, fmt, config)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError("cannot write %s: %s" % (path, exc.strerror)) from None


# -- subcommands ----------------------------------------------------------------

def _mapper(cfg):
    if cfg.threads > 1:
        pool = ProcessPoolExecutor(cfg.threads)
        return pool, (lambda fn, jobs: pool.map(fn, jobs, chunksize=32))
    return None, map


def _enumeration_report(rep):
    d = _plain(rep)
    summary = ["total=%d smooth=%d ordinary=%d non_distinguished=%d"
               % (rep.total, rep.smooth, rep.ordinary, rep.non_distinguished)]
    if rep.field == 2:
        summary.insert(0, "ordinary: " + " ".join("%s:%d" % kv for kv in rep.ordinary_distribution.items()))
        summary.insert(1, "non-ordinary: " + " ".join("%s:%d" % kv for kv in rep.non_ordinary_distribution.items()))
    if rep.generalized:
        g = rep.generalized
        summary.insert(0, "generalized: total=%d smooth=%d ordinary=%d non_distinguished=%d ratios_preserved=%s"
                       % (g["total"], g["smooth"], g["ordinary"], g["non_distinguished"], g["ratios_preserved"]))
    summary.append("smooth=%d ordinary=%d" % (rep.smooth, rep.ordinary))
    return Report("enumeration-f%d" % rep.field, [d],
                  ["field", "total", "smooth", "ordinary", "non_distinguished",
                   "ordinary_distribution", "non_ordinary_distribution"], summary)


def cmd_enumerate(cfg):
    from . import pipelines as pl
    which = cfg.options["field"]
    if which == "f2":
        pool, mapper = _mapper(cfg)
        try:
            rep = pl.enumerate_f2(seed=cfg.seed, mapper=mapper)
        finally:
            if pool:
                pool.shutdown()
        ok = ((rep.total, rep.smooth, rep.ordinary) == fx.F2_TOTALS
              and rep.ordinary_distribution == fx.F2_ORDINARY
              and rep.non_ordinary_distribution == fx.F2_NON_ORDINARY
              and rep.checks["torsion_triangle_mismatches"] == 0)
    else:
        rep = pl.enumerate_f3(generalized=cfg.options.get("generalized", False))
        rows = {tuple(r["charpoly"]): (r["wp_jacobian"], r["any_jacobian"], r["curves"])
                for r in rep.table_rows}
        ok = ((rep.total, rep.smooth, rep.ordinary, rep.non_distinguished) == fx.F3_TOTALS
              and all(rows.get(cp) == (a, b, n) for cp, a, b, n in fx.F3_TABLE)
              and (rep.generalized is None or rep.generalized["ratios_preserved"]))
    out = _enumeration_report(rep)
    if not ok:
        out.status = EXIT_VERIFY
    return out


def cmd_weil(cfg):
    from .curves import weil_poly_enumerate
    from .pipelines import fmt_poly, weil_bucket_table
    p = cfg.options["p"]
    polys = weil_poly_enumerate(p)
    results = []
    buckets = weil_bucket_table(2) if p == 2 else {}
    cls = {P: b["classes"] for b in buckets.values() for P in b["polys"]}
    for P in polys:
        c = tuple(P.coeffs)
        results.append({"charpoly": fmt_poly(c), "mod3": fmt_poly([x % 3 for x in c]),
                        "classes": list(cls.get(c, ()))})
    cols = ["charpoly", "mod3"] + (["classes"] if p == 2 else [])
    return Report("weil-polys", results, cols, ["count=%d" % len(polys)])


def cmd_density(cfg):
    from . import pipelines as pl
    f2 = pl.enumerate_f2(seed=cfg.seed, triangle=False)
    f3 = pl.enumerate_f3()
    a, b = pl.density_factors(f2, f3)
    d = a * b
    rep = Report("density", [{"density": str(d), "first_factor": str(a), "second_factor": str(b),
                              "decimal": "%.4f" % float(d)}],
                 ["density", "first_factor", "second_factor", "decimal"], [str(d)])
    if (d.numerator, d.denominator) != fx.DENSITY:
        rep.status = EXIT_VERIFY
    return rep


def cmd_group(cfg):
    from . import sympgroups as sg
    what = cfg.options["what"]
    if what == "atlas":
        atlas = sg.pgsp_outer_atlas()
        results = [{"label": a.label, "order": a.order, "size": a.size,
                    "charpolys": [list(c) for c in a.charpolys], "s40": list(a.s40),
                    "s27": list(a.s27)} for a in atlas]
        total = sum(a.size for a in atlas)
        rep = Report("atlas", results, ["label", "order", "size", "charpolys", "s40", "s27"],
                     ["classes=%d total=%d" % (len(atlas), total)])
        try:
            sg.check_atlas(atlas)
        except sg.GroupError:
            rep.status = EXIT_VERIFY
        return rep
    if what == "oddness":
        r = sg.involution_oddness(cfg.options["n"])
        results = [{"rank": c[0], "odd": c[1], "size": c[2]} for c in r.classes]
        rep = Report("oddness", results, ["rank", "odd", "size"],
                     ["n=%d classes=%d expected=%d" % (r.n, r.class_count, r.expected)])
        if r.class_count != r.expected:
            rep.status = EXIT_VERIFY
        return rep
    d = sg.s6_gsp4_dictionary()
    results = [{"perm": list(p), "matrix": [list(map(int, row)) for row in m]}
               for p, m in sorted(d.images.items())]
    rep = Report("dictionary", results, ["perm", "matrix"],
                 ["convention=%s matches_reference=%s is_isomorphism=%s"
                  % (d.convention, d.matches_reference, d.is_isomorphism)])
    if not (d.matches_reference and d.is_isomorphism and d.preserves_J):
        rep.status = EXIT_VERIFY
    return rep


def cmd_rep(cfg):
    from .repthy import a5_report
    r = _plain(a5_report())
    results = [{"key": k, "value": r[k]} for k in sorted(r)]
    return Report("rep-a5", results, ["key", "value"])


def _verdict_task(args):
    c, assumptions, bound, seed = args
    from .classify import theorem_applies
    return theorem_applies(c, assumptions, heuristic_bound=bound, seed=seed)


def _verdict_report(verdicts, kind):
    results = [_plain(v) for v in verdicts]
    cols = ["curve", "overall", "reduction_at_2", "frob2_class"]
    summary = [v.line() for v in verdicts]
    rep = Report(kind, results, cols, summary)
    if any(v.overall in ("conditions-fail", "insufficient-local-data") for v in verdicts):
        rep.status = EXIT_CONDITIONS
    return rep


def _coeff_arg(text, name, maxlen):
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError("--%s expects comma-separated integers" % name) from None
    if len(vals) > maxlen:
        raise InputError("--%s: too many coefficients" % name)
    return tuple(reversed(vals))


def cmd_classify(cfg):
    from .classify import CurveOverQ
    f = _coeff_arg(cfg.options["f"], "f", 7)
    h = _coeff_arg(cfg.options.get("h") or "0", "h", 4)
    try:
        c = CurveOverQ(f, h, cfg.options.get("label"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    v = _verdict_task((c, tuple(cfg.options.get("assume") or ()), cfg.bound, cfg.seed))
    return _verdict_report([v], "classify")


def cmd_batch(cfg):
    curves = ingest_curves(cfg.input)
    jobs = [(c, tuple(cfg.options.get("assume") or ()), cfg.bound, cfg.seed) for c in curves]
    pool, mapper = _mapper(cfg)
    try:
        verdicts = list(mapper(_verdict_task, jobs))
    finally:
        if pool:
            pool.shutdown()
    rep = _verdict_report(verdicts, "batch")
    rep.status = EXIT_OK
    return rep


def fixture_curves():
    """The bundled curves over Q as CurveOverQ records."""
    from .classify import CurveOverQ
    out = [CurveOverQ(d["f"], d["h"], k) for k, d in fx.CURVES_AT_2.items()]
    out += [CurveOverQ(f, (), "low3-%d" % i) for i, (f, _) in enumerate(fx.BELOW_THREE, 1)]
    out += [CurveOverQ(f, (), "N%d" % n) for f, _, n in fx.LOCAL_AT_3]
    out.append(CurveOverQ(fx.Z14_MODEL["f"], fx.Z14_MODEL["h"], "z14"))
    out.append(CurveOverQ(fx.WEIERSTRASS_SINGULAR_AT_2["f"], fx.WEIERSTRASS_SINGULAR_AT_2["h"], "wp-singular-2"))
    out.append(CurveOverQ(fx.BAD_AT_2["f"], fx.BAD_AT_2["h"], "N1982"))
    return out


# -- argument parsing ---------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="genus2frob")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", default=None)
    p.add_argument("--bound", type=int, default=40, help="prime bound for the image heuristic")
    sub = p.add_subparsers(dest="subcommand", required=True)
    e = sub.add_parser("enumerate")
    e.add_argument("field", choices=("f2", "f3"))
    e.add_argument("--generalized", action="store_true")
    w = sub.add_parser("weil-polys")
    w.add_argument("--p", type=int, choices=(2, 3), required=True)
    sub.add_parser("density")
    g = sub.add_parser("group")
    g.add_argument("what", choices=("atlas", "oddness", "dictionary"))
    g.add_argument("--n", type=int, choices=(1, 2, 3), default=2)
    r = sub.add_parser("rep")
    r.add_argument("what", choices=("a5",))
    c = sub.add_parser("classify")
    c.add_argument("--f", required=True, help="c6,...,c0")
    c.add_argument("--h", default="0", help="c3,...,c0")
    c.add_argument("--label", default=None)
    c.add_argument("--assume", action="append", choices=("unramified-at-2", "image-large"))
    b = sub.add_parser("batch")
    b.add_argument("--input", required=True)
    b.add_argument("--output", dest="batch_output", required=True)
    b.add_argument("--assume", action="append", choices=("unramified-at-2", "image-large"))
    return p


COMMANDS = {"enumerate": cmd_enumerate, "weil-polys": cmd_weil, "density": cmd_density,
            "group": cmd_group, "rep": cmd_rep, "classify": cmd_classify, "batch": cmd_batch}


def config_from_args(ns):
    opts = {k: v for k, v in vars(ns).items()
            if k not in ("subcommand", "threads", "seed", "format", "output", "bound", "input", "batch_output")}
    out = ns.output
    fmt = ns.format
    if ns.subcommand == "batch":
        out = ns.batch_output
        fmt = "json" if ns.format == "text" else ns.format
    return RunConfig(ns.subcommand, ns.threads, ns.seed, getattr(ns, "input", None), out, fmt, ns.bound, opts)


def cli_main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    cfg = config_from_args(ns)
    if cfg.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        rep = COMMANDS[cfg.subcommand](cfg)
        emit_report(rep, cfg.format, cfg.output, cfg)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY
    return rep.status


def main():
    sys.exit(cli_main())
