"""Command-line front end.

Exit codes: 0 success, 1 domain or precondition error, 2 usage error.
The default config file is taken from ``$UNIVMEAN_CONFIG`` when set.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import classes, radius as rad
from .combine import harmonic_mean, screen_denominator
from .family import (FamilyParams, combination_coeffs, family_area_sum, family_boundary_starlike,
                     family_m_roots, family_u_radius)
from .fileio import FormatError, read_coeffs, write_coeffs
from .numscan import (EVIDENCE_COLUMNS, CatalogEntry, ClassTag, builtin_catalog, catalog_lookup,
                      conjecture_harness, scan_injectivity, scan_local_univalence, scan_starlike, scan_u_functional)
from .series import DiskFunction, DomainError, series

CONFIG_ENV = "UNIVMEAN_CONFIG"


@dataclass
class RunConfig:
    truncation_order: int = 128
    angular_samples: int = 2048
    radius_grid: list = field(default_factory=lambda: [0.5, 0.7, 0.9])
    tolerances: dict = field(default_factory=lambda: {
        "closed_form": 1e-12, "assembled": 1e-10, "bisection": 1e-9})
    output_format: str = "json"
    seed: int = 0
    # user catalog entries: name -> {"coeffs": [...] or "file": path, "class": "S" | "Sstar" | "K" | "C" | "U"}
    catalog: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.truncation_order < 8:
            raise DomainError("truncation_order must be at least 8")
        if any(not v > 0 for v in self.tolerances.values()):
            raise DomainError("tolerances must be positive")
        if self.output_format not in ("json", "csv"):
            raise DomainError("output_format must be json or csv")
        taken = {e.name for e in builtin_catalog()}
        for name, spec in self.catalog.items():
            if name in taken:
                raise DomainError(f"catalog entry {name!r} shadows a built-in entry")
            if not isinstance(spec, dict) or ("coeffs" in spec) == ("file" in spec):
                raise DomainError(f"catalog entry {name!r} needs exactly one of 'coeffs' or 'file'")
            if set(spec) - {"coeffs", "file", "class"}:
                raise DomainError(f"catalog entry {name!r} has unknown keys")
            if spec.get("class", "S") not in {t.value for t in ClassTag}:
                raise DomainError(f"catalog entry {name!r}: unknown class {spec['class']!r}")

    def catalog_entries(self) -> list[CatalogEntry]:
        """Built-in catalog followed by the entries declared in this config."""
        extra = []
        for name, spec in self.catalog.items():
            if "file" in spec:
                build = (lambda path: lambda order: _from_series(read_coeffs(path), order))(spec["file"])
            else:
                vals = [parse_complex(str(v)) for v in spec["coeffs"]]
                build = (lambda vals: lambda order: DiskFunction(series(vals, max(order, len(vals) - 1))))(vals)
            extra.append(CatalogEntry(name, build, ClassTag(spec.get("class", "S"))))
        return builtin_catalog() + extra

    @classmethod
    def load(cls, path) -> "RunConfig":
        with open(path) as fh:
            data = json.load(fh)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return v


def emit(rows, columns, fmt, out=None):
    out = out or sys.stdout
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row.get(c)) for c in columns])
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(rows, indent=2) + "\n")


def parse_complex(s: str) -> complex:
    s = s.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise DomainError(f"not a number: {s!r}") from None


def parse_list(s: str, conv=float) -> list:
    return [conv(x) for x in s.split(",") if x.strip()]


def parse_grid(s: str) -> list[float]:
    """``start:stop:step`` (inclusive) or a comma list."""
    if ":" not in s:
        return parse_list(s)
    parts = s.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid {s!r} is not start:stop:step")
    a, b, h = map(float, parts)
    if h <= 0:
        raise DomainError("grid step must be positive")
    n = int(round((b - a) / h)) + 1
    return [round(a + i * h, 12) for i in range(n)]


def _from_series(s, order: int) -> DiskFunction:
    return DiskFunction(series(s.coeffs, max(order, s.order)))


def _functions(args, cfg) -> list[DiskFunction]:
    order = cfg.truncation_order
    fs = []
    for c in args.coeffs or []:
        vals = parse_list(c, parse_complex)
        fs.append(DiskFunction(series(vals, max(order, len(vals) - 1)), f"coeffs[{c}]"))
    for p in args.file or []:
        fs.append(DiskFunction(_from_series(read_coeffs(p), order).phi, os.path.basename(p)))
    catalog = cfg.catalog_entries() if args.catalog else []
    for names in args.catalog or []:
        for name in names.split(","):
            try:
                fs.append(catalog_lookup(name.strip(), catalog).make(order))
            except KeyError as exc:
                raise DomainError(exc.args[0]) from None
    return fs


def _add_function_args(p):
    p.add_argument("--coeffs", action="append", help="phi coefficients, comma separated, index 0 first")
    p.add_argument("--file", action="append", help="ufmt1 coefficient file")
    p.add_argument("--catalog", action="append", help="catalog entry name(s), comma separated")


def cmd_radius(args, cfg):
    t = args.theorem
    if t == "t1":
        res = rad.radius_t1(args.lam)
    elif t == "t2a":
        res = rad.radius_t2a(args.lam)
    elif t == "t1-starlike":
        res = rad.radius_t1_starlike(parse_complex(args.b1c1))
    elif t == "t2b":
        res = rad.radius_t2b(parse_list(args.second, parse_complex))
    elif t in ("t3", "t4"):
        lams = parse_list(args.lambdas)
        if t == "t3" and len(lams) != 2:
            raise DomainError("t3 takes exactly two lambdas")
        res = rad.radius_t3_t4(lams, args.target)
    else:
        fs = _functions(args, cfg)
        if len(fs) != 1:
            raise DomainError("bisect needs exactly one function")
        res = rad.radius_bisect(fs[0], args.target)
    d = res.to_dict()
    emit([d] if cfg.output_format == "csv" else d, list(d), cfg.output_format)


CHECKS = {
    "u-sufficient": lambda f, lam: classes.test_u_sufficient(f, lam),
    "starlike": lambda f, lam: classes.test_starlike_sufficient(f),
    "u-necessary": lambda f, lam: classes.test_u_necessary(f, lam),
    "area": lambda f, lam: classes.test_area_necessary(f),
    "lemma2": lambda f, lam: classes.test_lemma2_nonneg(f),
}


def cmd_check(args, cfg):
    fs = _functions(args, cfg)
    if not fs:
        raise DomainError("give a function via --coeffs, --file or --catalog")
    tests = []
    for t in args.test or ["all"]:
        # tests pulled in by "all" report an unmet precondition instead of failing
        tests += [(x, True) for x in CHECKS] if t == "all" else [(x, False) for x in parse_list(t, str)]
    rows = []
    for f in fs:
        for t, implicit in tests:
            if t not in CHECKS:
                raise DomainError(f"unknown test {t!r}; choose from {', '.join(CHECKS)}")
            try:
                v = CHECKS[t](f, args.lam).to_dict()
            except DomainError:
                if not implicit:
                    raise
                v = {"test": t, "status": "NotApplicable", "sum": None, "threshold": None,
                     "tail_bound": None}
            rows.append({"function": f.label, **v})
    emit(rows, ["function", "test", "status", "sum", "threshold", "tail_bound"], cfg.output_format)


def cmd_combine(args, cfg):
    fs = _functions(args, cfg)
    if len(fs) < 2:
        raise DomainError("combine needs at least two functions")
    big_f = harmonic_mean(fs)
    if args.rescale is not None:
        big_f = big_f.rescaled(args.rescale)
    if args.out:
        write_coeffs(args.out, big_f.phi.coeffs)
    if args.emit == "coeffs":
        c = big_f.phi.coeffs
        n = len(c) if args.terms is None else min(len(c), args.terms)
        rows = [{"n": k, "re": float(c[k].real), "im": float(c[k].imag)} for k in range(n)]
        emit(rows, ["n", "re", "im"], cfg.output_format)
    else:
        rep = screen_denominator(fs, args.grid_radius, cfg.angular_samples).to_dict()
        emit([rep] if cfg.output_format == "csv" else rep, list(rep), cfg.output_format)


def cmd_family(args, cfg):
    alphas = parse_grid(args.alpha_grid)
    rows = []
    if args.emit == "rU":
        cols = ["alpha", "r_U"]
        rows = [{"alpha": a, "r_U": family_u_radius(a)} for a in alphas]
    elif args.emit == "roots":
        cols = ["alpha", "branch", "min_abs_root"]
        for a in alphas:
            d = family_m_roots(a)
            rows.append({"alpha": a, "branch": d.branch, "min_abs_root": d.min_abs_root})
    elif args.emit == "S":
        cols = ["alpha", "beta", "S"]
        if args.random:
            rng = np.random.default_rng(cfg.seed)
            pairs = []
            while len(pairs) < args.random:
                a, b = rng.uniform(-1, 1, 2)
                if a != 0 and b != 0:
                    pairs.append((float(a), float(b)))
        else:
            betas = parse_grid(args.beta_grid) if args.beta_grid else alphas
            pairs = [(a, b) for a in alphas for b in betas]
        rows = [{"alpha": a, "beta": b, "S": family_area_sum(FamilyParams(a, b))} for a, b in pairs]
    elif args.emit == "A":
        cols = ["alpha", "theta", "A", "negative"]
        thetas = parse_grid(args.theta_grid)
        for a in alphas:
            for t in thetas:
                v = family_boundary_starlike(a, t)
                rows.append({"alpha": a, "theta": t, "A": v, "negative": v < 0})
    else:
        cols = ["alpha", "beta", "n", "b_n"]
        betas = parse_grid(args.beta_grid) if args.beta_grid else [-a for a in alphas]
        for a in alphas:
            for b in betas:
                c = combination_coeffs(FamilyParams(a, b), args.terms)
                rows += [{"alpha": a, "beta": b, "n": k, "b_n": float(c[k].real)} for k in range(len(c))]
    emit(rows, cols, cfg.output_format)


def cmd_scan(args, cfg):
    fs = _functions(args, cfg)
    if len(fs) != 1:
        raise DomainError("scan takes exactly one function")
    f = fs[0]
    radii = parse_list(args.radii) if args.radii else cfg.radius_grid
    s = cfg.angular_samples
    if args.quantity == "u":
        reps = [scan_u_functional(f, radii, s)]
    elif args.quantity == "starlike":
        reps = [scan_starlike(f, radii, s)]
    elif args.quantity == "local":
        reps = [scan_local_univalence(f, radii, s)]
    elif args.quantity == "halfplane":
        reps = [classes.halfplane_bound(f, args.lam, max(8, s // 16), max(radii))]
    else:
        reps = [scan_injectivity(f, r, s) for r in radii]
    rows = []
    for rep in reps:
        for r, v, w in zip(rep.radius_grid, rep.values, rep.witnesses):
            rows.append({"quantity": rep.quantity.value, "radius": r, "value": v,
                         "witness_re": float(w.real), "witness_im": float(w.imag),
                         "winding": rep.meta.get("winding")})
    emit(rows, ["quantity", "radius", "value", "witness_re", "witness_im", "winding"], cfg.output_format)


def cmd_explore(args, cfg):
    radii = parse_list(args.radii) if args.radii else [0.9, 0.99]
    evidence = conjecture_harness(cfg.catalog_entries(), args.pairs, radii, cfg.angular_samples,
                                  cfg.angular_samples, cfg.angular_samples, cfg.truncation_order)
    if cfg.output_format == "csv":
        rows = []
        for ev in evidence:
            if ev.hypothesis_violated:
                rows.append({"pair_id": ev.pair_id, "screen_min_modulus": ev.screen["min_modulus"],
                             "screen_winding": ev.screen["winding_number"]})
            rows += ev.rows
        emit(rows, EVIDENCE_COLUMNS, "csv")
    else:
        emit([ev.to_dict() for ev in evidence], None, "json")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a flag given before the subcommand is not reset after it
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON RunConfig file")
    common.add_argument("--format", choices=["json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--order", type=int, default=argparse.SUPPRESS, help="truncation order")
    common.add_argument("--samples", type=int, default=argparse.SUPPRESS, help="angular samples")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="univmean", description=__doc__.splitlines()[0],
                                parents=[common])
    _sub = p.add_subparsers(dest="command", required=True)

    class _Sub:
        def add_parser(self, name, **kw):
            return _sub.add_parser(name, parents=[common], **kw)

    sub = _Sub()

    r = sub.add_parser("radius", help="univalence / starlikeness radii")
    r.add_argument("theorem", choices=["t1", "t1-starlike", "t2a", "t2b", "t3", "t4", "bisect"])
    r.add_argument("--lambda", dest="lam", type=float, default=1.0)
    r.add_argument("--lambdas", default="1,1")
    r.add_argument("--target", type=float, default=1.0)
    r.add_argument("--b1c1", default="0", help="b_1 + c_1 (complex)")
    r.add_argument("--second", default="0,0", help="f_k''(0) values, comma separated")
    _add_function_args(r)
    r.set_defaults(func=cmd_radius)

    c = sub.add_parser("check", help="coefficient membership tests")
    _add_function_args(c)
    c.add_argument("--test", action="append", help=f"one of {', '.join(CHECKS)} or all")
    c.add_argument("--lambda", dest="lam", type=float, default=1.0)
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("combine", help="harmonic mean of functions")
    _add_function_args(m)
    m.add_argument("--emit", choices=["coeffs", "screen"], default="coeffs")
    m.add_argument("--terms", type=int)
    m.add_argument("--rescale", type=float)
    m.add_argument("--grid-radius", type=float, default=0.9)
    m.add_argument("--out", help="write the combined phi as a ufmt1 file")
    m.set_defaults(func=cmd_combine)

    f = sub.add_parser("family", help="diagnostics of the f_alpha family")
    f.add_argument("--alpha-grid", default="0.1:0.9:0.1")
    f.add_argument("--beta-grid")
    f.add_argument("--theta-grid", default="0.1:3.1:0.1")
    f.add_argument("--emit", choices=["rU", "S", "roots", "A", "coeffs"], default="rU")
    f.add_argument("--random", type=int, help="with --emit S: sample this many random pairs")
    f.add_argument("--terms", type=int, default=16)
    f.set_defaults(func=cmd_family)

    s = sub.add_parser("scan", help="disk scans of one function")
    _add_function_args(s)
    s.add_argument("--quantity", choices=["u", "starlike", "local", "injectivity", "halfplane"], default="u")
    s.add_argument("--radii")
    s.add_argument("--lambda", dest="lam", type=float, default=1.0)
    s.set_defaults(func=cmd_scan)

    e = sub.add_parser("explore", help="conjecture evidence over catalog pairs")
    e.add_argument("--pairs", default="all-c")
    e.add_argument("--radii")
    e.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    opts = vars(args)
    try:
        config = opts.get("config", os.environ.get(CONFIG_ENV))
        cfg = RunConfig.load(config) if config else RunConfig()
        overrides = {k: opts[o] for k, o in (("output_format", "format"), ("truncation_order", "order"),
                                             ("angular_samples", "samples"), ("seed", "seed"))
                     if o in opts}
        if overrides:
            cfg = RunConfig(**{**asdict(cfg), **overrides})
        args.func(args, cfg)
    except (DomainError, FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
