"""Command-line interface.

    qaffine compute {r|l} --algebra a1 --s -2 --s1 -1 [...]
    qaffine verify {ybe|rll|gauge|engine|duality|structure|all} [...]
    qaffine list variants

Defaults come from built-ins, then an optional key=value config file,
then the QAFFINE_ORDER / QAFFINE_FOCK environment variables, then flags.
Exit codes: 0 success or all checks passed, 1 at least one check failed
(the report is still emitted), 2 usage or configuration errors.
"""

import argparse
import json
import os
import sys

from fractions import Fraction

from .engine import EngineParams, EngineError, assemble
from .oscillator import OscParams
from .scalars import parse_qscalar
from .reference import reference_matrix, list_variants
from .serialize import dump_matrix, dump_grid
from .verify import suite_checks, run_suite

DEFAULTS = {"order": 8, "fock": 12, "backend": "rational", "format": "text",
            "workers": 1}

_CONFIG_KEYS = {"order": int, "fock": int, "backend": str, "format": str,
                "workers": int}


class UsageError(Exception):
    pass


def load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError("malformed config line: %r" % line)
            key, value = (x.strip() for x in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise UsageError("unknown config key: %r" % key)
            try:
                out[key] = _CONFIG_KEYS[key](value)
            except ValueError:
                raise UsageError("bad value for %s: %r" % (key, value))
    return out


def effective_defaults(args):
    out = dict(DEFAULTS)
    if getattr(args, "config", None):
        out.update(load_config(args.config))
    if os.environ.get("QAFFINE_ORDER"):
        out["order"] = int(os.environ["QAFFINE_ORDER"])
    if os.environ.get("QAFFINE_FOCK"):
        out["fock"] = int(os.environ["QAFFINE_FOCK"])
    return out


def _add_common(p):
    p.add_argument("--algebra", choices=("a1", "a2"), default=None)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--s1", type=int, default=0)
    p.add_argument("--s2", type=int, default=0)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--fock", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--config", default=None)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qaffine",
        description="exact R-matrices and L-operators for the rank-1 and "
                    "rank-2 quantum affine algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one object")
    pc.add_argument("what", choices=("r", "l"))
    pc.add_argument("--side", choices=("phi-phi", "chi-phi", "phi-psi"),
                    default="phi-phi")
    pc.add_argument("--family", type=int, choices=(1, 2), default=1)
    pc.add_argument("--twist", default=None,
                    help="node permutation like 10 or 120")
    pc.add_argument("--osc-rho", default=None,
                    help="oscillator homomorphism rho, canonical scalar "
                         "string like '(1)/(t^6 - t^-6)'")
    pc.add_argument("--osc-mu", default=None,
                    help="comma-separated mu parameters, scalar strings")
    pc.add_argument("--osc-nu", default=None,
                    help="comma-separated nu exponents, sixth-integer "
                         "fractions like 1/3,0,2")
    pc.add_argument("--backend", choices=("series", "rational"),
                    default=None)
    _add_common(pc)

    pv = sub.add_parser("verify", help="run identity checks")
    pv.add_argument("what", choices=("ybe", "rll", "gauge", "engine",
                                     "duality", "structure", "all"))
    pv.add_argument("--workers", type=int, default=None)
    _add_common(pv)

    pl = sub.add_parser("list", help="list supported objects")
    pl.add_argument("what", choices=("variants",))
    return ap


def _variant_for(args):
    twist = args.twist not in (None, "", "01", "012")
    if args.algebra == "a1":
        base = "hat" if args.side == "chi-phi" else "check"
        return base + ("-twisted" if twist else "")
    if twist:
        raise UsageError("rank-2 twisted variants are not transcribed; "
                         "use the engine backend with --twist")
    base = "hat" if args.side == "chi-phi" else "check"
    return "%s-%d" % (base, args.family)


def _parse_osc_params(args):
    rho = getattr(args, "osc_rho", None)
    mu = getattr(args, "osc_mu", None)
    nu = getattr(args, "osc_nu", None)
    if rho is None and mu is None and nu is None:
        return None
    if not (rho and mu and nu):
        raise UsageError("oscillator parameters need all of --osc-rho, "
                         "--osc-mu, --osc-nu")
    return OscParams(parse_qscalar(rho),
                     [parse_qscalar(x) for x in mu.split(",")],
                     [Fraction(x) for x in nu.split(",")])


def _parse_twist(text):
    if text is None:
        return None
    perm = tuple(int(ch) for ch in text)
    return perm


def cmd_compute(args, conf):
    order = args.order if args.order is not None else conf["order"]
    fock = args.fock if args.fock is not None else conf["fock"]
    backend = args.backend or conf["backend"]
    fmt = args.format or conf["format"]
    if args.algebra is None:
        args.algebra = "a1"
    if args.what == "r" and args.side != "phi-phi":
        raise UsageError("r-matrices use --side phi-phi")
    if args.what == "l" and args.side == "phi-phi":
        raise UsageError("l-operators need --side chi-phi or phi-psi")
    if backend == "rational":
        if args.what == "r":
            ref = reference_matrix("r", args.algebra, "plain", args.s,
                                   args.s1, args.s2)
            payload = dump_matrix(ref.matrix)
            payload["tag"] = {"t_power": ref.tag.t_power,
                              "terms": [list(t) for t in ref.tag.terms]}
            text = _matrix_text(ref.matrix, args.algebra, ref.tag)
        else:
            variant = _variant_for(args)
            ref = reference_matrix("l", args.algebra, variant, args.s,
                                   args.s1, args.s2, d=fock)
            payload = dump_grid(ref.matrix, fock_dim=ref.fock_dim,
                                copies=ref.copies, tag=ref.tag)
            text = _grid_text(ref)
    else:
        left = "chi" if args.side == "chi-phi" else "phi"
        right = "psi" if args.side == "phi-psi" else "phi"
        if args.what == "r":
            left, right = "phi", "phi"
        params = EngineParams(args.algebra, args.s, args.s1, args.s2,
                              order=order, left=left, right=right,
                              family=args.family,
                              twist=_parse_twist(args.twist), fock_dim=fock,
                              osc_params=_parse_osc_params(args))
        mat = assemble(params)
        payload = dump_matrix(mat)
        text = _flat_series_text(mat)
    return payload, text


def _basis_label(flat, n):
    a, b = divmod(flat, n)
    return a + 1, b + 1


def _matrix_text(mat, algebra, tag=None):
    n = 2 if algebra == "a1" else 3
    lines = []
    if tag is not None and not tag.is_trivial():
        lines.append("# scalar prefactor tag: t^%d, terms %s"
                     % (tag.t_power, list(tag.terms)))
    for (i, j), v in sorted(mat.entries.items()):
        (a, c) = _basis_label(i, n)
        (b, d) = _basis_label(j, n)
        lines.append("E%d%d x E%d%d : %s" % (a, b, c, d, v))
    return "\n".join(lines)


def _grid_text(ref):
    lines = ["# %s-type operator, fock dimension %d x %d copies"
             % (ref.l_type, ref.fock_dim, ref.copies)]
    if not ref.tag.is_trivial():
        lines.append("# scalar prefactor tag: t^%d, terms %s"
                     % (ref.tag.t_power, list(ref.tag.terms)))
    for (a, b), m in sorted(ref.matrix.entries.items()):
        lines.append("L[%d,%d]:" % (a + 1, b + 1))
        for (i, j), v in sorted(m.entries.items()):
            lines.append("  <%d|.|%d> = %s" % (i, j, v))
    return "\n".join(lines)


def _flat_series_text(mat):
    lines = ["# flattened series matrix, dim %d" % mat.dim]
    for (i, j), v in sorted(mat.entries.items()):
        lines.append("[%d,%d] = %s" % (i, j, v))
    return "\n".join(lines)


def cmd_verify(args, conf):
    order = args.order if args.order is not None else conf["order"]
    fock = args.fock if args.fock is not None else conf["fock"]
    workers = args.workers if args.workers is not None else conf["workers"]
    checks = suite_checks(algebra=args.algebra, order=order, fock=fock)
    if args.what != "all":
        prefix = {"ybe": "ybe", "rll": "rll", "gauge": "gauge",
                  "engine": "engine", "duality": "duality",
                  "structure": "structure"}[args.what]
        checks = [c for c in checks if c[0].split("-", 1)[1].startswith(prefix)]
    if not checks:
        raise UsageError("no checks selected")
    results = run_suite(checks, workers=workers)
    all_pass = all(v.passed for _, v in results)
    fmt = args.format or conf["format"]
    if fmt == "json":
        text = json.dumps([dict(v.to_json(), id=cid) for cid, v in results],
                          indent=2)
    else:
        lines = []
        for cid, v in results:
            state = "pass" if v.passed else "FAIL %s" % (v.first_failure,)
            lines.append("%-28s %-8s %7.0f ms  %s"
                         % (cid, state.split()[0],
                            v.wall_time_ms, "" if v.passed else state))
        lines.append("summary: %d/%d passed"
                     % (sum(v.passed for _, v in results), len(results)))
        text = "\n".join(lines)
    return text, all_pass


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        conf = effective_defaults(args)
        if args.command == "list":
            text = "\n".join("%s %s %s" % v for v in list_variants())
            _emit(text, getattr(args, "out", None))
            return 0
        if args.command == "compute":
            payload, text = cmd_compute(args, conf)
            fmt = args.format or conf["format"]
            out = json.dumps(payload, indent=2) if fmt == "json" else text
            _emit(out, args.out)
            return 0
        if args.command == "verify":
            text, all_pass = cmd_verify(args, conf)
            _emit(text, args.out)
            return 0 if all_pass else 1
    except (UsageError, EngineError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 2


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    sys.exit(main())
