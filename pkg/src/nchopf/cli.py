"""Command-line interface.

Exit status: 0 on success, 1 when a verification report fails, 2 on usage or
validation errors.
"""

import argparse
import json
import sys

from .errors import AlgebraError
from .presets import CLI_NAMES, NEEDS_N, NEEDS_P, AlgebraSpec, validate_spec

DEFAULT_SEED = 20240101

CONFIG_KEYS = ("preset", "char", "p", "n", "d", "degree_bound", "K", "window", "format", "seed",
               "commutative", "cop")


class UsageError(Exception):
    pass


def load_config(path):
    """key=value lines or a JSON object."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        raw = json.loads(text)
    else:
        raw = {}
        for ln, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{ln}: expected key=value")
            k, v = (s.strip() for s in line.split("=", 1))
            raw[k.replace("-", "_")] = v
    unknown = set(raw) - set(CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return raw


def _int_list(s):
    if isinstance(s, (list, tuple)):
        return tuple(int(x) for x in s)
    s = str(s).strip()
    return tuple(int(x) for x in s.split(",") if x.strip()) if s else ()


def _window(s):
    vals = _int_list(s)
    if len(vals) != 2:
        raise UsageError("--window takes lo,hi")
    return vals


def _bool(v):
    if isinstance(v, bool):
        return v
    return str(v).lower() in ("1", "true", "yes", "on")


def resolve(args):
    """Merge config-file values under command-line flags and fill defaults."""
    cfg = load_config(args.config) if args.config else {}
    out = {}
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        out[key] = flag if flag not in (None, False) else cfg.get(key)
    out["char"] = int(out["char"]) if out["char"] is not None else None
    out["p"] = int(out["p"]) if out["p"] is not None else None
    out["n"] = int(out["n"]) if out["n"] is not None else None
    out["d"] = _int_list(out["d"]) if out["d"] is not None else ()
    out["degree_bound"] = int(out["degree_bound"]) if out["degree_bound"] is not None else None
    out["K"] = int(out["K"]) if out["K"] is not None else None
    out["window"] = _window(out["window"]) if out["window"] is not None else None
    out["seed"] = int(out["seed"]) if out["seed"] is not None else DEFAULT_SEED
    out["format"] = out["format"] or "text"
    out["commutative"] = _bool(out["commutative"]) if out["commutative"] is not None else False
    out["cop"] = _bool(out["cop"]) if out["cop"] is not None else False
    return out


def make_spec(cfg, required=True):
    name = cfg["preset"]
    if name is None or name == "free":
        if required:
            raise UsageError("this command needs --preset")
        return None
    preset = CLI_NAMES.get(name, name)
    char = cfg["char"]
    p = cfg["p"]
    if char is None:
        char = p if (preset in NEEDS_P or preset == "TBarN") and p else 0
    if preset == "TBarN" and cfg["commutative"] and p is None:
        p = char or None
    spec = AlgebraSpec(preset, char, p=p, n=cfg["n"], d=cfg["d"],
                       commutative=cfg["commutative"], cop=cfg["cop"])
    if preset in NEEDS_N and spec.n is None:
        raise UsageError(f"{preset} needs -n")
    return validate_spec(spec)


# output helpers


class Out:
    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, text=None, data=None, csv=None):
        if self.fmt == "json":
            print(json.dumps(data, indent=2), file=self.stream)
        elif self.fmt == "csv" and csv is not None:
            self.stream.write(csv)
        else:
            print(text, file=self.stream)


def _field_of(spec, cfg):
    from .scalars import field_for
    if spec is not None:
        return spec.field
    return field_for(cfg["char"] or 0)


def _element(expr, spec, cfg):
    from .parser import parse_element
    return parse_element(expr, spec, _field_of(spec, cfg))


# commands


def cmd_lyndon(args, cfg, out):
    from .free import ls_element, pbw_coordinates
    from .words import is_lyndon, lyndon_enumerate, lyndon_factorization, standard_factorization
    if args.action == "list":
        words = lyndon_enumerate(args.max_len)
        out.emit("\n".join(words), {"lyndon_words": words})
    elif args.action == "factor":
        fac = lyndon_factorization(args.word)
        out.emit(" ".join(f"({w})" for w in fac), {"word": args.word, "factors": fac})
    else:
        w = args.word
        if not is_lyndon(w):
            from .errors import NotLyndonWord
            raise NotLyndonWord(f"{w} is not a Lyndon word")

        def bracketing(u):
            if len(u) == 1:
                return u
            a, b = standard_factorization(u)
            return f"[{bracketing(a)}, {bracketing(b)}]"

        field = _field_of(None, cfg)
        e = ls_element(w, field)
        br = bracketing(w)
        out.emit(f"E[{w}] = {br} = {e}", {"word": w, "bracketing": br,
                                          "expansion": _records(e), "pbw": str(pbw_coordinates(e))})


def _records(x):
    from .serialize import element_record
    return element_record(x)


def cmd_nf(args, cfg, out):
    spec = make_spec(cfg, required=False)
    x = _element(args.expr, spec, cfg)
    if spec is None:
        from .free import pbw_coordinates
        coords = pbw_coordinates(x)
        out.emit(f"{x}\nPBW: {coords}", {"element": _records(x), "pbw": _records(coords)})
    else:
        out.emit(str(x), {"element": _records(x)})


def cmd_coprod(args, cfg, out):
    from .serialize import tensor_record
    spec = make_spec(cfg, required=False)
    x = _element(args.expr, spec, cfg)
    if spec is None:
        from .free import t_coproduct
        t = t_coproduct(x)
    else:
        from .quotients import q_coproduct
        t = q_coproduct(spec, x)
    out.emit(str(t), {"coproduct": tensor_record(t)})


def cmd_antipode(args, cfg, out):
    from .quotients import q_antipode
    spec = make_spec(cfg)
    x = _element(args.expr, spec, cfg)
    s = q_antipode(spec, x)
    out.emit(str(s), {"antipode": _records(s)})


def cmd_counit(args, cfg, out):
    spec = make_spec(cfg, required=False)
    x = _element(args.expr, spec, cfg)
    if spec is None:
        from .free import t_counit
        c = t_counit(x)
    else:
        from .quotients import q_counit
        c = q_counit(spec, x)
    out.emit(str(c), {"counit": str(c)})


def cmd_shuffle(args, cfg, out):
    from .free import pbw_coordinates, shuffle_poly
    s = shuffle_poly(args.i, args.j, _field_of(None, cfg))
    out.emit(f"SH({args.i},{args.j}) = {s}\nPBW: {pbw_coordinates(s)}",
             {"shuffle": _records(s), "pbw": _records(pbw_coordinates(s))})


def cmd_bell(args, cfg, out):
    from .fdb import bell_polynomial
    b = bell_polynomial(args.n, args.k, _field_of(None, cfg))
    out.emit(f"B({args.n},{args.k}) = {b}", {"bell": _records(b)})


def _report_exit(rep, out):
    out.emit(rep.to_text(), rep.to_dict())
    return 0 if rep.ok else 1


def cmd_verify(args, cfg, out):
    what = args.what
    seed = cfg["seed"]
    if what == "axioms":
        from .quotients import verify_bialgebra_axioms
        spec = make_spec(cfg)
        rep = verify_bialgebra_axioms(spec, cfg["degree_bound"] if cfg["degree_bound"] is not None else 4, seed)
    elif what == "ambiguities":
        from .quotients import check_overlap_ambiguities
        spec = make_spec(cfg)
        rep = check_overlap_ambiguities(spec, cfg["K"])
    elif what == "iso":
        from .fdb import abelianization_check, check_L_iso, check_R_iso
        from .report import Report
        spec = make_spec(cfg, required=False)
        field = _field_of(spec, cfg)
        bound = cfg["degree_bound"] if cfg["degree_bound"] is not None else 6
        rep = Report("iso", n_max=bound, seed=seed)
        parts = [check_L_iso(bound, field), check_R_iso(bound, field)]
        if field.characteristic == 0:
            parts.append(abelianization_check(min(bound, 5), field))
        for part in parts:
            for e in part.entries:
                rep.add(f"{part.name}: {e['check']}", e["status"] == "PASS", witness=e.get("witness"))
    elif what == "filtration":
        from .filtration import FiltrationSpec, filtration_check
        spec = make_spec(cfg)
        rep = filtration_check(spec, FiltrationSpec("Ff", cfg["degree_bound"] if cfg["degree_bound"] is not None else 3))
    elif what == "bf":
        from .quotients import bf_embedding_check, bf_relations_check
        from .report import Report
        spec = make_spec(cfg, required=False)
        if spec is None or spec.preset != "BF":
            from .presets import AlgebraSpec
            spec = AlgebraSpec("BF", spec.characteristic if spec else (cfg["char"] or 0))
        bound = cfg["degree_bound"] if cfg["degree_bound"] is not None else 6
        rep = Report("bf", spec=spec.label(), degree_bound=bound)
        for part in (bf_embedding_check(spec, bound), bf_relations_check(spec, min(bound, 5))):
            for e in part.entries:
                rep.add(f"{part.name}: {e['check']}", e["status"] == "PASS", witness=e.get("witness"))
    else:
        from .filtration import gr_relations_check
        spec = make_spec(cfg)
        rep = gr_relations_check(spec, cfg["degree_bound"])
    rep.params.setdefault("seed", seed)
    return _report_exit(rep, out)


def cmd_hilbert(args, cfg, out):
    from .analysis import graded_dimension
    spec = make_spec(cfg)
    N = cfg["degree_bound"] if cfg["degree_bound"] is not None else 10
    dims = graded_dimension(spec, N, g_cap=args.g_cap)
    out.emit(" ".join(map(str, dims)), {"spec": spec.label(), "graded_dimension": dims},
             "degree,dim\n" + "".join(f"{i},{d}\n" for i, d in enumerate(dims)))


def cmd_growth(args, cfg, out):
    from .analysis import growth_function
    spec = make_spec(cfg)
    N = cfg["degree_bound"] if cfg["degree_bound"] is not None else 20
    t = growth_function(spec, N)
    csv = t.to_csv()
    out.emit(csv.rstrip("\n"), {"spec": spec.label(), "generating_set": t.generating_set,
                                "values": [list(v) for v in t.values]}, csv)


def cmd_gkdim(args, cfg, out):
    from .analysis import gk_estimate, growth_function
    spec = make_spec(cfg)
    lo, hi = cfg["window"] or (20, 120)
    N = max(hi, cfg["degree_bound"] or 0)
    est = gk_estimate(growth_function(spec, N), (lo, hi))
    out.emit(f"{float(est.value):.4f} (= {est.value}, residual {est.residual:.3g}, window {lo}..{hi})",
             {"spec": spec.label(), "estimate": str(est.value), "float": float(est.value),
              "residual": est.residual, "window": [lo, hi]})


def cmd_dim(args, cfg, out):
    from .analysis import dimension
    spec = make_spec(cfg)
    d = dimension(spec)
    text = "infinite" if d == float("inf") else str(d)
    out.emit(text, {"spec": spec.label(), "dimension": d if text != "infinite" else text})


def cmd_primitives(args, cfg, out):
    from .analysis import skew_primitives
    spec = make_spec(cfg)
    bound = cfg["degree_bound"] if cfg["degree_bound"] is not None else 6
    basis = skew_primitives(spec, args.a, args.b, bound)
    out.emit("\n".join(str(x) for x in basis) if basis else "(none)",
             {"spec": spec.label(), "a": args.a, "b": args.b, "basis": [_records(x) for x in basis]})


def cmd_ccoef(args, cfg, out):
    from .filtration import c_closed_form, c_coefficients
    n_max = cfg["degree_bound"] if cfg["degree_bound"] is not None else 8
    c = c_coefficients(n_max)
    rows = []
    for n in range(2, n_max + 1):
        rows.append([str(c[(n, k)]) for k in range(1, n + 2)])
    bad = [(n, k) for n in range(3, n_max + 1) for k in range(2, n) if c[(n, k)] != c_closed_form(n, k)]
    text = "\n".join(f"n={n}: " + " ".join(r) for n, r in zip(range(2, n_max + 1), rows))
    text += "\nclosed form: " + ("PASS" if not bad else f"FAIL at {bad[:5]}")
    out.emit(text, {"n_max": n_max, "rows": rows, "closed_form": "PASS" if not bad else "FAIL"})
    return 0 if not bad else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="free (default), " + ", ".join(CLI_NAMES))
    common.add_argument("--char", type=int)
    common.add_argument("-p", type=int)
    common.add_argument("-n", type=int)
    common.add_argument("-d", help="comma list d_1,...,d_j")
    common.add_argument("--commutative", action="store_true", default=None)
    common.add_argument("--cop", action="store_true", default=None)
    common.add_argument("--degree-bound", dest="degree_bound", type=int)
    common.add_argument("-K", type=int, help="index bound for overlap checks")
    common.add_argument("--window", help="lo,hi")
    common.add_argument("--format", choices=("text", "json", "csv"))
    common.add_argument("--seed", type=int)
    common.add_argument("--config", help="key=value or JSON file; flags win")

    ap = argparse.ArgumentParser(prog="nchopf", description="Free bialgebra k<g,h> and its quotients.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("lyndon", parents=[common])
    lsub = p.add_subparsers(dest="action", required=True)
    q = lsub.add_parser("list", parents=[common])
    q.add_argument("--max-len", type=int, default=4)
    for name in ("factor", "bracket"):
        q = lsub.add_parser(name, parents=[common])
        q.add_argument("word")
    p.set_defaults(func=cmd_lyndon)

    for name, fn in (("nf", cmd_nf), ("coprod", cmd_coprod), ("antipode", cmd_antipode), ("counit", cmd_counit)):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("expr")
        q.set_defaults(func=fn)

    q = sub.add_parser("shuffle", parents=[common])
    q.add_argument("i", type=int)
    q.add_argument("j", type=int)
    q.set_defaults(func=cmd_shuffle)

    q = sub.add_parser("bell", parents=[common])
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    q.set_defaults(func=cmd_bell)

    q = sub.add_parser("verify", parents=[common])
    q.add_argument("what", choices=("axioms", "ambiguities", "iso", "filtration", "gr", "bf"))
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("hilbert", parents=[common])
    q.add_argument("--g-cap", dest="g_cap", type=int, help="bound on the g-exponent for presets with infinite pieces")
    q.set_defaults(func=cmd_hilbert)

    for name, fn in (("growth", cmd_growth), ("gkdim", cmd_gkdim), ("dim", cmd_dim), ("ccoef", cmd_ccoef)):
        q = sub.add_parser(name, parents=[common])
        q.set_defaults(func=fn)

    q = sub.add_parser("primitives", parents=[common])
    q.add_argument("--a", type=int, default=1, help="exponent of the left grouplike g^a")
    q.add_argument("--b", type=int, default=0, help="exponent of the right grouplike g^b")
    q.set_defaults(func=cmd_primitives)
    return ap


def main(argv=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        cfg = resolve(args)
        out = Out(cfg["format"], stdout)
        status = args.func(args, cfg, out)
        return status or 0
    except (UsageError, AlgebraError, OSError, ValueError, json.JSONDecodeError) as e:
        print(f"error: {type(e).__name__}: {e}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
