"""Command-line interface: batch access to the library over JSON fixtures.

Subcommands:
    field info FIELD.json
    bloch verify ELEMENT.json
    bloch regulator ELEMENT.json
    fiveterm check PAIR.json
    torsion table FIELD.json
    torsion generators FIELD.json [--prime P]
    torsion order FIELD.json --prime P
    cycle invariant TRIANGULATION.json

Common flags: --precision N (decimal digits, >= 20, default 50),
--tolerance E (exponent of the comparison tolerance), --symmetric-range
(display regulators with real part in [-2*pi^2, 2*pi^2) instead of
[0, 4*pi^2)), --json.

Exit codes: 0 success, 2 input error, 3 mathematical failure, 4 precision
exhausted.  Output is deterministic for a fixed configuration.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from mpmath import mp

from .field import (FieldError, NumberField, PrecisionExhausted,
                    element_in_field, guard_digits)
from .extgroup import (ExtGroupError, MultBasis, UnsaturatedBasis,
                       load_basis)
from .bloch import (BlochError, ExtBlochSum, Flattening, lift_five_term,
                    normalize, rho_hat)
from .regulator import RegulatorError, reg_vector
from .torsion import (NotApplicable, TorsionError, beta_p, certify_order,
                      flattened_torsion, torsion_profile)
from .cochain import CochainError, manifold_invariant


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _field_of(data):
    key = "field" if "field" in data else "poly"
    if key not in data:
        raise InputError("fixture lacks a defining polynomial")
    return NumberField(data[key])


def _basis_of(field, data, precision):
    desc = data.get("basis")
    if desc is None:
        raise InputError("fixture lacks a generator basis")
    gens = [field.element(c) for c in desc.get("free_gens", [])]
    torsion_gen = None
    if "torsion_gen" in desc:
        torsion_gen = field.element(desc["torsion_gen"])
    return MultBasis(field, gens, saturated=bool(desc.get("saturated")),
                     precision=precision, torsion_gen=torsion_gen)


def _ext_element(basis, coords):
    k, pairs = coords
    return basis.element(k, {int(j): int(e) for j, e in pairs})


def _element_of(data, precision):
    field = _field_of(data)
    basis = _basis_of(field, data, precision)
    terms = [(int(n), Flattening(_ext_element(basis, e),
                                 _ext_element(basis, f)))
             for n, e, f in data.get("terms", [])]
    chi_part = _ext_element(basis, data["chi"]) if "chi" in data else None
    return ExtBlochSum(basis, terms, chi_part)


def _fmt_real(x, digits):
    s = mp.nstr(x, digits, strip_zeros=False)
    return s


def _fmt_complex(z, digits):
    z = mp.mpc(z)
    re = _fmt_real(mp.re(z), digits)
    im = _fmt_real(abs(mp.im(z)), digits)
    sign = "-" if mp.im(z) < 0 else "+"
    return f"{re} {sign} {im}i"


def _reg_strings(vec, cfg):
    digits = min(cfg.precision, 30)
    out = []
    with mp.workdps(cfg.precision + guard_digits(cfg.precision)):
        for v in vec:
            rep = v.symmetric() if cfg.symmetric_range else v.canonical()
            out.append(_fmt_complex(rep, digits))
    return out


def _poly_string(coeffs):
    return "[" + ", ".join(str(c) for c in coeffs) + "]"


# ---------------------------------------------------------------------------
# Commands: each returns a payload dict; rendering is shared.

def cmd_field_info(args, cfg):
    data = _load_json(args.fixture)
    if isinstance(data, list):
        data = {"field": data}
    field = _field_of(data)
    m, w = field.torsion
    autos = 0
    with mp.workdps(cfg.precision + guard_digits(cfg.precision)):
        approxes = []
        for ctx in field.embeddings(cfg.precision):
            approxes.append(ctx.root())
            if not ctx.is_real:
                approxes.append(ctx.conjugated().root())
    for approx in approxes:
        if element_in_field(list(field.poly), approx, field,
                            min(cfg.precision, 48)) is not None:
            autos += 1
    digits = min(cfg.precision, 30)
    with mp.workdps(cfg.precision + guard_digits(cfg.precision)):
        table = [_fmt_complex(ctx.root(), digits)
                 for ctx in field.embeddings(cfg.precision)]
    return {
        "poly": _poly_string(field.poly),
        "degree": field.degree,
        "signature": list(field.signature),
        "torsion_order": m,
        "torsion_generator": _poly_string(w.coeffs),
        "automorphisms": autos,
        "embeddings": table,
    }


def cmd_bloch_verify(args, cfg):
    data = _load_json(args.fixture)
    s = _element_of(data, cfg.precision)
    caveats = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        in_bhat = s.is_in_Bhat()
        projected = s.project()
        in_b = projected.is_in_B(s.basis)
        caveats = sorted({str(w.message) for w in caught
                          if issubclass(w.category, UnsaturatedBasis)})
    return {
        "terms": len(s.terms),
        "in_B": in_b,
        "in_Bhat": in_bhat,
        "caveats": caveats,
    }


def cmd_bloch_regulator(args, cfg):
    data = _load_json(args.fixture)
    s = _element_of(data, cfg.precision)
    vec = reg_vector(s, cfg.precision, cfg.tolerance_value)
    return {"regulator": _reg_strings(vec, cfg)}


def cmd_fiveterm_check(args, cfg):
    data = _load_json(args.fixture)
    field = _field_of(data)
    basis = _basis_of(field, data, cfg.precision)
    x = field.element(data["x"])
    y = field.element(data["y"])
    fl0 = Flattening(basis.log_lift(x), basis.log_lift(field.one - x))
    fl1 = Flattening(basis.log_lift(y), basis.log_lift(field.one - y))
    s = normalize(basis, rho_hat(lift_five_term(fl0, fl1)))
    vec = reg_vector(s, cfg.precision, cfg.tolerance_value)
    with mp.workdps(cfg.precision + guard_digits(cfg.precision)):
        tol = cfg.tolerance_value if cfg.tolerance_value is not None \
            else mp.mpf(10) ** (-cfg.precision + 10)
        reg_zero = all(v.distance(0) < tol for v in vec)
    return {
        "wedge_zero": s.is_in_Bhat(),
        "regulator_zero": bool(reg_zero),
        "regulator": _reg_strings(vec, cfg),
    }


def cmd_torsion_table(args, cfg):
    data = _load_json(args.fixture)
    if isinstance(data, list):
        data = {"field": data}
    field = _field_of(data)
    profile = torsion_profile(field, min(cfg.precision, 48))
    return {
        "m": profile.m,
        "w": profile.w,
        "nu": {str(p): profile.nu[p] for p in profile.primes},
        "nu_prime": {str(p): profile.nu_prime[p] for p in profile.primes},
    }


def cmd_torsion_generators(args, cfg):
    data = _load_json(args.fixture)
    if isinstance(data, list):
        data = {"field": data}
    field = _field_of(data)
    profile = torsion_profile(field, min(cfg.precision, 48))
    primes = [args.prime] if args.prime else \
        [p for p in profile.primes if profile.nu[p] > 0]
    out = {}
    for p in primes:
        try:
            b = beta_p(field, p, min(cfg.precision, 48))
        except NotApplicable:
            out[str(p)] = "none"
            continue
        out[str(p)] = " + ".join(
            f"{n}*[{_poly_string(z.coeffs)}]" for n, z in b.terms)
    return {"generators": out}


def cmd_torsion_order(args, cfg):
    data = _load_json(args.fixture)
    if isinstance(data, list):
        data = {"field": data}
    field = _field_of(data)
    s = flattened_torsion(field, args.prime, min(cfg.precision, 48))
    order = certify_order(s, cfg.precision)
    return {"prime": args.prime, "order": order}


def cmd_cycle_invariant(args, cfg):
    inv = manifold_invariant(args.fixture, cfg.precision,
                             cfg.tolerance_value)
    digits = min(cfg.precision, 30)
    with mp.workdps(cfg.precision + guard_digits(cfg.precision)):
        im = [_fmt_real(x, digits) for x in inv.imaginary_parts]
        ds = [_fmt_real(x, digits) for x in inv.dilogarithm_sums]
    return {
        "terms": len(inv.element.terms),
        "regulator": _reg_strings(inv.regulator, cfg),
        "imaginary_parts": im,
        "dilogarithm_sums": ds,
        "matches": inv.matches,
    }


# ---------------------------------------------------------------------------

def _render(payload, cfg, stream):
    header = {"precision": cfg.precision,
              "range": "symmetric" if cfg.symmetric_range else "canonical"}
    if cfg.tolerance is not None:
        header["tolerance"] = f"1e{cfg.tolerance}"
    if cfg.json:
        print(json.dumps({"config": header, "result": payload},
                         sort_keys=True, indent=1), file=stream)
        return
    print(" ".join(f"{k}={v}" for k, v in sorted(header.items())),
          file=stream)
    for key in payload:
        value = payload[key]
        if isinstance(value, list):
            print(f"{key}:", file=stream)
            for i, item in enumerate(value):
                print(f"  [{i}] {item}", file=stream)
        elif isinstance(value, dict):
            print(f"{key}:", file=stream)
            for k in sorted(value):
                print(f"  {k}: {value[k]}", file=stream)
        else:
            print(f"{key}: {value}", file=stream)


def _add_common(parser):
    parser.add_argument("--precision", type=int, default=50,
                        help="working decimal digits (>= 20)")
    parser.add_argument("--tolerance", type=int, default=None,
                        help="tolerance exponent, e.g. -30 for 1e-30")
    parser.add_argument("--symmetric-range", action="store_true",
                        dest="symmetric_range")
    parser.add_argument("--json", action="store_true")


class RunConfig:
    def __init__(self, args):
        self.precision = args.precision
        if self.precision < 20:
            raise InputError("precision must be at least 20")
        self.tolerance = args.tolerance
        self.symmetric_range = args.symmetric_range
        self.json = args.json

    @property
    def tolerance_value(self):
        if self.tolerance is None:
            return None
        return mp.mpf(10) ** self.tolerance


def build_parser():
    parser = argparse.ArgumentParser(
        prog="extbloch",
        description="Extended Bloch group computations over number fields")
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field").add_subparsers(dest="sub",
                                                     required=True)
    p = p_field.add_parser("info")
    p.add_argument("fixture")
    _add_common(p)
    p.set_defaults(handler=cmd_field_info)

    p_bloch = sub.add_parser("bloch").add_subparsers(dest="sub",
                                                     required=True)
    for name, handler in (("verify", cmd_bloch_verify),
                          ("regulator", cmd_bloch_regulator)):
        p = p_bloch.add_parser(name)
        p.add_argument("fixture")
        _add_common(p)
        p.set_defaults(handler=handler)

    p_ft = sub.add_parser("fiveterm").add_subparsers(dest="sub",
                                                     required=True)
    p = p_ft.add_parser("check")
    p.add_argument("fixture")
    _add_common(p)
    p.set_defaults(handler=cmd_fiveterm_check)

    p_tor = sub.add_parser("torsion").add_subparsers(dest="sub",
                                                     required=True)
    for name, handler in (("table", cmd_torsion_table),
                          ("generators", cmd_torsion_generators),
                          ("order", cmd_torsion_order)):
        p = p_tor.add_parser(name)
        p.add_argument("fixture")
        p.add_argument("--prime", type=int,
                       required=(name == "order"))
        _add_common(p)
        p.set_defaults(handler=handler)

    p_cyc = sub.add_parser("cycle").add_subparsers(dest="sub",
                                                   required=True)
    p = p_cyc.add_parser("invariant")
    p.add_argument("fixture")
    _add_common(p)
    p.set_defaults(handler=cmd_cycle_invariant)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args)
        payload = args.handler(args, cfg)
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return 4
    except (InputError, FieldError, KeyError, ValueError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ExtGroupError, BlochError, RegulatorError, TorsionError,
            CochainError) as exc:
        print(f"math error: {exc}", file=sys.stderr)
        return 3
    _render(payload, cfg, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
