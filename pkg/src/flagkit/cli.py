"""
Command-line front end: ``flagkit <verb> --datum <preset|json> [args]``.

Output is JSON (sorted keys) by default; ``--output table`` renders the same
document as indented text. Exit status: 0 success, 2 validation error,
3 resource bound exceeded (including undetermined semi-infinite comparisons).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import dualrep, ktheory
from .affweyl import IwahoriWeylGroup
from .antispherical import AntisphericalModule, ASElement
from .errors import BoundExceeded, FlagkitError, ValidationError
from .hecke import HeckeAlgebra, HeckeElement
from .kl import KLTable
from .laurent import LaurentPoly
from .rootdata import load_root_datum

DEFAULT_MAX_LENGTH = 8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message, location="arguments")


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what} is not valid JSON: {exc}", location=what) from exc


def _vector(text: str, what: str = "coweight") -> tuple[int, ...]:
    val = _json_arg(text, what)
    if not isinstance(val, list) or not all(isinstance(x, int) for x in val):
        raise ValidationError(f"{what} must be a JSON list of integers", location=what)
    return tuple(val)


class Context:
    """Lazily built objects shared by the verb handlers."""

    def __init__(self, args):
        self.args = args
        self.datum = load_root_datum(args.datum)
        self.group = IwahoriWeylGroup(self.datum)
        self.algebra = HeckeAlgebra(self.group)
        self._kl = None

    @property
    def kl(self) -> KLTable:
        if self._kl is None:
            cache = os.environ.get("FLAGKIT_CACHE") or self.args.cache_dir
            self._kl = KLTable(self.algebra, max_length=self.args.max_length, cache_dir=cache)
        return self._kl

    def element(self, text):
        if text is None:
            raise ValidationError("missing element argument", location="element")
        return self.group.parse(text)

    def hecke(self, text) -> HeckeElement:
        s = text.strip()
        if s.startswith("{") and '"terms"' in s:
            return self.algebra.from_json(_json_arg(s, "input"))
        return self.algebra.t_basis(self.element(s))

    def character(self, args) -> dualrep.WeightMultiset:
        if args.character is not None:
            return dualrep.WeightMultiset.from_json(_json_arg(args.character, "character"), self.datum)
        if args.coweight is not None:
            return dualrep.irreducible_character(self.datum, _vector(args.coweight))
        raise ValidationError("give --character or --coweight (highest weight)", location="character")

    def save_kl(self):
        if self._kl is not None and self._kl.cache_path is not None:
            self._kl.save()


def _enc(ctx: Context, x):
    return ctx.group.to_json(x)


def _elements(ctx: Context, xs):
    return [_enc(ctx, x) for x in sorted(xs, key=ctx.group.sort_key)]


# -- verb handlers ---------------------------------------------------------------------------

def v_pairing(ctx, a):
    return {"pairing": ctx.datum.pairing(_vector(a.coweight), _vector(a.weight, "weight"))}


def v_two_rho(ctx, a):
    return {"two_rho_pairing": ctx.datum.two_rho_pairing(_vector(a.coweight))}


def v_dominant_rep(ctx, a):
    nu, w = ctx.datum.dominant_representative(_vector(a.coweight))
    return {"dominant": list(nu), "finite_word": list(w.word)}


def v_weyl_group(ctx, a):
    els = ctx.datum.enumerate_finite_weyl()
    return {"order": len(els), "elements": [list(w.word) for w in els],
            "longest": list(ctx.datum.longest_element.word)}


def v_classify(ctx, a):
    return {"class": ctx.datum.classify_coweight(_vector(a.coweight))}


def v_iw_mult(ctx, a):
    return {"product": _enc(ctx, ctx.group.multiply(ctx.element(a.x), ctx.element(a.y)))}


def v_length(ctx, a):
    return {"length": ctx.group.length(ctx.element(a.element))}


def v_reduced_word(ctx, a):
    return ctx.group.reduced_word(ctx.element(a.element)).to_json()


def v_bruhat(ctx, a):
    return {"leq": ctx.group.bruhat_leq(ctx.element(a.x), ctx.element(a.y))}


def v_semi_infinite(ctx, a):
    return {"leq": ctx.group.semi_infinite_leq(ctx.element(a.x), ctx.element(a.y), window=a.window)}


def v_interval(ctx, a):
    got = ctx.group.bruhat_interval_below(ctx.element(a.element), a.max_length)
    return {"size": len(got), "elements": _elements(ctx, got)}


def v_min_coset_rep(ctx, a):
    return {"min_coset_rep": _enc(ctx, ctx.group.min_coset_rep(_vector(a.coweight)))}


def v_coset_label(ctx, a):
    return {"coset_label": list(ctx.group.coset_label(ctx.element(a.element)))}


def v_is_minimal(ctx, a):
    return {"minimal": ctx.group.is_minimal_in_left_Wfin_coset(ctx.element(a.element))}


def v_admissible(ctx, a):
    got = ctx.group.admissible_set(_vector(a.coweight), a.max_length)
    return {"size": len(got), "elements": _elements(ctx, got)}


def v_t_basis(ctx, a):
    return ctx.algebra.t_basis(ctx.element(a.element)).to_json()


def v_hecke_mult(ctx, a):
    return ctx.algebra.multiply(ctx.hecke(a.x), ctx.hecke(a.y)).to_json()


def v_t_inverse(ctx, a):
    return ctx.algebra.inverse_t(ctx.element(a.element)).to_json()


def v_theta(ctx, a):
    dec = None
    if a.decomposition:
        dec = tuple(_json_arg(a.decomposition, "decomposition"))
    return ctx.algebra.bernstein_theta(_vector(a.coweight), dec).to_json()


def v_central(ctx, a):
    return ctx.algebra.central_element(ctx.character(a)).to_json()


def v_is_central(ctx, a):
    return {"central": ctx.algebra.is_central(ctx.hecke(a.input))}


def v_specialize(ctx, a):
    spec = ctx.algebra.specialize(ctx.hecke(a.input), Fraction(a.v0))
    return {"terms": [{"element": _enc(ctx, w), "coeff": str(spec[w])}
                      for w in sorted(spec, key=ctx.group.sort_key)]}


def v_kl_poly(ctx, a):
    return {"P": str(ctx.kl.kl_polynomial(ctx.element(a.x), ctx.element(a.y)))}


def v_mu(ctx, a):
    return {"mu": ctx.kl.mu_coefficient(ctx.element(a.x), ctx.element(a.y))}


def v_kl_basis(ctx, a):
    return ctx.kl.kl_basis_element(ctx.element(a.element)).to_json()


def v_as_project(ctx, a):
    return AntisphericalModule(ctx.algebra, a.sign).project(ctx.hecke(a.input)).to_json()


def v_as_act(ctx, a):
    M = AntisphericalModule(ctx.algebra, a.sign)
    data = _json_arg(a.module_element, "module-element")
    m = ASElement(M, {tuple(t["coweight"]): LaurentPoly.from_pairs(t["poly"]) for t in data["terms"]})
    return M.act(m, ctx.hecke(a.input)).to_json()


def v_kernel_check(ctx, a):
    M = AntisphericalModule(ctx.algebra, a.sign)
    return {"in_kernel": M.kernel_check(ctx.kl, ctx.element(a.element))}


def v_char(ctx, a):
    ch = dualrep.irreducible_character(ctx.datum, _vector(a.coweight))
    return {"character": ch.to_json(), "dimension": ch.mass}


def v_weyl_dim(ctx, a):
    return {"dimension": dualrep.weyl_dimension(ctx.datum, _vector(a.coweight))}


def _char_or_weight(ctx, text):
    val = _json_arg(text, "character")
    if isinstance(val, list) and all(isinstance(x, int) for x in val):
        return dualrep.irreducible_character(ctx.datum, tuple(val))
    return dualrep.WeightMultiset.from_json(val, ctx.datum)


def v_tensor_char(ctx, a):
    ch = dualrep.tensor_character(_char_or_weight(ctx, a.x), _char_or_weight(ctx, a.y))
    return {"character": ch.to_json(), "dimension": ch.mass}


def v_minuscule(ctx, a):
    parts, twist = dualrep.minuscule_decomposition_typeA(ctx.datum, _vector(a.coweight))
    return {"fundamentals": parts, "twist": twist}


def v_weyl_orbit(ctx, a):
    return {"orbit": sorted(list(x) for x in dualrep.weyl_orbit(ctx.datum, _vector(a.coweight)))}


def v_class_standard(ctx, a):
    return {"class": ktheory.class_standard(ctx.group, ctx.element(a.element)).to_json()}


def v_class_costandard(ctx, a):
    return {"class": ktheory.class_costandard(ctx.group, ctx.element(a.element)).to_json()}


def v_class_ic(ctx, a):
    return {"class": ktheory.class_ic(ctx.kl, ctx.element(a.element)).to_json()}


def v_class_wakimoto(ctx, a):
    return {"class": ktheory.class_wakimoto(ctx.group, _vector(a.coweight)).to_json()}


def v_class_central(ctx, a):
    return {"class": ktheory.class_central(ctx.group, ctx.character(a)).to_json()}


def v_av_iw(ctx, a):
    val = _json_arg(a.input, "input")
    if isinstance(val, dict) and "class" in val:
        val = val["class"]
    g = ktheory.GroupRingElement.from_json(ctx.group, val)
    return {"av_iw": ktheory.av_iw(ctx.group, g).to_json()}


# verb -> (library operation, handler, argument names)
VERBS = {
    "pairing": ("rootdata.pairing", v_pairing, ("coweight", "weight")),
    "two-rho": ("rootdata.two_rho_pairing", v_two_rho, ("coweight",)),
    "dominant-rep": ("rootdata.dominant_representative", v_dominant_rep, ("coweight",)),
    "weyl-group": ("rootdata.enumerate_finite_weyl", v_weyl_group, ()),
    "classify": ("rootdata.classify_coweight", v_classify, ("coweight",)),
    "iw-mult": ("affweyl.multiply", v_iw_mult, ("x", "y")),
    "length": ("affweyl.length", v_length, ("element",)),
    "reduced-word": ("affweyl.reduced_word", v_reduced_word, ("element",)),
    "bruhat-leq": ("affweyl.bruhat_leq", v_bruhat, ("x", "y")),
    "semi-infinite-leq": ("affweyl.semi_infinite_leq", v_semi_infinite, ("x", "y", "window")),
    "interval": ("affweyl.bruhat_interval_below", v_interval, ("element",)),
    "min-coset-rep": ("affweyl.min_coset_rep", v_min_coset_rep, ("coweight",)),
    "coset-label": ("affweyl.coset_label", v_coset_label, ("element",)),
    "is-minimal": ("affweyl.is_minimal_in_left_Wfin_coset", v_is_minimal, ("element",)),
    "admissible-set": ("affweyl.admissible_set", v_admissible, ("coweight",)),
    "t-basis": ("hecke.t_basis", v_t_basis, ("element",)),
    "hecke-mult": ("hecke.multiply", v_hecke_mult, ("x", "y")),
    "t-inverse": ("hecke.inverse_t", v_t_inverse, ("element",)),
    "theta": ("hecke.bernstein_theta", v_theta, ("coweight", "decomposition")),
    "central": ("hecke.central_element", v_central, ("character", "coweight")),
    "is-central": ("hecke.is_central", v_is_central, ("input",)),
    "specialize": ("hecke.specialize", v_specialize, ("input", "v0")),
    "kl-poly": ("kl.kl_polynomial", v_kl_poly, ("x", "y")),
    "kl-basis": ("kl.kl_basis_element", v_kl_basis, ("element",)),
    "mu": ("kl.mu_coefficient", v_mu, ("x", "y")),
    "as-project": ("antispherical.project", v_as_project, ("input", "sign")),
    "as-act": ("antispherical.act", v_as_act, ("module_element", "input", "sign")),
    "kernel-check": ("antispherical.kernel_check", v_kernel_check, ("element", "sign")),
    "char": ("dualrep.irreducible_character", v_char, ("coweight",)),
    "weyl-dim": ("dualrep.weyl_dimension", v_weyl_dim, ("coweight",)),
    "tensor-char": ("dualrep.tensor_character", v_tensor_char, ("x", "y")),
    "minuscule-decomp": ("dualrep.minuscule_decomposition_typeA", v_minuscule, ("coweight",)),
    "weyl-orbit": ("dualrep.weyl_orbit", v_weyl_orbit, ("coweight",)),
    "class-standard": ("ktheory.class_standard", v_class_standard, ("element",)),
    "class-costandard": ("ktheory.class_costandard", v_class_costandard, ("element",)),
    "class-ic": ("ktheory.class_ic", v_class_ic, ("element",)),
    "class-wakimoto": ("ktheory.class_wakimoto", v_class_wakimoto, ("coweight",)),
    "class-central": ("ktheory.class_central", v_class_central, ("character", "coweight")),
    "av-iw": ("ktheory.av_iw", v_av_iw, ("input",)),
}

_ARG_HELP = {
    "coweight": "JSON list of integers",
    "weight": "JSON list of integers (character lattice)",
    "element": "IWElement JSON or a word like s1s0",
    "x": "first operand",
    "y": "second operand",
    "input": "Hecke element JSON, IWElement, or class JSON",
    "character": "weight multiset JSON [{coweight, mult}, ...]",
    "decomposition": "JSON [nu1, nu2] with nu = nu1 - nu2, both dominant",
    "module_element": "antispherical element JSON",
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--datum", default="GL2", help="preset name or inline JSON datum")
    common.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH)
    common.add_argument("--cache-dir", default=None, help="KL memo directory (FLAGKIT_CACHE overrides)")
    common.add_argument("--output", choices=("json", "table"), default="json")

    parser = _Parser(prog="flagkit", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    for verb, (op, _, names) in VERBS.items():
        p = sub.add_parser(verb, parents=[common], help=op)
        for name in names:
            flag = "--" + name.replace("_", "-")
            if name == "window":
                p.add_argument(flag, type=int, default=5)
            elif name == "sign":
                p.add_argument(flag, choices=("minus", "plus"), default="minus")
            elif name == "v0":
                p.add_argument(flag, default="1")
            else:
                p.add_argument(flag, dest=name, help=_ARG_HELP.get(name))
    st = sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    st.set_defaults(datum=None)
    return parser


def render_table(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(f"{pad}- {json.dumps(x, sort_keys=True)}" for x in doc)
    return pad + json.dumps(doc)


def emit(doc, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "table":
        stream.write(render_table(doc) + "\n")
    else:
        stream.write(json.dumps(doc, sort_keys=True) + "\n")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "table" if "--output" in argv and argv[argv.index("--output") + 1:][:1] == ["table"] else "json"
    try:
        args = build_parser().parse_args(argv)
        if args.verb is None:
            raise ValidationError("no verb given; see --help", location="verb")
        fmt = args.output
        if args.verb == "selftest":
            from .selftest import run_selftest
            fmt = fmt if "--output" in argv else "table"
            extra = [args.datum] if args.datum else []
            report = run_selftest(extra_data=extra, max_length=args.max_length, stream=sys.stdout,
                                  fmt=fmt)
            return 0 if report["passed"] else 1
        ctx = Context(args)
        doc = VERBS[args.verb][1](ctx, args)
        ctx.save_kl()
    except BoundExceeded as exc:
        emit({"error": exc.to_json()}, fmt)
        return 3
    except FlagkitError as exc:
        emit({"error": exc.to_json()}, fmt)
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        emit({"error": {"code": "validation", "message": str(exc), "location": None}}, fmt)
        return 2
    emit(doc, fmt)
    return 0


if __name__ == "__main__":
    sys.exit(main())
