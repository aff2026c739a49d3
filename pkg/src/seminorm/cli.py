"""Command-line front end.

Usage::

    seminorm ideal weak-closure --input running.json --char 0
    echo '{"kind": "curve", "poly": "x^2 - x^4 - y^4"}' | seminorm curve check

Input documents are JSON objects; flags override the ``char`` and
``options`` fields of the document.  Reports are JSON (default) or a short
text rendering.  Exit status is 0 for ``ok``, 2 for ``inconclusive`` and 1
for ``error``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Any

from .curves import INDETERMINATE, PlaneCurveGerm, initial_form, is_seminormal_at_origin, translate
from .elements import (
    Root,
    SOSICertificate,
    WSICertificate,
    build_characteristic_poly,
    derivative_criterion,
    schanuel_matrix,
    swan_root_test,
    verify_sosi,
    verify_wsi_ideal,
    verify_wsi_ring,
    wsi_certificate_from_high_powers,
)
from .ideals import (
    BoxCertificationError,
    MonomialIdeal,
    contains,
    default_box,
    integral_closure,
    ratliff_rush,
)
from .monoids import (
    AffineMonoid,
    MonomialAlgebraContext,
    NumericalSemigroup,
    is_seminormal_monoid,
    monoid_membership,
    saturation_trace,
    seminormalization_contains,
)
from .parsing import ParseError, parse_polynomial
from .poly import SparsePolynomial
from .valuations import i_greater, rees_valuations, samuel_estimate, samuel_value
from .weak import CharSpec, is_prime, weak_closure_char0, weak_closure_charp

EXIT_CODES = {"ok": 0, "error": 1, "inconclusive": 2}

COMMANDS: dict[str, dict[str, tuple[str, ...]]] = {
    "ideal": {
        "integral-closure": (),
        "weak-closure": ("box", "m_max"),
        "rees": (),
        "samuel": ("horizon",),
        "i-greater": (),
        "ratliff-rush": ("horizon",),
    },
    "semigroup": {"seminormalize": (), "weak-normalize": (), "relative": ()},
    "monoid": {"member": (), "seminormal": ("box",)},
    "curve": {"check": ("point",)},
    "element": {
        "verify-sosi": (),
        "verify-wsi": ("q_max",),
        "derive-F": (),
        "derivative-check": (),
        "swan": (),
        "schanuel": (),
    },
}

FIELDS = {
    "ideal": {"vars", "generators", "exponent"},
    "semigroup": {"generators", "ambient"},
    "monoid": {"generators", "exponent"},
    "curve": {"vars", "poly"},
    "element": {"vars", "algebra", "ideal", "b", "c", "a", "F", "certificate"},
}

ELEMENT_REQUIRED = {
    "verify-sosi": ("algebra", "b", "certificate"),
    "verify-wsi": ("b",),
    "derive-F": ("certificate",),
    "derivative-check": ("F", "b"),
    "swan": ("algebra", "b", "c"),
    "schanuel": ("a",),
}

DEFAULTS = {"m_max": 6, "horizon": 5, "q_max": 10}


class SchemaError(ValueError):
    """All problems found in an input document."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass
class Request:
    command: str
    char: int
    payload: dict[str, Any]
    options: dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    command: str
    status: str
    result: dict[str, Any] = field(default_factory=dict)
    flags: dict[str, Any] = field(default_factory=dict)
    input: dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict:
        return {"command": self.command, "status": self.status, "result": self.result,
                "flags": self.flags, "input": self.input}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for section in ("result", "flags"):
            for key, value in sorted(getattr(self, section).items()):
                lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# validation

def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _int_list(value, name, problems, positive=False, nonneg=False, length=None) -> list[int] | None:
    if not isinstance(value, list) or not all(_is_int(x) for x in value):
        problems.append(f"{name} must be a list of integers")
        return None
    if positive and any(x <= 0 for x in value):
        problems.append(f"{name} entries must be positive")
        return None
    if nonneg and any(x < 0 for x in value):
        problems.append(f"{name} entries must be nonnegative")
        return None
    if length is not None and len(value) != length:
        problems.append(f"{name} must have {length} entries")
        return None
    return value


def _vectors(value, name, problems) -> list[tuple[int, ...]] | None:
    if not isinstance(value, list) or not value:
        problems.append(f"{name} must be a nonempty list of exponent vectors")
        return None
    out = []
    for i, v in enumerate(value):
        v = _int_list(v, f"{name}[{i}]", problems, nonneg=True)
        if v is None:
            return None
        out.append(tuple(v))
    if len({len(v) for v in out}) != 1:
        problems.append(f"{name} vectors have different lengths")
        return None
    return out


def _names(value, name, problems) -> tuple[str, ...] | None:
    if (not isinstance(value, list) or not value
            or not all(isinstance(v, str) and v.isidentifier() for v in value)):
        problems.append(f"{name} must be a nonempty list of variable names")
        return None
    if len(set(value)) != len(value):
        problems.append(f"{name} has repeated names")
        return None
    return tuple(value)


def _poly(text, name, char, vars, problems) -> SparsePolynomial | None:
    if not isinstance(text, str):
        problems.append(f"{name} must be a string")
        return None
    try:
        return parse_polynomial(text, char, vars)
    except ParseError as e:
        problems.append(f"{name}: {e}")
        return None


def _algebra(value, dim, problems):
    if not isinstance(value, list) or not value:
        problems.append("algebra must be a nonempty list of generators")
        return None
    if all(_is_int(x) for x in value):
        if dim != 1:
            problems.append("integer algebra generators need exactly one variable")
            return None
        if any(x <= 0 for x in value):
            problems.append("algebra entries must be positive")
            return None
        return NumericalSemigroup(value)
    gens = _vectors(value, "algebra", problems)
    if gens is None:
        return None
    if len(gens[0]) != dim:
        problems.append(f"algebra generators must have {dim} entries")
        return None
    return AffineMonoid(gens, dim)


def _options(raw, allowed, problems) -> dict[str, Any]:
    if not isinstance(raw, dict):
        problems.append("options must be an object")
        return {}
    out = {}
    for key, value in raw.items():
        if key not in allowed:
            problems.append(f"option {key!r} does not apply to this command")
        elif key in ("box", "point"):
            v = _int_list(value, key, problems, nonneg=(key == "box"))
            if v is not None:
                out[key] = tuple(v)
        elif not _is_int(value) or value < (0 if key == "m_max" else 1):
            problems.append(f"option {key!r} must be a {'nonnegative' if key == 'm_max' else 'positive'} integer")
        else:
            out[key] = value
    return out


def parse_input(document, command: str | None = None) -> Request:
    """Validate ``document`` (JSON text or an already decoded object).

    ``command`` is ``"<kind>/<name>"``; it may also be given in the
    document.  Every problem found is reported in one ``SchemaError``.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise SchemaError([f"invalid JSON: {e}"]) from None
    if not isinstance(document, dict):
        raise SchemaError(["document must be a JSON object"])
    problems: list[str] = []
    doc = dict(document)
    command = command or doc.get("command")
    if command is not None and doc.get("command") not in (None, command):
        problems.append(f"document command {doc['command']!r} conflicts with {command!r}")
    doc.pop("command", None)

    kind = doc.pop("kind", None)
    if kind not in COMMANDS:
        problems.append(f"kind must be one of {sorted(COMMANDS)}")
        raise SchemaError(problems)
    if command is None:
        problems.append("no command given")
        raise SchemaError(problems)
    group, _, name = command.partition("/")
    if group != kind or name not in COMMANDS[kind]:
        problems.append(f"command {command!r} does not apply to kind {kind!r}")
        raise SchemaError(problems)

    char = doc.pop("char", 0)
    if not _is_int(char) or char < 0 or (char and not is_prime(char)):
        problems.append("char must be 0 or a prime")
        char = 0
    options = _options(doc.pop("options", {}), COMMANDS[kind][name], problems)
    for key in sorted(set(doc) - FIELDS[kind]):
        problems.append(f"unknown field {key!r}")

    payload: dict[str, Any] = {}
    if kind == "ideal":
        gens = _vectors(doc.get("generators"), "generators", problems)
        if gens is not None:
            dim = len(gens[0])
            vars = _names(doc.get("vars", ["x", "y", "z", "w"][:dim] if dim <= 4
                                  else [f"x{i}" for i in range(1, dim + 1)]), "vars", problems)
            if vars is not None and len(vars) != dim:
                problems.append("vars and generators disagree on the number of variables")
            payload["vars"] = vars
            payload["ideal"] = MonomialIdeal(gens, dim)
            if name == "samuel" or "exponent" in doc:
                e = _int_list(doc.get("exponent"), "exponent", problems, nonneg=True, length=dim)
                payload["exponent"] = None if e is None else tuple(e)
            if "box" in options and len(options["box"]) != dim:
                problems.append(f"box must have {dim} entries")
            if name == "weak-closure" and "m_max" in options and not char:
                problems.append("option 'm_max' applies only in positive characteristic")
            if name == "weak-closure" and "box" in options and char:
                problems.append("option 'box' applies only in characteristic 0")
    elif kind == "semigroup":
        gens = _int_list(doc.get("generators"), "generators", problems, positive=True)
        if gens is not None and not gens:
            problems.append("generators must be nonempty")
            gens = None
        ambient = _int_list(doc.get("ambient", [1]), "ambient", problems, positive=True)
        if ambient is not None and not ambient:
            problems.append("ambient must be nonempty")
            ambient = None
        if gens is not None:
            payload["semigroup"] = NumericalSemigroup(gens)
        if ambient is not None:
            payload["ambient"] = NumericalSemigroup(ambient)
        if gens is not None and ambient is not None and not payload["semigroup"].issubset(payload["ambient"]):
            problems.append("generators do not lie in the ambient semigroup")
    elif kind == "monoid":
        gens = _vectors(doc.get("generators"), "generators", problems)
        if gens is not None:
            dim = len(gens[0])
            payload["monoid"] = AffineMonoid(gens, dim)
            if name == "member" or "exponent" in doc:
                e = _int_list(doc.get("exponent"), "exponent", problems, nonneg=True, length=dim)
                payload["exponent"] = None if e is None else tuple(e)
            if "box" in options and len(options["box"]) != dim:
                problems.append(f"box must have {dim} entries")
    elif kind == "curve":
        vars = _names(doc.get("vars", ["x", "y"]), "vars", problems)
        if vars is not None and len(vars) != 2:
            problems.append("a plane curve needs exactly two variables")
            vars = None
        if vars is not None:
            payload["vars"] = vars
            payload["poly"] = _poly(doc.get("poly"), "poly", char, vars, problems)
        if "point" in options and len(options["point"]) != 2:
            problems.append("point must have 2 entries")
    else:
        _parse_element(doc, name, char, payload, problems)

    if problems:
        raise SchemaError(problems)
    return Request(command, char, payload, options)


def _parse_element(doc, name, char, payload, problems) -> None:
    for key in ELEMENT_REQUIRED[name]:
        if key not in doc:
            problems.append(f"field {key!r} is required")
    vars = _names(doc.get("vars", ["t"]), "vars", problems)
    if vars is None:
        return
    payload["vars"] = vars
    for key in ("b", "c", "a"):
        if key in doc:
            payload[key] = _poly(doc[key], key, char, vars, problems)
    if "F" in doc:
        if "T" in vars:
            problems.append("the variable T is reserved for F")
        else:
            payload["F"] = _poly(doc["F"], "F", char, ("T",) + vars, problems)
    if "algebra" in doc:
        payload["algebra"] = _algebra(doc["algebra"], len(vars), problems)
    if "ideal" in doc:
        gens = _vectors(doc["ideal"], "ideal", problems)
        if gens is not None:
            if len(gens[0]) != len(vars):
                problems.append(f"ideal generators must have {len(vars)} entries")
            else:
                payload["ideal"] = MonomialIdeal(gens, len(vars))
    if name == "verify-wsi":
        if ("algebra" in doc) == ("ideal" in doc):
            problems.append("verify-wsi needs exactly one of 'algebra' and 'ideal'")
        elif "algebra" in doc and "certificate" not in doc:
            problems.append("field 'certificate' is required with 'algebra'")
    if "certificate" in doc:
        payload["certificate"] = _certificate(doc["certificate"], name, char, vars, problems)


def _certificate(raw, name, char, vars, problems):
    sosi = name == "verify-sosi"
    keys = {"q", "N", "c"} if sosi else {"q", "a"}
    if not isinstance(raw, dict) or set(raw) != keys:
        problems.append(f"certificate must be an object with fields {sorted(keys)}")
        return None
    ints = ("q", "N") if sosi else ("q",)
    if not all(_is_int(raw[k]) for k in ints):
        problems.append(f"certificate fields {list(ints)} must be integers")
        return None
    lst = raw["c" if sosi else "a"]
    if not isinstance(lst, list):
        problems.append("certificate coefficients must be a list of strings")
        return None
    polys = [_poly(t, f"certificate[{i}]", char, vars, problems) for i, t in enumerate(lst)]
    if any(p is None for p in polys):
        return None
    try:
        if sosi:
            return SOSICertificate(raw["q"], raw["N"], tuple(polys))
        return WSICertificate(raw["q"], tuple(polys))
    except ValueError as e:
        problems.append(f"certificate: {e}")
        return None


def serialize_request(req: Request) -> dict:
    """Inverse of ``parse_input``: a document that parses back to ``req``."""
    kind = req.command.split("/")[0]
    doc: dict[str, Any] = {"command": req.command, "kind": kind, "char": req.char}
    if req.options:
        doc["options"] = {k: list(v) if isinstance(v, tuple) else v for k, v in req.options.items()}
    p = req.payload
    if kind == "semigroup":
        doc["generators"] = list(p["semigroup"].generators)
        doc["ambient"] = list(p["ambient"].generators)
        return doc
    if "vars" in p:
        doc["vars"] = list(p["vars"])
    for key in ("ideal", "monoid"):
        if key in p:
            gens = [list(g) for g in p[key].generators]
            doc["generators" if kind != "element" else key] = gens
    if "exponent" in p:
        doc["exponent"] = list(p["exponent"])
    if "poly" in p:
        doc["poly"] = str(p["poly"])
    for key in ("b", "c", "a", "F"):
        if key in p:
            doc[key] = str(p[key])
    if "algebra" in p:
        A = p["algebra"]
        doc["algebra"] = (list(A.generators) if isinstance(A, NumericalSemigroup)
                          else [list(g) for g in A.generators])
    cert = p.get("certificate")
    if isinstance(cert, SOSICertificate):
        doc["certificate"] = {"q": cert.q, "N": cert.N, "c": [str(c) for c in cert.c]}
    elif isinstance(cert, WSICertificate):
        doc["certificate"] = {"q": cert.q, "a": [str(a) for a in cert.a]}
    return doc


# ---------------------------------------------------------------------------
# execution

def _rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _generators(I: MonomialIdeal) -> list[list[int]]:
    """Minimal generators, largest monomial first in lex order."""
    return [list(g) for g in sorted(I.generators, reverse=True)]


def _added(I: MonomialIdeal, J: MonomialIdeal, box) -> list[list[int]]:
    """Exponents of ``J`` missing from ``I`` inside ``[0, box]``, ascending."""
    return [list(p) for p in cartesian(*(range(b + 1) for b in box))
            if contains(J, p) and not contains(I, p)]


def _closure_result(I: MonomialIdeal, J: MonomialIdeal, box) -> dict:
    return {"minimal_generators": _generators(J), "added_exponents": _added(I, J, box),
            "box": list(box)}


def _ideal(req: Request, name: str) -> tuple[str, dict, dict]:
    I: MonomialIdeal = req.payload["ideal"]
    opts = req.options
    if name == "integral-closure":
        box = default_box(I)
        try:
            J = integral_closure(I)
        except BoxCertificationError as e:
            return "inconclusive", _closure_result(I, e.ideal, box), {"box_certified": False}
        return "ok", _closure_result(I, J, box), {"box_certified": True}
    if name == "weak-closure":
        if req.char == 0:
            box = opts.get("box") or default_box(I)
            try:
                J = weak_closure_char0(I, box)
            except BoxCertificationError as e:
                return "inconclusive", _closure_result(I, e.ideal, box), {"box_certified": False}
            return "ok", _closure_result(I, J, box), {"box_certified": True}
        m_max = opts.get("m_max", DEFAULTS["m_max"])
        J, certified = weak_closure_charp(I, req.char, m_max)
        flags = {"m_max": m_max, "m_max_exhausted": not certified}
        return ("ok" if certified else "inconclusive"), _closure_result(I, J, default_box(I)), flags
    if name == "rees":
        vals = rees_valuations(I)
        return "ok", {"valuations": [{"normal": list(v.normal), "value": v.value} for v in vals]}, {}
    if name == "samuel":
        gamma = req.payload["exponent"]
        result = {"exponent": list(gamma), "value": _rational(samuel_value(I, gamma))}
        if "horizon" in opts:
            result["estimates"] = [_rational(samuel_estimate(I, gamma, n))
                                   for n in range(1, opts["horizon"] + 1)]
        return "ok", result, {}
    if name == "i-greater":
        try:
            J = i_greater(I)
        except BoxCertificationError as e:
            return "inconclusive", {"minimal_generators": _generators(e.ideal)}, {"box_certified": False}
        return "ok", {"minimal_generators": _generators(J)}, {"box_certified": True}
    horizon = opts.get("horizon", DEFAULTS["horizon"])
    J, settled = ratliff_rush(I, horizon)
    result = {"minimal_generators": _generators(J), "horizon": horizon}
    return ("ok" if settled else "inconclusive"), result, {"chain_stable_at_horizon": settled}


def _semigroup_result(sat) -> dict:
    S = sat.semigroup
    return {"generators": list(S.generators), "adjoined": list(sat.adjoined),
            "gcd": S.gcd, "gaps": [S.gcd * g for g in S.gaps]}


def _semigroup(req: Request, name: str) -> tuple[str, dict, dict]:
    S, T = req.payload["semigroup"], req.payload["ambient"]
    if name == "seminormalize":
        if S.gcd != 1:
            raise ValueError(f"generators of {S!r} are not coprime")
        sat = saturation_trace(S, NumericalSemigroup([1]), 0)
    elif name == "relative":
        sat = saturation_trace(S, T, 0)
    else:
        sat = saturation_trace(S, T, req.char)
    return "ok", _semigroup_result(sat), {}


def _monoid(req: Request, name: str) -> tuple[str, dict, dict]:
    M: AffineMonoid = req.payload["monoid"]
    if name == "member":
        x = req.payload["exponent"]
        return "ok", {"exponent": list(x), "in_monoid": monoid_membership(M, x),
                      "in_seminormalization": seminormalization_contains(M, x)}, {}
    box = req.options.get("box") or tuple(2 * max((g[j] for g in M.generators), default=1)
                                          for j in range(M.dim))
    ok, witnesses = is_seminormal_monoid(M, box)
    return "ok", {"seminormal": ok, "witnesses": [list(w) for w in witnesses], "box": list(box)}, {}


def _curve(req: Request, name: str) -> tuple[str, dict, dict]:
    f = req.payload["poly"]
    point = req.options.get("point")
    if point is not None:
        f = translate(f, point)
    g = PlaneCurveGerm(f)
    n, form = initial_form(g)
    verdict = is_seminormal_at_origin(g)
    result = {"multiplicity": n, "initial_form": str(form)}
    flags = {"tangents_tested_over": "Q" if req.char == 0 else f"F_{req.char}"}
    if req.char:
        flags["note"] = "squarefree test over the prime field; exact except for p-th power forms"
    if point is not None:
        result["point"] = list(point)
    if verdict is INDETERMINATE:
        result["seminormal_at_origin"] = None
        return "inconclusive", result, flags
    result["seminormal_at_origin"] = verdict
    result["ordinary_point"] = verdict
    return "ok", result, flags


def _element(req: Request, name: str) -> tuple[str, dict, dict]:
    p = req.payload
    ctx = (MonomialAlgebraContext(CharSpec(req.char), p["algebra"]) if "algebra" in p else None)
    if name == "verify-sosi":
        return "ok", {"verified": verify_sosi(ctx, p["b"], p["certificate"])}, {}
    if name == "verify-wsi":
        if ctx is not None:
            return "ok", {"verified": verify_wsi_ring(ctx, p["b"], p["certificate"])}, {}
        I = p["ideal"]
        if "certificate" in p:
            return "ok", {"verified": verify_wsi_ideal(I, p["b"], p["certificate"])}, {}
        q_max = req.options.get("q_max", DEFAULTS["q_max"])
        cert = wsi_certificate_from_high_powers(I, p["b"], q_max)
        if cert is None:
            return "inconclusive", {"certificate": None}, {"q_max": q_max, "not_found_within_bounds": True}
        return "ok", {"verified": verify_wsi_ideal(I, p["b"], cert),
                      "certificate": {"q": cert.q, "a": [str(a) for a in cert.a]}}, {"q_max": q_max}
    if name == "derive-F":
        F = build_characteristic_poly(p["certificate"])
        return "ok", {"F": str(F), "degree": F.degree_in("T")}, {}
    if name == "derivative-check":
        return "ok", {"roots_through_half_degree": derivative_criterion(p["F"], p["b"])}, {}
    if name == "swan":
        out = swan_root_test(ctx, p["b"], p["c"])
        key = "root" if isinstance(out, Root) else "witness"
        return "ok", {key: str(out.a), "seminormal_evidence": key == "root"}, {}
    M, report = schanuel_matrix(p["a"])
    return "ok", {"matrix": [[str(m) for m in row] for row in M], "checks": report}, {}


HANDLERS = {"ideal": _ideal, "semigroup": _semigroup, "monoid": _monoid, "curve": _curve, "element": _element}


def execute(req: Request) -> Report:
    """Run the single operation named by ``req.command``; never raises."""
    group, _, name = req.command.partition("/")
    echo = serialize_request(req)
    try:
        status, result, flags = HANDLERS[group](req, name)
    except Exception as e:  # reported, not propagated
        return Report(req.command, "error", {"error": f"{type(e).__name__}: {e}"}, {}, echo)
    return Report(req.command, status, result, flags, echo)


# ---------------------------------------------------------------------------
# argument handling

def _int_tuple(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, help="0 or a prime (default: from the document, else 0)")
    common.add_argument("--input", default="-", help="JSON input document (default: stdin)")
    common.add_argument("--box", type=_int_tuple)
    common.add_argument("--m-max", dest="m_max", type=int)
    common.add_argument("--horizon", type=int)
    common.add_argument("--q-max", dest="q_max", type=int)
    common.add_argument("--point", type=_int_tuple)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")

    parser = argparse.ArgumentParser(prog="seminorm", description="Seminormality and weak subintegrality toolkit.")
    groups = parser.add_subparsers(dest="group", required=True)
    for group, commands in COMMANDS.items():
        sub = groups.add_parser(group).add_subparsers(dest="name", required=True)
        for name in commands:
            sub.add_parser(name, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    command = f"{args.group}/{args.name}"
    fmt = args.format or "json"
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        document = json.loads(text)
        if isinstance(document, dict):
            document.setdefault("kind", args.group)
            if args.char is not None:
                document["char"] = args.char
            options = dict(document.get("options") or {})
            for key in ("box", "m_max", "horizon", "q_max", "point"):
                if getattr(args, key) is not None:
                    options[key] = getattr(args, key)
            if options:
                document["options"] = options
        report = execute(parse_input(document, command))
    except (OSError, json.JSONDecodeError, SchemaError) as e:
        problems = e.problems if isinstance(e, SchemaError) else [str(e)]
        report = Report(command, "error", {"error": "invalid input", "problems": problems})
    print(report.to_json() if fmt == "json" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
