"""JSON formats for algebras, cochains, multivectors, formal polynomials and reports.

Rationals are written as JSON integers when integral and as ``"p/q"``
strings otherwise; floats are rejected on input so nothing inexact can
sneak in.
"""

import json
from fractions import Fraction
from importlib import resources

import numpy as np

from .algebra import Algebra, exact, zeros
from .hochschild import Cochain
from .poly import PolyCoeff, PolyMultivector
from .quantize import FormalPoly

__all__ = [
    "FormatError",
    "algebra_from_json",
    "algebra_to_json",
    "bivector_from_json",
    "cochain_from_json",
    "cochain_to_json",
    "dumps",
    "fixture_path",
    "formalpoly_from_json",
    "formalpoly_to_json",
    "load_algebra",
    "load_bivector",
    "load_fixture_algebra",
    "load_json",
    "multivector_to_json",
    "rational_from_json",
    "rational_to_json",
    "to_jsonable",
]


class FormatError(ValueError):
    """Malformed input file or object."""


def rational_to_json(x):
    x = exact(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def rational_from_json(v, where="value"):
    if isinstance(v, bool) or isinstance(v, float):
        raise FormatError(f"{where}: expected an integer or \"p/q\" string, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return exact(Fraction(v.strip()))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"{where}: cannot parse rational {v!r}") from None
    raise FormatError(f"{where}: expected a rational, got {type(v).__name__}")


def _field(obj, key, kind, where):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    v = obj[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise FormatError(f"{where}.{key}: expected an integer")
    if kind is list and not isinstance(v, list):
        raise FormatError(f"{where}.{key}: expected an array")
    return v


# -- algebras -----------------------------------------------------------------

def algebra_to_json(A):
    out = {
        "dim": A.dim,
        "labels": list(A.labels),
        "unit": [rational_to_json(x) for x in A.unit],
        "table": [
            [[rational_to_json(x) for x in A.table[i, j]] for j in range(A.dim)]
            for i in range(A.dim)
        ],
    }
    if A.name:
        out["name"] = A.name
    if A.defining_poly is not None:
        out["defining_poly"] = [rational_to_json(x) for x in A.defining_poly]
    return out


def algebra_from_json(obj):
    m = _field(obj, "dim", int, "algebra")
    if m < 1:
        raise FormatError("algebra.dim must be >= 1")
    labels = _field(obj, "labels", list, "algebra")
    unit = _field(obj, "unit", list, "algebra")
    table = _field(obj, "table", list, "algebra")
    if len(labels) != m or not all(isinstance(s, str) for s in labels):
        raise FormatError(f"algebra.labels: expected {m} strings")
    if len(unit) != m:
        raise FormatError(f"algebra.unit: expected {m} entries")
    arr = zeros((m, m, m))
    if len(table) != m:
        raise FormatError(f"algebra.table: expected {m} rows")
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != m:
            raise FormatError(f"algebra.table[{i}]: expected {m} entries")
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != m:
                raise FormatError(f"algebra.table[{i}][{j}]: expected a length-{m} vector")
            for k, x in enumerate(vec):
                arr[i, j, k] = rational_from_json(x, f"algebra.table[{i}][{j}][{k}]")
    u = [rational_from_json(x, f"algebra.unit[{i}]") for i, x in enumerate(unit)]
    poly = obj.get("defining_poly")
    if poly is not None:
        poly = [rational_from_json(x, "algebra.defining_poly") for x in poly]
    return Algebra(arr, u, labels, name=obj.get("name"), defining_poly=poly)


# -- cochains -------------------------------------------------------------------

def cochain_to_json(phi):
    n = phi.arity
    coeffs = []
    for idx, x in np.ndenumerate(phi.coeffs):
        if x:
            coeffs.append({"args": [int(i) for i in idx[:n]], "out": int(idx[n]),
                           "value": rational_to_json(x)})
    return {"arity": n, "coeffs": coeffs}


def cochain_from_json(obj, algebra):
    n = _field(obj, "arity", int, "cochain")
    if n < 0:
        raise FormatError("cochain.arity must be >= 0")
    entries = _field(obj, "coeffs", list, "cochain")
    m = algebra.dim
    arr = zeros((m,) * (n + 1))
    for t, e in enumerate(entries):
        where = f"cochain.coeffs[{t}]"
        args = _field(e, "args", list, where)
        out = _field(e, "out", int, where)
        if len(args) != n:
            raise FormatError(f"{where}: expected {n} arguments")
        idx = tuple(args) + (out,)
        if any(isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < m for i in idx):
            raise FormatError(f"{where}: index out of range for dim {m}")
        arr[idx] = arr[idx] + rational_from_json(_field(e, "value", object, where), where)
    return Cochain(algebra, arr)


# -- polynomials and multivectors -----------------------------------------------

def polycoeff_to_json(f):
    return {"monomials": [
        {"exps": list(e), "c": rational_to_json(c)} for e, c in sorted(f.terms.items())
    ]}


def polycoeff_from_json(obj, n_vars, where="coeff"):
    terms = {}
    for t, mono in enumerate(_field(obj, "monomials", list, where)):
        w = f"{where}.monomials[{t}]"
        exps = _field(mono, "exps", list, w)
        if len(exps) != n_vars or any(
            isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in exps
        ):
            raise FormatError(f"{w}.exps: expected {n_vars} non-negative integers")
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + rational_from_json(_field(mono, "c", object, w), w)
    return PolyCoeff(n_vars, terms)


def multivector_to_json(v):
    return {
        "n_vars": v.n_vars,
        "degree": v.degree,
        "terms": [
            {"dirs": list(k), "coeff": polycoeff_to_json(f)} for k, f in sorted(v.terms.items())
        ],
    }


def bivector_from_json(obj, degree=None):
    """Multivector from the bivector format; the degree is read from ``dirs``."""
    n = _field(obj, "n_vars", int, "bivector")
    if n < 1:
        raise FormatError("bivector.n_vars must be >= 1")
    terms = _field(obj, "terms", list, "bivector")
    if degree is None:
        degree = obj.get("degree", len(terms[0]["dirs"]) if terms and isinstance(terms[0], dict)
                         and isinstance(terms[0].get("dirs"), list) else 2)
    out = PolyMultivector.zero(n, degree)
    for t, term in enumerate(terms):
        where = f"bivector.terms[{t}]"
        dirs = _field(term, "dirs", list, where)
        if len(dirs) != degree or any(
            isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < n for i in dirs
        ):
            raise FormatError(f"{where}.dirs: expected {degree} directions in 0..{n - 1}")
        coeff = polycoeff_from_json(_field(term, "coeff", dict, where), n, f"{where}.coeff")
        out = out + PolyMultivector(n, degree, {tuple(dirs): coeff})
    return out


def formalpoly_to_json(F):
    return {
        "n_vars": F.n_vars,
        "order": F.order,
        "monomials": [
            {"exps": list(e), "h": k, "c": rational_to_json(c)}
            for (e, k), c in sorted(F.terms.items())
        ],
    }


def formalpoly_from_json(obj):
    n = _field(obj, "n_vars", int, "formal")
    order = _field(obj, "order", int, "formal")
    terms = {}
    for t, mono in enumerate(_field(obj, "monomials", list, "formal")):
        w = f"formal.monomials[{t}]"
        exps = _field(mono, "exps", list, w)
        h = _field(mono, "h", int, w)
        if len(exps) != n:
            raise FormatError(f"{w}.exps: expected {n} exponents")
        key = (tuple(exps), h)
        terms[key] = terms.get(key, 0) + rational_from_json(_field(mono, "c", object, w), w)
    return FormalPoly(n, order, terms)


# -- files ---------------------------------------------------------------------

def load_json(path):
    """Parse a JSON file; errors become :class:`FormatError` with position info."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def load_algebra(path):
    return algebra_from_json(load_json(path))


def load_bivector(path):
    return bivector_from_json(load_json(path))


def fixture_path(name):
    return resources.files("hhw") / "fixtures" / name


def load_fixture_algebra(name):
    with resources.as_file(fixture_path(name + ".json")) as p:
        return load_algebra(p)


def to_jsonable(x):
    """Recursively convert report values (cochains, rationals, ...) to JSON data."""
    if isinstance(x, Cochain):
        return cochain_to_json(x)
    if isinstance(x, PolyMultivector):
        return multivector_to_json(x)
    if isinstance(x, PolyCoeff):
        return polycoeff_to_json(x)
    if isinstance(x, FormalPoly):
        return formalpoly_to_json(x)
    if isinstance(x, Algebra):
        return algebra_to_json(x)
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return rational_to_json(x)
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else ",".join(map(str, k)) if isinstance(k, tuple)
                 else str(k)): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return to_jsonable(x.to_json())
    raise TypeError(f"cannot serialise {type(x).__name__}")


def dumps(obj):
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)
