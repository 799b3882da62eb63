"""JSON encoding of complexes, chains, cochains, maps, and characters.

Builders return plain dicts; parsers take the dict plus whatever ambient
objects the format leaves implicit (a cochain file does not name its
complex, so the caller supplies one).  All fractions travel as "p/q"
strings, never floats, and simplices as "[v0,v1,...]" keys.
"""

from __future__ import annotations

import json
from fractions import Fraction

from diffchar.simplicial import Complex, SimplicialMap
from diffchar.cochain import Cochain
from diffchar.characters import DiffChar, LowDegreeChar
from diffchar.relative import RelChar


class FormatError(ValueError):
    """The JSON document does not match the expected shape."""


def fraction_to_str(x):
    return str(Fraction(x))


def parse_fraction(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad fraction {s!r}: {exc}") from None


def simplex_key(s):
    return json.dumps(list(s), separators=(",", ":"))


def parse_simplex(key):
    try:
        vertices = json.loads(key)
    except json.JSONDecodeError:
        raise FormatError(f"bad simplex key {key!r}") from None
    if not isinstance(vertices, list) or not all(
        isinstance(v, int) for v in vertices
    ):
        raise FormatError(f"bad simplex key {key!r}")
    return tuple(vertices)


def _require(obj, field, kind):
    if field not in obj:
        raise FormatError(f"{kind} is missing field {field!r}")
    return obj[field]


def _maximal_simplices(complex):
    out = []
    for s in complex.all_simplices():
        has_coface = False
        for w in range(complex.num_vertices):
            if w in s:
                continue
            coface = tuple(sorted(s + (w,)))
            if complex.has_simplex(coface):
                has_coface = True
                break
        if not has_coface:
            out.append(list(s))
    out.sort(key=lambda s: (len(s), s))
    return out


def complex_to_json(complex):
    return {
        "name": complex.name,
        "vertices": complex.num_vertices,
        "simplices": _maximal_simplices(complex),
    }


def complex_from_json(obj):
    vertices = _require(obj, "vertices", "complex")
    simplices = _require(obj, "simplices", "complex")
    name = obj.get("name", "")
    try:
        return Complex(vertices, [tuple(s) for s in simplices], name)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad complex: {exc}") from None


def chain_to_json(chain):
    return {
        "degree": chain.degree,
        "coeffs": {simplex_key(s): c for s, c in sorted(chain.coeffs.items())},
    }


def chain_from_json(obj, complex):
    degree = _require(obj, "degree", "chain")
    coeffs = {}
    for key, c in _require(obj, "coeffs", "chain").items():
        if not isinstance(c, int):
            raise FormatError(f"chain coefficient for {key} must be an integer")
        coeffs[parse_simplex(key)] = c
    try:
        return complex.chain(degree, coeffs)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad chain: {exc}") from None


def cochain_to_json(cochain):
    return {
        "degree": cochain.degree,
        "values": {
            simplex_key(s): fraction_to_str(v)
            for s, v in sorted(cochain.values.items())
        },
    }


def cochain_from_json(obj, complex, ring="Q"):
    degree = _require(obj, "degree", "cochain")
    values = {}
    for key, v in _require(obj, "values", "cochain").items():
        values[parse_simplex(key)] = parse_fraction(v)
    try:
        return Cochain(complex, degree, values, ring)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad cochain: {exc}") from None


def map_to_json(phi):
    return {"vertex_map": list(phi.vertex_map)}


def map_from_json(obj, source, target):
    vm = _require(obj, "vertex_map", "simplicial map")
    try:
        return SimplicialMap(source, target, vm)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad simplicial map: {exc}") from None


def character_to_json(h):
    if isinstance(h, LowDegreeChar):
        return {"degree": h.degree, "cocycle": cochain_to_json(h.cocycle)}
    return {
        "degree": h.degree,
        "curvature": cochain_to_json(h.curvature),
        "lift": cochain_to_json(h.lift),
    }


def character_from_json(obj, complex):
    degree = _require(obj, "degree", "character")
    if degree <= 0:
        cocycle = cochain_from_json(
            _require(obj, "cocycle", "character"), complex, "Z"
        )
        return LowDegreeChar(complex, degree, cocycle)
    curvature = cochain_from_json(_require(obj, "curvature", "character"), complex)
    lift = cochain_from_json(_require(obj, "lift", "character"), complex)
    return DiffChar(curvature, lift)


def rel_character_to_json(f):
    return {
        "degree": f.degree,
        "curvature": cochain_to_json(f.curvature),
        "cov": cochain_to_json(f.cov),
        "lift_x": cochain_to_json(f.lift_x),
        "lift_a": cochain_to_json(f.lift_a),
        "map": map_to_json(f.phi),
    }


def rel_character_from_json(obj, cone):
    phi = cone.phi
    X, A = phi.target, phi.source
    stored = _require(obj, "map", "relative character")
    if list(stored.get("vertex_map", ())) != list(phi.vertex_map):
        raise FormatError("stored map does not match the mapping cone")
    curvature = cochain_from_json(
        _require(obj, "curvature", "relative character"), X
    )
    cov = cochain_from_json(_require(obj, "cov", "relative character"), A)
    lift_x = cochain_from_json(_require(obj, "lift_x", "relative character"), X)
    lift_a = cochain_from_json(_require(obj, "lift_a", "relative character"), A)
    return RelChar(cone, curvature, cov, lift_x, lift_a)


def dumps(obj):
    """Canonical serialization: sorted keys, two-space indent, newline end."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
