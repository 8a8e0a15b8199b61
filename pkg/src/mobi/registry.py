"""Named algebras and spaces with typed parameter schemas (used by the CLI)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import constructions as C
from . import geodesic as G
from .algebra import CanonicalAlgebra
from .exceptions import ConfigError
from .instances import LozengeAlgebra, rational_algebra, real_line_algebra

_TYPES = {"int": int, "float": float, "str": str, "vector": list}


@dataclass(frozen=True)
class Param:
    name: str
    type: str
    default: Any
    help: str = ""
    choices: Optional[tuple] = None

    def coerce(self, value):
        """Convert a parsed value to this parameter's type or raise ConfigError."""
        bad = ConfigError(f"parameter {self.name!r} expects {self.type}, got {value!r}")
        if self.type == "int":
            if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
                raise bad
            value = int(value)
        elif self.type == "float":
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise bad
            value = float(value)
        elif self.type == "str":
            if not isinstance(value, str):
                raise bad
        elif self.type == "vector":
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                value = [value]
            if not isinstance(value, list) or not value or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
            ):
                raise bad
            value = [float(v) for v in value]
        if self.choices is not None and value not in self.choices:
            raise ConfigError(f"parameter {self.name!r} must be one of {list(self.choices)}, got {value!r}")
        return value

    def to_dict(self) -> dict:
        out = {"name": self.name, "type": self.type, "default": self.default, "help": self.help}
        if self.choices is not None:
            out["choices"] = list(self.choices)
        return out


@dataclass(frozen=True)
class Entry:
    name: str
    kind: str  # "algebra" or "space"
    factory: Callable[..., Any]
    params: tuple = field(default_factory=tuple)
    description: str = ""
    negative_control: bool = False

    def resolve(self, given: Optional[dict] = None) -> dict:
        given = dict(given or {})
        known = {p.name: p for p in self.params}
        unknown = sorted(set(given) - set(known))
        if unknown:
            raise ConfigError(f"{self.name}: unknown parameter(s) {unknown}; accepted: {sorted(known)}")
        return {k: p.coerce(given[k]) if k in given else p.default for k, p in known.items()}

    def build(self, given: Optional[dict] = None):
        obj = self.factory(**self.resolve(given))
        if self.kind == "space":
            obj.name = self.name
        return obj

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "description": self.description,
            "negative_control": self.negative_control,
            "params": [p.to_dict() for p in self.params],
        }


ALGEBRA_CHOICE = Param("algebra", "str", "canonical", "scalar algebra", ("canonical", "real-line"))


def _dim(default, lo=1):
    return Param("n", "int", default, f"dimension (>= {lo})")


def _check_dim(n, lo=1):
    if n < lo:
        raise ConfigError(f"n must be at least {lo}")
    return n


ALGEBRAS = [
    Entry("canonical", "algebra", CanonicalAlgebra, description="unit interval, p(a,b,c) = (1-b)a + bc"),
    Entry("lozenge", "algebra", LozengeAlgebra, description="rotated square |t2| <= t1 <= 1-|t2|"),
    Entry("rational", "algebra", rational_algebra, description="Q with p(a,b,c) = a + bc - ba, exact"),
    Entry("real-line", "algebra", real_line_algebra, description="R with p(a,b,c) = a + bc - ba"),
]

SPACES = [
    Entry("alpha-beta-pow", "space", C.alpha_beta_pow_space,
          description="(0,inf) x [0,inf) through the curves alpha beta^y"),
    Entry("canonical-rn", "space", lambda n, algebra: C.canonical_space(_check_dim(n), algebra),
          (_dim(1), ALGEBRA_CHOICE), "R^n with (1-a)x + ay"),
    Entry("cube-pair", "space", C.cube_pair_space, (ALGEBRA_CHOICE,),
          "R^2 through the curves alpha s^3 + beta"),
    Entry("damping-critical", "space",
          lambda alpha: C.damping_space(C.DampingSpec("critical", alpha)),
          (Param("alpha", "float", 1.0, "decay rate"),), "critically damped oscillator"),
    Entry("damping-over", "space",
          lambda alpha, beta: C.damping_space(C.DampingSpec("overdamped", alpha, beta)),
          (Param("alpha", "float", 1.0, "first rate"), Param("beta", "float", 2.0, "second rate, != alpha")),
          "overdamped oscillator"),
    Entry("damping-under", "space",
          lambda alpha, beta: C.damping_space(C.DampingSpec("underdamped", alpha, beta)),
          (Param("alpha", "float", 0.5, "growth rate"), Param("beta", "float", 1.0, "angular frequency, != 0")),
          "underdamped oscillator on times [0, pi/|beta|)"),
    Entry("general-f-pair", "space", C.general_f_pair_space,
          (Param("f", "str", "exp(s)", "injective function of s"),
           Param("lo", "float", -2.0, "lower end of the time interval"),
           Param("hi", "float", 2.0, "upper end of the time interval")),
          "R x [lo,hi] through the curves alpha f(s) + beta"),
    Entry("geometric-mean", "space", C.geometric_mean_space, description="positive reals, x^(1-a) y^a"),
    Entry("harmonic", "space", C.harmonic_space, description="positive reals, xy / (ax + (1-a)y)"),
    Entry("hyperbolic-hn", "space", lambda n: G.hyperbolic_space(_check_dim(n)), (_dim(2),),
          "geodesics of H^n, hyperboloid model"),
    Entry("inv-pair", "space", C.inv_pair_space, description="R x (0,inf) through the curves alpha/s + beta"),
    Entry("lozenge-space", "space", C.lozenge_space,
          (Param("h", "int", 1, "sign in t + h s", (1, -1)),), "[0,1] over the lozenge algebra"),
    Entry("negative-cos", "space", C.negative_cos, description="x cos t + y sin t", negative_control=True),
    Entry("negative-cos-scaled", "space", C.negative_cos_scaled,
          description="x cos(t pi/2) + y sin(t pi/2)", negative_control=True),
    Entry("negative-cos2", "space", C.negative_cos2,
          description="x cos^2(t pi/2) + y sin^2(t pi/2)", negative_control=True),
    Entry("projectile", "space", lambda k, algebra: C.projectile_space(C.ProjectileSpec(tuple(k)), algebra),
          (Param("k", "vector", [1.0], "half acceleration in R^n"), ALGEBRA_CHOICE),
          "constant acceleration motion in R^(n+1)"),
    Entry("slerp-hemisphere", "space", lambda n: G.hemisphere_space(_check_dim(n)), (_dim(2),),
          "Slerp on the open hemisphere x1 > 0 of S^n"),
    Entry("slerp-s1", "space", lambda: G.slerp_space(1, G.chooser_circle()),
          description="Slerp on the circle"),
    Entry("slerp-s2", "space", lambda chooser: G.slerp_space(2, G.CHOOSERS[chooser]()),
          (Param("chooser", "str", "pole", "antipodal rule", ("pole", "equator")),),
          "Slerp on S^2 with a selectable antipodal rule"),
    Entry("slerp-s2-equator", "space", lambda: G.slerp_space(2, G.chooser_s2_equator()),
          description="Slerp on S^2, antipodes joined along the equatorial rotation"),
    Entry("slerp-s2-pole", "space", lambda: G.slerp_space(2, G.chooser_s2_pole()),
          description="Slerp on S^2, antipodes joined through the north pole"),
    Entry("sq-pair", "space", C.sq_pair_space, description="R x [0,inf) through the curves alpha s^2 + beta"),
]

_BY_KIND = {
    "algebra": {e.name: e for e in ALGEBRAS},
    "space": {e.name: e for e in SPACES},
}


def entry(kind: str, name: str) -> Entry:
    try:
        return _BY_KIND[kind][name]
    except KeyError:
        raise ConfigError(f"unknown {kind} {name!r}; see 'mobi list'") from None


def get_algebra(name: str, params: Optional[dict] = None):
    return entry("algebra", name).build(params)


def get_space(name: str, params: Optional[dict] = None):
    return entry("space", name).build(params)


def names(kind: str) -> list[str]:
    return sorted(_BY_KIND[kind])


def parse_param(text: str) -> tuple[str, Any]:
    """``key=value``; the value is read as JSON when possible, else as a string."""
    key, sep, raw = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ConfigError(f"expected key=value, got {text!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def parse_params(items) -> dict:
    out = {}
    for item in items or []:
        k, v = parse_param(item)
        if k in out:
            raise ConfigError(f"parameter {k!r} given twice")
        out[k] = v
    return out


def catalog() -> dict:
    """Everything registered, sorted by name within each kind."""
    return {
        "algebras": [_BY_KIND["algebra"][n].to_dict() for n in names("algebra")],
        "spaces": [_BY_KIND["space"][n].to_dict() for n in names("space")],
    }


CATALOG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["algebras", "spaces"],
    "additionalProperties": False,
    "properties": {
        "algebras": {"type": "array", "items": {"$ref": "#/$defs/entry"}},
        "spaces": {"type": "array", "items": {"$ref": "#/$defs/entry"}},
    },
    "$defs": {
        "entry": {
            "type": "object",
            "required": ["name", "kind", "description", "negative_control", "params"],
            "additionalProperties": False,
            "properties": {
                "name": {"type": "string"},
                "kind": {"enum": ["algebra", "space"]},
                "description": {"type": "string"},
                "negative_control": {"type": "boolean"},
                "params": {"type": "array", "items": {"$ref": "#/$defs/param"}},
            },
        },
        "param": {
            "type": "object",
            "required": ["name", "type", "default", "help"],
            "additionalProperties": False,
            "properties": {
                "name": {"type": "string"},
                "type": {"enum": sorted(_TYPES)},
                "default": {},
                "help": {"type": "string"},
                "choices": {"type": "array"},
            },
        },
    },
}
