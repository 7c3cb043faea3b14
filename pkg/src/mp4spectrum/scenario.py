"""Scenario files: schema, construction, and the validation pipeline.

A scenario is a closed world: a finite set of places, global square-class
elements defined at every place (with "1" and "-1" built in), cuspidal
data with declared local shapes and root numbers, rank-1 Weil-type
cuspidal representations, and one parameter built from these.

Validation order: schema -> reciprocity -> cuspidal sign products and
shape compatibility -> parameter invariants.  Schema problems carry a
JSON path; validation failures name the offending pair or datum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping

from .fields import (
    KINDS,
    GlobalElement,
    Place,
    ReciprocityReport,
    minus_one_element,
    trivial_element,
    validate_reciprocity,
)
from .parameters import (
    AParameter,
    CuspidalDatum,
    InvalidParameter,
    LocalRhoShape,
    MissingSignData,
    Rho4Irreducible,
    Rho4Split,
    RhoDihedralSupercuspidal,
    RhoIrreducibleSymplectic,
    RhoPrincipalSeries,
    RhoQuadraticPair,
    RhoRealDiscrete,
    RhoRealOrthogonalDiscrete,
    RhoReducibleOrthogonal,
    RhoSteinberg,
    classify,
    local_eps,
    local_eps_twist,
    shape_allowed,
)
from .residual import Mp2CuspidalWeil

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class ScenarioValidationError(ValueError):
    pass


@dataclass
class Scenario:
    places: list[Place]
    elements: list[GlobalElement]  # includes the built-ins "1" and "-1"
    cuspidal: list[CuspidalDatum]
    mp2_weil: list[Mp2CuspidalWeil]
    parameter: AParameter | None
    raw: dict = field(default_factory=dict, repr=False)

    def element(self, name: str) -> GlobalElement:
        for e in self.elements:
            if e.name == name:
                return e
        raise KeyError(name)

    def place(self, place_id: str) -> Place:
        for p in self.places:
            if p.id == place_id:
                return p
        raise KeyError(place_id)

    def reciprocity_report(self) -> ReciprocityReport:
        return validate_reciprocity(self.places, self.elements)

    def validate(self) -> None:
        report = self.reciprocity_report()
        if not report.ok:
            a, b, prod = report.violation
            raise ScenarioValidationError(
                f"reciprocity fails for pair ({a}, {b}): product = {prod:+d}"
            )
        for datum in self.cuspidal:
            self._validate_datum(datum)
        names = {e.name for e in self.elements}
        pids = {p.id for p in self.places}
        for w in self.mp2_weil:
            w.validate(pids, names)
        if self.parameter is not None:
            classify(self.parameter)

    def _validate_datum(self, datum: CuspidalDatum) -> None:
        for p in self.places:
            if p.id not in datum.local:
                raise ScenarioValidationError(f"datum {datum.name!r} has no shape at place {p.id!r}")
            shape = datum.local[p.id]
            if not shape_allowed(shape, p, datum.duality):
                raise ScenarioValidationError(
                    f"datum {datum.name!r}: shape {type(shape).__name__} not allowed "
                    f"at {p.kind} place {p.id!r} with {datum.duality} duality"
                )
        if datum.duality == "orthogonal":
            self._validate_central_char(datum)
            return
        prod = 1
        for p in self.places:
            prod *= local_eps(datum.local[p.id], p)
        if prod != datum.global_root:
            raise ScenarioValidationError(
                f"datum {datum.name!r}: local root numbers multiply to {prod:+d}, "
                f"declared global root is {datum.global_root:+d}"
            )
        for ename, sign in datum.twisted_roots.items():
            elem = self.element(ename)
            tprod = 1
            for p in self.places:
                try:
                    tprod *= local_eps_twist(datum.local[p.id], elem.local(p), p)
                except MissingSignData as exc:
                    raise ScenarioValidationError(f"datum {datum.name!r} at {p.id!r}: {exc}") from exc
            if tprod != sign:
                raise ScenarioValidationError(
                    f"datum {datum.name!r}: twisted local roots by {ename!r} multiply to "
                    f"{tprod:+d}, declared {sign:+d}"
                )

    def _validate_central_char(self, datum: CuspidalDatum) -> None:
        cc = datum.central_char
        cc_elem = None if cc in ("1", "trivial") else self.element(cc)
        for p in self.places:
            shape = datum.local[p.id]
            cls = cc_elem.local(p) if cc_elem is not None else p.trivial_class()
            if isinstance(shape, (RhoDihedralSupercuspidal, RhoRealOrthogonalDiscrete)):
                if cls.is_trivial:
                    raise ScenarioValidationError(
                        f"datum {datum.name!r} at {p.id!r}: an irreducible orthogonal shape "
                        "needs a locally nontrivial central character"
                    )
            elif isinstance(shape, RhoQuadraticPair):
                prod = p.class_from_label(shape.a) * p.class_from_label(shape.b)
                if prod != cls:
                    raise ScenarioValidationError(
                        f"datum {datum.name!r} at {p.id!r}: chi_a chi_b = {prod.label!r} "
                        f"does not match the central character class {cls.label!r}"
                    )
            elif isinstance(shape, RhoReducibleOrthogonal):
                if not cls.is_trivial:
                    raise ScenarioValidationError(
                        f"datum {datum.name!r} at {p.id!r}: chi + chi^-1 has trivial "
                        "determinant but the central character is locally nontrivial"
                    )


# ---------------------------------------------------------------------------
# JSON loading


def _require(obj: Mapping, key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "missing required field")
    return obj[key]


def _as_sign(value: Any, path: str) -> int:
    if value not in (1, -1):
        raise SchemaError(path, f"expected +1 or -1, got {value!r}")
    return value


def _as_fraction(value: Any, path: str) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise SchemaError(path, f"not a rational number: {value!r}") from None


def _parse_shape(obj: Any, path: str) -> LocalRhoShape:
    if not isinstance(obj, dict):
        raise SchemaError(path, "shape must be an object")
    kind = _require(obj, "shape", path)
    try:
        if kind == "irreducible-symplectic":
            twists = {str(k): _as_sign(v, f"{path}.eps_twists.{k}") for k, v in obj.get("eps_twists", {}).items()}
            return RhoIrreducibleSymplectic(
                tag=str(_require(obj, "tag", path)),
                eps=_as_sign(_require(obj, "eps", path), f"{path}.eps"),
                eps_twists=twists,
            )
        if kind == "steinberg":
            twists = {str(k): _as_sign(v, f"{path}.eps_twists.{k}") for k, v in obj.get("eps_twists", {}).items()}
            return RhoSteinberg(
                label=str(_require(obj, "class", path)),
                eps=_as_sign(_require(obj, "eps", path), f"{path}.eps"),
                eps_twists=twists,
            )
        if kind == "principal-series":
            return RhoPrincipalSeries(
                chi=str(_require(obj, "chi", path)),
                s=_as_fraction(obj.get("s", 0), f"{path}.s"),
                chi_parity=_as_sign(obj.get("chi_parity", 1), f"{path}.chi_parity"),
            )
        if kind == "real-discrete":
            return RhoRealDiscrete(kappa=int(_require(obj, "kappa", path)))
        if kind == "dihedral-supercuspidal":
            return RhoDihedralSupercuspidal(tag=str(_require(obj, "tag", path)))
        if kind == "real-orthogonal-discrete":
            return RhoRealOrthogonalDiscrete(kappa=int(_require(obj, "kappa", path)))
        if kind == "quadratic-pair":
            return RhoQuadraticPair(a=str(_require(obj, "a", path)), b=str(_require(obj, "b", path)))
        if kind == "reducible-orthogonal":
            return RhoReducibleOrthogonal(chi=str(_require(obj, "chi", path)))
        if kind == "gl4-irreducible":
            return Rho4Irreducible(
                tag=str(_require(obj, "tag", path)),
                eps=_as_sign(_require(obj, "eps", path), f"{path}.eps"),
            )
        if kind == "gl4-split":
            parts = _require(obj, "parts", path)
            if not isinstance(parts, list) or not parts:
                raise SchemaError(f"{path}.parts", "expected a nonempty list")
            return Rho4Split(tuple(_parse_shape(s, f"{path}.parts[{i}]") for i, s in enumerate(parts)))
    except InvalidParameter as exc:
        raise SchemaError(path, str(exc)) from exc
    raise SchemaError(f"{path}.shape", f"unknown shape kind {kind!r}")


def scenario_from_dict(data: Any) -> Scenario:
    if not isinstance(data, dict):
        raise SchemaError("$", "scenario must be a JSON object")
    version = data.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SchemaError("$.version", f"unsupported schema version {version!r}")

    places_raw = _require(data, "places", "$")
    if not isinstance(places_raw, list) or not places_raw:
        raise SchemaError("$.places", "expected a nonempty list")
    places: list[Place] = []
    for i, praw in enumerate(places_raw):
        path = f"$.places[{i}]"
        if not isinstance(praw, dict):
            raise SchemaError(path, "expected an object")
        pid = str(_require(praw, "id", path))
        kind = str(_require(praw, "kind", path))
        if kind not in KINDS:
            raise SchemaError(f"{path}.kind", f"unknown kind {kind!r}; one of {sorted(KINDS)}")
        if any(p.id == pid for p in places):
            raise SchemaError(f"{path}.id", f"duplicate place id {pid!r}")
        places.append(Place(pid, kind))

    elements: list[GlobalElement] = [trivial_element(places), minus_one_element(places)]
    for i, eraw in enumerate(data.get("elements", [])):
        path = f"$.elements[{i}]"
        if not isinstance(eraw, dict):
            raise SchemaError(path, "expected an object")
        name = str(_require(eraw, "name", path))
        if any(e.name == name for e in elements):
            raise SchemaError(f"{path}.name", f"element {name!r} already defined")
        classes_raw = _require(eraw, "classes", path)
        classes = {}
        for p in places:
            if p.id not in classes_raw:
                raise SchemaError(f"{path}.classes", f"no class at place {p.id!r} (closed world)")
            label = str(classes_raw[p.id])
            try:
                classes[p.id] = p.class_from_label(label)
            except ValueError as exc:
                raise SchemaError(f"{path}.classes.{p.id}", str(exc)) from exc
        extra = set(classes_raw) - {p.id for p in places}
        if extra:
            raise SchemaError(f"{path}.classes", f"unknown places {sorted(extra)}")
        elements.append(GlobalElement(name, classes))

    cuspidal: list[CuspidalDatum] = []
    for i, draw in enumerate(data.get("cuspidal", [])):
        path = f"$.cuspidal[{i}]"
        if not isinstance(draw, dict):
            raise SchemaError(path, "expected an object")
        name = str(_require(draw, "name", path))
        local_raw = _require(draw, "local", path)
        if not isinstance(local_raw, dict):
            raise SchemaError(f"{path}.local", "expected an object keyed by place id")
        local = {}
        for pid, sraw in local_raw.items():
            if not any(p.id == pid for p in places):
                raise SchemaError(f"{path}.local.{pid}", "unknown place")
            local[pid] = _parse_shape(sraw, f"{path}.local.{pid}")
        try:
            datum = CuspidalDatum(
                name=name,
                gl_rank=int(draw.get("gl_rank", 2)),
                duality=str(_require(draw, "duality", path)),
                global_root=_as_sign(draw.get("global_root", 1), f"{path}.global_root"),
                local=local,
                twisted_roots={
                    str(k): _as_sign(v, f"{path}.twisted_roots.{k}")
                    for k, v in draw.get("twisted_roots", {}).items()
                },
                l_half_nonzero={str(k): bool(v) for k, v in draw.get("l_half_nonzero", {}).items()},
                dihedral=bool(draw.get("dihedral", False)),
                central_char=str(draw.get("central_char", "1")),
            )
        except InvalidParameter as exc:
            raise SchemaError(path, str(exc)) from exc
        if any(d.name == datum.name for d in cuspidal):
            raise SchemaError(f"{path}.name", f"datum {name!r} already defined")
        cuspidal.append(datum)

    mp2 = []
    for i, wraw in enumerate(data.get("mp2_weil", [])):
        path = f"$.mp2_weil[{i}]"
        if not isinstance(wraw, dict):
            raise SchemaError(path, "expected an object")
        mp2.append(
            Mp2CuspidalWeil(
                name=str(_require(wraw, "name", path)),
                chi=str(_require(wraw, "chi", path)),
                s_places=frozenset(str(x) for x in _require(wraw, "s_places", path)),
            )
        )

    parameter = None
    if "parameter" in data and data["parameter"] is not None:
        praw = data["parameter"]
        path = "$.parameter"
        if not isinstance(praw, dict):
            raise SchemaError(path, "expected an object")
        summands = []
        for i, item in enumerate(_require(praw, "summands", path)):
            ipath = f"{path}.summands[{i}]"
            if (
                not isinstance(item, (list, tuple))
                or len(item) != 2
                or not isinstance(item[1], int)
            ):
                raise SchemaError(ipath, "expected [name, d]")
            name, d = str(item[0]), item[1]
            datum = next((c for c in cuspidal if c.name == name), None)
            if datum is None:
                datum = next((e for e in elements if e.name == name), None)
            if datum is None:
                raise SchemaError(ipath, f"unknown summand {name!r}")
            summands.append((datum, d))
        parameter = AParameter.of(summands)

    return Scenario(
        places=places,
        elements=elements,
        cuspidal=cuspidal,
        mp2_weil=mp2,
        parameter=parameter,
        raw=dict(data),
    )


def load_scenario(path: str) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"invalid JSON: {exc}") from exc
    return scenario_from_dict(data)
