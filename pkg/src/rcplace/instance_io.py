"""Instance file reading and writing.

One JSON document per file, all numbers decimal integers in external chip
units.  A module entry with an "x"/"y" pair is already on the chip; an entry
without a position is a request to be placed, in arrival_index order.  The
"buswidths" map weights communication demands, keyed by an earlier module's
id or the literal "border"; "border_edge" names the chip edge the border
demand sits on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import ChipConfig

BORDER_EDGES = ("left", "right", "bottom", "top")

_MODULE_FIELDS = {"id", "arrival_index", "x", "y", "width", "height",
                  "lifetime", "border_edge", "buswidths"}


class ParseError(ValueError):
    """Malformed instance document; the message names line or field."""


@dataclass(frozen=True)
class ModuleSpec:
    """One timed module entry, placed (x/y set) or still a request."""

    id: str
    arrival_index: int
    width: int
    height: int
    lifetime: int
    x: int | None = None
    y: int | None = None
    border_edge: str | None = None
    buswidths: dict = field(default_factory=dict)

    @property
    def has_position(self):
        return self.x is not None


@dataclass(frozen=True)
class InstanceDoc:
    """A chip plus its module entries, sorted by arrival index."""

    chip: ChipConfig
    modules: tuple
    distribution: str | None = None
    seed: int | None = None

    @property
    def placed(self):
        return [m for m in self.modules if m.has_position]

    @property
    def requests(self):
        return [m for m in self.modules if not m.has_position]


def _require(condition, where, message):
    if not condition:
        raise ParseError(f"{where}: {message}")


def _get_int(obj, key, where, minimum=None, optional=False):
    if key not in obj:
        if optional:
            return None
        raise ParseError(f"{where}.{key}: missing required field")
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}.{key}: expected a decimal integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ParseError(f"{where}.{key}: must be >= {minimum}, got {value}")
    return value


def _parse_module(obj, index, ids):
    where = f"modules[{index}]"
    _require(isinstance(obj, dict), where, "expected an object")
    unknown = set(obj) - _MODULE_FIELDS
    _require(not unknown, where, f"unknown fields {sorted(unknown)}")
    mod_id = obj.get("id")
    _require(isinstance(mod_id, str) and mod_id, f"{where}.id",
             "expected a non-empty string")
    _require(mod_id != "border", f"{where}.id", '"border" is reserved')
    _require(mod_id not in ids, f"{where}.id", f"duplicate id {mod_id!r}")
    arrival = _get_int(obj, "arrival_index", where, minimum=0)
    width = _get_int(obj, "width", where, minimum=1)
    height = _get_int(obj, "height", where, minimum=1)
    lifetime = _get_int(obj, "lifetime", where, minimum=1)
    x = _get_int(obj, "x", where, minimum=0, optional=True)
    y = _get_int(obj, "y", where, minimum=0, optional=True)
    _require((x is None) == (y is None), where,
             "x and y must be given together or not at all")
    edge = obj.get("border_edge")
    if edge is not None:
        _require(edge in BORDER_EDGES, f"{where}.border_edge",
                 f"expected one of {list(BORDER_EDGES)}, got {edge!r}")
    buswidths = {}
    raw_bus = obj.get("buswidths", {})
    _require(isinstance(raw_bus, dict), f"{where}.buswidths", "expected an object")
    for key in sorted(raw_bus):
        _require(isinstance(key, str), f"{where}.buswidths", "keys must be strings")
        buswidths[key] = _get_int(raw_bus, key, f"{where}.buswidths", minimum=0)
    if "border" in buswidths:
        _require(edge is not None, where,
                 'a "border" buswidth requires border_edge')
    return ModuleSpec(id=mod_id, arrival_index=arrival, width=width,
                      height=height, lifetime=lifetime, x=x, y=y,
                      border_edge=edge, buswidths=buswidths)


def parse_instance(data):
    """Parse document bytes (or text) into an InstanceDoc."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    _require(isinstance(doc, dict), "document", "expected a top-level object")
    unknown = set(doc) - {"chip", "modules", "distribution", "seed"}
    _require(not unknown, "document", f"unknown fields {sorted(unknown)}")
    chip_obj = doc.get("chip")
    _require(isinstance(chip_obj, dict), "chip", "missing or not an object")
    unknown = set(chip_obj) - {"width", "height"}
    _require(not unknown, "chip", f"unknown fields {sorted(unknown)}")
    chip = ChipConfig(_get_int(chip_obj, "width", "chip", minimum=1),
                      _get_int(chip_obj, "height", "chip", minimum=1))
    raw_modules = doc.get("modules", [])
    _require(isinstance(raw_modules, list), "modules", "expected a list")
    modules = []
    ids = set()
    for i, obj in enumerate(raw_modules):
        spec = _parse_module(obj, i, ids)
        ids.add(spec.id)
        modules.append(spec)
    arrivals = [m.arrival_index for m in modules]
    _require(len(set(arrivals)) == len(arrivals), "modules",
             "arrival_index values must be unique")
    for i, spec in enumerate(modules):
        where = f"modules[{i}]"
        _require(spec.width <= chip.width and spec.height <= chip.height,
                 where, "module exceeds the chip")
        if spec.has_position:
            _require(spec.x + spec.width <= chip.width
                     and spec.y + spec.height <= chip.height,
                     where, "module extends past the chip")
        for key in spec.buswidths:
            _require(key == "border" or key in ids, f"{where}.buswidths",
                     f"unknown demand target {key!r}")
    modules.sort(key=lambda m: m.arrival_index)
    distribution = doc.get("distribution")
    if distribution is not None:
        _require(isinstance(distribution, str), "distribution",
                 "expected a string")
    seed = _get_int(doc, "seed", "document", minimum=0, optional=True)
    return InstanceDoc(chip=chip, modules=tuple(modules),
                       distribution=distribution, seed=seed)


def write_instance(doc):
    """Serialize an InstanceDoc to bytes; parse(write(doc)) == doc."""
    out = {"chip": {"width": doc.chip.width, "height": doc.chip.height}}
    if doc.distribution is not None:
        out["distribution"] = doc.distribution
    if doc.seed is not None:
        out["seed"] = doc.seed
    entries = []
    for m in sorted(doc.modules, key=lambda m: m.arrival_index):
        entry = {"id": m.id, "arrival_index": m.arrival_index,
                 "width": m.width, "height": m.height, "lifetime": m.lifetime}
        if m.has_position:
            entry["x"] = m.x
            entry["y"] = m.y
        if m.border_edge is not None:
            entry["border_edge"] = m.border_edge
        if m.buswidths:
            entry["buswidths"] = {k: m.buswidths[k] for k in sorted(m.buswidths)}
        entries.append(entry)
    out["modules"] = entries
    return (json.dumps(out, indent=2, sort_keys=True) + "\n").encode("utf-8")
