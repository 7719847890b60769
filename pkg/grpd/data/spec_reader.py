#   Copyright (c) 2026 grpd Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Spec file reader and writer."""

import json
import logging
import os

from grpd.core.errors import GrpdError, ParseError, ValidationError
from grpd.core.groupoid import FiniteGroupoid, gpd_pair, gpd_unit
from grpd.core.linalg import Mat
from grpd.core.vb_groupoid import (
    Anchored2VB,
    VBGroupoid,
    vbg_canonical,
    vbg_dual,
    vbg_from_anchored,
    vbg_pullback,
    vbg_trivial_base,
    vbg_trivial_core,
    vbg_validate,
)
from grpd.utils import open_file

__all__ = [
    "FORMAT_VERSION",
    "FIXTURE_DIR",
    "fixture_names",
    "resolve_spec_path",
    "load_spec",
    "save_spec",
    "spec_from_dict",
    "spec_to_dict",
]

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def fixture_names():
    """The bundled spec files."""
    return sorted(name for name in os.listdir(FIXTURE_DIR) if name.endswith((".vbg", ".vbg.gz")))


def resolve_spec_path(path):
    """An existing path, or the bundled fixture of that name."""
    if os.path.exists(path):
        return path
    bundled = os.path.join(FIXTURE_DIR, os.path.basename(path))
    if os.path.dirname(path) == "" and os.path.exists(bundled):
        return bundled
    raise FileNotFoundError(f"No spec file or bundled fixture named {path}")


def _instance_name(path):
    name = os.path.basename(path)
    for suffix in (".gz", ".vbg", ".json"):
        if name.endswith(suffix):
            name = name[:-len(suffix)]
    return name


def load_spec(path, validate=True) -> VBGroupoid:
    """Load a VB-groupoid from a spec file.

    Raises ParseError for malformed files and ValidationError when the described data
    violates an axiom.
    """
    path = resolve_spec_path(path)
    with open_file(path) as fp:
        text = fp.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"Invalid JSON in {path}: {err.msg}", err.lineno, err.colno)
    vb = spec_from_dict(doc, default_name=_instance_name(path))
    if validate:
        _require_valid(vb)
    logger.debug("loaded %r from %s", vb, path)
    return vb


def save_spec(vb: VBGroupoid, path):
    """Write the explicit form of `vb`."""
    with open_file(path, "w") as fp:
        json.dump(spec_to_dict(vb), fp, indent=1)
        fp.write("\n")


def _require_valid(vb):
    report = vbg_validate(vb)
    if not report.ok:
        first = report.failures[0]
        where = ", ".join(f"{key}={value}" for key, value in first.witness.items() if key in
                          ("arrow", "object", "pair", "triple"))
        raise ValidationError(f"{vb.name} violates {first.check} ({where}); "
                              f"{len(report.failures)} violations in total", report)


def _mat(grid, rows, cols, where):
    if not isinstance(grid, list):
        raise ParseError(f"{where}: expected a list of rows, got {type(grid).__name__}")
    try:
        return Mat.from_grid(grid, rows, cols)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        if isinstance(err, GrpdError):
            raise ParseError(f"{where}: {err}")
        raise ParseError(f"{where}: invalid rational entry ({err})")


def _table(block, key, keys, rows, cols):
    table = block.get(key)
    if not isinstance(table, dict):
        raise ParseError(f"vb.{key} must map identifiers to matrices")
    missing = [x for x in keys if x not in table]
    if missing:
        raise ParseError(f"vb.{key} is missing {missing}")
    return {x: _mat(table[x], rows, cols, f"vb.{key}[{x}]") for x in keys}


def _read_groupoid(block) -> FiniteGroupoid:
    if not isinstance(block, dict):
        raise ParseError("A groupoid block must be an object")
    kind = block.get("kind", "explicit")
    if kind == "pair":
        return gpd_pair(int(block["n"]))
    if kind == "unit":
        return gpd_unit(block["points"])
    if kind != "explicit":
        raise ParseError(f"Unknown groupoid kind: {kind}")
    comp = {}
    for entry in block["comp"]:
        if len(entry) != 3:
            raise ParseError(f"groupoid.comp entries are [a, b, ab], got {entry}")
        a, b, c = (str(x) for x in entry)
        comp[(a, b)] = c
    return FiniteGroupoid(block["objects"], block["arrows"], block["src"], block["tgt"],
                          comp, block["unit"], block["inv"])


def _read_vb(gpd, block, name) -> VBGroupoid:
    l, k = int(block["l"]), int(block["k"])
    n = l + k
    S = _table(block, "S", gpd.arrows, k, n)
    T = _table(block, "T", gpd.arrows, k, n)
    Inv = _table(block, "Inv", gpd.arrows, n, n)
    U = _table(block, "U", gpd.objects, n, k)
    Mul = {}
    for entry in block["Mul"]:
        if len(entry) != 3:
            raise ParseError(f"vb.Mul entries are [g, h, matrix], got {entry[:2]}")
        g, h = str(entry[0]), str(entry[1])
        Mul[(g, h)] = _mat(entry[2], n, 2 * n, f"vb.Mul[{g}, {h}]")
    core_bases = None
    if "core_basis" in block:
        core_bases = _table(block, "core_basis", gpd.objects, n, l)
    return VBGroupoid(gpd, l, k, S, T, Mul, U, Inv, core_bases=core_bases, name=name)


def _read_rep(block, gpd, size):
    rep = block.get("rep", {})
    return {g: _mat(rep[g], size, size, f"rep[{g}]") for g in gpd.arrows if g in rep}


def _build(block, name) -> VBGroupoid:
    kind = block.get("kind")
    if kind == "trivial_core":
        gpd = _read_groupoid(block["base"])
        k = int(block["k"])
        return vbg_trivial_core(gpd, _read_rep(block, gpd, k), k=k, name=name)
    if kind == "trivial_base":
        gpd = _read_groupoid(block["base"])
        l = int(block["l"])
        return vbg_trivial_base(gpd, _read_rep(block, gpd, l), l=l, name=name)
    if kind == "pullback":
        return vbg_pullback(_read_groupoid(block["base"]), int(block["k"]), name=name)
    if kind == "canonical":
        l, k = int(block["l"]), int(block["k"])
        points = [_mat(grid, k, l, f"points[{i}]") for i, grid in enumerate(block["points"])]
        return vbg_canonical(l, k, points, name=name)
    if kind == "from_anchored":
        e1, e0 = int(block["e1_dim"]), int(block["e0_dim"])
        points = [str(p) for p in block["points"]]
        delta = {p: _mat(block["delta"][p], e0, e1, f"delta[{p}]") for p in points}
        return vbg_from_anchored(Anchored2VB(points, e1, e0, delta), name=name)
    if kind == "dual":
        of = block["of"]
        inner = load_spec(of) if isinstance(of, str) else spec_from_dict(of, default_name="inner")
        return vbg_dual(inner, name=name)
    raise ParseError(f"Unknown constructor kind: {kind}")


def spec_from_dict(doc, default_name="") -> VBGroupoid:
    """Build the VB-groupoid described by a parsed spec document, without validating it."""
    if not isinstance(doc, dict):
        raise ParseError("A spec file must contain a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"Unsupported format_version {version}, expected {FORMAT_VERSION}")
    name = str(doc.get("name", default_name))
    try:
        if "constructor" in doc:
            return _build(doc["constructor"], name)
        return _read_vb(_read_groupoid(doc["groupoid"]), doc["vb"], name)
    except KeyError as err:
        raise ParseError(f"Missing field {err}")
    except (TypeError, AttributeError) as err:
        raise ParseError(f"Malformed spec: {err}")
    except (ParseError, ValidationError):
        raise
    except GrpdError as err:
        raise ValidationError(f"{name}: {err}")
    except ValueError as err:
        raise ParseError(f"Malformed spec: {err}")


def _groupoid_dict(gpd):
    return {
        "objects": list(gpd.objects),
        "arrows": list(gpd.arrows),
        "src": {a: gpd.src[a] for a in gpd.arrows},
        "tgt": {a: gpd.tgt[a] for a in gpd.arrows},
        "comp": [[a, b, gpd.comp[(a, b)]] for a, b in gpd.composable_pairs()],
        "unit": {x: gpd.unit[x] for x in gpd.objects},
        "inv": {a: gpd.inv[a] for a in gpd.arrows},
    }


def spec_to_dict(vb: VBGroupoid):
    """The explicit form of `vb`."""
    gpd = vb.base
    return {
        "format_version": FORMAT_VERSION,
        "name": vb.name,
        "groupoid": _groupoid_dict(gpd),
        "vb": {
            "l": vb.l,
            "k": vb.k,
            "S": {g: vb.S[g].to_grid() for g in gpd.arrows},
            "T": {g: vb.T[g].to_grid() for g in gpd.arrows},
            "Inv": {g: vb.Inv[g].to_grid() for g in gpd.arrows},
            "U": {x: vb.U[x].to_grid() for x in gpd.objects},
            "Mul": [[g, h, vb.Mul[(g, h)].to_grid()] for g, h in gpd.composable_pairs()],
            "core_basis": {x: vb.core_bases[x].to_grid() for x in gpd.objects},
        },
    }
