"""Instance ingestion, generation, serialization and bundled fixtures.

Two text formats are accepted, auto-detected:

* plain point list: one city per line, whitespace- or comma-separated real
  coordinates, `#` comments and blank lines ignored, dimension inferred
  from the first data line;
* TSPLIB subset: `KEY : value` headers (EDGE_WEIGHT_TYPE must be EUC_2D),
  then NODE_COORD_SECTION with contiguous 1-based `id x y` lines, ended by
  `EOF` or end of input.

Fixture files live next to this module with a manifest.json describing
name, size, dimension and provenance.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

import numpy as np

from tspkit.core import Instance
from tspkit.errors import ConfigurationError, FixtureLookupError, ParseError, UnsupportedFormatError
from tspkit.solvers.base import Seed, make_rng

# Seed that regenerates the bundled synthetic 200-city fixture.
R200_SEED = 7

_TOKEN = re.compile(r"[^\s,]+")


@dataclass(frozen=True)
class GeneratorConfig:
    """Uniform points in [0, extent]^2; n and seed pin the instance exactly."""

    n: int
    extent: float = 4000.0
    seed: Seed = 0

    def validate(self) -> None:
        if self.n < 2:
            raise ConfigurationError(f"n must be >= 2, got {self.n}")
        if not (self.extent > 0 and np.isfinite(self.extent)):
            raise ConfigurationError(f"extent must be a positive finite real, got {self.extent}")


def generate_random(config: GeneratorConfig) -> Instance:
    """n uniform points in [0, extent]^2, O(n); deterministic per seed."""
    config.validate()
    rng = make_rng(config.seed)
    coords = rng.uniform(0.0, config.extent, size=(config.n, 2))
    return Instance(f"r{config.n}", coords)


def parse_instance(text: str, name_hint: str = "instance") -> Instance:
    """Parse either supported format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    if any(line.strip().upper().startswith("NODE_COORD_SECTION") for line in lines):
        return _parse_tsplib(lines, name_hint)
    return _parse_plain(lines, name_hint)


def _parse_plain(lines: list[str], name_hint: str) -> Instance:
    points: list[list[float]] = []
    dim: int | None = None
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        vals: list[float] = []
        for m in _TOKEN.finditer(raw):
            tok = m.group()
            if tok.startswith("#"):
                break
            try:
                vals.append(float(tok))
            except ValueError:
                raise ParseError(f"non-numeric token {tok!r}", lineno, m.start() + 1) from None
        if not vals:
            continue
        if dim is None:
            dim = len(vals)
        elif len(vals) != dim:
            raise ParseError(
                f"inconsistent dimension: expected {dim} coordinates, got {len(vals)}", lineno
            )
        points.append(vals)
    if len(points) < 2:
        raise ParseError(f"an instance needs at least 2 points, found {len(points)}", len(lines) or 1)
    return Instance(name_hint, points)


def _parse_tsplib(lines: list[str], name_hint: str) -> Instance:
    headers: dict[str, tuple[str, int]] = {}
    points: list[list[float]] = []
    in_coords = False
    for lineno, raw in enumerate(lines, 1):
        stripped = raw.strip()
        if not stripped:
            continue
        if not in_coords:
            if stripped.upper().startswith("NODE_COORD_SECTION"):
                in_coords = True
                continue
            if ":" in stripped:
                key, val = stripped.split(":", 1)
                headers[key.strip().upper()] = (val.strip(), lineno)
                continue
            raise ParseError(f"expected 'KEY : value' header or NODE_COORD_SECTION, got {stripped!r}", lineno)
        if stripped.upper() == "EOF":
            break
        tokens = list(_TOKEN.finditer(raw))
        if len(tokens) != 3:
            raise ParseError(f"expected 'id x y', got {len(tokens)} tokens", lineno)
        id_tok, x_tok, y_tok = tokens
        try:
            node_id = int(id_tok.group())
        except ValueError:
            raise ParseError(f"non-numeric node id {id_tok.group()!r}", lineno, id_tok.start() + 1) from None
        if node_id != len(points) + 1:
            raise ParseError(
                f"node ids must be contiguous and 1-based: expected {len(points) + 1}, got {node_id}",
                lineno,
            )
        xy = []
        for tok in (x_tok, y_tok):
            try:
                xy.append(float(tok.group()))
            except ValueError:
                raise ParseError(f"non-numeric token {tok.group()!r}", lineno, tok.start() + 1) from None
        points.append(xy)

    ewt = headers.get("EDGE_WEIGHT_TYPE")
    if ewt is None:
        raise UnsupportedFormatError("EDGE_WEIGHT_TYPE header missing (only EUC_2D is supported)")
    if ewt[0].upper() != "EUC_2D":
        raise UnsupportedFormatError(
            f"line {ewt[1]}: EDGE_WEIGHT_TYPE {ewt[0]} is not supported (only EUC_2D)"
        )
    dimension = headers.get("DIMENSION")
    if dimension is None:
        raise ParseError("DIMENSION header missing", 1)
    try:
        declared = int(dimension[0])
    except ValueError:
        raise ParseError(f"DIMENSION must be an integer, got {dimension[0]!r}", dimension[1]) from None
    if declared != len(points):
        raise ParseError(
            f"DIMENSION says {declared} but {len(points)} coordinate lines found", dimension[1]
        )
    name = headers.get("NAME", (name_hint, 0))[0] or name_hint
    return Instance(name, points)


def write_instance(inst: Instance) -> str:
    """Plain point-list text with full round-trip (17 significant digit) precision."""
    out = [f"# {inst.name}: {inst.n} points in {inst.dimension}-D"]
    for row in inst.coords:
        out.append(" ".join(format(c, ".17g") for c in row))
    return "\n".join(out) + "\n"


_FIXTURE_FILES = {"p15": "p15.txt", "att48": "att48.txt"}
FIXTURE_NAMES = ("att48", "p15", "r200")


def fixture(name: str) -> Instance:
    """A bundled benchmark instance: p15, att48, or the regenerated r200."""
    key = name.strip().lower()
    if key == "r200":
        inst = generate_random(GeneratorConfig(n=200, extent=4000.0, seed=R200_SEED))
        return inst
    if key in _FIXTURE_FILES:
        text = resources.files("tspkit.data").joinpath(_FIXTURE_FILES[key]).read_text(encoding="utf-8")
        return parse_instance(text, key)
    raise FixtureLookupError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")


def fixture_manifest() -> dict:
    """The shipped manifest: per-fixture name, n, d, source note and seed."""
    text = resources.files("tspkit.data").joinpath("manifest.json").read_text(encoding="utf-8")
    return json.loads(text)
