"""Serialized forms of cycles and decompositions.

JSONL is the interchange format: one cycle per line with the fields
``sigma, generator, representative, vertices, edges`` in that order. The
text format mirrors hand-written listings::

    # generator=[1,1,-2] sigma=2
    [1,2,3]
    [2,3,4]
    ...

with a blank line after each block. :func:`read_classes` accepts either,
and also bare JSONL classes (one JSON list of edges per line).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import IO, Iterable, Iterator

from .cycles import HamCycle, build_cycle
from .generators import Generator
from .modmath import HypergraphParams, ParameterError

__all__ = [
    "FORMATS",
    "cycle_record",
    "render_cycle",
    "render_generator",
    "render",
    "read_classes",
    "parse_classes",
    "fixture_path",
    "FIXTURES",
]

FORMATS = ("jsonl", "text")


def _vec(v: Iterable[int]) -> str:
    return "[" + ",".join(map(str, v)) + "]"


def cycle_record(c: HamCycle) -> dict:
    return {
        "sigma": c.sigma,
        "generator": c.generator.as_list(),
        "representative": list(c.representative),
        "vertices": list(c.vertices),
        "edges": [list(e) for e in c.edges],
    }


def render_cycle(c: HamCycle, fmt: str) -> str:
    if fmt == "jsonl":
        return json.dumps(cycle_record(c), separators=(",", ":")) + "\n"
    lines = [f"# generator={_vec(c.generator.as_list())} sigma={c.sigma}"]
    lines.extend(_vec(e) for e in c.edges)
    return "\n".join(lines) + "\n\n"


def render_generator(g: Generator, fmt: str) -> str:
    if fmt == "jsonl":
        return f'{{"sigma":{g.sigma},"generator":{_vec(g.as_list())}}}\n'
    return _vec(g.as_list()) + "\n"


def render(g: Generator, params: HypergraphParams, fmt: str, generators_only: bool) -> str:
    """Serialize one generator's output unit. Pure, so safe in worker processes."""
    if generators_only:
        return render_generator(g, fmt)
    return render_cycle(build_cycle(g, params), fmt)


def _as_edges(obj, lineno: int) -> list[list[int]]:
    if not isinstance(obj, list) or not all(isinstance(e, list) for e in obj):
        raise ParameterError(f"line {lineno}: expected a list of edges")
    return obj


def parse_classes(lines: Iterable[str]) -> Iterator[list[list[int]]]:
    """Yield classes (lists of edges) from JSONL or text input.

    Raises ParameterError on anything that does not parse.
    """
    block: list[list[int]] | None = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            if block is not None:
                yield block
                block = None
            continue
        if line.startswith("#"):
            if block is not None:
                yield block
            block = []
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"line {lineno}: not valid JSON ({exc.msg})") from None
        if isinstance(obj, dict):
            if block is not None:
                yield block
                block = None
            if "edges" not in obj:
                raise ParameterError(f"line {lineno}: record has no 'edges' field")
            yield _as_edges(obj["edges"], lineno)
        elif isinstance(obj, list) and obj and all(isinstance(v, int) for v in obj):
            if block is None:
                block = []
            block.append(obj)
        elif isinstance(obj, list):
            if block is not None:
                yield block
                block = None
            yield _as_edges(obj, lineno)
        else:
            raise ParameterError(f"line {lineno}: unrecognized content")
    if block is not None:
        yield block


def read_classes(stream: IO[str]) -> Iterator[list[list[int]]]:
    return parse_classes(stream)


FIXTURES = {
    "k5_2": "k5_2.jsonl",
    "k7_3": "k7_3.jsonl",
    "k8_3": "k8_3_partition.jsonl",
    "k11_5": "k11_5_generators.json",
}


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture (see ``FIXTURES``)."""
    try:
        fname = FIXTURES[name]
    except KeyError:
        raise ParameterError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    return Path(str(resources.files("hamdecomp") / "fixtures" / fname))
