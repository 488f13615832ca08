"""PACE-2017 ``.gr`` / ``.td`` formats and a rotation-system sidecar.

Files are 1-indexed; everything in memory is 0-indexed.
"""

from __future__ import annotations

from os import PathLike
from pathlib import Path
from typing import Iterator

from .errors import ParseError
from .graph import Graph
from .planar import PlaneGraph
from .treewidth import TreeDecomposition


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        yield lineno, tok


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


# -- graphs -----------------------------------------------------------------


def parse_gr(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, tok in _lines(text):
        if tok[0] == "p":
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(tok) != 4 or tok[1] != "tw":
                raise ParseError(f"line {lineno}: header must be 'p tw <n> <m>'")
            header = (_int(tok[2], lineno), _int(tok[3], lineno))
            if header[0] < 0 or header[1] < 0:
                raise ParseError(f"line {lineno}: negative size in header")
            continue
        if header is None:
            raise ParseError(f"line {lineno}: edge before header")
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: edge lines have two vertices")
        u, v = _int(tok[0], lineno), _int(tok[1], lineno)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u - 1, v - 1))
    if header is None:
        raise ParseError("missing 'p tw' header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_gr(g: Graph) -> str:
    _require_dense(g)
    out = [f"p tw {g.n} {g.m}"]
    out += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def read_gr(path: str | PathLike) -> Graph:
    return parse_gr(Path(path).read_text())


def write_gr(path: str | PathLike, g: Graph) -> None:
    Path(path).write_text(format_gr(g))


def _require_dense(g: Graph) -> None:
    if g.vertices != tuple(range(g.n)):
        raise ValueError("graph vertices must be 0..n-1 to be written")


# -- tree decompositions ----------------------------------------------------


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Returns the decomposition and the vertex count from the header."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    for lineno, tok in _lines(text):
        if tok[0] == "s":
            if header is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(tok) != 5 or tok[1] != "td":
                raise ParseError(f"line {lineno}: header must be 's td <bags> <width+1> <n>'")
            header = tuple(_int(t, lineno) for t in tok[2:])
            if min(header) < 0:
                raise ParseError(f"line {lineno}: negative size in header")
            continue
        if header is None:
            raise ParseError(f"line {lineno}: content before header")
        nbags, _, n = header
        if tok[0] == "b":
            if len(tok) < 2:
                raise ParseError(f"line {lineno}: bag line without index")
            i = _int(tok[1], lineno)
            if not 1 <= i <= nbags:
                raise ParseError(f"line {lineno}: bag index {i} out of range 1..{nbags}")
            if i - 1 in bags:
                raise ParseError(f"line {lineno}: bag {i} given twice")
            vs = [_int(t, lineno) for t in tok[2:]]
            if any(not 1 <= v <= n for v in vs):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            bags[i - 1] = frozenset(v - 1 for v in vs)
            continue
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: tree edge lines have two bag indices")
        i, j = _int(tok[0], lineno), _int(tok[1], lineno)
        if not (1 <= i <= nbags and 1 <= j <= nbags):
            raise ParseError(f"line {lineno}: bag index out of range 1..{nbags}")
        edges.append((i - 1, j - 1))
    if header is None:
        raise ParseError("missing 's td' header")
    nbags, size, n = header
    if len(bags) != nbags:
        raise ParseError(f"header announces {nbags} bags, found {len(bags)}")
    td = TreeDecomposition(tuple(bags[i] for i in range(nbags)), tuple(edges))
    if nbags and max(len(b) for b in td.bags) != size:
        raise ParseError(f"header announces bag size {size}, largest bag has {td.width + 1}")
    return td, n


def format_td(td: TreeDecomposition, n: int) -> str:
    out = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, b in enumerate(td.bags, 1):
        out.append(" ".join(["b", str(i), *(str(v + 1) for v in sorted(b))]))
    out += [f"{i + 1} {j + 1}" for i, j in td.edges]
    return "\n".join(out) + "\n"


def read_td(path: str | PathLike) -> tuple[TreeDecomposition, int]:
    return parse_td(Path(path).read_text())


def write_td(path: str | PathLike, td: TreeDecomposition, n: int) -> None:
    Path(path).write_text(format_td(td, n))


# -- rotation systems -------------------------------------------------------


def parse_rotation(text: str, g: Graph) -> PlaneGraph:
    """Lines ``v: u1 u2 ... uk`` give the clockwise neighbour order at ``v``.

    A malformed line or an order that is not a permutation of ``N(v)`` is a
    :class:`ParseError`; a well-formed system that fails the face count
    raises :class:`~planar_pmc.errors.InvalidEmbedding`.
    """
    rotation: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("c ", "#")) or line == "c":
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected 'v: u1 u2 ...'")
        v = _int(head.strip(), lineno) - 1
        if v not in g:
            raise ParseError(f"line {lineno}: unknown vertex {v + 1}")
        if v in rotation:
            raise ParseError(f"line {lineno}: rotation for {v + 1} given twice")
        order = tuple(_int(t, lineno) - 1 for t in rest.split())
        if len(set(order)) != len(order) or frozenset(order) != g.neighbors(v):
            raise ParseError(f"line {lineno}: order at {v + 1} is not a permutation of its neighbours")
        rotation[v] = order
    missing = [v + 1 for v in g.vertices if v not in rotation and g.degree(v)]
    if missing:
        raise ParseError(f"no rotation given for vertices {missing}")
    return PlaneGraph(g, rotation)


def format_rotation(pg: PlaneGraph) -> str:
    return "".join(
        f"{v + 1}: {' '.join(str(u + 1) for u in pg.rotation[v])}\n" for v in pg.graph.vertices
    )


def read_rotation(path: str | PathLike, g: Graph) -> PlaneGraph:
    return parse_rotation(Path(path).read_text(), g)
