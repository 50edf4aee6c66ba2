"""Reading matroids from text, and rendering tables and JSON.

Three input formats are understood:

* graph:   first line ``vertexCount``, then one ``u v`` edge per line; the
           i-th edge becomes element ``i``;
* bases:   first line ``n r``, then one basis per line over ``1..n``
           (``-`` or an empty line after the header stands for the empty basis);
* uniform: a single line ``uniform r n``.

Blank lines and ``#`` comments are ignored, except as noted for bases.
"""

from __future__ import annotations

import sys
from typing import Sequence

from .closure import active_partition
from .decomposition import decompose_basis
from .errors import MatroidError, ParseError, SizeBoundExceeded, ValidationError
from .filtration import Filtration, compact_set, max_enumeration_size, validate_filtration
from .fundamental import fundamental_graph
from .matroid import Matroid, graphic_matroid, matroid_from_bases, relabel, uniform_matroid

FORMATS = ("auto", "graph", "bases", "uniform")

TABLE_HEADER = ("Active filtrations", "Active partitions", "Uniactive bases of minors",
                "Ext", "Int", "Bases")


def _lines(text: str) -> list:
    """(line number, tokens) for every line, comments stripped."""
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].replace(",", " ")
        out.append((no, line.split()))
    return out


def _ints(no: int, tokens) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(no, f"expected integers, got {' '.join(tokens)!r}") from None


def detect_format(text: str) -> str:
    for no, toks in _lines(text):
        if not toks:
            continue
        if toks[0].lower() == "uniform":
            return "uniform"
        if len(toks) == 1:
            return "graph"
        if len(toks) == 2:
            return "bases"
        raise ParseError(no, "cannot tell the input format from the first line")
    raise ParseError(0, "empty input")


def _parse_graph(lines) -> Matroid:
    body = [(no, t) for no, t in lines if t]
    no, head = body[0]
    (nv,) = _ints(no, head) if len(head) == 1 else (None,)
    if nv is None or nv < 1:
        raise ParseError(no, "graph header must be a positive vertex count")
    edges = []
    for no, toks in body[1:]:
        if len(toks) != 2:
            raise ParseError(no, "an edge line needs exactly two vertices")
        u, v = _ints(no, toks)
        if not (1 <= u <= nv and 1 <= v <= nv):
            raise ParseError(no, f"vertex out of range 1..{nv}")
        edges.append((u, v))
    return graphic_matroid(nv, edges)


def _parse_bases(lines) -> Matroid:
    start = next(i for i, (_, t) in enumerate(lines) if t)
    no, head = lines[start]
    if len(head) != 2:
        raise ParseError(no, "bases header must be 'n r'")
    n, r = _ints(no, head)
    if n < 0 or not 0 <= r <= n:
        raise ParseError(no, "need 0 <= r <= n in the header")
    bases = []
    for no, toks in lines[start + 1:]:
        if toks == ["-"] or (not toks and r == 0 and not bases):
            bases.append(())
            continue
        if not toks:
            continue
        b = _ints(no, toks)
        if len(set(b)) != len(b):
            raise ParseError(no, "repeated element in a basis")
        if any(not 1 <= e <= n for e in b):
            raise ParseError(no, f"element out of range 1..{n}")
        if len(b) != r:
            raise ParseError(no, f"basis has {len(b)} elements, expected {r}")
        bases.append(b)
    if not bases and r == 0:
        bases.append(())
    try:
        return matroid_from_bases(range(1, n + 1), bases)
    except MatroidError as exc:
        raise ValidationError(str(exc)) from exc


def _parse_uniform(lines) -> Matroid:
    body = [(no, t) for no, t in lines if t]
    no, toks = body[0]
    if len(toks) != 3 or toks[0].lower() != "uniform":
        raise ParseError(no, "expected 'uniform r n'")
    if len(body) > 1:
        raise ParseError(body[1][0], "unexpected text after the uniform line")
    r, n = _ints(no, toks[1:])
    try:
        return uniform_matroid(r, n)
    except MatroidError as exc:
        raise ValidationError(str(exc)) from exc


def parse_text(text: str, fmt: str = "auto") -> Matroid:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "auto":
        fmt = detect_format(text)
    lines = _lines(text)
    if not any(t for _, t in lines):
        raise ParseError(0, "empty input")
    return {"graph": _parse_graph, "bases": _parse_bases, "uniform": _parse_uniform}[fmt](lines)


def apply_order(M: Matroid, order: Sequence[int]) -> Matroid:
    """Relabel so that ``order`` lists the elements from smallest to largest.

    The element ``order[i]`` becomes label ``i + 1``.
    """
    order = [int(e) for e in order]
    if sorted(order) != list(M.ground):
        raise ValidationError("order must be a permutation of the ground set")
    return relabel(M, {e: i for i, e in enumerate(order, 1)})


def parse_input(source: str, fmt: str = "auto", order: Sequence[int] | None = None) -> Matroid:
    """Read a matroid from a file path, or from stdin when ``source`` is ``-``."""
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    M = parse_text(text, fmt)
    return apply_order(M, order) if order else M


def parse_set(text: str) -> frozenset:
    """``1,4,6`` or ``1 4 6``; an empty string or ``-`` is the empty set."""
    toks = text.replace(",", " ").split()
    if toks in ([], ["-"]):
        return frozenset()
    try:
        return frozenset(int(t) for t in toks)
    except ValueError:
        raise ParseError(0, f"bad element list {text!r}") from None


def parse_order(text: str) -> list:
    """``3,1,2`` -> [3, 1, 2], keeping the given sequence."""
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(0, f"bad order {text!r}") from None


# rendering


def table_rows(M: Matroid, unicode: bool = False) -> list:
    """One row of strings per basis, ordered by filtration then by basis.

    Filtrations run from x^r down to y^(n-r): internal activity descending,
    then external activity ascending, then by the sizes of the chain from the
    empty set up to E.
    """
    n = len(M.ground)
    if n > max_enumeration_size():
        raise SizeBoundExceeded(f"|E|={n} exceeds the table bound")
    E = M.ground
    rows = []
    if not E:
        # the empty matroid has nothing to tabulate
        return rows
    for B in M.sorted_bases():
        F = fundamental_graph(M, B)
        dec = decompose_basis(M, B)
        part = active_partition(F)
        ints, exts = F.internally_active, F.externally_active
        f = dec.filtration
        key = (-f.iota, f.epsilon, [len(c) for c in f.chain()], sorted(B))
        rows.append((key, (
            dec.filtration.text(unicode=unicode),
            part.text(ground=E),
            dec.text(unicode=unicode),
            compact_set(exts, E, unicode),
            compact_set(ints, E, unicode),
            compact_set(B, E, unicode),
        )))
    rows.sort(key=lambda kr: kr[0])
    return [r for _, r in rows]


def render_table(M: Matroid, unicode: bool = False) -> str:
    lines = [" | ".join(TABLE_HEADER)]
    lines += [" | ".join(r) for r in table_rows(M, unicode)]
    return "\n".join(lines) + "\n"


def filtration_to_json(f: Filtration) -> dict:
    return {
        "ground": list(f.ground),
        "external_chain": [sorted(s) for s in f.external_chain],
        "internal_chain": [sorted(s) for s in f.internal_chain],
        "cyclic_set": sorted(f.cyclic_set),
        "iota": f.iota,
        "epsilon": f.epsilon,
        "text": f.text(),
    }


def filtration_from_json(data: dict) -> Filtration:
    return validate_filtration(data["ground"], data["external_chain"], data["internal_chain"])


def decomposition_to_json(dec) -> dict:
    def piece(N, b):
        return {"minor_ground": list(N.ground), "basis": sorted(b)}

    return {
        "basis": sorted(dec.basis),
        "filtration": filtration_to_json(dec.filtration),
        "internal_parts": [piece(N, b) for N, b in dec.internal_parts],
        "external_parts": [piece(N, b) for N, b in dec.external_parts],
        "text": dec.text(joiner=" + "),
    }


def matroid_to_json(M: Matroid) -> dict:
    return {"ground": list(M.ground), "rank": M.rank,
            "bases": [sorted(b) for b in M.sorted_bases()]}
