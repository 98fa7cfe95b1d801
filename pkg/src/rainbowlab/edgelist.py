"""Plain-text edge-list format.

::

    #aux kind=B seed=7 pi=2,1,3      (optional provenance line)
    #graph 5                         u v        per line, u < v
    #digraph 5                       u > v      per line
    #bipartite 6 3                   u v        per line, u in V1
    #V1 1 4 5                        (optional; default V1 = 1..m)
    #hyper 3 3                       a1 a2 a3   per line (part size, k)

Writing then reading any object gives back an equal object.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from .graphs import BipartiteGraph, Digraph, Graph, KPartiteHypergraph

__all__ = ["dumps", "loads", "dump", "load", "EdgeListError", "Provenance"]


class EdgeListError(ValueError):
    pass


@dataclass
class Provenance:
    """Key/value pairs of a ``#aux`` header line."""

    fields: dict[str, str] = field(default_factory=dict)

    def render(self) -> str:
        return "#aux " + " ".join(f"{k}={v}" for k, v in self.fields.items())


def dumps(obj, provenance: Provenance | dict | None = None) -> str:
    buf = io.StringIO()
    dump(obj, buf, provenance)
    return buf.getvalue()


def dump(obj, fh: TextIO, provenance: Provenance | dict | None = None) -> None:
    if isinstance(provenance, dict):
        provenance = Provenance({k: str(v) for k, v in provenance.items()})
    if provenance is not None:
        fh.write(provenance.render() + "\n")
    if isinstance(obj, Graph):
        fh.write(f"#graph {obj.n}\n")
        for u, v in obj.edges():
            fh.write(f"{u} {v}\n")
    elif isinstance(obj, Digraph):
        fh.write(f"#digraph {obj.n}\n")
        for u, v in obj.arcs():
            fh.write(f"{u} > {v}\n")
    elif isinstance(obj, BipartiteGraph):
        left, right = obj.parts
        n = len(left) + len(right)
        fh.write(f"#bipartite {n} {len(left)}\n")
        if left != tuple(range(1, len(left) + 1)) or right != tuple(range(len(left) + 1, n + 1)):
            fh.write("#V1 " + " ".join(map(str, left)) + "\n")
            fh.write("#V2 " + " ".join(map(str, right)) + "\n")
        for u, v in obj.edges():
            fh.write(f"{u} {v}\n")
    elif isinstance(obj, KPartiteHypergraph):
        fh.write(f"#hyper {obj.n} {obj.k}\n")
        for e in sorted(obj.edges):
            fh.write(" ".join(map(str, e)) + "\n")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str):
    return load(io.StringIO(text))


def load(fh: TextIO | str | Path):
    """Parse one object; returns ``obj`` or ``(obj, Provenance)`` if a ``#aux`` line is present."""
    if isinstance(fh, (str, Path)):
        with open(fh) as f:
            return load(f)
    lines = [ln.strip() for ln in fh if ln.strip()]
    prov = None
    if lines and lines[0].startswith("#aux"):
        prov = Provenance(dict(tok.split("=", 1) for tok in lines[0].split()[1:]))
        lines = lines[1:]
    if not lines or not lines[0].startswith("#"):
        raise EdgeListError("missing '#kind n' header")
    head = lines[0][1:].split()
    kind, args = head[0], [int(x) for x in head[1:]]
    body = lines[1:]
    try:
        if kind == "graph":
            obj = Graph.from_edges(args[0], (tuple(map(int, ln.split())) for ln in body))
        elif kind == "digraph":
            arcs = []
            for ln in body:
                u, arrow, v = ln.split()
                if arrow != ">":
                    raise EdgeListError(f"bad arc line {ln!r}")
                arcs.append((int(u), int(v)))
            obj = Digraph.from_arcs(args[0], arcs)
        elif kind == "bipartite":
            n, m = args
            left, right = list(range(1, m + 1)), list(range(m + 1, n + 1))
            edges = []
            for ln in body:
                if ln.startswith("#V1"):
                    left = [int(x) for x in ln.split()[1:]]
                elif ln.startswith("#V2"):
                    right = [int(x) for x in ln.split()[1:]]
                else:
                    edges.append(tuple(map(int, ln.split())))
            obj = BipartiteGraph.from_edges(left, right, edges)
        elif kind == "hyper":
            n, k = args
            obj = KPartiteHypergraph.uniform(k, n, (tuple(map(int, ln.split())) for ln in body))
        else:
            raise EdgeListError(f"unknown kind {kind!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, EdgeListError):
            raise
        raise EdgeListError(str(exc)) from exc
    return (obj, prov) if prov is not None else obj
