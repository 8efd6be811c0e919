"""Multiplet of generalised Verma modules induced from the maximal parabolic.

Nodes are the M-dominant weights of the shifted Weyl orbit of the top
weight; edges are embeddings ``Lambda -> Lambda - m_beta * beta`` along
M-noncompact roots.  Generation is a breadth-first closure from the top
node, with roots taken in canonical order, so node ids are reproducible.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exact import LinForm, SignClass, render_linform, sign_class
from .parabolic import (
    MAXIMAL_SL3_SL2,
    ParabolicSpec,
    Side,
    Signature,
    classify_roots,
    ks_dual,
    signature,
    signature_to_json,
)
from .rootsys import RootSystem, RootVector, weyl_order
from .verma import Weight, f4_root_system, hc_param, shifted_reflect

MIDDLE_LEVEL = 10


class InvariantViolation(RuntimeError):
    """Generation hit a state the theory rules out."""


@dataclass
class MultipletNode:
    id: int
    weight: Weight
    signature: Signature
    level: int
    name: str | None = None
    side: Side | None = None


@dataclass(frozen=True)
class MultipletEdge:
    src: int
    dst: int
    root: RootVector
    degree: LinForm
    arrow_level: int | None = None


@dataclass
class MultipletGraph:
    params: tuple[int, ...] | None
    nodes: list[MultipletNode]
    edges: list[MultipletEdge]
    parabolic: ParabolicSpec = field(default=MAXIMAL_SL3_SL2)

    @property
    def is_symbolic(self) -> bool:
        return self.params is None

    @property
    def diagram_edges(self) -> list[MultipletEdge]:
        return [e for e in self.edges if e.arrow_level is not None]

    @property
    def diagram_edge_ids(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.arrow_level is not None]

    def level_histogram(self) -> list[int]:
        counts = Counter(n.level for n in self.nodes)
        top = max(counts) if counts else -1
        return [counts[k] for k in range(top + 1)]

    def node_by_name(self, name: str) -> MultipletNode:
        for n in self.nodes:
            if n.name == name:
                return n
        raise KeyError(name)


def _is_positive(f: LinForm, symbolic: bool, root: RootVector | None = None) -> bool:
    if not symbolic:
        return f.const > 0 and f.const.denominator == 1
    cls = sign_class(f)
    if cls is SignClass.MIXED:
        raise InvariantViolation(f"mixed-sign form {f} at root {root}")
    return cls is SignClass.POSITIVE


def is_m_dominant(w: Weight, p: ParabolicSpec = MAXIMAL_SL3_SL2) -> bool:
    symbolic = not w.is_concrete
    for i in sorted(p.m_simple):
        f = w.labels[i - 1]
        if symbolic:
            if sign_class(f) is not SignClass.POSITIVE:
                return False
        elif not (f.const > 0):
            return False
    return True


def node_level(w: Weight, rs: RootSystem | None = None) -> int:
    """Number of positive roots with negative Harish-Chandra parameter."""
    rs = rs or f4_root_system()
    count = 0
    for beta in rs.positive:
        m = hc_param(w, beta, rs)
        if m.is_constant:
            negative = m.const < 0
        else:
            cls = sign_class(m)
            if cls in (SignClass.MIXED, SignClass.ZERO):
                raise InvariantViolation(f"hc parameter {m} at {beta} is not sign-definite")
            negative = cls is SignClass.NEGATIVE
        count += negative
    return count


def enumeration_side(level: int) -> Side | None:
    """Side of the conventional name implied by the level (None in the middle)."""
    if level < MIDDLE_LEVEL:
        return "-"
    if level > MIDDLE_LEVEL:
        return "+"
    return None


def _check_labels(labels: Sequence[int]) -> tuple[int, ...]:
    if len(labels) != 4:
        raise ValueError("need exactly 4 labels")
    out = []
    for v in labels:
        if isinstance(v, bool) or int(v) != v or v < 1:
            raise ValueError(f"labels must be positive integers, got {list(labels)}")
        out.append(int(v))
    return tuple(out)


def generate(
    labels: Sequence[int] | None = None,
    p: ParabolicSpec = MAXIMAL_SL3_SL2,
    rs: RootSystem | None = None,
    node_cap: int | None = None,
) -> MultipletGraph:
    """Build the multiplet for symbolic labels (``None``) or concrete ones."""
    rs = rs or f4_root_system()
    params = None if labels is None else _check_labels(labels)
    symbolic = params is None
    top = Weight.top() if symbolic else Weight.concrete(params)
    cap = node_cap if node_cap is not None else 10 * weyl_order(rs.data)
    noncompact = classify_roots(rs, p).m_noncompact

    index = {top: 0}
    order = [top]
    raw_edges: list[tuple[int, int, RootVector, LinForm]] = []
    queue = deque([top])
    while queue:
        w = queue.popleft()
        src = index[w]
        for beta in noncompact:
            m = hc_param(w, beta, rs)
            if not _is_positive(m, symbolic, beta):
                continue
            target = shifted_reflect(w, beta, rs)
            if not is_m_dominant(target, p):
                continue
            if target not in index:
                if len(order) >= cap:
                    raise InvariantViolation(f"node cap {cap} exceeded")
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            raw_edges.append((src, index[target], beta, m))

    nodes = []
    for i, w in enumerate(order):
        lvl = node_level(w, rs)
        nodes.append(MultipletNode(i, w, signature(w, p), lvl, side=enumeration_side(lvl)))

    if symbolic:
        edges = [
            MultipletEdge(s, t, b, m, m.basis_index()) for s, t, b, m in raw_edges
        ]
    else:
        edges = _concrete_edges(raw_edges, order, params, p, rs)
    return MultipletGraph(params, nodes, edges, p)


@lru_cache(maxsize=4)
def symbolic_reference(p: ParabolicSpec) -> MultipletGraph:
    return generate(None, p)


def _concrete_edges(raw_edges, order, params, p, rs) -> list[MultipletEdge]:
    # Arrow levels cannot be read off a number; borrow them from the
    # symbolic graph when the evaluated weights identify its nodes.
    ref = symbolic_reference(p) if rs is f4_root_system() else generate(None, p, rs)
    by_value: dict[tuple, int] = {}
    for n in ref.nodes:
        key = n.weight.evaluate(params).values()
        by_value[key] = -1 if key in by_value else n.id
    ref_edges = {(e.src, e.dst, e.root): e for e in ref.edges}
    edges = []
    for s, t, b, m in raw_edges:
        rs_, rt = by_value.get(order[s].values(), -1), by_value.get(order[t].values(), -1)
        sym = ref_edges.get((rs_, rt, b)) if rs_ >= 0 and rt >= 0 else None
        arrow = sym.arrow_level if sym is not None else None
        edges.append(MultipletEdge(s, t, b, m, arrow))
    return edges


def orbit_quotient_oracle(
    p: ParabolicSpec = MAXIMAL_SL3_SL2, rs: RootSystem | None = None
) -> frozenset[Weight]:
    """M-dominant elements of the full shifted Weyl orbit of the top weight.

    Independent of :func:`generate`: it walks the orbit with simple
    reflections only and never looks at embeddings.
    """
    rs = rs or f4_root_system()
    top = Weight.top()
    seen = {top}
    frontier = [top]
    simple = [rs.data.simple(i) for i in range(1, rs.data.rank + 1)]
    while frontier:
        nxt = []
        for w in frontier:
            for a in simple:
                t = shifted_reflect(w, a, rs)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    expected = weyl_order(rs.data)
    if len(seen) != expected:
        raise InvariantViolation(f"orbit has {len(seen)} elements, expected {expected}")
    return frozenset(w for w in seen if is_m_dominant(w, p))


def ks_pairing(g: MultipletGraph) -> list[tuple[int, int]]:
    """Pairs of nodes exchanged by the Knapp-Stein involution on signatures."""
    by_sig = {_sig_key(n.signature): n.id for n in g.nodes}
    if len(by_sig) != len(g.nodes):
        raise InvariantViolation("signatures are not pairwise distinct")
    pairs = set()
    for n in g.nodes:
        partner = by_sig.get(_sig_key(ks_dual(n.signature)))
        if partner is None:
            raise InvariantViolation(f"node {n.id} {n.signature} has no KS partner")
        if partner == n.id:
            raise InvariantViolation(f"node {n.id} is fixed by the KS involution")
        pairs.add((min(n.id, partner), max(n.id, partner)))
    return sorted(pairs)


def _sig_key(s: Signature) -> tuple[LinForm, ...]:
    return s.entries()


@dataclass(frozen=True)
class ArrowReport:
    labeled: list[MultipletEdge]
    violations: list[MultipletEdge]

    @property
    def ok(self) -> bool:
        return not self.violations


def arrow_labels(g: MultipletGraph) -> ArrowReport:
    """Diagram edges with their labels n, flagging any that skip a level."""
    level = {n.id: n.level for n in g.nodes}
    labeled, bad = [], []
    for e in g.diagram_edges:
        labeled.append(e)
        if level[e.dst] - level[e.src] != 1:
            bad.append(e)
    return ArrowReport(labeled, bad)


def is_weakly_connected(g: MultipletGraph, edges: Sequence[MultipletEdge] | None = None) -> bool:
    edges = g.diagram_edges if edges is None else edges
    adj: dict[int, set[int]] = {n.id: set() for n in g.nodes}
    for e in edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(adj)


def is_acyclic(g: MultipletGraph) -> bool:
    indeg = Counter(e.dst for e in g.edges)
    out: dict[int, list[int]] = {n.id: [] for n in g.nodes}
    for e in g.edges:
        out[e.src].append(e.dst)
    ready = [n.id for n in g.nodes if indeg[n.id] == 0]
    done = 0
    while ready:
        v = ready.pop()
        done += 1
        for t in out[v]:
            indeg[t] -= 1
            if indeg[t] == 0:
                ready.append(t)
    return done == len(g.nodes)


# -- export ----------------------------------------------------------------


def to_json(g: MultipletGraph) -> dict:
    from .verma import weight_to_json

    return {
        "params": "symbolic" if g.params is None else list(g.params),
        "nodes": [
            {
                "id": n.id,
                "name": n.name,
                "level": n.level,
                "side": n.side,
                "labels": weight_to_json(n.weight)["labels"],
                "signature": signature_to_json(n.signature),
                "d": render_linform(n.signature.d),
            }
            for n in g.nodes
        ],
        "edges": [
            {
                "src": e.src,
                "dst": e.dst,
                "root": list(e.root),
                "degree": render_linform(e.degree),
                "arrow_level": e.arrow_level,
            }
            for e in g.edges
        ],
        "diagram_edges": g.diagram_edge_ids,
    }


def dumps_json(g: MultipletGraph) -> str:
    return json.dumps(to_json(g), indent=2, ensure_ascii=False) + "\n"


def from_json(obj: dict, p: ParabolicSpec = MAXIMAL_SL3_SL2) -> MultipletGraph:
    from .parabolic import signature_from_json
    from .verma import weight_from_json

    params = None if obj["params"] == "symbolic" else tuple(int(x) for x in obj["params"])
    nodes = [
        MultipletNode(
            id=rec["id"],
            weight=weight_from_json(rec),
            signature=signature_from_json(rec["signature"]),
            level=rec["level"],
            name=rec["name"],
            side=rec["side"],
        )
        for rec in obj["nodes"]
    ]
    edges = [
        MultipletEdge(
            rec["src"],
            rec["dst"],
            tuple(rec["root"]),
            LinForm.parse(rec["degree"]),
            rec["arrow_level"],
        )
        for rec in obj["edges"]
    ]
    g = MultipletGraph(params, nodes, edges, p)
    if g.diagram_edge_ids != list(obj["diagram_edges"]):
        raise ValueError("diagram_edges disagree with edge arrow levels")
    return g


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: MultipletGraph) -> str:
    """Layered digraph of the diagram edges, one rank per level."""
    lines = [
        "digraph multiplet {",
        "  rankdir=TB;",
        '  node [shape=box, fontsize=10];',
        "  edge [fontsize=9];",
    ]
    by_level: dict[int, list[int]] = {}
    for n in g.nodes:
        by_level.setdefault(n.level, []).append(n.id)
    for lvl in sorted(by_level):
        ids = " ".join(f"n{i};" for i in sorted(by_level[lvl]))
        lines.append(f"  {{ rank=same; {ids} }}  // level {lvl}")
    for n in g.nodes:
        label = n.name or str(n.signature)
        lines.append(f'  n{n.id} [label="{_dot_escape(label)}"];')
    for e in sorted(g.diagram_edges, key=lambda e: (e.src, e.dst, e.root)):
        lines.append(f'  n{e.src} -> n{e.dst} [label="{e.arrow_level}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
