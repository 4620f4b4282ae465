"""Derivation trees recording how a count was assembled.

Every node satisfies the exact invariant
``count == sum(weight * child.count)`` unless it is a leaf.  Problem
nodes carry the rule that resolved them (``seed``, ``base-n1``,
``zero-dim``, ``divisor-axiom``, ``z-evaluation``) or, when the problem
was expanded by degeneration, the rule of its first term.  Expanded
problems get one child per contributing term (rules ``type-I``,
``type-IIplain``, ``type-IIa``, ``type-IIb``, ``type-IIc``); a term node
repeats the parent problem and its children are the factor problems of
the term, weighted so the invariant holds factor by factor.  Divisor
evaluations (``z-evaluation``) are leaves: their value is intersection
arithmetic, not a weighted sum of problem counts.  Zero-count children
are pruned.  Shared subproblems share one node, so the structure is a
DAG; renderers expand it as a tree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

RULES = (
    "seed",
    "base-n1",
    "zero-dim",
    "divisor-axiom",
    "type-I",
    "type-IIplain",
    "type-IIa",
    "type-IIb",
    "type-IIc",
    "z-evaluation",
)


@dataclass
class TraceNode:
    problem: object
    dim: int
    count: int
    rule: str
    children: list[tuple[Fraction, "TraceNode"]] = field(default_factory=list)


class Tracer:
    """Node registry keyed by canonical problem text."""

    def __init__(self):
        self.nodes: dict[str, TraceNode] = {}


def iter_nodes(root: TraceNode):
    """Yield each distinct node once."""
    seen = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(child for _, child in node.children)


def check_invariant(root: TraceNode) -> None:
    for node in iter_nodes(root):
        if node.children:
            total = sum((w * child.count for w, child in node.children), Fraction(0))
            if total != node.count:
                raise AssertionError(
                    f"trace node for {node.problem} has count {node.count} "
                    f"but children sum to {total}"
                )


def _node_obj(node: TraceNode) -> dict:
    return {
        "problem": str(node.problem),
        "dim": node.dim,
        "count": node.count,
        "rule": node.rule,
        "children": [
            {"weight": str(w), "node": _node_obj(child)} for w, child in node.children
        ],
    }


def render_json(root: TraceNode) -> str:
    return json.dumps(_node_obj(root), indent=2)


def render_text(root: TraceNode) -> str:
    lines = []

    def rec(node, weight, depth):
        pad = "  " * depth
        wtxt = "" if weight is None else f"{weight} x "
        lines.append(f"{pad}{wtxt}{node.count}  {node.problem}  [{node.rule}]")
        for w, child in node.children:
            rec(child, w, depth + 1)

    rec(root, None, 0)
    return "\n".join(lines)


def render_dot(root: TraceNode) -> str:
    ids: dict[int, str] = {}
    lines = ["digraph trace {", "  node [shape=box, fontname=monospace];"]
    order = list(iter_nodes(root))
    for idx, node in enumerate(order):
        ids[id(node)] = f"n{idx}"
    for node in order:
        label = f"{node.problem}\\ncount={node.count} rule={node.rule}"
        label = label.replace('"', '\\"')
        lines.append(f'  {ids[id(node)]} [label="{label}"];')
    for node in order:
        for w, child in node.children:
            lines.append(f'  {ids[id(node)]} -> {ids[id(child)]} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines)
