"""Count evaluation engine: memoized recursion with optional tracing.

The engine owns the memo store and the evaluation options; the
recursion rules live in genus0, genus1 and fibration.  All arithmetic
is exact: weights are fractions.Fraction, counts are ints, and every
division the theory promises to be exact is asserted to be so.
"""

from __future__ import annotations

from fractions import Fraction

from .cache import MemoStore
from .problems import (
    Problem,
    ZProblem,
    dim_w,
    dim_x,
    dim_z,
    validate,
    validate_z,
)
from .trace import TraceNode, Tracer


class Engine:
    """Evaluator for counting problems.

    Options:
      divisor_axiom: trade markers that lie freely on the hyperplane for
        a factor of d each instead of degenerating them.
      order: which admissible incidence slot to degenerate first,
        "max-e" (largest plane dimension) or "min-e".
      tracer: a trace.Tracer recording a derivation node per problem.
      check_all_orders: also evaluate order-dependent internal choices
        every admissible way and assert agreement.
    """

    def __init__(
        self,
        store: MemoStore | None = None,
        *,
        divisor_axiom: bool = True,
        order: str = "max-e",
        tracer: Tracer | None = None,
        check_all_orders: bool = False,
    ):
        if order not in ("max-e", "min-e"):
            raise ValueError(f"order must be 'max-e' or 'min-e', got {order!r}")
        self.store = store if store is not None else MemoStore()
        self.divisor_axiom = divisor_axiom
        self.order = order
        self.tracer = tracer
        self.check_all_orders = check_all_orders
        self._forced_first_slot: int | None = None

    def count(self, problem) -> int:
        """Validate and count; the public entry point."""
        if isinstance(problem, ZProblem):
            return self.count_z(validate_z(problem))
        p = validate(problem)
        return self.count_w(p) if p.genus == 1 else self.count_x(p)

    def count_x(self, p: Problem) -> int:
        from . import genus0

        return self._counted("X|" + p.key(), lambda: genus0.expand_x(self, p))

    def count_w(self, p: Problem) -> int:
        from . import genus1

        return self._counted("W|" + p.key(), lambda: genus1.expand_w(self, p))

    def count_z(self, z: ZProblem) -> int:
        from . import fibration

        return self._counted("Z|" + z.key(), lambda: fibration.expand_z(self, z))

    def _counted(self, key: str, expander) -> int:
        if self.tracer is not None:
            node = self.tracer.nodes.get(key)
            if node is not None:
                return node.count
            value, node = expander()
            self.tracer.nodes[key] = node
            self.store.store(key, value)
            return value
        hit = self.store.lookup(key)
        if hit is not None:
            return hit
        value, _ = expander()
        self.store.store(key, value)
        return value

    # Slot selection.

    def admissible_slots(self, p: Problem) -> list[int]:
        return [e for e, _ in p.i if e <= p.n - 2]

    def pick_slot(self, p: Problem) -> int:
        slots = self.admissible_slots(p)
        if not slots:
            raise AssertionError(f"no incidence slot to degenerate in {p}")
        if self._forced_first_slot is not None:
            forced = self._forced_first_slot
            self._forced_first_slot = None
            if forced not in slots:
                raise AssertionError(f"forced slot {forced} not admissible for {p}")
            return forced
        return max(slots) if self.order == "max-e" else min(slots)

    def force_first_slot(self, e: int) -> None:
        """Make the next slot decision use e (for order checking)."""
        self._forced_first_slot = e

    # Trace node assembly.  Every helper returns None when not tracing.

    def leaf_node(self, problem, dim: int, count: int, rule: str):
        if self.tracer is None:
            return None
        return TraceNode(problem, dim, count, rule)

    def axiom_node(self, problem, dim: int, count: int, weight: int, child: Problem):
        if self.tracer is None:
            return None
        child_node = self.tracer.nodes["X|" + child.key() if child.genus == 0 else "W|" + child.key()]
        return TraceNode(problem, dim, count, "divisor-axiom", [(Fraction(weight), child_node)])

    def _factor_key(self, factor) -> str:
        if isinstance(factor, ZProblem):
            return "Z|" + factor.key()
        return ("W|" if factor.genus == 1 else "X|") + factor.key()

    def terms_node(self, problem, dim: int, total: int, terms, default_rule: str):
        """Build the node for an expanded problem.

        terms: list of (rule, weight, value, groups) where groups is a
        list of (coeff, factors) and factors a list of (problem, count);
        the term contributes weight * value and
        value == sum(coeff * prod(counts)).
        """
        if self.tracer is None:
            return None
        children = []
        for rule, weight, value, groups in terms:
            term_total = weight * value
            if term_total == 0:
                continue
            assert term_total.denominator == 1
            merged: dict[str, list] = {}
            for coeff, factors in groups:
                r = len(factors)
                prod_all = 1
                for _, c in factors:
                    prod_all *= c
                if prod_all == 0 or coeff == 0:
                    continue
                for fproblem, c in factors:
                    marginal = weight * coeff * Fraction(prod_all, c) / r
                    fkey = self._factor_key(fproblem)
                    slot = merged.setdefault(fkey, [Fraction(0), fproblem])
                    slot[0] += marginal
            term_children = []
            for fkey, (wsum, fproblem) in merged.items():
                term_children.append((wsum, self.tracer.nodes[fkey]))
            node = TraceNode(problem, dim, int(term_total), rule, term_children)
            children.append((Fraction(1), node))
        rule = children[0][1].rule if children else default_rule
        return TraceNode(problem, dim, total, rule, children)


def finish_terms(eng: Engine, p, dim: int, terms, default_rule: str):
    """Sum the term contributions exactly and build the trace node."""
    total = Fraction(0)
    for _, weight, value, _ in terms:
        contribution = weight * value
        assert contribution.denominator == 1, f"non-integral term for {p}"
        total += contribution
    assert total.denominator == 1
    total = int(total)
    assert total >= 0, f"negative count {total} for {p}"
    return total, eng.terms_node(p, dim, total, terms, default_rule)


def trace(problem, *, divisor_axiom: bool = True, order: str = "max-e", store=None) -> TraceNode:
    """Count a problem and return the root of its derivation tree."""
    tracer = Tracer()
    eng = Engine(store, divisor_axiom=divisor_axiom, order=order, tracer=tracer)
    if isinstance(problem, ZProblem):
        z = validate_z(problem)
        eng.count_z(z)
        return tracer.nodes["Z|" + z.key()]
    p = validate(problem)
    if p.genus == 1:
        eng.count_w(p)
        return tracer.nodes["W|" + p.key()]
    eng.count_x(p)
    return tracer.nodes["X|" + p.key()]
