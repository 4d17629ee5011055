"""Arrow polynomial: oriented state sum with cusp bookkeeping.

Surviving zig-zags of 2i alternating cusps turn a circle component into the
variable K_i and a long component into L_i.  Cusp words reduce by deleting
adjacent same-side pairs (the free-product normal form, cyclically for
circles), which is confluent, so the reduced length is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import KnotoidCode
from .errors import LimitExceeded
from .laurent import ArrowMonomial, ArrowPoly, LaurentA, loop_value, writhe_normalize
from .smoothing import CIRCLE, CompiledCode, DEFAULT_STATE_LIMIT, SEGMENT
from .bracket import writhe


@dataclass(frozen=True)
class ReducedComponent:
    kind: str  # segment | circle
    reduced_cusp_count: int


def _linear_reduce(word: str) -> str:
    stack: list[str] = []
    for ch in word:
        if stack and stack[-1] == ch:
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def _cyclic_reduce(word: str) -> str:
    w = _linear_reduce(word)
    while len(w) >= 2 and w[0] == w[-1]:
        w = _linear_reduce(w[1:-1])
    return w


def reduce_cusps(word: str, kind: str) -> ReducedComponent:
    """Normal form length of a cusp side-word (cyclic for circles)."""
    reduced = _cyclic_reduce(word) if kind == CIRCLE else _linear_reduce(word)
    return ReducedComponent(kind, len(reduced))


def arrow_polynomial(
    code: KnotoidCode, state_limit: int = DEFAULT_STATE_LIMIT
) -> ArrowPoly:
    """Sum over oriented states of A^(i-j) d^(components-1) <S-hat>."""
    compiled = CompiledCode(code)
    if compiled.n > state_limit:
        raise LimitExceeded(f"{compiled.n} crossings exceed the state limit {state_limit}")
    counts: dict[tuple[int, int, ArrowMonomial], int] = {}
    for s, comps, seg_lengths, circ_lengths in compiled.scan(True):
        monomial = ArrowMonomial.build(
            (length // 2 for length in circ_lengths),
            ((length + 1) // 2 for length in seg_lengths),
        )
        key = (s, comps, monomial)
        counts[key] = counts.get(key, 0) + 1
    d = loop_value()
    max_comp = max((c for _, c, _ in counts), default=1)
    powers = [LaurentA.one()]
    for _ in range(max_comp):
        powers.append(powers[-1] * d)
    total = ArrowPoly.zero()
    for (s, comps, monomial), count in counts.items():
        total = total.add_term(monomial, powers[comps - 1].shift(s, count))
    return total


def normalized_arrow(
    code: KnotoidCode, state_limit: int = DEFAULT_STATE_LIMIT
) -> ArrowPoly:
    """(-A^3)^(-writhe) times the arrow polynomial; a move invariant."""
    return writhe_normalize(arrow_polynomial(code, state_limit), writhe(code))


def arrow_degrees(code: KnotoidCode, state_limit: int = DEFAULT_STATE_LIMIT) -> tuple[int, int]:
    """(K-degree, Lambda-degree) of the arrow polynomial."""
    poly = arrow_polynomial(code, state_limit)
    return poly.k_degree(), poly.lambda_degree()
