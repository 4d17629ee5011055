"""Virtual closure, ribbon-surface genus, and height lower bounds."""

from __future__ import annotations

from dataclasses import dataclass

from .codes import ComponentCode, KnotoidCode, LOOP, OPEN
from .errors import ParityError, ShapeError
from .affine import affine_index
from .arrow import arrow_polynomial
from .smoothing import CompiledCode, DEFAULT_STATE_LIMIT


def virtual_closure(code: KnotoidCode) -> KnotoidCode:
    """Join head to tail of the single open component, keeping the code.

    The connecting arc meets the diagram in virtual crossings only, so the
    passage sequence is unchanged; the open component simply becomes a loop.
    """
    opens = [c for c in code.components if c.kind == OPEN]
    if len(opens) != 1:
        raise ShapeError("virtual closure needs exactly one open component")
    comps = tuple(
        ComponentCode(LOOP, c.passages) if c.kind == OPEN else c
        for c in code.components
    )
    return KnotoidCode(comps, dict(code.meta))


def carter_genus(code: KnotoidCode) -> int:
    """Genus of the closed ribbon surface of the diagram.

    Builds the ribbon graph (4-valent vertices at crossings with the
    sign-determined rotation, 1-valent vertices at the endpoints), counts
    boundary cycles delta by the rotation-system face walk, and returns
    1 + ((n - 1) - delta) / 2.
    """
    if not code.is_standard_knotoid():
        raise ShapeError("ribbon genus needs one open component and no loops")
    compiled = CompiledCode(code)
    n = compiled.n
    P = compiled.P
    tail, head = -1, -2

    alpha: dict[int, int] = {}
    for p in range(P):
        i, o = 2 * p, 2 * p + 1
        alpha[i] = compiled.pred[i]
        alpha[o] = compiled.succ[o]
    if P:
        alpha[tail] = compiled.first_target[0] if compiled.first_target[0] >= 0 else head
        alpha[head] = compiled.head_source[0] if compiled.head_source[0] >= 0 else tail
    else:
        alpha[tail], alpha[head] = head, tail

    sigma: dict[int, int] = {tail: tail, head: head}
    for k in range(n):
        a, b = compiled.cross_over[k], compiled.cross_under[k]
        ia, oa, ib, ob = 2 * a, 2 * a + 1, 2 * b, 2 * b + 1
        if compiled.cross_sign[k] > 0:
            cycle = (ia, ib, oa, ob)
        else:
            cycle = (ia, ob, oa, ib)
        for s in range(4):
            sigma[cycle[s]] = cycle[(s + 1) % 4]

    seen: set[int] = set()
    delta = 0
    for h in alpha:
        if h in seen:
            continue
        delta += 1
        x = h
        while x not in seen:
            seen.add(x)
            x = sigma[alpha[x]]
    if ((n - 1) - delta) % 2:
        raise ParityError("boundary count has the wrong parity")
    return 1 + ((n - 1) - delta) // 2


@dataclass(frozen=True)
class HeightBound:
    affine_bound: int
    lambda_bound: int
    lower: int
    declared_upper: int | None
    formal: bool  # True when the input is not declared classical

    def to_json(self):
        return {
            "affine_bound": self.affine_bound,
            "lambda_bound": self.lambda_bound,
            "lower": self.lower,
            "declared_upper": self.declared_upper,
            "formal": self.formal,
        }


def declared_height_interval(code: KnotoidCode) -> tuple[int, int] | None:
    """Parse the ``declared_height`` metadata: either ``n`` or ``lo..hi``."""
    raw = code.meta.get("declared_height")
    if raw is None:
        return None
    text = str(raw)
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    value = int(text)
    return value, value


def height_bounds(code: KnotoidCode, state_limit: int = DEFAULT_STATE_LIMIT) -> HeightBound:
    """Lower bounds for the height from the affine index and arrow degrees."""
    opens = [c for c in code.components if c.kind == OPEN]
    if len(opens) != 1 or len(opens) != len(code.components):
        raise ShapeError("height bounds need a single open component")
    affine_bound = max(affine_index(code).max_degree(), 0)
    lambda_bound = arrow_polynomial(code, state_limit).lambda_degree()
    declared = declared_height_interval(code)
    return HeightBound(
        affine_bound=affine_bound,
        lambda_bound=lambda_bound,
        lower=max(affine_bound, lambda_bound),
        declared_upper=declared[1] if declared else None,
        formal=code.meta.get("declared_classical") != "true",
    )
