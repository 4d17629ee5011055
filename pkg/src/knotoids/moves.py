"""Rewriting moves on Gauss codes and seeded random equivalence walks.

The generating oriented moves are implemented pattern-to-pattern on the
code: twist insertion/deletion (R1), poke insertion/deletion in parallel
and antiparallel form (R2), and the triangle slide (R3) that swaps three
adjacent passage pairs.  An R3 site is accepted exactly when its passage
orders and crossing signs satisfy the two product relations realized by
plane triangle configurations:

    sign(tm) * sign(tb) = +1  iff  (tm before mb on the middle strand)
                                 == (tb before mb on the bottom strand)
    sign(tb) * sign(mb) = +1  iff  (tm before tb on the top strand)
                                 == (tm before mb on the middle strand)

where the top strand overpasses both others and the middle strand
overpasses the bottom one.  Endpoints are never moved across strands, so
the forbidden endpoint slides cannot arise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .codes import ComponentCode, KnotoidCode, LOOP, OPEN, OVER, Passage, UNDER, validate
from .errors import InapplicableMove

R1_INSERT = "r1_insert"
R1_DELETE = "r1_delete"
R2_INSERT = "r2_insert"
R2_DELETE = "r2_delete"
R3_SLIDE = "r3_slide"


@dataclass(frozen=True)
class MoveSpec:
    kind: str
    params: tuple

    def crossing_delta(self) -> int:
        if self.kind == R1_INSERT:
            return 1
        if self.kind == R1_DELETE:
            return -1
        if self.kind == R2_INSERT:
            return 2
        if self.kind == R2_DELETE:
            return -2
        return 0


def _fresh_labels(code: KnotoidCode, count: int) -> list[str]:
    used = {p.label for _, _, p in code.all_passages()}
    labels = []
    i = 1
    while len(labels) < count:
        cand = str(i)
        if cand not in used:
            labels.append(cand)
            used.add(cand)
        i += 1
    return labels


def _adjacent_pairs(comp: ComponentCode):
    """(pos, first, second) for every adjacent pair, cyclic on loops."""
    k = len(comp.passages)
    if k < 2:
        return
    last = k if comp.kind == LOOP else k - 1
    for pos in range(last):
        yield pos, comp.passages[pos], comp.passages[(pos + 1) % k]


def _insert(passages: tuple, pos: int, pair) -> tuple:
    return passages[:pos] + tuple(pair) + passages[pos:]


def _delete_positions(passages: tuple, positions) -> tuple:
    drop = set(positions)
    return tuple(p for i, p in enumerate(passages) if i not in drop)


def _with_component(code: KnotoidCode, ci: int, passages: tuple) -> KnotoidCode:
    comps = list(code.components)
    comps[ci] = ComponentCode(comps[ci].kind, passages)
    return KnotoidCode(tuple(comps), dict(code.meta))


def applicable_moves(code: KnotoidCode, include_inserts: bool = True) -> list[MoveSpec]:
    """Every move applicable to the code, deterministic order."""
    moves: list[MoveSpec] = []
    if include_inserts:
        for ci, comp in enumerate(code.components):
            slots = len(comp.passages) + 1 if comp.kind == OPEN else max(len(comp.passages), 1)
            for pos in range(slots):
                for over_first in (True, False):
                    for sign in (1, -1):
                        moves.append(MoveSpec(R1_INSERT, (ci, pos, over_first, sign)))
        sites = []
        for ci, comp in enumerate(code.components):
            slots = len(comp.passages) + 1 if comp.kind == OPEN else max(len(comp.passages), 1)
            sites.extend((ci, pos) for pos in range(slots))
        for a in range(len(sites)):
            for b in range(a, len(sites)):
                s1, s2 = sites[a], sites[b]
                for over_site in (1, 2):
                    for parallel in (False, True):
                        if parallel and s1 == s2:
                            continue
                        for sign in (1, -1):
                            moves.append(
                                MoveSpec(R2_INSERT, (s1, s2, over_site, parallel, sign))
                            )
    moves.extend(_deletion_moves(code))
    moves.extend(_r3_moves(code))
    return moves


def _deletion_moves(code: KnotoidCode) -> list[MoveSpec]:
    moves = []
    for ci, comp in enumerate(code.components):
        for pos, p, q in _adjacent_pairs(comp):
            if p.label == q.label:
                moves.append(MoveSpec(R1_DELETE, ((ci, pos),)))
    over_pairs = []
    under_pairs = {}
    for ci, comp in enumerate(code.components):
        for pos, p, q in _adjacent_pairs(comp):
            if p.label == q.label:
                continue
            if p.role == OVER and q.role == OVER:
                over_pairs.append((ci, pos, p, q))
            elif p.role == UNDER and q.role == UNDER:
                under_pairs.setdefault(frozenset((p.label, q.label)), []).append(
                    (ci, pos, p, q)
                )
    for ci, pos, p, q in over_pairs:
        for cj, pos2, u1, u2 in under_pairs.get(frozenset((p.label, q.label)), ()):
            if p.sign != -q.sign:
                continue
            span1 = {(ci, pos), (ci, (pos + 1) % len(code.components[ci].passages))}
            span2 = {(cj, pos2), (cj, (pos2 + 1) % len(code.components[cj].passages))}
            if span1 & span2:
                continue
            if (u1.label, u2.label) in ((p.label, q.label), (q.label, p.label)):
                moves.append(MoveSpec(R2_DELETE, ((ci, pos), (cj, pos2))))
    return moves


def _r3_moves(code: KnotoidCode) -> list[MoveSpec]:
    moves = []
    pair_list = []
    for ci, comp in enumerate(code.components):
        for pos, p, q in _adjacent_pairs(comp):
            if p.label != q.label:
                pair_list.append(((ci, pos), p, q))
    n = len(pair_list)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                sites = (pair_list[a], pair_list[b], pair_list[c])
                if _valid_r3(code, sites):
                    moves.append(
                        MoveSpec(R3_SLIDE, tuple(site for site, _, _ in sites))
                    )
    return moves


def _valid_r3(code: KnotoidCode, sites) -> bool:
    """Check the triangle pattern: roles, label linkage, orders and signs."""
    spans = set()
    for (ci, pos), _, _ in sites:
        k = len(code.components[ci].passages)
        spans.add((ci, pos))
        spans.add((ci, (pos + 1) % k))
    if len(spans) != 6:
        return False
    labels: dict[str, int] = {}
    for _, p, q in sites:
        for x in (p, q):
            labels[x.label] = labels.get(x.label, 0) + 1
    if len(labels) != 3 or set(labels.values()) != {2}:
        return False
    roles = []
    for _, p, q in sites:
        roles.append((p.role, q.role))
    top = [i for i, r in enumerate(roles) if r == (OVER, OVER)]
    bottom = [i for i, r in enumerate(roles) if r == (UNDER, UNDER)]
    mixed = [i for i, r in enumerate(roles) if r in ((OVER, UNDER), (UNDER, OVER))]
    if len(top) != 1 or len(bottom) != 1 or len(mixed) != 1:
        return False
    t, m, b = sites[top[0]], sites[mixed[0]], sites[bottom[0]]
    t_labels = {t[1].label, t[2].label}
    m_labels = {m[1].label, m[2].label}
    b_labels = {b[1].label, b[2].label}
    tm = t_labels & m_labels
    tb = t_labels & b_labels
    mb = m_labels & b_labels
    if len(tm) != 1 or len(tb) != 1 or len(mb) != 1:
        return False
    tm, tb, mb = tm.pop(), tb.pop(), mb.pop()
    # The middle strand overpasses the bottom one and underpasses the top.
    m_role = {m[1].label: m[1].role, m[2].label: m[2].role}
    if m_role[tm] != UNDER or m_role[mb] != OVER:
        return False
    signs = {}
    for _, p, q in sites:
        signs[p.label] = p.sign
        signs[q.label] = q.sign
    order_t = t[1].label == tm
    order_m = m[1].label == tm
    order_b = b[1].label == tb
    if signs[tm] * signs[tb] != (1 if order_m == order_b else -1):
        return False
    if signs[tb] * signs[mb] != (1 if order_t == order_m else -1):
        return False
    return True


def apply_move(code: KnotoidCode, move: MoveSpec) -> KnotoidCode:
    """Rewrite the code by one move; raises InapplicableMove on a bad site."""
    if move.kind == R1_INSERT:
        ci, pos, over_first, sign = move.params
        comp = code.components[ci]
        if not (0 <= pos <= len(comp.passages)):
            raise InapplicableMove("R1 position out of range")
        (label,) = _fresh_labels(code, 1)
        pair = (
            Passage(OVER if over_first else UNDER, label, sign),
            Passage(UNDER if over_first else OVER, label, sign),
        )
        out = _with_component(code, ci, _insert(comp.passages, pos, pair))
    elif move.kind == R1_DELETE:
        ((ci, pos),) = move.params
        comp = code.components[ci]
        k = len(comp.passages)
        if k < 2 or pos >= k:
            raise InapplicableMove("R1 deletion out of range")
        p, q = comp.passages[pos], comp.passages[(pos + 1) % k]
        if p.label != q.label:
            raise InapplicableMove("R1 deletion needs an adjacent equal-label pair")
        out = _with_component(
            code, ci, _delete_positions(comp.passages, (pos, (pos + 1) % k))
        )
    elif move.kind == R2_INSERT:
        (c1, i1), (c2, i2), over_site, parallel, sign = move.params
        if parallel and (c1, i1) == (c2, i2):
            raise InapplicableMove("parallel R2 needs two distinct sites")
        x, y = _fresh_labels(code, 2)
        over_pair = (Passage(OVER, x, sign), Passage(OVER, y, -sign))
        under_pair = (
            (Passage(UNDER, x, sign), Passage(UNDER, y, -sign))
            if parallel
            else (Passage(UNDER, y, -sign), Passage(UNDER, x, sign))
        )
        pair1, pair2 = (over_pair, under_pair) if over_site == 1 else (under_pair, over_pair)
        if c1 == c2:
            comp = code.components[c1]
            if not (0 <= i1 <= i2 <= len(comp.passages)):
                raise InapplicableMove("R2 positions out of range")
            passages = _insert(comp.passages, i2, pair2)
            passages = _insert(passages, i1, pair1)
            out = _with_component(code, c1, passages)
        else:
            comp1, comp2 = code.components[c1], code.components[c2]
            if not (0 <= i1 <= len(comp1.passages) and 0 <= i2 <= len(comp2.passages)):
                raise InapplicableMove("R2 positions out of range")
            out = _with_component(code, c1, _insert(comp1.passages, i1, pair1))
            out = _with_component(out, c2, _insert(out.components[c2].passages, i2, pair2))
    elif move.kind == R2_DELETE:
        (c1, i1), (c2, i2) = move.params
        comp1, comp2 = code.components[c1], code.components[c2]
        k1, k2 = len(comp1.passages), len(comp2.passages)
        if k1 < 2 or k2 < 2 or i1 >= k1 or i2 >= k2:
            raise InapplicableMove("R2 deletion out of range")
        o1, o2 = comp1.passages[i1], comp1.passages[(i1 + 1) % k1]
        u1, u2 = comp2.passages[i2], comp2.passages[(i2 + 1) % k2]
        if not (
            o1.role == o2.role == OVER
            and u1.role == u2.role == UNDER
            and {o1.label, o2.label} == {u1.label, u2.label}
            and o1.label != o2.label
            and o1.sign == -o2.sign
            and (u1.label, u2.label) in ((o1.label, o2.label), (o2.label, o1.label))
        ):
            raise InapplicableMove("R2 deletion pattern mismatch")
        if c1 == c2:
            positions = {i1, (i1 + 1) % k1, i2, (i2 + 1) % k2}
            if len(positions) != 4:
                raise InapplicableMove("R2 deletion sites overlap")
            out = _with_component(code, c1, _delete_positions(comp1.passages, positions))
        else:
            out = _with_component(
                code, c1, _delete_positions(comp1.passages, (i1, (i1 + 1) % k1))
            )
            out = _with_component(
                out, c2, _delete_positions(out.components[c2].passages, (i2, (i2 + 1) % k2))
            )
    elif move.kind == R3_SLIDE:
        sites = move.params
        detailed = []
        for ci, pos in sites:
            comp = code.components[ci]
            k = len(comp.passages)
            if k < 2 or pos >= k:
                raise InapplicableMove("R3 site out of range")
            detailed.append(((ci, pos), comp.passages[pos], comp.passages[(pos + 1) % k]))
        if not _valid_r3(code, detailed):
            raise InapplicableMove("R3 triangle pattern mismatch")
        out = code
        for ci, pos in sites:
            comp = out.components[ci]
            k = len(comp.passages)
            passages = list(comp.passages)
            passages[pos], passages[(pos + 1) % k] = passages[(pos + 1) % k], passages[pos]
            out = _with_component(out, ci, tuple(passages))
    else:
        raise InapplicableMove(f"unknown move kind {move.kind!r}")
    validate(out)
    return out


def inverse_of(code: KnotoidCode, move: MoveSpec) -> MoveSpec:
    """The move that undoes ``move`` on ``apply_move(code, move)``."""
    if move.kind == R1_INSERT:
        ci, pos, _, _ = move.params
        return MoveSpec(R1_DELETE, ((ci, pos),))
    if move.kind == R1_DELETE:
        ((ci, pos),) = move.params
        comp = code.components[ci]
        p = comp.passages[pos]
        return MoveSpec(R1_INSERT, (ci, pos, p.role == OVER, p.sign))
    if move.kind == R2_INSERT:
        (c1, i1), (c2, i2), over_site, _parallel, _sign = move.params
        j2 = i2 + 2 if c1 == c2 else i2
        site_over, site_under = ((c1, i1), (c2, j2)) if over_site == 1 else ((c2, j2), (c1, i1))
        return MoveSpec(R2_DELETE, (site_over, site_under))
    if move.kind == R2_DELETE:
        (c1, i1), (c2, i2) = move.params
        comp1, comp2 = code.components[c1], code.components[c2]
        k1 = len(comp1.passages)
        o1, o2 = comp1.passages[i1], comp1.passages[(i1 + 1) % k1]
        u1 = comp2.passages[i2]
        parallel = u1.label == o1.label
        sign = o1.sign
        if c1 != c2:
            return MoveSpec(R2_INSERT, ((c1, i1), (c2, i2), 1, parallel, sign))
        drop = sorted(x % k1 for x in (i1, i1 + 1, i2, i2 + 1))
        new_i1 = i1 - sum(1 for x in drop if x < i1)
        new_i2 = i2 - sum(1 for x in drop if x < i2)
        if new_i1 <= new_i2:
            return MoveSpec(R2_INSERT, ((c1, new_i1), (c1, new_i2), 1, parallel, sign))
        return MoveSpec(R2_INSERT, ((c1, new_i2), (c1, new_i1), 2, parallel, sign))
    if move.kind == R3_SLIDE:
        return move
    raise InapplicableMove(f"unknown move kind {move.kind!r}")


def random_walk(
    code: KnotoidCode,
    steps: int,
    seed: int,
    max_crossings: int,
) -> list[KnotoidCode]:
    """A seeded trajectory of valid moves keeping the crossing count bounded."""
    rng = random.Random(seed)
    trajectory = [code]
    current = code
    for _ in range(steps):
        n = current.crossing_count()
        moves = [
            m
            for m in applicable_moves(current)
            if n + m.crossing_delta() <= max_crossings
        ]
        if not moves:
            trajectory.append(current)
            continue
        move = moves[rng.randrange(len(moves))]
        current = apply_move(current, move)
        trajectory.append(current)
    return trajectory
