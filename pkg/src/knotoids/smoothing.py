"""State resolution shared by the bracket, arrow and parity engines.

Every classical crossing is replaced by one of two reconnections: the
oriented smoothing joins each incoming strand to the other strand's outgoing
end, while the disoriented smoothing joins the two incoming ends (and the
two outgoing ends), reversing one strand locally.  Each disoriented site
creates a pair of cusps on the resulting curves; a cusp records on which
side of the traversal its acute wedge lies.

Ends of passage ``p`` are numbered ``in = 2p`` and ``out = 2p + 1``; stub
terminals of open component ``c`` are the negative sentinels ``-(2c+1)``
(tail) and ``-(2c+2)`` (head).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import KnotoidCode, OPEN, OVER, label_order, occurrences
from .errors import IncompleteChoice, LimitExceeded

ORIENTED = "oriented"
DISORIENTED = "disoriented"

DEFAULT_STATE_LIMIT = 24

SEGMENT = "segment"
CIRCLE = "circle"


class CompiledCode:
    """Array form of a code: crossings, arc succession and glue patches."""

    def __init__(self, code: KnotoidCode):
        self.labels = label_order(code)
        self.index_of = {lab: k for k, lab in enumerate(self.labels)}
        self.n = len(self.labels)

        flat = []  # (crossing index, is_over, sign)
        global_index: dict[tuple[int, int], int] = {}
        for ci, pi, passage in code.all_passages():
            global_index[(ci, pi)] = len(flat)
            flat.append((self.index_of[passage.label], passage.role == OVER, passage.sign))
        self.P = len(flat)
        self.pass_crossing = [f[0] for f in flat]
        self.pass_is_over = [f[1] for f in flat]

        occ = occurrences(code)
        self.cross_sign = [0] * self.n
        self.cross_over = [0] * self.n
        self.cross_under = [0] * self.n
        for lab, places in occ.items():
            k = self.index_of[lab]
            for (ci, pi) in places:
                p = global_index[(ci, pi)]
                if self.pass_is_over[p]:
                    self.cross_over[k] = p
                else:
                    self.cross_under[k] = p
                self.cross_sign[k] = flat[p][2]

        # Arc succession.  succ is read at odd (out) ends, pred at even (in)
        # ends; negative values are stubs.
        self.succ = [0] * (2 * self.P)
        self.pred = [0] * (2 * self.P)
        self.free_circles = 0
        self.open_comps: list[int] = []
        self.first_target: dict[int, int] = {}
        self.head_source: dict[int, int] = {}
        for ci, comp in enumerate(code.components):
            idxs = [global_index[(ci, pi)] for pi in range(len(comp.passages))]
            if comp.kind == OPEN:
                self.open_comps.append(ci)
                tail, head = -(2 * ci + 1), -(2 * ci + 2)
                if not idxs:
                    self.first_target[ci] = head
                    self.head_source[ci] = tail
                    continue
                self.first_target[ci] = 2 * idxs[0]
                self.head_source[ci] = 2 * idxs[-1] + 1
                self.pred[2 * idxs[0]] = tail
                self.succ[2 * idxs[-1] + 1] = head
                for a, b in zip(idxs, idxs[1:]):
                    self.succ[2 * a + 1] = 2 * b
                    self.pred[2 * b] = 2 * a + 1
            else:
                if not idxs:
                    self.free_circles += 1
                    continue
                for a, b in zip(idxs, idxs[1:] + idxs[:1]):
                    self.succ[2 * a + 1] = 2 * b
                    self.pred[2 * b] = 2 * a + 1

        # Glue patches per crossing: (end, partner) assignments.
        self.patch_oriented = []
        self.patch_disoriented = []
        for k in range(self.n):
            a, b = self.cross_over[k], self.cross_under[k]
            ia, oa, ib, ob = 2 * a, 2 * a + 1, 2 * b, 2 * b + 1
            self.patch_oriented.append(((ia, ob), (ob, ia), (ib, oa), (oa, ib)))
            self.patch_disoriented.append(((ia, ib), (ib, ia), (oa, ob), (ob, oa)))
        # Cusp side at a disoriented site, looked up by the entered passage:
        # R when the traversal enters along the over strand of a positive
        # crossing (or the under strand of a negative one), else L.
        self.side_char = [
            "R" if (self.cross_sign[self.pass_crossing[p]] > 0) == self.pass_is_over[p] else "L"
            for p in range(self.P)
        ]

    def glue_for_mask(self, mask: int) -> list[int]:
        glue = [0] * (2 * self.P)
        for k in range(self.n):
            patch = self.patch_disoriented[k] if (mask >> k) & 1 else self.patch_oriented[k]
            for end, partner in patch:
                glue[end] = partner
        return glue

    def scan(self, want_words: bool):
        """Yield (sigma, components, segment_zigzags, circle_zigzags) per state.

        States are visited in Gray-code order so each step repatches a
        single crossing.  The zigzag lists hold the reduced cusp count of
        each component that kept cusps (segments linear-reduced, circles
        cyclically reduced); both stay empty when ``want_words`` is false.
        """
        n, P = self.n, self.P
        glue = self.glue_for_mask(0)
        sigma_tab = self.sigma_table()
        sigma = sum(s[0] for s in sigma_tab)
        succ, pred = self.succ, self.pred
        side = self.side_char
        zero = bytes(2 * P)
        consumed = bytearray(2 * P)
        n_stub = 2 * (max(self.open_comps) + 1) if self.open_comps else 0
        stub_zero = bytes(n_stub)
        stub_done = bytearray(n_stub)
        free = self.free_circles
        open_comps = self.open_comps

        mask_steps = [0]
        mask = 0
        for i in range(1, 1 << n):
            k = (i & -i).bit_length() - 1
            mask ^= 1 << k
            mask_steps.append((k + 1) if (mask >> k) & 1 else -(k + 1))

        for step in mask_steps:
            if step:
                k = abs(step) - 1
                disoriented = step > 0
                patch = self.patch_disoriented[k] if disoriented else self.patch_oriented[k]
                for end, partner in patch:
                    glue[end] = partner
                a, b = sigma_tab[k]
                sigma += (b - a) if disoriented else (a - b)
            consumed[:] = zero
            stub_done[:] = stub_zero
            segments: list[int] = []
            circles: list[int] = []
            comps = free

            def run(x, stack):
                while x >= 0:
                    g = glue[x]
                    consumed[x] = 1
                    consumed[g] = 1
                    if want_words and not (x ^ g) & 1:
                        s = side[x >> 1]
                        if stack and stack[-1] == s:
                            stack.pop()
                        else:
                            stack.append(s)
                    x = succ[g] if g & 1 else pred[g]
                stub_done[-x - 1] = 1

            for ci in open_comps:
                if stub_done[2 * ci]:
                    continue
                stub_done[2 * ci] = 1
                stack: list[str] = []
                run(self.first_target[ci], stack)
                comps += 1
                if stack:
                    segments.append(len(stack))
            for ci in open_comps:
                if stub_done[2 * ci + 1]:
                    continue
                stub_done[2 * ci + 1] = 1
                stack = []
                run(self.head_source[ci], stack)
                comps += 1
                if stack:
                    segments.append(len(stack))
            for e in range(2 * P):
                if consumed[e]:
                    continue
                stack = []
                x = succ[e] if e & 1 else pred[e]
                while True:
                    g = glue[x]
                    consumed[x] = 1
                    consumed[g] = 1
                    if want_words and not (x ^ g) & 1:
                        s = side[x >> 1]
                        if stack and stack[-1] == s:
                            stack.pop()
                        else:
                            stack.append(s)
                    if g == e:
                        break
                    x = succ[g] if g & 1 else pred[g]
                comps += 1
                if stack:
                    while len(stack) >= 2 and stack[0] == stack[-1]:
                        inner = stack[1:-1]
                        stack = []
                        for s in inner:
                            if stack and stack[-1] == s:
                                stack.pop()
                            else:
                                stack.append(s)
                    if stack:
                        circles.append(len(stack))
            yield sigma, comps, segments, circles

    def sigma_table(self) -> list[tuple[int, int]]:
        """Per crossing (oriented, disoriented) contributions to #A - #B."""
        table = []
        for k in range(self.n):
            if self.cross_sign[k] > 0:
                table.append((1, -1))
            else:
                table.append((-1, 1))
        return table


@dataclass(frozen=True)
class Cusp:
    """One cusp on a state component: side L or R in the traversal frame."""

    side: str


@dataclass(frozen=True)
class StateComponent:
    kind: str  # segment | circle
    cusps: tuple[Cusp, ...]


@dataclass(frozen=True)
class StateResolution:
    components: tuple[StateComponent, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    def segments(self) -> tuple[StateComponent, ...]:
        return tuple(c for c in self.components if c.kind == SEGMENT)


@dataclass(frozen=True)
class SmoothingChoice:
    """A total assignment of oriented/disoriented to every crossing label."""

    choices: tuple[tuple[str, str], ...]  # (label, ORIENTED|DISORIENTED)

    def as_dict(self) -> dict[str, str]:
        return dict(self.choices)


def ab_label(sign: int, choice: str) -> str:
    """The A/B smoothing label implied by a crossing sign and a choice."""
    if sign > 0:
        return "A" if choice == ORIENTED else "B"
    return "B" if choice == ORIENTED else "A"


def resolve(code: KnotoidCode, choice: SmoothingChoice) -> StateResolution:
    """Apply a smoothing assignment and traverse the resulting components."""
    compiled = CompiledCode(code)
    chosen = choice.as_dict()
    missing = [lab for lab in compiled.labels if lab not in chosen]
    if missing:
        raise IncompleteChoice(f"no smoothing chosen for {missing[0]!r}")
    mask = 0
    for k, lab in enumerate(compiled.labels):
        if chosen[lab] == DISORIENTED:
            mask |= 1 << k
        elif chosen[lab] != ORIENTED:
            raise IncompleteChoice(f"bad smoothing {chosen[lab]!r} for {lab!r}")
    segments, circles, extra = trace_state(compiled, compiled.glue_for_mask(mask), True)
    comps = [StateComponent(SEGMENT, tuple(Cusp(s) for s in word)) for word in segments]
    comps.extend(StateComponent(CIRCLE, tuple(Cusp(s) for s in word)) for word in circles)
    comps.extend(StateComponent(CIRCLE, ()) for _ in range(extra))
    return StateResolution(tuple(comps))


def trace_state(compiled: CompiledCode, glue: list[int], want_words: bool):
    """Walk every component of one state.

    Returns ``(segment_words, circle_words, free_circles)`` where the word
    lists hold L/R cusp strings in traversal order and ``free_circles``
    counts crossing-free loop components.
    """
    consumed = bytearray(2 * compiled.P)
    succ, pred = compiled.succ, compiled.pred
    side = compiled.side_char
    segments: list[str] = []
    circles: list[str] = []
    done_stubs: set[int] = set()

    def run(arrival: int) -> str:
        word: list[str] = []
        x = arrival
        while x >= 0:
            g = glue[x]
            consumed[x] = 1
            consumed[g] = 1
            if want_words and (x ^ g) & 1 == 0:
                word.append(side[x >> 1])
            x = succ[g] if g & 1 else pred[g]
        done_stubs.add(x)
        return "".join(word)

    for ci in compiled.open_comps:
        tail = -(2 * ci + 1)
        if tail in done_stubs:
            continue
        done_stubs.add(tail)
        segments.append(run(compiled.first_target[ci]))
    for ci in compiled.open_comps:
        head = -(2 * ci + 2)
        if head in done_stubs:
            continue
        done_stubs.add(head)
        src = compiled.head_source[ci]
        if src < 0:
            done_stubs.add(src)
            segments.append("")
            continue
        segments.append(run(src))

    for e in range(2 * compiled.P):
        if consumed[e]:
            continue
        # Start mid-circle: depart from e along its arc and stop on return.
        word: list[str] = []
        x = succ[e] if e & 1 else pred[e]
        while True:
            g = glue[x]
            consumed[x] = 1
            consumed[g] = 1
            if want_words and (x ^ g) & 1 == 0:
                word.append(side[x >> 1])
            if g == e:
                break
            x = succ[g] if g & 1 else pred[g]
        circles.append("".join(word))

    return segments, circles, compiled.free_circles


def enumerate_states(code: KnotoidCode, state_limit: int = DEFAULT_STATE_LIMIT):
    """Yield every (SmoothingChoice, StateResolution) pair, mask order."""
    compiled = CompiledCode(code)
    if compiled.n > state_limit:
        raise LimitExceeded(
            f"{compiled.n} crossings exceed the state limit {state_limit}"
        )
    for mask in range(1 << compiled.n):
        choice = SmoothingChoice(
            tuple(
                (lab, DISORIENTED if (mask >> k) & 1 else ORIENTED)
                for k, lab in enumerate(compiled.labels)
            )
        )
        segments, circles, extra = trace_state(compiled, compiled.glue_for_mask(mask), True)
        comps = [StateComponent(SEGMENT, tuple(Cusp(s) for s in w)) for w in segments]
        comps.extend(StateComponent(CIRCLE, tuple(Cusp(s) for s in w)) for w in circles)
        comps.extend(StateComponent(CIRCLE, ()) for _ in range(extra))
        yield choice, StateResolution(tuple(comps))
