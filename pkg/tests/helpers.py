"""Shared test utilities: seeded random diagrams and invariant bundles."""

import random

from knotoids.codes import ComponentCode, KnotoidCode, Passage, validate
from knotoids.affine import affine_index
from knotoids.arrow import normalized_arrow
from knotoids.bracket import normalized_bracket
from knotoids.parity import odd_writhe
from knotoids.parity_bracket import normalized_parity_bracket


def random_code(rng: random.Random, n: int, loops: int = 0) -> KnotoidCode:
    """A uniformly random valid code with n crossings, one open leg."""
    total = 2 * n
    loops = min(loops, max(total - 1, 0))
    slots = list(range(total))
    rng.shuffle(slots)
    arr = [None] * total
    for k in range(n):
        i, j = slots[2 * k], slots[2 * k + 1]
        over_first = rng.random() < 0.5
        sign = rng.choice((1, -1))
        lab = str(k + 1)
        arr[i] = Passage("O" if over_first else "U", lab, sign)
        arr[j] = Passage("U" if over_first else "O", lab, sign)
    if loops == 0:
        code = KnotoidCode((ComponentCode("open", tuple(arr)),))
    else:
        cuts = sorted(rng.sample(range(1, total), loops)) if total > 1 else []
        parts, prev = [], 0
        for c in cuts + [total]:
            parts.append(tuple(arr[prev:c]))
            prev = c
        code = KnotoidCode(
            tuple(
                ComponentCode("open" if i == 0 else "loop", p)
                for i, p in enumerate(parts)
            )
        )
    validate(code)
    return code


def invariant_suite(code):
    """The move-invariant bundle: odd writhe, f_K, arrow, affine, parity."""
    return (
        odd_writhe(code).value,
        normalized_bracket(code).normalized,
        normalized_arrow(code),
        affine_index(code) if code.is_standard_knotoid() else None,
        normalized_parity_bracket(code),
    )


def relabeled(code: KnotoidCode, rng: random.Random) -> KnotoidCode:
    """The same diagram with crossing labels renamed at random."""
    labels = sorted({p.label for _, _, p in code.all_passages()})
    shuffled = labels[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(labels, (f"x{s}" for s in shuffled)))
    comps = tuple(
        ComponentCode(
            c.kind,
            tuple(Passage(p.role, mapping[p.label], p.sign) for p in c.passages),
        )
        for c in code.components
    )
    return KnotoidCode(comps)
