"""Sweep single-open-leg codes with n crossings for reference arrow values.

Targets: the 2t+2/t-4 affine diagram, the height-1 five-crossing knotoid
(trivial odd writhe and affine index), and the knotoid closing to a famous
unit-Jones virtual knot.  Planarity (ribbon genus 0) prunes the sweep.
"""

import sys
import time

sys.path.insert(0, "src")

from knotoids.codes import ComponentCode, KnotoidCode, Passage
from knotoids.affine import affine_index
from knotoids.arrow import arrow_polynomial
from knotoids.closures import carter_genus
from knotoids.laurent import ArrowMonomial, LaurentA, AffinePoly
from knotoids.parity import odd_writhe

FIG1F_AFFINE = AffinePoly({1: 2, -1: 2, 0: -4})
FIG1F_ARROW_SCALAR = LaurentA({-5: -1, -1: 2, 3: -1, 7: -1})
FIG1F_ARROW_L1 = LaurentA({1: 2, 5: -2})

K57_SCALAR = LaurentA({-3: -1, 1: 1, 5: -2, 9: 1})
K57_L1 = LaurentA({-9: 1, -5: -2, -1: 2, 3: -2, 7: 1})

SLAVIK_L1 = LaurentA({3: -1, -1: -1, -3: 1, 1: 1, 5: 1})

MONO_L1 = ArrowMonomial.build((), (1,))
MONO_EMPTY = ArrowMonomial()


def chord_diagrams(n):
    def rec(positions):
        if not positions:
            yield []
            return
        first = positions[0]
        for j in range(1, len(positions)):
            second = positions[j]
            rest = positions[1:j] + positions[j + 1:]
            for tail in rec(rest):
                yield [(first, second)] + tail
    yield from rec(tuple(range(2 * n)))


def sweep(n):
    t0 = time.time()
    count = 0
    for pairs in chord_diagrams(n):
        slots_template = [None] * (2 * n)
        for role_mask in range(1 << n):
            for sign_mask in range(1 << n):
                slots = slots_template[:]
                for k, (i, j) in enumerate(pairs):
                    over_first = (role_mask >> k) & 1
                    sign = 1 if (sign_mask >> k) & 1 else -1
                    lab = str(k + 1)
                    slots[i] = Passage("O" if over_first else "U", lab, sign)
                    slots[j] = Passage("U" if over_first else "O", lab, sign)
                code = KnotoidCode((ComponentCode("open", tuple(slots)),))
                count += 1
                if carter_genus(code) != 0:
                    continue
                aff = affine_index(code)
                trivial_aff = aff.is_zero()
                fig1f_aff = aff == FIG1F_AFFINE
                if not (trivial_aff or fig1f_aff):
                    continue
                if trivial_aff and odd_writhe(code).value != 0:
                    continue
                arrow = arrow_polynomial(code)
                if arrow.k_degree() != 0:
                    continue
                scalar = arrow.terms.get(MONO_EMPTY, LaurentA.zero())
                l1 = arrow.terms.get(MONO_L1, LaurentA.zero())
                text = " ".join(p.token() for p in code.components[0].passages)
                if fig1f_aff and scalar == FIG1F_ARROW_SCALAR and l1 == FIG1F_ARROW_L1:
                    print("FIG1F MATCH:", text, flush=True)
                if trivial_aff and scalar == K57_SCALAR and l1 == K57_L1:
                    print("K57 MATCH:", text, flush=True)
                if trivial_aff and l1 == SLAVIK_L1 and len(arrow.terms) == 2:
                    print("SLAVIK L1 match:", text, "| scalar:", scalar.render(), flush=True)
    print(f"n={n}: swept {count} codes in {time.time()-t0:.1f}s")


if __name__ == "__main__":
    sweep(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
