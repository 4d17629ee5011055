"""Derive the valid R3 site patterns from random 3-line arrangements.

Three directed lines in general position bound a triangle; with a fixed
over/under layering (t over m over b) each line carries two passages whose
order, roles and crossing signs give the local Gauss-code pattern of an R3
site.  Sampling arrangements enumerates every realizable pattern.
"""

import itertools
import math
import random


def simulate(trials=200000, seed=0):
    rng = random.Random(seed)
    patterns = set()
    for _ in range(trials):
        angles = [rng.uniform(0, 2 * math.pi) for _ in range(3)]
        # Reject near-parallel directions.
        ok = True
        for i, j in itertools.combinations(range(3), 2):
            d = abs(math.sin(angles[i] - angles[j]))
            if d < 1e-3:
                ok = False
        if not ok:
            continue
        pts = [(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(3)]
        dirs = [(math.cos(a), math.sin(a)) for a in angles]

        # Parameter of the intersection of lines i and j along line i.
        def param(i, j):
            (px, py), (dx, dy) = pts[i], dirs[i]
            (qx, qy), (ex, ey) = pts[j], dirs[j]
            den = dx * ey - dy * ex
            ti = ((qx - px) * ey - (qy - py) * ex) / den
            return ti

        # Layering: strand 0 = top, 1 = middle, 2 = bottom.
        def sign(i, j):  # i over j
            (dx, dy), (ex, ey) = dirs[i], dirs[j]
            return 1 if dx * ey - dy * ex > 0 else -1

        # order per strand: True if its crossing with the *other upper*
        # strand comes first (for t: tm before tb; m: tm before mb;
        # b: tb before mb).
        order_t = param(0, 1) < param(0, 2)
        order_m = param(1, 0) < param(1, 2)
        order_b = param(2, 0) < param(2, 1)
        s_tm, s_tb, s_mb = sign(0, 1), sign(0, 2), sign(1, 2)
        patterns.add((order_t, order_m, order_b, s_tm, s_tb, s_mb))
    return patterns


if __name__ == "__main__":
    pats = simulate()
    print(f"{len(pats)} realized patterns")
    for p in sorted(pats):
        ot, om, ob, stm, stb, smb = p
        print(
            f"t:{'tm,tb' if ot else 'tb,tm'}  m:{'tm,mb' if om else 'mb,tm'}  "
            f"b:{'tb,mb' if ob else 'mb,tb'}  signs tm={stm:+d} tb={stb:+d} mb={smb:+d}"
        )
    # Closure under the move (all three orders flip):
    flipped = {(not a, not b, not c, x, y, z) for a, b, c, x, y, z in pats}
    print("closed under order flip:", flipped == pats)
