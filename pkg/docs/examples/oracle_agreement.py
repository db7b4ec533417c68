"""Cross-validation: matrix mutation versus categorical computation.

Run with ``python3 docs/examples/oracle_agreement.py``.  Mutates a
principal-coefficient seed along random flip paths and checks that its
C-matrix rows equal categorical c-vector evaluations and its G-matrix
rows equal zig-zag indices — two independent computations that must
agree row by row.
"""

import random

from infgon.cvector import CVectorQuery, cvector_eval
from infgon.fzoracle import from_triangulation, mutate
from infgon.homindex import index
from infgon.triangulation import enumerate_triangulations
from infgon.zmodel import ZModel

rng = random.Random(7)
checked = mismatches = 0
for n in (5, 6, 7):
    z = ZModel.finite(n)
    tris = enumerate_triangulations(z)
    for _ in range(20):
        t = rng.choice(tris)
        seed = from_triangulation(t)
        cur = t
        labels = list(seed.labels)
        for _ in range(rng.randrange(0, 9)):
            d = rng.choice(labels)
            k = labels.index(d)
            cur, dstar = cur.flip(d)
            labels[k] = dstar
            seed = mutate(seed, k, new_label=dstar)
        seed.check()
        for j, u in enumerate(labels):
            q = CVectorQuery(t, cur, u)
            crow = [cvector_eval(q, d) for d in seed.basis]
            kv = index(t, u)
            grow = [kv.get(d) for d in seed.basis]
            checked += 1
            if seed.c[j].tolist() != crow or seed.g[j].tolist() != grow:
                mismatches += 1
                print("MISMATCH at", n, u, crow, grow)
print(f"checked {checked} rows across random flip paths; "
      f"{mismatches} mismatches")
