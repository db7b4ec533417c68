"""Independent matrix-mutation oracle for finite polygons.

Skew-symmetric exchange-matrix mutation with principal coefficients,
tracking the c- and g-matrices along flip sequences.  This is a
self-contained combinatorial computation used to cross-validate the
categorical c-vector and index computations; it shares no code with
them beyond the dual-quiver extraction.
"""

from __future__ import annotations

import numpy as np

from .triangulation import Triangulation
from .zmodel import Arc, ModelError


class SeedMatrix:
    """Exchange matrix B with c- and g-matrices over the initial basis.

    Row i of ``c`` is the c-vector of node i, and row i of ``g`` its
    g-vector, both in the coordinates of the initial diagonals
    ``basis``.  ``labels[i]`` is the diagonal currently represented by
    node i along a flip path."""

    __slots__ = ("b", "c", "g", "labels", "basis")

    def __init__(self, b: np.ndarray, c: np.ndarray, g: np.ndarray,
                 labels: tuple[Arc, ...], basis: tuple[Arc, ...]):
        self.b = b
        self.c = c
        self.g = g
        self.labels = labels
        self.basis = basis

    @property
    def m(self) -> int:
        return self.b.shape[0]

    def check(self) -> None:
        """Structural invariants: B skew-symmetric, C and G unimodular,
        C rows sign coherent."""
        if not np.array_equal(self.b, -self.b.T):
            raise ModelError("exchange matrix is not skew-symmetric")
        for mat, name in ((self.c, "C"), (self.g, "G")):
            det = round(float(np.linalg.det(mat.astype(float))))
            if det not in (1, -1):
                raise ModelError(f"{name}-matrix is not unimodular")
        for row in self.c:
            if not (np.all(row >= 0) or np.all(row <= 0)) or not row.any():
                raise ModelError("c-matrix row is not sign coherent")

    def pairing_matrix(self) -> np.ndarray:
        """<c_i, g_j> over all node pairs; the identity by duality."""
        return self.c @ self.g.T


def from_triangulation(t: Triangulation) -> SeedMatrix:
    """The initial seed of a finite triangulation: B from the dual
    quiver, C = G = identity."""
    z = t.z
    if not z.is_finite:
        raise ModelError("the matrix oracle is finite-type only")
    nodes = tuple(sorted(t.core, key=lambda a: (z.key(a.p), z.key(a.q))))
    pos = {a: i for i, a in enumerate(nodes)}
    m = len(nodes)
    b = np.zeros((m, m), dtype=np.int64)
    for s, tgt in t.dual_quiver().arrows:
        b[pos[tgt], pos[s]] += 1
        b[pos[s], pos[tgt]] -= 1
    ident = np.eye(m, dtype=np.int64)
    return SeedMatrix(b, ident.copy(), ident.copy(), nodes, nodes)


def mutate(s: SeedMatrix, k: int, new_label: Arc | None = None) -> SeedMatrix:
    """Fomin--Zelevinsky mutation at node k with principal coefficients."""
    m = s.m
    if not (0 <= k < m):
        raise ModelError(f"node index {k} out of range 0..{m - 1}")
    b = s.b
    pos = np.maximum(b, 0)

    nb = b.copy()
    for i in range(m):
        for j in range(m):
            if i == k or j == k:
                nb[i, j] = -b[i, j]
            else:
                nb[i, j] = (b[i, j]
                            + pos[i, k] * pos[k, j]
                            - max(-b[i, k], 0) * max(-b[k, j], 0))

    # c-vectors: the coefficient block of the extended matrix, with
    # rows of ``c`` as the c-vectors (so the block is c transposed).
    bot = s.c.T.copy()
    nbot = bot.copy()
    for i in range(m):
        for j in range(m):
            if j == k:
                nbot[i, j] = -bot[i, j]
            else:
                nbot[i, j] = (bot[i, j]
                              + max(bot[i, k], 0) * pos[k, j]
                              - max(-bot[i, k], 0) * max(-b[k, j], 0))
    nc = nbot.T

    # g-vectors: g'_k = -g_k + sum_i [-eps * b_ik]_+ g_i with eps the
    # sign of the k-th c-vector (sign coherent, so well defined).
    ck = s.c[k]
    eps = 1 if np.all(ck >= 0) else -1
    ng = s.g.copy()
    coeffs = np.maximum(-eps * b[:, k], 0)
    ng[k] = -s.g[k] + coeffs @ s.g
    labels = list(s.labels)
    if new_label is not None:
        labels[k] = new_label
    return SeedMatrix(nb, nc, ng, tuple(labels), s.basis)


def flip_path_to_mutation_path(t: Triangulation, flips: list[Arc]
                               ) -> list[int]:
    """Node indices mutated by a flip sequence, tracking the relabeling
    of each flipped diagonal to its exchange partner."""
    z = t.z
    labels = list(sorted(t.core, key=lambda a: (z.key(a.p), z.key(a.q))))
    cur = t
    path: list[int] = []
    for d in flips:
        if d not in labels:
            raise ModelError(f"{d!r} is not a diagonal of the current "
                             "triangulation")
        k = labels.index(d)
        cur, dstar = cur.flip(d)
        labels[k] = dstar
        path.append(k)
    return path


def run_flip_path(t: Triangulation, flips: list[Arc]
                  ) -> tuple[SeedMatrix, Triangulation]:
    """Mutate the seed of T along a flip sequence; the returned seed's
    labels are the diagonals of the final triangulation."""
    seed = from_triangulation(t)
    cur = t
    labels = list(seed.labels)
    for d in flips:
        if d not in labels:
            raise ModelError(f"{d!r} is not a diagonal of the current "
                             "triangulation")
        k = labels.index(d)
        cur, dstar = cur.flip(d)
        labels[k] = dstar
        seed = mutate(seed, k, new_label=dstar)
    return seed, cur
