"""Dense stochastic-matrix foundation: validation, irreducibility, and seeded
generation of purely clustered chains and admissible perturbations.

Matrices are plain ``numpy.ndarray`` (float64, dense). A purely clustered
chain is a block-diagonal row-stochastic matrix whose diagonal blocks are
irreducible; a perturbation instance pairs such a chain with a direction
matrix ``E`` whose rows sum to zero, so that ``T(x) = T0 + x E`` stays
stochastic on ``[0, x_max]``.

All generators are pure functions of their seed: equal arguments reproduce
bit-identical output.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DimensionError, DomainError, ParameterError

# row sums at generation time; arithmetic downstream is held to 1e-10 instead
STOCHASTIC_TOL = 1e-12


def identity(n):
    """n x n identity matrix."""
    return np.eye(int(n))


def basis_vector(n, i):
    """i-th standard basis vector of R^n (0-based)."""
    if not 0 <= i < n:
        raise ParameterError(f"basis index {i} outside [0, {n})")
    e = np.zeros(int(n))
    e[i] = 1.0
    return e


def as_matrix(a):
    """Coerce to a 2-D float64 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size == 0:
        raise DimensionError("matrix has no entries")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix contains NaN or Inf entries")
    return m


def _as_square(a):
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class StochasticReport:
    """Outcome of a row-stochasticity check."""

    ok: bool
    violations: tuple


def validate_stochastic(m, tol=STOCHASTIC_TOL):
    """Check that ``m`` is row-stochastic within ``tol``.

    Returns a :class:`StochasticReport`; ``ok`` is true iff all entries are
    >= -tol and every row sum lies in [1 - tol, 1 + tol]. Violations name the
    offending row (and column) with the observed defect.
    """
    m = _as_square(m)
    violations = []
    neg = np.argwhere(m < -tol)
    for i, j in neg:
        violations.append(f"negative entry at ({i},{j}): {m[i, j]:.17g}")
    sums = m.sum(axis=1)
    bad = np.nonzero(np.abs(sums - 1.0) > tol)[0]
    for i in bad:
        violations.append(f"row {i} sums to {sums[i]:.17g}")
    return StochasticReport(ok=not violations, violations=tuple(violations))


def check_irreducible(m):
    """True iff the support digraph of ``m`` (edge i->j iff m[i,j] > 0) is
    strongly connected."""
    m = _as_square(m)
    if np.any(m < 0):
        raise DomainError("irreducibility is defined for nonnegative matrices")
    if m.shape[0] == 1:
        return True
    ncomp, _ = connected_components(
        csr_matrix(m > 0), directed=True, connection="strong"
    )
    return ncomp == 1


@dataclass(frozen=True)
class ClusterPartition:
    """Ordered partition of the state set {0, ..., n-1} into blocks."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(i) for i in b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.n < 1:
            raise ParameterError(f"state count must be positive, got {self.n}")
        seen = set()
        for b in blocks:
            if not b:
                raise DomainError("empty block in partition")
            if seen & set(b):
                raise DomainError("blocks are not pairwise disjoint")
            seen.update(b)
        if seen != set(range(self.n)):
            raise DomainError("blocks do not cover the state set exactly")

    @property
    def k(self):
        return len(self.blocks)

    @property
    def sizes(self):
        """Block sizes in nonincreasing order."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    @property
    def labels(self):
        """labels[i] = index of the block containing state i."""
        lab = np.empty(self.n, dtype=np.int64)
        for bi, b in enumerate(self.blocks):
            lab[list(b)] = bi
        return lab

    def block_of(self, i):
        """Index of the block containing state ``i``."""
        return int(self.labels[i])

    @classmethod
    def from_sizes(cls, sizes):
        """Contiguous partition with the given block sizes, in order."""
        blocks, off = [], 0
        for s in sizes:
            blocks.append(tuple(range(off, off + int(s))))
            off += int(s)
        return cls(n=off, blocks=tuple(blocks))

    @classmethod
    def from_labels(cls, labels):
        """Partition grouping equal labels; blocks ordered by smallest member."""
        labels = np.asarray(labels)
        groups = {}
        for i, lab in enumerate(labels):
            groups.setdefault(int(lab), []).append(i)
        blocks = sorted((tuple(g) for g in groups.values()), key=lambda b: b[0])
        return cls(n=len(labels), blocks=tuple(blocks))

    def to_json(self):
        """JSON object with 1-based state indices."""
        return {"n": self.n, "blocks": [[i + 1 for i in b] for b in self.blocks]}

    @classmethod
    def from_json(cls, obj):
        blocks = tuple(tuple(int(i) - 1 for i in b) for b in obj["blocks"])
        return cls(n=int(obj["n"]), blocks=blocks)


@dataclass(frozen=True)
class DecoupledChain:
    """Block-diagonal row-stochastic matrix with irreducible diagonal blocks."""

    matrix: np.ndarray
    partition: ClusterPartition

    def __post_init__(self):
        m = _as_square(self.matrix)
        object.__setattr__(self, "matrix", m)
        if m.shape[0] != self.partition.n:
            raise DimensionError(
                f"matrix is {m.shape[0]}x{m.shape[0]} but partition covers "
                f"{self.partition.n} states"
            )
        report = validate_stochastic(m, STOCHASTIC_TOL)
        if not report.ok:
            raise DomainError(
                "matrix is not row-stochastic: " + "; ".join(report.violations)
            )
        lab = self.partition.labels
        off_mask = lab[:, None] != lab[None, :]
        if np.any(m[off_mask] != 0.0):
            raise DomainError("nonzero entry outside the diagonal blocks")
        for bi, b in enumerate(self.partition.blocks):
            sub = m[np.ix_(b, b)]
            if not check_irreducible(sub):
                raise DomainError(f"diagonal block {bi} is not irreducible")

    @property
    def n(self):
        return self.partition.n


@dataclass(frozen=True)
class PerturbationInstance:
    """A chain ``T0`` with a perturbation direction ``E`` and admissible range.

    ``T(x) = T0 + x E`` is entrywise nonnegative and row-stochastic for every
    x in [0, x_max]; rows of E sum to zero.
    """

    base: DecoupledChain
    e: np.ndarray
    x_max: float = 1.0

    def __post_init__(self):
        e = _as_square(self.e)
        object.__setattr__(self, "e", e)
        n = self.base.n
        if e.shape[0] != n:
            raise DimensionError(f"perturbation is {e.shape[0]}x{e.shape[0]}, chain has {n} states")
        if self.x_max <= 0:
            raise ParameterError(f"x_max must be positive, got {self.x_max}")
        row_sums = e.sum(axis=1)
        if np.max(np.abs(row_sums)) > STOCHASTIC_TOL:
            raise DomainError(
                f"perturbation rows must sum to 0, worst defect {np.max(np.abs(row_sums)):.3e}"
            )
        endpoint = validate_stochastic(self.base.matrix + self.x_max * e, 1e-10)
        if not endpoint.ok:
            raise DomainError(
                "T(x_max) is not stochastic: " + "; ".join(endpoint.violations)
            )

    @property
    def n(self):
        return self.base.n

    @property
    def k(self):
        return self.base.partition.k


def _sample_stochastic_block(rng, rows, cols, min_entry):
    vals = np.maximum(rng.random((rows, cols)), min_entry)
    return vals / vals.sum(axis=1, keepdims=True)


def generate_decoupled(sizes, seed, min_entry=1e-3):
    """Seeded purely clustered chain with the given block sizes.

    Each diagonal block is drawn by sampling i.i.d. uniform values, flooring
    them at ``min_entry``, and normalizing rows. Strictly positive blocks are
    automatically irreducible.

    Parameters
    ----------
    sizes : sequence of int
        Block sizes, each >= 1.
    seed : int
        Generator seed; identical (sizes, seed, min_entry) give bit-identical
        output.
    min_entry : float
        Entry floor before normalization; must satisfy
        0 <= min_entry < 1 / max(sizes).
    """
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise ParameterError(f"block sizes must be positive, got {sizes}")
    if min_entry < 0 or min_entry * max(sizes) >= 1.0:
        raise ParameterError(
            f"min_entry {min_entry} too large for block size {max(sizes)}"
        )
    rng = np.random.default_rng(seed)
    partition = ClusterPartition.from_sizes(sizes)
    n = partition.n
    t0 = np.zeros((n, n))
    for b in partition.blocks:
        t0[np.ix_(b, b)] = _sample_stochastic_block(rng, len(b), len(b), min_entry)
    return DecoupledChain(matrix=t0, partition=partition)


def generate_perturbation(base, seed, min_entry=1e-3):
    """Seeded admissible perturbation of a purely clustered chain.

    Samples an auxiliary dense row-stochastic matrix Q (same recipe as the
    chain generator but over all n columns, so its support crosses blocks) and
    sets E = Q - T0. Then T(x) = (1 - x) T0 + x Q is stochastic for all
    x in [0, 1], so ``x_max = 1``.
    """
    rng = np.random.default_rng(seed)
    n = base.n
    q = _sample_stochastic_block(rng, n, n, min_entry)
    return PerturbationInstance(base=base, e=q - base.matrix, x_max=1.0)


def transition_at(inst, x):
    """T(x) = T0 + x E for x in [0, x_max]."""
    if not 0.0 <= x <= inst.x_max:
        raise ParameterError(f"x = {x} outside [0, {inst.x_max}]")
    return inst.base.matrix + x * inst.e
