"""Truncated two-mode Fock space and the su(1,1) generator algebra.

The two bosonic modes are truncated at a per-mode occupation cutoff n_max, so
every operator is a (n_max+1)^2 square matrix. Truncation artifacts live on
the outer occupation shells; identities are therefore checked on a safe
subspace that keeps a configurable margin away from the cutoff.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp


@dataclass(frozen=True)
class FockBasis:
    """Two-mode number basis |n1, n2> with 0 <= n_i <= n_max.

    The flat index is row major with n1 as the outer label:
    index(n1, n2) = n1*(n_max+1) + n2.
    """

    n_max: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_max, (int, np.integer)) or isinstance(self.n_max, bool):
            raise ValueError("n_max must be an integer")
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def side(self) -> int:
        return self.n_max + 1

    @property
    def dimension(self) -> int:
        return self.side * self.side

    def index(self, n1: int, n2: int) -> int:
        if not (0 <= n1 <= self.n_max and 0 <= n2 <= self.n_max):
            raise ValueError(
                f"occupation ({n1}, {n2}) outside 0..{self.n_max}"
            )
        return n1 * self.side + n2

    def occupations(self, index: int) -> tuple[int, int]:
        if not (0 <= index < self.dimension):
            raise ValueError(f"index {index} outside 0..{self.dimension - 1}")
        n1, n2 = divmod(index, self.side)
        return n1, n2

    def occupation_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Per-index occupation numbers (n1[i], n2[i]) as integer arrays."""
        labels = np.arange(self.side)
        return np.repeat(labels, self.side), np.tile(labels, self.side)


@dataclass(frozen=True)
class FockOperator:
    """Complex matrix on a truncated two-mode basis, dense or sparse."""

    basis: FockBasis
    matrix: object

    def __post_init__(self) -> None:
        dim = self.basis.dimension
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not match basis dimension {dim}"
            )

    @property
    def is_sparse(self) -> bool:
        return sp.issparse(self.matrix)

    def toarray(self) -> np.ndarray:
        if self.is_sparse:
            return self.matrix.toarray()
        return np.asarray(self.matrix)

    def dagger(self) -> "FockOperator":
        adj = self.matrix.conj().T
        if self.is_sparse:
            adj = sp.csr_array(adj)
        return FockOperator(self.basis, adj)

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self.matrix @ vector

    def diagonal(self) -> np.ndarray:
        if self.is_sparse:
            return self.matrix.diagonal()
        return np.diagonal(self.matrix).copy()

    def max_abs(self) -> float:
        if self.is_sparse:
            data = self.matrix.data
            return float(np.abs(data).max()) if data.size else 0.0
        return float(np.abs(self.matrix).max(initial=0.0))

    def _check_basis(self, other: "FockOperator") -> None:
        if self.basis != other.basis:
            raise ValueError("operators act on different bases")

    def _pair(self, other: "FockOperator"):
        # mixing dense with sparse promotes both sides to dense
        if self.is_sparse == other.is_sparse:
            return self.matrix, other.matrix
        return self.toarray(), other.toarray()

    def __add__(self, other: "FockOperator") -> "FockOperator":
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check_basis(other)
        a, b = self._pair(other)
        return FockOperator(self.basis, a + b)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check_basis(other)
        a, b = self._pair(other)
        return FockOperator(self.basis, a - b)

    def __neg__(self) -> "FockOperator":
        return FockOperator(self.basis, -self.matrix)

    def __mul__(self, scalar) -> "FockOperator":
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return FockOperator(self.basis, self.matrix * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        if not isinstance(other, FockOperator):
            return NotImplemented
        self._check_basis(other)
        a, b = self._pair(other)
        return FockOperator(self.basis, a @ b)


@dataclass(frozen=True)
class SafeSubspace:
    """Projector onto occupations at least `margin` below the cutoff."""

    basis: FockBasis
    margin: int

    def __post_init__(self) -> None:
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")

    def mask(self) -> np.ndarray:
        n1, n2 = self.basis.occupation_arrays()
        limit = self.basis.n_max - self.margin
        return (n1 <= limit) & (n2 <= limit)

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.mask()))

    def projector(self, *, sparse: bool = False) -> FockOperator:
        diag = self.mask().astype(np.complex128)
        if sparse:
            return FockOperator(self.basis, sp.csr_array(sp.diags_array(diag)))
        return FockOperator(self.basis, np.diag(diag))

    def column_max(self, op: FockOperator) -> float:
        """Max |entry| of op restricted to safe-subspace columns (op @ P)."""
        cols = np.flatnonzero(self.mask())
        if cols.size == 0:
            return 0.0
        block = op.toarray()[:, cols]
        return float(np.abs(block).max(initial=0.0))


@dataclass(frozen=True)
class LadderOperators:
    a1: FockOperator
    a2: FockOperator
    a1_dag: FockOperator
    a2_dag: FockOperator

    @property
    def basis(self) -> FockBasis:
        return self.a1.basis


@dataclass(frozen=True)
class SU11Generators:
    """The four Jordan-Schwinger generators k0, k1, k2, k3."""

    k0: FockOperator
    k1: FockOperator
    k2: FockOperator
    k3: FockOperator

    @property
    def basis(self) -> FockBasis:
        return self.k0.basis

    def as_tuple(self) -> tuple[FockOperator, FockOperator, FockOperator, FockOperator]:
        return (self.k0, self.k1, self.k2, self.k3)


def _materialize(basis: FockBasis, rows, cols, values, sparse: bool) -> FockOperator:
    dim = basis.dimension
    if sparse:
        coo = sp.coo_array(
            (np.asarray(values, dtype=np.complex128), (rows, cols)), shape=(dim, dim)
        )
        return FockOperator(basis, sp.csr_array(coo))
    dense = np.zeros((dim, dim), dtype=np.complex128)
    dense[rows, cols] = values
    return FockOperator(basis, dense)


def identity_operator(basis: FockBasis, *, sparse: bool = False) -> FockOperator:
    if sparse:
        return FockOperator(
            basis, sp.csr_array(sp.eye_array(basis.dimension, dtype=np.complex128))
        )
    return FockOperator(basis, np.eye(basis.dimension, dtype=np.complex128))


def build_ladder(basis: FockBasis, *, sparse: bool = False) -> LadderOperators:
    """Build the two annihilation operators and their exact adjoints.

    a1|n1,n2> = sqrt(n1) |n1-1,n2> and a2|n1,n2> = sqrt(n2) |n1,n2-1>.
    The daggers are the conjugate transposes of the truncated matrices.

    Raises:
        ValueError: if n_max < 1, where the operators have no nontrivial action.
    """
    if basis.n_max < 1:
        raise ValueError("build_ladder needs n_max >= 1")
    n1, n2 = basis.occupation_arrays()
    flat = np.arange(basis.dimension)

    src1 = flat[n1 >= 1]
    a1 = _materialize(basis, src1 - basis.side, src1, np.sqrt(n1[src1]), sparse)

    src2 = flat[n2 >= 1]
    a2 = _materialize(basis, src2 - 1, src2, np.sqrt(n2[src2]), sparse)

    return LadderOperators(a1, a2, a1.dagger(), a2.dagger())


def build_su11(
    basis: FockBasis,
    *,
    sparse: bool = False,
    ladder: LadderOperators | None = None,
) -> SU11Generators:
    """Build the generators from bilinears of the ladder operators.

    k0 = (a1'a1 - a2a2')/2, k1 = (a1'a2' + a2a1)/2,
    k2 = i(a2a1 - a1'a2')/2, k3 = (a1'a1 + a2a2')/2, with ' denoting the
    adjoint. On the safe interior k0 and k3 act diagonally with eigenvalues
    (n1 - n2 - 1)/2 and (n1 + n2 + 1)/2.
    """
    lad = ladder if ladder is not None else build_ladder(basis, sparse=sparse)
    raising = lad.a1_dag @ lad.a2_dag
    lowering = raising.dagger()  # equals a2 @ a1 exactly for these matrices
    number1 = lad.a1_dag @ lad.a1
    reversed2 = lad.a2 @ lad.a2_dag
    k0 = 0.5 * (number1 - reversed2)
    k1 = 0.5 * (raising + lowering)
    k2 = 0.5j * (lowering - raising)
    k3 = 0.5 * (number1 + reversed2)
    return SU11Generators(k0, k1, k2, k3)


def build_hamiltonian(
    basis: FockBasis,
    omega: float = 1.0,
    *,
    sparse: bool = False,
    ladder: LadderOperators | None = None,
) -> FockOperator:
    """Oscillator Hamiltonian omega*(a1'a1 + a2'a2 + 1), exactly diagonal.

    Number operators commute with the cutoff, so H|n1,n2> =
    omega*(n1+n2+1)|n1,n2> holds on every basis state including the boundary.
    """
    if not omega > 0.0:
        raise ValueError("omega must be positive")
    lad = ladder if ladder is not None else build_ladder(basis, sparse=sparse)
    use_sparse = lad.a1.is_sparse
    total = (
        lad.a1_dag @ lad.a1
        + lad.a2_dag @ lad.a2
        + identity_operator(basis, sparse=use_sparse)
    )
    return omega * total


def commutator(a: FockOperator, b: FockOperator) -> FockOperator:
    """[a, b] = a @ b - b @ a. Raises ValueError on basis mismatch."""
    return a @ b - b @ a


def casimir(gens: SU11Generators) -> FockOperator:
    """Quadratic invariant k3^2 - k2^2 - k1^2.

    On the safe subspace it equals k0*(k0 + 1) entrywise; the raising and
    lowering contributions of k1^2 and k2^2 cancel identically, so the result
    stays diagonal even on the truncated space.
    """
    return gens.k3 @ gens.k3 - gens.k2 @ gens.k2 - gens.k1 @ gens.k1


@dataclass(frozen=True)
class AlgebraCheck:
    """One verified identity with its measured deviation."""

    name: str
    max_deviation: float
    tolerance: float
    passed: bool
    detail: str | None = None


@dataclass(frozen=True)
class AlgebraReport:
    """Outcome of the structure verification on one truncated basis."""

    n_max: int
    margin: int
    checks: tuple[AlgebraCheck, ...]
    k3_k1_matched: str

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json_payload(self) -> list[dict]:
        payload = []
        for check in self.checks:
            entry = {
                "check_name": check.name,
                "max_deviation": check.max_deviation,
                "tolerance": check.tolerance,
                "passed": check.passed,
                "basis": {"n_max": self.n_max, "margin": self.margin},
            }
            if check.detail is not None:
                entry["detail"] = check.detail
            payload.append(entry)
        return payload


def verify_algebra(
    basis: FockBasis,
    margin: int = 2,
    tol: float = 1e-12,
    *,
    sparse: bool = False,
) -> AlgebraReport:
    """Measure the generator algebra on the safe subspace of a truncated basis.

    Every deviation is the max |entry| of the defect operator restricted to
    safe-subspace columns. Generators are quadratic in the ladder operators
    and their products move occupations by at most two per mode, so margin 2
    removes all truncation artifacts; smaller margins run anyway and report
    the boundary-shell deviations they see.

    The commutator of k3 with k1 is measured against both candidate right
    hand sides i*k2 and i*k3 and the report records which one matched.

    Raises:
        ValueError: if the requested margin leaves no safe states.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    subspace = SafeSubspace(basis, margin)
    if subspace.size == 0:
        raise ValueError(
            f"safe subspace is empty for n_max={basis.n_max}, margin={margin}"
        )

    lad = build_ladder(basis, sparse=sparse)
    gens = build_su11(basis, sparse=sparse, ladder=lad)
    ham = build_hamiltonian(basis, 1.0, sparse=sparse, ladder=lad)
    one = identity_operator(basis, sparse=sparse)

    def check(name: str, deviation: float, detail: str | None = None) -> AlgebraCheck:
        return AlgebraCheck(name, deviation, tol, deviation <= tol, detail)

    checks = []

    dev_ladder = max(
        subspace.column_max(commutator(lad.a1, lad.a1_dag) - one),
        subspace.column_max(commutator(lad.a2, lad.a2_dag) - one),
    )
    checks.append(check("ladder_canonical_commutators", dev_ladder))

    checks.append(
        check(
            "commutator_k1_k2",
            subspace.column_max(commutator(gens.k1, gens.k2) + 1j * gens.k3),
            "target -i*k3",
        )
    )
    checks.append(
        check(
            "commutator_k2_k3",
            subspace.column_max(commutator(gens.k2, gens.k3) - 1j * gens.k1),
            "target i*k1",
        )
    )

    c31 = commutator(gens.k3, gens.k1)
    dev_vs_k2 = subspace.column_max(c31 - 1j * gens.k2)
    dev_vs_k3 = subspace.column_max(c31 - 1j * gens.k3)
    if dev_vs_k2 <= tol:
        matched = "i*k2"
    elif dev_vs_k3 <= tol:
        matched = "i*k3"
    else:
        matched = "none"
    checks.append(
        AlgebraCheck(
            "commutator_k3_k1",
            min(dev_vs_k2, dev_vs_k3),
            tol,
            matched != "none",
            f"matched {matched}; deviation vs i*k2 = {dev_vs_k2:.3e}, "
            f"vs i*k3 = {dev_vs_k3:.3e}",
        )
    )

    quadratic = casimir(gens)
    reference = gens.k0 @ gens.k0 + gens.k0
    checks.append(
        check(
            "casimir_identity",
            subspace.column_max(quadratic - reference),
            "k3^2 - k2^2 - k1^2 vs k0*(k0 + 1)",
        )
    )

    checks.append(
        check(
            "hamiltonian_commutes_with_k0",
            subspace.column_max(commutator(gens.k0, ham)),
        )
    )
    checks.append(
        check(
            "hamiltonian_commutes_with_k3",
            subspace.column_max(commutator(gens.k3, ham)),
        )
    )

    proj = subspace.projector(sparse=sparse)
    dev_herm = max(
        (gens.k0 - gens.k0.dagger()).max_abs(),
        (gens.k3 - gens.k3.dagger()).max_abs(),
        (proj @ (gens.k1 - gens.k1.dagger()) @ proj).max_abs(),
        (proj @ (gens.k2 - gens.k2.dagger()) @ proj).max_abs(),
    )
    checks.append(
        check("hermiticity", dev_herm, "k0, k3 global; k1, k2 on the safe subspace")
    )

    return AlgebraReport(basis.n_max, margin, tuple(checks), matched)
