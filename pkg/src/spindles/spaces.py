"""Catalog of the classical compact symmetric spaces and their isotropy data.

Twelve families are modeled. Eight are quotient types M = G/K:

    AI         SU(p+q)/SO(p+q)          orbit SO(p+q)/S(O(p)xO(q))
    AII        SU(2(p+q))/Sp(p+q)       orbit Sp(p+q)/Sp(p)xSp(q)
    AIII       SU(2n)/S(U(n)xU(n))      orbit U(n)
    BDI_rank1  SO(p+q)/SO(p)xSO(q)      orbit (S^(p-1)xS^(q-1))/Z2
    BDI_split  SO(2n)/SO(n)xSO(n)       orbit SO(n)
    DIII       SO(4n)/U(2n)             orbit U(2n)/Sp(n)
    CI         Sp(n)/U(n)               orbit U(n)/SO(n)
    CII        Sp(2n)/Sp(n)xSp(n)       orbit Sp(n)

and four are compact Lie groups viewed as symmetric spaces (G x G acting
by left and right translation, the involution swapping the factors):

    GRP_a      SU(p+q)                  orbit SU(p+q)/S(U(p)xU(q))
    GRP_bd     Spin(n)                  orbit SO(n)/(SO(2)xSO(n-2))
    GRP_c      Sp(n)                    orbit Sp(n)/U(n)
    GRP_d      Spin(2n)                 orbit SO(2n)/U(n)

Lie algebras are realized as anti-Hermitian complex matrices; compact
Sp(n) sits inside U(2n) via the standard J_n = [[0,-I_n],[I_n,0]]
embedding. The group families are realized on a single copy of the
group's algebra: the g x g swap structure is never materialized, and the
geodesic membership question collapses to the condition g^2 = I for
g = exp(t*xi) (the two exponentials exp(+-t*xi) commute). Each group
family also carries an auxiliary matrix involution so that the generic
Cartan-split machinery applies; its k/p multiplicities then describe the
auxiliary pair, while lambda, knots and profiles are the group's own.
Spin groups are never constructed: spindle data is computed in SO(n)
and scaled by cover_multiplier = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotUnitaryError,
    ParameterError,
    SpindleError,
)
from .linalg import (
    RationalAngle,
    ensure_square,
    is_real_matrix,
    is_unitary,
    mat_to_vec,
    resolve_eps,
)

FAMILY_TAGS = (
    "AI",
    "AII",
    "AIII",
    "BDI_rank1",
    "BDI_split",
    "DIII",
    "CI",
    "CII",
    "GRP_a",
    "GRP_bd",
    "GRP_c",
    "GRP_d",
)

# Families parametrized by a pair 1 <= p <= q; the rest take a single n.
PQ_FAMILIES = frozenset({"AI", "AII", "BDI_rank1", "GRP_a"})
GROUP_FAMILIES = frozenset({"GRP_a", "GRP_bd", "GRP_c", "GRP_d"})

# Closed-form exponential tag per family (see linalg.exp_structured).
_FORM_BY_TAG = {
    "AI": "diagonal-phase",
    "AII": "diagonal-phase",
    "GRP_a": "diagonal-phase",
    "AIII": "half-angle",
    "BDI_split": "half-angle",
    "DIII": "half-angle",
    "CI": "half-angle",
    "CII": "half-angle",
    "GRP_c": "half-angle",
    "GRP_d": "half-angle",
    "BDI_rank1": "rotation-block",
    "GRP_bd": "rotation-block",
}

# Lower bounds on the single parameter n. BDI_split n=1, GRP_d n=1 and
# GRP_bd n<=2 would give the abelian SO(2) (or smaller), where ad(xi)
# vanishes identically and no canonical element exists.
_MIN_N = {
    "AIII": 1,
    "BDI_split": 2,
    "DIII": 1,
    "CI": 1,
    "CII": 1,
    "GRP_bd": 3,
    "GRP_c": 1,
    "GRP_d": 2,
}


@dataclass(frozen=True)
class SpaceFamily:
    """A family tag plus its parameter tuple, validated on construction."""

    tag: str
    params: tuple

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ParameterError(
                f"unknown family tag {self.tag!r}; expected one of {', '.join(FAMILY_TAGS)}"
            )
        params = tuple(int(v) for v in self.params)
        if any(int(v) != v for v in self.params):
            raise ParameterError(f"{self.tag}: parameters must be integers, got {self.params!r}")
        object.__setattr__(self, "params", params)
        if self.tag in PQ_FAMILIES:
            if len(params) != 2:
                raise ParameterError(
                    f"{self.tag} takes two parameters p, q; got {len(params)}"
                )
            p, q = params
            if not (1 <= p <= q):
                raise ParameterError(f"{self.tag} requires 1 <= p <= q; got p={p}, q={q}")
            if self.tag == "BDI_rank1" and p + q < 3:
                raise ParameterError(
                    f"BDI_rank1 requires p + q >= 3 (SO(2) is abelian); got p={p}, q={q}"
                )
        else:
            if len(params) != 1:
                raise ParameterError(
                    f"{self.tag} takes one parameter n; got {len(params)}"
                )
            n = params[0]
            if n < _MIN_N[self.tag]:
                raise ParameterError(
                    f"{self.tag} requires n >= {_MIN_N[self.tag]}; got n={n}"
                )

    @classmethod
    def make(cls, tag: str, *params: int) -> "SpaceFamily":
        return cls(tag, tuple(params))

    @property
    def p(self) -> int:
        if self.tag not in PQ_FAMILIES:
            raise ParameterError(f"{self.tag} has no (p, q) parameters")
        return self.params[0]

    @property
    def q(self) -> int:
        if self.tag not in PQ_FAMILIES:
            raise ParameterError(f"{self.tag} has no (p, q) parameters")
        return self.params[1]

    @property
    def n(self) -> int:
        if self.tag in PQ_FAMILIES:
            raise ParameterError(f"{self.tag} has no single parameter n")
        return self.params[0]

    @property
    def is_group_type(self) -> bool:
        return self.tag in GROUP_FAMILIES

    @property
    def closed_form(self) -> str:
        return _FORM_BY_TAG[self.tag]

    @property
    def ambient_dim(self) -> int:
        tag = self.tag
        if tag in ("AI", "GRP_a", "BDI_rank1"):
            return self.p + self.q
        if tag == "AII":
            return 2 * (self.p + self.q)
        if tag in ("AIII", "BDI_split", "CI", "GRP_c", "GRP_d"):
            return 2 * self.n
        if tag in ("DIII", "CII"):
            return 4 * self.n
        if tag == "GRP_bd":
            return self.n
        raise AssertionError(tag)

    @property
    def cover_multiplier(self) -> int:
        return 2 if self.tag in ("GRP_bd", "GRP_d") else 1

    def label(self) -> str:
        return f"{self.tag}({','.join(str(v) for v in self.params)})"

    def space_name(self) -> str:
        tag = self.tag
        if tag == "AI":
            m = self.p + self.q
            return f"SU({m})/SO({m})"
        if tag == "AII":
            m = self.p + self.q
            return f"SU({2 * m})/Sp({m})"
        if tag == "AIII":
            n = self.n
            return f"SU({2 * n})/S(U({n})xU({n}))"
        if tag == "BDI_rank1":
            p, q = self.p, self.q
            return f"SO({p + q})/SO({p})xSO({q})"
        if tag == "BDI_split":
            n = self.n
            return f"SO({2 * n})/SO({n})xSO({n})"
        if tag == "DIII":
            n = self.n
            return f"SO({4 * n})/U({2 * n})"
        if tag == "CI":
            n = self.n
            return f"Sp({n})/U({n})"
        if tag == "CII":
            n = self.n
            return f"Sp({2 * n})/Sp({n})xSp({n})"
        if tag == "GRP_a":
            return f"SU({self.p + self.q})"
        if tag == "GRP_bd":
            return f"Spin({self.n})"
        if tag == "GRP_c":
            return f"Sp({self.n})"
        if tag == "GRP_d":
            return f"Spin({2 * self.n})"
        raise AssertionError(tag)

    def orbit_name(self) -> str:
        tag = self.tag
        if tag == "AI":
            p, q = self.p, self.q
            return f"SO({p + q})/S(O({p})xO({q}))"
        if tag == "AII":
            p, q = self.p, self.q
            return f"Sp({p + q})/Sp({p})xSp({q})"
        if tag == "AIII":
            return f"U({self.n})"
        if tag == "BDI_rank1":
            return f"(S^{self.p - 1}xS^{self.q - 1})/Z2"
        if tag == "BDI_split":
            return f"SO({self.n})"
        if tag == "DIII":
            n = self.n
            return f"U({2 * n})/Sp({n})"
        if tag == "CI":
            n = self.n
            return f"U({n})/SO({n})"
        if tag == "CII":
            return f"Sp({self.n})"
        if tag == "GRP_a":
            p, q = self.p, self.q
            return f"SU({p + q})/S(U({p})xU({q}))"
        if tag == "GRP_bd":
            n = self.n
            return f"SO({n})/(SO(2)xSO({n - 2}))"
        if tag == "GRP_c":
            return f"Sp({self.n})/U({self.n})"
        if tag == "GRP_d":
            n = self.n
            return f"SO({2 * n})/U({n})"
        raise AssertionError(tag)

    def __str__(self) -> str:
        return self.label()


def _eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def _j_matrix(n: int) -> np.ndarray:
    """J_n = [[0, -I_n], [I_n, 0]], the complex/quaternionic structure."""
    j = np.zeros((2 * n, 2 * n), dtype=complex)
    j[:n, n:] = -np.eye(n)
    j[n:, :n] = np.eye(n)
    return j


def _signature(p: int, q: int) -> np.ndarray:
    return np.diag(np.concatenate([np.ones(p), -np.ones(q)])).astype(complex)


def _su_basis(m: int) -> list:
    """Orthonormal basis of su(m) under <X,Y> = -Re tr(XY)."""
    rt2 = math.sqrt(2.0)
    out = []
    for j in range(m):
        for k in range(j + 1, m):
            a = np.zeros((m, m), dtype=complex)
            a[j, k] = 1.0
            a[k, j] = -1.0
            out.append(a / rt2)
            s = np.zeros((m, m), dtype=complex)
            s[j, k] = 1j
            s[k, j] = 1j
            out.append(s / rt2)
    for l in range(1, m):
        # diagonal direction (1, ..., 1, -l, 0, ..., 0) * i, norm sqrt(l + l^2)
        v = np.zeros(m)
        v[:l] = 1.0
        v[l] = -l
        out.append(1j * np.diag(v).astype(complex) / math.sqrt(l + l * l))
    return out


def _so_basis(m: int) -> list:
    rt2 = math.sqrt(2.0)
    out = []
    for j in range(m):
        for k in range(j + 1, m):
            a = np.zeros((m, m), dtype=complex)
            a[j, k] = 1.0
            a[k, j] = -1.0
            out.append(a / rt2)
    return out


def _sp_basis(n: int) -> list:
    """Orthonormal basis of sp(n) inside u(2n): X = [[P, Q], [-Q*, -P^T]]
    with P anti-Hermitian and Q complex symmetric."""
    big = 2 * n
    rt2 = math.sqrt(2.0)

    def embed_p(pmat):
        x = np.zeros((big, big), dtype=complex)
        x[:n, :n] = pmat
        x[n:, n:] = -pmat.T
        return x

    def embed_q(qmat):
        x = np.zeros((big, big), dtype=complex)
        x[:n, n:] = qmat
        x[n:, :n] = -qmat.conj().T
        return x

    out = []
    for j in range(n):
        p = np.zeros((n, n), dtype=complex)
        p[j, j] = 1j
        out.append(embed_p(p) / rt2)
    for j in range(n):
        for k in range(j + 1, n):
            p = np.zeros((n, n), dtype=complex)
            p[j, k] = 1.0
            p[k, j] = -1.0
            out.append(embed_p(p) / 2.0)
            p = np.zeros((n, n), dtype=complex)
            p[j, k] = 1j
            p[k, j] = 1j
            out.append(embed_p(p) / 2.0)
    for j in range(n):
        q = np.zeros((n, n), dtype=complex)
        q[j, j] = 1.0
        out.append(embed_q(q) / rt2)
        q = np.zeros((n, n), dtype=complex)
        q[j, j] = 1j
        out.append(embed_q(q) / rt2)
    for j in range(n):
        for k in range(j + 1, n):
            q = np.zeros((n, n), dtype=complex)
            q[j, k] = 1.0
            q[k, j] = 1.0
            out.append(embed_q(q) / 2.0)
            q = np.zeros((n, n), dtype=complex)
            q[j, k] = 1j
            q[k, j] = 1j
            out.append(embed_q(q) / 2.0)
    return out


def _vecs(tensor: np.ndarray) -> np.ndarray:
    """Stack of real flattenings, one row per matrix."""
    d = tensor.shape[0]
    return np.concatenate(
        [tensor.real.reshape(d, -1), tensor.imag.reshape(d, -1)], axis=1
    )


def _sigma_data(family: SpaceFamily) -> tuple:
    """(conjugate_entries, M) with sigma(X) = M @ op(X) @ M*."""
    tag = family.tag
    if tag in ("AI", "GRP_a"):
        return True, _eye(family.ambient_dim)
    if tag == "AII":
        return True, _j_matrix(family.p + family.q)
    if tag == "AIII":
        return False, _signature(family.n, family.n)
    if tag == "BDI_rank1":
        return False, _signature(family.p, family.q)
    if tag == "BDI_split":
        return False, _signature(family.n, family.n)
    if tag == "DIII":
        return False, _j_matrix(2 * family.n)
    if tag == "CI":
        return False, _j_matrix(family.n)
    if tag == "CII":
        d = _signature(family.n, family.n)
        m = np.zeros((4 * family.n, 4 * family.n), dtype=complex)
        m[: 2 * family.n, : 2 * family.n] = d
        m[2 * family.n :, 2 * family.n :] = d
        return False, m
    if tag == "GRP_bd":
        return False, _signature(1, family.n - 1)
    if tag == "GRP_c":
        return False, _j_matrix(family.n)
    if tag == "GRP_d":
        return False, _signature(family.n, family.n)
    raise AssertionError(tag)


@dataclass(frozen=True, eq=False, repr=False)
class SpaceInstance:
    """A realized symmetric space: ambient size, orthonormal basis of g,
    the involution, dimension split, and group-theoretic side data.

    basis_tensor stacks the basis as a (dim_g, N, N) array; basis_vecs
    holds the matching real flattenings, so coordinates of X in the basis
    are basis_vecs @ mat_to_vec(X)."""

    family: SpaceFamily
    ambient_dim: int
    basis_tensor: np.ndarray
    basis_vecs: np.ndarray
    sigma_conj: bool
    sigma_matrix: np.ndarray
    sigma_coords: np.ndarray
    k_dim: int
    p_dim: int
    center_order: int | None
    center_provenance: str
    cover_multiplier: int

    @property
    def dim_g(self) -> int:
        return self.basis_tensor.shape[0]

    @property
    def g_basis(self) -> tuple:
        return tuple(self.basis_tensor[i] for i in range(self.dim_g))

    def apply_sigma(self, x) -> np.ndarray:
        m = ensure_square(x)
        if m.shape[0] != self.ambient_dim:
            raise DimensionMismatchError(
                f"{self.family}: expected size {self.ambient_dim}, got {m.shape[0]}"
            )
        core = m.conj() if self.sigma_conj else m
        return self.sigma_matrix @ core @ self.sigma_matrix.conj().T

    def to_coords(self, x) -> np.ndarray:
        return self.basis_vecs @ mat_to_vec(x)

    def from_coords(self, coords) -> np.ndarray:
        return np.tensordot(np.asarray(coords, dtype=float), self.basis_tensor, axes=1)

    def algebra_residual(self, x) -> float:
        """Max-norm distance from x to the span of the basis."""
        m = ensure_square(x)
        return float(np.max(np.abs(m - self.from_coords(self.to_coords(m)))))

    def contains_tangent(self, x, eps: float | None = None) -> bool:
        """True iff x lies in p: in the algebra and sigma(x) = -x."""
        tol = resolve_eps(eps)
        m = ensure_square(x)
        if self.algebra_residual(m) > tol * (1.0 + float(np.max(np.abs(m)))):
            return False
        return float(np.max(np.abs(self.apply_sigma(m) + m))) <= tol * (
            1.0 + float(np.max(np.abs(m)))
        )

    def __repr__(self) -> str:
        return (
            f"SpaceInstance({self.family.label()}, ambient={self.ambient_dim}, "
            f"dim_g={self.dim_g}, dim_k={self.k_dim}, dim_p={self.p_dim})"
        )


def _center_data(family: SpaceFamily) -> tuple:
    """(order or None, provenance note)."""
    tag = family.tag
    if tag == "GRP_a":
        m = family.p + family.q
        return m, f"center of the simply connected SU({m}) is Z_{m}"
    if tag == "GRP_c":
        return 2, f"center of Sp({family.n}) is Z_2"
    if tag == "GRP_bd":
        n = family.n
        if n % 2 == 1:
            return 2, f"center of Spin({n}) for odd n is Z_2"
        return 4, f"center of Spin({n}) for even n has order 4"
    if tag == "GRP_d":
        n = 2 * family.n
        return 4, f"center of Spin({n}) for even n has order 4"
    if tag == "AI" and family.p + family.q == 6:
        return 3, "isometry group SU(6)/Z_2 has center of order 3"
    return None, "not configured"


def build_space(family: SpaceFamily) -> SpaceInstance:
    """Assemble the matrix realization of a family member.

    The basis is orthonormal for <X,Y> = -Re tr(XY), so the involution
    becomes a symmetric orthogonal matrix in coordinates and the k/p
    dimensions drop out of its trace.
    """
    tag = family.tag
    n_amb = family.ambient_dim
    if tag in ("AI", "AII", "AIII", "GRP_a"):
        basis = _su_basis(n_amb)
    elif tag in ("BDI_rank1", "BDI_split", "DIII", "GRP_bd", "GRP_d"):
        basis = _so_basis(n_amb)
    elif tag in ("CI", "CII", "GRP_c"):
        basis = _sp_basis(n_amb // 2)
    else:
        raise AssertionError(tag)

    tensor = np.stack(basis)
    vecs = _vecs(tensor)
    conj, smat = _sigma_data(family)
    core = tensor.conj() if conj else tensor
    sig_tensor = smat @ core @ smat.conj().T
    sigma_coords = vecs @ _vecs(sig_tensor).T

    d = tensor.shape[0]
    trace = float(np.trace(sigma_coords))
    k_dim_f = (d + trace) / 2.0
    k_dim = int(round(k_dim_f))
    if abs(k_dim_f - k_dim) > 1e-6:
        raise SpindleError(
            f"{family}: involution trace {trace} does not give an integral k-dimension"
        )

    order, provenance = _center_data(family)
    return SpaceInstance(
        family=family,
        ambient_dim=n_amb,
        basis_tensor=tensor,
        basis_vecs=vecs,
        sigma_conj=conj,
        sigma_matrix=smat,
        sigma_coords=sigma_coords,
        k_dim=k_dim,
        p_dim=d - k_dim,
        center_order=order,
        center_provenance=provenance,
        cover_multiplier=family.cover_multiplier,
    )


def canonical_element(family: SpaceFamily) -> np.ndarray:
    """The distinguished tangent element of extrinsically symmetric type.

    Diagonal phase families get i*diag(a I_p, b I_q) with a = -q/(p+q),
    b = p/(p+q) (duplicated across both blocks for AII); the rest are the
    standard half-swap, rank-one rotation, or J-block matrices.
    """
    tag = family.tag
    n_amb = family.ambient_dim
    if tag in ("AI", "GRP_a", "AII"):
        p, q = family.p, family.q
        a = -q / (p + q)
        b = p / (p + q)
        diag = np.concatenate([np.full(p, a), np.full(q, b)])
        if tag == "AII":
            diag = np.concatenate([diag, diag])
        return 1j * np.diag(diag).astype(complex)
    if tag == "AIII":
        n = family.n
        xi = np.zeros((n_amb, n_amb), dtype=complex)
        xi[:n, n:] = np.eye(n)
        xi[n:, :n] = np.eye(n)
        return 0.5j * xi
    if tag in ("BDI_rank1", "GRP_bd"):
        p = family.p if tag == "BDI_rank1" else 1
        xi = np.zeros((n_amb, n_amb), dtype=complex)
        xi[0, p] = 1.0
        xi[p, 0] = -1.0
        return xi
    if tag in ("BDI_split", "GRP_d"):
        return 0.5 * _j_matrix(family.n)
    if tag == "DIII":
        n = family.n
        xi = np.zeros((n_amb, n_amb), dtype=complex)
        xi[: 2 * n, : 2 * n] = _j_matrix(n)
        xi[2 * n :, 2 * n :] = -_j_matrix(n)
        return 0.5 * xi
    if tag in ("CI", "GRP_c"):
        n = family.n
        return 0.5j * _signature(n, n)
    if tag == "CII":
        n = family.n
        xi = np.zeros((n_amb, n_amb), dtype=complex)
        for row, col in ((0, 3), (1, 2), (2, 1), (3, 0)):
            xi[row * n : (row + 1) * n, col * n : (col + 1) * n] = np.eye(n)
        return 0.5j * xi
    raise AssertionError(tag)


def _block_dets_are_one(g: np.ndarray, sizes: tuple, eps: float) -> bool:
    start = 0
    for size in sizes:
        block = g[start : start + size, start : start + size]
        if abs(np.linalg.det(block) - 1.0) > max(eps, 1e-9):
            return False
        start += size
    return True


def _commutes(a: np.ndarray, b: np.ndarray, eps: float) -> bool:
    return float(np.max(np.abs(a @ b - b @ a))) <= eps


def isotropy_contains(space: SpaceInstance, g, eps: float | None = None) -> bool:
    """Membership of a unitary g in the isotropy subgroup K (for group
    families: the condition g^2 = I equivalent to exp(t xi) = exp(-t xi))."""
    tol = resolve_eps(eps)
    m = ensure_square(g)
    if m.shape[0] != space.ambient_dim:
        raise DimensionMismatchError(
            f"{space.family}: expected size {space.ambient_dim}, got {m.shape[0]}"
        )
    if not is_unitary(m, tol):
        raise NotUnitaryError(f"{space.family}: isotropy test requires a unitary matrix")

    family = space.family
    tag = family.tag
    n_amb = space.ambient_dim

    if tag in GROUP_FAMILIES:
        return float(np.max(np.abs(m @ m - np.eye(n_amb)))) <= tol

    if tag == "AI":
        return is_real_matrix(m, tol) and abs(np.linalg.det(m) - 1.0) <= max(tol, 1e-9)
    if tag == "AII":
        j = _j_matrix(family.p + family.q)
        return float(np.max(np.abs(m @ j - j @ m.conj()))) <= tol
    if tag == "AIII":
        s = _signature(family.n, family.n)
        return _commutes(m, s, tol) and abs(np.linalg.det(m) - 1.0) <= max(tol, 1e-9)
    if tag == "BDI_rank1":
        s = _signature(family.p, family.q)
        return (
            is_real_matrix(m, tol)
            and _commutes(m, s, tol)
            and _block_dets_are_one(m, (family.p, family.q), tol)
        )
    if tag == "BDI_split":
        n = family.n
        s = _signature(n, n)
        return (
            is_real_matrix(m, tol)
            and _commutes(m, s, tol)
            and _block_dets_are_one(m, (n, n), tol)
        )
    if tag == "DIII":
        return is_real_matrix(m, tol) and _commutes(m, _j_matrix(2 * family.n), tol)
    if tag == "CI":
        return is_real_matrix(m, tol) and _commutes(m, _j_matrix(family.n), tol)
    if tag == "CII":
        n = family.n
        j = _j_matrix(2 * n)
        symplectic = float(np.max(np.abs(m.T @ j @ m - j))) <= tol
        _, s = _sigma_data(family)
        return symplectic and _commutes(m, s, tol)
    raise AssertionError(tag)


def stated_membership(family: SpaceFamily, t: RationalAngle) -> bool:
    """The family's published membership condition for exp(t*xi), decided
    in exact rational arithmetic.

    Diagonal-phase types: t*a and t*b in pi*Z. Half-angle quotient types
    and GRP_c/GRP_d: t in 2*pi*Z, with the extra block-determinant parity
    for the split orthogonal family. Rank-one rotation: t in 2*pi*Z
    (block dets rule out odd multiples of pi); group rotation: t in pi*Z.
    """
    tag = family.tag
    f = t.fraction
    if tag in ("AI", "AII", "GRP_a"):
        p, q = family.p, family.q
        return (f * q) % (p + q) == 0 and (f * p) % (p + q) == 0
    if tag in ("AIII", "DIII", "CI", "CII", "GRP_c", "GRP_d"):
        return f % 2 == 0
    if tag == "BDI_rank1":
        return f % 2 == 0
    if tag == "BDI_split":
        if f % 2 != 0:
            return False
        return family.n % 2 == 0 or f % 4 == 0
    if tag == "GRP_bd":
        return f % 1 == 0
    raise AssertionError(tag)


def sweep_families(cap: int) -> Iterator[SpaceFamily]:
    """All valid families with every parameter <= cap, in catalog order."""
    if cap < 1:
        raise ParameterError(f"parameter cap must be >= 1, got {cap}")
    for tag in FAMILY_TAGS:
        if tag in PQ_FAMILIES:
            for p in range(1, cap + 1):
                for q in range(p, cap + 1):
                    try:
                        yield SpaceFamily.make(tag, p, q)
                    except ParameterError:
                        continue
        else:
            for n in range(1, cap + 1):
                try:
                    yield SpaceFamily.make(tag, n)
                except ParameterError:
                    continue


def catalog_entry(space: SpaceInstance) -> dict:
    """JSON-ready description of one catalog row."""
    family = space.family
    return {
        "family": family.tag,
        "params": list(family.params),
        "space": family.space_name(),
        "orbit": family.orbit_name(),
        "ambient_dim": space.ambient_dim,
        "dim_g": space.dim_g,
        "dim_k": space.k_dim,
        "dim_p": space.p_dim,
        "center_order": space.center_order,
        "center_provenance": space.center_provenance,
        "cover_multiplier": space.cover_multiplier,
        "closed_form": family.closed_form,
    }
