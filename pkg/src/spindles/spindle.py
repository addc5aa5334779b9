"""Spindle-number mathematics on top of the space catalog.

Given a space and a tangent element xi, this module computes the
frequency decomposition of ad(xi), decides canonicality and
extrinsically symmetric type, splits k and p into eigenspaces, evaluates
variation-field norms along the distinguished geodesic, classifies
slices into knots/centrioles/regular levels, and computes the spindle
number by two independent methods that are asserted to agree:

  * exact: the published membership condition at t = n*pi, evaluated in
    integer arithmetic and searched for the least n;
  * numeric: eigendecompose xi, scan g = exp(n*pi*xi) against the
    isotropy predicate up to a termination bound derived from the
    rational eigenphases of xi.

A third pure-arithmetic route (closed_form_lambda) gives the published
table value directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DegenerateElementError,
    DimensionMismatchError,
    IrrationalRatioError,
    MembershipSearchError,
    MethodDisagreementError,
    NotCanonicalError,
    NotInTangentSpaceError,
    ParameterError,
    SpectrumBucketingError,
)
from .linalg import RationalAngle, ensure_square, exp_generic, rationalize, resolve_eps
from .spaces import (
    SpaceFamily,
    SpaceInstance,
    canonical_element,
    isotropy_contains,
    stated_membership,
)

# Frequencies are eigenvalues of a symmetric matrix of desk-scale size;
# bucketing is looser than the global eps because eigensolver error grows
# with dim g. Zero detection is looser still: near-zero eigenvalues of
# ad(xi)^2 pass through a square root that amplifies roundoff.
BUCKET_TOL = 1e-6
ZERO_FREQ_TOL = 1e-5

# Denominator cap when identifying frequency ratios as rationals. Catalog
# ratios are tiny; a sqrt(2) ratio must NOT sneak through as 99/70.
MAX_RATIO_DENOMINATOR = 64


@dataclass(frozen=True)
class AdSpectrum:
    """Distinct frequencies nu_0 = 0 < nu_1 < ... of ad(xi) with the
    dimension each eigenspace contributes to k and to p."""

    frequencies: tuple
    mult_k: tuple
    mult_p: tuple

    def __post_init__(self):
        if not (len(self.frequencies) == len(self.mult_k) == len(self.mult_p)):
            raise DimensionMismatchError("spectrum fields must have equal length")

    @property
    def positive_frequencies(self) -> tuple:
        return tuple(nu for nu in self.frequencies if nu > 0)

    @property
    def positive_mult_p(self) -> tuple:
        return tuple(m for nu, m in zip(self.frequencies, self.mult_p) if nu > 0)

    @property
    def positive_mult_k(self) -> tuple:
        return tuple(m for nu, m in zip(self.frequencies, self.mult_k) if nu > 0)

    @property
    def dim_k(self) -> int:
        return int(sum(self.mult_k))

    @property
    def dim_p(self) -> int:
        return int(sum(self.mult_p))

    @property
    def orbit_dim(self) -> int:
        """dim p_minus, the tangent dimension of the isotropy orbit."""
        return int(sum(self.positive_mult_p))


@dataclass(frozen=True, eq=False)
class CartanSplit:
    """Orthonormal bases of k_plus, p_plus and the per-frequency pieces
    k_nu, p_nu; matrices are stacked along the first axis."""

    frequencies: tuple
    k_plus: np.ndarray
    p_plus: np.ndarray
    k_nu: tuple
    p_nu: tuple

    @property
    def positive_frequencies(self) -> tuple:
        return tuple(self.frequencies[1:])

    @property
    def positive_mult_p(self) -> tuple:
        return tuple(b.shape[0] for b in self.p_nu)

    @property
    def k_minus(self) -> np.ndarray:
        if not self.k_nu:
            return np.zeros((0,) + self.k_plus.shape[1:], dtype=complex)
        return np.concatenate(self.k_nu, axis=0)

    @property
    def p_minus(self) -> np.ndarray:
        if not self.p_nu:
            return np.zeros((0,) + self.p_plus.shape[1:], dtype=complex)
        return np.concatenate(self.p_nu, axis=0)


def ad_matrix(space: SpaceInstance, xi, eps: float | None = None) -> np.ndarray:
    """Real matrix of ad(xi) on g in the orthonormal basis (antisymmetric
    for xi in g). Requires xi in p."""
    m = ensure_square(xi)
    if not space.contains_tangent(m, eps):
        raise NotInTangentSpaceError(
            f"{space.family}: element is not in the (-1) eigenspace of the involution"
        )
    brackets = m[None, :, :] @ space.basis_tensor - space.basis_tensor @ m[None, :, :]
    d = space.dim_g
    cols = np.concatenate(
        [brackets.real.reshape(d, -1), brackets.imag.reshape(d, -1)], axis=1
    )
    return space.basis_vecs @ cols.T


def _bucket(values: np.ndarray, tol: float) -> list:
    """Group ascending values into clusters separated by gaps > tol."""
    groups = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            groups.append((start, i))
            start = i
    return groups


def _spectrum_from_ad(space: SpaceInstance, admat: np.ndarray) -> AdSpectrum:
    d = space.dim_g
    sq = -(admat @ admat)
    w, u = np.linalg.eigh((sq + sq.T) / 2.0)
    nu = np.sqrt(np.clip(w, 0.0, None))

    zero_count = int(np.sum(nu <= ZERO_FREQ_TOL))
    frequencies = [0.0]
    column_groups = [np.arange(zero_count)]
    positives = nu[zero_count:]
    for a, b in _bucket(positives, BUCKET_TOL):
        chunk = positives[a:b]
        if chunk[-1] - chunk[0] > BUCKET_TOL:
            raise SpectrumBucketingError(
                f"{space.family}: frequency cluster [{chunk[0]}, {chunk[-1]}] wider than {BUCKET_TOL}"
            )
        center = float(np.mean(chunk))
        snapped = float(round(center))
        if abs(center - snapped) <= BUCKET_TOL and snapped > 0:
            center = snapped
        if center <= ZERO_FREQ_TOL:
            raise SpectrumBucketingError(
                f"{space.family}: positive frequency {center} below the zero threshold"
            )
        frequencies.append(center)
        column_groups.append(np.arange(zero_count + a, zero_count + b))

    mult_k = []
    mult_p = []
    s = space.sigma_coords
    for cols in column_groups:
        size = len(cols)
        if size == 0:
            mult_k.append(0)
            mult_p.append(0)
            continue
        ub = u[:, cols]
        t = ub.T @ s @ ub
        k_f = (size + float(np.trace(t))) / 2.0
        k_count = int(round(k_f))
        if abs(k_f - k_count) > 1e-6:
            raise SpectrumBucketingError(
                f"{space.family}: involution does not split a frequency cluster integrally "
                f"(got k-multiplicity {k_f})"
            )
        mult_k.append(k_count)
        mult_p.append(size - k_count)

    spec = AdSpectrum(tuple(frequencies), tuple(mult_k), tuple(mult_p))
    if spec.dim_k != space.k_dim or spec.dim_p != space.p_dim:
        raise SpectrumBucketingError(
            f"{space.family}: multiplicities sum to ({spec.dim_k}, {spec.dim_p}), "
            f"expected ({space.k_dim}, {space.p_dim})"
        )
    return spec


def ad_spectrum(space: SpaceInstance, xi, eps: float | None = None) -> AdSpectrum:
    """Frequencies of ad(xi) with k/p multiplicities.

    Eigenvalues of ad(xi) come in pairs +-i*nu; the computation
    diagonalizes -ad(xi)^2, buckets the square roots with BUCKET_TOL,
    snaps near-integer bucket means, and splits each eigenspace between
    k and p by the trace of the conjugated involution.
    """
    return _spectrum_from_ad(space, ad_matrix(space, xi, eps))


def is_canonical(spec: AdSpectrum, tol: float = BUCKET_TOL) -> bool:
    """True iff every frequency is within tol of an integer and the
    nonzero integers are relatively prime."""
    positives = spec.positive_frequencies
    if not positives:
        raise DegenerateElementError(
            "ad(xi) has no nonzero frequency; no canonical normalization exists"
        )
    ints = []
    for nu in positives:
        k = round(nu)
        if abs(nu - k) > tol or k < 1:
            return False
        ints.append(int(k))
    return math.gcd(*ints) == 1


def integer_frequencies(spec: AdSpectrum, tol: float = BUCKET_TOL) -> tuple:
    """Positive frequencies as exact integers; requires a canonical spectrum."""
    if not is_canonical(spec, tol):
        raise NotCanonicalError(f"spectrum {spec.frequencies} is not canonical")
    return tuple(int(round(nu)) for nu in spec.positive_frequencies)


def normalize_canonical(space: SpaceInstance, xi, eps: float | None = None) -> np.ndarray:
    """Rescale xi by c > 0 so that the frequencies become relatively
    prime integers; returns xi unchanged if it already is canonical.

    Raises IrrationalRatioError when the frequency ratios are not
    identifiable as small rationals: no rescaling makes them integers.
    """
    m = ensure_square(xi)
    spec = ad_spectrum(space, m, eps)
    positives = spec.positive_frequencies
    if not positives:
        raise DegenerateElementError(
            "ad(xi) has no nonzero frequency; no canonical normalization exists"
        )
    base = positives[0]
    try:
        ratios = [rationalize(nu / base, MAX_RATIO_DENOMINATOR, BUCKET_TOL) for nu in positives]
    except Exception as exc:
        raise IrrationalRatioError(
            f"frequency ratios of {positives} are not rational within {BUCKET_TOL}"
        ) from exc
    common = math.lcm(*(r.denominator for r in ratios))
    numerators = [int(r * common) for r in ratios]
    g = math.gcd(*numerators)
    targets = [v // g for v in numerators]
    c = targets[0] / base
    for nu, target in zip(positives, targets):
        if abs(c * nu - target) > BUCKET_TOL:
            raise IrrationalRatioError(
                f"frequencies {positives} admit no common integer rescaling "
                f"(residual at target {target})"
            )
    if c == 1.0:
        return m
    return c * m


def is_extrinsically_symmetric_type(space: SpaceInstance, xi, eps: float | None = None) -> bool:
    """True iff ad(xi)^3 = -ad(xi) as operators on g, i.e. the only
    frequencies are 0 and 1."""
    a = ad_matrix(space, xi, eps)
    residual = a @ a @ a + a
    return float(np.max(np.abs(residual))) <= resolve_eps(eps)


def cartan_split(space: SpaceInstance, xi, eps: float | None = None) -> CartanSplit:
    """Orthonormal bases of k_plus, p_plus, k_nu, p_nu.

    Works inside coordinates: each frequency cluster of -ad(xi)^2 is
    intersected with the +-1 eigenspaces of the involution, then mapped
    back to matrices.
    """
    admat = ad_matrix(space, xi, eps)
    spec = _spectrum_from_ad(space, admat)
    if not is_canonical(spec):
        raise NotCanonicalError(
            f"{space.family}: cartan_split requires a canonical element, "
            f"got frequencies {spec.frequencies}"
        )

    sq = -(admat @ admat)
    w, u = np.linalg.eigh((sq + sq.T) / 2.0)
    nu = np.sqrt(np.clip(w, 0.0, None))
    s = space.sigma_coords

    def split_cluster(cols: np.ndarray) -> tuple:
        ub = u[:, cols]
        t = ub.T @ s @ ub
        tw, tv = np.linalg.eigh((t + t.T) / 2.0)
        k_cols = ub @ tv[:, tw > 0.0]
        p_cols = ub @ tv[:, tw <= 0.0]
        return k_cols, p_cols

    def to_matrices(coord_cols: np.ndarray) -> np.ndarray:
        if coord_cols.shape[1] == 0:
            return np.zeros((0, space.ambient_dim, space.ambient_dim), dtype=complex)
        return np.tensordot(coord_cols.T, space.basis_tensor, axes=1)

    zero_cols = np.flatnonzero(nu <= ZERO_FREQ_TOL)
    k0, p0 = split_cluster(zero_cols)
    k_nu = []
    p_nu = []
    for freq in spec.frequencies[1:]:
        cols = np.flatnonzero(np.abs(nu - freq) <= max(BUCKET_TOL, ZERO_FREQ_TOL))
        kc, pc = split_cluster(cols)
        k_nu.append(to_matrices(kc))
        p_nu.append(to_matrices(pc))

    return CartanSplit(
        frequencies=spec.frequencies,
        k_plus=to_matrices(k0),
        p_plus=to_matrices(p0),
        k_nu=tuple(k_nu),
        p_nu=tuple(p_nu),
    )


def _positive_data(source) -> tuple:
    """(positive frequencies, positive p-multiplicities) from either an
    AdSpectrum or a CartanSplit."""
    return tuple(source.positive_frequencies), tuple(source.positive_mult_p)


def jacobi_norm_sq(spec: AdSpectrum, components: Sequence, t) -> float:
    """Squared norm of the variation field with the given per-frequency
    component norms |X_nu|^2 at parameter t:

        sum_j sin(nu_j t)^2 / nu_j^2 * |X_nu_j|^2

    (cross terms vanish: parallel transport keeps the components
    orthogonal). t may be a float or a RationalAngle; with a rational t
    and integer frequencies the sines at lattice points are exact."""
    freqs = spec.positive_frequencies
    comps = [float(c) for c in components]
    if len(comps) != len(freqs):
        raise DimensionMismatchError(
            f"expected {len(freqs)} components (one per positive frequency), got {len(comps)}"
        )
    if any(c < 0 for c in comps):
        raise ParameterError("component norms must be non-negative")
    if not any(c > 0 for c in comps):
        raise ParameterError("at least one component norm must be positive")

    total = 0.0
    for freq, comp in zip(freqs, comps):
        if comp == 0.0:
            continue
        s = _sin_at(freq, t)
        total += (s * s) / (freq * freq) * comp
    return total


def _sin_at(freq: float, t) -> float:
    if isinstance(t, RationalAngle):
        k = round(freq)
        if abs(freq - k) <= BUCKET_TOL and k >= 1:
            return (t * int(k)).sin()
        return math.sin(freq * t.radians)
    return math.sin(freq * float(t))


def slice_dimension(source, t, eps: float | None = None) -> int:
    """Dimension of the slice at parameter t: the sum of dim p_nu over
    frequencies with sin(nu t) != 0. Accepts an AdSpectrum or a
    CartanSplit; t may be a float or a RationalAngle."""
    freqs, mults = _positive_data(source)
    tol = resolve_eps(eps)
    total = 0
    for freq, mult in zip(freqs, mults):
        if isinstance(t, RationalAngle):
            k = round(freq)
            if abs(freq - k) <= BUCKET_TOL and k >= 1:
                if not (t * int(k)).sin_is_zero:
                    total += mult
                continue
        if abs(math.sin(freq * (t.radians if isinstance(t, RationalAngle) else float(t)))) > tol:
            total += mult
    return int(total)


def classify_time(t, eps: float | None = None) -> str:
    """knot / centriole / regular for the slice at parameter t (knots at
    integer multiples of pi, centrioles halfway between)."""
    if isinstance(t, RationalAngle):
        if t.sin_is_zero:
            return "knot"
        if t.is_half_integer:
            return "centriole"
        return "regular"
    tol = resolve_eps(eps)
    ratio = float(t) / math.pi
    if abs(ratio - round(ratio)) <= tol:
        return "knot"
    if abs(ratio - math.floor(ratio) - 0.5) <= tol:
        return "centriole"
    return "regular"


def closed_form_lambda(family: SpaceFamily) -> int:
    """The published table value, as pure integer arithmetic."""
    tag = family.tag
    if tag in ("AI", "AII", "GRP_a"):
        d = math.gcd(family.p, family.q)
        return (family.p + family.q) // d
    if tag in ("AIII", "BDI_rank1", "DIII", "CI", "CII", "GRP_bd", "GRP_c"):
        return 2
    if tag == "BDI_split":
        return 2 if family.n % 2 == 0 else 4
    if tag == "GRP_d":
        return 4
    raise AssertionError(tag)


def method_exact(family: SpaceFamily) -> int:
    """Least n >= 1 with the published membership condition at t = n*pi,
    found by exact search, times the covering multiplier."""
    bound = 4 * sum(family.params) + 8
    for n in range(1, bound + 1):
        if stated_membership(family, RationalAngle(n)):
            return n * family.cover_multiplier
    raise MembershipSearchError(
        f"{family}: no membership at t = n*pi for n <= {bound}"
    )


def method_numeric(space: SpaceInstance, xi, eps: float | None = None) -> int:
    """Least n >= 1 with exp(n*pi*xi) accepted by the isotropy predicate,
    times the covering multiplier.

    The scan terminates: with D the least common denominator of the
    rational eigenphases of xi, exp(2*D*pi*xi) = I, so n_max = 2*D."""
    m = ensure_square(xi)
    w, v = np.linalg.eigh(-1j * m)
    phases = [rationalize(val) for val in w]
    d = math.lcm(*(f.denominator for f in phases))
    n_max = 2 * d
    vh = v.conj().T
    for n in range(1, n_max + 1):
        g = (v * np.exp(1j * n * math.pi * w)) @ vh
        if isotropy_contains(space, g, eps):
            return n * space.cover_multiplier
    raise MembershipSearchError(
        f"{space.family}: no return to the isotropy group within n_max = {n_max} "
        "(predicate inconsistent with the element)"
    )


def product_spindle(lambda1: int, lambda2: int) -> int:
    """Spindle number of a product with component values lambda1, lambda2."""
    l1, l2 = int(lambda1), int(lambda2)
    if l1 < 1 or l2 < 1:
        raise ParameterError(f"spindle numbers are >= 1, got {lambda1}, {lambda2}")
    return math.lcm(l1, l2)


def center_divisibility_check(lam: int, z: int) -> bool:
    """True iff lam divides 2z, and additionally divides z when odd."""
    l, order = int(lam), int(z)
    if l < 1 or order < 1:
        raise ParameterError(f"need positive integers, got lam={lam}, z={z}")
    if (2 * order) % l != 0:
        return False
    if l % 2 == 1 and order % l != 0:
        return False
    return True


def adjoint_conjugation_flags(space: SpaceInstance, xi, eps: float | None = None) -> tuple:
    """(order_two, commutes_with_involution) for conjugation by exp(pi*xi)
    acting on g.

    Both together certify that the corresponding element acts as an
    involution compatible with the symmetric structure, which forces
    spindle number 1 on the adjoint quotient of the same algebra."""
    tol = resolve_eps(eps)
    g = exp_generic(xi, math.pi, eps)
    conj = g[None, :, :] @ space.basis_tensor @ g.conj().T[None, :, :]
    d = space.dim_g
    cols = np.concatenate([conj.real.reshape(d, -1), conj.imag.reshape(d, -1)], axis=1)
    ad_g = space.basis_vecs @ cols.T
    order_two = float(np.max(np.abs(ad_g @ ad_g - np.eye(d)))) <= tol
    s = space.sigma_coords
    commutes = float(np.max(np.abs(s @ ad_g - ad_g @ s))) <= tol
    return order_two, commutes


def adjoint_space_check(
    space: SpaceInstance, xi, eps: float | None = None, require_canonical: bool = True
) -> bool:
    """Conjunction of the two adjoint-quotient criteria; by default the
    element must be canonical (pass require_canonical=False to probe the
    raw criteria, e.g. on xi/2 where the order-2 half fails)."""
    if require_canonical:
        spec = ad_spectrum(space, xi, eps)
        if not is_canonical(spec):
            raise NotCanonicalError(
                f"{space.family}: adjoint_space_check requires a canonical element"
            )
    order_two, commutes = adjoint_conjugation_flags(space, xi, eps)
    return order_two and commutes


@dataclass(frozen=True, eq=False)
class SpindleReport:
    """Everything the analysis of one (space, xi) produces."""

    family: SpaceFamily
    lambda_: int
    method_exact: int
    method_numeric: int
    frequencies: tuple
    mult_k: tuple
    mult_p: tuple
    dim_g: int
    dim_k: int
    dim_p: int
    orbit_dim: int
    extrinsically_symmetric: bool
    knot_times: tuple
    centriole_times: tuple
    slice_profile: tuple
    geodesic_length_over_norm: RationalAngle
    center_order: int | None
    cover_multiplier: int
    checks: Mapping

    def to_json_dict(self) -> dict:
        return {
            "family": self.family.tag,
            "params": list(self.family.params),
            "space": self.family.space_name(),
            "orbit": self.family.orbit_name(),
            "lambda": self.lambda_,
            "method_exact": self.method_exact,
            "method_numeric": self.method_numeric,
            "frequencies": [float(nu) for nu in self.frequencies],
            "mult_k": [int(v) for v in self.mult_k],
            "mult_p": [int(v) for v in self.mult_p],
            "dims": {
                "g": self.dim_g,
                "k": self.dim_k,
                "p": self.dim_p,
                "orbit": self.orbit_dim,
            },
            "extrinsically_symmetric": self.extrinsically_symmetric,
            "knot_times": [str(t) for t in self.knot_times],
            "centriole_times": [str(t) for t in self.centriole_times],
            "slice_profile": [
                {"t_over_pi": str(t.fraction), "dim": dim} for t, dim in self.slice_profile
            ],
            "geodesic_length_over_norm": str(self.geodesic_length_over_norm),
            "center_order": self.center_order,
            "cover_multiplier": self.cover_multiplier,
            "checks": dict(self.checks),
        }


def _report_checks(space, xi, spec, lam, ext_sym, exact, numeric, eps) -> dict:
    """The per-row verification flags carried on a report."""
    checks: dict = {}
    checks["canonical"] = True
    checks["extrinsically_symmetric_type"] = ext_sym
    checks["methods_agree"] = exact == numeric

    order_two, commutes = adjoint_conjugation_flags(space, xi, eps)
    checks["adjoint_order_two"] = order_two
    checks["adjoint_commutes_with_involution"] = commutes

    if space.center_order is None:
        checks["center_divides_double"] = None
    else:
        checks["center_divides_double"] = center_divisibility_check(lam, space.center_order)

    # Knot lattice: with unit components the variation norm vanishes
    # exactly on pi*Z. Grid of sixtieths over +-4 periods.
    comps = [1.0] * len(spec.positive_frequencies)
    lattice_ok = True
    for k in range(-240, 241):
        val = jacobi_norm_sq(spec, comps, k * math.pi / 60.0)
        if (val <= 1e-15) != (k % 60 == 0):
            lattice_ok = False
            break
    checks["jacobi_zero_iff_knot"] = lattice_ok

    dims = {k: slice_dimension(spec, k * math.pi / 60.0) for k in range(-240, 241)}
    checks["slice_zero_iff_knot"] = all(
        (dims[k] == 0) == (k % 60 == 0) for k in dims
    )
    if ext_sym:
        interior = {dims[k] for k in range(1, 60)}
        checks["slice_constant_between_knots"] = interior == {spec.orbit_dim}
    else:
        checks["slice_constant_between_knots"] = None

    knot_sym = True
    for center in range(-240, 241, 60):
        for off in range(0, 241):
            lo, hi = center - off, center + off
            if -240 <= lo and hi <= 240 and dims[lo] != dims[hi]:
                knot_sym = False
    checks["profile_symmetric_about_knots"] = knot_sym

    if ext_sym:
        cent_sym = True
        for center in range(-210, 241, 60):
            for off in range(0, 241):
                lo, hi = center - off, center + off
                if -240 <= lo and hi <= 240 and dims[lo] != dims[hi]:
                    cent_sym = False
        checks["profile_symmetric_about_centrioles"] = cent_sym
    else:
        checks["profile_symmetric_about_centrioles"] = None
    return checks


def spindle_number(space: SpaceInstance, xi=None, eps: float | None = None) -> SpindleReport:
    """Full spindle analysis of (space, xi); xi defaults to the family's
    canonical element. The exact and numeric methods must agree."""
    if xi is None:
        xi = canonical_element(space.family)
    m = ensure_square(xi)

    admat = ad_matrix(space, m, eps)
    spec = _spectrum_from_ad(space, admat)
    if not is_canonical(spec):
        raise NotCanonicalError(
            f"{space.family}: spindle_number requires a canonical element, "
            f"got frequencies {spec.frequencies}"
        )
    ext_sym = float(np.max(np.abs(admat @ admat @ admat + admat))) <= resolve_eps(eps)

    exact = method_exact(space.family)
    numeric = method_numeric(space, m, eps)
    if exact != numeric:
        raise MethodDisagreementError(
            f"{space.family}: exact method gives {exact}, numeric scan gives {numeric}"
        )
    lam = exact

    knots = tuple(RationalAngle(n) for n in range(lam))
    centrioles = tuple(RationalAngle(2 * n + 1, 2) for n in range(lam))
    profile = tuple(
        (RationalAngle(k, 12), slice_dimension(spec, RationalAngle(k, 12)))
        for k in range(12 * lam + 1)
    )

    checks = _report_checks(space, m, spec, lam, ext_sym, exact, numeric, eps)
    return SpindleReport(
        family=space.family,
        lambda_=lam,
        method_exact=exact,
        method_numeric=numeric,
        frequencies=spec.frequencies,
        mult_k=spec.mult_k,
        mult_p=spec.mult_p,
        dim_g=space.dim_g,
        dim_k=space.k_dim,
        dim_p=space.p_dim,
        orbit_dim=spec.orbit_dim,
        extrinsically_symmetric=ext_sym,
        knot_times=knots,
        centriole_times=centrioles,
        slice_profile=profile,
        geodesic_length_over_norm=RationalAngle(lam),
        center_order=space.center_order,
        cover_multiplier=space.cover_multiplier,
        checks=checks,
    )
