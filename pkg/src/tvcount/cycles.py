"""Closed-form cycle classes for the graph closure of the transvectant map.

All classes live in the Chow ring of P^m x P^n x P^(m+n-2), i.e. caps
(m, n, m+n-2); z1, z2, z3 are the pulled-back hyperplane classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .ring import RingSpec, TruncatedPolynomial, geometric_inverse


@dataclass(frozen=True)
class PowerSumProblem:
    """Validated tuple (m, n, a, b, d) with a*m == b*n == d, gcd(m, n) in
    {1, 2}, and m <= n.  Use counting.validate() to build one from raw input
    (it also performs the m <= n normalization)."""

    m: int
    n: int
    a: int
    b: int
    d: int

    def __post_init__(self) -> None:
        for name in ("m", "n", "a", "b", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.a * self.m != self.d or self.b * self.n != self.d:
            raise ValueError(f"need a*m == b*n == d, got a*m={self.a * self.m}, b*n={self.b * self.n}, d={self.d}")
        if self.m > self.n:
            raise ValueError(f"need m <= n, got m={self.m}, n={self.n} (normalize by swapping (m,a) and (n,b))")
        if self.gcd > 2:
            raise ValueError(f"unsupported gcd(m, n) = {self.gcd}; only 1 and 2 are supported")

    @property
    def gcd(self) -> int:
        return math.gcd(self.m, self.n)

    @property
    def degenerate(self) -> bool:
        """True when a == 1 or b == 1: the locus is the whole ambient space,
        but the intersection product still evaluates."""
        return self.a == 1 or self.b == 1


def ambient_spec(m: int, n: int) -> RingSpec:
    """Caps (m, n, m+n-2) of the ambient product of projective spaces."""
    return RingSpec((m, n, m + n - 2))


def _two_var_spec(r_needed: int, spec: RingSpec | None) -> RingSpec:
    if spec is None:
        return RingSpec((r_needed, r_needed))
    if spec.nvars != 2:
        raise ValueError("need a two-variable ring (lambda, zeta)")
    if min(spec.caps) < r_needed:
        raise ValueError(f"caps {spec.caps} too small to hold degree-{r_needed} terms")
    return spec


def blowup_class_S(r: int, spec: RingSpec | None = None) -> TruncatedPolynomial:
    """Class of the blow-up along a codimension-r common vanishing locus of
    r sections: [(1+lam)^r / (1+lam-zeta)]_(r-1).

    Equals the closed sum lam^(r-1) + lam^(r-2)*zeta + ... + zeta^(r-1).
    Variables: (lam, zeta) = spec.variables(); default caps (r-1, r-1).
    """
    r = int(r)
    if r < 1:
        raise ValueError("r must be at least 1")
    spec = _two_var_spec(r - 1, spec)
    lam, zeta = spec.variables()
    series = geometric_inverse(lam - zeta)
    return ((1 + lam) ** r * series).homogeneous_part(r - 1)


def top_chern_class_T(r: int, spec: RingSpec | None = None) -> TruncatedPolynomial:
    """Top Chern class term [(1+lam)^(r+1) / (1+lam-zeta)]_r of the rank-r
    bundle cut out by r+1 sections, before the excess-component subtraction.

    Coincides with blowup_class_S(r+1) read one degree up.
    """
    r = int(r)
    if r < 1:
        raise ValueError("r must be at least 1")
    spec = _two_var_spec(r, spec)
    lam, zeta = spec.variables()
    series = geometric_inverse(lam - zeta)
    return ((1 + lam) ** (r + 1) * series).homogeneous_part(r)


def beta_pushforward(m: int, n: int) -> TruncatedPolynomial:
    """Fundamental class of the (normalized) graph closure of the
    transvectant map, pushed to P^m x P^n x P^(m+n-2).

    gcd(m, n) == 1:  sum_{i=0}^{m+n-2} (z1+z2)^i * z3^(m+n-2-i), which equals
    the series form [(1+z1+z2)^(m+n-1) / (1+z1+z2-z3)]_(m+n-2); both are
    computed and cross-checked on every call.

    gcd(m, n) == 2:  the same base class minus the excess contribution
    2^(m-2) * ((m/2)^2 z1^(m-2) z2^n + (m/2)(n/2) z1^(m-1) z2^(n-1)
               + (n/2)^2 z1^m z2^(n-2))
    of the locus of pairs of powers of a common quadratic.  Among the
    candidate exponent layouts for the middle terms, this is the only one
    that is homogeneous of degree m+n-2 with exponents within caps, and it
    reproduces the classical counts 3762 and 626327.
    """
    m, n = int(m), int(n)
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m > n:
        raise ValueError(f"need m <= n, got ({m}, {n}); normalize first")
    g = math.gcd(m, n)
    if g > 2:
        raise ValueError(f"unsupported gcd(m, n) = {g}; only 1 and 2 are supported")

    spec = ambient_spec(m, n)
    z1, z2, z3 = spec.variables()
    s = z1 + z2
    top = m + n - 2

    total = spec.zero()
    s_pow = spec.one()
    for i in range(top + 1):
        total = total + s_pow * z3 ** (top - i)
        s_pow = s_pow * s

    series = geometric_inverse(s - z3, up_to_degree=top)
    quotient_form = ((1 + s) ** (m + n - 1) * series).homogeneous_part(top)
    assert quotient_form == total, "series and explicit-sum forms disagree"

    if g == 2:
        e = 2 ** (m - 2)
        half_m, half_n = m // 2, n // 2
        correction = (
            spec.monomial((m - 2, n, 0), e * half_m * half_m)
            + spec.monomial((m - 1, n - 1, 0), e * half_m * half_n)
            + spec.monomial((m, n - 2, 0), e * half_n * half_n)
        )
        total = total - correction
    return total


def alpha_classes(problem: PowerSumProblem) -> tuple[TruncatedPolynomial, TruncatedPolynomial]:
    """The two classes substituting for the Chern classes of the tautological
    rank-2 bundle: alpha1 of degree 1 and alpha2 of degree 2."""
    spec = ambient_spec(problem.m, problem.n)
    z1, z2, z3 = spec.variables()
    a, b = problem.a, problem.b
    alpha1 = (1 - a) * z1 + (1 - b) * z2 - z3
    alpha2 = (-a) * (z1 * (z1 + (1 - b) * z2 - z3))
    return alpha1, alpha2


def gamma_class(problem: PowerSumProblem) -> TruncatedPolynomial:
    """Degree-(m+n) part of the inverted total Chern series
    sum_i (-alpha1 - alpha2)^i.

    Computed both as a homogeneous part of the geometric series and as the
    multinomial sum over i + 2j = m+n of (-1)^(i+j) C(i+j, i) alpha1^i alpha2^j;
    the two are cross-checked on every call.
    """
    alpha1, alpha2 = alpha_classes(problem)
    spec = alpha1.spec
    deg = problem.m + problem.n

    from_series = geometric_inverse(alpha1 + alpha2, up_to_degree=deg).homogeneous_part(deg)

    a1_pows = [spec.one()]
    for _ in range(deg):
        a1_pows.append(a1_pows[-1] * alpha1)
    a2_pows = [spec.one()]
    for _ in range(deg // 2):
        a2_pows.append(a2_pows[-1] * alpha2)

    from_sum = spec.zero()
    for j in range(deg // 2 + 1):
        i = deg - 2 * j
        coeff = (-1) ** (i + j) * math.comb(i + j, i)
        from_sum = from_sum + coeff * (a1_pows[i] * a2_pows[j])
    assert from_series == from_sum, "series and multinomial forms disagree"
    return from_series
