"""Shared test utilities: random exact-rational forms, admissible problem
enumeration, and structural-coefficient extraction for the transvectant."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from tvcount import BinaryForm, transvectant, validate


def rand_fraction(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-9, 9)
    if not zero_ok and num == 0:
        num = 1
    return Fraction(num, rng.randint(1, 4))


def rand_form(rng: random.Random, degree: int, zero_ok: bool = True) -> BinaryForm:
    coeffs = [rand_fraction(rng) for _ in range(degree + 1)]
    if not zero_ok and all(c == 0 for c in coeffs):
        coeffs[rng.randrange(degree + 1)] = Fraction(1)
    return BinaryForm(degree, coeffs)


def all_admissible(max_d: int):
    """Every validate-accepted problem with d <= max_d (degenerate a == 1 or
    b == 1 included), normalized to m <= n and deduplicated."""
    out = []
    seen = set()
    for d in range(1, max_d + 1):
        divisors = [k for k in range(1, d + 1) if d % k == 0]
        for m in divisors:
            for n in divisors:
                if m > n or math.gcd(m, n) > 2 or (d, m, n) in seen:
                    continue
                seen.add((d, m, n))
                out.append(validate(m, n, d // m, d // n))
    return out


def basis_form(degree: int, index: int) -> BinaryForm:
    """Binomial-basis vector: the form whose binomially weighted coordinate
    at ``index`` is 1 and all others 0."""
    values = [0] * (degree + 1)
    values[index] = 1
    return BinaryForm.from_binomial(degree, values)


def structural_coefficient(m: int, n: int, i: int, j: int) -> Fraction:
    """Coefficient of f_i * g_j in t_(i+j-1), where f_i, g_j are the
    binomially weighted coordinates of f and g and t is the transvectant in
    the plain basis.  Extracted by bilinearity from a basis pair."""
    t = transvectant(basis_form(m, i), basis_form(n, j))
    return t.coeffs[i + j - 1]


def structural_support(m: int, n: int, i: int, j: int) -> set[int]:
    """Plain-basis indices k where the basis pair (i, j) contributes to t_k."""
    t = transvectant(basis_form(m, i), basis_form(n, j))
    return {k for k, c in enumerate(t.coeffs) if c != 0}
