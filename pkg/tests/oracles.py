"""Independent brute-force oracles shared by the unit and acceptance
tests. Written directly from the defining inequalities, no shared code
with the library classifiers."""

from fractions import Fraction

HALF = Fraction(1, 2)


def admissible_oracle(inv_p: Fraction, inv_q: Fraction, ab: Fraction) -> str:
    on_line = inv_p + ab * inv_q == ab / 2
    if not on_line:
        return "not-admissible"
    if ab > 1:
        # 2 <= p <= inf and 2 <= q <= 2ab/(ab-1)
        q_min_inv = (ab - 1) / (2 * ab)  # 1/q at the endpoint q = 2ab/(ab-1)
        if inv_p > HALF or inv_q > HALF or inv_q < q_min_inv:
            return "not-admissible"
        if inv_p == HALF and inv_q == q_min_inv:
            return "endpoint"
        return "admissible"
    # 0 < ab <= 1: p > 2/ab strict, 2 <= q < inf strict
    if inv_p < ab / 2 and 0 < inv_q <= HALF:
        return "admissible"
    return "not-admissible"


def triangle_oracle(inv_p: Fraction, inv_q: Fraction, m: int, n: int) -> bool:
    if (inv_p, inv_q) == (Fraction(0), HALF):
        return True
    inside_square = 0 < inv_p <= HALF and 0 < inv_q <= HALF
    return inside_square and 2 * inv_p + (m + n) * inv_q >= Fraction(m + n, 2)
