"""Link fingerprints of braid closures.

The fingerprint of a word pairs the component count of its closure with
the one variable Alexander polynomial, computed exactly from the reduced
Burau representation over integer Laurent polynomials:

    alexander(w) = det(burau(w) - I) / (1 + t + ... + t^(n-1))

normalized so the lowest exponent is zero and the lowest coefficient is
positive.  Both entries are unchanged by conjugation, by both
stabilizations and by exchange moves, so a fingerprint mismatch
certifies that two closures are different links.  The self linking
number, exponent sum minus strand count, is deliberately kept out of
the fingerprint: it drops by two under negative stabilization and is
reported separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .words import BraidWord, closure_components, exponent_sum

__all__ = [
    "LaurentPoly",
    "DivisibilityFailure",
    "burau",
    "alexander",
    "Fingerprint",
    "fingerprint",
    "self_linking",
]


class DivisibilityFailure(ArithmeticError):
    """Raised when a Laurent quotient that must be exact is not."""


class LaurentPoly:
    """An integer Laurent polynomial in one variable ``t``.

    Immutable; stores only nonzero coefficients keyed by exponent.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean = {e: c for e, c in (coeffs or {}).items() if c != 0}
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly) and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly, raising :class:`DivisibilityFailure` on remainder."""
        if divisor.is_zero():
            raise DivisibilityFailure("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        # shift both to ordinary polynomials and do long division
        num = self.shift(-self.min_exp)
        den = divisor.shift(-divisor.min_exp)
        shift_back = self.min_exp - divisor.min_exp
        rem = dict(num._coeffs)
        lead = den.max_exp
        lead_coeff = den.coefficient(lead)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < lead:
                raise DivisibilityFailure("nonzero remainder")
            c, r = divmod(rem[top], lead_coeff)
            if r != 0:
                raise DivisibilityFailure("nonzero remainder")
            quot[top - lead] = c
            for e, dc in den._coeffs.items():
                k = top - lead + e
                v = rem.get(k, 0) - c * dc
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return LaurentPoly(quot).shift(shift_back)

    def normalized(self) -> "LaurentPoly":
        """Scale by a unit so the lowest exponent is 0 with positive coefficient."""
        if self.is_zero():
            return self
        shifted = self.shift(-self.min_exp)
        if shifted.coefficient(0) < 0:
            return -shifted
        return shifted

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"


Matrix = tuple[tuple[LaurentPoly, ...], ...]


def _mat_identity(m: int) -> Matrix:
    one, zero = LaurentPoly.one(), LaurentPoly.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(m)) for i in range(m)
    )


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m = len(a)
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = LaurentPoly.zero()
            for k in range(m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


@cache
def _generator_matrix(n: int, g: int) -> Matrix:
    """Reduced Burau image of the letter ``g`` in the group on ``n`` strands."""
    m = n - 1
    t = LaurentPoly.term(1, 1)
    tinv = LaurentPoly.term(1, -1)
    one = LaurentPoly.one()
    rows = [list(row) for row in _mat_identity(m)]
    i = abs(g)
    if g > 0:
        if m == 1:
            rows[0][0] = -t
        elif i == 1:
            rows[0][0] = -t
            rows[1][0] = one
        elif i == m:
            rows[m - 2][m - 1] = t
            rows[m - 1][m - 1] = -t
        else:
            rows[i - 2][i - 1] = t
            rows[i - 1][i - 1] = -t
            rows[i][i - 1] = one
    else:
        if m == 1:
            rows[0][0] = -tinv
        elif i == 1:
            rows[0][0] = -tinv
            rows[1][0] = tinv
        elif i == m:
            rows[m - 2][m - 1] = one
            rows[m - 1][m - 1] = -tinv
        else:
            rows[i - 2][i - 1] = one
            rows[i - 1][i - 1] = -tinv
            rows[i][i - 1] = tinv
    return tuple(tuple(row) for row in rows)


def burau(w: BraidWord) -> Matrix:
    """Reduced Burau matrix of a word, exact over Laurent integers.

    The matrix has shape ``(n - 1) x (n - 1)``; the empty word on one
    strand yields the empty matrix.
    """

    m = _mat_identity(w.index - 1)
    for g in w.letters:
        m = _mat_mul(m, _generator_matrix(w.index, g))
    return m


def _det(mat: Matrix) -> LaurentPoly:
    # division free expansion with memoization over column subsets
    m = len(mat)
    if m == 0:
        return LaurentPoly.one()
    memo: dict[frozenset[int], LaurentPoly] = {}

    def minor(row: int, cols: frozenset[int]) -> LaurentPoly:
        if row == m:
            return LaurentPoly.one()
        key = cols
        if key in memo:
            return memo[key]
        acc = LaurentPoly.zero()
        for pos, j in enumerate(sorted(cols)):
            entry = mat[row][j]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols - {j})
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        memo[key] = acc
        return acc

    return minor(0, frozenset(range(m)))


def alexander(w: BraidWord) -> LaurentPoly:
    """Normalized one variable Alexander polynomial of the closure.

    Returns 1 for the one strand closure, 0 when the Burau determinant
    vanishes (split closures included), and otherwise the exact quotient
    by ``1 + t + ... + t^(n-1)`` normalized up to units.
    """

    if w.index == 1:
        return LaurentPoly.one()
    mat = _mat_sub(burau(w), _mat_identity(w.index - 1))
    det = _det(mat)
    if det.is_zero():
        return LaurentPoly.zero()
    divisor = LaurentPoly({k: 1 for k in range(w.index)})
    return det.exact_div(divisor).normalized()


@dataclass(frozen=True)
class Fingerprint:
    """Closure component count paired with the Alexander polynomial."""

    components: int
    alexander: LaurentPoly

    def __str__(self) -> str:
        return f"components={self.components} alexander={self.alexander}"


def fingerprint(w: BraidWord) -> Fingerprint:
    """The move invariant fingerprint of the word's closure."""
    return Fingerprint(closure_components(w), alexander(w))


def self_linking(w: BraidWord) -> int:
    """Exponent sum minus strand count."""
    return exponent_sum(w) - w.index
