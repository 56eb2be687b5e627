"""Exact arithmetic substrate.

Everything downstream (Alexander polynomials, Fox calculus, Milnor
invariants, surgery formulas) is computed over the integers, so this module
provides the shared exact types:

* :class:`LaurentPoly` -- integer Laurent polynomials in one or several
  variables, with formal derivatives and exact division by ``t_j - 1``;
* :class:`FreeWord` -- freely reduced words in a free group;
* :class:`MagnusSeries` -- truncated noncommutative power series, the target
  of the Magnus embedding ``g_i -> 1 + X_i``;
* :func:`det` -- fraction-free integer determinants;
* :func:`poly_det` -- determinants of small Laurent-polynomial matrices.

No floating point is used anywhere.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Mapping, Sequence


class AlgebraError(ValueError):
    """Raised on malformed algebraic input (non-square matrix, bad variable)."""


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Integer Laurent polynomial in an ordered tuple of variables.

    Terms are stored as a map ``exponent vector -> nonzero coefficient``.
    Values are immutable; all arithmetic returns new instances.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str],
                 terms: Mapping[tuple[int, ...], int] | None = None):
        self.variables = tuple(variables)
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            nvars = len(self.variables)
            for exps, coeff in terms.items():
                e = tuple(int(x) for x in exps)
                if len(e) != nvars:
                    raise AlgebraError(
                        f"exponent vector {e} does not match {nvars} variables")
                c = int(coeff)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: Sequence[str] = ()) -> "LaurentPoly":
        zero = (0,) * len(tuple(variables))
        return cls(variables, {zero: c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> "LaurentPoly":
        variables = tuple(variables)
        if name not in variables:
            raise AlgebraError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def univariate(cls, coeffs: Mapping[int, int], name: str = "t") -> "LaurentPoly":
        return cls((name,), {(e,): c for e, c in coeffs.items()})

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise AlgebraError(
                    f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        raise AlgebraError(f"cannot coerce {other!r} into a Laurent polynomial")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return LaurentPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise AlgebraError("negative powers of polynomials are not defined")
        out = LaurentPoly.constant(1, self.variables)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, offsets: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        off = tuple(int(x) for x in offsets)
        if len(off) != len(self.variables):
            raise AlgebraError("offset length mismatch")
        return LaurentPoly(
            self.variables,
            {tuple(a + b for a, b in zip(e, off)): c for e, c in self.terms.items()})

    # -- queries -------------------------------------------------------------

    def eval_at_ones(self) -> int:
        return sum(self.terms.values())

    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(e[i] for e in self.terms)
                     for i in range(len(self.variables)))

    def max_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(max(e[i] for e in self.terms)
                     for i in range(len(self.variables)))

    def invert_variables(self) -> "LaurentPoly":
        """Substitute t_i -> 1/t_i for every variable."""
        return LaurentPoly(self.variables,
                           {tuple(-x for x in e): c for e, c in self.terms.items()})

    # -- normalization and division -------------------------------------------

    def normalized(self) -> "LaurentPoly":
        """Canonical associate: lowest exponent of each variable is zero and the
        coefficient of the lexicographically smallest monomial is positive."""
        if not self.terms:
            return self
        p = self.shift(tuple(-m for m in self.min_exponents()))
        smallest = min(p.terms)
        if p.terms[smallest] < 0:
            p = -p
        return p

    def div_exact_tj_minus_1(self, j: int) -> "LaurentPoly":
        """Exact division by ``t_j - 1`` (0-based variable index).

        Raises :class:`AlgebraError` when the division leaves a remainder.
        """
        if not (0 <= j < len(self.variables)):
            raise AlgebraError(f"variable index {j} out of range")
        if not self.terms:
            return self
        # View p as a polynomial in t_j with Laurent coefficients, clear the
        # lowest t_j exponent, and run synthetic division by (t_j - 1).
        low = min(e[j] for e in self.terms)
        by_deg: dict[int, dict[tuple[int, ...], int]] = {}
        for e, c in self.terms.items():
            rest = e[:j] + (0,) + e[j + 1:]
            by_deg.setdefault(e[j] - low, {})[rest] = c
        top = max(by_deg)
        quot: dict[int, dict[tuple[int, ...], int]] = {}
        carry: dict[tuple[int, ...], int] = {}
        for d in range(top, -1, -1):
            coeff = dict(carry)
            for e, c in by_deg.get(d, {}).items():
                s = coeff.get(e, 0) + c
                if s:
                    coeff[e] = s
                elif e in coeff:
                    del coeff[e]
            if d == 0:
                if coeff:
                    raise AlgebraError("division by (t_j - 1) is not exact")
            else:
                quot[d - 1] = coeff
                carry = coeff
        terms: dict[tuple[int, ...], int] = {}
        for d, coeffs in quot.items():
            for e, c in coeffs.items():
                full = e[:j] + (d + low,) + e[j + 1:]
                if c:
                    terms[full] = c
        return LaurentPoly(self.variables, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.variables, e) if k)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")


def poly_eval_derivatives(p: LaurentPoly, orders: Sequence[int]) -> int:
    """Exact mixed partial derivative of ``p`` evaluated at ``(1, ..., 1)``.

    ``orders[i]`` is the derivative order in the i-th variable.  Uses the
    falling-factorial rule ``d^k/dt^k t^e |_{t=1} = e (e-1) ... (e-k+1)``,
    which is valid for negative exponents as well.
    """
    orders = tuple(int(k) for k in orders)
    if len(orders) != len(p.variables):
        raise AlgebraError("derivative order vector does not match variables")
    if any(k < 0 for k in orders):
        raise AlgebraError("derivative orders must be nonnegative")
    total = 0
    for exps, coeff in p.terms.items():
        factor = coeff
        for e, k in zip(exps, orders):
            for step in range(k):
                factor *= (e - step)
            if not factor:
                break
        total += factor
    return total


# ---------------------------------------------------------------------------
# Integer determinants
# ---------------------------------------------------------------------------

def det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise AlgebraError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_permutation_expansion(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant as the explicit signed sum over permutations.

    Exponentially slow; kept as an independent oracle for :func:`det`.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise AlgebraError("determinant of a non-square matrix")
    total = 0
    for perm in permutations(range(n)):
        sign = permutation_sign(perm)
        prod = 1
        for i in range(n):
            prod *= matrix[i][perm[i]]
            if not prod:
                break
        total += sign * prod
    return total


def permutation_sign(perm: Sequence[int]) -> int:
    """Signature of a permutation given in one-line notation on 0..n-1."""
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def poly_det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix of Laurent polynomials.

    Expansion over column subsets with memoization: O(2^n * n) polynomial
    multiplications, fine for the Wirtinger-sized matrices that arise here.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise AlgebraError("determinant of a non-square matrix")
    if n == 0:
        raise AlgebraError("poly_det needs at least a 1x1 matrix")
    variables = matrix[0][0].variables
    one = LaurentPoly.constant(1, variables)
    zero = LaurentPoly.constant(0, variables)
    # minors[S] = det of rows 0..popcount(S)-1 restricted to column set S
    minors: dict[int, LaurentPoly] = {0: one}
    for row_idx in range(n):
        nxt: dict[int, LaurentPoly] = {}
        row = matrix[row_idx]
        for cols, minor in minors.items():
            if minor.is_zero() and row_idx > 0:
                continue
            # cofactor sign is (-1)^(row + column position in the subset);
            # parity tracks selected columns below j as j sweeps upward
            parity = row_idx & 1
            for j in range(n):
                bit = 1 << j
                if cols & bit:
                    parity ^= 1
                    continue
                entry = row[j]
                if not entry.is_zero():
                    contrib = minor * entry
                    if parity:
                        contrib = -contrib
                    key = cols | bit
                    nxt[key] = nxt.get(key, zero) + contrib
        minors = nxt
    full = (1 << n) - 1
    return minors.get(full, zero)


# ---------------------------------------------------------------------------
# Free-group words
# ---------------------------------------------------------------------------

class FreeWord:
    """Freely reduced word in free-group generators indexed by 1..rank.

    Letters are ``(generator_index, exponent)`` pairs with exponent +1 or -1;
    adjacent cancelling letters are removed on construction.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[tuple[int, int]] = ()):
        reduced: list[tuple[int, int]] = []
        for gen, exp in letters:
            gen = int(gen)
            exp = int(exp)
            if gen < 1:
                raise AlgebraError(f"generator index must be >= 1, got {gen}")
            if exp not in (1, -1):
                raise AlgebraError(f"letter exponent must be +-1, got {exp}")
            if reduced and reduced[-1][0] == gen and reduced[-1][1] == -exp:
                reduced.pop()
            else:
                reduced.append((gen, exp))
        self.letters = tuple(reduced)

    @classmethod
    def generator(cls, index: int, exp: int = 1) -> "FreeWord":
        if exp > 0:
            return cls([(index, 1)] * exp)
        return cls([(index, -1)] * (-exp))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord((g, -e) for g, e in reversed(self.letters))

    def conjugate_by(self, w: "FreeWord") -> "FreeWord":
        """Return ``w * self * w^-1``."""
        return w * self * w.inverse()

    def exponent_sum(self, gen: int) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        if not self.letters:
            return "1"
        return ".".join(f"g{g}" if e > 0 else f"g{g}^-1" for g, e in self.letters)


# ---------------------------------------------------------------------------
# Magnus expansion
# ---------------------------------------------------------------------------

class MagnusSeries:
    """Noncommutative power series truncated at a fixed total degree.

    Keys are words in the symbols ``X_1 .. X_n`` encoded as tuples of
    generator indices; the empty tuple is the constant term.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int,
                 coeffs: Mapping[tuple[int, ...], int] | None = None):
        if degree < 1:
            raise AlgebraError("truncation degree must be >= 1")
        self.degree = int(degree)
        clean: dict[tuple[int, ...], int] = {}
        if coeffs:
            for word, c in coeffs.items():
                if len(word) > self.degree:
                    continue
                c = int(c)
                if c:
                    clean[tuple(word)] = c
        self.coeffs = clean

    @classmethod
    def one(cls, degree: int) -> "MagnusSeries":
        return cls(degree, {(): 1})

    def coefficient(self, word: Sequence[int]) -> int:
        return self.coeffs.get(tuple(word), 0)

    def __add__(self, other: "MagnusSeries") -> "MagnusSeries":
        if self.degree != other.degree:
            raise AlgebraError("cannot add series with different truncations")
        coeffs = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = coeffs.get(w, 0) + c
            if s:
                coeffs[w] = s
            elif w in coeffs:
                del coeffs[w]
        return MagnusSeries(self.degree, coeffs)

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        if self.degree != other.degree:
            raise AlgebraError("cannot multiply series with different truncations")
        coeffs: dict[tuple[int, ...], int] = {}
        for w1, c1 in self.coeffs.items():
            room = self.degree - len(w1)
            for w2, c2 in other.coeffs.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                s = coeffs.get(w, 0) + c1 * c2
                if s:
                    coeffs[w] = s
                elif w in coeffs:
                    del coeffs[w]
        return MagnusSeries(self.degree, coeffs)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MagnusSeries)
                and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for w in sorted(self.coeffs, key=lambda w: (len(w), w)):
            c = self.coeffs[w]
            mono = "".join(f"X{i}" for i in w) or "1"
            bits.append(f"{c}*{mono}" if mono != "1" else str(c))
        return " + ".join(bits)


def magnus_expand(word: FreeWord, degree: int, rank: int | None = None) -> MagnusSeries:
    """Image of a free word under ``g_i -> 1 + X_i`` truncated at ``degree``.

    Inverses expand as the truncated geometric series
    ``g_i^-1 -> 1 - X_i + X_i^2 - ...``.  When ``rank`` is given, generator
    indices are checked against it.
    """
    if rank is not None:
        for g, _ in word.letters:
            if g > rank:
                raise AlgebraError(f"generator g{g} exceeds declared rank {rank}")
    out = MagnusSeries.one(degree)
    for gen, exp in word.letters:
        coeffs: dict[tuple[int, ...], int] = {(): 1}
        if exp > 0:
            coeffs[(gen,)] = 1
        else:
            for k in range(1, degree + 1):
                coeffs[(gen,) * k] = (-1) ** k
        out = out * MagnusSeries(degree, coeffs)
    return out
