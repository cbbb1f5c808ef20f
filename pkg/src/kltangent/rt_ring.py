"""Exact arithmetic in the character ring fragment Z[e^{-lambda}].

A Laurent polynomial here is a finite integer combination of characters
e^{lambda} whose exponents lambda are root-lattice vectors; multiplication is
e^{lambda} e^{mu} = e^{lambda + mu}.  Coefficients are Python ints, so there
is no overflow.

Quotients by products prod (1 - e^{-beta}) with beta of positive height are
handled through height-truncated series: grading exponents -mu by the height
of mu makes every denominator factor shift the grade by at least one, so all
coefficients up to the truncation bound are exact.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import BeyondTruncation, ExponentOutsideCone
from .rootsys import Root, height

WeightVector = tuple[int, ...]


def _vadd(a: WeightVector, b: WeightVector) -> WeightVector:
    return tuple(x + y for x, y in zip(a, b))


def _vneg(a: WeightVector) -> WeightVector:
    return tuple(-x for x in a)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with root-lattice exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()) -> None:
        data: dict[WeightVector, int] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exponent, coeff in items:
            exponent = tuple(exponent)
            coeff = data.get(exponent, 0) + coeff
            if coeff:
                data[exponent] = coeff
            else:
                data.pop(exponent, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls({(0,) * rank: 1})

    @classmethod
    def monomial(cls, exponent: WeightVector, coeff: int = 1) -> "LaurentPoly":
        return cls({tuple(exponent): coeff})

    def items(self) -> list[tuple[WeightVector, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: WeightVector) -> int:
        return self._terms.get(tuple(exponent), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._terms)
        for e, c in other._terms.items():
            c2 = out.get(e, 0) + c
            if c2:
                out[e] = c2
            else:
                out.pop(e, None)
        poly = LaurentPoly.__new__(LaurentPoly)
        poly._terms = out
        return poly

    def __neg__(self) -> "LaurentPoly":
        poly = LaurentPoly.__new__(LaurentPoly)
        poly._terms = {e: -c for e, c in self._terms.items()}
        return poly

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[WeightVector, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _vadd(e1, e2)
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        poly = LaurentPoly.__new__(LaurentPoly)
        poly._terms = out
        return poly

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero()
        poly = LaurentPoly.__new__(LaurentPoly)
        poly._terms = {e: c * v for e, v in self._terms.items()}
        return poly

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.items()})"


def one_minus_e(alpha: Root) -> LaurentPoly:
    """The factor 1 - e^{-alpha}."""
    return LaurentPoly({(0,) * len(alpha): 1, _vneg(alpha): -1})


def lambda_minus_one(weights) -> LaurentPoly:
    """prod over the weight list of (1 - e^{-alpha}); 1 for the empty list.

    >>> lambda_minus_one([(1, 0), (0, 1)]).items()
    [((-1, -1), 1), ((-1, 0), -1), ((0, -1), -1), ((0, 0), 1)]
    """
    weights = list(weights)
    rank = len(weights[0]) if weights else 0
    out = LaurentPoly.one(rank)
    for alpha in weights:
        out = out * one_minus_e(alpha)
    return out


def in_nonneg_integer_span(vectors, target: WeightVector) -> bool:
    """Is target a nonnegative-integer combination of the given vectors?

    All vectors must have nonnegative coordinates and positive height, which
    bounds the search: a vector of height h can be used at most
    height(target) // h times.
    """
    vecs = [tuple(v) for v in vectors]
    assert all(height(v) >= 1 and min(v) >= 0 for v in vecs), "span vectors must be positive"
    target = tuple(target)
    if min(target) < 0:
        return False
    memo: dict[tuple[int, WeightVector], bool] = {}

    def rec(idx: int, remaining: WeightVector) -> bool:
        if not any(remaining):
            return True
        if idx == len(vecs):
            return False
        key = (idx, remaining)
        hit = memo.get(key)
        if hit is not None:
            return hit
        v = vecs[idx]
        bound = min(r // c for r, c in zip(remaining, v) if c)
        ok = False
        cur = remaining
        for _ in range(bound + 1):
            if rec(idx + 1, cur):
                ok = True
                break
            cur = tuple(r - c for r, c in zip(cur, v))
            if min(cur) < 0:
                break
        memo[key] = ok
        return ok

    return rec(0, target)


class TruncatedSeries:
    """Exact series coefficients on exponents -mu with height(mu) <= bound."""

    __slots__ = ("_terms", "bound")

    def __init__(self, terms, bound: int) -> None:
        self.bound = bound
        data: dict[WeightVector, int] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exponent, coeff in items:
            exponent = tuple(exponent)
            mu = _vneg(exponent)
            assert min(mu) >= 0, f"series exponent {exponent} outside -cone"
            if height(mu) > bound or coeff == 0:
                continue
            data[exponent] = data.get(exponent, 0) + coeff
        self._terms = {e: c for e, c in data.items() if c}

    def items(self) -> list[tuple[WeightVector, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: WeightVector) -> int:
        """Exact coefficient of e^{exponent}; BeyondTruncation past the bound."""
        exponent = tuple(exponent)
        mu = _vneg(exponent)
        if min(mu) < 0:
            return 0  # support lies in the negative cone, exactly zero
        if height(mu) > self.bound:
            raise BeyondTruncation(f"height {height(mu)} exceeds the bound {self.bound}")
        return self._terms.get(exponent, 0)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(out, bound)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        out: dict[WeightVector, int] = {}
        for e1, c1 in self._terms.items():
            h1 = height(_vneg(e1))
            if h1 > bound:
                continue
            for e2, c2 in other._terms.items():
                e = _vadd(e1, e2)
                if h1 + height(_vneg(e2)) > bound:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries(out, bound)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.bound == other.bound
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.bound, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TruncatedSeries(bound={self.bound}, terms={self.items()})"


def _orthant_points(rank: int, bound: int):
    """All nonnegative integer vectors of the given rank with height <= bound."""
    for h in range(bound + 1):
        for cut in combinations_with_replacement(range(rank), h):
            vec = [0] * rank
            for i in cut:
                vec[i] += 1
            yield tuple(vec)


def char_series(numerator: LaurentPoly, denominator_weights, bound: int) -> TruncatedSeries:
    """Expand numerator / prod (1 - e^{-beta}) as a height-truncated series.

    Every denominator weight must have positive height, and every exponent of
    the numerator must lie in the negative of the integer cone spanned by the
    denominator weights (ExponentOutsideCone otherwise); under these
    hypotheses the expansion prod (1 + e^{-beta} + e^{-2 beta} + ...) has
    exact coefficients up to the height bound.
    """
    weights = [tuple(b) for b in denominator_weights]
    if not weights:
        raise ValueError("denominator weight list must be nonempty")
    if any(min(b) < 0 or height(b) < 1 for b in weights):
        raise ValueError("denominator weights must be positive roots")
    rank = len(weights[0])
    for exponent, _ in numerator.items():
        if not in_nonneg_integer_span(weights, _vneg(exponent)):
            raise ExponentOutsideCone(f"numerator exponent {exponent} outside the span")
    terms = {
        e: c for e, c in numerator.items() if height(_vneg(e)) <= bound
    }
    for beta in weights:
        # Multiplying by sum_k e^{-k beta} is a prefix sum along beta:
        # new[-mu] = old[-mu] + new[-(mu - beta)], walked by increasing height.
        nxt: dict[WeightVector, int] = {}
        for mu in _orthant_points(rank, bound):
            prev = tuple(m - b for m, b in zip(mu, beta))
            val = terms.get(_vneg(mu), 0)
            if min(prev) >= 0:
                val += nxt.get(_vneg(prev), 0)
            if val:
                nxt[_vneg(mu)] = val
        terms = nxt
    return TruncatedSeries(terms, bound)
