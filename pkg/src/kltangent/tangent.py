"""Tangent-weight verdicts for Kazhdan-Lusztig and Schubert varieties.

Fix a reduced word s = (s_1, ..., s_l) for x and a target w <= x.  The
ambient space of the Kazhdan-Lusztig variety at x has weights gamma_1..l
(the inversion set I(x^{-1})), and the restriction of the Schubert class to
the fixed point is the signed sum over Hecke subwords

    P_{w,s} = sum_{t : delta(s at t) = w} (-1)^{e(t)} prod_{i in t} (1 - e^{-gamma_i}).

For gamma_j integrally indecomposable in I(x^{-1}) the following are
equivalent and drive the In/Out verdicts:

  * gamma_j is a weight of the tangent space at x;
  * 1 - e^{-gamma_j} fails to divide some summand of P_{w,s}, i.e. it is
    not an "explicit factor" of the expression;
  * the Demazure product of s with position j deleted is >= w.

For decomposable gamma_j those conditions can disagree with tangency, so the
verdict is Undetermined and all the evidence is surfaced instead.  In type A
the ordinary product s_1...s^_j...s_l >= w decides every position (the
classical type-A tangent criterion) and can be opted into explicitly.

The Schubert variety at the same fixed point adds the fixed weight set
-(Phi^+ \\ I(x^{-1})) to whatever the Kazhdan-Lusztig verdicts give, and the
G/P case reduces to G/B once both elements are minimal coset representatives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ExponentOutsideCone,
    LetterOutOfRange,
    NotBelow,
    NotMember,
    NotMinimalCosetRep,
    NotReduced,
    WrongType,
)
from .hecke import demazure_element
from .rootsys import Root, RootSystem, negate
from .rt_ring import LaurentPoly, WeightVector, char_series, in_nonneg_integer_span, one_minus_e
from .subword import hecke_subwords
from .weyl import (
    GammaSequence,
    WeylElement,
    Word,
    bruhat_leq,
    canonical_reduced_word,
    gamma_sequence,
    inversion_set_of_inverse,
    is_min_coset_rep,
    is_reduced,
    word_to_element,
)


class Verdict(enum.Enum):
    IN = "In"
    OUT = "Out"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class Evidence:
    """Raw facts behind a verdict.

    demazure_ok:  delta(s with position j deleted) >= w, the criterion that
                  decides tangency at integrally indecomposable positions.
    ordinary_product_ok:  s_1...s^_j...s_l >= w, the invariant-curve (TE)
                  criterion, which decides everything in type A.
    explicit_factor:  1 - e^{-gamma_j} divides every summand of P_{w,s}
                  (always the negation of demazure_ok).
    cone_coefficient:  coefficient of e^{-gamma_j} in the tangent-cone
                  character, populated for decomposable weights on request;
                  it carries no tangent-space meaning there.
    """

    indecomposable: bool
    demazure_ok: bool
    ordinary_product_ok: bool
    explicit_factor: bool
    cone_coefficient: int | None = None


@dataclass(frozen=True)
class WeightStatus:
    position: int
    gamma: Root
    verdict: Verdict
    evidence: Evidence


@dataclass(frozen=True)
class TangentReport:
    """Per-weight verdicts for one Kazhdan-Lusztig / Schubert variety at x."""

    x_word: Word
    w: WeylElement
    gamma: GammaSequence
    statuses: tuple[WeightStatus, ...]
    kl_tangent_weights: frozenset[Root]
    schubert_extra_weights: frozenset[Root]
    complete: bool
    parabolic: frozenset[int] | None = None


def _puncture(s: Word, j: int) -> Word:
    return s[: j - 1] + s[j:]


def _validate_pair(rs: RootSystem, w: WeylElement, s: Word) -> WeylElement:
    if not is_reduced(rs, s):
        raise NotReduced(f"word {s} is not reduced over {rs.cartan_type}")
    x = word_to_element(rs, s)
    if not bruhat_leq(rs, w, x):
        raise NotBelow("target w is not below x in Bruhat order")
    return x


def _validate_position(s: Word, j: int) -> None:
    if not 1 <= j <= len(s):
        raise LetterOutOfRange(f"position {j} out of range for a word of length {len(s)}")


def kclass_restriction(rs: RootSystem, w: WeylElement, s: Word) -> LaurentPoly:
    """P_{w,s}: the Schubert class restricted to the fixed point of s.

    Signed sum over all Hecke subwords for w inside s of the products
    prod_{i in t} (1 - e^{-gamma_i}).  Independent of the reduced word chosen
    for the same x, as an identity of Laurent polynomials.
    """
    _validate_pair(rs, w, s)
    gammas = gamma_sequence(rs, s).gammas
    rank = rs.rank
    total = LaurentPoly.zero()
    for sub in hecke_subwords(rs, w, s):
        term = LaurentPoly.one(rank)
        for i in sub.indices:
            term = term * one_minus_e(gammas[i - 1])
        total = total + (term if sub.excess % 2 == 0 else term.scale(-1))
    return total


def is_explicit_factor(rs: RootSystem, j: int, w: WeylElement, s: Word, method: str = "demazure") -> bool:
    """Does 1 - e^{-gamma_j} appear in every summand of P_{w,s}?

    ``method="demazure"`` evaluates NOT(delta(s \\ j) >= w), one 0-Hecke fold;
    ``method="enumerate"`` checks j in t for every Hecke subword t, and exists
    as the slow verification oracle for the fast path.
    """
    _validate_position(s, j)
    _validate_pair(rs, w, s)
    if method == "demazure":
        return not bruhat_leq(rs, w, demazure_element(rs, _puncture(s, j)))
    if method == "enumerate":
        return all(j in sub.indices for sub in hecke_subwords(rs, w, s))
    raise ValueError(f"unknown method {method!r}")


def is_integrally_indecomposable(alpha: Root, phi) -> bool:
    """Is alpha NOT a nonnegative-integer combination of the other weights?

    phi is the ambient weight set (positive roots); NotMember if alpha is not
    in it.  Searching is exact: every candidate summand has height >= 1, so
    coefficients are bounded by height(alpha).
    """
    phi = frozenset(tuple(v) for v in phi)
    alpha = tuple(alpha)
    if alpha not in phi:
        raise NotMember(f"{alpha} is not in the ambient weight set")
    others = [v for v in phi if v != alpha]
    if not others:
        return True
    return not in_nonneg_integer_span(others, alpha)


def tangent_cone_coefficient(rs: RootSystem, lam: WeightVector, w: WeylElement, s: Word) -> int:
    """Exact coefficient of e^{lam} in the tangent-cone character Char C.

    Char C = P_{w,s} / prod_i (1 - e^{-gamma_i}), expanded as a height-
    truncated series with bound height(-lam) (exact by the height grading).
    For an integrally indecomposable gamma_j, the coefficient at -gamma_j is
    1 when 1 - e^{-gamma_j} is not an explicit factor and 0 when it is; for
    decomposable weights the integer is returned raw, with no tangent-space
    meaning attached.
    """
    _validate_pair(rs, w, s)
    gammas = list(gamma_sequence(rs, s).gammas)
    mu = negate(tuple(lam))
    if min(mu) < 0 or not in_nonneg_integer_span(gammas, mu):
        raise ExponentOutsideCone(f"-({lam}) is outside the cone of the ambient weights")
    numerator = kclass_restriction(rs, w, s)
    series = char_series(numerator, gammas, sum(mu))
    return series.coefficient(tuple(lam))


def _status_for_position(
    rs: RootSystem,
    j: int,
    w: WeylElement,
    s: Word,
    gammas: tuple[Root, ...],
    inversions: frozenset[Root],
    include_cone_coefficient: bool,
    use_type_a_oracle: bool,
) -> WeightStatus:
    gamma_j = gammas[j - 1]
    punctured = _puncture(s, j)
    demazure_ok = bruhat_leq(rs, w, demazure_element(rs, punctured))
    ordinary_ok = bruhat_leq(rs, w, word_to_element(rs, punctured))
    indecomposable = is_integrally_indecomposable(gamma_j, inversions)
    cone_coeff = None
    if indecomposable:
        verdict = Verdict.IN if demazure_ok else Verdict.OUT
    else:
        if use_type_a_oracle and rs.cartan_type.family == "A":
            verdict = Verdict.IN if ordinary_ok else Verdict.OUT
        else:
            verdict = Verdict.UNDETERMINED
        if include_cone_coefficient:
            cone_coeff = tangent_cone_coefficient(rs, negate(gamma_j), w, s)
    evidence = Evidence(
        indecomposable=indecomposable,
        demazure_ok=demazure_ok,
        ordinary_product_ok=ordinary_ok,
        explicit_factor=not demazure_ok,
        cone_coefficient=cone_coeff,
    )
    return WeightStatus(position=j, gamma=gamma_j, verdict=verdict, evidence=evidence)


def kl_tangent_membership(
    rs: RootSystem,
    j: int,
    w: WeylElement,
    s: Word,
    include_cone_coefficient: bool = True,
) -> WeightStatus:
    """Verdict for gamma_j as a weight of the Kazhdan-Lusztig tangent space.

    In iff delta(s \\ j) >= w when gamma_j is integrally indecomposable in
    I(x^{-1}); Undetermined otherwise, with all evidence populated (including
    the tangent-cone coefficient unless switched off).
    """
    _validate_position(s, j)
    x = _validate_pair(rs, w, s)
    gammas = gamma_sequence(rs, s).gammas
    inversions = inversion_set_of_inverse(rs, x)
    return _status_for_position(
        rs, j, w, s, gammas, inversions, include_cone_coefficient, use_type_a_oracle=False
    )


def te_curve_weights(rs: RootSystem, w: WeylElement, s: Word) -> frozenset[Root]:
    """Weights spanned by torus-invariant curves: ordinary-product criterion.

    {gamma_j : s_1...s^_j...s_l >= w}, with no indecomposability restriction;
    always a subset of the tangent weights.
    """
    _validate_pair(rs, w, s)
    gammas = gamma_sequence(rs, s).gammas
    out = []
    for j in range(1, len(s) + 1):
        if bruhat_leq(rs, w, word_to_element(rs, _puncture(s, j))):
            out.append(gammas[j - 1])
    return frozenset(out)


def type_a_tangent_oracle(rs: RootSystem, j: int, w: WeylElement, s: Word) -> bool:
    """Full tangent membership in type A: ordinary product deleted at j is >= w.

    Valid for every position (no indecomposability hypothesis); WrongType
    outside family A.  Serves as the independent oracle for the Demazure
    criterion at indecomposable positions.
    """
    if rs.cartan_type.family != "A":
        raise WrongType(f"type-A oracle called on {rs.cartan_type}")
    _validate_position(s, j)
    _validate_pair(rs, w, s)
    return bruhat_leq(rs, w, word_to_element(rs, _puncture(s, j)))


def kl_tangent_report(
    rs: RootSystem,
    w: WeylElement,
    x: WeylElement,
    use_type_a_oracle: bool = False,
    include_cone_evidence: bool = False,
    parabolic: frozenset[int] | None = None,
) -> TangentReport:
    """Run the per-position verdicts over the canonical reduced word of x.

    The verdicts do not depend on which reduced word is chosen.  The report
    also carries the Schubert-variety surplus -(Phi^+ \\ I(x^{-1})) and is
    complete exactly when no position is Undetermined -- always the case when
    x is cominuscule.  ``use_type_a_oracle`` upgrades Undetermined positions
    through the ordinary-product criterion; it is opt-in because it invokes
    the type-A-only classical characterization.
    """
    if not bruhat_leq(rs, w, x):
        raise NotBelow("target w is not below x in Bruhat order")
    if use_type_a_oracle and rs.cartan_type.family != "A":
        raise WrongType(f"type-A oracle requested on {rs.cartan_type}")
    s = canonical_reduced_word(rs, x)
    gamma = gamma_sequence(rs, s)
    inversions = inversion_set_of_inverse(rs, x)
    statuses = tuple(
        _status_for_position(
            rs, j, w, s, gamma.gammas, inversions, include_cone_evidence, use_type_a_oracle
        )
        for j in range(1, len(s) + 1)
    )
    kl_weights = frozenset(st.gamma for st in statuses if st.verdict is Verdict.IN)
    extra = frozenset(negate(beta) for beta in rs.positive_roots if beta not in inversions)
    complete = all(st.verdict is not Verdict.UNDETERMINED for st in statuses)
    return TangentReport(
        x_word=s,
        w=w,
        gamma=gamma,
        statuses=statuses,
        kl_tangent_weights=kl_weights,
        schubert_extra_weights=extra,
        complete=complete,
        parabolic=parabolic,
    )


def gp_tangent_report(
    rs: RootSystem,
    w: WeylElement,
    x: WeylElement,
    parabolic,
    use_type_a_oracle: bool = False,
    include_cone_evidence: bool = False,
) -> TangentReport:
    """Tangent report in G/P: identical verdicts, minimal-coset-rep preconditions.

    Both w and x must be the minimal-length representatives of their cosets
    modulo the parabolic generated by the given nodes; the Kazhdan-Lusztig
    variety in G/P is then isomorphic to the one in G/B, so the verdict
    computation is unchanged and the report is tagged with the parabolic.
    """
    pset = frozenset(parabolic)
    for xx, name in ((x, "x"), (w, "w")):
        if not is_min_coset_rep(rs, xx, pset):
            raise NotMinimalCosetRep(f"{name} is not a minimal coset representative")
    if not bruhat_leq(rs, w, x):
        raise NotBelow("target w is not below x in Bruhat order")
    return kl_tangent_report(
        rs,
        w,
        x,
        use_type_a_oracle=use_type_a_oracle,
        include_cone_evidence=include_cone_evidence,
        parabolic=pset,
    )


def cominuscule_witness(rs: RootSystem, x: WeylElement) -> tuple[Fraction, ...] | None:
    """A coweight v with <gamma, v> = -1 for all gamma in I(x^{-1}), or None.

    v is expressed in the basis dual to the simple roots, so <gamma, v> is
    the dot product of gamma's coefficient vector with v; only solvability
    matters, and it is decided by exact rational elimination.
    """
    inversions = sorted(inversion_set_of_inverse(rs, x))
    if not inversions:
        return tuple(Fraction(0) for _ in range(rs.rank))
    rows = [[Fraction(c) for c in gamma] + [Fraction(-1)] for gamma in inversions]
    m, cols = len(rows), rs.rank
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        piv = next((k for k in range(r, m) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        scale = rows[r][col]
        rows[r] = [v / scale for v in rows[r]]
        for k in range(m):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    for k in range(r, m):
        if rows[k][-1] != 0:
            return None
    witness = [Fraction(0)] * cols
    for k, col in enumerate(pivots):
        witness[col] = rows[k][-1]
    assert all(sum(Fraction(c) * w for c, w in zip(g, witness)) == -1 for g in inversions)
    return tuple(witness)


def is_cominuscule_element(rs: RootSystem, x: WeylElement) -> bool:
    """True iff some coweight evaluates to -1 on every inversion of x^{-1}."""
    return cominuscule_witness(rs, x) is not None


def element_to_permutation(rs: RootSystem, x: WeylElement) -> tuple[int, ...]:
    """One-line notation of x acting on 1..n+1 in type A_n (WrongType else).

    The convention matches the root action: x sends eps_j to eps_{pi(j)}.
    """
    if rs.cartan_type.family != "A":
        raise WrongType(f"permutations only exist in type A, not {rs.cartan_type}")
    p = list(range(1, rs.rank + 2))
    for letter in canonical_reduced_word(rs, x):
        p[letter - 1], p[letter] = p[letter], p[letter - 1]
    return tuple(p)


def type_a_cominuscule_oracle(n: int, perm) -> bool:
    """321-avoidance of a permutation of n+1 letters (1-based one-line form).

    Cominuscule elements of the type A_n Weyl group are exactly the
    permutations with no decreasing subsequence of length three.
    """
    p = tuple(perm)
    if sorted(p) != list(range(1, n + 2)):
        raise WrongType(f"{perm!r} is not a permutation of 1..{n + 1}")
    m = len(p)
    for j in range(m):  # is p[j] the middle entry of a decreasing triple?
        if max(p[:j], default=0) > p[j] and min(p[j + 1 :], default=m + 1) < p[j]:
            return False
    return True
