"""Exhaustive desk-scale verification suites.

Each suite sweeps a stated range of inputs, re-checks one exact identity
through the public operations, and returns a :class:`VerifyOutcome` with the
case count and any failures.  At these group sizes the sweeps are not spot
checks: they cover every element, every reduced word and every Bruhat
interval in range, so a green suite is a finite proof for that range.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import KltangentError
from .rootsys import RootSystem, build_root_system, cominuscule_nodes, negate, root_from_epsilon
from .rt_ring import LaurentPoly
from .subword import build_complex, euler_characteristics, euler_signed_sum
from .tangent import (
    Verdict,
    element_to_permutation,
    is_cominuscule_element,
    is_explicit_factor,
    is_integrally_indecomposable,
    kclass_restriction,
    kl_tangent_membership,
    kl_tangent_report,
    tangent_cone_coefficient,
    type_a_cominuscule_oracle,
    type_a_tangent_oracle,
)
from .weyl import (
    GroupTable,
    bruhat_leq,
    canonical_reduced_word,
    gamma_sequence,
    group_table,
    inversion_set_of_inverse,
    is_min_coset_rep,
    word_to_element,
)

_FAILURE_CAP = 50


@dataclass(frozen=True)
class VerifyConfig:
    """Knobs for the battery orchestrator (`kltangent verify <type>`)."""

    group_order_guard: int = 400_000
    exhaustive_order_max: int = 48  # full (x, word, w) sweeps up to this |W|
    sampled_cases: int = 1_000
    random_cases: int = 500
    seed: int = 2_718_281


@dataclass
class VerifyOutcome:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, **failure) -> None:
        if len(self.failures) < _FAILURE_CAP:
            self.failures.append(failure)
        elif len(self.failures) == _FAILURE_CAP:
            self.failures.append({"note": "failure list truncated"})


def _finish(out: VerifyOutcome, t0: float) -> VerifyOutcome:
    out.seconds = time.perf_counter() - t0
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _iter_words(gt: GroupTable):
    for idx in range(len(gt.elements)):
        for word in gt.reduced_words_of(idx):
            yield idx, word


def _indecomposable_roots(rs: RootSystem, inversions) -> frozenset:
    return frozenset(g for g in inversions if is_integrally_indecomposable(g, inversions))


def euler_identity_suite(rs: RootSystem, sample: int | None = None, seed: int = 0) -> VerifyOutcome:
    """Signed Hecke-subword sum equals 1 for every (x, reduced word, w <= x).

    With ``sample`` set, checks that many random (x, w, word) triples instead
    of the full sweep.
    """
    t0 = time.perf_counter()
    out = VerifyOutcome(f"euler-identity[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()

    def check(word, w_id):
        out.cases += 1
        try:
            value = euler_signed_sum(rs, gt.elements[w_id], word)
        except (AssertionError, KltangentError) as exc:
            out.record(word=word, w=gt.word_of(w_id), expected=1, got=repr(exc))
            return
        if value != 1:
            out.record(word=word, w=gt.word_of(w_id), expected=1, got=value)

    if sample is None:
        for idx, word in _iter_words(gt):
            for w_id in _bits(masks[idx]):
                check(word, w_id)
    else:
        rng = random.Random(seed)
        size = len(gt.elements)
        for _ in range(sample):
            idx = rng.randrange(size)
            word = _random_reduced_word(gt, idx, rng)
            w_id = rng.choice(list(_bits(masks[idx])))
            check(word, w_id)
    return _finish(out, t0)


def _random_reduced_word(gt: GroupTable, idx: int, rng: random.Random):
    word = []
    cur = idx
    while gt.length[cur] > 0:
        descents = [i for i in range(1, gt.rs.rank + 1) if gt.length[gt.lmult[i - 1][cur]] < gt.length[cur]]
        i = rng.choice(descents)
        word.append(i)
        cur = gt.lmult[i - 1][cur]
    return tuple(word)


def ball_sphere_suite(rs: RootSystem, sample: int | None = None, seed: int = 0) -> VerifyOutcome:
    """Interior Euler characteristic (-1)^dim and facet purity for Delta(s, w)."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"ball-sphere[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()

    def check(word, w_id):
        out.cases += 1
        w = gt.elements[w_id]
        size = len(word) - w.length
        try:
            complex_ = build_complex(rs, w, word)
            _, interior = euler_characteristics(complex_)
        except (AssertionError, KltangentError) as exc:
            out.record(word=word, w=gt.word_of(w_id), got=repr(exc))
            return
        if interior != (-1) ** ((size - 1) % 2):
            out.record(word=word, w=gt.word_of(w_id), expected=(-1) ** ((size - 1) % 2), got=interior)
        bad = [f for f in complex_.facets if len(f) != size]
        if bad:
            out.record(word=word, w=gt.word_of(w_id), expected=f"facets of size {size}", got=bad)

    if sample is None:
        for idx, word in _iter_words(gt):
            for w_id in _bits(masks[idx]):
                check(word, w_id)
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            idx = rng.randrange(len(gt.elements))
            word = _random_reduced_word(gt, idx, rng)
            w_id = rng.choice(list(_bits(masks[idx])))
            check(word, w_id)
    return _finish(out, t0)


def kclass_well_definedness_suite(rs: RootSystem) -> VerifyOutcome:
    """The localized class is the same Laurent polynomial for every reduced word."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"kclass-well-defined[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    for idx in range(len(gt.elements)):
        words = list(gt.reduced_words_of(idx))
        for w_id in _bits(masks[idx]):
            w = gt.elements[w_id]
            reference: LaurentPoly | None = None
            for word in words:
                out.cases += 1
                value = kclass_restriction(rs, w, word)
                if reference is None:
                    reference = value
                elif value != reference:
                    out.record(
                        x=gt.word_of(idx), w=gt.word_of(w_id), word=word,
                        expected=reference.items(), got=value.items(),
                    )
    return _finish(out, t0)


def cone_mechanism_suite(rs: RootSystem, sample: int | None = None, seed: int = 0) -> VerifyOutcome:
    """Tangent-cone coefficient at -gamma_j is 0/1 and 0 iff explicit factor.

    Runs over canonical reduced words, all w <= x, and every integrally
    indecomposable position j.
    """
    t0 = time.perf_counter()
    out = VerifyOutcome(f"cone-mechanism[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    rng = random.Random(seed)
    size = len(gt.elements)

    def triples():
        if sample is None:
            for idx in range(size):
                for w_id in _bits(masks[idx]):
                    yield idx, w_id
        else:
            for _ in range(sample):
                idx = rng.randrange(size)
                yield idx, rng.choice(list(_bits(masks[idx])))

    for idx, w_id in triples():
        word = gt.word_of(idx)
        gammas = gamma_sequence(rs, word).gammas
        inversions = frozenset(gammas)
        w = gt.elements[w_id]
        for j, gamma_j in enumerate(gammas, start=1):
            if not is_integrally_indecomposable(gamma_j, inversions):
                continue
            out.cases += 1
            coeff = tangent_cone_coefficient(rs, negate(gamma_j), w, word)
            explicit = is_explicit_factor(rs, j, w, word)
            if coeff not in (0, 1) or (coeff == 0) != explicit:
                out.record(x=word, w=gt.word_of(w_id), j=j, explicit=explicit, got=coeff)
    return _finish(out, t0)


def type_a_oracle_suite(rs: RootSystem) -> VerifyOutcome:
    """In/Out verdicts match the type-A ordinary-product oracle, every word."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"type-a-oracle[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    indec_by_x: dict[int, frozenset] = {}
    for idx, word in _iter_words(gt):
        if idx not in indec_by_x:
            indec_by_x[idx] = _indecomposable_roots(rs, inversion_set_of_inverse(rs, gt.elements[idx]))
        indec = indec_by_x[idx]
        gammas = gamma_sequence(rs, word).gammas
        for w_id in _bits(masks[idx]):
            w = gt.elements[w_id]
            for j, gamma_j in enumerate(gammas, start=1):
                if gamma_j not in indec:
                    continue
                out.cases += 1
                verdict = kl_tangent_membership(rs, j, w, word, include_cone_coefficient=False).verdict
                oracle = type_a_tangent_oracle(rs, j, w, word)
                if (verdict is Verdict.IN) != oracle or verdict is Verdict.UNDETERMINED:
                    out.record(x=word, w=gt.word_of(w_id), j=j, oracle=oracle, got=verdict.value)
    return _finish(out, t0)


def simply_laced_product_suite(rs: RootSystem) -> VerifyOutcome:
    """delta(s \\ j) equals the ordinary product s_1..s^_j..s_l at indecomposable j.

    Runs over every reduced word of every element (simply-laced families).
    """
    t0 = time.perf_counter()
    out = VerifyOutcome(f"simply-laced-products[{rs.cartan_type}]")
    gt = group_table(rs)
    indec_by_x: dict[int, frozenset] = {}
    for idx, word in _iter_words(gt):
        if idx not in indec_by_x:
            indec_by_x[idx] = _indecomposable_roots(rs, inversion_set_of_inverse(rs, gt.elements[idx]))
        indec = indec_by_x[idx]
        gammas = gamma_sequence(rs, word).gammas
        for j, gamma_j in enumerate(gammas, start=1):
            if gamma_j not in indec:
                continue
            out.cases += 1
            punctured = word[: j - 1] + word[j:]
            demazure = gt.demazure_fold(punctured)
            ordinary = gt.product_fold(punctured)
            if demazure != ordinary:
                out.record(x=word, j=j, demazure=gt.word_of(demazure), ordinary=gt.word_of(ordinary))
    return _finish(out, t0)


def cominuscule_permutation_suite(rs: RootSystem) -> VerifyOutcome:
    """Cominuscule elements of type A are exactly the 321-avoiding permutations."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"cominuscule-permutations[{rs.cartan_type}]")
    gt = group_table(rs)
    for x in gt.elements:
        out.cases += 1
        avoiding = type_a_cominuscule_oracle(rs.rank, element_to_permutation(rs, x))
        cominuscule = is_cominuscule_element(rs, x)
        if avoiding != cominuscule:
            out.record(x=canonical_reduced_word(rs, x), avoids_321=avoiding, cominuscule=cominuscule)
    return _finish(out, t0)


def cominuscule_indecomposable_suite(rs: RootSystem) -> VerifyOutcome:
    """Cominuscule x => every inversion of x^{-1} is integrally indecomposable."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"cominuscule-indecomposable[{rs.cartan_type}]")
    gt = group_table(rs)
    for x in gt.elements:
        if not is_cominuscule_element(rs, x):
            continue
        inversions = inversion_set_of_inverse(rs, x)
        for gamma in inversions:
            out.cases += 1
            if not is_integrally_indecomposable(gamma, inversions):
                out.record(x=canonical_reduced_word(rs, x), gamma=gamma)
    return _finish(out, t0)


def cominuscule_parabolic_suite(rs: RootSystem) -> VerifyOutcome:
    """Minimal coset representatives of cominuscule maximal parabolics are cominuscule."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"cominuscule-parabolic[{rs.cartan_type}]")
    gt = group_table(rs)
    for node in sorted(cominuscule_nodes(rs)):
        parabolic = frozenset(range(1, rs.rank + 1)) - {node}
        for x in gt.elements:
            if not is_min_coset_rep(rs, x, parabolic):
                continue
            out.cases += 1
            if not is_cominuscule_element(rs, x):
                out.record(node=node, x=canonical_reduced_word(rs, x))
    return _finish(out, t0)


def cominuscule_complete_suite(rs: RootSystem) -> VerifyOutcome:
    """Reports at cominuscule x never leave a weight Undetermined."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"cominuscule-complete[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    for idx, x in enumerate(gt.elements):
        if not is_cominuscule_element(rs, x):
            continue
        for w_id in _bits(masks[idx]):
            out.cases += 1
            report = kl_tangent_report(rs, gt.elements[w_id], x)
            if not report.complete:
                out.record(x=canonical_reduced_word(rs, x), w=gt.word_of(w_id))
    return _finish(out, t0)


def te_containment_suite(rs: RootSystem) -> VerifyOutcome:
    """Invariant-curve weights embed into the tangent verdicts at cominuscule x.

    For every cominuscule x, position j and w <= x, the ordinary-product test
    passing forces the Demazure test to pass (TE weights get verdict In).
    Checked with the group tables and Bruhat bitmasks, all w at once.
    """
    t0 = time.perf_counter()
    out = VerifyOutcome(f"te-containment[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    for idx, x in enumerate(gt.elements):
        if not is_cominuscule_element(rs, x):
            continue
        word = gt.word_of(idx)
        for j in range(1, len(word) + 1):
            out.cases += 1
            punctured = word[: j - 1] + word[j:]
            te_mask = masks[gt.product_fold(punctured)]
            in_mask = masks[gt.demazure_fold(punctured)]
            bad = te_mask & ~in_mask & masks[idx]
            if bad:
                out.record(x=word, j=j, w=[gt.word_of(w_id) for w_id in _bits(bad)])
    return _finish(out, t0)


def explicit_factor_random_suite(labels, cases: int, seed: int) -> VerifyOutcome:
    """Fast Demazure criterion vs subword enumeration on random instances."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"explicit-factor-fast-slow[{','.join(labels)}]")
    rng = random.Random(seed)
    systems = [build_root_system(label) for label in labels]
    tables = [group_table(rs) for rs in systems]
    for _ in range(cases):
        pick = rng.randrange(len(systems))
        rs, gt = systems[pick], tables[pick]
        raw = tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(1, 8)))
        idx = gt.demazure_fold(raw)
        word = gt.word_of(idx)
        if not word:
            continue
        sub = tuple(letter for letter in word if rng.random() < 0.6)
        w = gt.elements[gt.demazure_fold(sub)]
        j = rng.randint(1, len(word))
        out.cases += 1
        fast = is_explicit_factor(rs, j, w, word, method="demazure")
        slow = is_explicit_factor(rs, j, w, word, method="enumerate")
        if fast != slow:
            out.record(type=str(rs.cartan_type), x=word, w=canonical_reduced_word(rs, w), j=j,
                       fast=fast, slow=slow)
    return _finish(out, t0)


def decomposable_guard_suite() -> VerifyOutcome:
    """The A2 decomposable position stays Undetermined unless the oracle is requested."""
    t0 = time.perf_counter()
    out = VerifyOutcome("decomposable-guard[A2]")
    rs = build_root_system("A2")
    w = word_to_element(rs, (1,))
    x = word_to_element(rs, (1, 2, 1))
    out.cases += 1
    plain = kl_tangent_report(rs, w, x)
    if plain.statuses[1].verdict is not Verdict.UNDETERMINED or plain.complete:
        out.record(flag=False, expected="Undetermined", got=plain.statuses[1].verdict.value)
    out.cases += 1
    upgraded = kl_tangent_report(rs, w, x, use_type_a_oracle=True)
    if upgraded.statuses[1].verdict is not Verdict.OUT or not upgraded.complete:
        out.record(flag=True, expected="Out", got=upgraded.statuses[1].verdict.value)
    return _finish(out, t0)


def fixed_examples_suite() -> VerifyOutcome:
    """Three pinned fixtures: the A2 class, the A2 verdicts, the D4 element."""
    t0 = time.perf_counter()
    out = VerifyOutcome("fixed-examples")
    a2 = build_root_system("A2")
    s1 = word_to_element(a2, (1,))

    out.cases += 1
    expected_class = LaurentPoly({(0, 0): 1, (-1, -1): -1})
    for word in ((1, 2, 1), (2, 1, 2)):
        got = kclass_restriction(a2, s1, word)
        if got != expected_class:
            out.record(example="a2-class", word=word, expected=expected_class.items(), got=got.items())

    out.cases += 1
    status = kl_tangent_membership(a2, 2, s1, (1, 2, 1))
    oracle = type_a_tangent_oracle(a2, 2, s1, (1, 2, 1))
    if (
        status.verdict is not Verdict.UNDETERMINED
        or not status.evidence.demazure_ok
        or status.evidence.ordinary_product_ok
        or oracle
    ):
        out.record(example="a2-verdicts", got=(status.verdict.value, status.evidence))

    out.cases += 1
    d4 = build_root_system("D4")
    x = word_to_element(d4, (2, 1, 3, 4, 2))
    inversions = inversion_set_of_inverse(d4, x)
    expected_inv = {
        root_from_epsilon(d4, eps)
        for eps in [(1, 0, -1, 0), (1, 1, 0, 0), (0, 1, -1, 0), (0, 1, 0, -1), (0, 1, 0, 1)]
    }
    if inversions != expected_inv:
        out.record(example="d4-inversions", expected=sorted(expected_inv), got=sorted(inversions))
    if not all(is_integrally_indecomposable(g, inversions) for g in inversions):
        out.record(example="d4-indecomposable", got=sorted(inversions))
    if is_cominuscule_element(d4, x):
        out.record(example="d4-not-cominuscule", got=True)
    return _finish(out, t0)


def root_basics_suite(rs: RootSystem) -> VerifyOutcome:
    """Reflection involutivity, root closure, and height-1 count."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"root-basics[{rs.cartan_type}]")
    from .rootsys import reflect

    all_roots = set(rs.positive_roots) | {negate(v) for v in rs.positive_roots}
    for alpha in rs.positive_roots:
        for i in range(1, rs.rank + 1):
            out.cases += 1
            image = reflect(rs, i, alpha)
            if image not in all_roots:
                out.record(check="closure", i=i, alpha=alpha, got=image)
            if reflect(rs, i, image) != alpha:
                out.record(check="involution", i=i, alpha=alpha)
    out.cases += 1
    if sum(1 for v in rs.positive_roots if sum(v) == 1) != rs.rank:
        out.record(check="simple-count")
    return _finish(out, t0)


def weyl_basics_suite(rs: RootSystem, word_length_max: int = 6) -> VerifyOutcome:
    """Gamma well-definedness, Bruhat vs subword oracle, length complements."""
    t0 = time.perf_counter()
    out = VerifyOutcome(f"weyl-basics[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    size = len(gt.elements)
    w0 = max(range(size), key=lambda i: gt.length[i])

    for idx, x in enumerate(gt.elements):
        if x.length > word_length_max:
            continue
        inv = inversion_set_of_inverse(rs, x)
        sets = {frozenset(gamma_sequence(rs, word).gammas) for word in gt.reduced_words_of(idx)}
        out.cases += 1
        if sets != {inv}:
            out.record(check="gamma", x=gt.word_of(idx), got=[sorted(s) for s in sets])

    # Bruhat order against the subword oracle, all pairs.
    for v_id in range(size):
        word = gt.word_of(v_id)
        achievable = set()
        for mask in range(1 << len(word)):
            sub = tuple(word[i] for i in range(len(word)) if (mask >> i) & 1)
            achievable.add((gt.product_fold(sub), len(sub)))
        for u_id in range(size):
            out.cases += 1
            oracle = (u_id, gt.length[u_id]) in achievable
            fast = bruhat_leq(rs, gt.elements[u_id], gt.elements[v_id])
            if oracle != fast:
                out.record(check="bruhat", u=gt.word_of(u_id), v=word, oracle=oracle, got=fast)

    from .weyl import inverse, multiply

    for idx, x in enumerate(gt.elements):
        out.cases += 1
        complement = multiply(rs, inverse(rs, x), gt.elements[w0])
        if x.length + complement.length != gt.length[w0]:
            out.record(check="w0-length", x=gt.word_of(idx))
    return _finish(out, t0)


def hecke_subword_suite(rs: RootSystem, word_length_max: int = 6) -> VerifyOutcome:
    """Demazure-subword equivalence: delta(q) >= w iff q has a reduced word for w.

    Exhaustive over every word of length <= word_length_max, every target w;
    also checks the associativity surrogate delta(q1 q2) = delta(r q2) with r
    a reduced word for delta(q1).
    """
    t0 = time.perf_counter()
    out = VerifyOutcome(f"hecke-subword-equivalence[{rs.cartan_type}]")
    gt = group_table(rs)
    masks = gt.leq_masks()
    size = len(gt.elements)

    words: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(word_length_max):
        frontier = [w + (i,) for w in frontier for i in range(1, rs.rank + 1)]
        words.extend(frontier)

    for q in words:
        delta_id = gt.demazure_fold(q)
        achievable = set()
        for mask in range(1 << len(q)):
            sub = tuple(q[i] for i in range(len(q)) if (mask >> i) & 1)
            achievable.add((gt.product_fold(sub), len(sub)))
        for w_id in range(size):
            out.cases += 1
            contains_reduced = (w_id, gt.length[w_id]) in achievable
            demazure_above = bool((masks[delta_id] >> w_id) & 1)
            if contains_reduced != demazure_above:
                out.record(check="equivalence", q=q, w=gt.word_of(w_id),
                           contains=contains_reduced, demazure_above=demazure_above)
        for cut in range(len(q) + 1):
            out.cases += 1
            left = gt.word_of(gt.demazure_fold(q[:cut]))
            if gt.demazure_fold(left + q[cut:]) != delta_id:
                out.record(check="assoc", q=q, cut=cut)
    return _finish(out, t0)


def run_battery(label: str, config: VerifyConfig = VerifyConfig()) -> list[VerifyOutcome]:
    """All suites applicable to one Cartan type, exhaustive where desk-scale."""
    rs = build_root_system(label)
    gt = group_table(rs, config.group_order_guard)  # raises GroupTooLarge early
    order = len(gt.elements)
    exhaustive = order <= config.exhaustive_order_max
    sample = None if exhaustive else config.sampled_cases
    outcomes = [root_basics_suite(rs)]
    if order <= 200:
        outcomes.append(weyl_basics_suite(rs))
    if rs.rank <= 3 and order <= 48:
        outcomes.append(hecke_subword_suite(rs))
    if order <= 2_000:
        outcomes.append(euler_identity_suite(rs, sample=sample, seed=config.seed))
        outcomes.append(ball_sphere_suite(rs, sample=sample, seed=config.seed))
        if order <= 48:
            outcomes.append(kclass_well_definedness_suite(rs))
        outcomes.append(cone_mechanism_suite(rs, sample=None if order <= 24 else config.sampled_cases,
                                             seed=config.seed))
        outcomes.append(cominuscule_indecomposable_suite(rs))
        outcomes.append(cominuscule_parabolic_suite(rs))
        if order <= 200:
            outcomes.append(cominuscule_complete_suite(rs))
            outcomes.append(te_containment_suite(rs))
        if rs.cartan_type.family == "A":
            outcomes.append(cominuscule_permutation_suite(rs))
            if order <= 24:
                outcomes.append(type_a_oracle_suite(rs))
        if rs.cartan_type.family in ("A", "D", "E") and order <= 200:
            outcomes.append(simply_laced_product_suite(rs))
    outcomes.append(explicit_factor_random_suite([label], config.random_cases, config.seed))
    outcomes.append(decomposable_guard_suite())
    outcomes.append(fixed_examples_suite())
    return outcomes
