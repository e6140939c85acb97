"""Predicates tying soft sets to gamma-semiring structure.

A soft set over a structure's carrier is a soft gamma-semiring when it is
non-null and every support value is a closed subalgebra.  Values at
parameters outside the support may be empty without penalty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    GammaHom,
    GammaSemiring,
    is_gamma_homomorphism,
    iter_bits,
    kernel,
    sub_gamma_witness_mask,
)
from .errors import DomainError, InputError
from .reports import PASSED, TheoremVerdict, Witness
from .soft_sets import SoftSet


def _require_carrier(gs: GammaSemiring, ss: SoftSet) -> None:
    if ss.universe != gs.elements:
        raise InputError("soft set universe must equal the structure carrier, in order")


def is_soft_gamma_semiring(gs: GammaSemiring, ss: SoftSet) -> Witness:
    """Non-null and every support value closed; first failure witnessed."""
    _require_carrier(gs, ss)
    if ss.is_null():
        return Witness(False, kind="null-soft-set")
    for w, m in zip(ss.parameters, ss.masks):
        if m == 0:
            continue
        sw = sub_gamma_witness_mask(gs, m)
        if not sw:
            return Witness(False, kind=sw.kind, failing_parameter=w, elements=sw.elements)
    return PASSED


@dataclass(frozen=True)
class SoftGammaSemiring:
    """A validated pairing of a structure with a soft set over its carrier."""

    base: GammaSemiring
    soft: SoftSet

    def __post_init__(self):
        w = is_soft_gamma_semiring(self.base, self.soft)
        if not w:
            raise DomainError(
                f"soft set is not a soft gamma-semiring: {w.kind}"
                + (f" at parameter {w.failing_parameter!r}" if w.failing_parameter is not None else "")
            )


def is_trivial_soft(gs: GammaSemiring, ss: SoftSet) -> bool:
    """Every value equals {zero}; InputError when no zero is designated."""
    _require_carrier(gs, ss)
    if gs.zero is None:
        raise InputError("trivial test requires a designated zero")
    zmask = 1 << gs.s.pos(gs.zero)
    return all(m == zmask for m in ss.masks)


def is_whole_soft(gs: GammaSemiring, ss: SoftSet) -> bool:
    """Every value equals the whole carrier."""
    _require_carrier(gs, ss)
    return all(m == gs.full_mask for m in ss.masks)


def soft_image_under_hom(hom: GammaHom, ss: SoftSet, onto: bool = False) -> SoftSet:
    """Pointwise image of every value, same parameters, over the target carrier.

    With onto=True the homomorphism must be surjective, and when the input is
    a soft gamma-semiring the output is asserted to be one too.
    """
    _require_carrier(hom.source, ss)
    if onto and not hom.surjective:
        raise InputError("onto flag set but the homomorphism is not surjective")
    out = SoftSet(hom.target.elements, ss.parameters, tuple(hom.image_mask(m) for m in ss.masks))
    if onto and is_soft_gamma_semiring(hom.source, ss):
        assert is_soft_gamma_semiring(hom.target, out), "surjective image lost closure"
    return out


def soft_preimage_under_hom(hom: GammaHom, ss: SoftSet) -> SoftSet:
    """Pointwise preimage of every value, same parameters, over the source carrier."""
    _require_carrier(hom.target, ss)
    return SoftSet(
        hom.source.elements, ss.parameters, tuple(hom.preimage_mask(m) for m in ss.masks)
    )


def _single_verdict(theorem: str, outcome: str, counterexample: dict | None = None) -> TheoremVerdict:
    return TheoremVerdict(
        theorem=theorem,
        trials=1,
        passes=1 if outcome == "pass" else 0,
        vacuous=1 if outcome == "vacuous" else 0,
        failures=1 if outcome == "fail" else 0,
        counterexample=counterexample,
    )


def check_trivial_whole_theorem(hom: GammaHom, ss: SoftSet, case: str) -> TheoremVerdict:
    """Check one of the four kernel/whole/image/trivial transport statements.

    case i:   all values equal ker(f)      -> image is the trivial soft set.
    case ii:  f onto, input whole          -> image is whole.
    case iii: all values equal f(carrier)  -> preimage is whole.
    case iv:  f injective, input trivial   -> preimage is trivial.
    Cases i/ii read the soft set over the source, iii/iv over the target.
    The verdict is vacuous when the case hypothesis does not hold.
    """
    if case not in ("i", "ii", "iii", "iv"):
        raise InputError(f"case must be one of i, ii, iii, iv, got {case!r}")
    theorem = f"T3.17{case}"
    src, tgt = hom.source, hom.target

    if case in ("i", "ii"):
        _require_carrier(src, ss)
    else:
        _require_carrier(tgt, ss)

    if case == "i":
        ker_mask = src.subset_mask(kernel(hom))
        hyp = (
            ker_mask != 0
            and all(m == ker_mask for m in ss.masks)
            and bool(is_soft_gamma_semiring(src, ss))
        )
        if not hyp:
            return _single_verdict(theorem, "vacuous")
        image = soft_image_under_hom(hom, ss)
        ok = is_trivial_soft(tgt, image) and bool(is_soft_gamma_semiring(tgt, image))
        return _single_verdict(
            theorem, "pass" if ok else "fail", None if ok else {"image_not_trivial": True}
        )

    if case == "ii":
        hyp = (
            hom.surjective
            and is_whole_soft(src, ss)
            and bool(is_soft_gamma_semiring(src, ss))
        )
        if not hyp:
            return _single_verdict(theorem, "vacuous")
        image = soft_image_under_hom(hom, ss)
        ok = is_whole_soft(tgt, image) and bool(is_soft_gamma_semiring(tgt, image))
        return _single_verdict(
            theorem, "pass" if ok else "fail", None if ok else {"image_not_whole": True}
        )

    if case == "iii":
        f_s = hom.image_mask(src.full_mask)
        hyp = all(m == f_s for m in ss.masks) and bool(is_soft_gamma_semiring(tgt, ss))
        if not hyp:
            return _single_verdict(theorem, "vacuous")
        pre = soft_preimage_under_hom(hom, ss)
        ok = is_whole_soft(src, pre) and bool(is_soft_gamma_semiring(src, pre))
        return _single_verdict(
            theorem, "pass" if ok else "fail", None if ok else {"preimage_not_whole": True}
        )

    # case iv
    if src.zero is None or tgt.zero is None:
        return _single_verdict(theorem, "vacuous")
    hyp = hom.injective and is_trivial_soft(tgt, ss) and bool(is_soft_gamma_semiring(tgt, ss))
    if not hyp:
        return _single_verdict(theorem, "vacuous")
    pre = soft_preimage_under_hom(hom, ss)
    ok = is_trivial_soft(src, pre) and bool(is_soft_gamma_semiring(src, pre))
    return _single_verdict(
        theorem, "pass" if ok else "fail", None if ok else {"preimage_not_trivial": True}
    )


def is_soft_sub_gamma_semiring(gs: GammaSemiring, inner: SoftSet, outer: SoftSet) -> Witness:
    """Parameter containment plus, on the inner support, value containment and closure.

    Both arguments must already be soft gamma-semirings over gs (DomainError
    otherwise, carrying the first witness).  Closure of an inner value viewed
    inside the outer value reduces to containment plus closure in the whole
    carrier.
    """
    for name, ss in (("inner", inner), ("outer", outer)):
        w = is_soft_gamma_semiring(gs, ss)
        if not w:
            raise DomainError(
                f"{name} soft set is not a soft gamma-semiring ({w.kind}"
                + (f" at parameter {w.failing_parameter!r})" if w.failing_parameter is not None else ")")
            )
    for w in inner.parameters:
        if not outer.has_param(w):
            return Witness(False, kind="parameter-not-contained", failing_parameter=w)
    for w, m in zip(inner.parameters, inner.masks):
        if m == 0:
            continue
        om = outer.mask(w)
        escaped = m & ~om
        if escaped:
            elem = inner.universe[next(iter_bits(escaped))]
            return Witness(False, kind="value-not-contained", failing_parameter=w, elements=(elem,))
        sw = sub_gamma_witness_mask(gs, m)
        if not sw:
            return Witness(False, kind=sw.kind, failing_parameter=w, elements=sw.elements)
    return PASSED


def is_soft_gamma_homomorphism(
    f, g, source: SoftGammaSemiring, target: SoftGammaSemiring
) -> Witness:
    """Three clauses: f a surjective structure homomorphism, g onto the target
    parameters, and pointwise image compatibility f(value(y)) == target value
    at g(y).  Never raises; the witness records the failing clause.
    """
    sgs, tgs = source.base, target.base
    sss, tss = source.soft, target.soft
    f = dict(f)
    g = dict(g)

    if sgs.gamma_elements != tgs.gamma_elements:
        return Witness(False, kind="epimorphism", elements=("gamma-mismatch",))
    try:
        if not is_gamma_homomorphism(f, sgs, tgs):
            return Witness(False, kind="epimorphism")
    except InputError:
        return Witness(False, kind="epimorphism")
    t_pos = tgs.s._pos
    if {t_pos[f[e]] for e in sgs.elements} != set(range(tgs.size)):
        return Witness(False, kind="epimorphism", elements=("not-surjective",))

    for w in sss.parameters:
        if w not in g:
            return Witness(False, kind="parameter-surjection", failing_parameter=w)
        if not tss.has_param(g[w]):
            return Witness(False, kind="parameter-surjection", failing_parameter=w)
    if {g[w] for w in sss.parameters} != set(tss.parameters):
        return Witness(False, kind="parameter-surjection")

    for w, m in zip(sss.parameters, sss.masks):
        image = 0
        for i in iter_bits(m):
            image |= 1 << t_pos[f[sss.universe[i]]]
        if image != tss.mask(g[w]):
            return Witness(False, kind="value-compatibility", failing_parameter=w)
    return PASSED
