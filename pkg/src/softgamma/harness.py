"""Seeded instance generation and mechanical checking of the closure laws.

Each registered law pairs a generation policy (which realizes the law's
hypotheses: values drawn from enumerated subalgebras, nested families,
chains, disjoint parameter sets, canonical homomorphisms) with a conclusion
check.  A trial verdict is:

  pass     the conclusion held;
  vacuous  the operation or a predicate precondition was undefined on the
           instance, a required soft set was null, or a structural gate
           (e.g. pairwise-disjoint parameter sets) failed;
  fail     the conclusion was evaluated and did not hold; a replayable
           counterexample document is produced.

Value-level hypothesis violations are deliberately *not* gated: feeding a
non-chain or non-subalgebra instance to a check evaluates the conclusion
honestly, which is what drop-hypothesis fuzzing exploits to demonstrate that
a hypothesis is necessary.  With drop_hypothesis, the hypothesis-enforcing
policies are disabled: the plain closure laws then draw values as arbitrary
subsets, while the nested containment laws keep subalgebra values (so their
preconditions stay evaluable) and stop confining members to the enclosing
soft set.

Randomness comes from random.Random (MT19937) seeded per trial with
template.seed + trial_index; the draw order inside generate_instance is part
of the determinism contract: descriptor, homomorphism, outer parameters and
values, then per member its parameters and values, then the auxiliary
target-side member.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Callable

from . import files
from .algebra import (
    FiniteCommutativeSemigroup,
    GammaHom,
    GammaSemiring,
    gamma_hom,
    identity_hom,
    kernel,
)
from .errors import DomainError, GenerationError, InputError
from .generators import make_matrix_gamma, make_minmax_gamma, make_zn_gamma, product_gamma
from .reports import TheoremVerdict, Witness
from .soft_gamma import (
    check_trivial_whole_theorem,
    is_soft_gamma_semiring,
    is_soft_sub_gamma_semiring,
    is_trivial_soft,
    is_whole_soft,
    soft_image_under_hom,
    soft_preimage_under_hom,
)
from .soft_sets import (
    SoftSet,
    and_intersect_family,
    cartesian_product,
    extended_intersect,
    extended_union,
    or_union_family,
    restricted_intersect,
    restricted_union,
)


@dataclass(frozen=True)
class InstanceSpec:
    """Seed-determined recipe for one fuzzing instance.

    generator "mix" rotates among the three structure families; size and
    gamma pin them down ((n,) for zn/minmax, (p, rows, cols) for matrix; an
    empty gamma means a seeded random nonempty subset).  family_size None
    draws 1..3 members.  Policies: value_policy selects where values come
    from; chain forces all drawn values into one containment chain
    (chain_outer extends that to the enclosing soft set); disjoint gives
    members pairwise disjoint parameter sets; same_parameters gives them all
    the first member's parameters; anchored forces a common parameter;
    nested draws members inside an enclosing soft set (nested_free keeps the
    parameter nesting but stops constraining values to the enclosing ones);
    with_hom attaches the family's canonical surjective homomorphism
    (hom_kind "identity" for the identity); target_side moves generation to
    the homomorphism target.
    """

    generator: str = "mix"
    size: tuple[int, ...] = ()
    gamma: tuple[int, ...] = ()
    family_size: int | None = None
    parameter_pool: tuple[str, ...] = ("a", "b", "c", "d")
    max_parameters: int = 3
    empty_rate: float = 0.2
    value_policy: str = "subsemirings"
    chain: bool = False
    chain_outer: bool = False
    disjoint: bool = False
    same_parameters: bool = False
    anchored: bool = False
    nested: bool = False
    nested_free: bool = False
    with_hom: bool = False
    hom_kind: str = "collapse"
    target_side: bool = False
    seed: int = 0


@dataclass
class Instance:
    """A generated (or hand-built) instance: structure, soft sets, extras."""

    gs: GammaSemiring
    soft_sets: list[SoftSet]
    outer: SoftSet | None = None
    hom: GammaHom | None = None
    aux_target: SoftSet | None = None
    members_over_target: bool = False
    descriptor: tuple = ("custom",)
    spec: InstanceSpec = field(default_factory=InstanceSpec)

    @property
    def side_gs(self) -> GammaSemiring:
        if self.members_over_target and self.hom is not None:
            return self.hom.target
        return self.gs


_VALUE_POLICIES = ("subsemirings", "arbitrary", "kernel", "whole", "carrier-image", "trivial")

_structures: dict[tuple, GammaSemiring] = {}
_homs: dict[tuple, GammaHom] = {}
_products: dict[tuple[int, int], GammaSemiring] = {}
_product_refs: list[GammaSemiring] = []


def _random_gamma(rng: random.Random, n: int) -> tuple[int, ...]:
    bits = rng.getrandbits(n)
    if bits == 0:
        bits = 1 << rng.randrange(n)
    return tuple(i for i in range(n) if bits >> i & 1)


def _resolve_descriptor(spec: InstanceSpec, rng: random.Random) -> tuple:
    kind = spec.generator
    if kind == "mix":
        kind = rng.choice(("zn", "minmax", "matrix"))
    if kind == "zn":
        n = spec.size[0] if spec.size else rng.choice((4, 6, 8))
        gamma = tuple(spec.gamma) if spec.gamma else _random_gamma(rng, n)
        return ("zn", n, gamma)
    if kind == "minmax":
        n = spec.size[0] if spec.size else rng.choice((3, 4, 5))
        gamma = tuple(spec.gamma) if spec.gamma else _random_gamma(rng, n)
        return ("minmax", n, gamma)
    if kind == "matrix":
        p, rows, cols = spec.size if spec.size else (2, 1, 2)
        return ("matrix", p, rows, cols)
    raise InputError(f"unknown generator {spec.generator!r}")


def base_structure(descriptor: tuple) -> GammaSemiring:
    gs = _structures.get(descriptor)
    if gs is None:
        kind = descriptor[0]
        if kind == "zn":
            gs = make_zn_gamma(descriptor[1], descriptor[2])
        elif kind == "minmax":
            gs = make_minmax_gamma(descriptor[1], descriptor[2])
        elif kind == "matrix":
            gs = make_matrix_gamma(*descriptor[1:])
        else:
            raise InputError(f"unknown descriptor {descriptor!r}")
        _structures[descriptor] = gs
    return gs


def _smallest_prime_factor(n: int) -> int:
    for p in range(2, n + 1):
        if n % p == 0:
            return p
    return n


def _zn_like(m: int, gamma_values: tuple[int, ...]) -> GammaSemiring:
    # integers mod m whose gamma labels keep the source's (possibly larger) values
    elements = tuple(str(i) for i in range(m))
    add = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    product = tuple(
        tuple(tuple(i * g * j % m for j in range(m)) for g in gamma_values) for i in range(m)
    )
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add),
        tuple(str(g) for g in gamma_values),
        None,
        product,
        zero="0",
    )


def _minmax_like(m: int, gamma_values: tuple[int, ...]) -> GammaSemiring:
    elements = tuple(str(i) for i in range(m))
    add = tuple(tuple(max(i, j) for j in range(m)) for i in range(m))
    product = tuple(
        tuple(tuple(min(i, g, j) for j in range(m)) for g in gamma_values) for i in range(m)
    )
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add),
        tuple(str(g) for g in gamma_values),
        None,
        product,
        zero="0",
    )


def canonical_hom(descriptor: tuple, hom_kind: str = "collapse") -> GammaHom:
    """The family's deterministic surjective homomorphism.

    zn collapses mod its largest proper divisor, minmax clamps to the lower
    half, matrix uses the identity; hom_kind "identity" forces the identity
    for any family.
    """
    key = (descriptor, hom_kind)
    hom = _homs.get(key)
    if hom is not None:
        return hom
    source = base_structure(descriptor)
    if hom_kind == "identity":
        hom = identity_hom(source)
    elif hom_kind == "collapse":
        kind = descriptor[0]
        if kind == "zn":
            n, gamma = descriptor[1], descriptor[2]
            m = 1 if n == 1 else n // _smallest_prime_factor(n)
            target = _zn_like(m, gamma)
            hom = gamma_hom(source, target, {str(i): str(i % m) for i in range(n)})
        elif kind == "minmax":
            n, gamma = descriptor[1], descriptor[2]
            m = (n + 1) // 2
            target = _minmax_like(m, gamma)
            hom = gamma_hom(source, target, {str(i): str(min(i, m - 1)) for i in range(n)})
        else:
            hom = identity_hom(source)
    else:
        raise InputError(f"unknown homomorphism kind {hom_kind!r}")
    _homs[key] = hom
    return hom


def product_structure(gs: GammaSemiring, k: int) -> GammaSemiring:
    key = (id(gs), k)
    cached = _products.get(key)
    if cached is None:
        cached = product_gamma(gs, k)
        _products[key] = cached
        _product_refs.append(gs)  # pin the key's identity
    return cached


def _draw_chain(rng: random.Random, subs: tuple[int, ...]) -> list[int]:
    order = list(subs)
    rng.shuffle(order)
    chain: list[int] = []
    for m in order:
        if all(m & ~c == 0 or c & ~m == 0 for c in chain):
            chain.append(m)
    return chain


def _draw_parameters(
    rng: random.Random,
    pool: tuple,
    max_size: int,
    anchored: bool,
) -> tuple:
    size = rng.randint(1, max(1, min(max_size, len(pool))))
    idxs = rng.sample(range(len(pool)), size)
    if anchored and 0 not in idxs:
        idxs[0] = 0
    return tuple(pool[i] for i in sorted(set(idxs)))


def _forced_mask(spec: InstanceSpec, gs: GammaSemiring, side: GammaSemiring, hom) -> int:
    if spec.value_policy == "kernel":
        if hom is None:
            raise GenerationError("kernel value policy requires a homomorphism")
        return gs.subset_mask(kernel(hom))
    if spec.value_policy == "whole":
        return side.full_mask
    if spec.value_policy == "carrier-image":
        if hom is None:
            raise GenerationError("carrier-image value policy requires a homomorphism")
        return hom.image_mask(hom.source.full_mask)
    if spec.value_policy == "trivial":
        if side.zero is None:
            raise GenerationError("trivial value policy requires a designated zero")
        return 1 << side.s.pos(side.zero)
    raise AssertionError(spec.value_policy)


def generate_instance(spec: InstanceSpec) -> Instance:
    """Build the seed-determined instance for a spec.  Identical specs give
    identical instances."""
    if spec.family_size is not None and spec.family_size < 1:
        raise InputError("family_size must be at least 1")
    if spec.value_policy not in _VALUE_POLICIES:
        raise InputError(f"unknown value policy {spec.value_policy!r}")
    if not spec.parameter_pool:
        raise GenerationError("parameter pool must be nonempty")

    rng = random.Random(spec.seed)
    descriptor = _resolve_descriptor(spec, rng)
    gs = base_structure(descriptor)
    hom = canonical_hom(descriptor, spec.hom_kind) if spec.with_hom else None
    if spec.target_side and hom is None:
        raise GenerationError("target_side generation requires with_hom")
    side = hom.target if (spec.target_side and hom is not None) else gs

    subs = side.sub_masks
    chain_pool: list[int] | None = None
    if spec.chain or spec.chain_outer:
        chain_pool = _draw_chain(rng, subs)
        if not chain_pool:
            raise GenerationError("chain policy found no comparable subalgebras")

    def draw_value(candidates, outer_mask=None) -> int:
        if spec.value_policy in ("kernel", "whole", "carrier-image", "trivial"):
            return _forced_mask(spec, gs, side, hom)
        if rng.random() < spec.empty_rate:
            return 0
        if spec.value_policy == "arbitrary":
            return rng.getrandbits(side.size)
        pool = candidates
        if outer_mask is not None:
            pool = [m for m in candidates if m & ~outer_mask == 0]
        if not pool:
            return 0
        return rng.choice(pool)

    value_candidates: list[int] = list(chain_pool if spec.chain else subs)
    outer_candidates: list[int] = list(chain_pool if spec.chain_outer else subs)

    outer = None
    if spec.nested:
        oparams = _draw_parameters(rng, spec.parameter_pool, len(spec.parameter_pool), spec.anchored)
        omasks = tuple(draw_value(outer_candidates) for _ in oparams)
        outer = SoftSet(side.elements, oparams, omasks)

    k = spec.family_size if spec.family_size is not None else rng.randint(1, 3)
    members: list[SoftSet] = []
    shared_params: tuple | None = None
    for index in range(k):
        if spec.nested:
            pool = outer.parameters
        elif spec.disjoint:
            pool = tuple(f"{name}{index}" for name in spec.parameter_pool)
        else:
            pool = spec.parameter_pool
        if spec.same_parameters:
            if shared_params is None:
                shared_params = _draw_parameters(rng, pool, spec.max_parameters, spec.anchored)
            params = shared_params
        else:
            params = _draw_parameters(rng, pool, spec.max_parameters, spec.anchored)
        constrain = spec.nested and not spec.nested_free and spec.value_policy == "subsemirings"
        masks = []
        for w in params:
            outer_mask = outer.mask(w) if constrain else None
            masks.append(draw_value(value_candidates, outer_mask))
        members.append(SoftSet(side.elements, params, tuple(masks)))

    aux_target = None
    if hom is not None and not spec.target_side:
        tsubs = hom.target.sub_masks
        params = _draw_parameters(rng, spec.parameter_pool, spec.max_parameters, spec.anchored)
        masks = []
        for _ in params:
            if spec.value_policy == "arbitrary":
                masks.append(0 if rng.random() < spec.empty_rate else rng.getrandbits(hom.target.size))
            else:
                masks.append(0 if rng.random() < spec.empty_rate else rng.choice(list(tsubs)))
        aux_target = SoftSet(hom.target.elements, params, tuple(masks))

    return Instance(
        gs=gs,
        soft_sets=members,
        outer=outer,
        hom=hom,
        aux_target=aux_target,
        members_over_target=spec.target_side,
        descriptor=descriptor,
        spec=spec,
    )


def _descriptor_name(descriptor: tuple) -> str:
    parts = []
    for part in descriptor:
        if isinstance(part, tuple):
            parts.append(",".join(str(x) for x in part))
        else:
            parts.append(str(part))
    return "-".join(parts)


def _dump(
    inst: Instance,
    operation: str,
    members=(),
    result: SoftSet | None = None,
    witness: Witness | None = None,
    extra: dict | None = None,
) -> dict:
    doc = {
        "structure": files.structure_to_doc(inst.gs, name=_descriptor_name(inst.descriptor)),
        "operation": operation,
        "members": [files.soft_set_to_doc(m) for m in members],
        "members_over": "target" if inst.members_over_target else "source",
    }
    if inst.hom is not None:
        doc["hom"] = files.hom_to_doc(inst.hom)
    if inst.outer is not None:
        doc["outer"] = files.soft_set_to_doc(inst.outer)
    if result is not None:
        doc["result"] = files.soft_set_to_doc(result)
    if witness is not None:
        doc["violation"] = files.witness_to_doc(witness)
    if extra:
        doc.update(extra)
    return doc


Outcome = tuple[str, dict | None]


def _closure_check(inst: Instance, op: Callable, opname: str, members, over=None) -> Outcome:
    if any(m.is_null() for m in members):
        return "vacuous", None
    try:
        result = op(members)
    except DomainError:
        return "vacuous", None
    if result.is_null():
        return "vacuous", None
    target = over if over is not None else inst.side_gs
    w = is_soft_gamma_semiring(target, result)
    if w:
        return "pass", None
    return "fail", _dump(inst, opname, members=members, result=result, witness=w)


def _check_rint_binary(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, restricted_intersect, "restricted-intersection", inst.soft_sets[:2])


def _check_rint_family(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, restricted_intersect, "restricted-intersection", inst.soft_sets)


def _check_eint_family(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, extended_intersect, "extended-intersection", inst.soft_sets)


def _check_runion_family(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, restricted_union, "restricted-union", inst.soft_sets)


def _pairwise_disjoint(members) -> bool:
    seen: set = set()
    for m in members:
        params = set(m.parameters)
        if params & seen:
            return False
        seen |= params
    return True


def _check_eunion_family(inst: Instance, enforce: bool) -> Outcome:
    if enforce and not _pairwise_disjoint(inst.soft_sets):
        return "vacuous", None
    return _closure_check(inst, extended_union, "extended-union", inst.soft_sets)


def _check_and_binary(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, and_intersect_family, "and-intersection", inst.soft_sets[:2])


def _check_and_family(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, and_intersect_family, "and-intersection", inst.soft_sets)


def _check_or_family(inst: Instance, enforce: bool) -> Outcome:
    return _closure_check(inst, or_union_family, "or-union", inst.soft_sets)


def _check_product_family(inst: Instance, enforce: bool) -> Outcome:
    members = inst.soft_sets
    if any(m.is_null() for m in members):
        return "vacuous", None
    over = product_structure(inst.side_gs, len(members))
    result = cartesian_product(members)
    if result.is_null():
        return "vacuous", None
    w = is_soft_gamma_semiring(over, result)
    if w:
        return "pass", None
    return "fail", _dump(
        inst,
        "cartesian-product",
        members=members,
        result=result,
        witness=w,
        extra={"product_arity": len(members)},
    )


def _check_hom_transport(inst: Instance, enforce: bool) -> Outcome:
    hom = inst.hom
    applicable = False
    source_member = inst.soft_sets[0]
    if not source_member.is_null():
        applicable = True
        image = soft_image_under_hom(hom, source_member)
        w = is_soft_gamma_semiring(hom.target, image)
        if not w:
            return "fail", _dump(
                inst, "hom-image", members=[source_member], result=image, witness=w
            )
    target_member = inst.aux_target
    if target_member is not None and not target_member.is_null():
        applicable = True
        pre = soft_preimage_under_hom(hom, target_member)
        if not pre.is_null():
            w = is_soft_gamma_semiring(hom.source, pre)
            if not w:
                return "fail", _dump(
                    inst,
                    "hom-preimage",
                    members=[target_member],
                    result=pre,
                    witness=w,
                )
    if not applicable:
        return "vacuous", None
    return "pass", None


def _trivial_whole_case(case: str):
    def check(inst: Instance, enforce: bool) -> Outcome:
        hom = inst.hom
        member = inst.soft_sets[0]
        if enforce:
            verdict = check_trivial_whole_theorem(hom, member, case)
            if verdict.vacuous:
                return "vacuous", None
            if verdict.passes:
                return "pass", None
            return "fail", _dump(
                inst, f"trivial-whole-{case}", members=[member], extra=verdict.counterexample
            )
        # hypothesis dropped: evaluate the conclusion directly
        if member.is_null():
            return "vacuous", None
        src, tgt = hom.source, hom.target
        if case == "i":
            image = soft_image_under_hom(hom, member)
            ok = is_trivial_soft(tgt, image) and bool(is_soft_gamma_semiring(tgt, image))
            result = image
        elif case == "ii":
            image = soft_image_under_hom(hom, member)
            ok = is_whole_soft(tgt, image) and bool(is_soft_gamma_semiring(tgt, image))
            result = image
        elif case == "iii":
            pre = soft_preimage_under_hom(hom, member)
            ok = is_whole_soft(src, pre) and bool(is_soft_gamma_semiring(src, pre))
            result = pre
        else:
            if src.zero is None or tgt.zero is None:
                return "vacuous", None
            pre = soft_preimage_under_hom(hom, member)
            ok = is_trivial_soft(src, pre) and bool(is_soft_gamma_semiring(src, pre))
            result = pre
        if ok:
            return "pass", None
        return "fail", _dump(inst, f"trivial-whole-{case}", members=[member], result=result)

    return check


def _soft_sub_outcome(gs: GammaSemiring, inner: SoftSet, outer: SoftSet) -> Witness | None:
    try:
        return is_soft_sub_gamma_semiring(gs, inner, outer)
    except DomainError:
        return None


def _check_nested_subset(inst: Instance, enforce: bool) -> Outcome:
    inner, outer = inst.soft_sets[0], inst.outer
    if inner.is_null() or outer.is_null():
        return "vacuous", None
    w = _soft_sub_outcome(inst.side_gs, inner, outer)
    if w is None:
        return "vacuous", None
    if w:
        return "pass", None
    return "fail", _dump(inst, "soft-subsemiring-of", members=[inner], witness=w)


def _check_rint_sub_of_both(inst: Instance, enforce: bool) -> Outcome:
    members = inst.soft_sets[:2]
    if any(m.is_null() for m in members):
        return "vacuous", None
    try:
        result = restricted_intersect(members)
    except DomainError:
        return "vacuous", None
    if result.is_null():
        return "vacuous", None
    for m in members:
        w = _soft_sub_outcome(inst.side_gs, result, m)
        if w is None:
            return "vacuous", None
        if not w:
            return "fail", _dump(
                inst, "restricted-intersection", members=members, result=result, witness=w
            )
    return "pass", None


def _nested_family_check(op: Callable, opname: str):
    def check(inst: Instance, enforce: bool) -> Outcome:
        members, outer = inst.soft_sets, inst.outer
        if outer.is_null() or any(m.is_null() for m in members):
            return "vacuous", None
        try:
            result = op(members)
        except DomainError:
            return "vacuous", None
        if result.is_null():
            return "vacuous", None
        w = _soft_sub_outcome(inst.side_gs, result, outer)
        if w is None:
            return "vacuous", None
        if w:
            return "pass", None
        return "fail", _dump(inst, opname, members=members, result=result, witness=w)

    return check


def _paired_family_check(op: Callable, opname: str, product: bool = False):
    # inner = op(members), outer = op(k copies of the enclosing soft set)
    def check(inst: Instance, enforce: bool) -> Outcome:
        members, outer = inst.soft_sets, inst.outer
        if outer.is_null() or any(m.is_null() for m in members):
            return "vacuous", None
        inner_result = op(members)
        outer_result = op([outer] * len(members))
        if inner_result.is_null():
            return "vacuous", None
        over = product_structure(inst.side_gs, len(members)) if product else inst.side_gs
        w = _soft_sub_outcome(over, inner_result, outer_result)
        if w is None:
            return "vacuous", None
        if w:
            return "pass", None
        return "fail", _dump(
            inst,
            opname,
            members=members,
            result=inner_result,
            witness=w,
            extra={"outer_result": files.soft_set_to_doc(outer_result)},
        )

    return check


def _check_image_preserves_sub(inst: Instance, enforce: bool) -> Outcome:
    hom, inner, outer = inst.hom, inst.soft_sets[0], inst.outer
    if inner.is_null() or outer.is_null():
        return "vacuous", None
    img_inner = soft_image_under_hom(hom, inner)
    img_outer = soft_image_under_hom(hom, outer)
    w = _soft_sub_outcome(hom.target, img_inner, img_outer)
    if w is None:
        return "vacuous", None
    if w:
        return "pass", None
    return "fail", _dump(
        inst,
        "hom-image",
        members=[inner],
        result=img_inner,
        witness=w,
        extra={"outer_result": files.soft_set_to_doc(img_outer)},
    )


def _check_preimage_preserves_sub(inst: Instance, enforce: bool) -> Outcome:
    hom, inner, outer = inst.hom, inst.soft_sets[0], inst.outer
    if inner.is_null() or outer.is_null():
        return "vacuous", None
    pre_inner = soft_preimage_under_hom(hom, inner)
    pre_outer = soft_preimage_under_hom(hom, outer)
    if pre_inner.is_null():
        return "vacuous", None
    w = _soft_sub_outcome(hom.source, pre_inner, pre_outer)
    if w is None:
        return "vacuous", None
    if w:
        return "pass", None
    return "fail", _dump(
        inst,
        "hom-preimage",
        members=[inner],
        result=pre_inner,
        witness=w,
        extra={"outer_result": files.soft_set_to_doc(pre_outer)},
    )


@dataclass(frozen=True)
class TheoremDef:
    theorem_id: str
    policy: Callable[[InstanceSpec, bool], InstanceSpec]
    check: Callable[[Instance, bool], Outcome]


def _policy(drop_keeps_subsemirings: bool = False, **flags):
    # drop_keeps_subsemirings: for the nested containment laws, a dropped run
    # keeps subalgebra values (so the conclusion's preconditions stay
    # evaluable) and instead stops filtering member values into the enclosing
    # soft set; the plain closure laws widen values to arbitrary subsets.
    def apply(spec: InstanceSpec, drop: bool) -> InstanceSpec:
        updates = dict(flags)
        if drop:
            updates["chain"] = False
            updates["chain_outer"] = False
            updates["disjoint"] = False
            updates["same_parameters"] = False
            if drop_keeps_subsemirings:
                updates["value_policy"] = "subsemirings"
                updates["nested_free"] = True
            else:
                updates["value_policy"] = "arbitrary"
        return replace(spec, **updates)

    return apply


_REGISTRY: dict[str, TheoremDef] = {}


def _register(theorem_id: str, policy, check) -> None:
    _REGISTRY[theorem_id] = TheoremDef(theorem_id, policy, check)


_register("T3.4", _policy(family_size=2, same_parameters=True), _check_rint_binary)
_register("T3.6", _policy(anchored=True), _check_rint_family)
_register("T3.7", _policy(), _check_eint_family)
_register("T3.8", _policy(anchored=True, chain=True), _check_runion_family)
_register("T3.9", _policy(disjoint=True), _check_eunion_family)
_register("T3.10", _policy(family_size=2), _check_and_binary)
_register("T3.11", _policy(), _check_and_family)
_register("T3.12", _policy(chain=True), _check_or_family)
_register("T3.13", _policy(family_size=2), _check_product_family)
_register("L3.16", _policy(with_hom=True), _check_hom_transport)
_register("T3.17i", _policy(with_hom=True, family_size=1, value_policy="kernel"), _trivial_whole_case("i"))
_register("T3.17ii", _policy(with_hom=True, family_size=1, value_policy="whole"), _trivial_whole_case("ii"))
_register(
    "T3.17iii",
    _policy(with_hom=True, target_side=True, family_size=1, value_policy="carrier-image"),
    _trivial_whole_case("iii"),
)
_register(
    "T3.17iv",
    _policy(with_hom=True, target_side=True, family_size=1, value_policy="trivial", hom_kind="identity"),
    _trivial_whole_case("iv"),
)
_register(
    "T4.2",
    _policy(nested=True, family_size=1, drop_keeps_subsemirings=True),
    _check_nested_subset,
)
_register("T4.3", _policy(family_size=2, anchored=True), _check_rint_sub_of_both)
_register(
    "T4.4",
    _policy(nested=True, anchored=True, drop_keeps_subsemirings=True),
    _nested_family_check(restricted_intersect, "restricted-intersection"),
)
_register(
    "T4.5",
    _policy(nested=True, anchored=True, same_parameters=True, drop_keeps_subsemirings=True),
    _nested_family_check(restricted_intersect, "restricted-intersection"),
)
_register(
    "T4.6",
    _policy(nested=True, drop_keeps_subsemirings=True),
    _nested_family_check(extended_intersect, "extended-intersection"),
)
_register(
    "T4.7",
    _policy(nested=True, anchored=True, chain=True, drop_keeps_subsemirings=True),
    _nested_family_check(restricted_union, "restricted-union"),
)
_register(
    "T4.8",
    _policy(nested=True, chain=True, chain_outer=True, drop_keeps_subsemirings=True),
    _paired_family_check(or_union_family, "or-union"),
)
_register(
    "T4.9",
    _policy(nested=True, drop_keeps_subsemirings=True),
    _paired_family_check(and_intersect_family, "and-intersection"),
)
_register(
    "T4.10",
    _policy(nested=True, family_size=2, drop_keeps_subsemirings=True),
    _paired_family_check(cartesian_product, "cartesian-product", product=True),
)
_register(
    "T4.11",
    _policy(nested=True, family_size=1, with_hom=True, drop_keeps_subsemirings=True),
    _check_image_preserves_sub,
)
_register(
    "T4.12",
    _policy(nested=True, family_size=1, with_hom=True, target_side=True, drop_keeps_subsemirings=True),
    _check_preimage_preserves_sub,
)

ALL_THEOREMS = tuple(_REGISTRY)

ACCEPTANCE_THEOREMS = (
    "T3.4",
    "T3.6",
    "T3.7",
    "T3.8",
    "T3.9",
    "T3.10",
    "T3.11",
    "T3.12",
    "T3.13",
    "L3.16",
    "T3.17i",
    "T3.17ii",
    "T3.17iii",
    "T3.17iv",
    "T4.2",
    "T4.3",
    "T4.4",
    "T4.6",
    "T4.7",
    "T4.8",
    "T4.9",
    "T4.10",
    "T4.11",
    "T4.12",
)


def theorem_ids() -> tuple[str, ...]:
    return ALL_THEOREMS


def _lookup(theorem_id: str) -> TheoremDef:
    try:
        return _REGISTRY[theorem_id]
    except KeyError:
        raise InputError(f"unknown theorem id {theorem_id!r}") from None


def check_theorem(theorem_id: str, instance: Instance) -> TheoremVerdict:
    """Evaluate one law's conclusion on one instance.

    Structural gates (undefined operations, null soft sets, parameter-shape
    hypotheses) yield a vacuous verdict; value-level hypothesis violations
    evaluate the conclusion honestly, so a non-hypothesis instance can fail.
    """
    tdef = _lookup(theorem_id)
    outcome, dump = tdef.check(instance, True)
    counterexample = None
    if outcome == "fail":
        counterexample = {"theorem": theorem_id, "trial": 0, "seed": instance.spec.seed}
        counterexample.update(dump)
    return TheoremVerdict(
        theorem=theorem_id,
        trials=1,
        passes=1 if outcome == "pass" else 0,
        vacuous=1 if outcome == "vacuous" else 0,
        failures=1 if outcome == "fail" else 0,
        counterexample=counterexample,
    )


def fuzz_theorem(
    theorem_id: str,
    trials: int,
    template: InstanceSpec | None = None,
    drop_hypothesis: bool = False,
) -> TheoremVerdict:
    """Run seeded trials template.seed .. template.seed+trials-1.

    With drop_hypothesis the hypothesis-enforcing policies (including the
    values-are-subalgebras policy) are disabled and the checks report honest
    conclusion failures; the recorded counterexample is the one from the
    lowest failing trial.
    """
    if trials < 1:
        raise InputError("trials must be at least 1")
    tdef = _lookup(theorem_id)
    template = template if template is not None else InstanceSpec()
    passes = vacuous = failures = 0
    counterexample = None
    for t in range(trials):
        spec = tdef.policy(replace(template, seed=template.seed + t), drop_hypothesis)
        instance = generate_instance(spec)
        outcome, dump = tdef.check(instance, not drop_hypothesis)
        if outcome == "pass":
            passes += 1
        elif outcome == "vacuous":
            vacuous += 1
        else:
            failures += 1
            if counterexample is None:
                counterexample = {"theorem": theorem_id, "trial": t, "seed": spec.seed}
                counterexample.update(dump)
    return TheoremVerdict(
        theorem=theorem_id,
        trials=trials,
        passes=passes,
        vacuous=vacuous,
        failures=failures,
        counterexample=counterexample,
    )
