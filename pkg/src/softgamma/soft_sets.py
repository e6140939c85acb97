"""Soft sets over a finite universe and their operation algebra.

A soft set assigns to each parameter a subset of a fixed ordered universe.
Values are stored as bitmasks over the universe, and every set that leaves
the library is ordered by universe position, which keeps serialized output
byte-stable.  Family operations take ordered nonempty sequences; parameter
tuples produced by the pairwise and product operations are ordinary Python
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from typing import Mapping, Sequence

from .algebra import GammaSemiring, Label, iter_bits
from .errors import ConstraintError, DomainError, InputError


@dataclass(frozen=True)
class SoftSet:
    universe: tuple[Label, ...]
    parameters: tuple[Label, ...]
    masks: tuple[int, ...]

    def __post_init__(self):
        universe = tuple(self.universe)
        parameters = tuple(self.parameters)
        masks = tuple(self.masks)
        if len(set(universe)) != len(universe):
            raise InputError("universe labels must be unique")
        if len(set(parameters)) != len(parameters):
            raise InputError("parameter labels must be unique")
        if len(masks) != len(parameters):
            raise InputError("one value mask per parameter is required")
        limit = 1 << len(universe)
        for m in masks:
            if not isinstance(m, int) or not 0 <= m < limit:
                raise InputError(f"value mask {m!r} does not fit the universe")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "masks", masks)

    @classmethod
    def build(cls, universe, parameters, values: Mapping | None = None) -> "SoftSet":
        """Construct from label sets; parameters missing from values get the empty set."""
        universe = tuple(universe)
        parameters = tuple(parameters)
        pos = {v: i for i, v in enumerate(universe)}
        values = dict(values or {})
        unknown = set(values) - set(parameters)
        if unknown:
            raise InputError(f"values given for unknown parameters {sorted(map(repr, unknown))}")
        masks = []
        for w in parameters:
            mask = 0
            for label in values.get(w, ()):
                try:
                    mask |= 1 << pos[label]
                except (KeyError, TypeError):
                    raise InputError(f"value label {label!r} is not in the universe") from None
            masks.append(mask)
        return cls(universe, parameters, tuple(masks))

    @cached_property
    def _upos(self) -> dict:
        return {v: i for i, v in enumerate(self.universe)}

    @cached_property
    def _ppos(self) -> dict:
        return {w: i for i, w in enumerate(self.parameters)}

    def has_param(self, param: Label) -> bool:
        return param in self._ppos

    def mask(self, param: Label) -> int:
        try:
            return self.masks[self._ppos[param]]
        except (KeyError, TypeError):
            raise InputError(f"unknown parameter {param!r}") from None

    def value(self, param: Label) -> tuple[Label, ...]:
        m = self.mask(param)
        return tuple(self.universe[i] for i in iter_bits(m))

    def is_null(self) -> bool:
        return all(m == 0 for m in self.masks)


def support(ss: SoftSet) -> tuple[Label, ...]:
    """Parameters with nonempty value, in parameter order."""
    return tuple(w for w, m in zip(ss.parameters, ss.masks) if m)


def _family(family: Sequence[SoftSet]) -> list[SoftSet]:
    fam = list(family)
    if not fam:
        raise InputError("family of soft sets must be nonempty")
    universe = fam[0].universe
    for m in fam[1:]:
        if m.universe != universe:
            raise InputError("family members must share an identically ordered universe")
    return fam


def _same_universe(a: SoftSet, b: SoftSet) -> None:
    if a.universe != b.universe:
        raise InputError("soft sets must share an identically ordered universe")


def is_soft_subset(a: SoftSet, b: SoftSet) -> bool:
    """Parameter containment plus pointwise value containment on a's parameters."""
    _same_universe(a, b)
    for w, m in zip(a.parameters, a.masks):
        if not b.has_param(w):
            return False
        if m & ~b.mask(w):
            return False
    return True


def soft_equal(a: SoftSet, b: SoftSet) -> bool:
    return is_soft_subset(a, b) and is_soft_subset(b, a)


def restricted_intersect(family: Sequence[SoftSet]) -> SoftSet:
    """Pointwise intersection over the (nonempty) intersection of parameter sets."""
    fam = _family(family)
    common = [w for w in fam[0].parameters if all(m.has_param(w) for m in fam[1:])]
    if not common:
        raise DomainError("restricted operation needs a nonempty parameter intersection")
    masks = []
    for w in common:
        v = fam[0].mask(w)
        for m in fam[1:]:
            v &= m.mask(w)
        masks.append(v)
    return SoftSet(fam[0].universe, tuple(common), tuple(masks))


def restricted_union(family: Sequence[SoftSet]) -> SoftSet:
    """Pointwise union over the (nonempty) intersection of parameter sets."""
    fam = _family(family)
    common = [w for w in fam[0].parameters if all(m.has_param(w) for m in fam[1:])]
    if not common:
        raise DomainError("restricted operation needs a nonempty parameter intersection")
    masks = []
    for w in common:
        v = 0
        for m in fam:
            v |= m.mask(w)
        masks.append(v)
    return SoftSet(fam[0].universe, tuple(common), tuple(masks))


def _union_params(fam: Sequence[SoftSet]) -> tuple[Label, ...]:
    seen = []
    known = set()
    for m in fam:
        for w in m.parameters:
            if w not in known:
                known.add(w)
                seen.append(w)
    return tuple(seen)


def extended_intersect(family: Sequence[SoftSet]) -> SoftSet:
    """Over the union of parameter sets; at each parameter, intersect exactly
    the members that carry it."""
    fam = _family(family)
    params = _union_params(fam)
    masks = []
    for w in params:
        v = None
        for m in fam:
            if m.has_param(w):
                v = m.mask(w) if v is None else v & m.mask(w)
        masks.append(v)
    return SoftSet(fam[0].universe, params, tuple(masks))


def extended_union(family: Sequence[SoftSet]) -> SoftSet:
    """Over the union of parameter sets; at each parameter, unite exactly the
    members that carry it."""
    fam = _family(family)
    params = _union_params(fam)
    masks = []
    for w in params:
        v = 0
        for m in fam:
            if m.has_param(w):
                v |= m.mask(w)
        masks.append(v)
    return SoftSet(fam[0].universe, params, tuple(masks))


def and_intersect_family(family: Sequence[SoftSet]) -> SoftSet:
    """Parameters are tuples from the ordered product of the parameter sets;
    the value at (y_1..y_k) is the intersection of the coordinate values."""
    fam = _family(family)
    params = tuple(iproduct(*[m.parameters for m in fam]))
    masks = []
    for combo in params:
        v = fam[0].mask(combo[0])
        for m, y in zip(fam[1:], combo[1:]):
            v &= m.mask(y)
        masks.append(v)
    return SoftSet(fam[0].universe, params, tuple(masks))


def or_union_family(family: Sequence[SoftSet]) -> SoftSet:
    """Like and_intersect_family with pointwise union."""
    fam = _family(family)
    params = tuple(iproduct(*[m.parameters for m in fam]))
    masks = []
    for combo in params:
        v = 0
        for m, y in zip(fam, combo):
            v |= m.mask(y)
        masks.append(v)
    return SoftSet(fam[0].universe, params, tuple(masks))


def and_intersect(a: SoftSet, b: SoftSet) -> SoftSet:
    return and_intersect_family([a, b])


def or_union(a: SoftSet, b: SoftSet) -> SoftSet:
    return or_union_family([a, b])


def cartesian_product(family: Sequence[SoftSet]) -> SoftSet:
    """Tuple-universe product: parameters and universe are ordered products,
    the value at a parameter tuple is the product of the coordinate values."""
    fam = list(family)
    if not fam:
        raise InputError("family of soft sets must be nonempty")
    universes = [m.universe for m in fam]
    dims = [len(u) for u in universes]
    universe = tuple(iproduct(*universes))
    params = tuple(iproduct(*[m.parameters for m in fam]))
    masks = []
    for combo in params:
        factor_bits = []
        empty = False
        for m, y in zip(fam, combo):
            fm = m.mask(y)
            if fm == 0:
                empty = True
                break
            factor_bits.append(list(iter_bits(fm)))
        if empty:
            masks.append(0)
            continue
        v = 0
        for poss in iproduct(*factor_bits):
            idx = 0
            for d, p in zip(dims, poss):
                idx = idx * d + p
            v |= 1 << idx
        masks.append(v)
    return SoftSet(universe, params, tuple(masks))


def relative_null(universe, parameters) -> SoftSet:
    parameters = tuple(parameters)
    return SoftSet(tuple(universe), parameters, tuple(0 for _ in parameters))


def relative_whole(universe, parameters) -> SoftSet:
    universe = tuple(universe)
    parameters = tuple(parameters)
    full = (1 << len(universe)) - 1
    return SoftSet(universe, parameters, tuple(full for _ in parameters))


def _image_mask(f: Mapping, source: SoftSet, target: SoftSet, mask: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << target._upos[f[source.universe[i]]]
    return out


@dataclass(frozen=True)
class SoftFunction:
    """A carrier map and a parameter map with f(value(w)) == target value(g(w)).

    Injectivity/surjectivity/bijectivity are joint properties of f and g.
    """

    f: Mapping
    g: Mapping
    source: SoftSet
    target: SoftSet
    injective: bool = field(default=False, compare=False)
    surjective: bool = field(default=False, compare=False)
    bijective: bool = field(default=False, compare=False)


def make_soft_function(f: Mapping, g: Mapping, source: SoftSet, target: SoftSet) -> SoftFunction:
    """Validated constructor; ConstraintError names the first incompatible parameter."""
    f = dict(f)
    g = dict(g)
    for v in source.universe:
        if v not in f:
            raise InputError(f"carrier map is undefined at {v!r}")
        if f[v] not in target._upos:
            raise InputError(f"carrier map sends {v!r} outside the target universe")
    for w in source.parameters:
        if w not in g:
            raise InputError(f"parameter map is undefined at {w!r}")
        if g[w] not in target._ppos:
            raise InputError(f"parameter map sends {w!r} outside the target parameters")
    for w in source.parameters:
        if _image_mask(f, source, target, source.mask(w)) != target.mask(g[w]):
            raise ConstraintError(
                f"soft-function compatibility fails at parameter {w!r}", witness=w
            )
    f_inj = len({f[v] for v in source.universe}) == len(source.universe)
    g_inj = len({g[w] for w in source.parameters}) == len(source.parameters)
    f_sur = {f[v] for v in source.universe} == set(target.universe)
    g_sur = {g[w] for w in source.parameters} == set(target.parameters)
    return SoftFunction(
        f,
        g,
        source,
        target,
        injective=f_inj and g_inj,
        surjective=f_sur and g_sur,
        bijective=f_inj and g_inj and f_sur and g_sur,
    )


def compose_soft_functions(first: SoftFunction, second: SoftFunction) -> SoftFunction:
    """(f' o f, g' o g); the target of first must be exactly the source of second."""
    mid, src2 = first.target, second.source
    if (
        mid.universe != src2.universe
        or mid.parameters != src2.parameters
        or mid.masks != src2.masks
    ):
        raise InputError("target of the first soft function must equal the source of the second")
    f = {v: second.f[first.f[v]] for v in first.source.universe}
    g = {w: second.g[first.g[w]] for w in first.source.parameters}
    return make_soft_function(f, g, first.source, second.target)


def soft_image(sf: SoftFunction) -> SoftSet:
    """Over the target parameters: at y, the union of f(value(w)) over the
    fiber g(w) == y; empty off the image of g."""
    masks = []
    for y in sf.target.parameters:
        v = 0
        for w in sf.source.parameters:
            if sf.g[w] == y:
                v |= _image_mask(sf.f, sf.source, sf.target, sf.source.mask(w))
        masks.append(v)
    return SoftSet(sf.target.universe, sf.target.parameters, tuple(masks))


def soft_preimage(f: Mapping, g: Mapping, target: SoftSet, parameters) -> SoftSet:
    """Over the given parameters: at w, the preimage f^{-1}(target value at g(w)).

    The result universe is the ordered domain of f.
    """
    f = dict(f)
    g = dict(g)
    universe = tuple(f.keys())
    for v, image in f.items():
        if image not in target._upos:
            raise InputError(f"carrier map sends {v!r} outside the target universe")
    parameters = tuple(parameters)
    masks = []
    for w in parameters:
        if w not in g:
            raise InputError(f"parameter map is undefined at {w!r}")
        y = g[w]
        if y not in target._ppos:
            raise InputError(f"parameter map sends {w!r} outside the target parameters")
        tm = target.mask(y)
        v = 0
        for i, elem in enumerate(universe):
            if tm >> target._upos[f[elem]] & 1:
                v |= 1 << i
        masks.append(v)
    return SoftSet(universe, parameters, tuple(masks))


@dataclass(frozen=True)
class TernaryRelation:
    """A parameterized set of (parameter, gamma, element) triples."""

    parameters: tuple[Label, ...]
    gamma: tuple[str, ...]
    triples: frozenset

    def __post_init__(self):
        parameters = tuple(self.parameters)
        gamma = tuple(self.gamma)
        if len(set(parameters)) != len(parameters):
            raise InputError("relation parameters must be unique")
        if len(set(gamma)) != len(gamma):
            raise InputError("relation gamma labels must be unique")
        triples = frozenset(tuple(t) for t in self.triples)
        pset, gset = set(parameters), set(gamma)
        for t in triples:
            if len(t) != 3:
                raise InputError(f"relation triple {t!r} must have three components")
            if t[0] not in pset:
                raise InputError(f"relation triple mentions unknown parameter {t[0]!r}")
            if t[1] not in gset:
                raise InputError(f"relation triple mentions unknown gamma label {t[1]!r}")
        object.__setattr__(self, "parameters", parameters)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "triples", triples)


def soft_set_from_relation(rel: TernaryRelation, gs: GammaSemiring) -> SoftSet:
    """Value at y: the elements s related to y under *every* gamma label.

    The quantification over the gamma set is universal, not existential.
    """
    if rel.gamma != gs.gamma_elements:
        raise InputError("relation gamma set must match the structure gamma set, in order")
    spos = gs.s._pos
    per_pair: dict[tuple, int] = {}
    for (y, g, s) in rel.triples:
        if s not in spos:
            raise InputError(f"relation triple mentions unknown element {s!r}")
        key = (y, g)
        per_pair[key] = per_pair.get(key, 0) | (1 << spos[s])
    masks = []
    for y in rel.parameters:
        v = gs.full_mask
        for g in rel.gamma:
            v &= per_pair.get((y, g), 0)
        masks.append(v)
    return SoftSet(gs.elements, rel.parameters, tuple(masks))
