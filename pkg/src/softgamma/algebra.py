"""Finite commutative semigroups, gamma-semirings, homomorphisms, subalgebras.

Structures are immutable tables over opaque element labels; all semantics
live in the tables.  Addition and ternary-product tables store element
positions.  The optional gamma addition table stores *labels* instead, so a
gamma set that fails to be additively closed is still representable and is
rejected by validation with a closure witness rather than being
unconstructible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping

from .errors import ConstraintError, InputError, SizeLimitError
from .reports import PASSED, AxiomReport, Violation, Witness

Label = Hashable

DEFAULT_MAX_CARRIER = 12
MAX_CARRIER_ENV = "SOFTGAMMA_MAX_CARRIER"


def iter_bits(mask: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _positions_table(table, rows: int, cols: int, what: str) -> tuple[tuple[int, ...], ...]:
    try:
        outer = list(table)
    except TypeError:
        raise InputError(f"{what} must be a table, got {type(table).__name__}") from None
    if len(outer) != rows:
        raise InputError(f"{what} must have {rows} rows, got {len(outer)}")
    normalized = []
    for row in outer:
        row = list(row)
        if len(row) != cols:
            raise InputError(f"{what} is ragged: row of length {len(row)}, expected {cols}")
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool) or not 0 <= entry < cols:
                raise InputError(f"{what} entry {entry!r} is not a position in 0..{cols - 1}")
        normalized.append(tuple(row))
    return tuple(normalized)


@dataclass(frozen=True)
class FiniteCommutativeSemigroup:
    """Ordered carrier plus a square addition table of element positions.

    Construction validates shape and entry range only; the semigroup axioms
    are checked by check_commutative_semigroup so that broken tables remain
    representable for diagnosis.
    """

    elements: tuple[Label, ...]
    add_table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise InputError("carrier must be nonempty")
        if len(set(elements)) != len(elements):
            raise InputError("element labels must be unique")
        n = len(elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "add_table", _positions_table(self.add_table, n, n, "addition table"))

    @cached_property
    def _pos(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def pos(self, label: Label) -> int:
        try:
            return self._pos[label]
        except (KeyError, TypeError):
            raise InputError(f"unknown element label {label!r}") from None

    def add(self, a: Label, b: Label) -> Label:
        return self.elements[self.add_table[self.pos(a)][self.pos(b)]]

    def __len__(self) -> int:
        return len(self.elements)


def _commutativity_witness(add) -> tuple[int, int] | None:
    n = len(add)
    for i in range(n):
        for j in range(n):
            if add[i][j] != add[j][i]:
                return (i, j)
    return None


def _associativity_witness(add) -> tuple[int, int, int] | None:
    n = len(add)
    for i in range(n):
        for j in range(n):
            ij = add[i][j]
            for k in range(n):
                if add[ij][k] != add[i][add[j][k]]:
                    return (i, j, k)
    return None


def check_commutative_semigroup(elements, add_table) -> AxiomReport:
    """Scan a raw carrier/table pair for the commutative-semigroup axioms.

    Malformed tables (wrong dimensions, out-of-range entries) raise
    InputError; axiom failures are reported, one lexicographically-first
    witness per axiom.
    """
    sg = FiniteCommutativeSemigroup(tuple(elements), add_table)
    violations = []
    w = _commutativity_witness(sg.add_table)
    if w is not None:
        violations.append(Violation("commutativity", (sg.elements[w[0]], sg.elements[w[1]])))
    w = _associativity_witness(sg.add_table)
    if w is not None:
        violations.append(Violation("associativity", tuple(sg.elements[i] for i in w)))
    return AxiomReport(mode="semigroup", passed=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class GammaSemiring:
    """Additive carrier, gamma set, and a ternary product table [s][gamma][s].

    gamma_add is optional: absent means the gamma set carries no addition of
    its own (weak mode).  zero, when present, is validated as an additive
    identity by check_gamma_semiring.
    """

    s: FiniteCommutativeSemigroup
    gamma_elements: tuple[str, ...]
    gamma_add: tuple[tuple[str, ...], ...] | None
    product: tuple[tuple[tuple[int, ...], ...], ...]
    zero: Label | None = None

    def __post_init__(self):
        gamma = tuple(self.gamma_elements)
        if not gamma:
            raise InputError("gamma set must be nonempty")
        if len(set(gamma)) != len(gamma):
            raise InputError("gamma labels must be unique")
        object.__setattr__(self, "gamma_elements", gamma)

        n = len(self.s.elements)
        ng = len(gamma)
        prod = list(self.product)
        if len(prod) != n:
            raise InputError(f"product table must have {n} outer rows, got {len(prod)}")
        layers = []
        for layer in prod:
            layers.append(_positions_table(layer, ng, n, "product table layer"))
        object.__setattr__(self, "product", tuple(layers))

        if self.gamma_add is not None:
            rows = list(self.gamma_add)
            if len(rows) != ng:
                raise InputError(f"gamma addition table must have {ng} rows, got {len(rows)}")
            normalized = []
            for row in rows:
                row = tuple(row)
                if len(row) != ng:
                    raise InputError("gamma addition table is ragged")
                for entry in row:
                    if not isinstance(entry, str):
                        raise InputError(f"gamma addition entry {entry!r} must be a label string")
                normalized.append(row)
            object.__setattr__(self, "gamma_add", tuple(normalized))

        if self.zero is not None:
            self.s.pos(self.zero)

    @property
    def elements(self) -> tuple[Label, ...]:
        return self.s.elements

    @property
    def size(self) -> int:
        return len(self.s.elements)

    @cached_property
    def _gpos(self) -> dict:
        return {g: i for i, g in enumerate(self.gamma_elements)}

    def gamma_pos(self, label: str) -> int:
        try:
            return self._gpos[label]
        except (KeyError, TypeError):
            raise InputError(f"unknown gamma label {label!r}") from None

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def subset_mask(self, labels: Iterable[Label]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.s.pos(label)
        return mask

    def labels_of_mask(self, mask: int) -> tuple[Label, ...]:
        return tuple(self.s.elements[i] for i in iter_bits(mask))

    @cached_property
    def _closure_need(self) -> tuple[tuple[int, ...], ...]:
        # need[i][j] = bits forced into any subset containing i and j
        n = self.size
        add = self.s.add_table
        prod = self.product
        gammas = range(len(self.gamma_elements))
        need = []
        for i in range(n):
            prod_i = prod[i]
            add_i = add[i]
            row = []
            for j in range(n):
                m = 1 << add_i[j]
                for g in gammas:
                    m |= 1 << prod_i[g][j]
                row.append(m)
            need.append(tuple(row))
        return tuple(need)

    @cached_property
    def _closed_memo(self) -> dict[int, bool]:
        return {}

    def closed_mask(self, mask: int) -> bool:
        """Whether the subset encoded by mask is closed under + and the product."""
        memo = self._closed_memo
        cached = memo.get(mask)
        if cached is not None:
            return cached
        need = self._closure_need
        inv = ~mask
        result = True
        members = list(iter_bits(mask))
        for i in members:
            row = need[i]
            for j in members:
                if row[j] & inv:
                    result = False
                    break
            if not result:
                break
        memo[mask] = result
        return result

    @cached_property
    def sub_masks(self) -> tuple[int, ...]:
        """All nonempty closed subsets as ascending bitmasks."""
        return tuple(m for m in range(1, self.full_mask + 1) if self.closed_mask(m))


def ternary_product(gs: GammaSemiring, a: Label, alpha: str, b: Label) -> Label:
    """Table lookup a·alpha·b; total on valid labels, InputError otherwise."""
    return gs.elements[gs.product[gs.s.pos(a)][gs.gamma_pos(alpha)][gs.s.pos(b)]]


def sub_gamma_witness_mask(gs: GammaSemiring, mask: int) -> Witness:
    """Closure verdict for a subset given as a bitmask, with a witness on failure.

    Scan order: additive pairs first, then product triples, both lexicographic
    by position, so witnesses are deterministic.
    """
    if mask == 0:
        return Witness(False, kind="empty-subset")
    if gs.closed_mask(mask):
        return PASSED
    add = gs.s.add_table
    prod = gs.product
    elems = gs.elements
    members = list(iter_bits(mask))
    for i in members:
        for j in members:
            k = add[i][j]
            if not mask >> k & 1:
                return Witness(False, kind="add-closure", elements=(elems[i], elems[j], elems[k]))
    for i in members:
        for g, glabel in enumerate(gs.gamma_elements):
            for j in members:
                k = prod[i][g][j]
                if not mask >> k & 1:
                    return Witness(
                        False, kind="product-closure", elements=(elems[i], glabel, elems[j], elems[k])
                    )
    raise AssertionError("closure memo disagrees with the witness scan")


def sub_gamma_witness(gs: GammaSemiring, subset: Iterable[Label]) -> Witness:
    return sub_gamma_witness_mask(gs, gs.subset_mask(subset))


def is_sub_gamma_semiring(gs: GammaSemiring, subset: Iterable[Label]) -> bool:
    """True iff subset is nonempty and closed under + and a·alpha·b.

    The empty subset returns False rather than raising, keeping the predicate
    total.
    """
    return bool(sub_gamma_witness(gs, subset))


def carrier_bound(max_carrier: int | None = None) -> int:
    """Enumeration bound: explicit argument, else the environment override, else 12."""
    if max_carrier is not None:
        bound = max_carrier
    else:
        raw = os.environ.get(MAX_CARRIER_ENV)
        if raw is None:
            return DEFAULT_MAX_CARRIER
        try:
            bound = int(raw)
        except ValueError:
            raise InputError(f"{MAX_CARRIER_ENV} must be an integer, got {raw!r}") from None
    if bound < 1:
        raise InputError(f"carrier bound must be positive, got {bound}")
    return bound


def enumerate_sub_gamma_semirings(
    gs: GammaSemiring, max_carrier: int | None = None
) -> list[tuple[Label, ...]]:
    """All nonempty closed subsets, canonically ordered by ascending bitmask.

    Refuses carriers above the bound (argument, SOFTGAMMA_MAX_CARRIER, or 12)
    since the scan is a power-set filtration.
    """
    bound = carrier_bound(max_carrier)
    if gs.size > bound:
        raise SizeLimitError(f"carrier has {gs.size} elements, above the enumeration bound {bound}")
    return [gs.labels_of_mask(m) for m in gs.sub_masks]


def check_gamma_semiring(gs: GammaSemiring, mode: str = "weak") -> AxiomReport:
    """Scan the gamma-semiring axioms, recording the first witness per axiom.

    Weak mode treats the gamma set as bare labels: the carrier must be a
    commutative semigroup and the product must satisfy both sum
    distributivity laws and product associativity.  Strict mode additionally
    requires a gamma addition table that is closed inside the gamma set and
    forms a commutative semigroup, plus distributivity of the product over
    gamma addition.  The mode is always explicit, never inferred.
    """
    if mode not in ("weak", "strict"):
        raise InputError(f"mode must be 'weak' or 'strict', got {mode!r}")
    if mode == "strict" and gs.gamma_add is None:
        raise InputError("strict mode requires a gamma addition table")

    elems = gs.elements
    add = gs.s.add_table
    prod = gs.product
    gamma = gs.gamma_elements
    n = len(elems)
    ng = len(gamma)
    violations: list[Violation] = []

    w = _commutativity_witness(add)
    if w is not None:
        violations.append(Violation("s-commutativity", (elems[w[0]], elems[w[1]])))
    w = _associativity_witness(add)
    if w is not None:
        violations.append(Violation("s-associativity", tuple(elems[i] for i in w)))

    if gs.zero is not None:
        z = gs.s.pos(gs.zero)
        for i in range(n):
            if add[z][i] != i:
                violations.append(Violation("zero-identity", (elems[i],)))
                break

    if mode == "strict":
        gadd = gs.gamma_add
        gpos = gs._gpos

        def gamma_closure():
            for i in range(ng):
                for j in range(ng):
                    if gadd[i][j] not in gpos:
                        return (gamma[i], gamma[j], gadd[i][j])
            return None

        def gamma_commutativity():
            for i in range(ng):
                for j in range(ng):
                    if gadd[i][j] != gadd[j][i]:
                        return (gamma[i], gamma[j])
            return None

        def gamma_associativity():
            # only triples whose intermediate sums stay inside the gamma set
            for i in range(ng):
                for j in range(ng):
                    ij = gpos.get(gadd[i][j])
                    if ij is None:
                        continue
                    for k in range(ng):
                        jk = gpos.get(gadd[j][k])
                        if jk is None:
                            continue
                        if gadd[ij][k] != gadd[i][jk]:
                            return (gamma[i], gamma[j], gamma[k])
            return None

        for axiom, scan in (
            ("gamma-closure", gamma_closure),
            ("gamma-commutativity", gamma_commutativity),
            ("gamma-associativity", gamma_associativity),
        ):
            witness = scan()
            if witness is not None:
                violations.append(Violation(axiom, witness))

    def sum_left():
        # (a+b) alpha c == a alpha c + b alpha c
        for a in range(n):
            for b in range(n):
                ab = add[a][b]
                for g in range(ng):
                    for c in range(n):
                        if prod[ab][g][c] != add[prod[a][g][c]][prod[b][g][c]]:
                            return (elems[a], elems[b], gamma[g], elems[c])
        return None

    def sum_right():
        # a alpha (b+c) == a alpha b + a alpha c
        for a in range(n):
            for g in range(ng):
                row = prod[a][g]
                for b in range(n):
                    for c in range(n):
                        if row[add[b][c]] != add[row[b]][row[c]]:
                            return (elems[a], gamma[g], elems[b], elems[c])
        return None

    def gamma_distributivity():
        # a (alpha+beta) b == a alpha b + a beta b, on pairs whose sum stays in gamma
        gadd = gs.gamma_add
        gpos = gs._gpos
        for a in range(n):
            for i in range(ng):
                for j in range(ng):
                    ij = gpos.get(gadd[i][j])
                    if ij is None:
                        continue
                    for b in range(n):
                        if prod[a][ij][b] != add[prod[a][i][b]][prod[a][j][b]]:
                            return (elems[a], gamma[i], gamma[j], elems[b])
        return None

    def product_associativity():
        # a alpha (b beta c) == (a alpha b) beta c
        for a in range(n):
            for g in range(ng):
                row_a = prod[a][g]
                for b in range(n):
                    ab = row_a[b]
                    for h in range(ng):
                        for c in range(n):
                            if row_a[prod[b][h][c]] != prod[ab][h][c]:
                                return (elems[a], gamma[g], elems[b], gamma[h], elems[c])
        return None

    scans = [("distributive-sum-left", sum_left), ("distributive-sum-right", sum_right)]
    if mode == "strict":
        scans.append(("distributive-gamma", gamma_distributivity))
    scans.append(("product-associativity", product_associativity))
    for axiom, scan in scans:
        witness = scan()
        if witness is not None:
            violations.append(Violation(axiom, witness))

    return AxiomReport(mode=mode, passed=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class GammaHom:
    """A carrier map between gamma-semirings sharing an identically ordered gamma set.

    Build through gamma_hom, which verifies preservation of + and the ternary
    product; the dataclass itself only checks shape.
    """

    source: GammaSemiring
    target: GammaSemiring
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if len(mapping) != self.source.size:
            raise InputError("homomorphism mapping must cover the whole source carrier")
        for t in mapping:
            if not isinstance(t, int) or not 0 <= t < self.target.size:
                raise InputError(f"mapping entry {t!r} is not a target position")
        object.__setattr__(self, "mapping", mapping)

    def apply(self, label: Label) -> Label:
        return self.target.elements[self.mapping[self.source.s.pos(label)]]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.mapping[i]
        return out

    def preimage_mask(self, target_mask: int) -> int:
        out = 0
        for i, t in enumerate(self.mapping):
            if target_mask >> t & 1:
                out |= 1 << i
        return out

    @cached_property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    @cached_property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.size

    def as_label_map(self) -> dict:
        return {e: self.target.elements[t] for e, t in zip(self.source.elements, self.mapping)}


def is_gamma_homomorphism(mapping: Mapping, source: GammaSemiring, target: GammaSemiring) -> bool:
    """Exhaustively check additive and ternary-product preservation.

    The two structures must share an identically ordered gamma set (InputError
    otherwise); the mapping must be total on the source carrier with values in
    the target carrier.
    """
    if source.gamma_elements != target.gamma_elements:
        raise InputError("source and target must share an identically ordered gamma set")
    positions = []
    for e in source.elements:
        try:
            image = mapping[e]
        except (KeyError, TypeError):
            raise InputError(f"mapping is undefined at source element {e!r}") from None
        positions.append(target.s.pos(image))

    s_add = source.s.add_table
    t_add = target.s.add_table
    n = source.size
    for i in range(n):
        fi = positions[i]
        for j in range(n):
            if positions[s_add[i][j]] != t_add[fi][positions[j]]:
                return False
    s_prod = source.product
    t_prod = target.product
    for i in range(n):
        fi = positions[i]
        for g in range(len(source.gamma_elements)):
            row = s_prod[i][g]
            t_row = t_prod[fi][g]
            for j in range(n):
                if positions[row[j]] != t_row[positions[j]]:
                    return False
    return True


def gamma_hom(source: GammaSemiring, target: GammaSemiring, mapping: Mapping) -> GammaHom:
    """Validated constructor; ConstraintError when preservation fails."""
    if not is_gamma_homomorphism(mapping, source, target):
        raise ConstraintError("mapping does not preserve addition and the ternary product")
    positions = tuple(target.s.pos(mapping[e]) for e in source.elements)
    return GammaHom(source, target, positions)


def identity_hom(gs: GammaSemiring) -> GammaHom:
    return GammaHom(gs, gs, tuple(range(gs.size)))


def kernel(hom: GammaHom) -> tuple[Label, ...]:
    """Source elements mapping to the target zero; may be empty.

    InputError when the target has no designated zero.
    """
    if hom.target.zero is None:
        raise InputError("kernel requires a designated zero in the target")
    zp = hom.target.s.pos(hom.target.zero)
    return tuple(e for e, t in zip(hom.source.elements, hom.mapping) if t == zp)
