"""Desk-scale structure families: modular, min/max, and matrix carriers."""

from __future__ import annotations

from itertools import product as iproduct

from .algebra import FiniteCommutativeSemigroup, GammaSemiring
from .errors import InputError, SizeLimitError


def _int_subset(values, n: int, what: str) -> tuple[int, ...]:
    out = sorted(set(values))
    if not out:
        raise InputError(f"{what} must be nonempty")
    for v in out:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise InputError(f"{what} entry {v!r} is not in 0..{n - 1}")
    return tuple(out)


def make_zn_gamma(n: int, gamma_subset, strict: bool = False) -> GammaSemiring:
    """Integers mod n under + with product a*alpha*b mod n and zero 0.

    strict attaches gamma addition mod n as a label table; for gamma subsets
    not closed under + mod n this deliberately fails strict validation with a
    gamma-closure witness.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    gam = _int_subset(gamma_subset, n, "gamma subset")
    elements = tuple(str(i) for i in range(n))
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    product = tuple(
        tuple(tuple(i * g * j % n for j in range(n)) for g in gam) for i in range(n)
    )
    gamma_elements = tuple(str(g) for g in gam)
    gamma_add = None
    if strict:
        gamma_add = tuple(tuple(str((g + h) % n) for h in gam) for g in gam)
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add), gamma_elements, gamma_add, product, zero="0"
    )


def make_minmax_gamma(n: int, gamma_subset) -> GammaSemiring:
    """Carrier 0..n-1 under max, with product min(a, alpha, b) and zero 0.

    Any gamma subset is closed under max, so the result always passes the
    strict check.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    gam = _int_subset(gamma_subset, n, "gamma subset")
    elements = tuple(str(i) for i in range(n))
    add = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    product = tuple(
        tuple(tuple(min(i, g, j) for j in range(n)) for g in gam) for i in range(n)
    )
    gamma_elements = tuple(str(g) for g in gam)
    gamma_add = tuple(tuple(str(max(g, h)) for h in gam) for g in gam)
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add), gamma_elements, gamma_add, product, zero="0"
    )


def _matmul(a, a_shape, b, b_shape, p):
    ra, ca = a_shape
    rb, cb = b_shape
    assert ca == rb
    out = []
    for i in range(ra):
        for j in range(cb):
            acc = 0
            for k in range(ca):
                acc += a[i * ca + k] * b[k * cb + j]
            out.append(acc % p)
    return tuple(out)


def make_matrix_gamma(p: int, rows: int, cols: int) -> GammaSemiring:
    """All rows x cols matrices over the field of p elements, entrywise +.

    The gamma set is all cols x rows matrices and the product is the matrix
    product W·alpha·Y mod p.  Labels are row-major digit strings.  Bounded to
    p <= 3 and rows*cols <= 4 to keep the tables at desk scale.
    """
    if p not in (2, 3):
        raise InputError(f"p must be a prime at most 3, got {p!r}")
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 1 or cols < 1:
        raise InputError("rows and cols must be positive integers")
    if rows * cols > 4:
        raise SizeLimitError(f"matrix carrier refused: rows*cols = {rows * cols} exceeds 4")

    k = rows * cols
    s_entries = [tuple(t) for t in iproduct(range(p), repeat=k)]
    g_entries = [tuple(t) for t in iproduct(range(p), repeat=k)]
    label = lambda flat: "".join(str(d) for d in flat)

    elements = tuple(label(m) for m in s_entries)
    s_index = {m: i for i, m in enumerate(s_entries)}
    g_index = {m: i for i, m in enumerate(g_entries)}

    add = tuple(
        tuple(s_index[tuple((x + y) % p for x, y in zip(a, b))] for b in s_entries)
        for a in s_entries
    )
    product = []
    for a in s_entries:
        layer = []
        for g in g_entries:
            ag = _matmul(a, (rows, cols), g, (cols, rows), p)
            layer.append(
                tuple(s_index[_matmul(ag, (rows, rows), b, (rows, cols), p)] for b in s_entries)
            )
        product.append(tuple(layer))

    gamma_elements = tuple(label(m) for m in g_entries)
    gamma_add = tuple(
        tuple(label(tuple((x + y) % p for x, y in zip(g, h))) for h in g_entries)
        for g in g_entries
    )
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add),
        gamma_elements,
        gamma_add,
        tuple(product),
        zero="0" * k,
    )


def product_gamma(gs: GammaSemiring, k: int, max_size: int = 4096) -> GammaSemiring:
    """k-fold product carrier with coordinatewise + and product, shared gamma.

    Elements are k-tuples of the base labels in row-major order, matching the
    universe produced by the soft-set cartesian product.
    """
    if not isinstance(k, int) or k < 1:
        raise InputError(f"product arity must be a positive integer, got {k!r}")
    n = gs.size
    if n**k > max_size:
        raise SizeLimitError(f"product carrier would have {n ** k} elements, above {max_size}")

    elements = tuple(iproduct(gs.elements, repeat=k))
    base_add = gs.s.add_table
    base_prod = gs.product
    ng = len(gs.gamma_elements)

    digits = []
    for idx in range(n**k):
        rest, ds = idx, []
        for _ in range(k):
            rest, d = divmod(rest, n)
            ds.append(d)
        digits.append(tuple(reversed(ds)))

    def encode(ds):
        idx = 0
        for d in ds:
            idx = idx * n + d
        return idx

    total = n**k
    add = tuple(
        tuple(
            encode([base_add[x][y] for x, y in zip(digits[i], digits[j])])
            for j in range(total)
        )
        for i in range(total)
    )
    product = tuple(
        tuple(
            tuple(
                encode([base_prod[x][g][y] for x, y in zip(digits[i], digits[j])])
                for j in range(total)
            )
            for g in range(ng)
        )
        for i in range(total)
    )
    zero = None
    if gs.zero is not None:
        zero = tuple(gs.zero for _ in range(k))
    return GammaSemiring(
        FiniteCommutativeSemigroup(elements, add),
        gs.gamma_elements,
        gs.gamma_add,
        product,
        zero=zero,
    )
