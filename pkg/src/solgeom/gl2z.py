"""Finite-order structure and two-ended subgroups of GL(2,Z).

Finite orders in GL(2,Z) are exactly 1, 2, 3, 4, 6, so finiteness of an
element is the single test M^12 = I.  Every finite-order element other than
+-I is conjugate to exactly one of five canonical representatives; the only
pair sharing an order profile (the two det = -1 involution classes) is
separated by reduction mod 2.

Conjugacy and centralizer searches are bounded box scans: fine at desk scale,
documented as incomplete beyond their bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .intmat import IntMatrix

# word length used when deciding whether -I is expressible from generators
MINUS_I_WORD_BOUND = 12


class FiniteOrderClass(enum.Enum):
    """Conjugacy classes of finite-order elements of GL(2,Z)."""

    IDENTITY = "Identity"
    MINUS_IDENTITY = "MinusIdentity"
    REFLECTION = "Reflection"
    SWAP = "Swap"
    ORDER3 = "Order3"
    ORDER4 = "Order4"
    ORDER6 = "Order6"

    @property
    def representative(self) -> IntMatrix:
        return _REPRESENTATIVES[self]

    @property
    def order(self) -> int:
        return _CLASS_ORDERS[self]


_REPRESENTATIVES = {
    FiniteOrderClass.IDENTITY: IntMatrix([[1, 0], [0, 1]]),
    FiniteOrderClass.MINUS_IDENTITY: IntMatrix([[-1, 0], [0, -1]]),
    FiniteOrderClass.REFLECTION: IntMatrix([[1, 0], [0, -1]]),
    FiniteOrderClass.SWAP: IntMatrix([[0, 1], [1, 0]]),
    FiniteOrderClass.ORDER3: IntMatrix([[0, 1], [-1, -1]]),
    FiniteOrderClass.ORDER4: IntMatrix([[0, 1], [-1, 0]]),
    FiniteOrderClass.ORDER6: IntMatrix([[0, 1], [-1, 1]]),
}

_CLASS_ORDERS = {
    FiniteOrderClass.IDENTITY: 1,
    FiniteOrderClass.MINUS_IDENTITY: 2,
    FiniteOrderClass.REFLECTION: 2,
    FiniteOrderClass.SWAP: 2,
    FiniteOrderClass.ORDER3: 3,
    FiniteOrderClass.ORDER4: 4,
    FiniteOrderClass.ORDER6: 6,
}

# The five non-central classes, in the order their representatives are
# usually listed.
NONCENTRAL_CLASSES = (
    FiniteOrderClass.REFLECTION,
    FiniteOrderClass.SWAP,
    FiniteOrderClass.ORDER3,
    FiniteOrderClass.ORDER4,
    FiniteOrderClass.ORDER6,
)

_ID = IntMatrix.identity(2)
_MINUS_ID = -_ID


def _require_gl2(m: IntMatrix) -> None:
    if m.n != 2:
        raise ValueError("expected a 2x2 matrix")
    if m.det() not in (1, -1):
        raise ValueError(f"matrix with det {m.det()} is not in GL(2,Z)")


def element_order(m: IntMatrix) -> int | None:
    """Order of m in GL(2,Z); None for infinite order.

    Finite orders all divide 12, so twelve multiplications settle it.
    """
    _require_gl2(m)
    acc = m
    for k in range(1, 13):
        if acc == _ID:
            return k
        acc = acc * m
    return None


def finite_order_class(m: IntMatrix) -> FiniteOrderClass:
    """Conjugacy class of a finite-order element.

    Within order 2 and det -1 the class is decided by reduction mod 2:
    M = I mod 2 exactly for the diag(1,-1) class, since [[0,1],[1,0]] stays
    off-diagonal mod 2 and reduction is a conjugacy invariant.
    """
    order = element_order(m)
    if order is None:
        raise ValueError("matrix has infinite order")
    if order == 1:
        return FiniteOrderClass.IDENTITY
    if order == 2:
        if m == _MINUS_ID:
            return FiniteOrderClass.MINUS_IDENTITY
        # any other involution has eigenvalues +1, -1, hence det -1
        assert m.det() == -1
        if m.mod(2) == _ID.mod(2):
            return FiniteOrderClass.REFLECTION
        return FiniteOrderClass.SWAP
    if order == 3:
        return FiniteOrderClass.ORDER3
    if order == 4:
        return FiniteOrderClass.ORDER4
    assert order == 6
    return FiniteOrderClass.ORDER6


def conjugate_in_gl2z(m: IntMatrix, n: IntMatrix,
                      bound: int = 10) -> IntMatrix | None:
    """Search for C in GL(2,Z) with C m C^-1 = n and entries within bound.

    Exhaustive over the box, so a None only certifies absence of small
    conjugators.  Checks C m = n C to avoid inverting every candidate.
    """
    _require_gl2(m)
    _require_gl2(n)
    ma, mb, mc, md = m.rows[0][0], m.rows[0][1], m.rows[1][0], m.rows[1][1]
    na, nb, nc, nd = n.rows[0][0], n.rows[0][1], n.rows[1][0], n.rows[1][1]
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if a * d - b * c not in (1, -1):
                        continue
                    # C m == n C, entrywise
                    if (a * ma + b * mc == na * a + nb * c
                            and a * mb + b * md == na * b + nb * d
                            and c * ma + d * mc == nc * a + nd * c
                            and c * mb + d * md == nc * b + nd * d):
                        return IntMatrix([[a, b], [c, d]])
    return None


def centralizer_sample(m: IntMatrix, bound: int) -> list[IntMatrix]:
    """All C in GL(2,Z) with entries within bound commuting with m."""
    _require_gl2(m)
    ma, mb, mc, md = m.rows[0][0], m.rows[0][1], m.rows[1][0], m.rows[1][1]
    rng = range(-bound, bound + 1)
    out = []
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if a * d - b * c not in (1, -1):
                        continue
                    if (a * ma + b * mc == ma * a + mb * c
                            and a * mb + b * md == ma * b + mb * d
                            and c * ma + d * mc == mc * a + md * c
                            and c * mb + d * md == mc * b + md * d):
                        out.append(IntMatrix([[a, b], [c, d]]))
    return out


class NotTwoEndedError(ValueError):
    """The given generators do not produce a two-ended subgroup."""


@dataclass(frozen=True)
class TwoEndedType:
    """Type of a two-ended subgroup of GL(2,Z).

    case 1: <A>, A of infinite order
    case 2: <A> with -I adjoined
    case 3: <A, B>, A^2 = B^2 = I, -I not detected
    case 4: <A, B, -I>, A^2 = B^2 = I
    case 5: <A, B>, A^2 = -I, B^2 = I
    case 6: <A, B>, A^2 = B^2 = -I

    minus_i_certain is False only in case 3, where -I was not found among
    A^2, B^2 or (AB)^k for |k| <= 12 and is assumed absent at that bound.
    """

    case: int
    witnesses: tuple[IntMatrix, ...]
    has_minus_i: bool
    minus_i_certain: bool


def two_ended_type(generators: list[IntMatrix]) -> TwoEndedType:
    """Classify a two-ended subgroup given 1 or 2 generators, optionally
    with -I adjoined to the list."""
    gens = []
    adjoined_minus = False
    for g in generators:
        _require_gl2(g)
        if g == _ID:
            continue
        if g == _MINUS_ID:
            adjoined_minus = True
            continue
        gens.append(g)

    if len(gens) == 1:
        a = gens[0]
        if element_order(a) is not None:
            raise NotTwoEndedError("single generator has finite order")
        if adjoined_minus:
            return TwoEndedType(2, (a,), True, True)
        # a^k = -I would force finite order, so -I is provably absent
        return TwoEndedType(1, (a,), False, True)

    if len(gens) != 2:
        raise NotTwoEndedError(f"expected 1 or 2 generators besides +-I, "
                               f"got {len(gens)}")
    a, b = gens
    order_a, order_b = element_order(a), element_order(b)
    if order_a not in (2, 4) or order_b not in (2, 4):
        raise NotTwoEndedError("two-generator input needs generator orders "
                               "2 or 4")
    if element_order(a * b) is not None:
        raise NotTwoEndedError("product AB has finite order")

    # put an order-4 generator first, for the case 5 witness convention
    if order_b == 4 and order_a == 2:
        a, b = b, a
        order_a, order_b = order_b, order_a

    if order_a == 4 and order_b == 4:
        assert a * a == _MINUS_ID and b * b == _MINUS_ID
        return TwoEndedType(6, (a, b), True, True)
    if order_a == 4:
        assert a * a == _MINUS_ID
        return TwoEndedType(5, (a, b), True, True)

    # both involutions; -I can only appear as an explicit adjoint or as a
    # power of AB within the search bound
    if adjoined_minus:
        return TwoEndedType(4, (a, b), True, True)
    ab = a * b
    acc = ab
    for _ in range(MINUS_I_WORD_BOUND):
        if acc == _MINUS_ID:
            return TwoEndedType(4, (a, b), True, True)
        acc = acc * ab
    return TwoEndedType(3, (a, b), False, False)


class MonodromyType(enum.Enum):
    DIHEDRAL_INFINITE = "DihedralInfinite"
    OTHER = "Other"


def monodromy_image_type(images: list[IntMatrix]) -> MonodromyType:
    """Decide whether order-2 generator images generate an infinite dihedral
    group of diag(1,-1)-type reflections.

    Requires every non-identity image to be in the Reflection class, the
    group to be infinite (some product of two images is hyperbolic), and -I
    not to be expressible within word length 12 over the images.
    """
    distinct = []
    for m in images:
        _require_gl2(m)
        if m == _ID:
            continue
        order = element_order(m)
        if order != 2 or m == _MINUS_ID:
            return MonodromyType.OTHER
        if finite_order_class(m) is not FiniteOrderClass.REFLECTION:
            return MonodromyType.OTHER
        if m not in distinct:
            distinct.append(m)
    if not distinct:
        return MonodromyType.OTHER  # trivial image group
    if not any(abs((x * y).trace()) > 2
               for x in distinct for y in distinct):
        return MonodromyType.OTHER
    # breadth-first sweep of words in the images, deduplicated
    seen = {_ID, *distinct}
    frontier = list(distinct)
    for _ in range(MINUS_I_WORD_BOUND - 1):
        nxt = []
        for w in frontier:
            for g in distinct:
                wg = w * g
                if wg == _MINUS_ID:
                    return MonodromyType.OTHER
                if wg not in seen:
                    seen.add(wg)
                    nxt.append(wg)
        frontier = nxt
    return MonodromyType.DIHEDRAL_INFINITE
