"""Exact arithmetic in lattice extensions 1 -> Z^n -> pi -> Q -> 1.

The quotient Q is one of six virtually-cyclic kinds, each with a built-in
unique normal form for its words.  An element of pi is a pair (t, q): a
lattice translation followed by the canonical lift of the quotient word.
Multiplication collects letter by letter; the only non-free relations are
squares of involutive generators (g-hat^2 = lattice vector s_g) and, for the
Z x C2 kind, one commutator cocycle ([s-hat, g-hat] = lattice vector).

This is enough group theory to compute torsion, abelianizations, centers,
orientation characters, and to check homomorphisms exactly; no general word
problem machinery is involved.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd, lcm

from .intmat import (
    IntMatrix,
    IntVector,
    _kernel_rows,
    _snf_rows,
    _solve_rows,
    is_zero_vector,
    solve_integer,
    vec_add,
    vec_neg,
    vec_sub,
)

# search ceiling for finite-order actions when hunting central quotient words
ACTION_ORDER_BOUND = 24


class QuotientKind(enum.Enum):
    TRIVIAL = "Trivial"
    C2 = "C2"
    ZQ = "Zq"
    ZXC2 = "ZxC2"
    DINF = "Dinf"
    KLEIN = "Klein"


# number of quotient generators per kind
_ARITY = {
    QuotientKind.TRIVIAL: 0,
    QuotientKind.C2: 1,
    QuotientKind.ZQ: 1,
    QuotientKind.ZXC2: 2,
    QuotientKind.DINF: 2,
    QuotientKind.KLEIN: 2,
}


@dataclass(frozen=True)
class GroupElement:
    """Normal form (t, q): lattice part t, quotient word q.

    The word encoding depends on the kind: C2 stores 0/1, Zq an integer
    exponent, ZxC2 a pair (k, eps), Dinf an alternating tuple of generator
    names, Klein a pair (alpha, beta) meaning x^alpha y^beta.
    """

    t: IntVector
    q: object

    def __repr__(self):
        return f"GroupElement(t={self.t}, q={self.q!r})"


Word = tuple  # ((name, exponent), ...) pairs over an FpPresentation


def parse_word(text: str) -> Word:
    """Parse "u v^-1 x^3" into ((u,1), (v,-1), (x,3)); "" is the empty word."""
    letters = []
    for token in text.split():
        if "^" in token:
            name, _, exp = token.partition("^")
            letters.append((name, int(exp)))
        else:
            letters.append((token, 1))
    return tuple(letters)


def render_word(word: Word) -> str:
    parts = []
    for name, exp in word:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)


@dataclass(frozen=True)
class FpPresentation:
    """A finite presentation: generator names and relator words."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        declared = set(self.generators)
        if len(declared) != len(self.generators):
            raise ValueError("duplicate generator names")
        for rel in self.relators:
            for name, exp in rel:
                if name not in declared:
                    raise ValueError(f"relator uses undeclared generator "
                                     f"{name!r}")
                if exp == 0:
                    raise ValueError("zero exponent in relator")

    def relator_strings(self) -> list[str]:
        return [render_word(r) for r in self.relators]


class ExtensionGroup:
    """A lattice extension with chosen quotient kind, actions and cocycles.

    cocycles maps an involutive quotient generator g to the vector s_g with
    g-hat^2 = s_g.  For the ZxC2 kind the entry under the infinite-order
    generator s instead records the commutator [s-hat, g-hat].
    axis_signs (optional) tags each quotient generator with its action on the
    direction complementary to the lattice; orientation characters need it.
    """

    def __init__(self, kind, rank, lattice_names=None, generators=None,
                 action=None, cocycles=None, axis_signs=None, name=None):
        self.kind = QuotientKind(kind)
        if rank < 0:
            raise ValueError("negative rank")
        self.rank = rank
        if lattice_names is None:
            lattice_names = tuple(f"e{i + 1}" for i in range(rank))
        self.lattice_names = tuple(lattice_names)
        if len(self.lattice_names) != rank:
            raise ValueError("lattice_names length must equal rank")

        arity = _ARITY[self.kind]
        if generators is None:
            if arity:
                raise ValueError(f"kind {self.kind.value} needs {arity} "
                                 f"generator name(s)")
            generators = ()
        self.generators = tuple(generators)
        if len(self.generators) != arity:
            raise ValueError(f"kind {self.kind.value} takes exactly {arity} "
                             f"generator name(s)")
        all_names = self.lattice_names + self.generators
        if len(set(all_names)) != len(all_names):
            raise ValueError("generator names clash")

        action = dict(action or {})
        if set(action) != set(self.generators):
            raise ValueError("action must cover exactly the quotient "
                             "generators")
        self.action = {}
        for g, m in action.items():
            if rank == 0:
                if m is not None:
                    raise ValueError("rank-0 group takes no action matrices")
                continue
            if not isinstance(m, IntMatrix):
                m = IntMatrix(m)
            if m.n != rank:
                raise ValueError(f"action of {g!r} has wrong size")
            if not m.is_unimodular():
                raise ValueError(f"action of {g!r} is not in GL({rank},Z)")
            self.action[g] = m

        cocycles = dict(cocycles or {})
        allowed = set(self._involutive_generators())
        if self.kind is QuotientKind.ZXC2:
            allowed.add(self.generators[0])
        for g in cocycles:
            if g not in allowed:
                raise ValueError(f"cocycle attached to {g!r}, which admits "
                                 f"none")
        self.square_cocycle = {}
        for g in self._involutive_generators():
            v = tuple(cocycles.get(g, (0,) * rank))
            if len(v) != rank:
                raise ValueError(f"cocycle of {g!r} has wrong length")
            self.square_cocycle[g] = v
        self.comm_cocycle = None
        if self.kind is QuotientKind.ZXC2:
            v = tuple(cocycles.get(self.generators[0], (0,) * rank))
            if len(v) != rank:
                raise ValueError("commutator cocycle has wrong length")
            self.comm_cocycle = v

        self.axis_signs = None
        if axis_signs is not None:
            axis_signs = dict(axis_signs)
            if set(axis_signs) != set(self.generators):
                raise ValueError("axis_signs must cover exactly the quotient "
                                 "generators")
            for g, s in axis_signs.items():
                if s not in (1, -1):
                    raise ValueError(f"axis sign of {g!r} must be +-1")
            self.axis_signs = axis_signs

        self.name = name
        self._validate_structure()

    # -- structural checks --------------------------------------------------

    def _involutive_generators(self) -> tuple[str, ...]:
        k = self.kind
        if k is QuotientKind.C2:
            return (self.generators[0],)
        if k is QuotientKind.ZXC2:
            return (self.generators[1],)
        if k is QuotientKind.DINF:
            return self.generators
        return ()

    def _validate_structure(self):
        if self.rank == 0:
            return
        ident = IntMatrix.identity(self.rank)
        for g in self._involutive_generators():
            m = self.action[g]
            if m * m != ident:
                raise ValueError(f"action of involutive generator {g!r} does "
                                 f"not square to I")
            s = self.square_cocycle[g]
            if m.apply(s) != s:
                raise ValueError(f"square cocycle of {g!r} is not fixed by "
                                 f"its action")
        if self.kind is QuotientKind.KLEIN:
            x, y = self.generators
            mx, my = self.action[x], self.action[y]
            if mx * my * mx.inverse() != my.inverse():
                raise ValueError("Klein actions do not satisfy "
                                 "x y x^-1 = y^-1")
        if self.kind is QuotientKind.ZXC2:
            s, g = self.generators
            a, m = self.action[s], self.action[g]
            if a * m != m * a:
                raise ValueError("ZxC2 actions do not commute")
            # conjugating g-hat^2 by s-hat forces (A - I) s_g = (I + G) c
            lhs = vec_sub(a.apply(self.square_cocycle[g]),
                          self.square_cocycle[g])
            rhs = vec_add(self.comm_cocycle, m.apply(self.comm_cocycle))
            if lhs != rhs:
                raise ValueError("ZxC2 cocycles are inconsistent: "
                                 "(A - I) s_g != (I + G) c")

    # -- normal forms -------------------------------------------------------

    def _q_identity(self):
        k = self.kind
        if k in (QuotientKind.TRIVIAL, QuotientKind.DINF):
            return ()
        if k in (QuotientKind.C2, QuotientKind.ZQ):
            return 0
        return (0, 0)

    def _check_q(self, q):
        k = self.kind
        if k is QuotientKind.TRIVIAL:
            if q != ():
                raise ValueError("trivial quotient admits only the empty "
                                 "word")
            return ()
        if k is QuotientKind.C2:
            if q not in (0, 1):
                raise ValueError("C2 word must be 0 or 1")
            return q
        if k is QuotientKind.ZQ:
            if not isinstance(q, int):
                raise ValueError("Zq word must be an integer")
            return q
        if k is QuotientKind.ZXC2:
            kk, eps = q
            if eps not in (0, 1):
                raise ValueError("ZxC2 word must be (k, 0 or 1)")
            return (kk, eps)
        if k is QuotientKind.KLEIN:
            a, b = q
            return (int(a), int(b))
        # Dinf: alternating tuple of the two generator names
        q = tuple(q)
        u, v = self.generators
        for i, letter in enumerate(q):
            if letter not in (u, v):
                raise ValueError(f"unknown Dinf letter {letter!r}")
            if i and q[i - 1] == letter:
                raise ValueError("Dinf word is not alternating")
        return q

    def element(self, t, q=None) -> GroupElement:
        t = tuple(t)
        if len(t) != self.rank:
            raise ValueError("lattice part has wrong length")
        if q is None:
            q = self._q_identity()
        return GroupElement(t, self._check_q(q))

    def identity(self) -> GroupElement:
        return self.element((0,) * self.rank)

    def lattice_element(self, t) -> GroupElement:
        return self.element(t)

    def generator_element(self, name) -> GroupElement:
        zero = (0,) * self.rank
        if name not in self.generators:
            raise ValueError(f"unknown quotient generator {name!r}")
        t, q = self._append_one(zero, self._q_identity(), name, 1)
        return GroupElement(t, q)

    def generator_elements(self) -> list[GroupElement]:
        return [self.generator_element(g) for g in self.generators]

    def lattice_basis_elements(self) -> list[GroupElement]:
        out = []
        for i in range(self.rank):
            e = [0] * self.rank
            e[i] = 1
            out.append(self.element(tuple(e)))
        return out

    # -- quotient word helpers ---------------------------------------------

    def _q_letters(self, q) -> list[tuple[str, int]]:
        """Canonical letter sequence of a normal-form word, exponents +-1."""
        k = self.kind
        if k is QuotientKind.TRIVIAL:
            return []
        if k is QuotientKind.C2:
            g = self.generators[0]
            return [(g, 1)] * q
        if k is QuotientKind.ZQ:
            s = self.generators[0]
            return [(s, 1 if q > 0 else -1)] * abs(q)
        if k is QuotientKind.ZXC2:
            s, g = self.generators
            kk, eps = q
            return [(s, 1 if kk > 0 else -1)] * abs(kk) + [(g, 1)] * eps
        if k is QuotientKind.KLEIN:
            x, y = self.generators
            a, b = q
            return ([(x, 1 if a > 0 else -1)] * abs(a)
                    + [(y, 1 if b > 0 else -1)] * abs(b))
        return [(letter, 1) for letter in q]

    def element_to_word(self, a: GroupElement) -> str:
        """Normal-form word for an element: lattice letters first, then the
        quotient word, with runs collapsed to name^exp."""
        letters = [(self.lattice_names[i], a.t[i])
                   for i in range(self.rank) if a.t[i]]
        for name, exp in self._q_letters(a.q):
            if letters and letters[-1][0] == name:
                prev, total = letters[-1]
                if total + exp == 0:
                    letters.pop()
                else:
                    letters[-1] = (prev, total + exp)
            else:
                letters.append((name, exp))
        return render_word(tuple(letters))

    def _word_matrix(self, q) -> IntMatrix | None:
        """Action of the quotient word on the lattice; None at rank 0."""
        if self.rank == 0:
            return None
        m = IntMatrix.identity(self.rank)
        for name, exp in self._q_letters(q):
            a = self.action[name]
            m = m * (a if exp == 1 else a.inverse())
        return m

    def _apply_q(self, q, vec: IntVector) -> IntVector:
        if self.rank == 0:
            return ()
        return self._word_matrix(q).apply(vec)

    def word_action(self, a: GroupElement) -> IntMatrix | None:
        """Conjugation action of a on the lattice."""
        return self._word_matrix(a.q)

    # -- collection ---------------------------------------------------------

    def _append_one(self, t, q, name, exp):
        """Right-multiply (t, q) by a single generator letter name^exp."""
        k = self.kind
        if k is QuotientKind.ZQ:
            return t, q + exp
        if k is QuotientKind.KLEIN:
            x, y = self.generators
            a, b = q
            if name == x:
                return t, (a + exp, -b)
            return t, (a, b + exp)
        if k is QuotientKind.ZXC2:
            return self._append_zxc2(t, q, name, exp)
        # remaining kinds carry involutive letters only
        s_g = self.square_cocycle[name]
        if exp == -1:
            # g-hat^-1 = tau(-s_g) g-hat
            t = vec_add(t, self._apply_q(q, vec_neg(s_g)))
        if k is QuotientKind.C2:
            if q == 0:
                return t, 1
            return vec_add(t, s_g), 0
        # Dinf
        if q and q[-1] == name:
            rest = q[:-1]
            return vec_add(t, self._apply_q(rest, s_g)), rest
        return t, q + (name,)

    def _append_zxc2(self, t, q, name, exp):
        s_name, g_name = self.generators
        kk, eps = q
        if name == s_name:
            if eps == 1:
                a = self.action[s_name] if self.rank else None
                if exp == 1:
                    # g-hat s-hat = tau(-c) s-hat g-hat
                    corr = vec_neg(self.comm_cocycle)
                    shift = (a ** kk).apply(corr) if self.rank else ()
                    return vec_add(t, shift), (kk + 1, 1)
                shift = ((a ** (kk - 1)).apply(self.comm_cocycle)
                         if self.rank else ())
                return vec_add(t, shift), (kk - 1, 1)
            return t, (kk + exp, 0)
        # name == g_name
        s_g = self.square_cocycle[g_name]
        if exp == -1:
            t = vec_add(t, self._apply_q(q, vec_neg(s_g)))
        if eps == 0:
            return t, (kk, 1)
        a = self.action[s_name] if self.rank else None
        shift = (a ** kk).apply(s_g) if self.rank else ()
        return vec_add(t, shift), (kk, 0)

    def element_mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        a = self.element(a.t, a.q)
        b = self.element(b.t, b.q)
        t = vec_add(a.t, self._apply_q(a.q, b.t))
        q = a.q
        for name, exp in self._q_letters(b.q):
            t, q = self._append_one(t, q, name, exp)
        return GroupElement(t, q)

    def element_inv(self, a: GroupElement) -> GroupElement:
        a = self.element(a.t, a.q)
        zero = (0,) * self.rank
        t, q = zero, self._q_identity()
        for name, exp in reversed(self._q_letters(a.q)):
            t, q = self._append_one(t, q, name, -exp)
        partial = GroupElement(t, q)
        # a * partial is a pure translation tau(r); peel it off the right
        r = self.element_mul(a, partial)
        assert r.q == self._q_identity()
        return self.element_mul(partial, self.element(vec_neg(r.t)))

    def element_pow(self, a: GroupElement, k: int) -> GroupElement:
        if k < 0:
            return self.element_pow(self.element_inv(a), -k)
        acc = self.identity()
        for _ in range(k):
            acc = self.element_mul(acc, a)
        return acc

    def conjugate(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """a b a^-1."""
        return self.element_mul(self.element_mul(a, b), self.element_inv(a))

    def commute(self, a: GroupElement, b: GroupElement) -> bool:
        return self.element_mul(a, b) == self.element_mul(b, a)

    def evaluate_word(self, word) -> GroupElement:
        """Evaluate a free word over lattice and quotient generator names."""
        if isinstance(word, str):
            word = parse_word(word)
        acc = self.identity()
        zero = [0] * self.rank
        for name, exp in word:
            if name in self.generators:
                t, q = acc.t, acc.q
                step = 1 if exp > 0 else -1
                for _ in range(abs(exp)):
                    t, q = self._append_one(t, q, name, step)
                acc = GroupElement(t, q)
            elif name in self.lattice_names:
                i = self.lattice_names.index(name)
                vec = list(zero)
                vec[i] = exp
                acc = self.element_mul(acc,
                                       self.element(tuple(vec)))
            else:
                raise ValueError(f"unknown generator {name!r}")
        return acc

    # -- torsion ------------------------------------------------------------

    def _q_order(self, q) -> int | None:
        """Order of the word in the quotient group; None for infinite."""
        k = self.kind
        if k is QuotientKind.TRIVIAL:
            return 1
        if k is QuotientKind.C2:
            return 1 if q == 0 else 2
        if k is QuotientKind.ZQ:
            return 1 if q == 0 else None
        if k is QuotientKind.ZXC2:
            kk, eps = q
            if kk != 0:
                return None
            return 1 if eps == 0 else 2
        if k is QuotientKind.KLEIN:
            return 1 if q == (0, 0) else None
        if not q:
            return 1
        return 2 if len(q) % 2 == 1 else None

    def is_torsion(self, a: GroupElement) -> bool:
        a = self.element(a.t, a.q)
        order = self._q_order(a.q)
        if order is None:
            return False
        if order == 1:
            return is_zero_vector(a.t)
        p = self.element_pow(a, order)
        assert p.q == self._q_identity()
        return is_zero_vector(p.t)

    def find_torsion(self, max_word_len: int = 7) -> GroupElement | None:
        """Search the Dinf cosets of odd words up to max_word_len for a
        torsion element and return a witness, or None.

        The coset of an odd word w contains torsion iff -s(w) is in the
        image of I + action(w), where s(w) is the lattice part of the
        square of (0, w).
        """
        if self.kind is not QuotientKind.DINF:
            raise ValueError("torsion search is defined for Dinf extensions "
                             "only")
        for length in range(1, max_word_len + 1, 2):
            for first in self.generators:
                second = (self.generators[1] if first == self.generators[0]
                          else self.generators[0])
                word = tuple((first if i % 2 == 0 else second)
                             for i in range(length))
                base = self.element((0,) * self.rank, word)
                s_w = self.element_mul(base, base)
                assert s_w.q == ()
                if self.rank == 0:
                    return base
                m = self._word_matrix(word) + IntMatrix.identity(self.rank)
                sol = solve_integer(m, vec_neg(s_w.t))
                if sol is not None:
                    witness = self.element(sol, word)
                    sq = self.element_mul(witness, witness)
                    assert sq == self.identity()
                    return witness
        return None

    # -- presentations ------------------------------------------------------

    def _vector_word(self, vec: IntVector) -> Word:
        return tuple((self.lattice_names[i], c)
                     for i, c in enumerate(vec) if c)

    def _inverse_word(self, word: Word) -> Word:
        return tuple((name, -exp) for name, exp in reversed(word))

    def presentation(self) -> FpPresentation:
        """The finite presentation implied by the extension data."""
        gens = self.lattice_names + self.generators
        rels = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                a, b = self.lattice_names[i], self.lattice_names[j]
                rels.append(((a, 1), (b, 1), (a, -1), (b, -1)))
        for g in self.generators:
            for i, e in enumerate(self.lattice_names):
                image = self.action[g].column(i) if self.rank else ()
                rels.append(((g, 1), (e, 1), (g, -1))
                            + self._inverse_word(self._vector_word(image)))
        for g in self._involutive_generators():
            rels.append(((g, 1), (g, 1))
                        + self._inverse_word(
                            self._vector_word(self.square_cocycle[g])))
        if self.kind is QuotientKind.ZXC2:
            s, g = self.generators
            rels.append(((s, 1), (g, 1), (s, -1), (g, -1))
                        + self._inverse_word(
                            self._vector_word(self.comm_cocycle)))
        if self.kind is QuotientKind.KLEIN:
            x, y = self.generators
            rels.append(((x, 1), (y, 1), (x, -1), (y, 1)))
        return FpPresentation(gens, tuple(rels))

    # -- homology -----------------------------------------------------------

    def _relator_matrix_rows(self):
        """Abelianized relator matrix: rows = generators, columns = relators."""
        pres = self.presentation()
        gens = pres.generators
        index = {g: i for i, g in enumerate(gens)}
        cols = []
        for rel in pres.relators:
            col = [0] * len(gens)
            for name, exp in rel:
                col[index[name]] += exp
            cols.append(col)
        if not cols:
            cols = [[0] * len(gens)] if gens else []
        rows = [[col[i] for col in cols] for i in range(len(gens))]
        return gens, rows

    def _h1_data(self):
        """(generators, free rank, torsion, P, SNF rank, SNF diagonal) of
        the abelianization; H1 coordinates of a class x are P x."""
        gens, rows = self._relator_matrix_rows()
        if not gens:
            return gens, 0, (), [], 0, []
        w = _snf_rows(rows)
        nr = len(rows)
        rank = sum(1 for i in range(min(nr, len(rows[0])))
                   if w.s[i][i] != 0)
        diag = [w.s[i][i] for i in range(rank)]
        torsion = tuple(d for d in diag if d > 1)
        free_rank = nr - rank
        return gens, free_rank, torsion, w.p, rank, diag

    def abelianization(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, torsion coefficients) of pi / [pi, pi]."""
        _, free_rank, torsion, _, _, _ = self._h1_data()
        return free_rank, torsion

    def h1_generator_orders(self) -> dict[str, int | None]:
        """Order of each generator's image in the abelianization (None for
        infinite)."""
        gens, _, _, p, rank, diag = self._h1_data()
        nr = len(gens)
        orders = {}
        for i, g in enumerate(gens):
            coords = [p[j][i] for j in range(nr)]
            if any(coords[j] for j in range(rank, nr)):
                orders[g] = None
                continue
            order = 1
            for j in range(rank):
                d = diag[j]
                if d > 1:
                    order = lcm(order, d // gcd(d, coords[j] % d))
            orders[g] = order
        return orders

    # -- orientation --------------------------------------------------------

    def orientation_character(self, a: GroupElement) -> int:
        """w(a) in Z/2: 0 preserving, 1 reversing."""
        if self.axis_signs is None:
            raise ValueError("group carries no axis signs; orientation "
                             "character is undefined")
        a = self.element(a.t, a.q)
        sign = 1 if self.rank == 0 else self._word_matrix(a.q).det()
        for name, _ in self._q_letters(a.q):
            sign *= self.axis_signs[name]
        return 0 if sign == 1 else 1

    def generator_characters(self) -> dict[str, int]:
        """Orientation character of every lattice and quotient generator."""
        out = {e: 0 for e in self.lattice_names}
        for g in self.generators:
            out[g] = self.orientation_character(self.generator_element(g))
        return out

    def w1_factors_through_z4(self) -> bool:
        """Whether the orientation character lifts to a map H1 -> Z/4."""
        chars = self.generator_characters()
        gens, _, _, p, rank, diag = self._h1_data()
        nr = len(gens)
        # the character must vanish on every relator (it factors through H1)
        _, rows = self._relator_matrix_rows()
        ncols = len(rows[0]) if rows else 0
        for c in range(ncols):
            total = sum(rows[i][c] * chars[gens[i]] for i in range(nr))
            assert total % 2 == 0
        choices = []
        for j in range(nr):
            if j < rank:
                d = diag[j]
                if d % 4 == 0:
                    choices.append((0, 1, 2, 3))
                elif d % 2 == 0:
                    choices.append((0, 2))
                else:
                    choices.append((0,))
            else:
                choices.append((0, 1, 2, 3))
        targets = [chars[g] for g in gens]
        for phi in itertools.product(*choices):
            ok = True
            for i in range(nr):
                val = sum(phi[j] * p[j][i] for j in range(nr)) % 4
                if val % 2 != targets[i] % 2:
                    ok = False
                    break
            if ok:
                return True
        return False

    # -- center and friends -------------------------------------------------

    def center(self) -> "CenterDescription":
        """The center: lattice directions fixed by every action, plus at
        most a few quotient-direction generators found by solving the
        commutation equations exactly.

        rank counts the infinite-order generators; finite-order central
        generators are listed but not counted.
        """
        lat_vectors = self._central_lattice_basis()
        gens = [self.element(v) for v in lat_vectors]
        extras = self._central_quotient_generators()
        gens = extras + gens
        witnesses = (self.generator_elements()
                     + self.lattice_basis_elements())
        for z in gens:
            assert all(self.commute(z, w) for w in witnesses)
        rank = len(lat_vectors) + sum(1 for z in extras
                                      if not self.is_torsion(z))
        return CenterDescription(rank=rank, generators=tuple(gens))

    def _central_lattice_basis(self):
        if self.rank == 0:
            return []
        if not self.generators:
            return [e.t for e in self.lattice_basis_elements()]
        ident = IntMatrix.identity(self.rank)
        stacked = []
        for g in self.generators:
            diff = self.action[g] - ident
            stacked.extend(list(r) for r in diff.rows)
        return _kernel_rows(stacked)

    def _central_quotient_generators(self):
        """Candidate central elements with nontrivial quotient word, solved
        and verified; at most one per quotient direction."""
        candidates = []
        k = self.kind
        if k is QuotientKind.ZQ:
            m = self._finite_action_order(self.generators[0])
            if m is not None:
                candidates.append(m)
        elif k is QuotientKind.C2:
            if self.rank == 0 or self.action[self.generators[0]].is_identity():
                candidates.append(1)
        elif k is QuotientKind.KLEIN:
            x = self.generators[0]
            m = self._finite_action_order(x, even_only=True)
            if m is not None:
                candidates.append((m, 0))
        elif k is QuotientKind.ZXC2:
            s, g = self.generators
            m = self._finite_action_order(s)
            if m is not None:
                candidates.append((m, 0))
            if self.rank == 0 or self.action[g].is_identity():
                candidates.append((0, 1))
        out = []
        for q in candidates:
            elt = self._solve_central_in_coset(q)
            if elt is not None:
                out.append(elt)
        return out

    def _finite_action_order(self, g, even_only=False):
        """Least positive (even, if asked) k with action(g)^k = I, or None."""
        if self.rank == 0:
            return 2 if even_only else 1
        a = self.action[g]
        acc = a
        for k in range(1, ACTION_ORDER_BOUND + 1):
            if acc.is_identity() and not (even_only and k % 2):
                return k
            acc = acc * a
        return None

    def _solve_central_in_coset(self, q) -> GroupElement | None:
        """A central element (t, q) if the commutation equations admit an
        integer solution t, else None."""
        q = self._check_q(q)
        base = self.element((0,) * self.rank, q)
        if self.rank == 0:
            if all(self.conjugate(h, base) == base
                   for h in self.generator_elements()):
                return base
            return None
        ident = IntMatrix.identity(self.rank)
        stacked = []
        rhs = []
        for g in self.generators:
            h = self.generator_element(g)
            conj = self.conjugate(h, base)
            if conj.q != q:
                return None
            # h (t,q) h^-1 = (rho(g) t + d, q) must equal (t, q)
            diff = self.action[g] - ident
            stacked.extend(list(r) for r in diff.rows)
            rhs.extend(vec_neg(conj.t))
        sol = _solve_rows(stacked, rhs) if stacked else (0,) * self.rank
        if sol is None:
            return None
        return self.element(sol, q)

    # -- I(G) ---------------------------------------------------------------

    def i_lattice(self) -> list[IntVector]:
        """Basis of the lattice vectors whose images in H1 are torsion."""
        if self.rank == 0:
            return []
        gens, free_rank, _, p, rank, _ = self._h1_data()
        nr = len(gens)
        if free_rank == 0:
            return [e.t for e in self.lattice_basis_elements()]
        rows = [[p[j][i] for i in range(self.rank)]
                for j in range(rank, nr)]
        return _kernel_rows(rows)

    # -- serialization ------------------------------------------------------

    def to_description(self) -> dict:
        d = {
            "kind": self.kind.value,
            "rank": self.rank,
            "lattice": list(self.lattice_names),
            "generators": list(self.generators),
            "action": {g: (self.action[g].to_lists() if self.rank else None)
                       for g in self.generators},
        }
        cocycles = {}
        for g in self._involutive_generators():
            if not is_zero_vector(self.square_cocycle[g]):
                cocycles[g] = list(self.square_cocycle[g])
        if self.comm_cocycle is not None \
                and not is_zero_vector(self.comm_cocycle):
            cocycles[self.generators[0]] = list(self.comm_cocycle)
        if cocycles:
            d["cocycles"] = cocycles
        if self.axis_signs is not None:
            d["axisSigns"] = dict(self.axis_signs)
        if self.name is not None:
            d["name"] = self.name
        return d

    def __repr__(self):
        tag = self.name or self.kind.value
        return f"ExtensionGroup({tag}, rank={self.rank})"


@dataclass(frozen=True)
class CenterDescription:
    rank: int
    generators: tuple[GroupElement, ...]

    def __str__(self):
        if not self.generators:
            return "trivial"
        parts = ", ".join(f"({g.t}, {g.q!r})" for g in self.generators)
        return f"rank {self.rank}, generated by {parts}"


def from_description(d: dict) -> ExtensionGroup:
    """Build a group from its JSON-style description dict."""
    kind = QuotientKind(d["kind"])
    rank = d["rank"]
    generators = d.get("generators")
    if generators is None:
        action_keys = list(d.get("action", {}))
        if _ARITY[kind] <= 1:
            generators = action_keys
        else:
            raise ValueError("description needs a generators list to fix "
                             "generator roles")
    lattice = d.get("lattice")
    action = {g: (None if rank == 0 else m)
              for g, m in d.get("action", {}).items()}
    if not action and _ARITY[kind] == 0:
        action = {}
    return ExtensionGroup(
        kind,
        rank,
        lattice_names=lattice,
        generators=generators,
        action=action,
        cocycles={g: tuple(v) for g, v in d.get("cocycles", {}).items()},
        axis_signs=d.get("axisSigns"),
        name=d.get("name"),
    )


def is_block_diagonalizable(theta: IntMatrix) -> bool:
    """Whether a bordered matrix [[1,0],[xi,Psi]] is conjugate in GL(3,Z)
    to blockdiag(1, Psi): true iff xi lies in Im(I - Psi)."""
    if theta.n != 3:
        raise ValueError("expected a 3x3 bordered matrix")
    if theta.rows[0] != (1, 0, 0):
        raise ValueError("first row must be (1, 0, 0)")
    xi = (theta.rows[1][0], theta.rows[2][0])
    psi = IntMatrix([[theta.rows[1][1], theta.rows[1][2]],
                     [theta.rows[2][1], theta.rows[2][2]]])
    if psi.det() != 1 or abs(psi.trace()) <= 2:
        raise ValueError("lower block must be hyperbolic in SL(2,Z)")
    ident = IntMatrix.identity(2)
    return solve_integer(ident - psi, xi) is not None


def verify_homomorphism(src: FpPresentation, images: dict,
                        target: ExtensionGroup) -> bool:
    """Whether generator -> GroupElement images kill every relator of src."""
    missing = [g for g in src.generators if g not in images]
    if missing:
        raise ValueError(f"unmapped generators: {missing}")
    ident = target.identity()
    for rel in src.relators:
        acc = ident
        for name, exp in rel:
            img = images[name]
            if exp < 0:
                img = target.element_inv(img)
            for _ in range(abs(exp)):
                acc = target.element_mul(acc, img)
        if acc != ident:
            return False
    return True


def induced_lattice_matrix(lattice_names, images: dict,
                           target: ExtensionGroup) -> IntMatrix:
    """Matrix of a homomorphism restricted to the lattice, given that each
    lattice generator maps to a pure lattice element; columns are images."""
    cols = []
    for name in lattice_names:
        img = images[name]
        if img.q != target._q_identity():
            raise ValueError(f"image of lattice generator {name!r} is not "
                             f"a lattice element")
        cols.append(img.t)
    return IntMatrix.from_columns(cols)
