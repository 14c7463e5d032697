"""Polynomials in the Cuntz isometries s_1..s_N and their adjoints.

Every element of the dense *-subalgebra has a unique expansion as a
finite sum of monomials s_J s_K^* with multi-indices J, K (Cuntz words).
:class:`CuntzPoly` stores such an expansion sparsely as a map
(J, K) -> Scalar and implements the relations

    s_i^* s_j = delta_ij * 1,      sum_i s_i s_i^* = 1.

Reduction collapses any full sibling block {(J+(i), K+(i)) : i} carrying
a common coefficient into (J, K).  Two reduced expansions can still name
the same element (the second relation lets a term fan out), so equality
pads both sides to a common adjoint depth per grade before comparing.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .scalars import MINUS_ONE, ONE, Scalar, ZERO
from .words import Word, all_words, check_word

Key = Tuple[Word, Word]


class CuntzPoly:
    """A finite sum of monomials c * s_J s_K^* over the alphabet 1..N."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Key, Scalar] | None = None):
        if n < 2:
            raise ValueError("need at least two isometries")
        self.n = n
        data: Dict[Key, Scalar] = {}
        if terms:
            for (j, k), coeff in terms.items():
                if coeff.is_zero():
                    continue
                key = (check_word(j, n), check_word(k, n))
                acc = data.get(key)
                coeff = coeff if acc is None else acc + coeff
                if coeff.is_zero():
                    data.pop(key, None)
                else:
                    data[key] = coeff
        self.terms = data

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CuntzPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CuntzPoly":
        return cls(n, {((), ()): ONE})

    @classmethod
    def generator(cls, n: int, i: int) -> "CuntzPoly":
        """The isometry s_i."""
        return cls(n, {((i,), ()): ONE})

    @classmethod
    def monomial(cls, n: int, j: Iterable[int], k: Iterable[int],
                 coeff: Scalar = ONE) -> "CuntzPoly":
        """c * s_J s_K^*; an empty word means no isometry on that side."""
        return cls(n, {(tuple(j), tuple(k)): coeff})

    @classmethod
    def matrix_unit(cls, n: int, j: Iterable[int], k: Iterable[int]) -> "CuntzPoly":
        """E_JK = s_J s_K^* for words of equal length."""
        j, k = tuple(j), tuple(k)
        if len(j) != len(k):
            raise ValueError("matrix unit needs |J| = |K|")
        return cls.monomial(n, j, k)

    @classmethod
    def from_scalar(cls, n: int, c: Scalar) -> "CuntzPoly":
        return cls(n, {((), ()): c})

    # -- ring structure ---------------------------------------------------

    def _check_same(self, other: "CuntzPoly") -> None:
        if self.n != other.n:
            raise ValueError("mixing Cuntz algebras of different rank")

    def __add__(self, other: "CuntzPoly") -> "CuntzPoly":
        self._check_same(other)
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = data.get(key)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                data.pop(key, None)
            else:
                data[key] = total
        return CuntzPoly(self.n, data)

    def __sub__(self, other: "CuntzPoly") -> "CuntzPoly":
        return self + (-other)

    def __neg__(self) -> "CuntzPoly":
        return self.scale(MINUS_ONE)

    def scale(self, c: Scalar) -> "CuntzPoly":
        if c.is_zero():
            return CuntzPoly.zero(self.n)
        return CuntzPoly(self.n, {key: coeff * c for key, coeff in self.terms.items()})

    def __mul__(self, other: "CuntzPoly") -> "CuntzPoly":
        """Product using s_K^* s_L = s_{L'} (L = K + L') or s_{K'}^* (K = L + K')."""
        self._check_same(other)
        data: Dict[Key, Scalar] = {}
        for (j1, k1), c1 in self.terms.items():
            for (j2, k2), c2 in other.terms.items():
                if len(k1) <= len(j2):
                    if j2[:len(k1)] != k1:
                        continue
                    key = (j1 + j2[len(k1):], k2)
                else:
                    if k1[:len(j2)] != j2:
                        continue
                    key = (j1, k2 + k1[len(j2):])
                coeff = c1 * c2
                acc = data.get(key)
                total = coeff if acc is None else acc + coeff
                if total.is_zero():
                    data.pop(key, None)
                else:
                    data[key] = total
        return CuntzPoly(self.n, data)

    def adjoint(self) -> "CuntzPoly":
        return CuntzPoly(self.n, {(k, j): c.conjugate()
                                  for (j, k), c in self.terms.items()})

    def __pow__(self, m: int) -> "CuntzPoly":
        if m < 0:
            raise ValueError("negative powers are not defined")
        out = CuntzPoly.one(self.n)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    # -- canonical form ---------------------------------------------------

    def reduce(self) -> "CuntzPoly":
        """Greedily contract full sibling blocks with a common coefficient.

        Replaces {(J+(i), K+(i)): c for all i} by {(J, K): c}, repeating
        until no block contracts.  The result has no contractible block,
        which is the canonical expansion used for printing.
        """
        data = dict(self.terms)
        changed = True
        while changed:
            changed = False
            # group candidate blocks by truncated key
            for (j, k), coeff in list(data.items()):
                if not j or not k or j[-1] != k[-1]:
                    continue
                parent = (j[:-1], k[:-1])
                block = [(j[:-1] + (i,), k[:-1] + (i,)) for i in range(1, self.n + 1)]
                if all(data.get(key) == coeff for key in block):
                    for key in block:
                        del data[key]
                    acc = data.get(parent)
                    total = coeff if acc is None else acc + coeff
                    if total.is_zero():
                        data.pop(parent, None)
                    else:
                        data[parent] = total
                    changed = True
                    break
        return CuntzPoly(self.n, data)

    def _padded(self) -> Dict[Key, Scalar]:
        """Expand each term so that, within every grade d = |J| - |K|, all
        terms share the maximal adjoint depth.  Padded keys are linearly
        independent, so this map is a faithful coordinate vector."""
        depth: Dict[int, int] = {}
        for (j, k) in self.terms:
            d = len(j) - len(k)
            depth[d] = max(depth.get(d, 0), len(k))
        data: Dict[Key, Scalar] = {}
        for (j, k), coeff in self.terms.items():
            pad = depth[len(j) - len(k)] - len(k)
            for w in all_words(self.n, pad):
                key = (j + w, k + w)
                acc = data.get(key)
                total = coeff if acc is None else acc + coeff
                if total.is_zero():
                    data.pop(key, None)
                else:
                    data[key] = total
        return data

    def is_zero(self) -> bool:
        reduced = self.reduce()
        if not reduced.terms:
            return True
        return not reduced._padded()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CuntzPoly):
            return NotImplemented
        self._check_same(other)
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("CuntzPoly is unhashable; equality is semantic")

    def is_one(self) -> bool:
        return self == CuntzPoly.one(self.n)

    # -- inspection --------------------------------------------------------

    def coefficient(self, j: Word, k: Word) -> Scalar:
        return self.terms.get((tuple(j), tuple(k)), ZERO)

    def support(self):
        return sorted(self.terms, key=lambda key: (len(key[0]), len(key[1]), key))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        from .words import render_word
        reduced = self.reduce()
        if not reduced.terms:
            return "0"
        parts = []
        for (j, k) in reduced.support():
            coeff = reduced.terms[(j, k)]
            body = ""
            if j:
                body += f"s{render_word(j)}"
            if k:
                body += f"s{render_word(k)}'"
            if not body:
                body = "1"
            c = str(coeff)
            if c == "1":
                parts.append(body)
            elif c == "-1":
                parts.append(f"-{body}")
            elif body == "1":
                parts.append(c)
            else:
                if ("+" in c[1:]) or ("-" in c[1:]) or ("/" in c) or ("r2" in c):
                    parts.append(f"({c})*{body}")
                else:
                    parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"CuntzPoly(N={self.n}, {self})"

    def to_json(self):
        from .words import render_word
        reduced = self.reduce()
        return {
            "n": self.n,
            "terms": [
                {"left": render_word(j), "right": render_word(k),
                 "coeff": reduced.terms[(j, k)].to_json()}
                for (j, k) in reduced.support()
            ],
        }


def gauge_lift(x: CuntzPoly) -> CuntzPoly:
    """The canonical shift lambda(x) = sum_i s_i x s_i^*.

    Satisfies lambda(x) s_j = s_j x, which drives word-image recursions.
    """
    out = CuntzPoly.zero(x.n)
    for i in range(1, x.n + 1):
        s = CuntzPoly.generator(x.n, i)
        out = out + s * x * s.adjoint()
    return out


def embed_word(x: CuntzPoly, j: Word) -> CuntzPoly:
    """s_J x s_J^* for a word J."""
    s = CuntzPoly.monomial(x.n, j, ())
    return s * x * s.adjoint()
