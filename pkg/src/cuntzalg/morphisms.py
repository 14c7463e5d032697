"""Unital *-endomorphisms of the Cuntz algebra O_N.

A :class:`Morphism` is determined by the images of the generators; the
constructor verifies that the images again satisfy the Cuntz relations,
so every constructed object really is a unital *-endomorphism.

:class:`PermEndo` is the permutative case psi_sigma(s_i) = u_sigma s_i
where sigma permutes the words of a fixed length l (optionally with
signs).  For N = 2, l = 2 the words are numbered 1..4 in lexicographic
order, so cycle names like "psi_1324" pick out a concrete permutation.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .scalars import MINUS_ONE, ONE, Scalar, INV_SQRT2
from .words import Word, all_words, check_word
from .algebra import CuntzPoly, gauge_lift


class Morphism:
    """A unital *-endomorphism of O_N, given by generator images."""

    __slots__ = ("n", "images", "name", "_word_cache")

    def __init__(self, images: Sequence[CuntzPoly], name: str = "",
                 check: bool = True):
        if not images:
            raise ValueError("need at least one generator image")
        n = images[0].n
        if len(images) != n:
            raise ValueError(f"expected {n} generator images, got {len(images)}")
        if check:
            one = CuntzPoly.one(n)
            total = CuntzPoly.zero(n)
            for a, ta in enumerate(images):
                for b, tb in enumerate(images):
                    prod = ta.adjoint() * tb
                    want = one if a == b else CuntzPoly.zero(n)
                    if not (prod - want).is_zero():
                        raise ValueError(
                            f"images violate t_{a+1}^* t_{b+1} = "
                            f"{'1' if a == b else '0'}")
                total = total + ta * ta.adjoint()
            if not (total - one).is_zero():
                raise ValueError("images violate sum_i t_i t_i^* = 1")
        self.n = n
        self.images = list(images)
        self.name = name
        self._word_cache: Dict[Word, CuntzPoly] = {(): CuntzPoly.one(n)}

    def word_image(self, j: Word) -> CuntzPoly:
        """Image of s_J, cached per morphism."""
        cached = self._word_cache.get(j)
        if cached is None:
            cached = self.word_image(j[:-1]) * self.images[j[-1] - 1]
            self._word_cache[j] = cached
        return cached

    def __call__(self, x: CuntzPoly) -> CuntzPoly:
        if x.n != self.n:
            raise ValueError("rank mismatch")
        out = CuntzPoly.zero(self.n)
        for (j, k), coeff in x.terms.items():
            piece = self.word_image(j) * self.word_image(k).adjoint()
            out = out + piece.scale(coeff)
        return out

    def then(self, other: "Morphism") -> "Morphism":
        """other o self: first apply self, then other."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        images = [other(img) for img in self.images]
        name = f"{other.name}.{self.name}" if self.name and other.name else ""
        return Morphism(images, name=name, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.n == other.n and all(
            (a - b).is_zero() for a, b in zip(self.images, other.images))

    def __hash__(self):
        raise TypeError("Morphism is unhashable; equality is semantic")

    def __repr__(self) -> str:
        if self.name:
            return f"Morphism({self.name})"
        body = "; ".join(f"s{i+1} -> {img}" for i, img in enumerate(self.images))
        return f"Morphism({body})"


def compose(first: Morphism, *rest: Morphism) -> Morphism:
    """compose(f, g, h) = f o g o h (rightmost acts first)."""
    out = first
    for m in rest:
        out = m.then(out)
    return out


def identity(n: int) -> Morphism:
    return Morphism([CuntzPoly.generator(n, i) for i in range(1, n + 1)],
                    name="id", check=False)


def ad_unitary(u: CuntzPoly, name: str = "") -> Morphism:
    """The inner automorphism x -> u x u^* of a unitary u."""
    one = CuntzPoly.one(u.n)
    if not ((u * u.adjoint() - one).is_zero() and
            (u.adjoint() * u - one).is_zero()):
        raise ValueError("Ad requires a unitary")
    images = [u * CuntzPoly.generator(u.n, i) * u.adjoint()
              for i in range(1, u.n + 1)]
    return Morphism(images, name=name or "Ad(u)", check=False)


# -- named endomorphisms of O_2 ----------------------------------------


def flip() -> Morphism:
    """alpha: s_1 <-> s_2."""
    return Morphism([CuntzPoly.generator(2, 2), CuntzPoly.generator(2, 1)],
                    name="alpha", check=False)


def gauge_flip(j: int) -> Morphism:
    """beta_j: s_j -> -s_j, the other generator fixed."""
    if j not in (1, 2):
        raise ValueError("beta_j defined for j in {1, 2}")
    images = []
    for i in (1, 2):
        s = CuntzPoly.generator(2, i)
        images.append(-s if i == j else s)
    return Morphism(images, name=f"beta{j}", check=False)


def total_gauge_flip() -> Morphism:
    """theta = beta_1 beta_2: s_i -> -s_i."""
    return Morphism([-CuntzPoly.generator(2, 1), -CuntzPoly.generator(2, 2)],
                    name="theta", check=False)


def hadamard() -> Morphism:
    """phi: s_1 -> (s_1+s_2)/r2, s_2 -> (s_1-s_2)/r2; an involution."""
    s1 = CuntzPoly.generator(2, 1)
    s2 = CuntzPoly.generator(2, 2)
    return Morphism([(s1 + s2).scale(INV_SQRT2), (s1 - s2).scale(INV_SQRT2)],
                    name="phi", check=False)


def rotation() -> Morphism:
    """phi_rot: s_1 -> (s_1+s_2)/r2, s_2 -> (-s_1+s_2)/r2 (order 8)."""
    s1 = CuntzPoly.generator(2, 1)
    s2 = CuntzPoly.generator(2, 2)
    return Morphism([(s1 + s2).scale(INV_SQRT2), (s2 - s1).scale(INV_SQRT2)],
                    name="phi_rot", check=False)


def zeta(x: CuntzPoly) -> CuntzPoly:
    """The twisted shift zeta(x) = s_1 x s_1^* - s_2 x s_2^* on O_2."""
    if x.n != 2:
        raise ValueError("zeta is defined on O_2")
    s1 = CuntzPoly.generator(2, 1)
    s2 = CuntzPoly.generator(2, 2)
    return s1 * x * s1.adjoint() - s2 * x * s2.adjoint()


# -- permutative endomorphisms -----------------------------------------


def lex_words(n: int, length: int) -> List[Word]:
    """Words of the given length in lexicographic order."""
    return sorted(all_words(n, length))


class PermEndo(Morphism):
    """psi_sigma for a (signed) permutation sigma of words of length l.

    sigma maps each word of length l to a word of the same length;
    signs optionally attach -1 to some source words.  The generator
    images are psi(s_i) = sum_{|J'| = l-1} eps * s_{sigma(i J')} s_{J'}^*.
    """

    __slots__ = ("level", "sigma", "signs")

    def __init__(self, n: int, level: int, sigma: Mapping[Word, Word],
                 signs: Mapping[Word, int] | None = None, name: str = ""):
        domain = list(all_words(n, level))
        table: Dict[Word, Word] = {}
        for j in domain:
            image = sigma.get(j)
            if image is None:
                raise ValueError(f"sigma undefined on {j}")
            table[j] = check_word(image, n)
            if len(table[j]) != level:
                raise ValueError("sigma must preserve word length")
        if len(set(table.values())) != len(domain):
            raise ValueError("sigma is not a bijection")
        eps: Dict[Word, int] = {}
        for j in domain:
            e = 1 if signs is None else signs.get(j, 1)
            if e not in (1, -1):
                raise ValueError("signs must be +1 or -1")
            eps[j] = e
        images = []
        for i in range(1, n + 1):
            terms: Dict[Tuple[Word, Word], Scalar] = {}
            for tail in all_words(n, level - 1):
                src = (i,) + tail
                coeff = ONE if eps[src] == 1 else MINUS_ONE
                terms[(table[src], tail)] = coeff
            images.append(CuntzPoly(n, terms))
        super().__init__(images, name=name, check=False)
        self.level = level
        self.sigma = table
        self.signs = eps


def word_number(word: Word, n: int) -> int:
    """1-based lexicographic index of a word among words of its length."""
    idx = 0
    for letter in word:
        idx = idx * n + (letter - 1)
    return idx + 1


def number_word(idx: int, n: int, length: int) -> Word:
    """Inverse of :func:`word_number` at fixed length."""
    idx -= 1
    out = []
    for _ in range(length):
        out.append(idx % n + 1)
        idx //= n
    return tuple(reversed(out))


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int,
                     level: int) -> "PermEndo":
    """Build psi_sigma from disjoint cycles on the numbers 1..n^level.

    Numbers refer to words of length ``level`` in lexicographic order,
    e.g. for n = 2, level = 2: 1 = 11, 2 = 12, 3 = 21, 4 = 22.
    """
    size = n ** level
    mapping = {i: i for i in range(1, size + 1)}
    seen = set()
    label_parts = []
    for cyc in cycles:
        cyc = list(cyc)
        if set(cyc) & seen:
            raise ValueError("cycles must be disjoint")
        seen.update(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not 1 <= a <= size:
                raise ValueError(f"cycle entry {a} outside 1..{size}")
            mapping[a] = b
        label_parts.append("".join(str(c) for c in cyc) if size <= 9
                           else "(" + ",".join(str(c) for c in cyc) + ")")
    sigma = {number_word(a, n, level): number_word(b, n, level)
             for a, b in mapping.items()}
    label = "psi_" + ("".join(f"({p})" for p in label_parts)
                      if len(label_parts) > 1 else (label_parts[0] if label_parts else "id"))
    return PermEndo(n, level, sigma, name=label)


def parse_cycles(text: str) -> List[List[int]]:
    """Parse "12", "1324", "(12)(34)" into cycle lists on digits 1..9."""
    text = text.strip()
    if text in ("", "id"):
        return []
    if "(" in text:
        cycles = []
        rest = text
        while rest:
            if not rest.startswith("("):
                raise ValueError(f"bad cycle notation: {text!r}")
            close = rest.index(")")
            cycles.append([int(c) for c in rest[1:close]])
            rest = rest[close + 1:]
        return cycles
    return [[int(c) for c in text]]


def standard_endo(spec: str, n: int = 2, level: int = 2) -> PermEndo:
    """psi_<spec> with cycle notation, e.g. "13", "1324", "(12)(34")."""
    return perm_from_cycles(parse_cycles(spec), n, level)


def nakanishi() -> PermEndo:
    """A permutative endomorphism of O_3 at level 2 used as a worked
    example of branching on a bigger alphabet."""
    sigma = {
        (1, 1): (2, 3), (1, 2): (3, 1), (1, 3): (1, 2),
        (2, 1): (3, 2), (2, 2): (1, 3), (2, 3): (2, 1),
        (3, 1): (1, 1), (3, 2): (2, 2), (3, 3): (3, 3),
    }
    return PermEndo(3, 2, sigma, name="nakanishi")


NAMED_MORPHISMS = {
    "id": lambda: identity(2),
    "alpha": flip,
    "beta1": lambda: gauge_flip(1),
    "beta2": lambda: gauge_flip(2),
    "theta": total_gauge_flip,
    "phi": hadamard,
    "phi_rot": rotation,
    "nakanishi": nakanishi,
}


def lookup_morphism(name: str) -> Morphism:
    """Resolve a possibly composite name like "psi:1324", "alpha.phi"."""
    name = name.strip()
    if "." in name:
        parts = [lookup_morphism(p) for p in name.split(".")]
        out = parts[-1]
        for m in reversed(parts[:-1]):
            out = out.then(m)
        out.name = name
        return out
    if name.startswith("psi:"):
        return standard_endo(name[4:])
    maker = NAMED_MORPHISMS.get(name)
    if maker is None:
        raise ValueError(f"unknown morphism {name!r}")
    return maker()


# -- direct-sum splitting ------------------------------------------------


def _frames(n: int):
    if n != 2:
        return {}
    s1 = CuntzPoly.generator(2, 1)
    s2 = CuntzPoly.generator(2, 2)
    return {
        "xi": (s1, s2),
        "xi'": ((s1 + s2).scale(INV_SQRT2), (s1 - s2).scale(INV_SQRT2)),
    }


def split_direct_sum(m: Morphism):
    """Try to split a unital endomorphism of O_2 as a 2x2 block diagonal.

    Searches a small family of isometry frames (z_1, z_2) with
    z_1 z_1^* + z_2 z_2^* = 1 for which f_k(x) = z_k^* m(x) z_k are both
    endomorphisms and z_1 f_1(x) z_1^* + z_2 f_2(x) z_2^* reproduces m.
    Returns (frame_name, (f_1, f_2)) or None.
    """
    gens = [CuntzPoly.generator(m.n, i) for i in range(1, m.n + 1)]
    for frame_name, (z1, z2) in _frames(m.n).items():
        parts = []
        ok = True
        for z in (z1, z2):
            try:
                part = Morphism([z.adjoint() * m(g) * z for g in gens])
            except ValueError:
                ok = False
                break
            parts.append(part)
        if not ok:
            continue
        f1, f2 = parts
        if all((z1 * f1(g) * z1.adjoint() + z2 * f2(g) * z2.adjoint()
                - m(g)).is_zero() for g in gens):
            return frame_name, (f1, f2)
    return None
