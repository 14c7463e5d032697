"""Permutative representations of O_N and their branching laws.

A permutative representation acts on a Hilbert space with a labeled
orthonormal basis that every s_i maps into itself (up to sign).  Two
families are implemented:

* :class:`CycleRep` -- P(J) for a primitive finite word J, with basis
  labels (w, p): the vector s_w e_p, where e_p = s_{j_p} ... s_{j_k} Omega
  and e_1 = Omega.  An optional phase q in {0, 1/2} twists the cycle
  relation to s_J Omega = e^(2 pi i q) Omega.
* :class:`ChainRep` -- P(K) for an eventually periodic one-sided infinite
  word K, with labels (w, m), m in Z, and e_{m-1} = s_{K(m)} e_m
  (K(m) = 1 for m <= 0).

Composing such a representation with a permutative endomorphism again
gives a permutative representation; :func:`branch` computes its
decomposition into cycles and chains by following the unique-predecessor
map backwards from a complete set of seed labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .scalars import MINUS_ONE, ONE, Scalar
from .words import (CycleClass, EvWord, Word, all_words, canonical_cycle,
                    check_word, is_primitive, make_ev_word, primitive_split,
                    render_word, rotations)
from .morphisms import Morphism, PermEndo

Label = Tuple[Word, int]
Hit = Optional[Tuple[Scalar, Label]]


class CycleRep:
    """The cycle representation P(J; q) on labels (w, p), p in 1..|J|."""

    __slots__ = ("n", "word", "phase", "k")

    def __init__(self, n: int, word, phase: Fraction = Fraction(0)):
        word = check_word(word, n)
        if not is_primitive(word):
            raise ValueError("cycle word must be primitive")
        q = Fraction(phase) % 1
        if q not in (Fraction(0), Fraction(1, 2)):
            raise ValueError("only phases 0 and 1/2 act over the real field")
        self.n = n
        self.word = word
        self.phase = q
        self.k = len(word)

    def _wrap_scalar(self) -> Scalar:
        return MINUS_ONE if self.phase else ONE

    def _prev_letter(self, p: int) -> int:
        """The letter carrying e_p back one step: s_{l(p)} e_p = e_{p-1}."""
        return self.word[p - 2] if p >= 2 else self.word[self.k - 1]

    def gen(self, i: int, label: Label) -> Hit:
        """Apply s_i to a reduced label; returns (scalar, label) or None."""
        w, p = label
        if w:
            return ONE, ((i,) + w, p)
        if i == self._prev_letter(p):
            if p == 1:
                return self._wrap_scalar(), ((), self.k)
            return ONE, ((), p - 1)
        return ONE, ((i,), p)

    def gen_adj(self, i: int, label: Label) -> Hit:
        w, p = label
        if w:
            if i == w[0]:
                return ONE, (w[1:], p)
            return None
        if i == self.word[p - 1]:
            if p == self.k:
                return self._wrap_scalar(), ((), 1)
            return ONE, ((), p + 1)
        return None

    def seed_labels(self, bound: int) -> List[Label]:
        out = []
        for p in range(1, self.k + 1):
            bad = self._prev_letter(p)
            for length in range(bound + 1):
                for w in all_words(self.n, length):
                    if not w or w[-1] != bad:
                        out.append((w, p))
        return out

    def vacuum(self) -> Label:
        return ((), 1)

    def __repr__(self) -> str:
        return str(canonical_cycle(self.word, self.phase))


class ChainRep:
    """The chain representation P(K) on labels (w, m), m in Z."""

    __slots__ = ("n", "ev")

    def __init__(self, ev: EvWord):
        self.n = ev.n
        self.ev = ev

    def _letter(self, m: int) -> int:
        return self.ev.letter(m) if m >= 1 else 1

    def gen(self, i: int, label: Label) -> Hit:
        w, m = label
        if w:
            return ONE, ((i,) + w, m)
        if i == self._letter(m):
            return ONE, ((), m - 1)
        return ONE, ((i,), m)

    def gen_adj(self, i: int, label: Label) -> Hit:
        w, m = label
        if w:
            if i == w[0]:
                return ONE, (w[1:], m)
            return None
        if i == self._letter(m + 1):
            return ONE, ((), m + 1)
        return None

    def seed_labels(self, bound: int) -> List[Label]:
        lo = -bound
        hi = len(self.ev.prefix) + len(self.ev.period) + bound
        out = []
        for m in range(lo, hi + 1):
            for length in range(bound + 1):
                for w in all_words(self.n, length):
                    if not w or w[-1] != self._letter(m):
                        out.append((w, m))
        return out

    def __repr__(self) -> str:
        return f"P({self.ev})"


def act_word_adj(rep, word: Word, label: Label) -> Hit:
    """Apply s_word^* (first letter of word acts first)."""
    sign = ONE
    for letter in word:
        hit = rep.gen_adj(letter, label)
        if hit is None:
            return None
        s, label = hit
        sign = sign * s
    return sign, label


def act_word(rep, word: Word, label: Label) -> Tuple[Scalar, Label]:
    """Apply s_word (last letter of word acts first)."""
    sign = ONE
    for letter in reversed(word):
        s, label = rep.gen(letter, label)
        sign = sign * s
    return sign, label


def act_poly(rep, poly, vec: Dict[Label, Scalar]) -> Dict[Label, Scalar]:
    """Apply a Cuntz polynomial to a finite linear combination of labels."""
    out: Dict[Label, Scalar] = {}
    for (j, k), coeff in poly.terms.items():
        for label, amp in vec.items():
            hit = act_word_adj(rep, k, label)
            if hit is None:
                continue
            s1, mid = hit
            s2, final = act_word(rep, j, mid)
            total = coeff * amp * s1 * s2
            acc = out.get(final)
            total = total if acc is None else acc + total
            if total.is_zero():
                out.pop(final, None)
            else:
                out[final] = total
    return out


# -- branching -----------------------------------------------------------


@dataclass
class Component:
    """One irreducible-type summand of a composed representation."""

    kind: str                       # "cycle" or "chain"
    classes: List[CycleClass] = field(default_factory=list)
    cycle_word: Word = ()
    sign: int = 1
    cycle_labels: List[Label] = field(default_factory=list)
    chain_word: Optional[EvWord] = None

    def describe(self) -> str:
        if self.kind == "cycle":
            if self.sign == 1:
                from .words import minimal_rotation
                return f"P({render_word(minimal_rotation(self.cycle_word))})"
            return " (+) ".join(str(c) for c in self.classes)
        return f"P({self.chain_word})"


@dataclass
class BranchResult:
    components: List[Component]

    def cycle_classes(self) -> List[CycleClass]:
        out: List[CycleClass] = []
        for comp in self.components:
            out.extend(comp.classes)
        return sorted(out, key=lambda c: (len(c.representative),
                                          c.representative, c.phase))

    def describe(self) -> str:
        return " (+) ".join(comp.describe() for comp in self.components)


def _phased_classes(word: Word, sign: int) -> List[CycleClass]:
    """Split a possibly imprimitive cycle word with sign into phased cycles.

    t_W v = sign * v with W = root^m yields eigenvalues that are the m-th
    roots of sign, i.e. phases (q0 + j)/m where sign = e^(2 pi i q0).
    """
    root, mult = primitive_split(word)
    q0 = Fraction(1, 2) if sign < 0 else Fraction(0)
    return [canonical_cycle(root, (q0 + j) / mult) for j in range(mult)]


def branch(rep, endo: PermEndo, seed_bound: Optional[int] = None,
           max_steps: int = 200000) -> BranchResult:
    """Decompose rep o endo into cycle and chain components.

    Seeds every reduced label with word part of length <= seed_bound and
    follows the unique predecessor map until each orbit closes into a
    cycle, merges into a known component, or (for chain base
    representations) exhibits an eventually periodic escape.

    The predecessor map strictly shortens word parts longer than
    endo.level - 1, so every recurrent label has a word part of length
    at most endo.level - 1; any seed_bound >= endo.level - 1 therefore
    reaches every component of a cycle base representation.
    """
    level = endo.level
    if seed_bound is None:
        seed_bound = max(level - 1, 1)
    n = rep.n
    tails = list(all_words(n, level - 1))
    sigma = endo.sigma
    eps = endo.signs

    def pred(label: Label) -> Tuple[int, int, Label]:
        found = None
        for i in range(1, n + 1):
            for tail in tails:
                src = (i,) + tail
                hit = act_word_adj(rep, sigma[src], label)
                if hit is None:
                    continue
                if found is not None:
                    raise AssertionError(f"predecessor of {label} not unique")
                s1, mid = hit
                s2, out = act_word(rep, tail, mid)
                sgn = eps[src] * (1 if (s1 * s2).is_one() else -1)
                found = (i, sgn, out)
        if found is None:
            raise AssertionError(f"no predecessor for {label}")
        return found

    is_chain_base = isinstance(rep, ChainRep)
    if is_chain_base:
        per = len(rep.ev.period)
        pre = len(rep.ev.prefix)

    memo: Dict[Label, int] = {}
    components: List[Component] = []
    steps = 0

    for seed in rep.seed_labels(seed_bound):
        if seed in memo:
            continue
        path: List[Label] = [seed]
        letters: List[int] = []
        signs: List[int] = []
        index = {seed: 0}
        sigmap: Dict[Tuple, int] = {}
        while True:
            steps += 1
            if steps > max_steps:
                raise RuntimeError(
                    f"branch exceeded {max_steps} predecessor steps; "
                    f"orbit of seed {seed} has not closed "
                    f"(last label {path[-1]}, {len(components)} components "
                    "found so far) -- raise max_steps or check the input")
            current = path[-1]
            if is_chain_base:
                w, m = current
                if m > pre:
                    sig = (w, (m - pre) % per)
                    at = sigmap.get(sig)
                    if at is not None and current[1] > path[at][1]:
                        # eventually periodic escape: a chain component
                        ev = make_ev_word(n, letters[:at],
                                          letters[at:len(path) - 1])
                        comp_id = len(components)
                        components.append(Component("chain", chain_word=ev))
                        for lab in path:
                            memo[lab] = comp_id
                        break
                    if at is None:
                        sigmap[sig] = len(path) - 1
            i, sgn, prev = pred(current)
            letters.append(i)
            signs.append(sgn)
            known = memo.get(prev)
            if known is not None:
                for lab in path:
                    memo[lab] = known
                break
            at = index.get(prev)
            if at is not None:
                word = tuple(letters[at:])
                sign = 1
                for s in signs[at:]:
                    sign *= s
                comp_id = len(components)
                components.append(Component(
                    "cycle",
                    classes=_phased_classes(word, sign),
                    cycle_word=word,
                    sign=sign,
                    cycle_labels=path[at:]))
                for lab in path:
                    memo[lab] = comp_id
                break
            index[prev] = len(path)
            path.append(prev)
    return BranchResult(components)


def decompose_power(word, l: int, n: Optional[int] = None) -> List[CycleClass]:
    """P(J^l) = direct sum over n = 1..l of P(J; (n-1)/l)."""
    word = tuple(word)
    if not is_primitive(word):
        raise ValueError("give the primitive root and the power separately")
    return [canonical_cycle(word, Fraction(j, l)) for j in range(l)]


# -- restriction to the gauge-invariant subalgebra -----------------------


def grade_class(label: Label, k: int) -> int:
    """Which rotation component a cycle label restricts into.

    For P(J) with |J| = k, the label (w, p) lies in the component of
    P[sigma_i J] where i = ((p - 1 - |w|) mod k) + 1.
    """
    w, p = label
    return (p - 1 - len(w)) % k + 1


@dataclass
class UhfCycle:
    """A gauge-invariant cycle class P[W]; rotations are inequivalent."""

    word: Word

    def __str__(self) -> str:
        return f"P[{render_word(self.word)}]"

    def __lt__(self, other: "UhfCycle"):
        return (len(self.word), self.word) < (len(other.word), other.word)


@dataclass
class UhfChainFamily:
    """Restriction of a chain P(K): one copy of P[K shifted by eta] for
    every integer eta, with 1-padding below position one."""

    ev: EvWord

    def shifts(self, etas) -> List[EvWord]:
        from .words import shift
        return [shift(self.ev, eta) for eta in etas]

    def __str__(self) -> str:
        return f"(+)_eta P[shift({self.ev}, eta)]"


def restrict_cycle_to_uhf(n: int, word) -> List[UhfCycle]:
    """P(J)|UHF = P[sigma_1 J] (+) ... (+) P[sigma_k J]."""
    word = check_word(word, n)
    if not is_primitive(word):
        raise ValueError("cycle word must be primitive")
    return [UhfCycle(rot) for rot in rotations(word)]


def restrict_chain_to_uhf(ev: EvWord) -> UhfChainFamily:
    return UhfChainFamily(ev)


def uhf_branch(n: int, word, endo: PermEndo,
               seed_bound: Optional[int] = None) -> Dict[int, List[UhfCycle]]:
    """Branching of the gauge-invariant components of P(J) under endo.

    Returns, for each i = 1..|J|, the decomposition of P[sigma_i J] o endo
    as a multiset of UHF cycles: each label v in a cycle component of
    P(J) o endo contributes the primitive root of its rotation word to
    the class of v.
    """
    word = check_word(word, n)
    k = len(word)
    result = branch(CycleRep(n, word), endo, seed_bound=seed_bound)
    out: Dict[int, List[UhfCycle]] = {i: [] for i in range(1, k + 1)}
    for comp in result.components:
        if comp.kind != "cycle":
            raise RuntimeError("cycle base produced a chain component")
        m = len(comp.cycle_word)
        for j, label in enumerate(comp.cycle_labels):
            i = grade_class(label, k)
            rotated = comp.cycle_word[j:] + comp.cycle_word[:j]
            root, _ = primitive_split(rotated)
            out[i].append(UhfCycle(root))
    for i in out:
        out[i].sort()
    return out


# -- the quasi-free pair GP(+/-) -----------------------------------------


@dataclass(frozen=True)
class GpAtom:
    """One summand of a branching of GP(+) or GP(-).

    Internally GP(e) is P(i; q) o phi with i = 1 for '+', i = 2 for '-';
    q = 1/2 records an extra composition with theta.  Summands that do
    not reduce to this shape keep their cycle word.
    """

    word: Word
    phase: Fraction

    def is_gp(self) -> bool:
        return self.word in ((1,), (2,))

    def describe(self, uhf: bool = False) -> str:
        if self.is_gp():
            sign = "+" if self.word == (1,) else "-"
            if uhf:
                return f"GP[{sign}]"
            return f"GP({sign})" + (".theta" if self.phase else "")
        body = str(canonical_cycle(self.word, self.phase))
        return f"{body}.phi"


def as_signed_perm(m: Morphism) -> Optional[PermEndo]:
    """Recognize a morphism of the form x -> u x u^* s for a signed
    permutation matrix u over monomials, i.e. images
    m(s_i) = sum_tail eps * s_sigma(i tail) s_tail^*; returns the
    corresponding PermEndo or None."""
    n = m.n
    level = 0
    reduced = [img.reduce() for img in m.images]
    for img in reduced:
        for (j, k) in img.terms:
            if len(j) - len(k) != 1:
                return None
            level = max(level, len(j))
    if level == 0:
        return None
    sigma: Dict[Word, Word] = {}
    signs: Dict[Word, int] = {}
    for i, img in enumerate(reduced, start=1):
        for (j, k), coeff in img.terms.items():
            if coeff.is_one():
                sgn = 1
            elif (-coeff).is_one():
                sgn = -1
            else:
                return None
            for pad in all_words(n, level - 1 - len(k)):
                src = (i,) + k + pad
                if src in sigma:
                    return None
                sigma[src] = j + pad
                signs[src] = sgn
    if len(sigma) != n ** level or len(set(sigma.values())) != len(sigma):
        return None
    try:
        return PermEndo(n, level, sigma, signs=signs)
    except ValueError:
        return None


def gp_branch(m: Morphism) -> Optional[Dict[str, List[GpAtom]]]:
    """Branching of GP(+) and GP(-) under a unital endomorphism of O_2.

    GP(e) o m = (P(i) o phihat(m)) o phi with phihat(m) = phi o m o phi.
    The supported fragment mirrors the published rule set: phihat(m) a
    signed permutation of the generators (covers the identity, alpha,
    beta_1, beta_2, theta and their products), a direct-sum splitting
    whose blocks branch independently, or an involutive automorphism
    whose phihat is signed permutative.  Anything else returns None
    ("not derivable"), even when an orbit search could in principle be
    pushed further.
    """
    from .morphisms import compose, hadamard, identity, split_direct_sum
    if m.n != 2:
        raise ValueError("GP(+/-) live on O_2")
    phi = hadamard()
    twisted = compose(phi, m, phi)
    sp = as_signed_perm(twisted)
    if sp is not None and sp.level > 1 and not m.then(m) == identity(2):
        sp = None
    if sp is not None:
        out: Dict[str, List[GpAtom]] = {}
        for sign_name, i in (("+", 1), ("-", 2)):
            atoms: List[GpAtom] = []
            result = branch(CycleRep(2, (i,)), sp)
            for cls in result.cycle_classes():
                atoms.append(GpAtom(cls.representative, cls.phase))
            out[sign_name] = atoms
        return out
    split = split_direct_sum(m)
    if split is not None:
        _, (f1, f2) = split
        r1 = gp_branch(f1)
        r2 = gp_branch(f2)
        if r1 is None or r2 is None:
            return None
        return {s: r1[s] + r2[s] for s in ("+", "-")}
    return None


# -- parsing of representation names --------------------------------------


def parse_rep(text: str, n: int = 2):
    """Resolve "P(12)", "P[12]", "P(12;1/2)", "2(12)^inf", "GP(+)",
    "fock", "iw*" to a representation description."""
    from .words import parse_ev_word, parse_word
    text = text.strip()
    lowered = text.lower()
    renames = {"fock": "P[1]", "fock*": "P[2]", "iw": "P[12]", "iw*": "P[21]"}
    if lowered in renames:
        text = renames[lowered]
    if text in ("GP(+)", "GP(-)", "GP[+]", "GP[-]"):
        return ("gp", text[3], text[2] == "[")
    if text.startswith("P(") and text.endswith(")"):
        body = text[2:-1]
        phase = Fraction(0)
        if ";" in body:
            body, qtext = body.split(";")
            phase = Fraction(qtext)
        if "^inf" in body:
            return ("chain", parse_ev_word(body, n))
        return ("cycle", parse_word(body, n), phase)
    if text.startswith("P[") and text.endswith("]"):
        return ("uhf", parse_word(text[2:-1], n))
    if text.endswith("^inf"):
        return ("chain", parse_ev_word(text, n))
    raise ValueError(f"unrecognized representation {text!r}")
