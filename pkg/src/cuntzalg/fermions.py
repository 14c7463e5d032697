"""The fermion (CAR) algebra embedded in O_2.

Annihilation operators are produced recursively: a_1 = s_1 s_2^* and
a_{n+1} = zeta(a_n) with zeta(x) = s_1 x s_1^* - s_2 x s_2^*.  Every a_n
lies in the gauge-invariant subalgebra, and the canonical
anticommutation relations

    a_m a_n + a_n a_m = 0,      a_m a_n^* + a_n^* a_m = delta_{mn} 1

hold exactly.  CarExpr is a thin free *-algebra layer over the fermion
generators; all equality questions are delegated to the O_2 image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .scalars import MINUS_ONE, ONE, Scalar, ZERO
from .words import Word, all_words
from .algebra import CuntzPoly
from .morphisms import Morphism, zeta
from .reps import CycleRep, UhfChainFamily, UhfCycle, act_poly, uhf_branch

# a formal word in the fermion generators: ((n, dagger), ...)
CarWord = Tuple[Tuple[int, bool], ...]


class CarExpr:
    """Formal linear combination of words in a_n and a_n^*.

    No normal ordering is attempted; two expressions are equal when
    their images in O_2 under the defining embedding coincide.
    """

    def __init__(self, terms: Optional[Dict[CarWord, Scalar]] = None):
        self.terms: Dict[CarWord, Scalar] = {}
        if terms:
            for word, coeff in terms.items():
                if not coeff.is_zero():
                    self.terms[word] = coeff

    @staticmethod
    def zero() -> "CarExpr":
        return CarExpr()

    @staticmethod
    def one() -> "CarExpr":
        return CarExpr({(): ONE})

    @staticmethod
    def generator(n: int, dagger: bool = False) -> "CarExpr":
        if n < 1:
            raise ValueError("fermion modes are numbered from 1")
        return CarExpr({((n, dagger),): ONE})

    @staticmethod
    def from_scalar(c: Scalar) -> "CarExpr":
        return CarExpr({(): c})

    def scale(self, c: Scalar) -> "CarExpr":
        return CarExpr({w: c * v for w, v in self.terms.items()})

    def __add__(self, other: "CarExpr") -> "CarExpr":
        out = dict(self.terms)
        for w, v in other.terms.items():
            s = out.get(w, ZERO) + v
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return CarExpr(out)

    def __sub__(self, other: "CarExpr") -> "CarExpr":
        return self + other.scale(MINUS_ONE)

    def __neg__(self) -> "CarExpr":
        return self.scale(MINUS_ONE)

    def __mul__(self, other: "CarExpr") -> "CarExpr":
        out: Dict[CarWord, Scalar] = {}
        for w1, v1 in self.terms.items():
            for w2, v2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, ZERO) + v1 * v2
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
        return CarExpr(out)

    def adjoint(self) -> "CarExpr":
        out: Dict[CarWord, Scalar] = {}
        for w, v in self.terms.items():
            flipped = tuple((n, not d) for (n, d) in reversed(w))
            out[flipped] = v.conjugate()
        return CarExpr(out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda t: (len(t), t)):
            body = "".join(f"a{n}'" if d else f"a{n}" for (n, d) in w) or "1"
            c = self.terms[w]
            bits.append(body if c == ONE else f"({c})*{body}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"CarExpr({str(self)})"


_GEN_CACHE: Dict[int, CuntzPoly] = {}


def car_generator(n: int) -> CuntzPoly:
    """The n-th annihilator as an element of O_2 (recursive embedding)."""
    if n < 1:
        raise ValueError("fermion modes are numbered from 1")
    if n not in _GEN_CACHE:
        if n == 1:
            _GEN_CACHE[n] = CuntzPoly.matrix_unit(2, (1,), (2,))
        else:
            _GEN_CACHE[n] = zeta(car_generator(n - 1))
    return _GEN_CACHE[n]


def car_generator_closed(n: int) -> CuntzPoly:
    """Closed form a_n = sum_J (-1)^{#2(J)} s_{J,1} s_{J,2}^* over binary
    words J of length n-1; used as a cross-check on the recursion."""
    out = CuntzPoly.zero(2)
    for j in all_words(2, n - 1):
        sign = ONE if sum(x - 1 for x in j) % 2 == 0 else MINUS_ONE
        out = out + CuntzPoly.matrix_unit(2, j + (1,), j + (2,)).scale(sign)
    return out


def psi_map(x: CarExpr) -> CuntzPoly:
    """The defining *-embedding of the fermion algebra into O_2."""
    out = CuntzPoly.zero(2)
    for word, coeff in x.terms.items():
        prod = CuntzPoly.one(2)
        for (n, dagger) in word:
            g = car_generator(n)
            prod = prod * (g.adjoint() if dagger else g)
        out = out + prod.scale(coeff)
    return out


def car_equal(x: CarExpr, y: CarExpr) -> bool:
    """Equality after embedding into O_2."""
    return psi_map(x) == psi_map(y)


def anticommutator(x: CarExpr, y: CarExpr) -> CarExpr:
    return x * y + y * x


def verify_car(modes: int) -> bool:
    """Check the canonical anticommutation relations for a_1 .. a_modes,
    and the closed form of each generator against the recursion."""
    for n in range(1, modes + 1):
        if not car_generator(n) == car_generator_closed(n):
            return False
    for m in range(1, modes + 1):
        am = CarExpr.generator(m)
        for n in range(m, modes + 1):
            an = CarExpr.generator(n)
            if not psi_map(anticommutator(am, an)).is_zero():
                return False
            want = CuntzPoly.one(2) if m == n else CuntzPoly.zero(2)
            if not psi_map(anticommutator(am, an.adjoint())) == want:
                return False
    return True


def dual_automorphism(x: CarExpr) -> CarExpr:
    """The linear *-preserving map a_n -> (-1)^{n-1} a_n^*; implements the
    particle-hole flip of the fermion algebra."""
    out = CarExpr.zero()
    for word, coeff in x.terms.items():
        term = CarExpr.from_scalar(coeff)
        for (n, dagger) in word:
            g = CarExpr.generator(n, not dagger)
            if n % 2 == 0:
                g = -g
            term = term * g
        out = out + term
    return out


def apply_endo(m: Morphism, x: CarExpr) -> CuntzPoly:
    """Image in O_2 of a fermion expression under an endomorphism of O_2."""
    return m(psi_map(x))


# -- the mixture family ----------------------------------------------------


def _check_half_integer(k: Fraction) -> Fraction:
    k = Fraction(k)
    if k.denominator != 2:
        raise ValueError(f"index must be a half-integer, got {k}")
    return k


def mixture(k: Fraction) -> CarExpr:
    """The half-integer-indexed annihilators b_k mixing particles and
    holes.  For k = 1/2, 3/2, ... :

        b_k    = (-1)^{k-1/2} (a_1 a_1^* a_{2k+2}^* + a_1^* a_1 a_{2k+2})
        b_{-k} = (-1)^{k-1/2} (a_1 a_1^* a_{2k+1}  - a_1^* a_1 a_{2k+1}^*)

    and the family again satisfies the canonical anticommutation
    relations.
    """
    k = _check_half_integer(k)
    if k == 0:
        raise ValueError("index 0 is not half-integral")
    a1 = CarExpr.generator(1)
    p = a1 * a1.adjoint()        # a_1 a_1^*
    q = a1.adjoint() * a1        # a_1^* a_1
    kk = abs(k)
    sign = ONE if int(kk - Fraction(1, 2)) % 2 == 0 else MINUS_ONE
    if k > 0:
        hi = CarExpr.generator(int(2 * kk + 2))
        return (p * hi.adjoint() + q * hi).scale(sign)
    hi = CarExpr.generator(int(2 * kk + 1))
    return (p * hi - q * hi.adjoint()).scale(sign)


def verify_mixture_car(indices: Iterable[Fraction]) -> bool:
    """Anticommutation relations for the mixture family on the given
    half-integer index set."""
    idx = [_check_half_integer(k) for k in indices]
    bs = {k: mixture(k) for k in idx}
    for i, k in enumerate(idx):
        for l in idx[i:]:
            if not psi_map(anticommutator(bs[k], bs[l])).is_zero():
                return False
            want = CuntzPoly.one(2) if k == l else CuntzPoly.zero(2)
            if not psi_map(anticommutator(bs[k], bs[l].adjoint())) == want:
                return False
    return True


# -- vacua in the four standard fermion representations --------------------

FERMION_REPS = {"fock": (1,), "fock*": (2,), "iw": (1, 2), "iw*": (2, 1)}

RENAME = {"P[1]": "Fock", "P[2]": "Fock*", "P[12]": "IW", "P[21]": "IW*"}


def _rep_and_vacuum(name: str):
    """The cyclic O_2 representation carrying the named fermion
    representation, together with the label of its vacuum vector.

    Fock and the infinite wedge (IW) use the base point of the cycle on
    1 resp. 12; their duals live inside the same spaces: Fock* is
    realised on the cycle on 2, while IW* sits inside the 12-cycle with
    the rotated base point as vacuum.
    """
    key = name.lower().rstrip()
    if key == "fock":
        return CycleRep(2, (1,)), ((), 1)
    if key == "fock*":
        return CycleRep(2, (2,)), ((), 1)
    if key == "iw":
        return CycleRep(2, (1, 2)), ((), 1)
    if key == "iw*":
        return CycleRep(2, (1, 2)), ((), 2)
    raise ValueError(f"unknown fermion representation {name!r}")


def _act(rep, x: CarExpr, vec):
    return act_poly(rep, psi_map(x), vec)


def vacuum_check(name: str, max_mode: int = 7) -> bool:
    """Verify the defining vacuum equations of the named fermion
    representation, exactly, in the labelled orthonormal basis.

    Fock: a_n annihilates the vacuum; the mixture operators act on the
    vacuum Omega and on the one-particle vector Omega* = a_1^* Omega by

        b_k Omega       = (-1)^{k-1/2} a_{2k+2}^* Omega
        b_{-k}^* Omega  = (-1)^{k-1/2} a_{2k+1}^* Omega
        b_k^* Omega = b_{-k} Omega = 0
        b_{-k} Omega*   = (-1)^{k+1/2} a_{2k+1}^* Omega*
        b_k^* Omega*    = (-1)^{k-1/2} a_{2k+2}^* Omega*
        b_k Omega* = b_{-k}^* Omega* = 0

    (Note the opposite sign in the first Omega* equation: moving
    a_{2k+1}^* past the a_1^* in Omega* = a_1^* Omega costs a sign.)

    Fock*: a_n^* annihilates the vacuum.  IW: a_{2n-1} and a_{2n}^*
    annihilate it; IW*: a_{2n-1}^* and a_{2n} do.
    """
    rep, label = _rep_and_vacuum(name)
    omega = {label: ONE}
    key = name.lower().rstrip()
    if key == "fock":
        for n in range(1, max_mode + 1):
            if _act(rep, CarExpr.generator(n), omega):
                return False
        half = Fraction(1, 2)
        k = half
        while 2 * k + 2 <= max_mode:
            sgn = ONE if int(k - half) % 2 == 0 else MINUS_ONE
            b_k, b_mk = mixture(k), mixture(-k)
            ahi = CarExpr.generator(int(2 * k + 2)).adjoint().scale(sgn)
            alo = CarExpr.generator(int(2 * k + 1)).adjoint().scale(sgn)
            star = _act(rep, CarExpr.generator(1).adjoint(), omega)
            checks = [
                _act(rep, b_k, omega) == _act(rep, ahi, omega),
                _act(rep, b_mk.adjoint(), omega) == _act(rep, alo, omega),
                not _act(rep, b_k.adjoint(), omega),
                not _act(rep, b_mk, omega),
                _act(rep, b_mk, star) == _act(rep, -alo, star),
                _act(rep, b_k.adjoint(), star) == _act(rep, ahi, star),
                not _act(rep, b_k, star),
                not _act(rep, b_mk.adjoint(), star),
            ]
            if not all(checks):
                return False
            k += 1
        return True
    if key == "fock*":
        return not any(_act(rep, CarExpr.generator(n).adjoint(), omega)
                       for n in range(1, max_mode + 1))
    if key == "iw":
        kill = [CarExpr.generator(n) if n % 2 else
                CarExpr.generator(n).adjoint()
                for n in range(1, max_mode + 1)]
    else:  # iw*
        kill = [CarExpr.generator(n).adjoint() if n % 2 else
                CarExpr.generator(n)
                for n in range(1, max_mode + 1)]
    return not any(_act(rep, x, omega) for x in kill)


def fermion_branch(name: str, endo) -> List[str]:
    """Branching of a named fermion representation under an
    endomorphism, with components renamed to fermion conventions
    (Fock, Fock*, IW, IW*); other cycles keep their P[...] names."""
    word = FERMION_REPS[name.lower().rstrip()]
    comps = uhf_branch(2, word, endo)[1]
    out = []
    for c in comps:
        label = str(c)
        out.append(RENAME.get(label, label))
    return sorted(out)
