"""Classification engine for second-order permutative endomorphisms.

The central device is the defining unitary u of an endomorphism psi
(psi(s_i) = u s_i) and its cascade w_n = u lambda(u) ... lambda^{n-1}(u),
which conjugates every grade-zero monomial of depth n:

    psi(s_J s_K^*) = w_n (s_J s_K^*) w_n^*      (|J| = |K| = n).

This reduces both UHF-restriction equality and relative-commutant
computations to small exact linear-algebra problems over Q(sqrt 2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .scalars import MINUS_ONE, ONE, Scalar, ZERO
from .words import Word, all_words, render_word
from .algebra import CuntzPoly, gauge_lift
from .morphisms import Morphism, PermEndo, ad_unitary
from .reps import CycleRep, branch, gp_branch, uhf_branch


def defining_unitary(endo: PermEndo) -> CuntzPoly:
    """u with endo(s_i) = u s_i: the signed permutation of level-l units."""
    terms: Dict[Tuple[Word, Word], Scalar] = {}
    for src, dst in endo.sigma.items():
        terms[(dst, src)] = ONE if endo.signs[src] == 1 else MINUS_ONE
    return CuntzPoly(endo.n, terms)


_W_CACHE: Dict[Tuple, CuntzPoly] = {}


def _endo_key(endo: PermEndo) -> Tuple:
    return (endo.n, tuple(sorted(endo.sigma.items())),
            tuple(sorted(endo.signs.items())))


def cascade_unitary(endo: PermEndo, n: int) -> CuntzPoly:
    """w_n = u lambda(u) ... lambda^{n-1}(u); conjugates depth-n monomials.

    lambda(x) = sum_i s_i x s_i^* satisfies lambda(x) s_j = s_j x, which
    gives psi(s_J s_K^*) = w_n s_J s_K^* w_n^* for |J| = |K| = n by
    induction on n.
    """
    if n < 1:
        raise ValueError("cascade depth starts at 1")
    key = _endo_key(endo) + (n,)
    cached = _W_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        w = defining_unitary(endo)
    else:
        w = cascade_unitary(endo, n - 1) * _lifted_unitary(endo, n - 1)
    _W_CACHE[key] = w
    return w


def _lifted_unitary(endo: PermEndo, j: int) -> CuntzPoly:
    key = _endo_key(endo) + ("lift", j)
    cached = _W_CACHE.get(key)
    if cached is not None:
        return cached
    if j == 0:
        out = defining_unitary(endo)
    else:
        out = gauge_lift(_lifted_unitary(endo, j - 1))
    _W_CACHE[key] = out
    return out


def apply_to_unit(endo: PermEndo, j: Word, k: Word) -> CuntzPoly:
    """Image of the matrix unit E_JK = s_J s_K^* under endo."""
    if len(j) != len(k):
        raise ValueError("matrix unit needs |J| = |K|")
    w = cascade_unitary(endo, len(j))
    e = CuntzPoly.matrix_unit(endo.n, j, k)
    return w * e * w.adjoint()


def unit_generators(n: int, depth: int) -> List[Tuple[Word, Word]]:
    """A generating set of the level-``depth`` matrix-unit algebra:
    E_{1..1,K} for all K, together with their adjoints."""
    ones = (1,) * depth
    out = []
    for k in all_words(n, depth):
        out.append((ones, k))
        out.append((k, ones))
    return out


@dataclass
class RestrictionVerdict:
    equal: bool
    level: int
    witness: Optional[Tuple[Word, Word]] = None

    def __str__(self) -> str:
        if self.equal:
            return f"equal-to-level-{self.level} (certified)"
        j, k = self.witness
        return (f"differ-at-level-{self.level} "
                f"(E_{{{render_word(j)},{render_word(k)}}})")


def uhf_restriction_equal(m1: PermEndo, m2: PermEndo,
                          level: int = 5) -> RestrictionVerdict:
    """Decide whether two endomorphisms agree on matrix units up to depth
    ``level``.

    At depth n both maps act by conjugation with their cascade unitaries,
    so they agree on all of M_{N^n} iff v = w_n(m2)^* w_n(m1) commutes
    with a generating set of the depth-n units.  One failing generator
    yields a concrete unit whose images differ.
    """
    if m1.n != m2.n:
        raise ValueError("rank mismatch")
    for n in range(1, level + 1):
        v = cascade_unitary(m2, n).adjoint() * cascade_unitary(m1, n)
        for (j, k) in unit_generators(m1.n, n):
            e = CuntzPoly.matrix_unit(m1.n, j, k)
            if not (v * e - e * v).is_zero():
                return RestrictionVerdict(False, n, (j, k))
    return RestrictionVerdict(True, level)


# -- exact linear algebra over Q(sqrt 2) ---------------------------------


def nullspace(rows: List[List[Scalar]], width: int) -> List[List[Scalar]]:
    """Basis of the right nullspace of the given matrix, by Gaussian
    elimination over the exact scalar field."""
    matrix = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(width):
        pivot = None
        for i in range(r, len(matrix)):
            if not matrix[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        inv = matrix[r][c].inverse()
        matrix[r] = [x * inv for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and not matrix[i][c].is_zero():
                f = matrix[i][c]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        vec = [ZERO] * width
        vec[f] = ONE
        for i, c in enumerate(pivots):
            vec[c] = -matrix[i][f]
        basis.append(vec)
    return basis


def poly_to_matrix(p: CuntzPoly, depth: int) -> Dict[Tuple[Word, Word], Scalar]:
    """Coordinates of a grade-zero polynomial in the depth-``depth``
    matrix units (every term is fanned out to that depth)."""
    out: Dict[Tuple[Word, Word], Scalar] = {}
    for (j, k), coeff in p.terms.items():
        if len(j) != len(k):
            raise ValueError("polynomial is not gauge invariant")
        if len(j) > depth:
            raise ValueError(f"term at depth {len(j)} exceeds {depth}")
        for w in all_words(p.n, depth - len(j)):
            key = (j + w, k + w)
            acc = out.get(key)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return out


def commutant_witness(endo: PermEndo, level: int = 1) -> Optional[CuntzPoly]:
    """Search the relative commutant endo(UHF)' cap UHF at a given depth.

    Solves [x, endo(g)] = 0 exactly for x in the span of the depth-level
    matrix units, with g running over a generating set of units up to
    that depth.  Returns a non-scalar witness when the solution space
    has dimension >= 2 (the identity is always a solution), else None.
    """
    n = endo.n
    basis_units = [(j, k) for j in all_words(n, level)
                   for k in all_words(n, level)]
    col = {unit: idx for idx, unit in enumerate(basis_units)}
    depth = level + endo.level  # images of depth-<=level units live here
    rows: List[List[Scalar]] = []
    for g_depth in range(1, level + 1):
        for (gj, gk) in unit_generators(n, g_depth):
            image = poly_to_matrix(apply_to_unit(endo, gj, gk).reduce(), depth)
            # commutator [x, image] in depth-`depth` coordinates, one row
            # per matrix entry of the commutator
            entry_rows: Dict[Tuple[Word, Word], List[Scalar]] = {}
            for (uj, uk), c in col.items():
                for w in all_words(n, depth - level):
                    row_j, row_k = uj + w, uk + w
                    # x E_{row_j,row_k}: (x*image) entries
                    for (aj, ak), a in image.items():
                        if ak == row_j:
                            key = (aj, row_k)
                            entry_rows.setdefault(key, [ZERO] * len(col))
                            entry_rows[key][c] = entry_rows[key][c] - a
                        if row_k == aj:
                            key = (row_j, ak)
                            entry_rows.setdefault(key, [ZERO] * len(col))
                            entry_rows[key][c] = entry_rows[key][c] + a
            rows.extend(r for r in entry_rows.values()
                        if any(not x.is_zero() for x in r))
    basis = nullspace(rows, len(col))
    if len(basis) < 2:
        return None
    identity = [ONE if j == k else ZERO for (j, k) in basis_units]
    for vec in basis:
        if not _proportional(vec, identity):
            witness = CuntzPoly(n, {unit: vec[c] for unit, c in col.items()
                                    if not vec[c].is_zero()})
            _check_witness(endo, witness, level)
            return witness
    raise AssertionError("nullspace of dimension >= 2 without a witness")


def _proportional(v1: Sequence[Scalar], v2: Sequence[Scalar]) -> bool:
    ratio = None
    for a, b in zip(v1, v2):
        if b.is_zero():
            if not a.is_zero():
                return False
            continue
        r = a * b.inverse()
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


def _check_witness(endo: PermEndo, x: CuntzPoly, level: int) -> None:
    for g_depth in range(1, level + 1):
        for (gj, gk) in unit_generators(endo.n, g_depth):
            image = apply_to_unit(endo, gj, gk)
            if not (x * image - image * x).is_zero():
                raise AssertionError("claimed witness fails to commute")
    if len(x.reduce().terms) == 1 and ((), ()) in x.reduce().terms:
        raise AssertionError("claimed witness is scalar")


# -- conjugacy and fingerprints ------------------------------------------


def flip_unitary() -> CuntzPoly:
    """u = s_1 s_2^* + s_2 s_1^*, the conjugator pairing the 24 sigmas."""
    return (CuntzPoly.matrix_unit(2, (1,), (2,))
            + CuntzPoly.matrix_unit(2, (2,), (1,)))


def verify_conjugate(m1: Morphism, m2: Morphism, u: CuntzPoly) -> bool:
    """True iff Ad u o m1 = m2 on the generators (u must be unitary)."""
    return m1.then(ad_unitary(u)) == m2


def verify_intertwined(g: Morphism, m1: Morphism, m2: Morphism) -> bool:
    """True iff g o m1 = m2 o g on the generators; for invertible g this
    is the conjugacy m2 = g m1 g^{-1} without forming the inverse."""
    return m1.then(g) == g.then(m2)


def o_fingerprint(endo: PermEndo) -> Tuple[str, str, str, str]:
    """Branching fingerprint over the tests P(1), P(2), P(12), GP(+)."""
    cells = []
    for word in ((1,), (2,), (1, 2)):
        res = branch(CycleRep(endo.n, word), endo)
        cells.append(_multiset(c.describe() for c in res.components))
    gp = gp_branch(endo)
    if gp is None:
        cells.append("not derivable")
    else:
        cells.append(_multiset(a.describe() for a in gp["+"]))
    return tuple(cells)


def uhf_fingerprint(endo: PermEndo) -> Tuple[str, str, str, str]:
    """Branching fingerprint over the tests P[1], P[2], P[12], GP[+]."""
    cells = []
    for word in ((1,), (2,), (1, 2)):
        comps = uhf_branch(endo.n, word, endo)[1]
        cells.append(_multiset(str(c) for c in comps))
    gp = gp_branch(endo)
    if gp is None:
        cells.append("not derivable")
    else:
        cells.append(_multiset(a.describe(uhf=True) for a in gp["+"]))
    return tuple(cells)


def _multiset(items) -> str:
    return " (+) ".join(sorted(items))


def fingerprint(endo: PermEndo, tests: Sequence[str]) -> Dict[str, str]:
    """Fingerprint over named test representations (mixing levels is
    allowed); see parse_rep for accepted names."""
    out: Dict[str, str] = {}
    o_cells = uhf_cells = None
    for name in tests:
        if name.startswith("P[") or name == "GP[+]":
            if uhf_cells is None:
                uhf_cells = dict(zip(("P[1]", "P[2]", "P[12]", "GP[+]"),
                                     uhf_fingerprint(endo)))
            out[name] = uhf_cells[name]
        else:
            if o_cells is None:
                o_cells = dict(zip(("P(1)", "P(2)", "P(12)", "GP(+)"),
                                   o_fingerprint(endo)))
            out[name] = o_cells[name]
    return out


# -- the classification of UE_{2,2} --------------------------------------

ALL_SIGMA = ["id", "12", "13", "14", "23", "24", "34",
             "123", "132", "124", "142", "134", "143", "234", "243",
             "1234", "1243", "1324", "1342", "1423", "1432",
             "(12)(34)", "(13)(24)", "(14)(23)"]

KLEIN = ["id", "(12)(34)", "(13)(24)", "(14)(23)"]

UHF_IDENTITIES = [("14", "1243"), ("124", "143"),
                  ("132", "234"), ("23", "1342")]

CLASS_REPRESENTATIVES = ["id", "(12)(34)", "12", "13", "24", "34",
                         "142", "123", "14", "124", "132", "23"]


@dataclass
class EndoRecord:
    """A classified endomorphism with machine-checked evidence."""

    name: str
    endo: PermEndo
    fingerprints: Dict[str, str] = field(default_factory=dict)
    verdict: str = "undetermined"
    evidence: List[str] = field(default_factory=list)


def theorem14_counts(level: int = 5) -> Dict[str, int]:
    """Recompute the cardinality/class counts for the restrictions of the
    24 second-order endomorphisms of O_2 to UHF_2.

    Returns the dictionary with keys restrictions (distinct maps on
    UHF_2, certified to the given depth), classes (unitary equivalence
    classes), klein (automorphism classes forming the four-group),
    irreducible and reducible (proper classes by type).
    """
    from .morphisms import standard_endo
    endos = {name: standard_endo(name) for name in ALL_SIGMA}

    # distinct UHF restrictions: merge by certified restriction equality
    names = list(ALL_SIGMA)
    reps: List[str] = []
    merged: Dict[str, str] = {}
    for name in names:
        home = None
        for r in reps:
            if uhf_restriction_equal(endos[name], endos[r], level).equal:
                home = r
                break
        if home is None:
            reps.append(name)
            merged[name] = name
        else:
            merged[name] = home
    restrictions = len(reps)

    # unitary equivalence classes among the restrictions: merge the
    # Table-1 conjugate pairs (the conjugator lies in UHF_2)
    u = flip_unitary()
    parent = {r: r for r in reps}

    def find(x: str) -> str:
        while parent[x] != x:
            x = parent[x]
        return x

    for a in reps:
        for b in reps:
            if a < b and verify_conjugate(endos[a], endos[b], u):
                parent[find(b)] = find(a)
    classes = {find(r) for r in reps}

    # every class representative must have a distinct fingerprint
    prints = {r: uhf_fingerprint(endos[r]) for r in classes}
    if len(set(prints.values())) != len(prints):
        raise AssertionError("fingerprints fail to separate the classes")

    # the four automorphisms: distinct restrictions, closed under
    # composition (a four-group)
    klein = len({merged[k] for k in KLEIN})
    for a in KLEIN:
        for b in KLEIN:
            prod = endos[b].then(endos[a])
            if not any(prod == endos[c] for c in KLEIN):
                raise AssertionError("automorphism set not closed")

    irr = red = 0
    for r in classes:
        if r in KLEIN:  # automorphism classes: neither proper type
            continue
        if commutant_witness(endos[r], 1) is not None:
            red += 1
        else:
            irr += 1
    return {
        "restrictions": restrictions,
        "classes": len(classes),
        "klein": klein,
        "irreducible": irr,
        "reducible": red,
    }


def irreducibility_evidence() -> Dict[str, List[str]]:
    """Machine-checked evidence that the four non-automorphism
    irreducible classes really are irreducible on UHF_2.

    psi_13 satisfies the direct criterion (P[12] and P[12] o psi_13 =
    P[1] both irreducible); the other three are carried to psi_13 by
    automorphisms that preserve the gauge-invariant subalgebra.
    """
    from .morphisms import compose, flip, rotation, standard_endo
    out: Dict[str, List[str]] = {}
    p13 = standard_endo("13")
    res = uhf_branch(2, (1, 2), p13)
    if [str(c) for c in res[1]] != ["P[1]"]:
        raise AssertionError("P[12] o psi_13 is not P[1]")
    out["13"] = ["P[12] o psi_13 = P[1]; both irreducible"]

    alpha = flip()
    if not alpha.then(p13) == standard_endo("24"):
        raise AssertionError("psi_24 != psi_13 o alpha")
    out["24"] = ["psi_24 = psi_13 o alpha; composition with an "
                 "automorphism preserves the commutant"]

    g12 = compose(rotation(), alpha)
    if not verify_intertwined(g12, p13, standard_endo("12")):
        raise AssertionError("psi_12 is not conjugate to psi_13")
    out["12"] = ["psi_12 = g psi_13 g^{-1} with g = phi_rot o alpha"]

    g34 = compose(alpha, rotation(), alpha)
    if not verify_intertwined(g34, p13, standard_endo("34")):
        raise AssertionError("psi_34 is not conjugate to psi_13")
    out["34"] = ["psi_34 = g psi_13 g^{-1} with g = alpha o phi_rot o alpha"]
    return out
