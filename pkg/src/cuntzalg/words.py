"""Multi-index combinatorics over the alphabet {1..N}.

Finite words are plain tuples of ints.  Eventually periodic infinite
words are :class:`EvWord` values (prefix + repeating period) kept in a
canonical form: the period is primitive and the prefix is as short as
possible.  Rotation classes of finite words with a phase label are
:class:`CycleClass` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Tuple

Word = Tuple[int, ...]


def check_word(word: Sequence[int], n: int) -> Word:
    word = tuple(word)
    for letter in word:
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} outside alphabet 1..{n}")
    return word


def smallest_period(word: Word) -> int:
    """Length of the smallest period of ``word`` that divides len(word).

    Computed with the KMP failure function; equals len(word) iff the
    word is primitive.
    """
    k = len(word)
    fail = [0] * k
    j = 0
    for i in range(1, k):
        while j and word[i] != word[j]:
            j = fail[j - 1]
        if word[i] == word[j]:
            j += 1
        fail[i] = j
    period = k - fail[-1] if k else 0
    if k and k % period == 0:
        return period
    return k


def is_primitive(word: Word) -> bool:
    return len(word) > 0 and smallest_period(word) == len(word)


def primitive_split(word: Word) -> Tuple[Word, int]:
    """Write ``word`` as root^m with primitive root; m = 1 iff nonperiodic."""
    if not word:
        raise ValueError("empty word has no primitive split")
    p = smallest_period(word)
    return word[:p], len(word) // p


def rotations(word: Word) -> list:
    """All cyclic rotations, the i-th starting at position i (0-based)."""
    if not word:
        raise ValueError("empty word has no rotations")
    return [word[i:] + word[:i] for i in range(len(word))]


def minimal_rotation(word: Word) -> Word:
    """Lexicographically least rotation via Booth's algorithm."""
    if not word:
        raise ValueError("empty word has no rotations")
    s = word + word
    k = len(word)
    fail = [-1] * (2 * k)
    least = 0
    for j in range(1, 2 * k):
        i = fail[j - least - 1]
        while i != -1 and s[j] != s[least + i + 1]:
            if s[j] < s[least + i + 1]:
                least = j - i - 1
            i = fail[i]
        if s[j] != s[least + i + 1]:
            if s[j] < s[least]:
                least = j
            fail[j - least] = -1
        else:
            fail[j - least] = i + 1
    return s[least:least + k]


def word_precedes(w1: Word, w2: Word, n: int) -> bool:
    """The base-N weight order: w1 precedes w2 if the weighted difference
    sum((w2[i]-w1[i]) * N^(k-1-i)) is >= 0.  Exposed for completeness."""
    if len(w1) != len(w2):
        raise ValueError("comparator requires equal lengths")
    k = len(w1)
    total = sum((b - a) * n ** (k - 1 - i) for i, (a, b) in enumerate(zip(w1, w2)))
    return total >= 0


@dataclass(frozen=True)
class CycleClass:
    """Rotation class of a primitive finite word plus a phase label.

    The phase is a reduced fraction q in [0,1) naming the root of unity
    e^(2*pi*i*q); it is a representation label only and never enters any
    algebra coefficient.
    """

    representative: Word
    phase: Fraction

    def __str__(self) -> str:
        body = render_word(self.representative)
        if self.phase:
            return f"P({body};{self.phase})"
        return f"P({body})"


def canonical_cycle(word: Word, phase: Fraction = Fraction(0)) -> CycleClass:
    """Canonical rotation representative of a primitive word.

    Periodic input is rejected: split powers first (see
    ``reps.decompose_power`` for the phased decomposition of powers).
    """
    if not word:
        raise ValueError("empty word")
    if not is_primitive(word):
        raise ValueError(f"word {word} is periodic; split powers first")
    q = Fraction(phase) % 1
    return CycleClass(minimal_rotation(word), q)


@dataclass(frozen=True)
class EvWord:
    """Eventually periodic infinite word prefix + period^infinity.

    Canonical form: the period is primitive, and the prefix cannot be
    shortened by absorbing its last letter into a rotation of the period.
    Use :func:`make_ev_word` instead of constructing directly.
    """

    n: int
    prefix: Word
    period: Word

    def letter(self, pos: int) -> int:
        """Letter at 1-based position ``pos``."""
        if pos < 1:
            raise IndexError("positions are 1-based")
        if pos <= len(self.prefix):
            return self.prefix[pos - 1]
        return self.period[(pos - len(self.prefix) - 1) % len(self.period)]

    def letters(self, count: int) -> Word:
        return tuple(self.letter(i) for i in range(1, count + 1))

    def __str__(self) -> str:
        pre = render_word(self.prefix) if self.prefix else ""
        return f"{pre}({render_word(self.period)})^inf"


def make_ev_word(n: int, prefix: Sequence[int], period: Sequence[int]) -> EvWord:
    prefix = check_word(prefix, n)
    period = check_word(period, n)
    if not period:
        raise ValueError("period must be nonempty")
    root, _ = primitive_split(period)
    period = root
    prefix = list(prefix)
    # absorb trailing prefix letters that merely rotate the period
    while prefix and prefix[-1] == period[-1]:
        period = (prefix[-1],) + period[:-1]
        prefix.pop()
    return EvWord(n, tuple(prefix), period)


def shift(k: EvWord, eta: int) -> EvWord:
    """Index shift with 1-padding: position p of the result reads position
    p + eta of the input, and positions shifted below 1 read the letter 1."""
    per = len(k.period)
    new_prefix = []
    # beyond this many letters both input and output are inside the period
    span = max(len(k.prefix) - eta, 0) + (per if eta > 0 else 0)
    for p in range(1, span + 1):
        new_prefix.append(1 if p + eta < 1 else k.letter(p + eta))
    start = span + 1
    new_period = tuple(k.letter(start + eta + i) for i in range(per))
    return make_ev_word(k.n, new_prefix, new_period)


def tail_equal(k1: EvWord, k2: EvWord) -> bool:
    """Positional eventual agreement: letters coincide from some point on.

    This is agreement at aligned absolute positions, not rotation of the
    periodic tails; decided on one lcm window beyond both prefixes.
    """
    start = max(len(k1.prefix), len(k2.prefix)) + 1
    window = math.lcm(len(k1.period), len(k2.period))
    return all(k1.letter(p) == k2.letter(p) for p in range(start, start + window))


def tail_class(k: EvWord) -> Word:
    """Hashable invariant that is equal exactly for tail_equal words.

    The primitive period rotated so that index i reads the letter at
    absolute positions congruent to i+1 modulo the period length.
    """
    per = len(k.period)
    # letter(p) = period[(p - len(prefix) - 1) % per] for p > len(prefix)
    offset = (-len(k.prefix)) % per
    return tuple(k.period[(offset + i) % per] for i in range(per))


def constant_ev_word(n: int, letter: int) -> EvWord:
    return make_ev_word(n, (), (letter,))


def word_power(word: Word, m: int) -> Word:
    return word * m


# -- text forms ---------------------------------------------------------


def render_word(word: Word) -> str:
    """Digit string for alphabets up to 9, comma form beyond."""
    if not word:
        return "0"
    if all(l <= 9 for l in word):
        return "".join(str(l) for l in word)
    return ",".join(str(l) for l in word)


def parse_word(text: str, n: int) -> Word:
    """Parse "12", "1122", or the comma form "10,2,3"."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    if "," in text:
        letters = [int(p) for p in text.split(",")]
    else:
        letters = [int(c) for c in text]
    return check_word(letters, n)


def parse_ev_word(text: str, n: int) -> EvWord:
    """Parse "prefix(period)^inf", e.g. "2(12)^inf" or "(1)^inf"."""
    text = text.strip()
    if not text.endswith("^inf"):
        raise ValueError(f"eventually periodic word must end with ^inf: {text!r}")
    body = text[:-4]
    if not (body.endswith(")") and "(" in body):
        raise ValueError(f"expected prefix(period)^inf: {text!r}")
    open_at = body.index("(")
    prefix = parse_word(body[:open_at], n) if body[:open_at] else ()
    period = parse_word(body[open_at + 1:-1], n)
    return make_ev_word(n, prefix, period)


def all_words(n: int, length: int) -> Iterator[Word]:
    if length == 0:
        yield ()
        return
    for rest in all_words(n, length - 1):
        for letter in range(1, n + 1):
            yield rest + (letter,)
