"""Free-group words: parsing, free reduction and the trace-equivalence normal form.

A word is stored as a tuple of ``(gen, exp)`` letters with 1-based generator
indices, nonzero exponents and no two adjacent letters on the same generator.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Freely reduce a sequence of letters (merge equal neighbours, drop zeros)."""
    out: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            e = out[-1][1] + exp
            out.pop()
            if e:
                out.append((gen, e))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.letters:
            if gen < 1:
                raise ValueError(f"generator index must be positive, got {gen}")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if gen == prev:
                raise ValueError("word is not freely reduced")
            prev = gen

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(reduce_letters((int(g), int(e)) for g, e in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def inverse(self) -> "Word":
        return invert(self)

    @property
    def letter_count(self) -> int:
        """Length counted with multiplicity, i.e. sum of |exp|."""
        return sum(abs(e) for _, e in self.letters)

    @property
    def max_gen(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def __str__(self) -> str:
        return format_word(self)


def invert(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.letters)))


def concat(u: Word, v: Word) -> Word:
    return Word(reduce_letters(u.letters + v.letters))


def cyclic_reduce(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Cancel first against last until the word is cyclically reduced.

    Input must already be freely reduced.
    """
    lt = list(letters)
    while len(lt) >= 2 and lt[0][0] == lt[-1][0]:
        gen = lt[0][0]
        e = lt[0][1] + lt[-1][1]
        # the interior of a freely reduced word never starts or ends on ``gen``
        lt = lt[1:-1]
        if e:
            lt.insert(0, (gen, e))
            break
    return tuple(lt)


def letter_key(letter: Letter) -> tuple[int, int, int]:
    # positive exponents sort before negative ones on the same generator
    gen, exp = letter
    return (gen, 0 if exp > 0 else 1, abs(exp))


def _min_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    n = len(letters)
    best = None
    best_key = None
    for i in range(n):
        rot = letters[i:] + letters[:i]
        key = [letter_key(x) for x in rot]
        if best_key is None or key < best_key:
            best, best_key = rot, key
    return best if best is not None else ()


def cyclic_normal_letters(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    """Normal form on raw (freely reduced) letter tuples; see :func:`cyclic_normal_form`."""
    w = cyclic_reduce(letters)
    if not w:
        return ()
    inv = tuple((g, -e) for g, e in reversed(w))
    a = _min_rotation(w)
    b = _min_rotation(inv)
    return min(a, b, key=lambda r: [letter_key(x) for x in r])


def cyclic_normal_form(w: Word) -> Word:
    """Least rotation of the cyclic reduction of ``w`` or of ``w^-1``.

    Words that are conjugate, or conjugate to each other's inverse, share
    a normal form. Letters compare by ``(gen, sign, |exp|)`` with positive
    exponents first.
    """
    return Word(cyclic_normal_letters(w.letters))


# ---------------------------------------------------------------- parsing

class _Parser:
    def __init__(self, text: str, k: int | None):
        self.text = text
        self.pos = 0
        self.k = k

    def error(self, msg: str, pos: int | None = None):
        raise WordSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def word(self, stop: str) -> list[Letter]:
        out: list[Letter] = []
        while True:
            c = self.peek()
            if c == "" or c in stop:
                break
            out.extend(self.term())
        return out

    def term(self) -> list[Letter]:
        start = self.pos
        atom = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.pos < len(self.text) and self.text[self.pos] == "-":
                sign = -1
                self.pos += 1
            ds = self.digits()
            if not ds:
                self.error("expected exponent digits")
            n = sign * int(ds)
            if n == 0:
                self.error("zero exponent", start)
            return power_letters(atom, n)
        return atom

    def atom(self) -> list[Letter]:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            inner = self.word(")")
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if c == "[":
            self.pos += 1
            u = self.word(",]")
            if self.peek() != ",":
                self.error("expected ','")
            self.pos += 1
            v = self.word("]")
            if self.peek() != "]":
                self.error("expected ']'")
            self.pos += 1
            return u + v + _inv_letters(u) + _inv_letters(v)
        if c in string.ascii_lowercase and c:
            self.pos += 1
            if c == "g" and self.pos < len(self.text) and self.text[self.pos].isdigit():
                gen = int(self.digits())
                if gen == 0:
                    self.error("generator index must be positive", start)
            else:
                gen = ord(c) - ord("a") + 1
            if self.k is not None and gen > self.k:
                self.error(f"generator {gen} out of range (k={self.k})", start)
            return [(gen, 1)]
        if c == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")


def _inv_letters(letters: list[Letter]) -> list[Letter]:
    return [(g, -e) for g, e in reversed(letters)]


def power_letters(letters: list[Letter], n: int) -> list[Letter]:
    base = letters if n > 0 else _inv_letters(letters)
    return base * abs(n)


def parse_word(text: str, k: int | None = None) -> Word:
    """Parse a word such as ``"a b^2 c^-1"``, ``"[a,b] c"`` or ``"g12^3"``.

    Raises :class:`WordSyntaxError` on malformed input, a generator index
    above ``k`` or a zero exponent.
    """
    parser = _Parser(text, k)
    letters = parser.word("")
    if parser.peek() != "":
        parser.error("unexpected trailing input")
    return Word.from_letters(letters)


def gen_name(gen: int, letters: bool = True) -> str:
    if letters and gen <= 26:
        return chr(ord("a") + gen - 1)
    return f"g{gen}"


def format_word(w: Word, k: int | None = None) -> str:
    """Render a word; letters are used unless some index (or ``k``) exceeds 26."""
    if not w.letters:
        return ""
    use_letters = max(k or 0, w.max_gen) <= 26
    parts = []
    for g, e in w.letters:
        name = gen_name(g, use_letters)
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)
