"""Periodic patterns with holes and their self-filled limit sequences.

A pattern is a finite block of tokens plus a distinguished hole token,
written ``.``.  Repeating the block forever and replacing the stream of
holes, in order, by the sequence under construction itself pins down a
unique hole-free limit, provided the block does not begin with a hole.

``toeplitz_expand`` computes limit prefixes positionally: the j-th hole
of the periodic stream carries the value of position j of the limit,
and j is always strictly smaller than the hole's own position, so one
ascending pass suffices.  ``fill_pass`` performs a single filling step
on a finite prefix, holes included, for inspecting the intermediate
stages of the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .words import Alphabet, DomainError, TokenSeq, Word, _tokens

HOLE = "."


class NonConvergentError(ValueError):
    """The pattern cannot pin down a hole-free limit."""


@dataclass(frozen=True)
class ToeplitzSpec:
    """A periodic pattern whose holes are filled by the sequence itself."""

    pattern: tuple[str, ...]
    alphabet: Alphabet
    hole: str = HOLE

    def __post_init__(self):
        pattern = _tokens(self.pattern)
        object.__setattr__(self, "pattern", pattern)
        if not pattern:
            raise NonConvergentError("pattern must not be empty")
        if pattern[0] == self.hole:
            raise NonConvergentError("pattern must not begin with a hole")
        if self.hole in self.alphabet:
            raise ValueError(f"hole token {self.hole!r} collides with an alphabet symbol")
        for tok in pattern:
            if tok != self.hole and tok not in self.alphabet:
                raise DomainError(f"pattern symbol {tok!r} is not in the alphabet")

    @classmethod
    def from_tokens(cls, tokens: TokenSeq, alphabet: Optional[Alphabet] = None,
                    hole: str = HOLE) -> "ToeplitzSpec":
        toks = _tokens(tokens)
        if alphabet is None:
            seen: list[str] = []
            for t in toks:
                if t != hole and t not in seen:
                    seen.append(t)
            alphabet = Alphabet(tuple(seen))
        return cls(toks, alphabet, hole)

    @property
    def period(self) -> int:
        return len(self.pattern)

    @property
    def holes_per_period(self) -> int:
        return sum(t == self.hole for t in self.pattern)

    def prefix(self, length: int) -> Word:
        return toeplitz_expand(self, length)


def toeplitz_expand(spec: ToeplitzSpec, length: int) -> Word:
    """Hole-free prefix of the limit obtained by self-filling the pattern."""
    if length < 0:
        raise ValueError("length must be >= 0")
    alphabet = spec.alphabet
    period = len(spec.pattern)
    cells = [-1 if t == spec.hole else alphabet.index(t) for t in spec.pattern]
    holes_before = [0] * (period + 1)
    for r, v in enumerate(cells):
        holes_before[r + 1] = holes_before[r] + (v < 0)
    per_period = holes_before[period]
    out: list[int] = []
    for i in range(length):
        r = i % period
        v = cells[r]
        if v < 0:
            # rank of this hole in the stream; < i since position 0 is a symbol
            v = out[(i // period) * per_period + holes_before[r]]
        out.append(v)
    return Word(alphabet, tuple(out))


def fill_pass(tokens: TokenSeq, hole: str = HOLE) -> tuple[str, ...]:
    """One filling step: replace the holes, in order, by the sequence itself.

    Works on a finite prefix; the replacement values are drawn from the
    unmodified input, so holes may receive holes again.
    """
    seq = _tokens(tokens)
    out = list(seq)
    j = 0
    for i, tok in enumerate(seq):
        if tok == hole:
            if j >= len(seq):
                raise NonConvergentError("prefix too short to fill its own holes")
            out[i] = seq[j]
            j += 1
    return tuple(out)
