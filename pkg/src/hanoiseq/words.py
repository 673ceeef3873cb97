"""Alphabets, words, morphisms, codings and iterative fixed points.

Words are immutable sequences of symbol indices over a fixed alphabet.
Symbols are arbitrary text tokens; barred letters are written as the
matching uppercase token, so the bar of ``a`` is ``A`` and ``a C b a``
reads "a, c-bar, b, a".  A morphism sends every symbol of its domain
alphabet to a word over its codomain alphabet and extends to words by
concatenating the images.  A coding is the symbol-to-symbol case.

A morphism whose image of a chosen start symbol begins with that symbol
(and whose remainder never dies out under iteration) has a unique
infinite fixed point starting there.  MorphicSpec bundles the morphism,
the start symbol and an optional output coding; its ``prefix`` method
materializes finite prefixes of the (coded) fixed point by repeated
re-expansion, truncating eagerly so memory stays proportional to the
requested length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import chain
from typing import Iterable, Mapping, Optional, Union

TokenSeq = Union[str, Iterable[str]]


class DomainError(ValueError):
    """A symbol or word does not belong to the expected alphabet."""


class ProlongabilityError(ValueError):
    """The morphism has no iterative fixed point at the given start symbol."""


def _tokens(spec: TokenSeq) -> tuple[str, ...]:
    if isinstance(spec, str):
        return tuple(spec.split())
    return tuple(spec)


@dataclass(frozen=True)
class Alphabet:
    """Ordered collection of distinct symbol tokens."""

    symbols: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = _tokens(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValueError("alphabet needs at least one symbol")
        index: dict[str, int] = {}
        for pos, sym in enumerate(symbols):
            if not sym:
                raise ValueError("empty symbol token")
            if sym in index:
                raise ValueError(f"duplicate symbol {sym!r}")
            index[sym] = pos
        object.__setattr__(self, "_index", index)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise DomainError(
                f"symbol {symbol!r} is not in the alphabet {list(self.symbols)}"
            ) from None

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index


@dataclass(frozen=True)
class Word:
    """Finite sequence of symbol indices over an alphabet (may be empty)."""

    alphabet: Alphabet
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if indices and not (0 <= min(indices) and max(indices) < len(self.alphabet.symbols)):
            raise DomainError("word index out of range for its alphabet")

    @classmethod
    def from_tokens(cls, alphabet: Alphabet, tokens: TokenSeq) -> "Word":
        return cls(alphabet, tuple(alphabet.index(t) for t in _tokens(tokens)))

    def tokens(self) -> tuple[str, ...]:
        symbols = self.alphabet.symbols
        return tuple(symbols[i] for i in self.indices)

    def text(self) -> str:
        return " ".join(self.tokens())

    def support(self) -> tuple[str, ...]:
        """Symbols that actually occur, in alphabet order."""
        used = set(self.indices)
        return tuple(s for i, s in enumerate(self.alphabet.symbols) if i in used)

    def startswith(self, other: "Word") -> bool:
        return (self.alphabet == other.alphabet
                and self.indices[: len(other.indices)] == other.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self.alphabet, self.indices[key])
        return self.alphabet.symbols[self.indices[key]]

    def __iter__(self):
        symbols = self.alphabet.symbols
        return (symbols[i] for i in self.indices)

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise DomainError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.indices + other.indices)


@dataclass(frozen=True)
class Morphism:
    """Map from symbols to words, extended to words by concatenation."""

    domain: Alphabet
    codomain: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != len(self.domain.symbols):
            raise ValueError("exactly one image per domain symbol required")
        for img in images:
            if img.alphabet != self.codomain:
                raise DomainError("image word is not over the codomain alphabet")

    @classmethod
    def from_rules(cls, domain: Alphabet, rules: Mapping[str, TokenSeq],
                   codomain: Optional[Alphabet] = None) -> "Morphism":
        codomain = domain if codomain is None else codomain
        unknown = set(rules) - set(domain.symbols)
        if unknown:
            raise DomainError(f"rules mention symbols outside the domain: {sorted(unknown)}")
        images = []
        for sym in domain.symbols:
            if sym not in rules:
                raise ValueError(f"no image given for symbol {sym!r}")
            images.append(Word.from_tokens(codomain, rules[sym]))
        return cls(domain, codomain, tuple(images))

    def image(self, symbol: str) -> Word:
        return self.images[self.domain.index(symbol)]

    def apply(self, word: Word) -> Word:
        if word.alphabet != self.domain:
            raise DomainError("word is not over this morphism's domain alphabet")
        images = self.images
        glued = chain.from_iterable(images[i].indices for i in word.indices)
        return Word(self.codomain, tuple(glued))

    @property
    def uniform_width(self) -> Optional[int]:
        """Common image length k when the morphism is k-uniform, else None."""
        widths = {len(img.indices) for img in self.images}
        return widths.pop() if len(widths) == 1 else None

    @property
    def is_erasing(self) -> bool:
        return any(not img.indices for img in self.images)

    def power(self, n: int) -> "Morphism":
        """n-fold composition of an endomorphism with itself."""
        if self.domain != self.codomain:
            raise DomainError("powers need domain == codomain")
        if n < 1:
            raise ValueError("power must be >= 1")
        result = self
        for _ in range(n - 1):
            result = Morphism(self.domain, self.codomain,
                              tuple(result.apply(img) for img in self.images))
        return result


@dataclass(frozen=True)
class Coding:
    """Symbol-to-symbol map, i.e. the 1-uniform morphism case."""

    domain: Alphabet
    codomain: Alphabet
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != len(self.domain.symbols):
            raise ValueError("exactly one image symbol per domain symbol required")
        if table and not (0 <= min(table) and max(table) < len(self.codomain.symbols)):
            raise DomainError("coding image out of range for the codomain")

    @classmethod
    def from_rules(cls, domain: Alphabet, mapping: Mapping[str, str],
                   codomain: Optional[Alphabet] = None) -> "Coding":
        missing = [s for s in domain.symbols if s not in mapping]
        if missing:
            raise ValueError(f"no image given for symbols {missing}")
        if codomain is None:
            seen: list[str] = []
            for sym in domain.symbols:
                if mapping[sym] not in seen:
                    seen.append(mapping[sym])
            codomain = Alphabet(tuple(seen))
        table = tuple(codomain.index(mapping[s]) for s in domain.symbols)
        return cls(domain, codomain, table)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "Coding":
        return cls(alphabet, alphabet, tuple(range(len(alphabet.symbols))))

    def image_token(self, symbol: str) -> str:
        return self.codomain.symbols[self.table[self.domain.index(symbol)]]

    def apply(self, word: Word) -> Word:
        if word.alphabet != self.domain:
            raise DomainError("word is not over this coding's domain alphabet")
        table = self.table
        return Word(self.codomain, tuple(table[i] for i in word.indices))

    def as_morphism(self) -> Morphism:
        return Morphism(self.domain, self.codomain,
                        tuple(Word(self.codomain, (t,)) for t in self.table))


def _mortal_letters(m: Morphism) -> frozenset[int]:
    # letters whose iterated image eventually becomes the empty word
    images = [img.indices for img in m.images]
    mortal = {i for i, img in enumerate(images) if not img}
    changed = True
    while changed:
        changed = False
        for i, img in enumerate(images):
            if i not in mortal and img and all(j in mortal for j in img):
                mortal.add(i)
                changed = True
    return frozenset(mortal)


def is_prolongable(m: Morphism, start: str) -> bool:
    """True when m(start) begins with start and its tail keeps producing
    symbols under iteration (so the iterative fixed point exists)."""
    if m.domain != m.codomain:
        raise DomainError("prolongability needs domain == codomain")
    i0 = m.domain.index(start)
    img = m.images[i0].indices
    if len(img) < 2 or img[0] != i0:
        return False
    mortal = _mortal_letters(m)
    return any(i not in mortal for i in img[1:])


@dataclass(frozen=True)
class MorphicSpec:
    """A morphism, a start symbol and an optional output coding.

    Without a coding the spec denotes the pure fixed point of the
    morphism; with one it denotes the symbol-wise image of that fixed
    point.  Construction fails unless the morphism is prolongable at
    the start symbol.
    """

    morphism: Morphism
    start: str
    coding: Optional[Coding] = None

    def __post_init__(self):
        if self.morphism.domain != self.morphism.codomain:
            raise DomainError("fixed points need an endomorphism")
        if not is_prolongable(self.morphism, self.start):
            raise ProlongabilityError(
                f"image of {self.start!r} must begin with it and keep growing under iteration")
        if self.coding is not None and self.coding.domain != self.morphism.domain:
            raise DomainError("coding domain must match the morphism alphabet")

    @property
    def output_alphabet(self) -> Alphabet:
        return self.coding.codomain if self.coding else self.morphism.domain

    @property
    def radix(self) -> Optional[int]:
        return self.morphism.uniform_width

    def pure_prefix(self, length: int) -> Word:
        """Length-`length` prefix of the uncoded fixed point."""
        if length < 0:
            raise ValueError("length must be >= 0")
        alphabet = self.morphism.domain
        if length == 0:
            return Word(alphabet, ())
        images = [img.indices for img in self.morphism.images]
        current = [alphabet.index(self.start)]
        while len(current) < length:
            grown: list[int] = []
            for i in current:
                grown.extend(images[i])
                if len(grown) >= length:
                    break
            current = grown
        return Word(alphabet, tuple(current[:length]))

    def prefix(self, length: int) -> Word:
        word = self.pure_prefix(length)
        return self.coding.apply(word) if self.coding else word


def morphism_apply(m: Morphism, word: Word) -> Word:
    """Image of a word: the images of its letters concatenated in order."""
    return m.apply(word)


def apply_coding(coding: Coding, word: Word) -> Word:
    """Length-preserving symbol-by-symbol image."""
    return coding.apply(word)


def iterate_fixed_point(spec: MorphicSpec, length: int) -> Word:
    """Length-`length` prefix of the spec's (coded) fixed point."""
    return spec.prefix(length)


def spec_to_json(spec: MorphicSpec) -> dict:
    """Plain-dict form: alphabet, rules, start and optional coding."""
    data = {
        "alphabet": list(spec.morphism.domain.symbols),
        "rules": {s: list(spec.morphism.image(s).tokens())
                  for s in spec.morphism.domain.symbols},
        "start": spec.start,
    }
    if spec.coding is not None:
        data["coding"] = {s: spec.coding.image_token(s)
                          for s in spec.coding.domain.symbols}
    return data


def spec_from_json(data: Mapping) -> MorphicSpec:
    alphabet = Alphabet(tuple(data["alphabet"]))
    morphism = Morphism.from_rules(alphabet, data["rules"])
    coding = None
    if data.get("coding"):
        coding = Coding.from_rules(alphabet, data["coding"])
    return MorphicSpec(morphism, data["start"], coding)
