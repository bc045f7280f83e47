"""Words in the Artin braid group and their letter-level algebra.

A braid word is an explicit strand count together with a sequence of
nonzero signed integers.  The letter ``g`` stands for the positive
crossing of strands ``|g|`` and ``|g| + 1`` when ``g > 0`` and for the
inverse crossing when ``g < 0``.  The leftmost letter acts first.  The
strand count is always carried explicitly; it is never inferred from
the letters, so ``2: 1`` and ``3: 1`` are different words.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BraidWord",
    "WordFormatError",
    "parse_word",
    "format_word",
    "free_reduce",
    "inverse",
    "concat",
    "power",
    "rotate",
    "conjugate",
    "permutation",
    "cycle_count",
    "exponent_sum",
    "closure_components",
    "writhe_on_generator",
    "cyclic_reduce",
    "cyclic_rotations",
]


class WordFormatError(ValueError):
    """Raised on malformed word text; carries the offending position.

    ``line`` and ``column`` are 1-based and point at the first character
    of the token that failed to parse.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``index`` strands.

    ``letters`` holds signed generator numbers; every entry ``g``
    satisfies ``1 <= |g| <= index - 1``.  Words are immutable values:
    two words compare equal exactly when strand counts and letter
    sequences agree.  Equality as group elements is a separate, more
    expensive question answered by :func:`braidcalc.garside.words_equal`.
    """

    index: int
    letters: tuple[int, ...]

    def __init__(self, index: int, letters=()):
        if index < 1:
            raise ValueError(f"strand count must be at least 1, got {index}")
        letters = tuple(letters)
        for g in letters:
            if g == 0 or abs(g) > index - 1:
                raise ValueError(
                    f"letter {g} is out of range for {index} strands"
                )
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str) -> BraidWord:
    """Parse ``"n: g1 g2 ... gk"`` into a word.

    The strand count comes before the colon; letters are whitespace
    separated signed integers and the list may be empty.  Raises
    :class:`WordFormatError` pointing at the offending token.
    """

    head, sep, tail = text.partition(":")
    if not sep:
        raise WordFormatError("missing ':' after strand count", 1, 1)
    stripped = head.strip()
    if not stripped or not _is_int(stripped):
        raise WordFormatError(
            "strand count must be a positive integer", *_position(text, head, 0)
        )
    index = int(stripped)
    if index < 1:
        raise WordFormatError(
            "strand count must be a positive integer", *_position(text, head, 0)
        )
    letters = []
    offset = len(head) + 1
    for token, start in _tokens(tail, offset):
        if not _is_int(token):
            raise WordFormatError(
                f"bad letter {token!r}", *_position(text, token, start)
            )
        g = int(token)
        if g == 0 or abs(g) > index - 1:
            raise WordFormatError(
                f"letter {g} is out of range for {index} strands",
                *_position(text, token, start),
            )
        letters.append(g)
    return BraidWord(index, letters)


def format_word(w: BraidWord) -> str:
    """Render a word as ``"n: g1 g2 ... gk"``; an empty word is ``"n:"``."""
    if not w.letters:
        return f"{w.index}:"
    return f"{w.index}: " + " ".join(str(g) for g in w.letters)


def _is_int(token: str) -> bool:
    body = token[1:] if token[:1] in "+-" else token
    return body.isdigit()


def _tokens(text: str, offset: int):
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        yield text[i:j], offset + i
        i = j


def _position(text: str, token: str, start: int) -> tuple[int, int]:
    # recover line and column of the first non-space character of the token
    while start < len(text) and text[start].isspace():
        start += 1
    line = text.count("\n", 0, start) + 1
    last_break = text.rfind("\n", 0, start)
    return line, start - last_break


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[int] = []
    for g in w.letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.index, stack)


def inverse(w: BraidWord) -> BraidWord:
    """The inverse word: letters reversed and negated."""
    return BraidWord(w.index, tuple(-g for g in reversed(w.letters)))


def concat(*words: BraidWord) -> BraidWord:
    """Concatenate words on a common strand count."""
    if not words:
        raise ValueError("concat needs at least one word")
    index = words[0].index
    letters: list[int] = []
    for w in words:
        if w.index != index:
            raise ValueError(
                f"strand counts differ: {index} versus {w.index}"
            )
        letters.extend(w.letters)
    return BraidWord(index, letters)


def power(w: BraidWord, k: int) -> BraidWord:
    """The word repeated ``k`` times; negative ``k`` repeats the inverse."""
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.index, base.letters * abs(k))


def rotate(w: BraidWord, k: int) -> BraidWord:
    """Cyclic shift moving the first ``k`` letters to the end."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.index, w.letters[k:] + w.letters[:k])


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """The freely reduced conjugate ``g w g^-1``."""
    if w.index != g.index:
        raise ValueError(
            f"strand counts differ: {w.index} versus {g.index}"
        )
    return free_reduce(concat(g, w, inverse(g)))


def permutation(w: BraidWord) -> tuple[int, ...]:
    """Endpoint permutation of the word's strands.

    Entry ``s - 1`` is the position at which the strand starting at
    position ``s`` ends.  Each letter swaps the images of the two
    positions it crosses, in word order.
    """

    images = list(range(1, w.index + 1))
    for g in w.letters:
        i = abs(g) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return tuple(images)


def cycle_count(perm: tuple[int, ...]) -> int:
    """Number of cycles of a permutation given as a tuple of images."""
    seen = [False] * len(perm)
    cycles = 0
    for s in range(len(perm)):
        if seen[s]:
            continue
        cycles += 1
        t = s
        while not seen[t]:
            seen[t] = True
            t = perm[t] - 1
    return cycles


def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; the algebraic crossing count."""
    return sum(1 if g > 0 else -1 for g in w.letters)


def closure_components(w: BraidWord) -> int:
    """Number of link components of the word's closure."""
    return cycle_count(permutation(w))


def writhe_on_generator(w: BraidWord, i: int) -> int:
    """Signed count of the letters ``+i`` and ``-i``."""
    return sum(1 if g == i else -1 for g in w.letters if abs(g) == i)


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Freely reduce, then cancel inverse pairs across the seam."""
    r = free_reduce(w)
    letters = list(r.letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return BraidWord(w.index, letters)


def cyclic_rotations(w: BraidWord) -> list[BraidWord]:
    """All rotations of the word, the word itself first."""
    return [rotate(w, k) for k in range(max(1, len(w.letters)))]
