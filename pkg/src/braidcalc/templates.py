"""Block-strand diagrams, templates, and their expansion to braid words.

A block-strand diagram is a braid-shaped picture built from weighted
strands: a composition of positive weights totalling the braid index,
followed by a top-to-bottom sequence of entries.  A band crosses two
adjacent weighted strands, carrying one whole bundle across the other
with a fixed sign; a block is a named hole spanning consecutive
weighted strands, to be filled later with a braid word on that many
cables.  Filling every block (a braiding assignment) and cabling each
crossing through the strand weights expands the diagram to a plain
braid word.

A template pairs two diagrams over the same block names.  A template
is the assertion that for every assignment the two expansions close to
the same link; ``verify_template`` samples assignments and compares
closure fingerprints, which can refute an encoding but never certify
it.  The shipped catalog covers destabilization, the exchange move in
weight one and weighted form, the three strand flype, microflypes, a
four block necklace that cyclically permutes its blocks, and two six
strand examples whose two sides differ by sliding a strand bundle
across interior blocks.

``sigma_budget`` counts the top generator letters a diagram can emit
outside its blocks.  Since blocks seated away from the last strand
never produce the top generator, the budget bounds the top letter
count of every expansion, which yields a cheap certificate that a
diagram cannot carry a braid whose conjugacy class needs more of them.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .invariants import fingerprint
from .moves import Conjugate, Destabilize, Stabilize, Tower, extend
from .words import BraidWord, concat, inverse

__all__ = [
    "CoverageError",
    "IndexMismatch",
    "WeightFlowError",
    "BlockOnLastStrand",
    "Band",
    "BlockRef",
    "BlockStrandDiagram",
    "Template",
    "Assignment",
    "band_expand",
    "expand",
    "sample_assignment",
    "VerifySample",
    "VerifyReport",
    "verify_template",
    "sigma_budget",
    "non_carry_certificate",
    "make_destabilize",
    "make_exchange",
    "make_flype3",
    "make_flype",
    "make_microflype",
    "make_cyclic",
    "make_gflype6",
    "make_gexchange6",
    "builtin_templates",
    "diagram_to_json",
    "diagram_from_json",
    "template_to_json",
    "template_from_json",
    "dump_template",
    "load_template",
    "catalog",
    "TEMPLATE_DIR_ENV",
    "cyclic_tower",
    "gflype_tower",
]

TEMPLATE_DIR_ENV = "BRAID_TEMPLATE_DIR"


class CoverageError(ValueError):
    """An assignment is missing one of the template's blocks."""


class IndexMismatch(ValueError):
    """An assigned word's strand count differs from the block's cables."""


class WeightFlowError(ValueError):
    """An assigned word fails to return its cables to the entering order."""


class BlockOnLastStrand(ValueError):
    """A block touches the last strand, so the diagram is not normalized."""


@dataclass(frozen=True)
class Band:
    """One weighted crossing of the strands in slots ``pos`` and ``pos + 1``."""

    pos: int
    sign: int


@dataclass(frozen=True)
class BlockRef:
    """A named block consuming ``span`` consecutive slots starting at ``pos``.

    The block's braid index is its span: an assignment fills it with a
    word on ``span`` strands, one per weighted cable.
    """

    id: str
    span: int
    pos: int = 1


DiagramEntry = Band | BlockRef


@dataclass(frozen=True)
class BlockStrandDiagram:
    """Weighted strands plus an ordered sequence of bands and blocks.

    ``weights`` is the entering composition; its sum is the braid index
    ``index``.  Entries act top to bottom: a band swaps two adjacent
    weights, a block preserves the weights it spans.  Diagrams flagged
    ``post_destabilization`` are exempt from the requirement that each
    block's span stay strictly below the braid index.
    """

    index: int
    weights: tuple[int, ...]
    entries: tuple[DiagramEntry, ...]
    post_destabilization: bool = False

    def __init__(self, index, weights, entries, post_destabilization=False):
        weights = tuple(weights)
        entries = tuple(entries)
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be positive: {weights}")
        if sum(weights) != index:
            raise ValueError(
                f"weights {weights} sum to {sum(weights)}, index is {index}"
            )
        slots = len(weights)
        flow = list(weights)
        for entry in entries:
            if isinstance(entry, Band):
                if entry.sign not in (1, -1):
                    raise ValueError(f"band sign must be +1 or -1: {entry}")
                if not 1 <= entry.pos <= slots - 1:
                    raise ValueError(f"band slot out of range: {entry}")
                a = flow[entry.pos - 1]
                flow[entry.pos - 1] = flow[entry.pos]
                flow[entry.pos] = a
            elif isinstance(entry, BlockRef):
                if entry.span < 1:
                    raise ValueError(f"block span must be >= 1: {entry}")
                if not 1 <= entry.pos <= slots - entry.span + 1:
                    raise ValueError(f"block slots out of range: {entry}")
                entering = flow[entry.pos - 1 : entry.pos - 1 + entry.span]
                if sum(entering) < 2:
                    raise ValueError(
                        f"block {entry.id!r} has entering weight"
                        f" {sum(entering)}, needs at least 2"
                    )
                if entry.span >= index and not post_destabilization:
                    raise ValueError(
                        f"block {entry.id!r} spans {entry.span} of {index}"
                        " strands; only post-destabilization diagrams allow"
                        " a full-width block"
                    )
            else:
                raise TypeError(f"not a diagram entry: {entry!r}")
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(
            self, "post_destabilization", bool(post_destabilization)
        )

    @property
    def blocks(self) -> dict[str, int]:
        """Map block id to its span; repeats must agree."""
        spans: dict[str, int] = {}
        for entry in self.entries:
            if isinstance(entry, BlockRef):
                if spans.setdefault(entry.id, entry.span) != entry.span:
                    raise ValueError(
                        f"block {entry.id!r} appears with two spans"
                    )
        return spans

    @property
    def fixed_words(self) -> tuple[tuple[int, ...], ...]:
        """Band letters between blocks: the fixed inter-block words."""
        segments: list[tuple[int, ...]] = []
        current: list[int] = []
        flow = list(self.weights)
        for entry in self.entries:
            if isinstance(entry, Band):
                a = flow[entry.pos - 1]
                b = flow[entry.pos]
                p = 1 + sum(flow[: entry.pos - 1])
                current.extend(
                    band_expand(a, b, p, entry.sign, self.index).letters
                )
                flow[entry.pos - 1], flow[entry.pos] = b, a
            else:
                segments.append(tuple(current))
                current = []
        segments.append(tuple(current))
        return tuple(segments)


Assignment = dict[str, BraidWord]


@dataclass(frozen=True)
class Template:
    """Two diagrams over the same blocks, claimed to close identically."""

    name: str
    plus: BlockStrandDiagram
    minus: BlockStrandDiagram

    def __post_init__(self):
        pb, mb = self.plus.blocks, self.minus.blocks
        if pb != mb:
            raise ValueError(
                f"template {self.name!r}: block mismatch"
                f" {sorted(pb.items())} versus {sorted(mb.items())}"
            )

    @property
    def blocks(self) -> dict[str, int]:
        return self.plus.blocks

    @property
    def delta_b(self) -> int:
        """Braid index drop from the plus side to the minus side."""
        return self.plus.index - self.minus.index


def band_expand(a: int, b: int, p: int, sign: int, n: int) -> BraidWord:
    """The braid carrying a weight ``a`` bundle across a weight ``b`` bundle.

    The bundles occupy strands ``p .. p+a-1`` and ``p+a .. p+a+b-1``.
    Every strand of the first bundle crosses every strand of the second
    exactly once, all with the given sign, and the bundles swap as
    blocks with no internal crossings.
    """

    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if a < 1 or b < 1 or p < 1 or p + a + b - 1 > n:
        raise ValueError(
            f"bundle out of range: weights ({a}, {b}) at strand {p}"
            f" in {n} strands"
        )
    letters: list[int] = []
    for r in range(b):
        for s in range(p + a - 1 + r, p + r - 1, -1):
            letters.append(sign * s)
    return BraidWord(n, letters)


def expand(d: BlockStrandDiagram, asg: Assignment) -> BraidWord:
    """Expand a diagram to a plain braid word under an assignment.

    Bands become :func:`band_expand` words at the current weight flow.
    A block letter ``sigma_j`` becomes the band crossing of the block's
    ``j``-th and ``(j+1)``-th cables; the assigned word must restore the
    entering cable weights in their original order.
    """

    missing = sorted(set(d.blocks) - set(asg))
    if missing:
        raise CoverageError(f"assignment misses blocks: {missing}")
    n = d.index
    flow = list(d.weights)
    letters: list[int] = []
    for entry in d.entries:
        if isinstance(entry, Band):
            a, b = flow[entry.pos - 1], flow[entry.pos]
            p = 1 + sum(flow[: entry.pos - 1])
            letters.extend(band_expand(a, b, p, entry.sign, n).letters)
            flow[entry.pos - 1], flow[entry.pos] = b, a
        else:
            word = asg[entry.id]
            if word.index != entry.span:
                raise IndexMismatch(
                    f"block {entry.id!r} has {entry.span} cables,"
                    f" assigned word has {word.index} strands"
                )
            entering = flow[entry.pos - 1 : entry.pos - 1 + entry.span]
            cables = list(entering)
            base = 1 + sum(flow[: entry.pos - 1])
            for g in word.letters:
                j = abs(g)
                sign = 1 if g > 0 else -1
                p = base + sum(cables[: j - 1])
                letters.extend(
                    band_expand(cables[j - 1], cables[j], p, sign, n).letters
                )
                cables[j - 1], cables[j] = cables[j], cables[j - 1]
            if cables != entering:
                raise WeightFlowError(
                    f"block {entry.id!r}: cables enter as {entering} but"
                    f" leave as {cables}"
                )
    return BraidWord(n, letters)


def _block_cable_vectors(
    d: BlockStrandDiagram,
) -> dict[str, list[tuple[int, ...]]]:
    # entering cable weights of every block occurrence, in flow order
    out: dict[str, list[tuple[int, ...]]] = {}
    flow = list(d.weights)
    for entry in d.entries:
        if isinstance(entry, Band):
            flow[entry.pos - 1], flow[entry.pos] = (
                flow[entry.pos],
                flow[entry.pos - 1],
            )
        else:
            vec = tuple(flow[entry.pos - 1 : entry.pos - 1 + entry.span])
            out.setdefault(entry.id, []).append(vec)
    return out


def _preserves_vector(letters: tuple[int, ...], vec: tuple[int, ...]) -> bool:
    cables = list(vec)
    for g in letters:
        j = abs(g)
        cables[j - 1], cables[j] = cables[j], cables[j - 1]
    return cables == list(vec)


def sample_assignment(
    t: Template, rng: random.Random, max_len: int = 6
) -> Assignment:
    """Draw one random assignment compatible with both diagrams.

    Words are uniform over letters of the block's index, with length
    from 0 to ``max_len``; words that would break a block's cable
    weight order are redrawn.
    """

    constraints: dict[str, list[tuple[int, ...]]] = {}
    for diagram in (t.plus, t.minus):
        for name, vectors in _block_cable_vectors(diagram).items():
            constraints.setdefault(name, []).extend(vectors)
    asg: Assignment = {}
    for name, span in sorted(t.blocks.items()):
        choices = [g for g in range(-(span - 1), span) if g != 0]
        while True:
            length = rng.randint(0, max_len)
            letters = tuple(rng.choice(choices) for _ in range(length))
            if all(
                _preserves_vector(letters, vec)
                for vec in constraints.get(name, [])
            ):
                asg[name] = BraidWord(span, letters)
                break
    return asg


@dataclass(frozen=True)
class VerifySample:
    """Result for one sampled assignment."""

    number: int
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    """Per-sample outcomes plus the template's braid index delta."""

    template: str
    delta_b: int
    samples: tuple[VerifySample, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> int:
        return sum(1 for s in self.samples if s.ok)

    @property
    def all_pass(self) -> bool:
        return self.passed == len(self.samples)

    def summary(self) -> str:
        return (
            f"{self.passed}/{len(self.samples)} pass delta_b={self.delta_b}"
        )


def verify_template(t: Template, samples: list[Assignment]) -> VerifyReport:
    """Expand both sides per sample and compare closure fingerprints.

    Expansion errors do not abort the run; they fail their sample with
    the error text in the report.
    """

    if not samples:
        raise ValueError("need at least one sample assignment")
    rows: list[VerifySample] = []
    for number, asg in enumerate(samples, start=1):
        try:
            plus = fingerprint(expand(t.plus, asg))
            minus = fingerprint(expand(t.minus, asg))
        except (CoverageError, IndexMismatch, WeightFlowError) as err:
            rows.append(VerifySample(number, False, str(err)))
            continue
        if plus == minus:
            rows.append(VerifySample(number, True))
        else:
            rows.append(
                VerifySample(number, False, f"{plus} versus {minus}")
            )
    return VerifyReport(t.name, t.delta_b, tuple(rows))


def sigma_budget(d: BlockStrandDiagram) -> int:
    """Count of top generator letters the fixed words can emit.

    Requires every block to sit clear of the last strand, as in the
    normalized form where blocks occupy initial strands; otherwise
    raises :class:`BlockOnLastStrand`.  Blocks seated off the last
    strand never expand to the top generator, so this total bounds the
    count of letters ``n - 1`` in any expansion of the diagram.
    """

    flow = list(d.weights)
    for entry in d.entries:
        if isinstance(entry, Band):
            flow[entry.pos - 1], flow[entry.pos] = (
                flow[entry.pos],
                flow[entry.pos - 1],
            )
        else:
            base = 1 + sum(flow[: entry.pos - 1])
            total = sum(flow[entry.pos - 1 : entry.pos - 1 + entry.span])
            if base + total - 1 >= d.index:
                raise BlockOnLastStrand(
                    f"block {entry.id!r} spans strands"
                    f" {base}..{base + total - 1} of {d.index}"
                )
    top = d.index - 1
    return sum(
        1
        for segment in d.fixed_words
        for g in segment
        if abs(g) == top
    )


def non_carry_certificate(d: BlockStrandDiagram, min_last_count: int) -> bool:
    """Certify that no expansion of ``d`` reaches the required top count.

    ``min_last_count`` must be a proven lower bound on occurrences of
    the top generator across the target's conjugacy class.  True means
    the diagram cannot carry the target.
    """

    return sigma_budget(d) < min_last_count


def _units(n: int) -> tuple[int, ...]:
    return (1,) * n


def make_destabilize(sign: int, w: int = 1) -> Template:
    """Destabilization over a weight ``w`` loop; index drops by ``w``."""
    tag = "pos" if sign > 0 else "neg"
    name = f"destabilize_{tag}" if w == 1 else f"destabilize_{tag}_w{w}"
    plus = BlockStrandDiagram(
        2 + w, (1, 1, w), (BlockRef("P", 2), Band(2, sign))
    )
    minus = BlockStrandDiagram(
        2, (1, 1), (BlockRef("P", 2),), post_destabilization=True
    )
    return Template(name, plus, minus)


def make_exchange(w: int = 1) -> Template:
    """The exchange move: a weight ``w`` bundle swaps its two passes."""
    name = "exchange_w1" if w == 1 else "exchange_weighted"
    def side(first: int) -> BlockStrandDiagram:
        return BlockStrandDiagram(
            2 + w,
            (1, 1, w),
            (
                BlockRef("P", 2),
                Band(2, first),
                BlockRef("Q", 2),
                Band(2, -first),
            ),
        )
    return Template(name, side(1), side(-1))


def make_flype3(eps: int) -> Template:
    """The three strand flype with moving block ``R``."""
    name = "flype3_pos" if eps > 0 else "flype3_neg"
    plus = BlockStrandDiagram(
        3,
        (1, 1, 1),
        (BlockRef("P", 2), BlockRef("R", 2, 2), BlockRef("Q", 2), Band(2, eps)),
    )
    minus = BlockStrandDiagram(
        3,
        (1, 1, 1),
        (BlockRef("P", 2), Band(2, eps), BlockRef("Q", 2), BlockRef("R", 2, 2)),
    )
    return Template(name, plus, minus)


def make_flype(eps: int, w: int, k: int, wp: int, kp: int) -> Template:
    """The weighted flype family; requires ``w + wp == k + kp``.

    The index delta of the two sides is ``wp - k``; the shipped catalog
    carries only the unit instances, whose links agree for every
    assignment, while the weighted family is exposed for its arithmetic.
    """

    if w + wp != k + kp:
        raise ValueError(
            f"inconsistent weights: {w}+{wp} != {k}+{kp}"
        )
    tag = "pos" if eps > 0 else "neg"
    name = f"flype_{tag}_{w}{k}{wp}{kp}"
    plus = BlockStrandDiagram(
        1 + w + wp,
        (1, w, wp),
        (BlockRef("P", 2), BlockRef("R", 2, 2), BlockRef("Q", 2), Band(2, eps)),
    )
    minus = BlockStrandDiagram(
        1 + w + k,
        (1, w, k),
        (BlockRef("P", 2), Band(2, eps), BlockRef("Q", 2), BlockRef("R", 2, 2)),
    )
    return Template(name, plus, minus)


def make_microflype(alpha: int, beta: int) -> Template:
    """A flype whose moving block is one full twist on two unit strands."""
    suffix = ("p" if alpha > 0 else "m") + ("p" if beta > 0 else "m")
    name = f"microflype_{suffix}"
    plus = BlockStrandDiagram(
        3,
        (1, 1, 1),
        (
            BlockRef("P", 2),
            Band(2, beta),
            Band(2, beta),
            BlockRef("Q", 2),
            Band(2, alpha),
        ),
    )
    minus = BlockStrandDiagram(
        3,
        (1, 1, 1),
        (
            BlockRef("P", 2),
            Band(2, alpha),
            BlockRef("Q", 2),
            Band(2, beta),
            Band(2, beta),
        ),
    )
    return Template(name, plus, minus)


def _carousel(k: int) -> tuple[Band, ...]:
    # carry the first strand to the back: one full turn of the necklace
    return tuple(Band(j, 1) for j in range(k - 1, 0, -1))


def make_cyclic(k: int) -> Template:
    """A necklace of ``k`` two strand blocks; the sides differ by one turn."""
    if k < 3:
        raise ValueError(f"need at least 3 blocks, got {k}")
    def side(order: list[int]) -> BlockStrandDiagram:
        entries: list[DiagramEntry] = []
        for i in order:
            entries.append(BlockRef(f"B{i}", 2))
            entries.extend(_carousel(k))
        return BlockStrandDiagram(k, _units(k), tuple(entries))
    plus = side(list(range(1, k + 1)))
    minus = side(list(range(2, k + 1)) + [1])
    return Template(f"cyclic{k}", plus, minus)


def make_gflype6() -> Template:
    """Six strand example: a bundle pass flips around two block pairs."""
    def side(sign: int) -> BlockStrandDiagram:
        return BlockStrandDiagram(
            6,
            _units(6),
            (
                BlockRef("W", 2),
                BlockRef("X", 2, 3),
                Band(5, -sign),
                BlockRef("Y", 2),
                Band(5, sign),
                BlockRef("Z", 2, 3),
            ),
        )
    return Template("gflype6", side(1), side(-1))


def make_gexchange6() -> Template:
    """Six strand example with six blocks around one strand pass."""
    def side(sign: int) -> BlockStrandDiagram:
        return BlockStrandDiagram(
            6,
            _units(6),
            (
                BlockRef("A", 2),
                BlockRef("B", 2, 3),
                Band(5, -sign),
                BlockRef("C", 2),
                BlockRef("D", 2, 3),
                Band(5, sign),
                BlockRef("E", 2),
                BlockRef("F", 2, 3),
            ),
        )
    return Template("gexchange6", side(1), side(-1))


def builtin_templates() -> list[Template]:
    """The canonical constructions behind the shipped catalog files."""
    return [
        make_cyclic(4),
        make_destabilize(-1),
        make_destabilize(1),
        make_exchange(1),
        make_exchange(2),
        make_flype3(-1),
        make_flype3(1),
        make_gexchange6(),
        make_gflype6(),
        make_microflype(-1, -1),
        make_microflype(-1, 1),
        make_microflype(1, -1),
        make_microflype(1, 1),
    ]


def _entry_to_json(entry: DiagramEntry) -> dict:
    if isinstance(entry, Band):
        return {"kind": "band", "pos": entry.pos, "sign": entry.sign}
    return {
        "kind": "block",
        "id": entry.id,
        "span": entry.span,
        "pos": entry.pos,
    }


def _entry_from_json(data: dict) -> DiagramEntry:
    kind = data.get("kind")
    if kind == "band":
        return Band(int(data["pos"]), int(data["sign"]))
    if kind == "block":
        return BlockRef(
            str(data["id"]), int(data["span"]), int(data.get("pos", 1))
        )
    raise ValueError(f"unknown entry kind: {kind!r}")


def diagram_to_json(d: BlockStrandDiagram) -> dict:
    data = {
        "n": d.index,
        "weights": list(d.weights),
        "entries": [_entry_to_json(e) for e in d.entries],
    }
    if d.post_destabilization:
        data["post_destabilization"] = True
    return data


def diagram_from_json(data: dict) -> BlockStrandDiagram:
    return BlockStrandDiagram(
        int(data["n"]),
        tuple(int(w) for w in data["weights"]),
        tuple(_entry_from_json(e) for e in data["entries"]),
        bool(data.get("post_destabilization", False)),
    )


def template_to_json(t: Template) -> dict:
    return {
        "name": t.name,
        "plus": diagram_to_json(t.plus),
        "minus": diagram_to_json(t.minus),
    }


def template_from_json(data: dict) -> Template:
    return Template(
        str(data["name"]),
        diagram_from_json(data["plus"]),
        diagram_from_json(data["minus"]),
    )


def dump_template(t: Template, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(template_to_json(t), fh, indent=2)
        fh.write("\n")


def load_template(path) -> Template:
    with open(path, encoding="utf-8") as fh:
        return template_from_json(json.load(fh))


def catalog(directory=None) -> list[Template]:
    """Load the shipped templates, sorted by name.

    ``directory`` overrides the source; otherwise the environment
    variable ``BRAID_TEMPLATE_DIR`` does; otherwise the data files
    packaged with this module are used.
    """

    if directory is None:
        directory = os.environ.get(TEMPLATE_DIR_ENV)
    if directory is not None:
        paths = sorted(Path(directory).glob("*.json"))
        return [load_template(p) for p in paths]
    root = resources.files(__package__) / "templates"
    out = []
    for item in sorted(root.iterdir(), key=lambda i: i.name):
        if item.name.endswith(".json"):
            out.append(template_from_json(json.loads(item.read_text())))
    return out


def _segment_tower(segments: list[BraidWord], sign: int) -> Tower:
    """Stabilize, carry each leading segment around, destabilize.

    The mechanism behind the replayable necklace and six strand towers:
    the moves record one full trip of the marked strand around the
    closure, one conjugation per segment it crosses.
    """

    initial = concat(*segments)
    n = initial.index
    tower = Tower(initial)
    tower = extend(tower, Stabilize(sign))
    for seg in segments[:-1]:
        lifted = BraidWord(n + 1, seg.letters)
        tower = extend(tower, Conjugate(inverse(lifted)))
    return extend(tower, Destabilize(sign))


def cyclic_tower(k: int, asg: Assignment) -> Tower:
    """The replayable tower that turns the ``cyclic(k)`` necklace once.

    Starting from the plus expansion, the tower stabilizes, conjugates
    one block-and-carousel segment at a time across the marked strand,
    and destabilizes; its index profile is ``k`` then ``k + 1`` repeated
    ``k`` times then ``k``, and the final word is the plus expansion
    rotated block by block, the word form of the one step block shift.
    """

    segments = []
    for i in range(1, k + 1):
        d = BlockStrandDiagram(
            k, _units(k), (BlockRef(f"B{i}", 2),) + _carousel(k)
        )
        segments.append(expand(d, asg))
    return _segment_tower(segments, 1)


def gflype_tower(asg: Assignment) -> Tower:
    """The replayable tower behind the six strand bundle-pass template.

    One stabilization up to seven strands (the inadmissible direction),
    two conjugations carrying the interior segments across the marked
    strand, and one destabilization back to six strands.
    """

    n = 6
    parts = (
        (BlockRef("W", 2), BlockRef("X", 2, 3), Band(5, -1)),
        (BlockRef("Y", 2), Band(5, 1)),
        (BlockRef("Z", 2, 3),),
    )
    segments = [
        expand(BlockStrandDiagram(n, _units(n), entries), asg)
        for entries in parts
    ]
    return _segment_tower(segments, -1)
