"""Sorting a weight into class-contiguous normal form by twisting moves.

Coordinates are bubbled into canonical class order (INT, HALF, then the
remaining coset pairs by first occurrence, plus-signed members before
minus-signed ones inside a pair) by adjacent transpositions.  Every
transposition is a star action of a simple reflection and is legal: it only
ever exchanges coordinates from different coset pairs or from the two
halves of one pair, and in both cases the difference is not an integer.
Each move is logged with its typical/atypical flag so the run can be
replayed and audited.

The sweep runs right to left, carrying the smallest remaining key toward
the front, and repeats until no swap fires.  Stability means coordinates
with equal keys (same class and sign) never swap, which is exactly what
legality requires.
"""

from __future__ import annotations

from dataclasses import dataclass

from qblocks.scalars import CosetClass, coordinate_sign
from qblocks.weights import (
    ATYPICAL,
    ClassSignature,
    Root,
    Weight,
    class_signature,
    pairing,
    simple_root,
    star_action,
    weight_to_json,
)

__all__ = [
    "Move",
    "LeviBlock",
    "ReductionResult",
    "PARITY_NOTE",
    "normalize_block",
    "replay_moves",
    "reduction_to_json",
]

PARITY_NOTE = ("parity-undetermined: the moves do not track the parity "
               "shift of simple modules")


@dataclass(frozen=True)
class Move:
    alpha: Root
    flag: str

    def __post_init__(self):
        if not self.alpha.is_simple():
            raise ValueError(f"moves use simple roots, got {self.alpha}")
        if self.flag not in ("typical", "atypical"):
            raise ValueError(f"unknown move flag {self.flag!r}")


@dataclass(frozen=True)
class LeviBlock:
    size: int
    cls: CosetClass
    ell: int

    def text(self) -> str:
        base = f"q({self.size}):{self.cls.label()}"
        if self.ell != self.size:
            base += f" ell={self.ell}"
        return base


@dataclass(frozen=True)
class ReductionResult:
    levi: tuple[LeviBlock, ...]
    reduced: Weight
    moves: tuple[Move, ...]
    notes: tuple[str, ...]

    def levi_text(self) -> str:
        return " x ".join(block.text() for block in self.levi)


def _sort_keys(sig: ClassSignature) -> list[tuple[int, int]]:
    keys = []
    for class_index, sign in sig.labels:
        cls = sig.classes[class_index]
        subrank = 0 if cls.is_self_paired() or sign > 0 else 1
        keys.append((class_index, subrank))
    return keys


def normalize_block(weight: Weight) -> ReductionResult:
    sig = class_signature(weight)
    keys = _sort_keys(sig)
    current = weight
    moves: list[Move] = []
    changed = True
    while changed:
        changed = False
        for i in range(weight.n - 1, 0, -1):
            if keys[i - 1] <= keys[i]:
                continue
            alpha = simple_root(i)
            if pairing(current, alpha).is_integer():
                raise AssertionError(
                    f"sort reached an illegal swap at {alpha.text()} on {current}")
            current, flag = star_action(alpha, current)
            keys[i - 1], keys[i] = keys[i], keys[i - 1]
            moves.append(Move(alpha, flag))
            changed = True
    return ReductionResult(
        levi=_levi_blocks(current, keys, sig),
        reduced=current,
        moves=tuple(moves),
        notes=_notes(sig),
    )


def _levi_blocks(reduced: Weight, keys, sig: ClassSignature) -> tuple[LeviBlock, ...]:
    blocks: list[LeviBlock] = []
    pos = 0
    while pos < reduced.n:
        class_index = keys[pos][0]
        end = pos
        while end < reduced.n and keys[end][0] == class_index:
            end += 1
        coords = reduced.coords[pos:end]
        ell = sum(1 for c in coords if coordinate_sign(c) > 0)
        blocks.append(LeviBlock(end - pos, sig.classes[class_index], ell))
        pos = end
    return tuple(blocks)


def _notes(sig: ClassSignature) -> tuple[str, ...]:
    notes = [PARITY_NOTE]
    for class_index, cls in enumerate(sig.classes):
        if cls.is_self_paired():
            continue
        signs = {sig.sign_of(pos) for pos in sig.positions(class_index)}
        if len(signs) == 1:
            side = "+" if signs == {1} else "-"
            notes.append(
                f"class-label: {cls.label()} occurs only with sign {side}; "
                "the mirrored labeling of this class is equally valid")
    return tuple(notes)


def replay_moves(weight: Weight, moves) -> Weight:
    """Re-run a move log, re-deriving and checking every flag."""
    current = weight
    for step, move in enumerate(moves):
        if pairing(current, move.alpha).is_integer():
            raise ValueError(
                f"move {step} at {move.alpha.text()} is illegal on {current}")
        current, flag = star_action(move.alpha, current)
        if flag != move.flag:
            raise ValueError(
                f"move {step} at {move.alpha.text()} replays as {flag}, "
                f"logged {move.flag}")
    return current


def reduction_to_json(result: ReductionResult) -> dict:
    return {
        "levi": [
            {"size": b.size, "class": b.cls.label(), "ell": b.ell}
            for b in result.levi
        ],
        "reduced": weight_to_json(result.reduced),
        "moves": [
            {"i": m.alpha.i, "j": m.alpha.j, "flag": m.flag}
            for m in result.moves
        ],
        "notes": list(result.notes),
    }
