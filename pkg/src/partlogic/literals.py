"""Textual partition literals.

Two forms are accepted: block form ``{{a,b},{c}}`` with arbitrary
labels, and the raw form ``rgs:0,0,1``.  Labels sort lexicographically
onto the internal elements ``0..n-1``, so a literal determines one
partition exactly.  Printing is bit-exact: blocks ordered by least
element, elements ascending, no whitespace.
"""

from __future__ import annotations

import string

from .core import Partition


def default_labels(n: int) -> tuple[str, ...]:
    """Lowercase letters, or zero-padded ``x``-names when letters run out.

    Either way the labels sort lexicographically in element order, so
    printing with them round-trips.
    """
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    width = len(str(n - 1))
    return tuple(f"x{i:0{width}d}" for i in range(n))


def parse_partition(text: str) -> tuple[Partition, tuple[str, ...]]:
    """Parse a partition literal, returning the partition and its labels.

    Raw rgs literals must already be canonical; they get default labels.
    """
    s = text.strip()
    if s.startswith("rgs:"):
        body = s[len("rgs:"):]
        try:
            values = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise ValueError(f"malformed rgs literal: {text!r}") from None
        p = Partition(len(values), values)
        return p, default_labels(p.n)
    blocks = _parse_blocks(s)
    labels = sorted(lab for block in blocks for lab in block)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        dup = next(lab for i, lab in enumerate(labels) if i and labels[i - 1] == lab)
        raise ValueError(f"duplicate label {dup!r} in partition literal")
    p = Partition.from_blocks([[index[lab] for lab in block] for block in blocks], len(labels))
    return p, tuple(labels)


def _parse_blocks(s: str) -> list[list[str]]:
    def fail(message: str, position: int):
        raise ValueError(f"{message} (at position {position}) in partition literal")

    i = 0

    def skip_space():
        nonlocal i
        while i < len(s) and s[i].isspace():
            i += 1

    def expect(ch: str):
        nonlocal i
        skip_space()
        if i >= len(s) or s[i] != ch:
            fail(f"expected {ch!r}", i)
        i += 1

    def label() -> str:
        nonlocal i
        skip_space()
        start = i
        while i < len(s) and s[i] not in "{}," and not s[i].isspace():
            i += 1
        if i == start:
            fail("expected a label", i)
        return s[start:i]

    blocks: list[list[str]] = []
    expect("{")
    while True:
        expect("{")
        block = [label()]
        skip_space()
        while i < len(s) and s[i] == ",":
            i += 1
            block.append(label())
            skip_space()
        expect("}")
        blocks.append(block)
        skip_space()
        if i < len(s) and s[i] == ",":
            i += 1
            continue
        break
    expect("}")
    skip_space()
    if i != len(s):
        fail("trailing input", i)
    return blocks


def format_partition(p: Partition, labels: tuple[str, ...] | None = None) -> str:
    """Block form with the given labels (defaults for the universe size)."""
    if labels is None:
        labels = default_labels(p.n)
    if len(labels) != p.n:
        raise ValueError(f"{len(labels)} labels for universe size {p.n}")
    return "{" + ",".join("{" + ",".join(labels[u] for u in block) + "}" for block in p.blocks) + "}"


def format_rgs(p: Partition) -> str:
    return "rgs:" + ",".join(str(b) for b in p.rgs)
