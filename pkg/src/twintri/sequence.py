"""Contraction sequences: the pairs-only encoding, its file format, and replay.

A sequence for an n-vertex graph lists n-1 vertex pairs.  Replaying it
contracts each pair in order; the vertex created by step j (0-based) is
implicitly numbered n+1+j and is never written down.  The width of a
sequence is the largest red degree any intermediate trigraph attains.

File format, one record per line:

    c <free text>    comment, ignored
    s <n>            original vertex count, exactly once, first
    <u> <v>          one line per contraction, n-1 lines total
"""

from __future__ import annotations

from dataclasses import dataclass

from .trigraph import Trigraph


class SequenceFormatError(ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SequenceError(ValueError):
    """A syntactically fine sequence that cannot be applied as requested."""


@dataclass(frozen=True)
class ContractionSequence:
    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("sequence needs n >= 1")
        if len(self.pairs) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} pairs, got {len(self.pairs)}")
        top = 2 * self.n - 1
        for u, v in self.pairs:
            if u == v:
                raise ValueError(f"self-contraction of vertex {u}")
            if not (1 <= u <= top and 1 <= v <= top):
                raise ValueError(f"pair ({u}, {v}) leaves the id range 1..{top}")

    def new_id(self, step: int) -> int:
        """Id assigned to the vertex created by 0-based step `step`."""
        return self.n + 1 + step


@dataclass
class SequenceReport:
    width: int
    valid: bool
    failing_step: int | None = None


def parse_sequence(text: str) -> ContractionSequence:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "s":
            if n is not None:
                raise SequenceFormatError("duplicate s line", lineno)
            if len(fields) != 2:
                raise SequenceFormatError("expected 's <n>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise SequenceFormatError("vertex count must be an integer", lineno)
            if n < 1:
                raise SequenceFormatError("vertex count must be at least 1", lineno)
        else:
            if n is None:
                raise SequenceFormatError("pair line before the s line", lineno)
            if len(fields) != 2:
                raise SequenceFormatError("expected '<u> <v>'", lineno)
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise SequenceFormatError("pair entries must be integers", lineno)
            if u == v:
                raise SequenceFormatError(f"self-contraction of vertex {u}", lineno)
            top = 2 * n - 1
            if not (1 <= u <= top and 1 <= v <= top):
                raise SequenceFormatError(f"id outside 1..{top}", lineno)
            pairs.append((u, v))
    if n is None:
        raise SequenceFormatError("missing s line")
    if len(pairs) != n - 1:
        raise SequenceFormatError(f"expected {n - 1} pairs, got {len(pairs)}")
    return ContractionSequence(n, tuple(pairs))


def format_sequence(seq: ContractionSequence) -> str:
    lines = [f"s {seq.n}"]
    for u, v in seq.pairs:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_sequence(path) -> ContractionSequence:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_sequence(handle.read())


def save_sequence(seq: ContractionSequence, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_sequence(seq))


def replay(g: Trigraph, seq: ContractionSequence, observer=None, after=None) -> SequenceReport:
    """Apply every contraction in order, tracking the largest red degree seen.

    g must be freshly built from the n-vertex graph the sequence targets.
    observer(step, g, u, v, w, merged) runs on the still-unmodified
    trigraph together with the merge preview for the step, so callers can
    inspect the pre-contraction colors; after(step, g, u, v, w) runs once
    the contraction is applied.  A step naming a dead or unknown vertex
    stops the replay and is reported through failing_step rather than
    raised.
    """
    if g.n_original != seq.n:
        raise SequenceError(
            f"sequence is for {seq.n} vertices, trigraph has {g.n_original}")
    width = 0
    for step, (u, v) in enumerate(seq.pairs):
        if u == v or not (g.is_live(u) and g.is_live(v)):
            return SequenceReport(width, False, step)
        w = seq.n + 1 + step
        merged = g.merge_neighborhoods(u, v)
        if observer is not None:
            observer(step, g, u, v, w, merged)
        g.contract(u, v, w, merged)
        d = g.max_red_degree()
        if d > width:
            width = d
        if after is not None:
            after(step, g, u, v, w)
    return SequenceReport(width, True, None)


def verify_width(g: Trigraph, seq: ContractionSequence, bound: int) -> SequenceReport:
    """Check that every intermediate trigraph keeps red degree <= bound.

    A width overshoot is a failed verification (valid=False with the
    first offending step), not an exception.
    """
    exceeded = None

    def watch(step, g2, u, v, w):
        nonlocal exceeded
        if exceeded is None and g2.max_red_degree() > bound:
            exceeded = step

    report = replay(g, seq, after=watch)
    if not report.valid:
        return report
    if exceeded is not None:
        return SequenceReport(report.width, False, exceeded)
    return report
