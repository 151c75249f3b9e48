"""Weighted sequences (position weight matrices).

A weighted sequence assigns to every position a probability distribution
over a small alphabet.  Positions are 1-based in every public function of
this package; internally ``dist[i - 1]`` holds position ``i``.
"""

from __future__ import annotations

import io
import math
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, TextIO, Tuple, Union

SUM_TOLERANCE = 1e-6
THRESHOLD_EPS = 1e-9
TERMINATOR = "$"
MAX_ALPHABET = 64


class PWMFormatError(ValueError):
    """Raised when a PWM v1 document or a weighted sequence is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def meets_threshold(p: float, z: float) -> bool:
    """Return True if probability `p` is at least 1/z.

    This is the single comparison used by the index and by the oracles.
    """
    return p * z >= 1.0 - THRESHOLD_EPS


@dataclass(frozen=True)
class WeightedSequence:
    alphabet: str
    dist: Tuple[Tuple[Tuple[str, float], ...], ...]

    @classmethod
    def from_rows(cls, alphabet: str, rows: Iterable[Mapping[str, float]]) -> "WeightedSequence":
        """Build from an iterable of ``{letter: probability}`` mappings.

        Zero-probability entries are dropped.
        """
        dist = []
        for row in rows:
            dist.append(tuple((a, float(p)) for a, p in row.items() if p != 0))
        return cls(alphabet, tuple(dist))

    @classmethod
    def solid(cls, text: str, alphabet: str | None = None) -> "WeightedSequence":
        if alphabet is None:
            alphabet = "".join(sorted(set(text)))
        return cls(alphabet, tuple(((c, 1.0),) for c in text))

    @property
    def n(self) -> int:
        return len(self.dist)

    def __len__(self) -> int:
        return len(self.dist)

    def prob(self, i: int, letter: str) -> float:
        """Probability of `letter` at 1-based position `i` (0 if absent)."""
        for a, p in self.dist[i - 1]:
            if a == letter:
                return p
        return 0.0

    def row(self, i: int) -> Dict[str, float]:
        return dict(self.dist[i - 1])

    def is_solid(self) -> bool:
        return all(len(d) == 1 for d in self.dist)


def validate(X: WeightedSequence) -> List[str]:
    """Return a list of human-readable invariant violations (empty if valid)."""
    problems = []
    alpha = X.alphabet
    if len(set(alpha)) != len(alpha):
        problems.append("alphabet has repeated letters")
    if TERMINATOR in alpha:
        problems.append(f"alphabet must not contain {TERMINATOR!r}")
    if len(alpha) > MAX_ALPHABET:
        problems.append(f"alphabet larger than {MAX_ALPHABET} letters")
    for c in alpha:
        if not c.isprintable() or c.isspace() or c in ":#":
            problems.append(f"letter {c!r} is not allowed in an alphabet")
    letters = set(alpha)
    for i, entries in enumerate(X.dist, start=1):
        seen = set()
        total = 0.0
        for a, p in entries:
            if a not in letters:
                problems.append(f"position {i}: unknown letter {a!r}")
            if a in seen:
                problems.append(f"position {i}: duplicate letter {a!r}")
            seen.add(a)
            if not (0.0 < p <= 1.0) or math.isnan(p):
                problems.append(f"position {i}: probability {p!r} of {a!r} not in (0, 1]")
            total += p
        if abs(total - 1.0) > SUM_TOLERANCE:
            problems.append(f"position {i}: probabilities sum to {total!r}")
    return problems


def require_valid(X: WeightedSequence) -> WeightedSequence:
    problems = validate(X)
    if problems:
        raise PWMFormatError("; ".join(problems))
    return X


def _parse_prob(token: str, lineno: int) -> float:
    try:
        p = float(token)
    except ValueError:
        raise PWMFormatError(f"bad probability literal {token!r}", lineno) from None
    if not (0.0 < p <= 1.0):
        raise PWMFormatError(f"probability {token} not in (0, 1]", lineno)
    return p


def parse_pwm(source: Union[str, TextIO]) -> WeightedSequence:
    """Parse a PWM v1 document from a string or text stream.

    Format::

        pwm v1
        alphabet: ab
        length: 2
        1 a:0.5 b:0.5
        2 b:1

    Blank lines and lines starting with ``#`` are ignored.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    lines = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))

    if len(lines) < 3:
        raise PWMFormatError("missing header (expected 'pwm v1', 'alphabet:', 'length:')")
    (l1, magic), (l2, alpha_line), (l3, len_line) = lines[:3]
    if magic != "pwm v1":
        raise PWMFormatError(f"expected 'pwm v1', got {magic!r}", l1)
    if not alpha_line.startswith("alphabet:"):
        raise PWMFormatError("expected 'alphabet: <letters>'", l2)
    alphabet = alpha_line[len("alphabet:"):].strip()
    if not alphabet:
        raise PWMFormatError("empty alphabet", l2)
    if not len_line.startswith("length:"):
        raise PWMFormatError("expected 'length: <n>'", l3)
    try:
        n = int(len_line[len("length:"):].strip())
    except ValueError:
        raise PWMFormatError("length is not an integer", l3) from None
    if n < 0:
        raise PWMFormatError("negative length", l3)

    letters = set(alphabet)
    rows = []
    for lineno, line in lines[3:]:
        fields = line.split()
        try:
            pos = int(fields[0])
        except ValueError:
            raise PWMFormatError(f"bad position {fields[0]!r}", lineno) from None
        expected = len(rows) + 1
        if pos != expected:
            raise PWMFormatError(f"position {pos} out of order (expected {expected})", lineno)
        if pos > n:
            raise PWMFormatError(f"position {pos} beyond declared length {n}", lineno)
        if len(fields) == 1:
            raise PWMFormatError(f"position {pos} has no letters", lineno)
        entries = []
        seen = set()
        total = 0.0
        for tok in fields[1:]:
            letter, sep, prob = tok.rpartition(":")
            if not sep or len(letter) != 1:
                raise PWMFormatError(f"bad entry {tok!r}", lineno)
            if letter not in letters:
                raise PWMFormatError(f"unknown letter {letter!r}", lineno)
            if letter in seen:
                raise PWMFormatError(f"duplicate letter {letter!r}", lineno)
            seen.add(letter)
            p = _parse_prob(prob, lineno)
            total += p
            entries.append((letter, p))
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise PWMFormatError(f"probabilities at position {pos} sum to {total:.9g}", lineno)
        rows.append(tuple(entries))
    if len(rows) != n:
        raise PWMFormatError(f"expected {n} positions, found {len(rows)}")
    return require_valid(WeightedSequence(alphabet, tuple(rows)))


def format_pwm(X: WeightedSequence) -> str:
    out = ["pwm v1", f"alphabet: {X.alphabet}", f"length: {X.n}"]
    for i, entries in enumerate(X.dist, start=1):
        out.append(f"{i} " + " ".join(f"{a}:{p!r}" for a, p in entries))
    return "\n".join(out) + "\n"


def sorted_letters(X: WeightedSequence, i: int) -> List[Tuple[str, float]]:
    """Letters at position `i` by non-increasing probability, ties in alphabet order."""
    order = {c: k for k, c in enumerate(X.alphabet)}
    return sorted(X.dist[i - 1], key=lambda e: (-e[1], order[e[0]]))


def heavy_string(X: WeightedSequence) -> str:
    order = {c: k for k, c in enumerate(X.alphabet)}
    return "".join(
        min(entries, key=lambda e: (-e[1], order[e[0]]))[0] for entries in X.dist
    )


def match_probability(P: str, X: WeightedSequence, i: int) -> float:
    """Product of the probabilities of the letters of P at positions i, i+1, ..."""
    if i < 1 or i + len(P) - 1 > X.n:
        raise IndexError(f"window [{i}, {i + len(P) - 1}] outside 1..{X.n}")
    p = 1.0
    for k, c in enumerate(P):
        p *= X.prob(i + k, c)
        if p == 0.0:
            break
    return p


def generate_random(
    n: int,
    alphabet: Sequence[str],
    seed: int,
    uncertain_fraction: float = 0.3,
    resolution: int | None = 16,
) -> WeightedSequence:
    """Random weighted sequence for tests and benchmarks.

    With ``resolution`` set, every probability is a multiple of
    1/resolution, which keeps small products exact in binary floating point.
    With ``resolution=None`` the probabilities are drawn from a flat
    Dirichlet distribution.
    """
    alphabet = "".join(alphabet)
    if not alphabet:
        raise ValueError("empty alphabet")
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= uncertain_fraction <= 1.0:
        raise ValueError("uncertain_fraction must lie in [0, 1]")
    rng = random.Random(seed)
    sigma = len(alphabet)
    kmax = sigma if resolution is None else min(sigma, resolution)
    rows = []
    for _ in range(n):
        if kmax >= 2 and rng.random() < uncertain_fraction:
            k = rng.randint(2, kmax)
            letters = rng.sample(alphabet, k)
            if resolution is None:
                w = [rng.expovariate(1.0) for _ in range(k)]
                s = sum(w)
                probs = [x / s for x in w]
                probs[-1] = 1.0 - sum(probs[:-1])
            else:
                # random composition of `resolution` into k positive parts
                cuts = sorted(rng.sample(range(1, resolution), k - 1))
                parts = [b - a for a, b in zip([0] + cuts, cuts + [resolution])]
                probs = [x / resolution for x in parts]
            order = {c: j for j, c in enumerate(alphabet)}
            row = sorted(zip(letters, probs), key=lambda e: order[e[0]])
            rows.append(tuple(row))
        else:
            rows.append(((rng.choice(alphabet), 1.0),))
    return WeightedSequence(alphabet, tuple(rows))

