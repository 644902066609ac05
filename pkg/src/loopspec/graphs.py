"""Graphs with loops, signed permutations, isomorphism and enumeration.

A graph on ``n`` vertices is stored by its bit encoding: the upper triangle of
the adjacency matrix including the diagonal, read row-major, with entry (0, 0)
as the most significant of the ``n(n+1)/2`` bits. A loop puts a 1 on the
diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .linalg import DimensionMismatch, Matrix, Vector, as_matrix, is_symmetric

#: Largest n accepted by the brute-force isomorphism routines.
MAX_BRUTE_FORCE_N = 8


class TooLargeError(ValueError):
    pass


class GraphFormatError(ValueError):
    """Malformed graph input. ``line`` and ``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


def num_bits(n: int) -> int:
    return n * (n + 1) // 2


@lru_cache(maxsize=None)
def _positions(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i, n))


@dataclass(frozen=True)
class LoopyGraph:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if not 0 <= self.bits < (1 << num_bits(self.n)):
            raise ValueError(f"encoding {self.bits} out of range for n={self.n}")

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "LoopyGraph":
        n = len(adj)
        if any(len(row) != n for row in adj):
            raise DimensionMismatch("adjacency must be square")
        if not is_symmetric(adj):
            raise GraphFormatError("adjacency matrix is not symmetric")
        bits = 0
        for i, j in _positions(n):
            x = adj[i][j]
            if x not in (0, 1):
                raise GraphFormatError(f"entry ({i}, {j}) = {x} is not 0/1")
            bits = (bits << 1) | x
        return cls(n, bits)

    @classmethod
    def from_edges(cls, n: int, edges) -> "LoopyGraph":
        adj = [[0] * n for _ in range(n)]
        for i, j in edges:
            adj[i][j] = adj[j][i] = 1
        return cls.from_adjacency(adj)

    @cached_property
    def adj(self) -> Matrix:
        n = self.n
        a = [[0] * n for _ in range(n)]
        k = num_bits(n)
        for i, j in _positions(n):
            k -= 1
            a[i][j] = a[j][i] = (self.bits >> k) & 1
        return as_matrix(a)

    def degrees(self) -> tuple[int, ...]:
        """Row sums of the adjacency matrix; a loop counts once."""
        return tuple(sum(row) for row in self.adj)

    def loops(self) -> tuple[int, ...]:
        return tuple(self.adj[i][i] for i in range(self.n))

    def relabel(self, perm: Sequence[int]) -> "LoopyGraph":
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        n = self.n
        a = self.adj
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                b[perm[i]][perm[j]] = a[i][j]
        return LoopyGraph.from_adjacency(b)

    def compact(self) -> str:
        return to_compact(self)


def adjacency(g: LoopyGraph) -> Matrix:
    return g.adj


# -- signed permutations -----------------------------------------------------

@dataclass(frozen=True)
class SignedPermutation:
    """The matrix S = P D sending e_i to signs[i] * e_{perm[i]}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of 0..{n - 1}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a +-1 vector matching perm")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    def matrix(self) -> Matrix:
        n = len(self.perm)
        s = [[0] * n for _ in range(n)]
        for i, (pi, si) in enumerate(zip(self.perm, self.signs)):
            s[pi][i] = si
        return as_matrix(s)


def apply_signed_perm(s: SignedPermutation, x: Sequence[Sequence[int]],
                      z: Sequence[int]) -> tuple[Matrix, Vector]:
    """Return (S X S^T, S z)."""
    n = len(s.perm)
    if len(x) != n or len(z) != n:
        raise DimensionMismatch(f"signed permutation of size {n} applied to size {len(x)}/{len(z)}")
    perm, signs = s.perm, s.signs
    y = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            y[perm[i]][perm[j]] = signs[i] * signs[j] * x[i][j]
    eta = [0] * n
    for i in range(n):
        eta[perm[i]] = signs[i] * z[i]
    return as_matrix(y), tuple(eta)


# -- isomorphism -------------------------------------------------------------

def _check_size(n: int, bound: int) -> None:
    if n > bound:
        raise TooLargeError(f"n={n} exceeds the brute-force bound {bound}")


def is_isomorphic(g: LoopyGraph, h: LoopyGraph, bound: int = MAX_BRUTE_FORCE_N) -> bool:
    """Backtracking search for a vertex bijection preserving adjacency and loops.

    Candidates for each image are restricted to vertices with the same
    (degree, loop) signature.
    """
    if g.n != h.n:
        return False
    n = g.n
    _check_size(n, bound)
    if g.bits == h.bits:
        return True
    sig_g = list(zip(g.degrees(), g.loops()))
    sig_h = list(zip(h.degrees(), h.loops()))
    if sorted(sig_g) != sorted(sig_h):
        return False
    a, b = g.adj, h.adj
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or sig_h[c] != sig_g[i]:
                continue
            if all(a[i][k] == b[c][image[k]] for k in range(i)):
                image[i] = c
                used[c] = True
                if extend(i + 1):
                    return True
                used[c] = False
        return False

    return extend(0)


@lru_cache(maxsize=None)
def relabel_tables(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Per permutation, byte lookup tables that relabel a bit encoding.

    For a permutation ``perm`` the relabelled encoding of ``bits`` is the OR
    of ``table[k][(bits >> 8k) & 255]`` over the bytes of ``bits``.
    """
    nb = num_bits(n)
    pos = _positions(n)
    index = {p: k for k, p in enumerate(pos)}
    nbytes = (nb + 7) // 8
    out = []
    for perm in itertools.permutations(range(n)):
        # bit at shift s (from the least significant end) moves to shift dest[s]
        dest = [0] * nb
        for k, (i, j) in enumerate(pos):
            a, b = sorted((perm[i], perm[j]))
            dest[nb - 1 - k] = nb - 1 - index[(a, b)]
        tables = []
        for byte in range(nbytes):
            tab = []
            for value in range(256):
                acc = 0
                for bit in range(8):
                    s = 8 * byte + bit
                    if value >> bit & 1 and s < nb:
                        acc |= 1 << dest[s]
                tab.append(acc)
            tables.append(tuple(tab))
        out.append(tuple(tables))
    return tuple(out)


def orbit(n: int, bits: int) -> set[int]:
    """All encodings obtained by relabelling the graph ``(n, bits)``."""
    result = set()
    for tables in relabel_tables(n):
        acc = 0
        x = bits
        for tab in tables:
            acc |= tab[x & 255]
            x >>= 8
        result.add(acc)
    return result


def canonical_form(g: LoopyGraph, bound: int = MAX_BRUTE_FORCE_N) -> int:
    """Smallest encoding among all relabellings of ``g``."""
    _check_size(g.n, bound)
    if g.n <= 6:
        return min(orbit(g.n, g.bits))
    return min(g.relabel(p).bits for p in itertools.permutations(range(g.n)))


def enumerate_all(n: int, start: int = 0, stop: int | None = None) -> Iterator[LoopyGraph]:
    """Every labelled loopy graph on ``n`` vertices, by increasing encoding.

    ``start``/``stop`` restrict to an encoding range so the stream can be split.
    """
    total = 1 << num_bits(n)
    stop = total if stop is None else min(stop, total)
    for bits in range(start, stop):
        yield LoopyGraph(n, bits)


# -- text formats ------------------------------------------------------------

def to_compact(g: LoopyGraph) -> str:
    width = max(1, (num_bits(g.n) + 3) // 4)
    return f"{g.n}:{g.bits:0{width}x}"


def from_compact(text: str) -> LoopyGraph:
    text = text.strip()
    try:
        n_str, hex_str = text.split(":")
        n = int(n_str)
        bits = int(hex_str, 16)
    except ValueError:
        raise GraphFormatError(f"bad compact encoding {text!r}; expected 'n:hex'") from None
    if n < 1:
        raise GraphFormatError("vertex count must be positive")
    if bits >= 1 << num_bits(n):
        raise GraphFormatError(f"encoding {hex_str} too large for n={n}")
    return LoopyGraph(n, bits)


def parse_matrix_text(text: str, binary: bool = False) -> Matrix:
    """Parse the ``n`` + n rows format into a symmetric integer matrix.

    With ``binary`` set every entry must be 0 or 1.
    """
    lines = [(k + 1, ln) for k, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input", line=1)
    lineno, first = lines[0]
    try:
        n = int(first.strip())
    except ValueError:
        raise GraphFormatError(f"expected vertex count, got {first.strip()!r}", lineno, 1) from None
    if n < 1:
        raise GraphFormatError("vertex count must be positive", lineno, 1)
    body = lines[1:]
    if len(body) != n:
        raise GraphFormatError(f"expected {n} matrix rows, found {len(body)}",
                               body[-1][0] if body else lineno)
    rows = []
    for lineno, ln in body:
        row = []
        pos = 0
        for tok in ln.split():
            start = ln.index(tok, pos)
            pos = start + len(tok)
            col = start + 1
            try:
                x = int(tok)
            except ValueError:
                raise GraphFormatError(f"not an integer: {tok!r}", lineno, col) from None
            if binary and x not in (0, 1):
                raise GraphFormatError(f"entry {x} is not 0/1", lineno, col)
            row.append(x)
        if len(row) != n:
            raise GraphFormatError(f"expected {n} entries, found {len(row)}", lineno)
        rows.append(row)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise GraphFormatError(
                    f"matrix is not symmetric: entry ({i + 1},{j + 1}) = {rows[i][j]}"
                    f" but ({j + 1},{i + 1}) = {rows[j][i]}", body[i][0])
    return as_matrix(rows)


def parse_graph_text(text: str) -> LoopyGraph:
    return LoopyGraph.from_adjacency(parse_matrix_text(text, binary=True))


def format_matrix_text(m: Sequence[Sequence[int]]) -> str:
    return "\n".join([str(len(m))] + [" ".join(str(x) for x in row) for row in m]) + "\n"


def parse_vector_text(text: str) -> Vector:
    out = []
    for k, ln in enumerate(text.splitlines()):
        if not ln.strip():
            continue
        try:
            out.append(int(ln.strip()))
        except ValueError:
            raise GraphFormatError(f"not an integer: {ln.strip()!r}", k + 1, 1) from None
    return tuple(out)
