"""Command-line interface.

Exit codes: 0 certified / verified / ok, 2 inconclusive or violations found,
1 input or usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import documents
from .certify import (
    NotCospectralError,
    SingularWalkMatrixError,
    certify_combined,
    certify_walk_det,
    construct_q,
    level_prime_check,
    relevant_primes,
)
from .graphs import (
    GraphFormatError,
    LoopyGraph,
    TooLargeError,
    canonical_form,
    from_compact,
    parse_matrix_text,
    parse_vector_text,
)
from .linalg import Matrix, Vector, bareiss_det, ones_vector
from .oracle import (
    MAX_SWEEP_N,
    build_index,
    find_mates,
    load_index,
    satisfaction_frequency,
    save_index,
    verify_theorem,
)
from .spectral import walk_matrix

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2
DEFAULT_MAX_N = 5

_COMPACT = re.compile(r"^\s*\d+:[0-9a-fA-F]+\s*$")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    inline: list[str] = field(default_factory=list)
    vector: str = "ones"
    vector_b: str | None = None
    primes: list[int] | None = None
    combined: bool = False
    long_running: bool = False
    seed: int = 0
    samples: int = 1000
    n: int | None = None
    output: str | None = None
    index: str | None = None
    workers: int = 1

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        primes = None
        if getattr(ns, "primes", None):
            try:
                primes = [int(p) for p in ns.primes.split(",") if p.strip()]
            except ValueError:
                raise InputError(f"bad --primes value {ns.primes!r}") from None
        return cls(
            command=ns.command,
            inputs=list(getattr(ns, "input", None) or []),
            inline=list(getattr(ns, "inline", None) or []),
            vector=getattr(ns, "vector", "ones"),
            vector_b=getattr(ns, "vector_b", None),
            primes=primes,
            combined=getattr(ns, "combined", False),
            long_running=getattr(ns, "long_running", False),
            seed=getattr(ns, "seed", 0),
            samples=getattr(ns, "samples", 1000),
            n=getattr(ns, "n", None),
            output=getattr(ns, "output", None),
            index=getattr(ns, "index", None),
            workers=getattr(ns, "workers", 1),
        )

    def size_bound(self) -> int:
        return MAX_SWEEP_N if self.long_running else DEFAULT_MAX_N


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _parse_matrix_source(text: str, label: str) -> Matrix:
    try:
        if _COMPACT.match(text):
            return from_compact(text).adj
        return parse_matrix_text(text)
    except GraphFormatError as exc:
        raise InputError(f"{label}: {exc}") from None


def load_matrices(cfg: RunConfig) -> list[Matrix]:
    mats = [_parse_matrix_source(_read(p), p) for p in cfg.inputs]
    for text in cfg.inline:
        try:
            mats.append(from_compact(text).adj)
        except GraphFormatError as exc:
            raise InputError(f"--inline: {exc}") from None
    return mats


def load_vector(spec: str, n: int) -> Vector:
    if spec == "ones":
        return ones_vector(n)
    try:
        v = parse_vector_text(_read(spec))
    except GraphFormatError as exc:
        raise InputError(f"{spec}: {exc}") from None
    if len(v) != n:
        raise InputError(f"{spec}: vector has {len(v)} entries, matrix has dimension {n}")
    return v


def load_graph(cfg: RunConfig) -> LoopyGraph:
    mats = load_matrices(cfg)
    if len(mats) != 1:
        raise InputError(f"expected exactly one input graph, got {len(mats)}")
    try:
        return LoopyGraph.from_adjacency(mats[0])
    except GraphFormatError as exc:
        raise InputError(f"input is not a 0/1 graph: {exc}") from None


def _emit(cfg: RunConfig, doc: dict) -> None:
    text = documents.dumps(doc)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------

def cmd_certify(cfg: RunConfig) -> int:
    mats = load_matrices(cfg)
    if len(mats) != 1:
        raise InputError(f"certify takes exactly one input, got {len(mats)}")
    x = mats[0]
    z = load_vector(cfg.vector, len(x))
    cert = certify_combined(x, z) if cfg.combined else certify_walk_det(x, z)
    _emit(cfg, documents.certificate_to_doc(cert))
    return EXIT_OK if cert.certified else EXIT_INCONCLUSIVE


def _index_for(cfg: RunConfig, n: int):
    if cfg.index and Path(cfg.index).exists():
        idx = load_index(cfg.index)
        if idx.n != n:
            raise InputError(f"{cfg.index}: index is for n={idx.n}, graph has n={n}")
        return idx
    idx = build_index(n, method="direct" if n <= DEFAULT_MAX_N else "orbit",
                      workers=cfg.workers)
    if cfg.index:
        save_index(idx, cfg.index)
    return idx


def cmd_mates(cfg: RunConfig) -> int:
    g = load_graph(cfg)
    if g.n > cfg.size_bound():
        hint = "" if cfg.long_running or g.n > MAX_SWEEP_N else " (use --long-running)"
        raise TooLargeError(f"n={g.n} exceeds the sweep bound {cfg.size_bound()}{hint}")
    idx = _index_for(cfg, g.n)
    seen = set()
    reps = []
    for h in find_mates(g, idx):
        c = canonical_form(h)
        if c not in seen:
            seen.add(c)
            reps.append(h.compact())
    _emit(cfg, documents.mates_to_doc(g.compact(), reps))
    return EXIT_OK


def _require_n(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise InputError("--n is required")
    if cfg.n < 1:
        raise InputError("--n must be positive")
    return cfg.n


def cmd_verify(cfg: RunConfig) -> int:
    n = _require_n(cfg)
    if n > cfg.size_bound():
        hint = "" if cfg.long_running or n > MAX_SWEEP_N else " (use --long-running)"
        raise TooLargeError(f"n={n} exceeds the sweep bound {cfg.size_bound()}{hint}")
    rule = "combined" if cfg.combined else "walk_det"
    rep = verify_theorem(n, workers=cfg.workers, rule=rule)
    _emit(cfg, documents.report_to_doc(rep, rule))
    return EXIT_OK if rep.holds else EXIT_INCONCLUSIVE


def cmd_frequency(cfg: RunConfig) -> int:
    n = _require_n(cfg)
    if cfg.samples < 1:
        raise InputError("--samples must be >= 1")
    freq = satisfaction_frequency(n, cfg.samples, cfg.seed)
    _emit(cfg, documents.frequency_to_doc(n, cfg.samples, cfg.seed, freq))
    return EXIT_OK


def cmd_diagnose(cfg: RunConfig) -> int:
    mats = load_matrices(cfg)
    if len(mats) != 2:
        raise InputError(f"diagnose takes two inputs, got {len(mats)}")
    x, y = mats
    if len(x) != len(y):
        raise InputError(f"inputs have dimensions {len(x)} and {len(y)}")
    z = load_vector(cfg.vector, len(x))
    eta = load_vector(cfg.vector_b or cfg.vector, len(y))
    try:
        q = construct_q((x, z), (y, eta))
    except (NotCospectralError, SingularWalkMatrixError) as exc:
        raise InputError(str(exc)) from None
    det = bareiss_det(walk_matrix(x, z))
    primes = cfg.primes if cfg.primes is not None else relevant_primes(det)
    traces = [level_prime_check((x, z), (y, eta), p, q) for p in primes]
    doc = documents.diagnosis_to_doc(q, det, traces)
    _emit(cfg, doc)
    return EXIT_OK if doc["consistent"] else EXIT_INCONCLUSIVE


COMMANDS = {
    "certify": cmd_certify,
    "mates": cmd_mates,
    "verify": cmd_verify,
    "frequency": cmd_frequency,
    "diagnose": cmd_diagnose,
}


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1; argparse's default 2 means "inconclusive" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="loopspec",
        description="Certify generalized spectral characterization of graphs with loops.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("input", nargs="*",
                           help="matrix file ('n' then n rows), compact 'n:hex' file, or '-'")
            p.add_argument("--inline", action="append", metavar="N:HEX",
                           help="graph in compact encoding; may repeat")
        p.add_argument("--output", "-o", help="write the document here instead of stdout")

    p = sub.add_parser("certify", help="certify one graph or symmetric integer matrix")
    common(p)
    p.add_argument("--vector", default="ones", help="'ones' or a file with one integer per line")
    p.add_argument("--combined", action="store_true",
                   help="use the walk-determinant + discriminant rule")

    p = sub.add_parser("mates", help="list non-isomorphic cospectral mates")
    common(p)
    p.add_argument("--long-running", action="store_true", help="allow n = 6")
    p.add_argument("--index", help="fingerprint index file to reuse or create")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="exhaustively verify the certificate at size n")
    common(p, inputs=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--combined", action="store_true")
    p.add_argument("--long-running", action="store_true", help="allow n = 6")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("frequency", help="share of random loopy graphs with square-free det W")
    common(p, inputs=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("diagnose", help="trace the level bound for a cospectral pair")
    common(p)
    p.add_argument("--vector", default="ones", help="vector for the first input")
    p.add_argument("--vector-b", help="vector for the second input (defaults to --vector)")
    p.add_argument("--primes", help="comma-separated primes (default: primes dividing det W)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (InputError, TooLargeError, GraphFormatError) as exc:
        print(f"loopspec {ns.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
