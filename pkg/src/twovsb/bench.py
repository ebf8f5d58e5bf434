"""Benchmark harness: run the approximation methods over a corpus, write CSV."""

from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import IO, Iterable, Optional, Sequence

from .approx import run_method
from .exact import DEFAULT_MAX_M, DEFAULT_MAX_N, exact_m2vsbss
from .graph import Digraph, from_edge_list
from .sparsify import DeletionOrder


@dataclass
class BenchRow:
    name: str
    n: object
    m: object
    method: str
    result_size: object
    bound: object = ""
    lower_bound: object = ""
    exact_size: object = ""
    ratio: object = ""
    wall_time_ms: object = ""


HEADER = tuple(f.name for f in fields(BenchRow))


def load_corpus(directory: str | Path) -> list[tuple[str, Optional[Digraph], Optional[str]]]:
    """Parse every regular, non-hidden file in ``directory`` (sorted by name)."""
    out = []
    for path in sorted(Path(directory).iterdir()):
        if not path.is_file() or path.name.startswith("."):
            continue
        try:
            out.append((path.stem, from_edge_list(path.read_text()), None))
        except (OSError, ValueError) as exc:
            out.append((path.stem, None, str(exc)))
    return out


def bench(
    corpus: Iterable[tuple[str, Optional[Digraph], Optional[str]]],
    methods: Sequence[str] = ("alg1",),
    orders: Sequence[str] = ("lex",),
    seeds: Sequence[int] = (0,),
    with_exact: bool = False,
    max_n: int = DEFAULT_MAX_N,
    max_m: int = DEFAULT_MAX_M,
    time_limit_ms: Optional[float] = None,
) -> list[BenchRow]:
    rows = []
    for name, g, error in corpus:
        if g is None:
            rows.append(BenchRow(name, "", "", "", f"error: {error}"))
            continue
        exact_size = ""
        if with_exact:
            try:
                ex = exact_m2vsbss(g, max_n, max_m, time_limit_ms)
                if ex.proven_optimal:
                    exact_size = ex.size
            except ValueError as exc:
                rows.append(BenchRow(name, g.n, g.m, "exact", f"error: {exc}"))
                continue
        for method in methods:
            for order in orders:
                for seed in seeds:
                    rows.append(_row(name, g, method, DeletionOrder.parse(order, seed), exact_size))
    return rows


def _row(name, g, method, order, exact_size) -> BenchRow:
    start = time.perf_counter()
    try:
        r = run_method(g, method, order)
    except ValueError as exc:
        return BenchRow(name, g.n, g.m, method, f"error: {exc}")
    elapsed = (time.perf_counter() - start) * 1000.0
    lower = 2 * g.n
    ratio = r.size / (exact_size if exact_size != "" else lower)
    return BenchRow(
        name, g.n, g.m, method, r.size, r.bound, lower, exact_size,
        f"{ratio:.6f}", f"{elapsed:.3f}",
    )


def write_csv(rows: Iterable[BenchRow], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(astuple(row))
