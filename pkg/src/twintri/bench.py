"""Benchmark harness: sweeps of generated instances with instrumented counts.

Each instance is generated deterministically, given a contraction
sequence (the cotree's width-0 sequence when the family carries one,
greedy search otherwise), counted, and cross-checked against the
brute-force oracle.  Wall-clock times are recorded for orientation, but
scaling claims should be read off the operation counters, which are
machine independent.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, fields

from .counting import InternalInvariantError, count_triangles
from .generate import generate_graph, greedy_sequence, twin_sequence
from .oracle import count_naive


@dataclass
class BenchRecord:
    family: str
    n: int
    m: int
    p: float
    seed: int
    strategy: str
    width: int
    triangles: int
    wall_time_count: float
    wall_time_oracle: float
    contractions: int
    aux_updates: int
    one_neighbor_calls: int
    two_neighbor_pair_visits: int
    red_wedge_visits: int
    graph_update_work: int
    sum_red_degree_sq: int


CSV_FIELDS = [f.name for f in fields(BenchRecord)]


def parse_sweep(text: str) -> list[dict]:
    """Expand one sweep spec into concrete instance descriptors.

    Grammar: FAMILY[:key=value[:key=value...]] where a value may hold
    several variants separated by '/'.  Numeric keys: n, p, rows, cols,
    block, seeds (number of seeds per point, default 1).

    Example: "gnp:n=30/60:p=0.1/0.3:seeds=2" yields 8 instances.
    """
    parts = text.split(":")
    family = parts[0]
    if not family:
        raise ValueError("sweep spec needs a family name")
    axes = {}
    for piece in parts[1:]:
        if "=" not in piece:
            raise ValueError(f"bad sweep field {piece!r}, expected key=value")
        key, _, value = piece.partition("=")
        axes[key] = value.split("/")
    seeds = int(axes.pop("seeds", ["1"])[0])
    if seeds < 1:
        raise ValueError("seeds must be positive")

    def convert(key, raw):
        return float(raw) if key == "p" else int(raw)

    combos = [{}]
    for key, values in axes.items():
        combos = [dict(c, **{key: convert(key, v)}) for c in combos for v in values]
    out = []
    for combo in combos:
        for s in range(seeds):
            out.append({"family": family, "params": combo, "seed_offset": s})
    return out


def run_instance(family: str, params: dict, seed: int) -> BenchRecord:
    params = dict(params)
    block = params.pop("block", None)
    if block is not None:
        params["block_size"] = block
    graph, cotree = generate_graph(family, seed=seed, **params)
    if cotree is not None:
        seq = twin_sequence(cotree, graph.n)
        strategy = "twin"
    else:
        seq, _ = greedy_sequence(graph)
        strategy = "greedy"
    t0 = time.perf_counter()
    result = count_triangles(graph, seq)
    t1 = time.perf_counter()
    expected = count_naive(graph)
    t2 = time.perf_counter()
    if result.triangles != expected:
        raise InternalInvariantError(
            f"count mismatch on {family} n={graph.n} seed={seed}: "
            f"{result.triangles} != oracle {expected}")
    c = result.counters
    return BenchRecord(
        family=family,
        n=graph.n,
        m=graph.m,
        p=float(params.get("p", 0.0)),
        seed=seed,
        strategy=strategy,
        width=result.width,
        triangles=result.triangles,
        wall_time_count=t1 - t0,
        wall_time_oracle=t2 - t1,
        contractions=c.contractions,
        aux_updates=c.aux_updates,
        one_neighbor_calls=c.one_neighbor_calls,
        two_neighbor_pair_visits=c.two_neighbor_pair_visits,
        red_wedge_visits=c.red_wedge_visits,
        graph_update_work=c.graph_update_work,
        sum_red_degree_sq=result.sum_red_degree_sq,
    )


def run_sweeps(specs: list[str], base_seed: int = 0) -> list[BenchRecord]:
    records = []
    for spec in specs:
        for item in parse_sweep(spec):
            records.append(run_instance(
                item["family"], item["params"], base_seed + item["seed_offset"]))
    return records


def write_csv(records: list[BenchRecord], handle):
    writer = csv.writer(handle)
    writer.writerow(CSV_FIELDS)
    for rec in records:
        writer.writerow([getattr(rec, name) for name in CSV_FIELDS])
