"""Benchmark suites that regenerate the published error tables."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .approx import DEFAULT_INTERVAL, as_target, error_norm, interpolate
from .exceptions import NptpError, ParameterError
from .functions import resolve_function
from .mapping import SineMap
from .params import DEFAULT_SEED, adaptive_p, fixed_p
from .quadrature import integrate, integrate_interval, nptp_quad_rule

log = logging.getLogger(__name__)

APPROX_METHODS = ("cheb", "nptp1", "nptp2")
QUAD_METHODS = ("legendre-quad", "nptp-quad")
METHODS = APPROX_METHODS + QUAD_METHODS
CSV_HEADER = ("function", "method", "n", "p", "value")


@dataclass(frozen=True)
class BenchSpec:
    function: str
    methods: tuple
    n_list: tuple
    eps: float = 1e-15
    interval: tuple = DEFAULT_INTERVAL
    seed: int = DEFAULT_SEED
    check_count: int = 100

    def __post_init__(self):
        if not self.n_list or any(int(n) < 1 for n in self.n_list):
            raise ParameterError("n_list must be nonempty and positive")
        if not (0.0 < self.eps < 1.0):
            raise ParameterError("eps must lie in (0, 1)")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ParameterError(f"unknown methods: {sorted(unknown)}")


@dataclass(frozen=True)
class BenchRow:
    method: str
    n: int
    p: float
    value: float
    error: str | None = None
    reference: str | None = None


@dataclass
class BenchReport:
    function: str
    rows: list
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow([self.function, r.method, r.n, _fmt(r.p), _fmt(r.value)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"function": self.function, "metadata": self.metadata,
             "rows": [asdict(r) for r in self.rows]},
            indent=2,
        )

    def value(self, method, n):
        for r in self.rows:
            if r.method == method and r.n == n:
                return r.value
        raise KeyError((method, n))


def _fmt(v) -> str:
    return f"{v:.17g}"


def _approx_row(f, method, n, spec):
    if method == "cheb":
        p = 0.0
    elif method == "nptp1":
        p = fixed_p(n, spec.eps)
    else:
        p = adaptive_p(f, n, spec.interval, spec.check_count, spec.seed, spec.eps).p
    approx = interpolate(f, n, SineMap(p), spec.interval)
    return BenchRow(method, n, approx.p, error_norm(approx, f, spec.check_count))


def reference_integral(f, m, interval):
    """Closed form when known, else a 4m-point Legendre rule."""
    a, b = interval
    if f.integral is not None and (a, b) == DEFAULT_INTERVAL:
        return f.integral, "closed-form"
    return integrate_interval(f, interval, 4 * m, SineMap(0.0)), f"legendre-{4 * m}"


def _quad_row(f, method, m, spec):
    p = 0.0 if method == "legendre-quad" else fixed_p(m, spec.eps)
    exact, ref = reference_integral(f, m, spec.interval)
    if tuple(spec.interval) == DEFAULT_INTERVAL:
        approx = integrate(nptp_quad_rule(m, SineMap(p)), f)
    else:
        approx = integrate_interval(f, spec.interval, m, SineMap(p))
    return BenchRow(method, m, p, abs(approx - exact), reference=ref)


def run_bench(spec: BenchSpec) -> BenchReport:
    """Evaluate every (method, n) cell; failures become rows with an error marker."""
    f = resolve_function(spec.function)
    rows = []
    for method in sorted(spec.methods):
        for n in sorted(int(v) for v in spec.n_list):
            try:
                if method in APPROX_METHODS:
                    row = _approx_row(f, method, n, spec)
                else:
                    row = _quad_row(f, method, n, spec)
            except NptpError as exc:
                log.warning("%s %s n=%d failed: %s", spec.function, method, n, exc)
                row = BenchRow(method, n, math.nan, math.nan, error=str(exc))
            rows.append(row)
    metadata = {
        "seed": spec.seed,
        "eps": spec.eps,
        "interval": list(spec.interval),
        "check_count": spec.check_count,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    return BenchReport(spec.function, rows, metadata)


# Table name -> spec. eps per table is the value that reproduces the
# bracketed p values printed with it.
PAPER_SUITE = {
    "example1": BenchSpec("example1", APPROX_METHODS, (100, 200, 400), eps=1e-15),
    "example2": BenchSpec("example2", APPROX_METHODS, (40, 50, 60), eps=1e-14),
    "example3": BenchSpec("example3", APPROX_METHODS, (10, 20, 40), eps=1e-14),
    "example4": BenchSpec("example4", APPROX_METHODS, (20, 40, 80), eps=1e-14),
    "example5_nptp": BenchSpec("example5", ("nptp1",), (220, 240, 260), eps=1e-14),
    "example5_cheb": BenchSpec("example5", ("cheb",), (320, 340, 360), eps=1e-14),
    "quad1": BenchSpec("quad1", QUAD_METHODS, (200, 300, 500), eps=1e-5),
    "quad2": BenchSpec("quad2", QUAD_METHODS, (180, 190, 200, 250, 270, 290), eps=1e-15),
}


def run_suite(name: str, out_dir) -> list:
    if name != "paper":
        raise ParameterError(f"unknown suite {name!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for table, spec in PAPER_SUITE.items():
        report = run_bench(spec)
        path = out / f"{table}.csv"
        path.write_text(report.to_csv(), newline="")
        written.append(path)
    return written
