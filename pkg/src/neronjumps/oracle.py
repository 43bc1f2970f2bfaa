"""Cross-check of closed-form d-jumps against the DVR elementary-divisor oracle."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import lcm
from typing import Iterator, List, Optional, Tuple

from .dvr import build_induced_lie_matrix, build_nu1_lie_matrix, is_prime, snf_over_dvr
from .errors import NeronJumpsError, RootOfUnityError, UnsupportedInput
from .jumps import Nu1, d_jumps_of


def auto_q(e: int, d: int) -> int:
    """Smallest prime q with q = 1 mod lcm(e, d)."""
    m = lcm(e, d)
    q = m + 1
    while not is_prime(q):
        q += m
    return q


def expected_exponents(e: int, f: int, d: int) -> Tuple[int, ...]:
    """floor(d i / e) for i < e, each f times, in units of 1/d."""
    return tuple(sorted((d * i) // e for i in range(e) for _ in range(f)))


@dataclass(frozen=True)
class OracleCell:
    e: int
    f: int
    d: int
    q: int
    status: str  # PASS | FAIL | SKIPPED
    expected: Tuple[int, ...] = ()
    got: Tuple[int, ...] = ()
    message: str = ""

    def line(self) -> str:
        head = f"e={self.e} f={self.f} d={self.d} q={self.q}: {self.status}"
        if self.status == "PASS":
            return head
        if self.status == "SKIPPED":
            return f"{head} ({self.message})"
        return f"{head} expected {list(self.expected)} got {list(self.got)} {self.message}".rstrip()


def run_cell(e: int, f: int, d: int, q: Optional[int] = None, seed: int = 0) -> OracleCell:
    q = auto_q(e, d) if q is None else q
    expected = expected_exponents(e, f, d)
    try:
        m = build_induced_lie_matrix(e, f, d, q, seed=seed)
    except (UnsupportedInput, RootOfUnityError) as exc:
        return OracleCell(e, f, d, q, "SKIPPED", expected, (), str(exc))
    try:
        res = snf_over_dvr(m)
    except NeronJumpsError as exc:
        return OracleCell(e, f, d, q, "FAIL", expected, (), f"{exc.code}: {exc}")
    got = tuple(res.exponents)
    if got != expected:
        return OracleCell(e, f, d, q, "FAIL", expected, got)
    if not res.certified:
        return OracleCell(e, f, d, q, "FAIL", expected, got, "not certified")
    return OracleCell(e, f, d, q, "PASS", expected, got)


def run_nu1_cell(r: int, p: int, d: int, q: Optional[int] = None, seed: int = 0) -> OracleCell:
    """Same comparison for nu_1(r); reported with e=p, f=r."""
    q = p if q is None else q
    expected = tuple(d_jumps_of(Nu1(r, p), d, p).values())
    try:
        res = snf_over_dvr(build_nu1_lie_matrix(r, p, d, q, seed=seed))
    except UnsupportedInput as exc:
        return OracleCell(p, r, d, q, "SKIPPED", expected, (), str(exc))
    got = tuple(res.exponents)
    return OracleCell(p, r, d, q, "PASS" if got == expected and res.certified else "FAIL", expected, got)


def grid_cells(e_max: int, f_max: int, d_max: int, q: Optional[int] = None,
               all_tame: bool = False) -> Iterator[Tuple[int, int, int, Optional[int]]]:
    """Grid points in a fixed order. By default only d = 1 mod e.

    With an explicit q every d is listed, and cells the field cannot handle
    come back SKIPPED from ``run_cell``.
    """
    for e in range(1, e_max + 1):
        for f in range(1, f_max + 1):
            for d in range(1, d_max + 1):
                if not all_tame and d % e != 1 % e:
                    continue
                yield e, f, d, q


def _run(args) -> OracleCell:
    e, f, d, q, seed = args
    return run_cell(e, f, d, q, seed)


@dataclass
class GridReport:
    cells: List[OracleCell] = field(default_factory=list)

    @property
    def failed(self) -> List[OracleCell]:
        return [c for c in self.cells if c.status == "FAIL"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def counts(self) -> Tuple[int, int, int]:
        s = [c.status for c in self.cells]
        return s.count("PASS"), s.count("FAIL"), s.count("SKIPPED")


def oracle_grid(e_max: int, f_max: int, d_max: int, q: Optional[int] = None,
                jobs: int = 1, seed: int = 0, all_tame: bool = False) -> GridReport:
    """Run every grid cell; results keep the input order whatever ``jobs`` is."""
    tasks = [(e, f, d, qq, seed) for e, f, d, qq in grid_cells(e_max, f_max, d_max, q, all_tame)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            cells = list(ex.map(_run, tasks, chunksize=8))
    else:
        cells = [_run(t) for t in tasks]
    return GridReport(cells)
