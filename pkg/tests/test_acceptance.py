"""Acceptance criteria, one check function per criterion.

Each ``criterion_*`` function raises AssertionError on failure. Under pytest
the conftest prints one PASS/FAIL line per criterion at the end of the run;
``python tests/test_acceptance.py`` runs them directly and prints the same.
"""
from __future__ import annotations

import copy
import json
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List

import pytest

from neronjumps.corpus import (
    CTAME_MIDDLE,
    CTAME_SIDE,
    DESCRIPTORS,
    T1,
    T2,
    grid_sequences,
    groups,
    lattices,
    permutation_lattices,
    torus_lattices,
    zeta_input_for,
    zeta_inputs,
)
from neronjumps.glattice import (
    augmentation_ideal,
    flasque_resolve,
    is_flasque,
    norm_one_character,
    parse_group,
    regular,
    tate_cohomology,
    trivial,
    verify_resolution,
)
from neronjumps.jumps import (
    JumpMultiset,
    Nu1,
    c_tame,
    check_ctame_additivity,
    check_ord_recurrence,
    d_jumps_of,
    descriptor_from_json,
    e_of,
    jumps_of,
    threshold,
)
from neronjumps.oracle import run_cell
from neronjumps.weights import WeightMultiset, quartic_weight_doubling
from neronjumps.zeta import tails_have_ctame_slope, verify_rationality, zeta_closed_form, zeta_truncated

GOLDEN = Path(__file__).parent / "golden"
F = Fraction


def _timed(budget: float, fn: Callable[[], None]) -> float:
    t = time.perf_counter()
    fn()
    elapsed = time.perf_counter() - t
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
    return elapsed


# ---- suites that compare against golden data (reused by the negative controls) ----

def oracle_grid_suite(golden: Dict[str, List[int]]) -> List[str]:
    """Mismatches between DVR elementary divisors and the golden d-jumps."""
    bad = []
    for key in sorted(golden, key=lambda k: tuple(map(int, k.split(",")))):
        e, f, d = map(int, key.split(","))
        cell = run_cell(e, f, d)
        if cell.status != "PASS":
            bad.append(cell.line())
        elif list(cell.got) != golden[key]:
            bad.append(f"{key}: got {list(cell.got)} want {golden[key]}")
    return bad


def zeta_suite(golden: List[dict]) -> List[str]:
    bad = []
    for item in golden:
        z = zeta_input_for(descriptor_from_json(item["descriptor"]), item["p"])
        closed = zeta_closed_form(z)
        tails = [[t.alpha, t.A, t.B] for t in closed.tails]
        if tails != item["tails"]:
            bad.append(f"{item['name']}: tails {tails} want {item['tails']}")
        trunc = zeta_truncated(z, 60)
        for k, want in item["coefficients"].items():
            got = trunc.coefficient(int(k)).to_json()
            if got != want:
                bad.append(f"{item['name']}: x^{k} coefficient {got} want {want}")
        if not verify_rationality(z, 60, closed):
            bad.append(f"{item['name']}: closed form does not re-expand")
    return bad


def _lattice_by_name(G, name):
    return {
        "trivial": trivial, "regular": regular,
        "augmentation": augmentation_ideal, "norm-one": norm_one_character,
    }[name](G)


def tate_suite(golden: List[dict]) -> List[str]:
    bad = []
    for item in golden:
        G = parse_group(item["group"])
        H = G.whole() if item["subgroup"] == "whole" else G.trivial_subgroup()
        got = list(tate_cohomology(G, H, _lattice_by_name(G, item["lattice"]), item["degree"]).invariant_factors)
        if got != item["factors"]:
            bad.append(f"{item['group']} {item['lattice']} deg {item['degree']}: {got} want {item['factors']}")
    return bad


def _load(name):
    return json.loads((GOLDEN / name).read_text())


# ---- criteria ---------------------------------------------------------------------

def criterion_1():
    """Cokernel oracle grid, exact, < 60 s."""
    golden = _load("oracle_grid.json")
    assert len(golden) == 372
    bad: List[str] = []
    _timed(60, lambda: bad.extend(oracle_grid_suite(golden)))
    assert not bad, bad[:5]


def _limit_check(entry) -> List[str]:
    bad = []
    J = sorted(jumps_of(entry.descriptor).values())
    for seq in grid_sequences(entry):
        assert all(b % a == 0 for a, b in zip(seq, seq[1:])) and all(d % entry.p for d in seq)
        prev = None
        for d in seq:
            dj = sorted(d_jumps_of(entry.descriptor, d, _p(entry)).values())
            approx = [F(x, d) for x in dj]
            for a, j in zip(approx, J):
                if abs(a - j) > F(1, d):
                    bad.append(f"{entry.name} d={d}: |{a} - {j}| > 1/{d}")
            if prev is not None and any(a < b for a, b in zip(approx, prev)):
                bad.append(f"{entry.name} d={d}: not monotone")
            prev = approx
    return bad


def _p(entry):
    return entry.p if not isinstance(entry.descriptor, Nu1) else entry.descriptor.p


def criterion_2():
    """Jump limits along grid sequences, exact, < 5 s."""
    bad: List[str] = []
    _timed(5, lambda: [bad.extend(_limit_check(e)) for e in DESCRIPTORS])
    assert not bad, bad[:5]


def criterion_3():
    """Worked examples, exact, < 1 s."""
    def run():
        assert jumps_of(T1) == JumpMultiset({F(1, 4): 1, F(3, 4): 1})
        assert jumps_of(T2) == JumpMultiset({F(1, 2): 1})
        for d in (5, 9, 13, 17):
            _, target = quartic_weight_doubling(d)
            assert target == WeightMultiset(d, d_jumps_of(T2, d).values())
        assert [c_tame(x) for x in (CTAME_SIDE, CTAME_MIDDLE, CTAME_SIDE)] == [0, 1, 0]
        assert check_ctame_additivity(CTAME_SIDE, CTAME_MIDDLE, CTAME_SIDE) is False
        assert jumps_of(Nu1(2, 3)) == JumpMultiset({0: 2, F(1, 3): 3, F(2, 3): 3})
        assert c_tame(Nu1(2, 3)) == 3

    _timed(1, run)


def criterion_4():
    """ord recurrence over d in (N, 40], q in {1, 2, 3}, < 5 s."""
    bad: List[str] = []
    checked = [0]

    def run():
        for entry in DESCRIPTORS:
            g, p = entry.descriptor, _p(entry)
            e = e_of(g)
            for d in range(threshold(g) + 1, 41):
                for q in (1, 2, 3):
                    if d % p == 0 or (d + q * e) % p == 0:
                        continue
                    checked[0] += 1
                    if not check_ord_recurrence(g, d, q, p):
                        bad.append(f"{entry.name} d={d} q={q}")

    _timed(5, run)
    assert checked[0] > 1000
    assert not bad, bad[:5]


def criterion_5():
    """Zeta rationality at 60 terms with c_tame slopes, < 10 s."""
    bad: List[str] = []

    def run():
        inputs = zeta_inputs()
        assert len(inputs) >= 20
        for z in inputs:
            closed = zeta_closed_form(z)
            res = verify_rationality(z, 60, closed)
            if not res:
                bad.append(f"{z.name}: mismatch at x^{res.first_mismatch}")
            if not tails_have_ctame_slope(z, closed):
                bad.append(f"{z.name}: tail slope differs from c_tame")
        bad.extend(zeta_suite(_load("zeta.json")))

    _timed(10, run)
    assert not bad, bad[:5]


def criterion_6_resolutions():
    """Flasque resolutions of every constructed lattice, < 30 s."""
    bad: List[str] = []

    def run():
        for G in groups():
            assert G.order <= 12
            for L in lattices(G) + permutation_lattices(G):
                r = flasque_resolve(G, L)
                if not (verify_resolution(G, r) and is_flasque(G, r.F) and r.P.is_permutation):
                    bad.append(f"{G.name} {L.name}")
        for name, G, X in torus_lattices():
            r = flasque_resolve(G, X)
            if not verify_resolution(G, r):
                bad.append(name)
        bad.extend(tate_suite(_load("tate.json")))

    _timed(30, run)
    assert not bad, bad[:5]


def _permutation_tate(degree: int) -> List[str]:
    bad = []
    for G in groups():
        for L in permutation_lattices(G):
            for H in G.subgroups():
                t = tate_cohomology(G, H, L, degree)
                if not t.is_trivial:
                    bad.append(f"{G.name} {L.name} |H|={len(H)} deg {degree}: {t}")
    return bad


def criterion_6_permutation_hminus1():
    """Permutation lattices: H^-1 vanishes on every subgroup."""
    bad = _permutation_tate(-1)
    assert not bad, bad[:5]


def criterion_6_permutation_h0():
    """Permutation lattices: H^0 vanishes on every subgroup (as stated)."""
    bad = _permutation_tate(0)
    assert not bad, f"{len(bad)} nonzero groups, e.g. {bad[:3]}"


def _expect_failure(suite, golden, mutate) -> None:
    assert not suite(golden), "clean golden data must pass"
    broken = copy.deepcopy(golden)
    mutate(broken)
    assert suite(broken), "corrupted golden data was not detected"


def criterion_7():
    """Negative controls: one corrupted golden value per suite must fail."""
    grid = {k: v for k, v in _load("oracle_grid.json").items() if k in ("2,1,5", "3,2,7", "1,1,9")}

    def bump_djump(g):
        g["3,2,7"][-1] += 1

    _expect_failure(oracle_grid_suite, grid, bump_djump)

    def bump_tail(g):
        g[1]["tails"][0][1] += 1  # Ind(2,1): A of the first tail

    _expect_failure(zeta_suite, _load("zeta.json"), bump_tail)

    def bump_tate(g):
        g[0]["factors"] = [4]  # C2 trivial H^0 is Z/2

    _expect_failure(tate_suite, _load("tate.json"), bump_tate)

    # the CLI golden comparison as well
    import contextlib
    import io
    import tempfile

    from neronjumps.cli import main

    def cli(golden: Path) -> int:
        sink = io.StringIO()
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            return main(["jumps", "induced", "--e", "2", "--f", "3", "--golden", str(golden)])

    good = GOLDEN / "cli_jumps_induced_e2_f3.txt"
    assert cli(good) == 0
    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / "bad.txt"
        bad.write_text(good.read_text().replace("1/2:3", "1/2:2"))
        assert cli(bad) == 1


CRITERIA = [
    (1, "cokernel oracle grid", criterion_1),
    (2, "jump limits", criterion_2),
    (3, "worked examples", criterion_3),
    (4, "ord recurrence", criterion_4),
    (5, "zeta rationality", criterion_5),
    (6, "flasque resolutions", criterion_6_resolutions),
    (6, "permutation lattices, degree -1", criterion_6_permutation_hminus1),
    (6, "permutation lattices, degree 0", criterion_6_permutation_h0),
    (7, "negative controls", criterion_7),
]


@pytest.mark.parametrize("num,label,fn", CRITERIA, ids=[f"c{n}-{lab.replace(' ', '_')}" for n, lab, _ in CRITERIA])
def test_criterion(num, label, fn, criterion_log):
    criterion_log.start(num, label)
    fn()
    criterion_log.passed(num, label)


if __name__ == "__main__":  # pragma: no cover
    import sys

    failed = 0
    for num, label, fn in CRITERIA:
        try:
            fn()
            print(f"criterion {num} ({label}): PASS")
        except AssertionError as exc:
            failed += 1
            print(f"criterion {num} ({label}): FAIL - {exc}")
    sys.exit(1 if failed else 0)
