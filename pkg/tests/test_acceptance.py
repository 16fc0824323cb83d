"""Acceptance gate: ten criteria, each with its time limit.

Every test prints one ``criterion N: PASS|FAIL`` line (visible under plain
``pytest`` too). Run ``python tests/test_acceptance.py`` for just the summary.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import drawing_corpus, k4_with_crossing, optimal_corpus, plane_cube, random_drawings  # noqa: E402
from oneplanar.builder import (  # noqa: E402
    barrier_cycle_search,
    classify_3matching,
    generate_quadrangulation,
    make_quadrangulation,
    optimal_from_quadrangulation,
    three_matching_witness,
)
from oneplanar.cli import run  # noqa: E402
from oneplanar.discharge import TOTAL, apply_rules, initial_charge  # noqa: E402
from oneplanar.drawing import (  # noqa: E402
    alternation_check,
    build_associated,
    face_profile,
    false_run_scan,
    q_of,
    validate_drawing,
)
from oneplanar.errors import ModelInconsistency, NotThreeConnected, ParityViolation  # noqa: E402
from oneplanar.fileformat import write_drawing  # noqa: E402
from oneplanar.graph import Graph, vertex_connectivity  # noqa: E402
from oneplanar.matching import (  # noqa: E402
    count_perfect_matchings,
    dean_certificate,
    has_perfect_matching,
    is_k_factor_critical,
    is_n_extendable,
    maximum_matching,
)
from oracles import (  # noqa: E402
    brute_matching_number,
    brute_pm_count,
    complete,
    double_factorial_odd,
    random_suite,
)


@contextmanager
def criterion(number: int, title: str, limit: float, capsys=None):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        detail = f"{elapsed:.2f}s / limit {limit:g}s"
        assert ok, f"took {elapsed:.2f}s, limit {limit:g}s"
    except AssertionError as exc:
        detail = detail or str(exc).splitlines()[0]
        raise
    finally:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})"
        if capsys is not None:
            with capsys.disabled():
                print("\n" + line)
        else:
            print(line)


def _family(name):
    return ("cube", None) if name == "cube" else ("pseudo_double_wheel", int(name[3:]))


@pytest.fixture(scope="module")
def optimal():
    return optimal_corpus()


def test_01_charge_identity(capsys):
    drawings = [plane_cube(), k4_with_crossing(), *optimal_corpus().values()]
    with criterion(1, "charge totals are exactly -20", 1.0, capsys):
        for d in drawings:
            a = build_associated(d)
            c = initial_charge(a)
            assert c.total() == TOTAL
            assert apply_rules(a, c).total() == TOTAL


def test_02_optimal_construction(capsys):
    with criterion(2, "optimal construction from quadrangulations", 1.0, capsys):
        for name in ["cube"] + [f"pdw{n}" for n in range(3, 9)]:
            h = generate_quadrangulation(*_family(name))
            d = optimal_from_quadrangulation(h)
            assert d.graph.m == 4 * d.n - 8
            assert q_of(d) == h.graph
            assert alternation_check(d).passed
            assert all(x % 2 == 0 for x in d.graph.degrees())
        k23 = Graph(5, tuple((a, b) for a in (0, 1) for b in (2, 3, 4)))
        with pytest.raises(NotThreeConnected):
            optimal_from_quadrangulation(make_quadrangulation(k23))


def test_03_even_order_optimal_is_1_extendable(optimal, capsys):
    with criterion(3, "even-order optimal drawings are 1-extendable", 10.0, capsys):
        checked = 0
        for d in optimal.values():
            if d.n % 2 == 0 and d.n <= 16:
                assert is_n_extendable(d.graph, 1).extendable
                checked += 1
        assert checked == 6


def test_04_optimal_not_3_extendable(optimal, capsys):
    with criterion(4, "optimal drawings are not 3-extendable, witness verified", 30.0, capsys):
        for d in optimal.values():
            if d.n % 2 or d.n < 8:
                continue
            assert not is_n_extendable(d.graph, 3).extendable
            m = three_matching_witness(d)
            assert not has_perfect_matching(d.graph, frozenset(d.graph.matching_vertices(m)))


def test_05_barrier_cycle_on_cocktail_party(optimal, capsys):
    d = optimal["cube"]
    with criterion(5, "barrier 6-cycle blocks the 3-matching witness", 5.0, capsys):
        assert len(barrier_cycle_search(d, 6)) >= 1
        m = three_matching_witness(d)
        c = classify_3matching(d, m)
        assert c.kind == "blocked_by_barrier"
        assert set(c.barrier.cycle) == set(d.graph.matching_vertices(m))


def test_06_randomized_implication_cross_checks(capsys):
    suite = random_suite()
    assert len(suite) == 500
    with criterion(6, "extendability and criticality implications on 500 graphs", 120.0, capsys):
        violations = []
        for idx, g in enumerate(suite):
            kappa = vertex_connectivity(g)
            mu = len(maximum_matching(g))
            prev = True
            for n in range(0, (g.n - 2) // 2 + 1):
                if n > mu:
                    break
                ext = is_n_extendable(g, n).extendable
                if ext and n >= 1:
                    if dean_certificate(g, n) is not None or kappa < n + 1 or not prev:
                        violations.append((idx, "ext", n))
                prev = ext
            crit = {}
            for k in range(g.n % 2, g.n, 2):
                crit[k] = is_k_factor_critical(g, k).critical
                if crit[k] and k >= 2 and (not crit[k - 2] or kappa < k):
                    violations.append((idx, "crit", k))
        assert violations == []


def test_07_matching_oracles(capsys):
    suite = random_suite()
    with criterion(7, "perfect-matching counts and maximum matchings vs oracles", 60.0, capsys):
        for k in range(1, 6):
            assert count_perfect_matchings(complete(2 * k)) == double_factorial_odd(k)
        small = [g for g in suite if g.n <= 10]
        assert small
        for g in small:
            assert count_perfect_matchings(g) == brute_pm_count(g)
        for g in suite:
            assert len(maximum_matching(g)) >= brute_matching_number(g)


def test_08_cocktail_party_benchmark(optimal, capsys):
    g = optimal["cube"].graph
    with criterion(8, "cube-derived graph: 2-ext, not 3-ext, 4-factor-critical", 10.0, capsys):
        assert is_n_extendable(g, 2).extendable
        assert not is_n_extendable(g, 3).extendable
        assert is_k_factor_critical(g, 4).critical


def test_09_structural_audits(capsys):
    drawings = list(drawing_corpus().values()) + random_drawings()
    with criterion(9, "min degree, false-run scan and parity audits corpus-wide", 10.0, capsys):
        errors = []
        for d in drawings:
            if not validate_drawing(d).valid:
                continue
            assert d.graph.min_degree() <= 7
            a = build_associated(d)
            try:
                false_run_scan(a, d.graph)
                face_profile(a)
            except (ModelInconsistency, ParityViolation) as exc:
                errors.append(exc)
        assert errors == []


def test_10_non5ext_monitor(tmp_path, capsys):
    drawings = list(drawing_corpus().values()) + random_drawings()
    with criterion(10, "certify-non5ext finds a certificate everywhere", 60.0, capsys):
        missing = []
        for i, d in enumerate(drawings):
            path = tmp_path / f"d{i}.g"
            write_drawing(d, path)
            import io

            if run(["certify-non5ext", str(path)], io.StringIO()) != 0:
                missing.append(i)
        assert missing == []


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
