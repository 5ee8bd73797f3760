"""Exit criteria.  Each test carries a ``criterion`` marker; the terminal summary
prints one PASS/FAIL line per criterion."""

import io
import json
import math
import random
import time

import pytest

from maxdenum import (
    bezout,
    ceil_div,
    denumerant,
    dmax_bezout,
    dmax_ceiling,
    dmax_min_h,
    dmax_semigroup_general,
    gmn_decompose,
    maximally_reduced_elements,
    new_semigroup,
    reduced_structure,
    two_gen_contains,
)
from maxdenum.cli import cmd_dmax, cmd_factor, cmd_reduced, cmd_table, main, sweep_triples
from maxdenum.embdim3 import bezout_formula

from oracles import count_recursive

criterion = pytest.mark.criterion


def best_time(fn, repeat=5):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return value, best


def run_json(*argv):
    out = io.StringIO()
    code = main([*argv, "--json"], stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())


@criterion(1, "factor 7,8,13 48 reproduces the three factorizations of 48")
def test_example_48():
    code, r = run_json("factor", "7,8,13", "48")
    assert code == 0
    assert {tuple(c) for c in r["factorizations"]} == {(0, 6, 0), (5, 0, 1), (2, 1, 2)}
    assert {tuple(c) for c in r["maximal_factorizations"]} == {(0, 6, 0), (5, 0, 1)}
    assert r["denumerant"] == 3
    assert r["dmax_element"] == 2
    assert r["maximally_reduced"] is True
    _, elapsed = best_time(lambda: cmd_factor([7, 8, 13], 48, False))
    assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


EXAMPLE_2_5 = {
    0: {(0, 0, 0, 0)},
    22: {(0, 2, 0, 0), (1, 0, 0, 1)},
    26: {(0, 0, 2, 0), (0, 1, 0, 1)},
    33: {(0, 3, 0, 0), (1, 0, 2, 0), (1, 1, 0, 1)},
    37: {(0, 1, 2, 0), (0, 2, 0, 1), (1, 0, 0, 2)},
    44: {(1, 2, 0, 1), (1, 1, 2, 0), (0, 4, 0, 0), (2, 0, 0, 2)},
}


@criterion(2, "reduced 7,11,13,15 lists the six reduced elements; dmax = 4")
def test_example_7_11_13_15():
    code, r = run_json("reduced", "7,11,13,15")
    assert code == 0
    got = {e["element"]: {tuple(c) for c in e["maximal_factorizations"]}
           for e in r["reduced_elements"]}
    assert got == EXAMPLE_2_5
    assert [e["element"] for e in r["reduced_elements"]] == [0, 22, 26, 33, 37, 44]
    code, d = run_json("dmax", "7,11,13,15", "--method", "general")
    assert (code, d["dmax"], d["method"]) == (0, 4, "general")
    _, elapsed = best_time(lambda: (cmd_reduced([7, 11, 13, 15]),
                                    cmd_dmax([7, 11, 13, 15], "general")))
    assert elapsed < 0.1, f"{elapsed * 1e3:.1f} ms"


EXAMPLE_4_5 = {(8, 9): 4, (8, 10): 3, (8, 11): 2, (8, 12): 2, (8, 13): 2,
               (9, 10): 2, (9, 12): 2, (10, 11): 2}


@criterion(3, "table --multiplicity 7 --max-gen 13 --basic-only matches the multiplicity-7 list")
def test_multiplicity_seven_table():
    code, r = run_json("table", "--multiplicity", "7", "--max-gen", "13", "--basic-only")
    assert code == 0
    got = {(row["a2"], row["a3"]): row["dmax"] for row in r["table"]}
    assert set(EXAMPLE_4_5) <= set(got)
    assert {k: v for k, v in got.items() if v > 1} == EXAMPLE_4_5
    assert all(v == 1 for k, v in got.items() if k not in EXAMPLE_4_5)
    _, elapsed = best_time(lambda: cmd_table(7, 13, True), repeat=3)
    assert elapsed < 1.0


@pytest.fixture(scope="module")
def sweep():
    return list(sweep_triples(25, 60))


@criterion(4, "min-h = ceiling = bezout = general for a1 <= 25, a3 <= 60")
def test_method_agreement(sweep):
    start = time.perf_counter()
    mismatches = []
    for triple in sweep:
        form = gmn_decompose(*triple)
        values = (
            dmax_min_h(form).value,
            dmax_ceiling(form).value,
            dmax_bezout(form).value,
            dmax_semigroup_general(new_semigroup(triple)).value,
        )
        if len(set(values)) != 1:
            mismatches.append((triple, values))
    elapsed = time.perf_counter() - start
    print(f"criterion 4: {len(sweep)} triples in {elapsed:.1f} s")
    assert len(sweep) > 20000
    assert mismatches == []
    assert elapsed < 60


@criterion(5, "dmax(<a, b>) = 1 by the general scan for coprime 2 <= a < b <= 40")
def test_two_generators():
    start = time.perf_counter()
    for a in range(2, 41):
        for b in range(a + 1, 41):
            if math.gcd(a, b) == 1:
                assert dmax_semigroup_general(new_semigroup([a, b])).value == 1, (a, b)
    assert time.perf_counter() - start < 10


@criterion(6, "reduced elements are i*n*a2 with maximal set {pU + qV} for a1 <= 15, a3 <= 40")
def test_reduced_structure():
    checked = 0
    for triple in sweep_triples(15, 40):
        S = new_semigroup(triple)
        if S.embedding_dimension != 3:
            continue
        checked += 1
        form = gmn_decompose(*triple)
        dmax = dmax_semigroup_general(S).value
        U, V = (0, form.n, 0), (form.n - form.m, 0, form.m)
        reports = maximally_reduced_elements(S)
        assert [r.element for r in reports] == [i * form.n * form.a2 for i in range(dmax)]
        for i, r in enumerate(reports):
            family = {tuple(p * u + (i - p) * v for u, v in zip(U, V)) for p in range(i + 1)}
            assert {f.coefficients for f in r.maximal_factorizations} == family
            assert r.dmax_element == i + 1
        assert reduced_structure(S).elements == tuple(r.element for r in reports)
    assert checked > 1000


@criterion(7, "factorization counts equal the recursive oracle on 25 random semigroups")
def test_denumerant_oracle():
    rng = random.Random(20240611)
    sampled = 0
    while sampled < 25:
        gens = sorted(rng.sample(range(2, 21), rng.randint(2, 4)))
        if math.gcd(*gens) != 1:
            continue
        sampled += 1
        S = new_semigroup(gens)
        for s in range(201):
            assert denumerant(S, s) == count_recursive(S.minimal_generators, s), (gens, s)


@criterion(8, "<m, n> is symmetric for coprime 2 <= m < n <= 20")
def test_symmetry():
    for m in range(2, 21):
        for n in range(m + 1, 21):
            if math.gcd(m, n) != 1:
                continue
            f = m * n - m - n
            assert not two_gen_contains(f, m, n)
            for z in range(f + 1):
                assert two_gen_contains(z, m, n) != two_gen_contains(f - z, m, n), (m, n, z)


@criterion(9, "max over (m, n) of dmax(<a1, a1+m, a1+n>) is ceil(a1/2), attained at (1, 2)")
def test_maximizer():
    for a1 in range(3, 21):
        values = {}
        for m in range(1, 15):
            for n in range(m + 1, 16):
                if math.gcd(m, n) == 1:
                    values[(m, n)] = dmax_bezout(gmn_decompose(a1, a1 + m, a1 + n)).value
        assert max(values.values()) == values[(1, 2)] == ceil_div(a1, 2), a1


@criterion(10, "Bezout formula unchanged under (x + kn, y - km), |k| <= 5")
def test_bezout_invariance(sweep):
    for triple in sweep:
        form = gmn_decompose(*triple)
        x, y = bezout(form.m, form.n, form.a1)
        base = bezout_formula((x, y), form.m, form.n)
        for k in range(-5, 6):
            assert bezout_formula((x + k * form.n, y - k * form.m), form.m, form.n) == base
