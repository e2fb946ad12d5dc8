"""Acceptance suite: one test per shipped guarantee, one printed line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines;
each criterion is also a separate test so ``-v`` alone shows the verdicts.
All equality assertions are exact; timed criteria measure steady-state
(one warmup call covers JIT compilation and caches).
"""

import itertools
import time

from cliffcalc import (
    Signature,
    as_1vector,
    basis,
    euclidean,
    from_scalar,
    from_terms,
    generator_square,
    geometric_product,
    grassmann,
    left_contraction,
    load,
    parse_multivector,
    power,
    render,
    right_contraction,
    save,
    wedge,
    zero,
)
from cliffcalc.rand import RandomSpec, random_multivector
from cliffcalc.textio import PrintOptions
from tests.oracle import rewrite_blade_product
from cliffcalc.blade import blade_product

MS = 1e-3


def report(number: int, description: str) -> None:
    print(f"PASS  criterion {number:2d}: {description}")


def best_time(fn, repeats: int = 5) -> float:
    fn()  # warmup: JIT compilation, caches
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def section2_x():
    return from_terms([[], [1], [2], [2, 3]], [1, 2, 3, 4])


def test_criterion_01_golden_square():
    x = section2_x()
    expected = from_terms([[], [1], [2], [2, 3], [1, 2, 3]], [-2, 4, 6, 8, 16])
    result = geometric_product(x, x, euclidean())
    assert result == expected
    assert render(result) == "- 2 + 4e_1 + 6e_2 + 8e_23 + 16e_123"
    elapsed = best_time(lambda: geometric_product(x, x, euclidean()))
    assert elapsed < 1 * MS, f"{elapsed*1e3:.3f} ms"
    report(1, f"x*x golden product and rendering ({elapsed*1e6:.0f} us)")


def test_criterion_02_golden_vector_product():
    z = as_1vector(range(1, 8))
    x = section2_x()
    result = geometric_product(z, x, euclidean())
    assert render(result) == (
        "+ 8 + 1e_1 - 10e_2 - 1e_12 + 11e_3 - 6e_13 - 9e_23 + 4e_123"
        " + 4e_4 - 8e_14 - 12e_24 + 16e_234"
        " + 5e_5 - 10e_15 - 15e_25 + 20e_235"
        " + 6e_6 - 12e_16 - 18e_26 + 24e_236"
        " + 7e_7 - 14e_17 - 21e_27 + 28e_237"
    )
    assert result.num_terms() == 24
    elapsed = best_time(lambda: geometric_product(z, x, euclidean()))
    assert elapsed < 1 * MS, f"{elapsed*1e3:.3f} ms"
    report(2, f"z*x golden product, 24 terms in canonical order ({elapsed*1e6:.0f} us)")


def test_criterion_03_golden_wedge():
    x = from_terms([[1, 2, 3], [2, 3, 7]], [3, 4])
    y = from_terms([[1, 2, 3], [1, 4, 5], [4, 5, 6]], [1, 2, 3])
    expected = from_terms(
        [[1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 7], [2, 3, 4, 5, 6, 7]], [9, -8, -12]
    )
    assert wedge(x, y) == expected
    report(3, "wedge golden: 9e_123456 - 8e_123457 - 12e_234567")


# Term-by-term spot checks for the Cl(7,3) golden, asserted individually and
# in order so a failure pinpoints the offending term.
HIGH_DIM_SPOT_CHECK_TERMS = [
    "- 2",
    "- 4e_1,2,3",
    "- 16e_7",
    "+ 8e_1,2,3,7",
    "- 6e_1,4,6,7",
    "- 12e_2,3,4,6,7",
    "+ 2e_1,5,6,8",
    "+ 4e_2,3,5,6,8",
    "- 40e_2,3,5,8,10",
    "- 30e_4,5,6,8,10",
    "+ 10e_1,5,7,8,10",
]


def test_criterion_04_high_dimensional_product():
    x = from_terms([[], [1, 2, 3], [1, 5, 7, 8, 10]], [2, 4, -10])
    y = from_terms([[], [1, 2, 3, 7], [1, 4, 6, 7], [1, 5, 6, 8]], [-1, 4, -3, 1])
    sig = Signature(7)
    result = geometric_product(x, y, sig)

    expected_full = from_terms(
        [
            [], [1, 2, 3], [7], [1, 2, 3, 7], [1, 4, 6, 7], [2, 3, 4, 6, 7],
            [1, 5, 6, 8], [2, 3, 5, 6, 8], [6, 7, 10], [2, 3, 5, 8, 10],
            [4, 5, 6, 8, 10], [1, 5, 7, 8, 10],
        ],
        [-2, -4, -16, 8, -6, -12, 2, 4, -10, -40, -30, 10],
    )
    assert result == expected_full
    from tests.oracle import product_by_rewriting

    assert product_by_rewriting(x, y, sig) == expected_full

    text = render(result, PrintOptions(basis_sep=","))
    assert text == (
        "- 2 - 4e_1,2,3 - 16e_7 + 8e_1,2,3,7 - 6e_1,4,6,7 - 12e_2,3,4,6,7"
        " + 2e_1,5,6,8 + 4e_2,3,5,6,8 - 10e_6,7,10 - 40e_2,3,5,8,10"
        " - 30e_4,5,6,8,10 + 10e_1,5,7,8,10"
    )
    cursor = 0
    for term in HIGH_DIM_SPOT_CHECK_TERMS:
        found = text.find(term, cursor)
        assert found >= 0, f"missing term {term!r}"
        cursor = found + len(term)

    elapsed = best_time(lambda: geometric_product(x, y, sig))
    assert elapsed < 1 * MS, f"{elapsed*1e3:.3f} ms"
    report(4, f"Cl(7,3) golden product, all terms exact and ordered ({elapsed*1e6:.0f} us)")


def test_criterion_05_signature_semantics():
    assert geometric_product(basis(2), basis(2), Signature(1, 1)) == from_scalar(-1)
    assert power(basis(5), 2, grassmann()).is_zero()
    assert power(basis(53), 2, euclidean()) == from_scalar(1)
    assert geometric_product(basis(4), basis(4), Signature(3, 1)) == from_scalar(-1)
    report(5, "e2^2=-1 @(1,1); e5^2=0 @(0,0); e53^2=+1 @inf; e4^2=-1 @(3,1)")


def test_criterion_06_contraction_goldens():
    sig = euclidean()
    e12 = geometric_product(basis(1), basis(2), sig)
    assert left_contraction(basis(2), e12, sig) == from_terms([[1]], [-1])
    inner = left_contraction(basis(2), basis(1), sig)
    assert geometric_product(inner, basis(2), sig).is_zero()
    report(6, "e2 _| (e1*e2) = -e_1;  (e2 _| e1)*e2 = 0")


def test_criterion_07_chisholm_identity_suite():
    signatures = [euclidean(), Signature(3, 1), grassmann()]
    start = time.perf_counter()
    for k in range(1000):
        a = random_multivector(RandomSpec(include_fewer=True, seed=3 * k))
        b = random_multivector(RandomSpec(include_fewer=True, seed=3 * k + 1))
        c = random_multivector(RandomSpec(include_fewer=True, seed=3 * k + 2))
        for sig in signatures:
            assert left_contraction(a, right_contraction(b, c, sig), sig) == \
                right_contraction(left_contraction(a, b, sig), c, sig)
            assert left_contraction(a, left_contraction(b, c, sig), sig) == \
                left_contraction(wedge(a, b), c, sig)
            assert right_contraction(a, wedge(b, c), sig) == \
                right_contraction(right_contraction(a, b, sig), c, sig)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"{elapsed:.1f} s"
    report(7, f"3 contraction identities x 1000 triples x 3 signatures ({elapsed:.1f} s)")


def test_criterion_08_algebra_laws():
    start = time.perf_counter()
    blades5 = [
        from_terms([list(blade)], [1])
        for r in range(6)
        for blade in itertools.combinations(range(1, 6), r)
    ]

    for sig in (euclidean(), Signature(3, 1)):
        for a in blades5:
            for b in blades5:
                ab = geometric_product(a, b, sig)
                for c in blades5:
                    assert geometric_product(ab, c, sig) == geometric_product(
                        a, geometric_product(b, c, sig), sig
                    )

    sig = Signature(3, 1)
    for a in blades5:
        for b in blades5:
            ab = geometric_product(a, b, sig)
            for c in blades5:
                assert geometric_product(a, b + c, sig) == ab + geometric_product(a, c, sig)

    for gen_sig in (euclidean(), Signature(3, 1), grassmann()):
        for i in range(1, 6):
            for j in range(1, 6):
                anti = geometric_product(basis(i), basis(j), gen_sig) + geometric_product(
                    basis(j), basis(i), gen_sig
                )
                expected = from_scalar(2 * generator_square(gen_sig, i)) if i == j else zero()
                assert anti == expected

    for k in range(1000):
        a = random_multivector(RandomSpec(seed=3 * k + 7000))
        b = random_multivector(RandomSpec(seed=3 * k + 7001))
        c = random_multivector(RandomSpec(seed=3 * k + 7002))
        ab = geometric_product(a, b, sig)
        assert geometric_product(ab, c, sig) == geometric_product(
            a, geometric_product(b, c, sig), sig
        )
        assert geometric_product(a, b + c, sig) == ab + geometric_product(a, c, sig)

    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"{elapsed:.1f} s"
    report(8, f"associativity, distributivity, generator relations ({elapsed:.1f} s)")


def test_criterion_09_blade_product_oracle_equivalence():
    pool = [
        blade
        for r in range(6)
        for blade in itertools.combinations(range(1, 6), r)
    ]
    assert len(pool) == 32
    checked = 0
    for sig in (euclidean(), Signature(3, 1), Signature(2, 2)):
        for a in pool:
            for b in pool:
                expected_sign, expected_blade = rewrite_blade_product(a, b, sig)
                got = blade_product(a, b, sig)
                assert got.sign == expected_sign
                if expected_sign != 0:
                    assert got.blade == expected_blade
                checked += 1
    assert checked == 3 * 32 * 32
    report(9, "blade_product == one-step rewriting oracle on 3 x 1024 pairs")


def test_criterion_10_round_trips(tmp_path):
    comma = PrintOptions(basis_sep=",")
    plain = PrintOptions()
    path = tmp_path / "roundtrip.mv"
    for k in range(1000):
        fewer = k >= 500
        mv = random_multivector(RandomSpec(include_fewer=fewer, seed=k))
        assert parse_multivector(render(mv, plain)) == mv
        assert parse_multivector(render(mv, comma)) == mv
        save(mv, path)
        assert load(path) == mv
    report(10, "parse(render(A)) = A and load(save(A)) = A for 1000 elements, both separators")


def test_criterion_11_grades_golden():
    x = from_terms(
        [[], [4], [6], [1, 2, 3, 5, 6], [7], [2, 3, 4, 6, 7], [5, 6, 7], [3, 5, 6, 7]],
        [4, 1, -3, 3, 2, -1, 4, 5],
    )
    assert x.grades() == [0, 1, 1, 1, 3, 4, 5, 5]
    report(11, "grades multiset {0,1,1,1,3,4,5,5} in ascending order")
