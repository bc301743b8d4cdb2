"""Cross-formula identity battery.

Every redundant pair of formulas in the package is executable as an identity
check; this module runs them over size/variable windows and reports one line
per identity.  The CLI `verify` subcommand and the acceptance test suite both
drive these functions.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterator

from .integral import (
    compositions_rearranging,
    j_compact,
    j_plain,
    p_poly,
    pochhammer_prefactor,
    hook_product,
    hook_product_inc,
)
from .modified import SortedTableau, htilde_compact, htilde_plain, iter_sorted_tableaux, multiplicity_t
from .nonsymmetric import EResult, f_poly, integral_e
from .polyring import MPoly, Monomial, QtFactor, QtRational, exact_div, t_multinomial
from .quasisym import (
    g_poly,
    qs_schur,
    qsym_decompose,
    rearrangement_classes,
    schur_ssyt,
)
from .shapes import (
    composition_stats,
    coinv_comp,
    diagram,
    filling_from_fixture,
    inv,
    is_packed,
    maj,
)


@dataclass
class CheckResult:
    name: str
    instances: int
    passed: bool
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return f"{self.name}: instances={self.instances} time={self.seconds:.2f}s {status}{extra}"


def _run(name: str, body: Callable[[], tuple[int, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        instances, detail = body()
        passed = True
    except AssertionError as exc:
        instances, detail, passed = 0, str(exc), False
    return CheckResult(name, instances, passed, time.perf_counter() - start, detail)


def partitions_up_to(max_size: int) -> Iterator[tuple[int, ...]]:
    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if prefix:
            yield prefix
        for part in range(min(remaining, cap), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    seen = set()
    for size in range(1, max_size + 1):
        for lam in gen(size, size, ()):
            if sum(lam) <= max_size and lam not in seen:
                seen.add(lam)
                yield lam


def strong_compositions_up_to(max_size: int) -> Iterator[tuple[int, ...]]:
    def gen(remaining: int, prefix: tuple[int, ...]):
        if prefix:
            yield prefix
        for part in range(1, remaining + 1):
            yield from gen(remaining - part, prefix + (part,))

    for size in range(1, max_size + 1):
        yield from gen(size, ())


def weak_compositions_up_to(max_size: int, length: int) -> Iterator[tuple[int, ...]]:
    for total in range(0, max_size + 1):
        def gen(remaining: int, slots: int):
            if slots == 1:
                yield (remaining,)
                return
            for first in range(remaining + 1):
                for rest in gen(remaining - first, slots - 1):
                    yield (first,) + rest

        yield from gen(total, length)


def load_fixture(name: str) -> dict:
    return json.loads(resources.files("macpoly.fixtures").joinpath(name).read_text())


# -- fixture checks ---------------------------------------------------------------


def check_fixture_statistics() -> CheckResult:
    def body():
        tableau, expected = filling_from_fixture(load_fixture("sorted_tableau.json"))
        assert inv(tableau) == expected["inv"], f"inv {inv(tableau)} != {expected['inv']}"
        assert maj(tableau) == expected["maj"], f"maj {maj(tableau)} != {expected['maj']}"
        expected_mult = (
            t_multinomial(3, [2, 1]) * t_multinomial(2, [1, 1]) * t_multinomial(4, [2, 2])
        )
        assert multiplicity_t(tableau) == expected_mult, "multiplicity mismatch on the sorted tableau"
        filling, expected = filling_from_fixture(load_fixture("ordered_filling.json"))
        assert maj(filling) == expected["maj"], f"maj {maj(filling)} != {expected['maj']}"
        assert coinv_comp(filling) == expected["coinv"], (
            f"coinv {coinv_comp(filling)} != {expected['coinv']}"
        )
        return 2, ""

    return _run("statistics fixtures (sorted tableau, ordered filling)", body)


def check_fixture_tableau_listing() -> CheckResult:
    def body():
        listing = load_fixture("tableau_listing.json")
        shape = diagram(listing["shape"])
        n = listing["n"]
        expected = {}
        for item in listing["tableaux"]:
            key = tuple(sorted((tuple(cell[:2]), cell[2]) for cell in item["entries"]))
            expected[key] = (item["inv"], item["maj"], tuple(item["multiplicity"]))
        packed = [f for f in iter_sorted_tableaux(shape, n) if is_packed(f)]
        assert len(packed) == len(expected) == 32, f"packed count {len(packed)}"
        total = MPoly.zero(n)
        for f in iter_sorted_tableaux(shape, n):
            st = SortedTableau.certify(f)
            if is_packed(f):
                key = tuple(sorted(((c.col, c.row), v) for c, v in f.entries.items()))
                e_inv, e_maj, e_perm = expected[key]
                assert (inv(f), maj(f)) == (e_inv, e_maj), f"statistics differ at {key}"
                pt = st.multiplicity_t()
                got = tuple(
                    pt.terms.get(Monomial((), 0, k), 0)
                    for k in range(len(e_perm))
                )
                assert got == e_perm, f"multiplicity_t differs at {key}"
            total = total + st.multiplicity_t(n).mul_monomial(x=f.x_exponents(n), q=maj(f), t=inv(f))
        assert total == htilde_compact((3, 1), n)
        assert total == htilde_plain((3, 1), n)
        assert total == htilde_plain((2, 1, 1), n).swap_qt()
        return 32, "weights and weighted sum"

    return _run("tableau listing fixture", body)


# -- modified-Macdonald checks -------------------------------------------------------


def check_htilde_equivalence(max_size: int = 6, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            for n in range(1, max_n + 1):
                assert htilde_compact(lam, n) == htilde_plain(lam, n), f"lam={lam}, n={n}"
                count += 1
        return count, f"|shape| <= {max_size}, n <= {max_n}"

    return _run("compact vs plain modified-Macdonald", body)


def check_htilde_symmetry(max_size: int = 5, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            for n in range(1, max_n + 1):
                p = htilde_plain(lam, n)
                for i in range(1, n):
                    assert p.swap_x(i, i + 1) == p, f"lam={lam}, n={n}, swap {i}"
                    count += 1
        return count, "adjacent transposition invariance"

    return _run("modified-Macdonald symmetry", body)


# -- integral-form checks --------------------------------------------------------------


def check_pr_products(max_size: int = 8) -> CheckResult:
    def body():
        count = 0
        for mu in partitions_up_to(max_size):
            assert hook_product(mu) == hook_product_inc(composition_stats(mu).inc), f"mu={mu}"
            count += 1
        return count, f"|shape| <= {max_size}"

    return _run("normalization products agree", body)


def check_j_equivalence(max_size: int = 5, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for mu in partitions_up_to(max_size):
            for n in range(1, max_n + 1):
                assert j_compact(mu, n).value == j_plain(mu, n), f"mu={mu}, n={n}"
                count += 1
        return count, f"|shape| <= {max_size}, n <= {max_n}"

    return _run("compact vs plain integral form", body)


def check_j_ones_closed_form(max_n: int = 5) -> CheckResult:
    def body():
        from .shapes import enumerate_fillings, is_nonattacking, is_ordered

        count = 0
        for n in range(1, max_n + 1):
            mu = (1,) * n
            shape = diagram(mu)
            ordered = [
                f
                for f in enumerate_fillings(shape, n, predicate=is_nonattacking)
                if is_ordered(f)
            ]
            assert len(ordered) == 1, f"n={n}: {len(ordered)} ordered fillings"
            expected = MPoly.monomial(n, x=(1,) * n)
            for i in range(1, n + 1):
                expected = expected * (MPoly.one(n) - MPoly.monomial(n, t=i))
            assert j_compact(mu, n).value == expected, f"n={n}"
            count += 1
        return count, "single-term closed form"

    return _run("all-ones integral form", body)


def check_j_def(max_size: int = 4, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            for n in range(len([p for p in lam if p]), max_n + 1):
                if n == 0:
                    continue
                lhs = p_poly(lam, n).cleared_by(hook_product(lam))
                assert lhs == j_compact(lam, n).value, f"lam={lam}, n={n}"
                count += 1
        return count, "monic value times normalization"

    return _run("integral form = P times normalization", body)


def check_integrality(max_size: int = 5, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for mu in partitions_up_to(max_size):
            for n in range(1, max_n + 1):
                stats = composition_stats(mu)
                quotient = exact_div(j_plain(mu, n), pochhammer_prefactor(stats.mult, n))
                assert all(isinstance(c, int) for c in quotient.terms.values())
                count += 1
        for n in range(1, max_n + 1):
            for alpha in weak_compositions_up_to(max_size, n):
                if sum(alpha) == 0:
                    continue
                stats = composition_stats(alpha)
                value = integral_e(alpha, verify=True)
                exact_div(value, pochhammer_prefactor(stats.mult, n))
                count += 1
        return count, "Pochhammer divisibility, both forms"

    return _run("integral-form divisibility", body)


def check_p_symmetry(max_size: int = 5, max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            parts = len(lam)
            for n in range(parts, max_n + 1):
                p = p_poly(lam, n)
                for i in range(1, n):
                    assert p.swap_x(i, i + 1) == p, f"lam={lam}, n={n}"
                    count += 1
        return count, "adjacent transposition invariance"

    return _run("monic symmetric value symmetry", body)


# -- quasisymmetric checks -----------------------------------------------------------


def check_quasisymmetry(max_size: int = 5, max_n: int = 5) -> CheckResult:
    def body():
        count = 0
        for gamma in strong_compositions_up_to(max_size):
            for n in range(len(gamma), max_n + 1):
                result = qsym_decompose(g_poly(gamma, n))
                assert result.is_quasisymmetric, f"gamma={gamma}, n={n}: {result.witness}"
                count += 1
        return count, f"|shape| <= {max_size}, n <= {max_n}"

    return _run("quasisymmetry of G", body)


def check_refinement(max_size: int = 5, max_n: int = 5) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            for n in range(len(lam), max_n + 1):
                total = EResult(n)
                for gamma in rearrangement_classes(lam):
                    total = total + g_poly(gamma, n)
                assert total == p_poly(lam, n), f"lam={lam}, n={n}"
                count += 1
        return count, "G sums to P over rearrangement classes"

    return _run("quasisymmetric refinement", body)


def check_schur_chain(max_size: int = 5, max_n: int = 5) -> CheckResult:
    def body():
        count = 0
        for lam in partitions_up_to(max_size):
            for n in range(len(lam), max_n + 1):
                total = MPoly.zero(n)
                for gamma in rearrangement_classes(lam):
                    piece = qs_schur(gamma, n)
                    assert all(
                        isinstance(c, int) and c >= 0 for c in piece.terms.values()
                    ), f"negative piece at gamma={gamma}, n={n}"
                    total = total + piece
                assert total == schur_ssyt(lam, n), f"lam={lam}, n={n}"
                count += 1
        return count, "specializations sum to the tableau oracle"

    return _run("Schur specialization chain", body)


# -- randomized property block ----------------------------------------------------------


def check_properties(cases: int = 1000, seed: int = 20240613) -> CheckResult:
    def body():
        rng = random.Random(seed)

        def rand_poly(n):
            terms = {}
            for _ in range(rng.randint(0, 4)):
                mono = Monomial(
                    tuple(rng.randint(0, 2) for _ in range(n)),
                    rng.randint(0, 2),
                    rng.randint(0, 2),
                )
                terms[mono] = rng.randint(-5, 5)
            return MPoly(n, terms)

        count = 0
        while count < cases:
            # ring axioms
            p, r, s = (rand_poly(2) for _ in range(3))
            assert (p + r) + s == p + (r + s)
            assert p * r == r * p
            assert p * (r + s) == p * r + p * s
            count += 3
            # reduction idempotence and value preservation
            num = MPoly(
                0,
                {
                    Monomial((), rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-4, 4)
                    for _ in range(rng.randint(0, 3))
                },
            )
            den = tuple(
                QtFactor(rng.randint(0, 2), rng.randint(1, 2))
                for _ in range(rng.randint(0, 2))
            )
            u = QtRational(num, den)
            again = QtRational(u.num, u.den)
            assert (again.num, again.den) == (u.num, u.den)
            left = u.num
            for f in den:
                left = left * f.poly()
            right = num
            for f in u.den:
                right = right * f.poly()
            assert left == right
            count += 2
            # Gaussian multinomial polynomiality and t = 1 value
            total = rng.randint(1, 6)
            parts = []
            remaining = total
            while remaining:
                part = rng.randint(1, remaining)
                parts.append(part)
                remaining -= part
            value = t_multinomial(total, parts).specialize(t=1).constant_term()
            from math import factorial

            expected = factorial(total)
            for part in parts:
                expected //= factorial(part)
            assert value == expected
            count += 1
            # accumulation order independence
            polys = [rand_poly(2) for _ in range(4)]
            shuffled = polys[:]
            rng.shuffle(shuffled)
            acc1 = MPoly.zero(2)
            acc2 = MPoly.zero(2)
            for a in polys:
                acc1 = acc1 + a
            for a in shuffled:
                acc2 = acc2 + a
            assert acc1 == acc2
            count += 1
        return count, f"seed={seed}"

    return _run("randomized property block", body)


def check_parallel_merge_order(seed: int = 7) -> CheckResult:
    def body():
        rng = random.Random(seed)
        alphas = compositions_rearranging((2, 1), 3)
        reference = None
        for _ in range(4):
            shuffled = list(alphas)
            rng.shuffle(shuffled)
            total = EResult(3)
            for alpha in shuffled:
                total = total + f_poly(alpha)
            if reference is None:
                reference = total
            assert total == reference
        return 4, "shuffled accumulation of nonsymmetric summands"

    return _run("merge-order independence", body)


# -- suites -------------------------------------------------------------------------


def _or(value: int | None, default: int) -> int:
    return default if value is None else value


SUITES = {
    "fixtures": lambda ms, mn: [check_fixture_statistics(), check_fixture_tableau_listing()],
    "htilde": lambda ms, mn: [
        check_htilde_equivalence(_or(ms, 6), _or(mn, 4)),
        check_htilde_symmetry(_or(ms, 5), _or(mn, 4)),
    ],
    "j": lambda ms, mn: [
        check_pr_products(_or(ms, 8)),
        check_j_equivalence(_or(ms, 5), _or(mn, 4)),
        check_j_ones_closed_form(_or(mn, 5)),
        check_j_def(_or(ms, 4), _or(mn, 4)),
        check_integrality(_or(ms, 5), _or(mn, 4)),
        check_p_symmetry(_or(ms, 5), _or(mn, 4)),
    ],
    "qsym": lambda ms, mn: [
        check_quasisymmetry(_or(ms, 5), _or(mn, 5)),
        check_refinement(_or(ms, 5), _or(mn, 5)),
        check_schur_chain(_or(ms, 5), _or(mn, 5)),
    ],
}


def run_suite(
    suite: str, max_size: int | None = None, max_n: int | None = None
) -> list[CheckResult]:
    if suite == "all":
        results = []
        for name in ("fixtures", "htilde", "j", "qsym"):
            results.extend(SUITES[name](max_size, max_n))
        results.append(check_properties())
        results.append(check_parallel_merge_order())
        return results
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return SUITES[suite](max_size, max_n)
