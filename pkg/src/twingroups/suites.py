"""Named verification suites behind the ``verify`` subcommand.

Each suite is a list of (case id, thunk) pairs; a thunk returns an
empty string on success and a failure detail (inputs plus both sides'
normal forms) otherwise.  Suites can run their cases on a thread pool;
reports collect in submission order either way.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import freeaut, puregens, schreier, twin, words
from .schreier import m_word
from .words import GroupSpec, Word, ascending_run, conjugate, invert, pow_word

Case = tuple[str, object]


@dataclass
class SuiteReport:
    suite: str
    cases: int
    failures: list[tuple[str, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def _identity_case(case_id: str, lhs: Word, rhs: Word, n: int) -> Case:
    def run() -> str:
        spec = GroupSpec(n)
        if words.equal(lhs, rhs, spec):
            return ""
        return (
            f"in rank {n}: {words.format_word(lhs)} != {words.format_word(rhs)}"
            f" (normal forms: {words.format_word(words.normal_form(lhs, spec))}"
            f" vs {words.format_word(words.normal_form(rhs, spec))})"
        )

    return case_id, run


def _hexagons(l: int) -> tuple[Word, Word]:
    return pow_word((l - 1, l), 3), pow_word((l, l - 1), 3)


def lemma41_cases(max_n: int = 7) -> list[Case]:
    """The four families of transversal-block identities."""
    cases: list[Case] = []
    for n in range(3, max_n + 1):
        for l in range(2, n):
            forward, backward = _hexagons(l)
            tail = ascending_run(l + 1, n - 1)
            cases.append(
                _identity_case(
                    f"swap[n={n},l={l}]",
                    (l - 1,) + conjugate(forward, tail),
                    conjugate(backward, tail) + (l - 1,),
                    n,
                )
            )
        for i in range(n):
            for l in range(i + 2, n):
                m = m_word(n - 1, i)
                _, backward = _hexagons(l)
                tail = ascending_run(l + 1, n - 1)
                kind = "block-end" if l == n - 1 else "block-mid"
                cases.append(
                    _identity_case(
                        f"{kind}[n={n},i={i},l={l}]",
                        m + (l,) + invert(m) + (l - 1,),
                        conjugate(backward, tail),
                        n,
                    )
                )
                cases.append(_rep_case(n, i, l))
    return cases


def _rep_case(n: int, i: int, l: int) -> Case:
    def run() -> str:
        m = m_word(n - 1, i)
        left = schreier.coset_rep(m + (l,), n)
        right = schreier.coset_rep((l - 1,) + m, n)
        if left == right:
            return ""
        return (
            f"rep[n={n},i={i},l={l}]: "
            f"{words.format_word(schreier.decode(left))} vs "
            f"{words.format_word(schreier.decode(right))}"
        )

    return f"rep[n={n},i={i},l={l}]", run


def hexagon_exchange_case(n: int) -> Case:
    """The relation making one end-block generator redundant."""
    x = pow_word((n - 2, n - 1), 3)
    y = pow_word((n - 1, n - 2), 3)
    lam_left = m_word(n - 3, n - 4) + m_word(n - 2, n - 4)
    lam_right = m_word(n - 3, n - 4) + m_word(n - 2, n - 3)
    lhs = pow_word((n - 2, n - 3), 3) + conjugate(x, lam_left)
    lhs += pow_word((n - 3, n - 2), 3)
    return _identity_case(f"exchange[n={n}]", lhs, conjugate(y, lam_right), n)


def eq31_cases() -> list[Case]:
    return [hexagon_exchange_case(4)]


def lemma45_cases(max_n: int = 7) -> list[Case]:
    return [hexagon_exchange_case(n) for n in range(4, max_n + 1)]


def d4_cases(max_k: int = 5) -> list[Case]:
    """Relations of the last-strand kernel of T_4, truncated to |k| <= max_k."""

    def a(eps: int, k: int) -> Word:
        wrap = (1,) * eps
        return wrap + pow_word((1, 2), k) + (3,) + pow_word((1, 2), -k) + wrap

    cases = []
    for k in range(-max_k, max_k + 1):
        cases.append(_identity_case(f"pairing[k={k}]", a(0, -k) + a(1, k), (), 4))
        cases.append(_identity_case(f"pairing'[k={k}]", a(1, -k) + a(0, k), (), 4))
        for eps in (0, 1):
            cases.append(
                _identity_case(f"square[eps={eps},k={k}]", a(eps, k) * 2, (), 4)
            )
    return cases


def center_cases(max_n: int = 6, length: int = 6) -> list[Case]:
    def make(n: int):
        def run() -> str:
            found = twin.center_search(n, length)
            if not found:
                return ""
            shown = ", ".join(words.format_word(w) for w in found[:3])
            return f"central words of length <= {length} in rank {n}: {shown}"

        return run

    return [(f"center[n={n},L={length}]", make(n)) for n in range(3, max_n + 1)]


def lcs_t3_cases(max_i: int = 6) -> list[Case]:
    def make(i: int):
        def run() -> str:
            return "" if twin.lcs_identity_t3(i) else f"term {i} fails"

        return run

    return [(f"lcs[i={i}]", make(i)) for i in range(1, max_i + 1)]


def betti_cases(max_n: int = 10) -> list[Case]:
    def agree(n: int):
        def run() -> str:
            b, c = puregens.betti_binomial(n), puregens.betti_closed_form(n)
            return "" if b == c else f"rank {n}: {b} != {c}"

        return run

    cases = [(f"betti[n={n}]", agree(n)) for n in range(3, max_n + 1)]

    def pinned() -> str:
        got = tuple(puregens.betti_binomial(n) for n in (3, 4, 5))
        return "" if got == (1, 7, 31) else f"expected (1, 7, 31), got {got}"

    cases.append(("betti[pinned]", pinned))
    return cases


def phi4_equivariance_cases() -> list[Case]:
    def make(i: int, g: int):
        def run() -> str:
            derived = freeaut.express_pure(
                conjugate(freeaut.PT4_BASIS[i - 1], (g,))
            )
            stored = freeaut.free_reduce(freeaut.generator_aut(g).images[i - 1])
            if derived == stored:
                return ""
            return f"b{i}^s{g}: pipeline {derived}, table {stored}"

        return run

    return [
        (f"equivariance[b{i},s{g}]", make(i, g))
        for g in (1, 2, 3)
        for i in range(1, 8)
    ]


SUITES = {
    "lemma41": lambda opt: lemma41_cases(opt.get("max_n", 7)),
    "eq31": lambda opt: eq31_cases(),
    "lemma45": lambda opt: lemma45_cases(opt.get("max_n", 7)),
    "d4": lambda opt: d4_cases(opt.get("max_k", 5)),
    "center": lambda opt: center_cases(
        opt.get("max_n", 6), opt.get("length", 6)
    ),
    "lcs-t3": lambda opt: lcs_t3_cases(opt.get("max_i", 6)),
    "betti-agree": lambda opt: betti_cases(opt.get("max_n", 10)),
    "phi4-equivariance": lambda opt: phi4_equivariance_cases(),
}


def run_suite(name: str, jobs: int = 1, **options) -> SuiteReport:
    if name == "all":
        merged = SuiteReport("all", 0)
        start = time.perf_counter()
        for sub in SUITES:
            report = run_suite(sub, jobs=jobs, **options)
            merged.cases += report.cases
            merged.failures += [
                (f"{sub}:{case}", detail) for case, detail in report.failures
            ]
        merged.seconds = time.perf_counter() - start
        return merged
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    # center defaults to ranks <= 6 even when identity suites go to 7
    opts = dict(options)
    if name == "center" and opts.get("max_n", 0) > 6:
        opts["max_n"] = 6
    cases = SUITES[name](opts)
    start = time.perf_counter()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            details = list(pool.map(lambda c: c[1](), cases))
    else:
        details = [run() for _, run in cases]
    report = SuiteReport(name, len(cases))
    report.failures = [
        (case_id, detail)
        for (case_id, _), detail in zip(cases, details)
        if detail
    ]
    report.seconds = time.perf_counter() - start
    return report
