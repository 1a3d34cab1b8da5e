"""Command-line interface.

Exit codes: 0 for success or a true answer, 1 for a false answer or a
failed check, 2 for usage errors, and 3 when the bounded virtual-group
search gives up (``vt eq`` only).
"""

import argparse
import json
import sys

from . import freeaut, puregens, schreier, suites, surface, twin, virtualtwin, words
from .words import GroupSpec, Word, parse_word


def _infer_rank(*word_list: Word) -> int:
    top = max((abs(x) for w in word_list for x in w), default=1)
    return top + 1


def _spec(args, *word_list: Word) -> GroupSpec:
    return GroupSpec(args.n if args.n else _infer_rank(*word_list))


def _cmd_reduce(args) -> int:
    w = parse_word(args.word)
    print(words.format_word(words.reduce(w, _spec(args, w))))
    return 0


def _cmd_nf(args) -> int:
    w = parse_word(args.word)
    print(words.format_word(words.normal_form(w, _spec(args, w))))
    return 0


def _cmd_eq(args) -> int:
    u, v = parse_word(args.left), parse_word(args.right)
    same = words.equal(u, v, _spec(args, u, v))
    print("true" if same else "false")
    return 0 if same else 1


def _cmd_perm(args) -> int:
    w = parse_word(args.word)
    n = args.n if args.n else _infer_rank(w)
    print(" ".join(map(str, twin.perm_image(w, n))))
    return 0


def _cmd_is_pure(args) -> int:
    w = parse_word(args.word)
    n = args.n if args.n else _infer_rank(w)
    pure = twin.is_pure(w, n)
    print("true" if pure else "false")
    return 0 if pure else 1


def _cmd_schreier_pt(args) -> int:
    pres = schreier.subgroup_presentation(args.n)
    if not args.raw:
        pres = schreier.tietze_simplify(pres)
    if args.json:
        print(pres.to_json())
        return 0
    stage = "raw" if args.raw else "simplified"
    print(
        f"{stage} presentation: {len(pres.generators)} generators,"
        f" {len(pres.relators)} relators"
    )
    for g in pres.generators:
        print(f"  {g} = {words.format_word(pres.meanings[g])}")
    return 0


def _cmd_gens_pt(args) -> int:
    gens = puregens.pure_generators(args.n)
    if args.json:
        doc = [
            {
                "l": g.l,
                "conjugator": words.format_word(g.conjugator),
                "word": words.format_word(g.word),
            }
            for g in gens
        ]
        print(json.dumps(doc, indent=2))
    else:
        for g in gens:
            print(words.format_word(g.word))
    return 0


def _cmd_rank_bound(args) -> int:
    print(puregens.rank_bound(args.n))
    return 0


def _cmd_betti(args) -> int:
    value = puregens.betti_binomial(args.n)
    if value != puregens.betti_closed_form(args.n):
        print("betti formulas disagree", file=sys.stderr)
        return 1
    print(value)
    return 0


def _cmd_phi4_apply(args) -> int:
    aut = freeaut.phi4(parse_word(args.twin_word))
    image = freeaut.apply_aut(aut, freeaut.parse_free(args.free_word))
    print(freeaut.format_free(image))
    return 0


def _cmd_phi4_check(args) -> int:
    bad = 0
    for i in (1, 2, 3):
        ok = freeaut.is_involution(freeaut.generator_aut(i))
        print(f"involution s{i}: {'ok' if ok else 'FAIL'}")
        bad += not ok
    far = freeaut.compose(
        freeaut.generator_aut(1), freeaut.generator_aut(3)
    ) == freeaut.compose(freeaut.generator_aut(3), freeaut.generator_aut(1))
    print(f"far generators commute: {'ok' if far else 'FAIL'}")
    bad += not far
    for rel in schreier.twin_relators(4):
        ok = freeaut.phi4(rel) == freeaut.identity_aut()
        print(f"relator {words.format_word(rel)}: {'ok' if ok else 'FAIL'}")
        bad += not ok
    mismatches = freeaut.check_equivariance()
    for line in mismatches:
        print(f"equivariance FAIL: {line}")
    print(f"equivariance table entries: {21 - len(mismatches)}/21 ok")
    bad += len(mismatches)
    order = freeaut.quotient_group_order()
    print(f"quotient action order: {order} {'ok' if order == 24 else 'FAIL'}")
    bad += order != 24
    return 0 if not bad else 1


def _cmd_phi4_faithful(args) -> int:
    witness = freeaut.faithfulness_search(args.depth)
    if witness is None:
        print(f"no kernel element of length <= {args.depth}")
        return 0
    print(words.format_word(witness))
    return 1


def _cmd_surface_check(args) -> int:
    triangles, pairing = surface.build_complex()
    report = surface.surface_invariants(triangles, pairing)
    comparison = surface.compare_with_hand_lists(triangles, pairing)
    if args.json:
        doc = report.as_dict()
        doc["handListComparison"] = {
            "matched": comparison["matched"],
            "invalidLabels": [list(x) for x in comparison["invalid_labels"]],
            "mismatched": [list(x) for x in comparison["mismatched"]],
        }
        print(json.dumps(doc, indent=2))
    else:
        for key, value in report.as_dict().items():
            print(f"{key}: {value}")
        print(
            f"hand lists: {comparison['matched']} matched,"
            f" {len(comparison['invalid_labels'])} misprinted labels,"
            f" {len(comparison['mismatched'])} mismatched"
        )
    ok = (
        report.connected
        and report.orientable
        and report.filled_euler_char == 2
        and report.ideal_vertex_classes == 8
        and report.pi1_rank == 7
        and not comparison["mismatched"]
    )
    return 0 if ok else 1


def _cmd_vt_eq(args) -> int:
    u, v = parse_word(args.left), parse_word(args.right)
    n = args.n if args.n else _infer_rank(u, v)
    path = virtualtwin.bounded_equal(u, v, n, args.depth, welded=args.welded)
    if path is None:
        print("UNKNOWN")
        return 3
    print("EQUAL")
    for step in path:
        print(words.format_word(step))
    return 0


def _cmd_vt_check(args) -> int:
    bad = 0
    for n in range(3, args.max_n + 1):
        pres = (
            virtualtwin.wt_presentation(n)
            if args.welded
            else virtualtwin.vt_presentation(n)
        )
        wrong = [
            r
            for r in pres.relators()
            if virtualtwin.vt_perm_image(r, n) != twin.identity_perm(n)
        ]
        label = "welded" if args.welded else "virtual"
        status = "ok" if not wrong else f"FAIL ({len(wrong)} relators)"
        print(f"{label} rank {n}: {len(pres.relators())} relators -> {status}")
        bad += len(wrong)
    return 0 if not bad else 1


def _cmd_verify(args) -> int:
    options = {}
    if args.max_n is not None:
        options["max_n"] = args.max_n
    if args.length is not None:
        options["length"] = args.length
    if args.max_k is not None:
        options["max_k"] = args.max_k
    if args.max_i is not None:
        options["max_i"] = args.max_i
    report = suites.run_suite(args.suite, jobs=args.jobs, **options)
    print(
        f"suite {report.suite}: {report.cases} cases,"
        f" {len(report.failures)} failures, {report.seconds:.2f}s"
    )
    for case_id, detail in report.failures:
        print(f"  FAIL {case_id}: {detail}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twingroups",
        description="word problem and verification suites for twin groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, fn, *fields):
        p = sub.add_parser(name)
        for f in fields:
            p.add_argument(f)
        p.add_argument("--n", type=int, help="ambient rank (inferred if omitted)")
        p.set_defaults(fn=fn)
        return p

    word_cmd("reduce", _cmd_reduce, "word")
    word_cmd("nf", _cmd_nf, "word")
    word_cmd("eq", _cmd_eq, "left", "right")
    word_cmd("perm", _cmd_perm, "word")
    word_cmd("is-pure", _cmd_is_pure, "word")

    p = sub.add_parser("schreier-pt")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--raw", action="store_true", help="skip simplification")
    p.set_defaults(fn=_cmd_schreier_pt)

    p = sub.add_parser("gens-pt")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_gens_pt)

    p = sub.add_parser("rank-bound")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_rank_bound)

    p = sub.add_parser("betti")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_betti)

    phi4 = sub.add_parser("phi4").add_subparsers(dest="phi4_command", required=True)
    p = phi4.add_parser("apply")
    p.add_argument("twin_word")
    p.add_argument("free_word")
    p.set_defaults(fn=_cmd_phi4_apply)
    p = phi4.add_parser("check")
    p.set_defaults(fn=_cmd_phi4_check)
    p = phi4.add_parser("faithful")
    p.add_argument("--depth", type=int, default=6)
    p.set_defaults(fn=_cmd_phi4_faithful)

    surf = sub.add_parser("surface").add_subparsers(
        dest="surface_command", required=True
    )
    p = surf.add_parser("check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_surface_check)

    vt = sub.add_parser("vt").add_subparsers(dest="vt_command", required=True)
    p = vt.add_parser("eq")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--n", type=int)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--welded", action="store_true")
    p.set_defaults(fn=_cmd_vt_eq)
    p = vt.add_parser("check")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--welded", action="store_true")
    p.set_defaults(fn=_cmd_vt_check)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=sorted(suites.SUITES) + ["all"])
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--length", type=int)
    p.add_argument("--max-k", type=int, dest="max_k")
    p.add_argument("--max-i", type=int, dest="max_i")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
