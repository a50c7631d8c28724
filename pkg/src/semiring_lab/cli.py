"""Command-line front end.

Exit codes: 0 all requested checks hold/pass, 1 a refutation or failure,
2 inconclusive at the bound, 64 usage error, 65 parse error, 66 invalid
algebra.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import congruences, constructions, core, fileformat, homs, injectivity, suite
from .errors import AlgebraError, ParseError
from .injectivity import VerdictStatus

EX_OK = 0
EX_REFUTED = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64
EX_PARSE = 65
EX_INVALID = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EX_USAGE)


def _load(path: str):
    try:
        return fileformat.load_algebra(path)
    except ParseError as exc:
        print(f"parse error in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_PARSE)
    except FileNotFoundError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_PARSE)
    except (AlgebraError, ValueError) as exc:
        print(f"invalid algebra in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_INVALID)


def _load_semiring(path: str) -> core.FiniteSemiring:
    obj = _load(path)
    if not isinstance(obj, core.FiniteSemiring):
        print(f"{path} is a semimodule file, expected a semiring", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return obj


def _load_semimodule(path: str) -> core.FiniteSemimodule:
    obj = _load(path)
    if not isinstance(obj, core.FiniteSemimodule):
        print(f"{path} is a semiring file, expected a semimodule", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return obj


def _parse_subset(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(tok) for tok in text.split(",") if tok.strip() != ""}))
    except ValueError:
        print(f"bad subset spec {text!r}; expected e.g. 0,2,3", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _parse_map(text: str) -> list[tuple[int, int]]:
    pairs = []
    try:
        for item in text.split(","):
            if not item.strip():
                continue
            a, b = item.split(":")
            pairs.append((int(a), int(b)))
    except ValueError:
        print(f"bad map spec {text!r}; expected e.g. 0:0,2:1", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return pairs


def _print_verdict(verdict) -> int:
    print(verdict.summary())
    return verdict.exit_code()


# ---------------------------------------------------------------------------
# Subcommand bodies


def _cmd_check(args) -> int:
    obj = _load(args.file)
    kind = "semiring" if isinstance(obj, core.FiniteSemiring) else "semimodule"
    print(f"ok: {kind} {obj.name or '?'} of order {obj.order}")
    return EX_OK


def _cmd_classes(args) -> int:
    obj = _load(args.file)
    rep = core.element_classes(obj)
    print("idempotent:", sorted(rep.iplus))
    print("zeroic-part:", sorted(rep.zclass))
    print("invertible-part:", sorted(rep.vclass))
    print("regular-part:", sorted(rep.aclass))
    print("infinite:", rep.infinite if rep.infinite is not None else "-")
    if rep.units is not None:
        print("units:", sorted(rep.units))
    if isinstance(obj, core.FiniteSemiring):
        flags = core.classify_semiring(obj)
        on = [name for name in (
            "zerosumfree", "zeroic", "additively_idempotent", "additively_regular",
            "anti_bounded", "gelfand", "vn_regular", "left_subtractive",
            "commutative_mul") if getattr(flags, name)]
        print("flags:", " ".join(on) if on else "-")
    return EX_OK


def _cmd_congruences(args) -> int:
    obj = _load(args.file)
    congs = congruences.enumerate_congruences(obj)
    print(f"{len(congs)} congruences")
    for c in congs:
        print(" ", c)
    return EX_OK


def _cmd_subobjects(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, core.FiniteSemiring):
        masks = congruences.enumerate_left_ideals(obj)
        label = "left ideals"
    else:
        masks = congruences.enumerate_subsemimodules(obj)
        label = "subsemimodules"
    print(f"{len(masks)} {label}")
    for m in masks:
        flags = []
        if m.is_subtractive:
            flags.append("subtractive")
        if m.is_strong:
            flags.append("strong")
        if m.is_left_ideal:
            flags.append("left-ideal")
        if m.is_right_ideal:
            flags.append("right-ideal")
        print(" ", list(m.elements), " ".join(flags))
    return EX_OK


def _cmd_cyclic(args) -> int:
    S = _load_semiring(args.file)
    census = homs.enumerate_cyclic_semimodules(S)
    print(f"{len(census)} cyclic semimodules up to isomorphism")
    for M in census:
        print(f"  order {M.order}: add {M.add} action {M.action}")
    return EX_OK


def _cmd_radical(args) -> int:
    S = _load_semiring(args.file)
    mask = congruences.jacobson_radical(S)
    print("radical:", list(mask.elements))
    return EX_OK


def _cmd_semisimple(args) -> int:
    S = _load_semiring(args.file)
    cert = congruences.is_semisimple(S)
    if cert.semisimple:
        print("semisimple: yes; atom ideals:", [list(i) for i in cert.atom_ideals])
        return EX_OK
    print(f"semisimple: no ({cert.atom_ideal_count} atom ideals, no direct family)")
    return EX_REFUTED


def _cmd_simplicity(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, core.FiniteSemiring):
        rep = congruences.semiring_simplicity(obj)
        print(f"congruences: {rep.congruence_count}  ideals: {rep.subobject_count}")
        print(f"congruence-simple: {rep.congruence_simple}  ideal-simple: {rep.ideal_simple}")
    else:
        rep = congruences.simplicity_report(obj)
        print(f"congruences: {rep.congruence_count}  subsemimodules: {rep.subobject_count}")
        print(f"simple: {rep.simple}  atom: {rep.atom}  s-simple: {rep.s_simple}")
    return EX_OK


def _cmd_hom(args) -> int:
    M = _load_semimodule(args.source)
    N = _load_semimodule(args.target)
    maps = homs.enumerate_homs(M, N)
    print(f"{len(maps)} homomorphisms")
    for h in maps:
        print(" ", list(h.mapping))
    return EX_OK


def _cmd_extend(args) -> int:
    ambient = _load_semimodule(args.ambient)
    target = _load_semimodule(args.target)
    subset = _parse_subset(args.sub)
    pairs = _parse_map(args.map)
    try:
        sub, elems = core.submodule(ambient, subset)
    except AlgebraError as exc:
        print(f"subset is not a subsemimodule: {exc}", file=sys.stderr)
        return EX_INVALID
    images = dict(pairs)
    missing = [e for e in elems if e not in images]
    if missing:
        print(f"map does not cover subset elements {missing}", file=sys.stderr)
        return EX_USAGE
    mapping = tuple(images[e] for e in elems)
    if homs.hom_violation(sub, target, mapping) is not None:
        print("partial map is not a homomorphism on the subset", file=sys.stderr)
        return EX_INVALID
    f = homs.Homomorphism(sub, target, mapping)
    extension = homs.find_extension(f, ambient, elems)
    if extension is None:
        print("no extension exists (exhaustive search)")
        return EX_REFUTED
    print("extension:", list(extension.mapping))
    return EX_OK


def _cmd_iso(args) -> int:
    a = _load(args.first)
    b = _load(args.second)
    try:
        cert = homs.are_isomorphic(a, b)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EX_USAGE
    if cert is None:
        print("not isomorphic (exhaustive search)")
        return EX_REFUTED
    print("isomorphic:", list(cert))
    return EX_OK


def _cmd_essential(args) -> int:
    ambient = _load_semimodule(args.file)
    subset = _parse_subset(args.sub)
    try:
        essential, witness = homs.is_essential_extension(ambient, subset)
    except AlgebraError as exc:
        print(f"subset is not a subsemimodule: {exc}", file=sys.stderr)
        return EX_INVALID
    if essential:
        print("essential extension")
        return EX_OK
    print(f"not essential; separating congruence: {witness}")
    return EX_REFUTED


def _cmd_injective(args) -> int:
    M = _load_semimodule(args.file)
    return _print_verdict(injectivity.injectivity_verdict(M, args.bound))


def _cmd_ci(args) -> int:
    S = _load_semiring(args.file)
    return _print_verdict(injectivity.ci_verdict(S, args.bound))


def _cmd_v(args) -> int:
    S = _load_semiring(args.file)
    return _print_verdict(injectivity.v_verdict(S, args.simple_bound, args.ext_bound))


def _cmd_paper_suite(args) -> int:
    profile = "fast" if args.fast else "full"
    results = suite.run_suite(profile)
    width = max(len(r.check_id) for r in results)
    for r in results:
        line = f"{r.status:<12} {r.check_id:<{width}}  {r.locus}"
        if r.witness:
            line += f"  [{r.witness}]"
        line += f"  ({r.seconds:.2f}s)"
        print(line)
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for r in results:
        counts[r.status] += 1
    print(f"total: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['inconclusive']} inconclusive")
    if args.records:
        with open(args.records, "w", encoding="utf-8") as fh:
            for r in results:
                fh.write(json.dumps({
                    "id": r.check_id,
                    "locus": r.locus,
                    "status": r.status,
                    "witness": r.witness,
                }, sort_keys=True) + "\n")
    if counts["fail"]:
        return EX_REFUTED
    if counts["inconclusive"]:
        return EX_INCONCLUSIVE
    return EX_OK


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    kind = args.what
    if kind == "bN":
        S = constructions.chain_semiring(_want_int(args.args, 0, "chain length"))
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "b31":
        _emit(fileformat.serialize_semiring(constructions.b31()), args.out)
    elif kind == "lattice-bool":
        S = constructions.boolean_lattice_semiring(_want_int(args.args, 0, "atom count"))
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "lattice-chain":
        S = constructions.chain_lattice_semiring(_want_int(args.args, 0, "chain size"))
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "ring-z":
        S = constructions.cyclic_ring(_want_int(args.args, 0, "modulus"))
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "ext":
        R = _load_semiring(_want(args.args, 0, "ring file"))
        try:
            S = constructions.ext_semiring(R)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EX_INVALID
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "matrix":
        S0 = _load_semiring(_want(args.args, 0, "semiring file"))
        n = _want_int(args.args, 1, "dimension")
        S = constructions.matrix_semiring(S0, n)
        _emit(fileformat.serialize_semiring(S), args.out)
    elif kind == "product":
        S1 = _load_semiring(_want(args.args, 0, "first file"))
        S2 = _load_semiring(_want(args.args, 1, "second file"))
        _emit(fileformat.serialize_semiring(constructions.direct_product(S1, S2)), args.out)
    elif kind == "regular":
        path = _want(args.args, 0, "semiring file")
        S = _load_semiring(path)
        M = core.regular_semimodule(S)
        _emit(fileformat.serialize_semimodule(M, path), args.out)
    elif kind == "witness":
        which = _want(args.args, 0, "witness name (b4 or b31)")
        out_dir = args.out or "."
        os.makedirs(out_dir, exist_ok=True)
        if which == "b4":
            S = constructions.chain_semiring(3)
            M, sub, pairs = constructions.b4_extension_counterexample()
        elif which == "b31":
            S = constructions.b31()
            M, sub, pairs = constructions.b31_retract_counterexample()
        else:
            print(f"unknown witness {which!r}; choose b4 or b31", file=sys.stderr)
            return EX_USAGE
        base = os.path.join(out_dir, "base.sr")
        ambient = os.path.join(out_dir, "ambient.sm")
        with open(base, "w", encoding="utf-8") as fh:
            fh.write(fileformat.serialize_semiring(S))
        with open(ambient, "w", encoding="utf-8") as fh:
            fh.write(f"# non-extendable configuration: subset {list(sub)}, "
                     f"partial map {dict(pairs)} into the regular semimodule\n")
            fh.write(fileformat.serialize_semimodule(M, "base.sr"))
        print(f"wrote {base} and {ambient}")
    else:
        print(f"unknown constructor {kind!r}", file=sys.stderr)
        return EX_USAGE
    return EX_OK


def _want(values: list[str], i: int, what: str) -> str:
    if len(values) <= i:
        print(f"missing argument: {what}", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return values[i]


def _want_int(values: list[str], i: int, what: str) -> int:
    raw = _want(values, i, what)
    try:
        return int(raw)
    except ValueError:
        print(f"{what} must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def build_parser() -> _Parser:
    parser = _Parser(prog="semiring-lab",
                     description="finite semiring/semimodule laboratory")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="validate an algebra file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("classes", help="element classes and property flags")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_classes)

    p = sub.add_parser("congruences", help="enumerate all congruences")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("subobjects", help="subsemimodules / left ideals with flags")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_subobjects)

    p = sub.add_parser("cyclic", help="cyclic semimodules up to isomorphism")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_cyclic)

    p = sub.add_parser("radical", help="the Bourne radical")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_radical)

    p = sub.add_parser("semisimple", help="direct-sum-of-atom-ideals check")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_semisimple)

    p = sub.add_parser("simplicity", help="simplicity report")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_simplicity)

    p = sub.add_parser("hom", help="enumerate homomorphisms between semimodules")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(fn=_cmd_hom)

    p = sub.add_parser("extend", help="extend a partial map along a subsemimodule")
    p.add_argument("ambient")
    p.add_argument("target")
    p.add_argument("--sub", required=True, help="subset, e.g. 0,2")
    p.add_argument("--map", required=True, help="partial map, e.g. 0:0,2:1")
    p.set_defaults(fn=_cmd_extend)

    p = sub.add_parser("iso", help="isomorphism search")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("essential", help="essential-extension test")
    p.add_argument("file")
    p.add_argument("--sub", required=True)
    p.set_defaults(fn=_cmd_essential)

    p = sub.add_parser("injective", help="bounded injectivity verdict for a semimodule")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(fn=_cmd_injective)

    p = sub.add_parser("ci", help="are all cyclic semimodules injective (bounded)?")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(fn=_cmd_ci)

    p = sub.add_parser("v", help="are all simple semimodules injective (bounded)?")
    p.add_argument("file")
    p.add_argument("--simple-bound", type=int, default=4)
    p.add_argument("--ext-bound", type=int, default=5)
    p.set_defaults(fn=_cmd_v)

    p = sub.add_parser("paper-suite", help="run the bundled verification suite")
    p.add_argument("--fast", action="store_true")
    p.add_argument("--records", help="write line-delimited JSON records here")
    p.set_defaults(fn=_cmd_paper_suite)

    p = sub.add_parser("construct", help="emit a named algebra as a file")
    p.add_argument("what", choices=["bN", "b31", "ext", "matrix", "lattice-bool",
                                    "lattice-chain", "product", "ring-z", "regular",
                                    "witness"])
    p.add_argument("args", nargs="*")
    p.add_argument("--out", help="output file (construct witness: output directory)")
    p.set_defaults(fn=_cmd_construct)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 0 for --help; funnel other exits through our codes
        code = exc.code if isinstance(exc.code, int) else EX_USAGE
        return code
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INVALID


if __name__ == "__main__":
    sys.exit(main())
