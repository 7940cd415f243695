"""Command-line interface: count, enumerate, verify, biject, oracle-diff.

Exit status 0 means success, 1 a usage or input error, and 2 that a
mathematical check came out unequal."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import growth, littlewood, paths_h1, tableaux, updown, walks_matchings
from .partitions import INF, partition, partitions_of
from .walks_matchings import Matching

EXIT_OK, EXIT_USAGE, EXIT_FINDING = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _norm(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def _int_list(text: str) -> list:
    out = []
    for chunk in str(text).split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            out.append(int(chunk))
    return out


def _half(text: str) -> Fraction:
    value = Fraction(text)
    if (value * 2).denominator != 1:
        raise UsageError(f"{text} is not an integer or half-integer")
    return value


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# identity registry

IDENTITIES: dict = {}
for _tag in littlewood.ALL_IDS:
    IDENTITIES[_norm(_tag)] = ("littlewood", _tag)
for _tag in walks_matchings.CORRESPONDENCES:
    IDENTITIES[_norm(_tag)] = ("correspondence", _tag)
for _tag in paths_h1.H1_IDENTITIES:
    IDENTITIES[_norm(_tag)] = ("h1", _tag)
for _tag in list(updown.THEOREM_MARKING) + list(updown.COROLLARY_DET):
    IDENTITIES[_norm(_tag)] = ("updown", _tag)
for _tag in littlewood.KINDS:
    IDENTITIES[_norm("framework_" + _tag)] = ("framework", _tag)
IDENTITIES["section5"] = ("section5", "section5")


def _grid(args, name: str, default=None) -> list:
    value = getattr(args, name)
    if value is None:
        if default is None:
            raise UsageError(f"--{name} is required")
        return list(default)
    return _int_list(value)


def _verify_cell(cell: tuple) -> dict:
    kind, tag, h, w, n, deg, timing = cell
    start = time.perf_counter()
    row = {"identity": tag, "h": h, "w": w, "vars": n, "deg": deg, "equal": None, "discrepancy": None}
    if kind == "littlewood":
        classical = tag in littlewood.CLASSICAL_IDS
        rep = littlewood.verify_identity(tag, h, INF if classical else w, n, deg)
        row = rep.to_dict()
    elif kind == "correspondence":
        a, b = walks_matchings.correspondence_sides(tag, n, h, w)
        row.update(equal=a == b, discrepancy=None if a == b else {"lhs": a, "rhs": b}, deg=None)
        row["vars"], row["n"] = None, n
    elif kind == "h1":
        a, b = paths_h1.h1_sides(tag, n, w)
        row.update(equal=a == b, discrepancy=None if a == b else {"lhs": a, "rhs": b}, deg=None, h=1)
        row["vars"], row["n"] = None, n
    elif kind == "updown":
        row.update(equal=updown.verify_updown(tag, h, w, n), deg=None)
    elif kind == "framework":
        m = h
        A = littlewood.structure_matrix(tag, m, w)
        cond = littlewood.check_framework_conditions(tag, m, w)
        ok = bool(cond)
        if ok:
            ok = littlewood.general_pfaffian_sum(tag, A.p, m, w, n, deg) == littlewood.framework_target(tag, m, w, n, deg)
        row.update(equal=ok, h=m)
        if not cond:
            row["discrepancy"] = {"failures": [str(f) for f in cond.failures[:5]]}
    elif kind == "section5":
        checks = littlewood.pfaffian_chain_checks(h, w, n, deg)
        ok = all(v is not False for v in checks.values())
        row.update(equal=ok, discrepancy=None if ok else {k: v for k, v in checks.items() if v is False})
        row["N"] = row.pop("w")
    row["ms"] = int((time.perf_counter() - start) * 1000) if timing else 0
    return row


def _run_cells(fn, cells: list) -> list:
    workers = int(os.environ.get("ARTIFACT_WORKERS", "1") or 1)
    if workers <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells))


def cmd_verify(args) -> tuple:
    key = _norm(args.identity)
    if key not in IDENTITIES:
        raise UsageError(f"unknown identity {args.identity!r}")
    kind, tag = IDENTITIES[key]
    hs = _grid(args, "h", [1])
    ws = _grid(args, "w", [1])
    ns = _grid(args, "vars", None) if kind in ("littlewood", "framework", "section5") else None
    if ns is None:
        ns = _int_list(args.n) if args.n is not None else _grid(args, "vars", None)
    degs = _grid(args, "deg", [6]) if kind in ("littlewood", "framework", "section5") else [None]
    cells = [(kind, tag, h, w, n, d, args.timing) for h in hs for w in ws for n in ns for d in degs]
    try:
        rows = _run_cells(_verify_cell, cells)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    status = EXIT_OK if all(r["equal"] for r in rows) else EXIT_FINDING
    return rows, status


# counting

COUNT_FAMILIES = ("csyt", "ncnn", "ncnn_prime", "vt", "vt_signed", "udt", "bessel") + paths_h1.KINDS


def _count(args) -> dict:
    fam = args.family
    n = _need(args.n_int, "n")
    params: dict = {"n": n}
    if fam == "csyt":
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        value = tableaux.csyt_count(n, h, w, args.method or "chain_dp")
        params.update(h=h, w=w)
    elif fam == "ncnn":
        r, s = _half(_need(args.r, "r")), _half(_need(args.s, "s"))
        value = walks_matchings.ncnn_count(n, r, s)
        params.update(r=_fraction_str(r), s=_fraction_str(s))
    elif fam == "ncnn_prime":
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        value = walks_matchings.ncnn_prime_signed(n, h, w)
        params.update(h=h, w=w)
    elif fam in ("vt", "vt_signed"):
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        variant = args.variant or ("prime" if fam == "vt_signed" else "plain")
        count = walks_matchings.vt_signed_count if fam == "vt_signed" else walks_matchings.vt_count
        value = count(n, h, w, variant)
        params.update(h=h, w=w, variant=variant)
    elif fam == "udt":
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        value = updown.udt_count(n, h, w)
        params.update(h=h, w=w)
    elif fam == "bessel":
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        value = walks_matchings.ncnn_bessel_count(n, h, w)
        params.update(h=h, w=w)
    else:
        bound = _need(args.w_int, "w")
        value = paths_h1.count_family(fam, n, bound, args.method or "dp")
        params.update(w=bound)
    return {"family": fam, **params, "value": value}


def _need(value, name: str):
    if value is None:
        raise UsageError(f"--{name} is required")
    return value


def cmd_count(args) -> tuple:
    if args.family not in COUNT_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    try:
        return [_count(args)], EXIT_OK
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


# enumeration

ENUM_FAMILIES = ("vt", "ncnn", "matchings", "syt", "csyt") + tuple(k for k in paths_h1.KINDS if k != "Mot2_signed")


def cmd_enumerate(args) -> tuple:
    fam = args.family
    n = _need(args.n_int, "n")
    rows = []
    if fam == "vt":
        h, w = _need(args.h_int, "h"), _need(args.w_int, "w")
        for T in walks_matchings.enumerate_vt(n, h, w, args.variant or "plain"):
            rows.append({"chain": [list(l) for l in T.chain]})
    elif fam in ("ncnn", "matchings"):
        if fam == "ncnn":
            r, s = _half(_need(args.r, "r")), _half(_need(args.s, "s"))
            ms = walks_matchings.ncnn_matchings(n, r, s)
        else:
            ms = list(walks_matchings.all_matchings(n))
        rows = [M.to_dict() for M in sorted(ms, key=lambda M: sorted(M.arcs))]
    elif fam in ("syt", "csyt"):
        h = _need(args.h_int, "h")
        for lam in partitions_of(n, max_len=h):
            for T in tableaux.standard_tableaux(lam):
                if fam == "csyt" and not tableaux.is_cylindric(T, h, _need(args.w_int, "w"), tableaux.SSYT):
                    continue
                rows.append({"tableau": [list(r) for r in T]})
    elif fam in paths_h1.KINDS:
        for p in paths_h1.enumerate_family(fam, n, _need(args.w_int, "w")):
            rows.append({"path": p})
    else:
        raise UsageError(f"unknown family {fam!r}")
    return rows, EXIT_OK


# bijections

MAPS = (
    "syt_matching",
    "matching_syt",
    "matching_vt",
    "vt_matching",
    "chen_phi",
    "chen_phi_inverse",
    "ncnn_symmetry",
    "matching_motzkin",
    "special_involution",
    "dershowitz",
    "psi",
)


def _apply_map(name: str, obj, args):
    parity = args.parity or "odd"
    if name == "syt_matching":
        return growth.syt_to_matching(obj).to_dict()
    if name == "matching_syt":
        return [list(r) for r in growth.matching_to_syt(Matching.from_dict(obj))]
    if name == "matching_vt":
        return [list(l) for l in growth.matching_vt(Matching.from_dict(obj), parity)]
    if name == "vt_matching":
        return growth.vt_matching([partition(l) for l in obj], parity).to_dict()
    if name == "chen_phi":
        T = walks_matchings.chen_phi(Matching.from_dict(obj), _need(args.h_int, "h"), _need(args.w_int, "w"))
        return [list(l) for l in T.chain]
    if name == "chen_phi_inverse":
        T = walks_matchings.VacillatingTableau(
            tuple(partition(l) for l in obj), _need(args.h_int, "h"), _need(args.w_int, "w")
        )
        return walks_matchings.chen_phi_inverse(T).to_dict()
    if name == "ncnn_symmetry":
        return growth.ncnn_symmetry(Matching.from_dict(obj)).to_dict()
    if name == "matching_motzkin":
        return paths_h1.matching_to_motzkin(Matching.from_dict(obj))
    if name == "special_involution":
        return paths_h1.special_involution(obj, _need(args.w_int, "w"))
    if name == "dershowitz":
        return paths_h1.dershowitz(obj)
    if name == "psi":
        return paths_h1.psi(obj)
    raise UsageError(f"unknown map {name!r}")


def _round_trip(name: str, obj, args) -> bool:
    out = _apply_map(name, obj, args)
    parity = args.parity or "odd"
    if name == "matching_syt":
        return growth.syt_to_matching(out).to_dict() == Matching.from_dict(obj).to_dict()
    if name == "matching_vt":
        return growth.vt_matching(out, parity) == Matching.from_dict(obj)
    if name == "chen_phi":
        T = walks_matchings.VacillatingTableau(tuple(partition(l) for l in out), args.h_int, args.w_int)
        return walks_matchings.chen_phi_inverse(T) == Matching.from_dict(obj)
    if name in ("ncnn_symmetry", "special_involution"):
        return _apply_map(name, out, args) == (obj if name == "special_involution" else Matching.from_dict(obj).to_dict())
    if name == "matching_motzkin":
        return paths_h1.motzkin_to_matching(out) == Matching.from_dict(obj)
    if name == "dershowitz":
        return paths_h1.dershowitz_inverse(out, _need(args.w_int, "w")) == obj
    if name == "psi":
        return paths_h1.psi_inverse(out, _need(args.w_int, "w")) == obj
    raise UsageError(f"no round trip sampler for {name!r}")


def _sample_domain(name: str, args, rng: random.Random, count: int) -> list:
    n = _need(args.n_int, "n")
    if name in ("matching_syt", "ncnn_symmetry", "matching_vt"):
        pool = list(walks_matchings.all_matchings(n))
    elif name == "chen_phi":
        pool = walks_matchings.ncnn_matchings(n, args.h_int + 1, args.w_int + 1)
    elif name == "matching_motzkin":
        pool = walks_matchings.ncnn_matchings(n, 2, n + 1)
    elif name == "special_involution":
        return _pick(list(paths_h1.enumerate_family("Mot2", n, args.w_int)), rng, count)
    elif name == "dershowitz":
        return _pick(list(paths_h1.enumerate_family("DP", n, args.w_int)), rng, count)
    elif name == "psi":
        return _pick(list(paths_h1.enumerate_family("GD", n, args.w_int)), rng, count)
    else:
        raise UsageError(f"no sampler for {name!r}")
    return [M.to_dict() for M in _pick(pool, rng, count)]


def _pick(pool: list, rng: random.Random, count: int) -> list:
    if not pool:
        return []
    return [pool[rng.randrange(len(pool))] for _ in range(count)]


def cmd_biject(args) -> tuple:
    name = _norm(args.map)
    if name not in MAPS:
        raise UsageError(f"unknown map {args.map!r}")
    try:
        if args.input is not None:
            text = args.input
            obj = text if name in ("special_involution", "dershowitz", "psi") else json.loads(text)
            return [{"map": name, "input": obj, "output": _apply_map(name, obj, args)}], EXIT_OK
        if name in ("chen_phi", "special_involution", "dershowitz", "psi"):
            _need(args.w_int, "w")
        if name == "chen_phi":
            _need(args.h_int, "h")
        rng = random.Random(args.seed)
        rows = []
        for obj in _sample_domain(name, args, rng, args.samples):
            rows.append({"map": name, "input": obj, "round_trip": _round_trip(name, obj, args)})
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from exc
    status = EXIT_OK if all(r["round_trip"] for r in rows) else EXIT_FINDING
    return rows, status


# two methods for one quantity

ORACLE_PAIRS = {
    "csyt": ("chain_dp", "brute"),
    "csyt_formula": ("chain_dp", "factorial_formula"),
    "ncnn": ("enumeration", "bessel"),
    "vt": ("dp", "enumeration"),
    "dp_paths": ("dp", "reflection"),
}


def _oracle_cell(cell: tuple) -> dict:
    quantity, n, h, w, variant = cell
    if quantity == "csyt":
        a, b = tableaux.csyt_count(n, h, w, "chain_dp"), tableaux.csyt_count(n, h, w, "brute")
    elif quantity == "csyt_formula":
        a, b = tableaux.csyt_count(n, h, w, "chain_dp"), tableaux.csyt_count(n, h, w, "factorial_formula")
    elif quantity == "ncnn":
        a, b = walks_matchings.ncnn_count(n, h + 1, w + 1), walks_matchings.ncnn_bessel_count(n, h, w)
    elif quantity == "vt":
        a = walks_matchings.vt_count(n, h, w, variant)
        b = sum(1 for _ in walks_matchings.enumerate_vt(n, h, w, variant))
    elif quantity == "dp_paths":
        a, b = paths_h1.count_family("DP", n, w), paths_h1.reflection_count(n, w)
    else:
        raise UsageError(f"unknown quantity {quantity!r}")
    return {"quantity": quantity, "n": n, "h": h, "w": w, "a": a, "b": b, "diff": a - b}


def cmd_oracle_diff(args) -> tuple:
    quantity = _norm(args.quantity)
    if quantity not in ORACLE_PAIRS:
        raise UsageError(f"unknown quantity {args.quantity!r}")
    ns = _int_list(args.n) if args.n is not None else list(range(0, 7))
    hs = _grid(args, "h", [1, 2])
    ws = _grid(args, "w", [1, 2])
    if quantity == "csyt_formula" and any(h % 2 == 0 for h in hs) | any(w % 2 == 0 for w in ws):
        raise UsageError("the factorial formula is available for odd h and w only")
    variant = args.variant or "plain"
    cells = [(quantity, n, h, w, variant) for n in ns for h in hs for w in ws]
    rows = _run_cells(_oracle_cell, cells)
    status = EXIT_OK if all(r["diff"] == 0 for r in rows) else EXIT_FINDING
    return rows, status


# output


def _render(rows: list, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, default=str)
    if fmt == "csv":
        keys = sorted({k for r in rows for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in rows:
        lines.append(" ".join(f"{k}={json.dumps(r[k], sort_keys=True, default=str)}" for k in sorted(r)))
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="artifact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, grid: bool = False):
        if grid:
            p.add_argument("--h", help="integer or list such as 1,2 or 1..3")
            p.add_argument("--w", help="integer or list")
            p.add_argument("--n", help="integer or list")
        else:
            p.add_argument("--h", dest="h_int", type=int)
            p.add_argument("--w", dest="w_int", type=int)
            p.add_argument("--n", dest="n_int", type=int)
        p.add_argument("--output", choices=("json", "csv", "text"), default="text")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", help="count a family")
    p.add_argument("--family", required=True)
    p.add_argument("--r")
    p.add_argument("--s")
    p.add_argument("--variant")
    p.add_argument("--method")
    common(p)

    p = sub.add_parser("enumerate", help="list the members of a family")
    p.add_argument("--family", required=True)
    p.add_argument("--r")
    p.add_argument("--s")
    p.add_argument("--variant")
    common(p)

    p = sub.add_parser("verify", help="check an identity over a grid")
    p.add_argument("--identity", required=True)
    p.add_argument("--vars")
    p.add_argument("--deg")
    p.add_argument("--timing", action="store_true", help="record wall time in ms (off keeps output reproducible)")
    common(p, grid=True)

    p = sub.add_parser("biject", help="apply a bijection, or round-trip random samples")
    p.add_argument("--map", required=True)
    p.add_argument("--input", help="JSON object, or a step string for path maps")
    p.add_argument("--parity", choices=("odd", "even"))
    p.add_argument("--samples", type=int, default=20)
    common(p)

    p = sub.add_parser("oracle-diff", help="compare two methods for one quantity")
    p.add_argument("--quantity", required=True, help=", ".join(ORACLE_PAIRS))
    p.add_argument("--variant")
    common(p, grid=True)
    return parser


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "biject": cmd_biject,
    "oracle-diff": cmd_oracle_diff,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rows, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "count" and args.output == "text":
        print(rows[0]["value"])
    else:
        print(_render(rows, args.output))
    return status


if __name__ == "__main__":
    sys.exit(main())
