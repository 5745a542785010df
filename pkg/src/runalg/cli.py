"""
``runalg``: command-line access to the run algebras.

Every command prints one report ``{command, n, status, payload}`` as JSON
(default) or a CSV table.  Exit status is 0 on pass, 1 when a verification
fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Any

from .combinatorics import (
    check_composition,
    check_permutation,
    composition_peak_stats,
    composition_run_stats,
    descent_composition,
    descents_of,
    peak_stats,
    run_stats,
)
from .descent_algebra import DescentElement, internal_product, internal_product_oracle
from .group_algebra import OracleTooLarge, max_oracle_n
from .nsym import build_V, star
from .run_algebras import (
    COMMUTATIVE,
    AlgebraId,
    algebra_basis,
    build_P,
    build_P_oracle,
    build_W,
    build_W_oracle,
    closure_certificate,
    expected_dim,
    foulkes_table,
    idempotent,
    idempotent_system,
    v_to_w_basis,
)
from .sym import gamma


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# serialization


def rat(x) -> str:
    return str(Fraction(x))


def element_json(x: DescentElement) -> dict:
    return {
        "degree": x.n,
        "basis": x.basis,
        "terms": [{"composition": list(c), "coeff": rat(v)} for c, v in sorted(x.terms.items())],
    }


def element_rows(x: DescentElement, label: str | None = None) -> list[list]:
    prefix = [label] if label is not None else []
    return [prefix + [" ".join(map(str, c)), rat(v)] for c, v in sorted(x.terms.items())]


# --------------------------------------------------------------------------
# element specifications


_W_VARIANTS = {"W+": "plus", "W-": "minus", "W": "plain", "Wcirc": "circ"}
_P_VARIANTS = {"P": "plain", "Pcirc": "circ"}
_V_SIGNS = {"V+": "+", "V-": "-", "V": "both"}
_FAMILIES = {"I+": "Iplus", "I-": "Iminus", "J+": "Jplus", "J-": "Jminus"}


def parse_composition(text: str) -> tuple[int, ...]:
    try:
        return check_composition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad composition {text!r}: {exc}") from None


def parse_element(text: str, n: int | None, basis: str = "R") -> DescentElement:
    """``R:1,2``, ``S:3``, ``W+:2``, ``Wcirc:3``, ``P:0``, ``V-:2``, ``J+:1`` or a bare composition."""
    kind, sep, arg = text.partition(":")
    if not sep:
        kind, arg = basis, text
    if kind in ("R", "S"):
        comp = parse_composition(arg)
        if n is not None and sum(comp) != n:
            raise UsageError(f"{text!r} has degree {sum(comp)}, not {n}")
        return DescentElement(sum(comp), kind, {comp: 1})
    if n is None:
        raise UsageError(f"{text!r} needs --n")
    try:
        k = int(arg)
        if kind in _W_VARIANTS:
            return build_W(n, k, _W_VARIANTS[kind])
        if kind in _P_VARIANTS:
            return build_P(n, k, _P_VARIANTS[kind])
        if kind in _V_SIGNS:
            return build_V(k, _V_SIGNS[kind], n)[n]
        if kind in _FAMILIES:
            return idempotent(n, _FAMILIES[kind], k)
    except ValueError as exc:
        raise UsageError(f"bad element {text!r}: {exc}") from None
    raise UsageError(f"unknown element kind {kind!r}")


def _oracle_element(text: str, n: int) -> DescentElement | None:
    kind, _, arg = text.partition(":")
    if kind in _W_VARIANTS:
        return build_W_oracle(n, int(arg), _W_VARIANTS[kind])
    if kind in _P_VARIANTS:
        return build_P_oracle(n, int(arg), _P_VARIANTS[kind])
    return None


def _require_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    return args.n


def _require_algebra(args) -> AlgebraId:
    if args.algebra is None:
        raise UsageError("--algebra is required")
    return AlgebraId(args.algebra)


def _check_oracle_n(n: int):
    if n > max_oracle_n():
        raise OracleTooLarge(f"--oracle is limited to n ≤ {max_oracle_n()} (RUNALG_MAX_ORACLE_N)")


# --------------------------------------------------------------------------
# commands; each returns (status_ok, payload, csv rows)


def cmd_stats(args):
    if args.word:
        try:
            w = check_permutation(int(p) for p in args.word.split(","))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rs, ps = run_stats(w), peak_stats(w)
        comp = descent_composition(w)
    elif args.composition:
        comp = parse_composition(args.composition)
        rs, ps = composition_run_stats(comp), composition_peak_stats(comp)
    else:
        n = _require_n(args)
        payload = {"dimensions": {a.value: expected_dim(n, a) for a in AlgebraId}} if n >= 2 else {"dimensions": {}}
        rows = [["algebra", "dim"]] + [[k, v] for k, v in payload["dimensions"].items()]
        return True, payload, rows
    payload = {
        "composition": list(comp),
        "descents": sorted(descents_of(comp)),
        "run": rs.run,
        "first_ascending": rs.first_ascending,
        "left_run": rs.left_run,
        "pk": ps.pk,
        "pk_left": ps.pk_left,
    }
    rows = [["statistic", "value"]] + [[k, json.dumps(v)] for k, v in payload.items()]
    return True, payload, rows


def cmd_element(args):
    basis = args.basis
    if args.element:
        x = parse_element(args.element, args.n, basis).to_basis(basis)
        payload: dict[str, Any] = {"label": args.element, "element": element_json(x)}
        ok = True
        if args.oracle:
            _check_oracle_n(x.n)
            ref = _oracle_element(args.element, x.n)
            if ref is not None:
                ok = ref == x
                payload["oracle_agrees"] = ok
        return ok, payload, [["composition", "coeff"]] + element_rows(x)
    n, alg = _require_n(args), _require_algebra(args)
    basis_elems = algebra_basis(n, alg)
    payload = {"algebra": alg.value, "basis": [{"label": lbl, "element": element_json(e.to_basis(basis))} for lbl, e in basis_elems]}
    rows = [["label", "composition", "coeff"]]
    for lbl, e in basis_elems:
        rows += element_rows(e.to_basis(basis), lbl)
    return True, payload, rows


def cmd_product(args):
    if not args.left or not args.right:
        raise UsageError("product needs --left and --right")
    if args.mode == "external":
        x = parse_element(args.left, None if ":" not in args.left else args.n, args.basis)
        y = parse_element(args.right, None if ":" not in args.right else args.n, args.basis)
        z = star(x.to_basis(args.basis), y)
        ok, payload = True, {"mode": "external"}
    else:
        x = parse_element(args.left, args.n, args.basis)
        y = parse_element(args.right, x.n, args.basis)
        z = internal_product(x, y).to_basis(args.basis)
        ok, payload = True, {"mode": "internal"}
        if args.oracle:
            _check_oracle_n(x.n)
            ok = internal_product_oracle(x, y) == z
            payload["oracle_agrees"] = ok
    payload.update({"left": element_json(x), "right": element_json(y), "product": element_json(z.to_basis(args.basis))})
    return ok, payload, [["composition", "coeff"]] + element_rows(z.to_basis(args.basis))


def cmd_verify(args):
    n, alg = _require_n(args), _require_algebra(args)
    if n < 2:
        raise UsageError("verify needs n ≥ 2")
    cert = closure_certificate(n, alg)
    witness = cert.asymmetry_witness()
    checks = {
        "closed": True,
        "dimension": cert.dim == expected_dim(n, alg),
        "commutativity": (witness is None) == (alg in COMMUTATIVE) or (alg is AlgebraId.WPM and n < 3),
        "v_basis_invertible": v_to_w_basis(n, alg).invertible,
    }
    if args.oracle:
        _check_oracle_n(n)
        checks["oracle"] = cert.verify(oracle=True)
    constants = [
        {"i": cert.labels[i], "j": cert.labels[j], "k": cert.labels[k], "coeff": rat(c)}
        for i in range(cert.dim)
        for j in range(cert.dim)
        for k, c in enumerate(cert.constants[i][j])
        if c
    ]
    payload = {
        "algebra": alg.value,
        "dim": cert.dim,
        "labels": list(cert.labels),
        "commutative": witness is None,
        "asymmetry_witness": list(witness) if witness else None,
        "structure_constants": constants,
        "checks": checks,
    }
    rows = [["i", "j", "k", "coeff"]] + [[c["i"], c["j"], c["k"], c["coeff"]] for c in constants]
    return all(checks.values()), payload, rows


def cmd_idempotents(args):
    n, alg = _require_n(args), _require_algebra(args)
    if n < 2:
        raise UsageError("idempotents needs n ≥ 2")
    system = idempotent_system(n, alg, check=args.check)
    items = [
        {"label": lbl, "element": element_json(e.to_basis(args.basis))} for lbl, e in zip(system.labels, system.elements)
    ]
    payload = {"algebra": alg.value, "complete": system.complete, "idempotents": items}
    if args.check:
        payload["checks"] = system.checks
    rows = [["label", "composition", "coeff"]]
    for lbl, e in zip(system.labels, system.elements):
        rows += element_rows(e.to_basis(args.basis), lbl)
    return (system.passed if args.check else True), payload, rows


def cmd_gamma(args):
    if not args.element:
        raise UsageError("gamma needs --element")
    x = parse_element(args.element, args.n, args.basis)
    g = gamma(x)
    terms = [{"partition": list(lam), "coeff": rat(c)} for lam, c in sorted(g.terms.items())]
    payload = {"label": args.element, "degree": x.n, "power_sum_terms": terms}
    return True, payload, [["partition", "coeff"]] + [[" ".join(map(str, t["partition"])), t["coeff"]] for t in terms]


def cmd_characters(args):
    n, alg = _require_n(args), _require_algebra(args)
    if n < 2:
        raise UsageError("characters needs n ≥ 2")
    try:
        table = foulkes_table(n, alg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "algebra": alg.value,
        "partitions": [list(lam) for lam in table.columns],
        "characters": [{"label": lbl, "values": [rat(v) for v in row]} for lbl, row in zip(table.labels, table.values)],
        "checks": table.checks,
    }
    rows = [["label"] + [" ".join(map(str, lam)) for lam in table.columns]]
    rows += [[lbl] + [rat(v) for v in row] for lbl, row in zip(table.labels, table.values)]
    return table.passed, payload, rows


def cmd_bijection(args):
    from .bijection import MAX_BIJECTION_N, verify_bijection

    n = _require_n(args)
    if not 2 <= n <= MAX_BIJECTION_N:
        raise UsageError(f"bijection needs 2 ≤ n ≤ {MAX_BIJECTION_N}")
    rep = verify_bijection(n)
    payload = {
        "adjacent_pairs": rep.adjacent_pairs,
        "pairs_checked": rep.pairs_checked,
        "cases": dict(sorted(rep.case_counts.items())),
        "delta_pairs": rep.delta_pairs,
        "delta_cases": dict(sorted(rep.delta_cases.items())),
        "checks": rep.checks,
        "failures": rep.failures,
    }
    rows = [["check", "passed"]] + [[k, v] for k, v in rep.checks.items()]
    return rep.passed, payload, rows


COMMANDS = {
    "stats": cmd_stats,
    "element": cmd_element,
    "product": cmd_product,
    "verify": cmd_verify,
    "idempotents": cmd_idempotents,
    "gamma": cmd_gamma,
    "characters": cmd_characters,
    "bijection": cmd_bijection,
}


# --------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--algebra", choices=[a.value for a in AlgebraId])
    common.add_argument("--basis", choices=["R", "S"], default="R")
    common.add_argument("--mode", choices=["internal", "external"], default="internal")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--oracle", action="store_true", help="cross-check against the group algebra")
    common.add_argument("--cutoff", type=int, help="series degree (defaults to n)")
    common.add_argument("--out", help="write the report to FILE")
    common.add_argument("--check", action="store_true")
    common.add_argument("--left")
    common.add_argument("--right")
    common.add_argument("--element", help="e.g. W+:3, P:0, V-:2, J+:1, R:1,2")
    common.add_argument("--word", help="permutation in one-line notation, comma separated")
    common.add_argument("--composition")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds")

    parser = argparse.ArgumentParser(prog="runalg", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _render(report: dict, rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cutoff is not None and args.n is None:
        args.n = args.cutoff
    start = time.perf_counter()
    try:
        ok, payload, rows = COMMANDS[args.command](args)
    except (UsageError, OracleTooLarge) as exc:
        print(f"runalg {args.command}: {exc}", file=sys.stderr)
        return 2
    report: dict[str, Any] = {
        "command": args.command,
        "n": args.n,
        "status": "pass" if ok else "fail",
        "payload": payload,
    }
    if args.timing:
        report["timing"] = round(time.perf_counter() - start, 6)
    text = _render(report, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
