"""Command-line calculator.

Every subcommand prints a human-readable answer, or with ``--json`` a
single object ``{"command", "value", "provenance", "status"[, "error"]}``.
Exit codes: 0 success, 2 precondition error, 1 internal error, 64 unknown
subcommand.  See docs/schema.md for the value encodings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import bott, classification, cross, plumbing, twist
from .classification import Category, KervaireStatus
from .errors import OrderSearchExhausted, PreconditionError
from .lattice import (
    AbelianGroup,
    Ambiguous,
    Bounded,
    Finite,
    Infinite,
    IntMatrix,
    matrix_pow,
)
from .plumbing import BoundaryInvariants, SphereType

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PRECONDITION = 2
EXIT_USAGE = 64


@dataclass
class QueryResult:
    command: str
    value: Any = None
    provenance: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "value": encode_value(self.value) if self.ok else None,
            "provenance": list(self.provenance),
            "status": "ok" if self.ok else "error",
        }
        if not self.ok:
            out["error"] = self.error
        return out

    @classmethod
    def from_json(cls, data: dict) -> QueryResult:
        ok = data["status"] == "ok"
        return cls(
            command=data["command"],
            value=decode_value(data["value"]) if ok else None,
            provenance=list(data["provenance"]),
            error=None if ok else data["error"],
        )


# ---------------------------------------------------------------------------
# value encoding


def encode_value(value: Any) -> Any:
    if isinstance(value, bool) or isinstance(value, int) or value is None:
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, Infinite):
        return {"kind": "infinite"}
    if isinstance(value, Finite):
        return {"kind": "finite", "order": value.order}
    if isinstance(value, Bounded):
        return {"kind": "bounded", "lower": value.lower, "upper": value.upper}
    if isinstance(value, Ambiguous):
        return {"kind": "ambiguous", "candidates": sorted(value.candidates)}
    if isinstance(value, AbelianGroup):
        return {"kind": "group", "free_rank": value.free_rank,
                "torsion": list(value.torsion), "text": str(value)}
    if isinstance(value, IntMatrix):
        return {"kind": "matrix", "rows": value.rows, "cols": value.cols,
                "entries": value.tolist()}
    if isinstance(value, twist.RelativeTwistAction):
        return {"kind": "action", "n": value.n, "epsilon": value.epsilon, "A": value.A,
                "matrix": value.matrix.tolist()}
    if isinstance(value, BoundaryInvariants):
        return {
            "kind": "boundary",
            "h_n": encode_value(value.h_n),
            "h_n_plus_1": encode_value(value.h_n_plus_1),
            "sphere_type": value.sphere_type.value if value.sphere_type else None,
            "note": value.note,
        }
    if isinstance(value, KervaireStatus):
        return {"kind": "kervaire", "status": value.value}
    if isinstance(value, bott.ContactClass):
        return {"kind": "contact-class", "residue": value.residue, "modulus": value.modulus}
    if isinstance(value, cross.CrossReport):
        ce = value.counterexample
        return {
            "kind": "cross-report",
            "samples": value.samples,
            "dims": list(value.dims),
            "passed": value.passed,
            "counterexample": None if ce is None else {
                "dim": ce.dim,
                "identity": ce.identity,
                "vectors": [[str(c) for c in vec.coords] for vec in ce.vectors],
            },
        }
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode_value(data: Any) -> Any:
    if data is None or isinstance(data, (bool, int, str)):
        return data
    if isinstance(data, list):
        return [decode_value(v) for v in data]
    kind = data["kind"]
    if kind == "infinite":
        return Infinite()
    if kind == "finite":
        return Finite(data["order"])
    if kind == "bounded":
        return Bounded(data["lower"], data["upper"])
    if kind == "ambiguous":
        return Ambiguous(frozenset(data["candidates"]))
    if kind == "group":
        return AbelianGroup(data["free_rank"], tuple(data["torsion"]))
    if kind == "matrix":
        return IntMatrix(data["entries"], ncols=data["cols"])
    if kind == "action":
        return twist.RelativeTwistAction(data["n"], data["epsilon"], data["A"])
    if kind == "boundary":
        st = data["sphere_type"]
        return BoundaryInvariants(
            decode_value(data["h_n"]),
            decode_value(data["h_n_plus_1"]),
            SphereType(st) if st else None,
            data["note"],
        )
    if kind == "kervaire":
        return KervaireStatus(data["status"])
    if kind == "contact-class":
        return bott.ContactClass(data["residue"], data["modulus"])
    if kind == "cross-report":
        ce = data["counterexample"]
        counterexample = None
        if ce is not None:
            vecs = tuple(cross.RationalVector([_fraction(c) for c in v]) for v in ce["vectors"])
            counterexample = cross.Counterexample(ce["dim"], ce["identity"], vecs)
        return cross.CrossReport(data["samples"], tuple(data["dims"]), counterexample)
    raise ValueError(f"unknown value kind {kind!r}")


def _fraction(text: str):
    from fractions import Fraction
    return Fraction(text)


def render_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, twist.RelativeTwistAction):
        return f"eps={value.epsilon:+d} A={value.A:+d}\n{value.matrix}"
    if isinstance(value, BoundaryInvariants):
        lines = [f"H_n     = {value.h_n}", f"H_(n+1) = {value.h_n_plus_1}"]
        if value.sphere_type is not None:
            lines.append(f"type    = {value.sphere_type.value}")
        if value.note:
            lines.append(f"note    = {value.note}")
        return "\n".join(lines)
    if isinstance(value, KervaireStatus):
        return value.value
    if isinstance(value, cross.CrossReport):
        if value.passed:
            return f"all identities hold on {value.samples} samples in dims {list(value.dims)}"
        ce = value.counterexample
        return f"FAILED: {ce.identity} in dim {ce.dim} at {ce.vectors}"
    if isinstance(value, list):
        return "\n\n".join(render_text(v) for v in value) if any(
            not isinstance(v, int) for v in value) else " ".join(map(str, value))
    return str(value)


# ---------------------------------------------------------------------------
# subcommands


def _order(args) -> QueryResult:
    cat = Category(args.category)
    if cat is Category.ALMOST_COMPLEX:
        return QueryResult("order", bott.ac_order_bounds(args.n), [bott.HARRIS, bott.BOTT, bott.USTILOVSKY])
    verdict = classification.explain_twist_order(cat, args.n)
    return QueryResult("order", verdict.result, [f"rule {verdict.rule}", *verdict.provenance])


def _matrix(args) -> QueryResult:
    action = twist.twist_matrix(args.n)
    if args.power is None:
        return QueryResult("matrix", action, [classification.PICARD_LEFSCHETZ])
    if args.power < 0:
        raise PreconditionError("power must be >= 0")
    return QueryResult("matrix", matrix_pow(action.matrix, args.power), [classification.PICARD_LEFSCHETZ])


def _enumerate(args) -> QueryResult:
    actions = twist.enumerate_homology_actions(args.n, args.a_range)
    ordered = sorted(actions, key=lambda a: (-a.epsilon, a.A))
    return QueryResult("enumerate-actions", ordered, ["intersection pairing <[D],[S^n]> = 1 preserved"])


def _boundary(args) -> QueryResult:
    return QueryResult("boundary", plumbing.open_book_boundary_homology(args.k, args.n), [classification.OPEN_BOOK])


def _arf(args) -> QueryResult:
    return QueryResult("arf", plumbing.arf_a_chain(args.l), ["exhaustive count over (Z/2)^l, q = 1 on vanishing cycles"])


def _sphere_type(args) -> QueryResult:
    return QueryResult("sphere-type", plumbing.boundary_sphere_type(args.k, args.n),
                       [classification.OPEN_BOOK, classification.HHR])


def _kervaire(args) -> QueryResult:
    return QueryResult("kervaire", classification.kervaire_status(args.dim), [classification.HHR])


def _chi_r(args) -> QueryResult:
    return QueryResult("chi-r", classification.chi_r_target(args.n), [classification.KAUFFMAN_KRYLOV])


def _bott(args) -> QueryResult:
    fn = bott.pi_O if args.space == "O" else bott.pi_O_mod_U
    return QueryResult("bott", fn(args.degree), [bott.BOTT])


def _harris(args) -> QueryResult:
    return QueryResult("harris", bott.harris_order(args.n), [bott.HARRIS])


def _contact_class(args) -> QueryResult:
    return QueryResult("contact-class", bott.ustilovsky_class(args.k, args.n), [bott.USTILOVSKY])


def _ac_bounds(args) -> QueryResult:
    return QueryResult("ac-bounds", bott.ac_order_bounds(args.n), [bott.HARRIS, bott.BOTT, bott.USTILOVSKY])


def _ac_consistent(args) -> QueryResult:
    return QueryResult("ac-consistent", bott.ac_consistent_orders(args.n), [bott.USTILOVSKY])


def _cross_selftest(args) -> QueryResult:
    return QueryResult("cross-selftest", cross.verify_cross_identities(args.samples, args.seed),
                       ["Fano-plane octonion table (Cayley-Dickson)"])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")

    parser = argparse.ArgumentParser(
        prog="dehntwist",
        description="Orders of the Dehn twist on T*S^n and the invariants behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    p = add("order", _order, "order of the twist in a mapping class group")
    p.add_argument("--category", required=True, choices=[c.value for c in Category])
    p.add_argument("--n", type=int, required=True)

    p = add("matrix", _matrix, "action on H_n(D*S^n, B), optionally raised to a power")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int)

    p = add("enumerate-actions", _enumerate, "all pairing-preserving actions (even n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a-range", type=int, default=twist.DEFAULT_A_RANGE)

    p = add("boundary", _boundary, "homology of the open book X_{tau^k}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("arf", _arf, "Arf invariant of the skew A_l form")
    p.add_argument("--l", type=int, required=True)

    p = add("sphere-type", _sphere_type, "identify X_{tau^k} as a sphere, if it is one")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("kervaire", _kervaire, "status of the Kervaire sphere in a dimension = 1 mod 4")
    p.add_argument("--dim", type=int, required=True)

    p = add("chi-r", _chi_r, "target of the chi_r homomorphism")
    p.add_argument("--n", type=int, required=True)

    p = add("bott", _bott, "pi_i(O) or pi_i(O/U)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--space", choices=["O", "O/U"], default="O")

    p = add("harris", _harris, "order of pi_(2n+1)(O(2n)/U(n))")
    p.add_argument("--n", type=int, required=True)

    p = add("contact-class", _contact_class, "almost-contact class of X_{tau^k}, k = +-1 mod 8")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("ac-bounds", _ac_bounds, "bounds on the almost-complex order")
    p.add_argument("--n", type=int, required=True)

    p = add("ac-consistent", _ac_consistent, "almost-complex orders consistent with the contact classes")
    p.add_argument("--n", type=int, required=True)

    p = add("cross-selftest", _cross_selftest, "check the cross-product identities")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _subcommands(parser: argparse.ArgumentParser) -> set[str]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return set(action.choices)
    return set()


def emit(result: QueryResult, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(result.to_json()) + "\n")
    elif result.ok:
        out.write(render_text(result.value) + "\n")
        for source in result.provenance:
            out.write(f"  source: {source}\n")
    else:
        sys.stderr.write(f"error: {result.error}\n")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    first = next((a for a in argv if not a.startswith("-")), None)
    if first is None or first not in _subcommands(parser):
        if "-h" in argv or "--help" in argv:
            parser.print_help()
            return EXIT_OK
        sys.stderr.write(parser.format_usage())
        if first is not None:
            sys.stderr.write(f"unknown subcommand {first!r}\n")
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PRECONDITION

    try:
        result = args.handler(args)
        code = EXIT_OK
    except (PreconditionError, OrderSearchExhausted) as exc:
        result = QueryResult(args.command, error=str(exc))
        code = EXIT_PRECONDITION
    except Exception as exc:  # noqa: BLE001 - reported, never swallowed silently
        result = QueryResult(args.command, error=f"internal error: {exc!r}")
        code = EXIT_INTERNAL
    emit(result, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
