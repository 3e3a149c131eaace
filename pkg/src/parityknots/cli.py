"""Command-line front end.

Every command prints a single document on standard output (``--json`` for
JSON) and diagnostics on standard error.  Exit codes: 0 success, 2 bad
input, 3 internal invariant violation, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import Any, Optional, Sequence

from .diagram import (
    VirtualGaussDiagram,
    canonical_key,
    parse_free,
    parse_virtual,
)
from .errors import BudgetExceeded, InvariantViolation, KnotError, MalformedCode
from .invariants import (
    L_invariant,
    bracket,
    bracket_links,
    component_parity,
    even_kauffman,
    jones_x,
    kauffman_bracket,
    source_sink,
    turaev_delta,
    writhe,
    x_even,
)
from .moves import reduce_r2
from .parity import gaussian_parity, index
from .projections import filtration_level, project_level
from .search import (
    DEFAULT_BUDGET,
    find_irreducibly_odd,
    find_L_witness,
    find_nonzero_L,
    oracle_equiv,
    trivializations,
)

EXIT_OK, EXIT_PARSE, EXIT_VIOLATION, EXIT_BUDGET = 0, 2, 3, 4
_VTOKEN = re.compile(r"^[OU]\w+[+-]$")


def looks_virtual(text: str) -> bool:
    toks = text.split()
    return bool(toks) and all(_VTOKEN.match(t) for t in toks)


def parse_code(text: str, virtual: bool = False):
    if virtual or looks_virtual(text):
        return parse_virtual(text)
    return parse_free(text)


def _parity_names(par: dict[str, int]) -> dict[str, str]:
    return {c: ("odd" if v else "even") for c, v in sorted(par.items(), key=lambda kv: _label_order(kv[0]))}


def _label_order(label: str):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def _sorted_map(m: dict[str, Any]) -> dict[str, Any]:
    return {k: m[k] for k in sorted(m, key=_label_order)}


def invariant_report(d) -> dict[str, Any]:
    """All invariants that apply to ``d``, keyed by name."""
    virtual = isinstance(d, VirtualGaussDiagram)
    base = d.base
    rep: dict[str, Any] = {
        "input": str(d),
        "canonical": str(canonical_key(d)),
        "chords": d.n_chords,
        "components": base.n_components,
    }
    if base.n_components == 1:
        par = gaussian_parity(d)
        rep["parity"] = _parity_names(par)
        if virtual:
            ind = index(d)
            for c, v in ind.items():
                if v % 2 != par[c]:
                    raise InvariantViolation(f"index of {c} disagrees with its parity")
            rep["index"] = _sorted_map(ind)
            level = filtration_level(d)
            rep["filtration_level"] = "inf" if level == math.inf else int(level)
        rep["bracket"] = bracket(d).codes()
        rep["delta"] = turaev_delta(d).codes()
        rep["L"] = L_invariant(d)
        rep["source_sink"] = source_sink(d)
    elif base.n_components == 2:
        rep["parity"] = _parity_names(component_parity(base))
        rep["bracket_links"] = bracket_links(base, component_parity).codes()
        rep["source_sink"] = source_sink(base)
    else:
        rep["source_sink"] = source_sink(base)
    if virtual:
        rep["writhe"] = writhe(d)
        rep["kauffman"] = str(kauffman_bracket(d))
        rep["jones_x"] = str(jones_x(d))
        rep["even_kauffman"] = str(even_kauffman(d))
        rep["x_even"] = str(x_even(d))
    return rep


def _format_text(doc: Any) -> str:
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, dict):
                v = " ".join(f"{a}:{b}" for a, b in v.items()) or "-"
            elif isinstance(v, list):
                v = " + ".join(f"[{x}]" for x in v) if v else "0"
            elif isinstance(v, bool):
                v = "yes" if v else "no"
            lines.append(f"{k}: {v}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(str(x) for x in doc)
    return str(doc)


def _emit(doc: Any, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(_format_text(doc))


def _inputs(args) -> list:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
        codes = [ln for ln in lines if ln and not ln.startswith("#")]
    else:
        codes = args.code
    if not codes:
        raise MalformedCode("no input code given")
    return [parse_code(c, args.virtual) for c in codes]


# ---------------------------------------------------------------------------
# commands


def cmd_parse(args) -> Any:
    out = []
    for d in _inputs(args):
        out.append({
            "input": str(d),
            "canonical": str(canonical_key(d)),
            "chords": d.n_chords,
            "components": d.base.n_components,
            "virtual": isinstance(d, VirtualGaussDiagram),
        })
    return out[0] if len(out) == 1 else out


def cmd_invariants(args) -> Any:
    out = [invariant_report(d) for d in _inputs(args)]
    return out[0] if len(out) == 1 else out


def cmd_reduce(args) -> Any:
    out = [str(canonical_key(reduce_r2(d))) for d in _inputs(args)]
    return out[0] if len(out) == 1 else out


def cmd_project(args) -> Any:
    out = []
    for d in _inputs(args):
        if not isinstance(d, VirtualGaussDiagram):
            raise MalformedCode("project needs a signed Gauss diagram")
        out.append(str(project_level(d, args.level)))
    return out[0] if len(out) == 1 else out


def cmd_search(args) -> Any:
    budget = args.budget or DEFAULT_BUDGET
    if args.find == "irreducibly-odd":
        return [str(k) for k in find_irreducibly_odd(args.max_chords, budget)]
    if args.find == "nonzero-L":
        return [str(k) for k in find_nonzero_L(args.max_chords, budget)]
    if args.find == "L-witness":
        n, w, log = find_L_witness(args.target, args.max_chords, seed=args.seed)
        for line in log:
            print(line, file=sys.stderr)
        return [] if w is None else [f"{w}  # L={L_invariant(w)}, chords={n}"]
    d = _inputs(args)[0]
    return [str(k) for k in trivializations(d, args.max_chords, budget)]


def cmd_oracle_equiv(args) -> Any:
    p = parse_code(args.first, args.virtual)
    q = parse_code(args.second, args.virtual)
    return oracle_equiv(p, q, args.max_chords, args.budget or DEFAULT_BUDGET)


def _level(text: str) -> float:
    if text in ("inf", "infinity"):
        return math.inf
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError("level must be non-negative")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parityknots",
        description="Parity invariants of free and virtual knots from Gauss codes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--virtual", action="store_true", help="read codes as signed Gauss diagrams")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget", type=int, default=None, help="cap on enumerated words or BFS nodes")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_codes(sp):
        sp.add_argument("code", nargs="*", help="Gauss code(s); free codes use '/' between components")
        sp.add_argument("--file", help="corpus file, one code per line")
        return sp

    with_codes(sub.add_parser("parse", parents=[common], help="validate and canonicalise codes"))
    with_codes(sub.add_parser("invariants", parents=[common], help="report all invariants"))
    with_codes(sub.add_parser("reduce", parents=[common], help="apply decreasing second moves"))
    sp = with_codes(sub.add_parser("project", parents=[common], help="project into a filtration level"))
    sp.add_argument("--level", type=_level, default=math.inf, help="integer or 'inf'")
    sp = with_codes(sub.add_parser("search", parents=[common], help="enumerate small diagrams"))
    sp.add_argument("--max-chords", type=int, required=True)
    sp.add_argument(
        "--find",
        choices=["irreducibly-odd", "nonzero-L", "trivializable", "L-witness"],
        required=True,
    )
    sp.add_argument("--target", type=int, default=4, help="L value sought by L-witness")
    sp = sub.add_parser("oracle-equiv", parents=[common], help="compare two codes")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--max-chords", type=int, default=None)
    return parser


COMMANDS = {
    "parse": cmd_parse,
    "invariants": cmd_invariants,
    "reduce": cmd_reduce,
    "project": cmd_project,
    "search": cmd_search,
    "oracle-equiv": cmd_oracle_equiv,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (KnotError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(doc, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
