"""Command-line front end.

Exit codes: 0 when every verdict is true, 1 when any verdict is false, 2 on
usage, parse or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import suite
from .bso import BSOError, bso_expand, bso_family
from .checker import PRESETS, Verdict, are_equivalent, holds_in_variety, is_consequence
from .kp import KPError, kp_transform
from .parser import (
    Identity,
    IdentityFile,
    ParseError,
    file_to_json,
    file_to_text,
    load,
    parse_identity,
    poly_to_json,
    term_to_text,
    to_text,
)
from .spaces import SPACES, DegreeError, StraighteningError, basis, max_degree
from .terms import MacroError, SignatureError, canonical

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, code: str = "usage"):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    degree: int | None = None
    space: str = "dialgebra"
    variety: str | None = None
    json: bool = False
    dump_matrix: str | None = None
    verbose: bool = False

    def __post_init__(self):
        if self.degree is not None and not 2 <= self.degree <= max_degree():
            raise UsageError(f"degree must lie in 2..{max_degree()}, got {self.degree}", "degree")
        if self.variety is not None and self.variety not in PRESETS:
            raise UsageError(f"unknown variety {self.variety!r}; known: {', '.join(PRESETS)}", "variety")


# -- input helpers ------------------------------------------------------------------

def _read_file(path: str) -> IdentityFile:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"{path}: no such file", "no_such_file")
    return load(p)


def _looks_like_path(arg: str) -> bool:
    return arg.endswith(".ids") or ("/" in arg and not any(c in arg for c in "()*|"))


def identities_from(arg: str) -> list[Identity]:
    """A file path, ``path:label``, or an inline identity."""
    if Path(arg).is_file():
        return list(_read_file(arg).identities)
    base, sep, label = arg.rpartition(":")
    if sep and Path(base).is_file():
        try:
            return [_read_file(base)[label]]
        except KeyError:
            raise UsageError(f"{base}: no identity labelled {label!r}", "no_such_label") from None
    if _looks_like_path(base if sep else arg):
        raise UsageError(f"{base if sep else arg}: no such file", "no_such_file")
    return [parse_identity(arg, label="input")]


def _one(arg: str) -> Identity:
    ids = identities_from(arg)
    if len(ids) != 1:
        raise UsageError(f"{arg}: expected one identity, found {len(ids)}; select one with path:label")
    return ids[0]


# -- subcommands ---------------------------------------------------------------------

def cmd_parse(cfg: RunConfig, args) -> int:
    f = _read_file(cfg.inputs[0])
    if args.canonical:
        f = IdentityFile(f.signature, [Identity(canonical(i.poly), i.label) for i in f.identities])
    print(file_to_json(f) if cfg.json else file_to_text(f), end="\n" if cfg.json else "")
    return EXIT_OK


def cmd_kp(cfg: RunConfig, args) -> int:
    idents = identities_from(cfg.inputs[0])
    centrals = None if args.central in (None, "all") else [args.central]
    docs, lines = [], []
    for ident in idents:
        res = kp_transform(ident, centrals)
        if cfg.json:
            docs.append({
                "label": ident.label,
                "zero_identities": [poly_to_json(z.poly, z.label) for z in res.zero_identities],
                "kp_identities": [
                    {"central": k.central, "duplicate_of": k.duplicate_of, **poly_to_json(canonical(k.identity.poly), k.identity.label)}
                    for k in res.kp_identities
                ],
            })
            continue
        lines.append(f"# {ident.label}")
        for k in res.kp_identities:
            dup = f"  # same as central {k.duplicate_of} up to renaming" if k.duplicate_of else ""
            lines.append(f"{k.identity.label}: {to_text(canonical(k.identity.poly))}{dup}")
        if args.zero:
            for z in res.zero_identities:
                lines.append(f"{z.label}: {to_text(z.poly)}")
    _emit(cfg, lines, {"schema": 1, "results": docs})
    return EXIT_OK


def cmd_bso(cfg: RunConfig, args) -> int:
    idents = identities_from(cfg.inputs[0])
    docs, lines = [], []
    for ident in idents:
        p = ident.poly
        if args.center == "all":
            fam = bso_family(p)
            outs = list(enumerate(fam.outputs, 1))
            rels = [r.describe(fam.args) for r in fam.relations]
        else:
            try:
                i = int(args.center)
            except ValueError:
                i = args.center
            outs = [(i, bso_expand(p, i))]
            rels = []
        if cfg.json:
            docs.append({"label": ident.label, "outputs": [poly_to_json(q, f"w{k}") for k, q in outs], "relations": rels})
            continue
        lines.append(f"# {ident.label}")
        lines += [f"w{k}: {to_text(q)}" for k, q in outs]
        lines += [f"# {r}" for r in rels]
    _emit(cfg, lines, {"schema": 1, "results": docs})
    return EXIT_OK


def cmd_basis(cfg: RunConfig, args) -> int:
    if cfg.degree is None:
        raise UsageError("basis needs --degree")
    names = args.variables or None
    b = basis(cfg.degree, cfg.space, names)
    texts = [term_to_text(t) for t in b.monomials]
    if args.compact:
        texts = [t.replace("*", "") for t in texts]
    _emit(cfg, texts, {"schema": 1, "degree": b.degree, "space": b.space, "variables": list(b.variables),
                       "dimension": len(b), "monomials": texts})
    return EXIT_OK


def _verdict_out(cfg: RunConfig, v: Verdict, label: str) -> int:
    if cfg.json:
        _emit(cfg, [], {"schema": 1, "name": label, **v.to_json()})
    else:
        ranks = ", ".join(f"{k} {x}" for k, x in v.ranks.items())
        dims = ", ".join(f"{k} {x}" for k, x in v.dims.items())
        print(f"{label}: {'true' if v else 'false'} ({ranks}{'; ' if ranks and dims else ''}{dims})")
        if v.residual is not None and cfg.verbose:
            print(f"residual: {to_text(v.residual)}")
    return EXIT_OK if v else EXIT_FALSE


def cmd_consequence(cfg: RunConfig, args) -> int:
    target = _one(cfg.inputs[0])
    if cfg.variety:
        if args.generators:
            raise UsageError("give either --variety or generators, not both")
        return _verdict_out(cfg, holds_in_variety(target, cfg.variety, cfg.degree), "holds-in-variety")
    if not args.generators:
        raise UsageError("check-consequence needs generators or --variety")
    gens = [g for arg in args.generators for g in identities_from(arg)]
    return _verdict_out(cfg, is_consequence(target, gens, cfg.space, cfg.degree), "consequence")


def cmd_equivalence(cfg: RunConfig, args) -> int:
    f = identities_from(cfg.inputs[0])
    g = identities_from(cfg.inputs[1])
    return _verdict_out(cfg, are_equivalent(f, g, cfg.space, cfg.degree), "equivalent")


def cmd_verify(cfg: RunConfig, args) -> int:
    if args.list:
        for name in suite.names():
            print(f"{name}: {suite.REGISTRY[name][1]}")
        return EXIT_OK
    name = cfg.inputs[0] if cfg.inputs else None
    if name is None:
        raise UsageError("verify needs a name or 'all'")
    chosen = suite.names() if name == "all" else [name]
    for n in chosen:
        if n not in suite.REGISTRY:
            raise UsageError(f"unknown verification {n!r}; known: {', '.join(suite.names())}", "unknown_verification")
    opts = suite.Options(dump_matrix=cfg.dump_matrix)
    reports = [suite.run(n, opts) for n in chosen]
    if cfg.json:
        docs = [r.to_json() for r in reports]
        _emit(cfg, [], {"schema": 1, "results": docs} if len(docs) > 1 else {"schema": 1, **docs[0]})
    elif len(reports) == 1 and not cfg.verbose:
        print(reports[0].summary)
    else:
        for r in reports:
            print(f"[{'pass' if r.verdict else 'FAIL'}] {r.name}: {r.summary}")
            if cfg.verbose or not r.verdict:
                for d in r.details:
                    print(f"    {d}")
    return EXIT_OK if all(r.verdict for r in reports) else EXIT_FALSE


def _emit(cfg: RunConfig, lines: list[str], doc: dict) -> None:
    if cfg.json:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


# -- argument parsing -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="dialg", description="Polynomial identities in algebras and dialgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse", parents=[common], help="parse an identity file and print it back")
    s.add_argument("file")
    s.add_argument("--canonical", action="store_true", help="reduce modulo the bar identities")

    s = sub.add_parser("kp", parents=[common], help="KP identities of each identity in a file")
    s.add_argument("file", help="identity file, path:label, or an inline identity")
    s.add_argument("--central", default=None, help="central variable, or 'all' (default)")
    s.add_argument("--zero", action="store_true", help="also print the 0-identities")

    s = sub.add_parser("bso", parents=[common], help="BSO expansion of each operation in a file")
    s.add_argument("file")
    s.add_argument("--center", default="all", help="argument index (1-based), variable name, or 'all'")

    s = sub.add_parser("basis", parents=[common], help="ordered multilinear monomial basis")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--space", choices=SPACES, default="plain")
    s.add_argument("--variables", default=None, help="variable letters, e.g. abcd")
    s.add_argument("--compact", action="store_true", help="print products by juxtaposition")

    s = sub.add_parser("check-consequence", parents=[common], help="is TARGET a consequence of GENERATORS?")
    s.add_argument("target")
    s.add_argument("generators", nargs="*")
    s.add_argument("--space", choices=SPACES, default="dialgebra")
    s.add_argument("--degree", type=int)
    s.add_argument("--variety", help=f"check in a preset variety instead ({', '.join(PRESETS)})")

    s = sub.add_parser("check-equivalence", parents=[common], help="do F and G generate the same module?")
    s.add_argument("f")
    s.add_argument("g")
    s.add_argument("--space", choices=SPACES, default="dialgebra")
    s.add_argument("--degree", type=int)

    s = sub.add_parser("verify", parents=[common], help="run named verifications")
    s.add_argument("name", nargs="?", help="verification name or 'all'")
    s.add_argument("--list", action="store_true", help="list the verifications")
    s.add_argument("--dump-matrix", dest="dump_matrix", help="write audited matrices as JSON")
    return p


COMMANDS = {
    "parse": cmd_parse,
    "kp": cmd_kp,
    "bso": cmd_bso,
    "basis": cmd_basis,
    "check-consequence": cmd_consequence,
    "check-equivalence": cmd_equivalence,
    "verify": cmd_verify,
}


def _config(args) -> RunConfig:
    inputs = [x for x in (getattr(args, k, None) for k in ("file", "target", "f", "g", "name")) if x is not None]
    return RunConfig(
        command=args.command,
        inputs=inputs,
        degree=getattr(args, "degree", None),
        space=getattr(args, "space", "dialgebra"),
        variety=getattr(args, "variety", None),
        json=args.json,
        dump_matrix=getattr(args, "dump_matrix", None),
        verbose=args.verbose,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    want_json = args.json
    try:
        cfg = _config(args)
        return COMMANDS[args.command](cfg, args)
    except UsageError as e:
        return _fail(want_json, e.code, str(e))
    except ParseError as e:
        return _fail(want_json, "parse_error", str(e))
    except DegreeError as e:
        return _fail(want_json, "degree", str(e))
    except (SignatureError, MacroError, KPError, BSOError, StraighteningError, ValueError) as e:
        return _fail(want_json, "invalid_input", str(e))


def _fail(want_json: bool, code: str, message: str) -> int:
    if want_json:
        print(json.dumps({"schema": 1, "error": {"code": code, "message": message}}), file=sys.stderr)
    else:
        print(f"dialg: error: {message}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
