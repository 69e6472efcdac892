"""Command-line front end.

Exit codes: 0 for success / equal / yes / trivial / valid, 1 for
unknown / not-equal / absent / nontrivial / invalid, 2 for input
errors.  Text output by default; ``--json`` switches to a canonical
JSON encoding.  The default semi-decision budget comes from
``INVWORD_BUDGET`` (``rounds:vertices``) or an optional JSON config
file, and is overridden by ``--rounds`` / ``--vertices``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import acceptance
from .construct import (
    ConstructionInstance,
    build_presentation,
    forward_certificate,
    group_triviality_oracle,
    membership_query,
)
from .errors import InvwordError, OracleMissing, ParseError
from .freeprod import FiniteGroup, FreeProduct
from .hnn import HnnPresentation, britton_reduce, hnn_is_trivial, one_relator_wp, p4_instance, theta_embed
from .munn import fim_equal, munn_tree
from .raag import SimpGraph, parabolic_membership, raag_equal, raag_normal_form
from .stephen import (
    Budget,
    GroupPresentation,
    InvPresentation,
    Verdict,
    is_right_invertible,
    prefix_generators,
    stephen_equal,
)
from .words import Alphabet, Word, alphabet, formal_inverse, parse_word, prefixes, reduce

ENV_BUDGET = "INVWORD_BUDGET"


@dataclass
class Config:
    """Resolved run configuration."""

    budget: Budget = Budget(10, 10_000)
    output_dir: Path = Path(".")
    format: str = "text"
    frugal_expansion: bool = False


def _parse_budget(text: str) -> Budget:
    try:
        rounds, vertices = text.split(":")
        return Budget(int(rounds), int(vertices))
    except (ValueError, TypeError) as exc:
        raise ParseError(f"budget must look like ROUNDS:VERTICES, got {text!r}") from exc


def load_config(args) -> Config:
    cfg = Config()
    path = getattr(args, "config", None)
    if path:
        data = json.loads(Path(path).read_text())
        if "budget" in data:
            cfg.budget = _parse_budget(str(data["budget"]))
        cfg.output_dir = Path(data.get("output_dir", "."))
        cfg.format = data.get("format", cfg.format)
        cfg.frugal_expansion = bool(data.get("frugal_expansion", cfg.frugal_expansion))
    env = os.environ.get(ENV_BUDGET)
    if env:
        cfg.budget = _parse_budget(env)
    rounds = getattr(args, "rounds", None)
    vertices = getattr(args, "vertices", None)
    if rounds is not None or vertices is not None:
        cfg.budget = Budget(
            cfg.budget.max_rounds if rounds is None else rounds,
            cfg.budget.max_vertices if vertices is None else vertices,
        )
    if getattr(args, "json", False):
        cfg.format = "json"
    if getattr(args, "frugal_expansion", False):
        cfg.frugal_expansion = True
    return cfg


def _emit(cfg: Config, text_value: str, json_value) -> None:
    if cfg.format == "json":
        print(json.dumps(json_value, sort_keys=True, indent=2))
    else:
        print(text_value)


def _alpha(args) -> Alphabet | None:
    names = getattr(args, "alphabet", None)
    return alphabet(names) if names else None


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read JSON file {path}: {exc}") from exc


def _load_presentation(path: str) -> InvPresentation:
    return InvPresentation.from_json(_load_json(path))


def _load_graph(path: str) -> SimpGraph:
    return SimpGraph.from_json(_load_json(path))


def _load_table(path: str) -> FiniteGroup:
    if path.endswith(".csv"):
        return FiniteGroup.from_csv(Path(path).read_text())
    return FiniteGroup.from_json(_load_json(path))


# -- command handlers --------------------------------------------------------


def cmd_reduce(args, cfg: Config) -> int:
    w = reduce(parse_word(args.word, _alpha(args)))
    _emit(cfg, str(w), w.to_json())
    return 0


def cmd_inv(args, cfg: Config) -> int:
    w = formal_inverse(parse_word(args.word, _alpha(args)))
    _emit(cfg, str(w), w.to_json())
    return 0


def cmd_prefixes(args, cfg: Config) -> int:
    ps = prefixes(parse_word(args.word, _alpha(args)))
    _emit(cfg, "\n".join(str(p) for p in ps), [str(p) for p in ps])
    return 0


def cmd_fim_eq(args, cfg: Config) -> int:
    a = _alpha(args)
    equal = fim_equal(parse_word(args.u, a), parse_word(args.v, a))
    _emit(cfg, "equal" if equal else "not-equal", {"equal": equal})
    return 0 if equal else 1


def cmd_munn(args, cfg: Config) -> int:
    tree = munn_tree(parse_word(args.word, _alpha(args)))
    if args.dot:
        Path(args.dot).write_text(tree.to_dot())
    summary = (
        f"vertices={tree.n_vertices} edges={tree.n_edges} "
        f"start={tree.start} end={tree.end}"
    )
    _emit(cfg, summary, tree.to_json())
    return 0


def cmd_stephen(args, cfg: Config) -> int:
    pres = _load_presentation(args.presentation)
    u = parse_word(args.u, pres.alphabet)
    v = parse_word(args.v, pres.alphabet)
    trace: list | None = [] if args.trace else None
    verdict = stephen_equal(
        pres, u, v, cfg.budget, frugal=cfg.frugal_expansion, trace=trace
    )
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace, sort_keys=True, indent=2) + "\n")
    _emit(cfg, verdict.value, {"verdict": verdict.value})
    return 0 if verdict is Verdict.EQUAL else 1


def cmd_right_inv(args, cfg: Config) -> int:
    pres = _load_presentation(args.presentation)
    w = parse_word(args.word, pres.alphabet)
    verdict = is_right_invertible(pres, w, cfg.budget, frugal=cfg.frugal_expansion)
    _emit(cfg, verdict.value, {"verdict": verdict.value})
    return 0 if verdict is Verdict.YES else 1


def cmd_prefix_gens(args, cfg: Config) -> int:
    gens = prefix_generators(_load_presentation(args.presentation))
    _emit(cfg, "\n".join(str(g) for g in gens), [str(g) for g in gens])
    return 0


def cmd_raag_nf(args, cfg: Config) -> int:
    g = _load_graph(args.graph)
    nf = raag_normal_form(g, parse_word(args.word, g.vertices))
    _emit(cfg, str(nf.word), nf.word.to_json())
    return 0


def cmd_raag_eq(args, cfg: Config) -> int:
    g = _load_graph(args.graph)
    equal = raag_equal(g, parse_word(args.u, g.vertices), parse_word(args.v, g.vertices))
    _emit(cfg, "equal" if equal else "not-equal", {"equal": equal})
    return 0 if equal else 1


def cmd_parabolic(args, cfg: Config) -> int:
    g = _load_graph(args.graph)
    delta = [d for d in args.delta.replace(",", " ").split() if d]
    result = parabolic_membership(g, delta, parse_word(args.word, g.vertices))
    if result is None:
        _emit(cfg, "absent", {"member": False})
        return 1
    _emit(cfg, str(result), {"member": True, "word": str(result)})
    return 0


def cmd_hnn_wp(args, cfg: Config) -> int:
    h = HnnPresentation.from_json(_load_json(args.hnn)) if args.hnn else p4_instance()
    w = parse_word(args.word)
    form = britton_reduce(h, w)
    trivial = form.is_trivial
    _emit(
        cfg,
        f"{'trivial' if trivial else 'nontrivial'}: {form}",
        {"trivial": trivial, "britton": form.syllables()},
    )
    return 0 if trivial else 1


def cmd_theta(args, cfg: Config) -> int:
    image = theta_embed(parse_word(args.word))
    _emit(cfg, str(image), image.to_json())
    return 0


def cmd_one_relator_wp(args, cfg: Config) -> int:
    trivial = one_relator_wp(parse_word(args.word, alphabet("a z")))
    _emit(cfg, "trivial" if trivial else "nontrivial", {"trivial": trivial})
    return 0 if trivial else 1


def _parse_fp_element(fp: FreeProduct, text: str):
    try:
        syllables = json.loads(text)
        x = fp.identity()
        for kind, value in syllables:
            if kind == "t":
                x = x * fp.t(int(value))
            elif kind == "h":
                x = x * fp.from_group(int(value))
            else:
                raise ParseError(f"unknown syllable kind {kind!r}")
        return x
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise ParseError(f"bad element {text!r}: expected [[\"t\",n],[\"h\",id],...]") from exc


def cmd_fp_mul(args, cfg: Config) -> int:
    H = _load_table(args.table)
    fp = FreeProduct.over(H)
    product = _parse_fp_element(fp, args.x) * _parse_fp_element(fp, args.y)
    _emit(
        cfg,
        str(product),
        {"syllables": [[k, v] for k, v in product.syllables], "length": len(product.syllables)},
    )
    return 0


def cmd_key_claim(args, cfg: Config) -> int:
    from dataclasses import asdict

    from .freeprod import key_claim_check

    H = _load_table(args.table)
    W = [int(x) for x in args.w.split(",") if x != ""] if args.w else []
    report = key_claim_check(H, W, int(args.h), max_factors=args.max_factors or H.order)
    _emit(
        cfg,
        f"h in <W>: {report.h_in_base_submonoid}; probe found: "
        f"{report.probe_in_extension_submonoid}; agree: {report.agree}",
        asdict(report),
    )
    return 0 if report.agree else 1


def cmd_construct(args, cfg: Config) -> int:
    group = GroupPresentation.from_json(_load_json(args.group))
    wset_data = _load_json(args.wset)
    wset = [
        parse_word(w, group.alphabet) if isinstance(w, str) else Word.from_json(w)
        for w in wset_data
    ]
    ci = ConstructionInstance(group, tuple(wset), args.stable)
    payload = {
        "instance": ci.to_json(),
        "presentation": build_presentation(ci).to_json(),
    }
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        _emit(cfg, f"wrote {args.out}", payload)
    else:
        print(text, end="")
    return 0


def cmd_member_query(args, cfg: Config) -> int:
    ci = ConstructionInstance.from_json(_load_json(args.instance))
    u = parse_word(args.u, ci.group.alphabet)
    bundle = membership_query(ci, u)
    if args.out:
        Path(args.out).write_text(
            json.dumps(bundle.to_json(), sort_keys=True, indent=2) + "\n"
        )
    if args.budget:
        budget = _parse_budget(args.budget)
        verdict = is_right_invertible(bundle.presentation, bundle.probe, budget)
        answer = "yes" if verdict is Verdict.YES else "unknown"
        _emit(
            cfg,
            f"right-invertible: {answer}",
            {"probe": str(bundle.probe), "right_invertible": answer},
        )
        return 0 if verdict is Verdict.YES else 1
    _emit(cfg, f"probe: {bundle.probe}", bundle.to_json())
    return 0


def cmd_certify(args, cfg: Config) -> int:
    ci = ConstructionInstance.from_json(_load_json(args.instance))
    u = parse_word(args.u, ci.group.alphabet)
    factorization = [int(x) for x in args.factorization.split(",") if x != ""]
    oracle = group_triviality_oracle(ci.group)
    if oracle is None:
        raise OracleMissing("no bundled triviality oracle for this group presentation")
    valid = forward_certificate(ci, u, factorization, oracle)
    _emit(cfg, "valid" if valid else "invalid", {"valid": valid})
    return 0 if valid else 1


def cmd_suite(args, cfg: Config) -> int:
    criteria = (
        [int(x) for x in args.criteria.split(",") if x != ""] if args.criteria else None
    )
    results = acceptance.run_suite(
        criteria=criteria, scale=args.scale, out_dir=args.out
    )
    return 0 if all(r.passed for r in results) else 1


# -- parser -------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, budget: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--config", help="path to a JSON config file")
    if budget:
        p.add_argument("--rounds", type=int, help="expansion round cap")
        p.add_argument("--vertices", type=int, help="vertex cap per round")
        p.add_argument(
            "--frugal-expansion",
            action="store_true",
            dest="frugal_expansion",
            help="sew relator loops only at the two roots each round",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invword",
        description="word problems for inverse monoids and their relatives",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, budget=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        _add_common(p, budget)
        return p

    p = add("reduce", cmd_reduce, "freely reduce a word")
    p.add_argument("word")
    p.add_argument("--alphabet", help="comma list of generator names")

    p = add("inv", cmd_inv, "formal inverse of a word")
    p.add_argument("word")
    p.add_argument("--alphabet")

    p = add("prefixes", cmd_prefixes, "all prefixes, shortest first")
    p.add_argument("word")
    p.add_argument("--alphabet")

    p = add("fim-eq", cmd_fim_eq, "equality in the free inverse monoid")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--alphabet")

    p = add("munn", cmd_munn, "birooted tree of a word")
    p.add_argument("word")
    p.add_argument("--alphabet")
    p.add_argument("--dot", help="write DOT to this file")

    p = add("stephen", cmd_stephen, "budgeted equality in a presented inverse monoid", budget=True)
    p.add_argument("presentation", help="presentation JSON file")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--trace", help="write a per-round JSON trace to this file")

    p = add("right-inv", cmd_right_inv, "budgeted right-invertibility check", budget=True)
    p.add_argument("presentation")
    p.add_argument("word")

    p = add("prefix-gens", cmd_prefix_gens, "prefix generators of the right units")
    p.add_argument("presentation")

    p = add("raag-nf", cmd_raag_nf, "canonical form in a right-angled Artin group")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("word")

    p = add("raag-eq", cmd_raag_eq, "equality in a right-angled Artin group")
    p.add_argument("graph")
    p.add_argument("u")
    p.add_argument("v")

    p = add("parabolic", cmd_parabolic, "membership in a vertex-subset subgroup")
    p.add_argument("graph")
    p.add_argument("word")
    p.add_argument("--delta", required=True, help="comma list of vertices")

    p = add("hnn-wp", cmd_hnn_wp, "triviality in an HNN extension (default: the path instance)")
    p.add_argument("word")
    p.add_argument("--hnn", help="HNN presentation JSON file")

    p = add("theta", cmd_theta, "embed a path-group word into the one-relator group")
    p.add_argument("word")

    p = add("one-relator-wp", cmd_one_relator_wp, "triviality in the one-relator group on a, z")
    p.add_argument("word")

    p = add("fp-mul", cmd_fp_mul, "multiply two free-product elements")
    p.add_argument("x", help='syllables JSON, e.g. [["t",1],["h",1],["t",-1]]')
    p.add_argument("y")
    p.add_argument("--table", required=True, help="multiplication table (JSON or CSV)")

    p = add("key-claim", cmd_key_claim, "conjugation membership equivalence for a finite group")
    p.add_argument("--table", required=True)
    p.add_argument("--w", default="", help="comma list of generator ids")
    p.add_argument("--h", required=True, help="element id to test")
    p.add_argument("--max-factors", type=int, dest="max_factors")

    p = add("construct", cmd_construct, "compile a membership instance to a presentation")
    p.add_argument("group", help="group presentation JSON file")
    p.add_argument("wset", help="JSON list of words")
    p.add_argument("--stable", default="t")
    p.add_argument("--out", help="write the compiled JSON here")

    p = add("member-query", cmd_member_query, "compile one membership query; optionally run it")
    p.add_argument("instance", help="construction instance JSON file")
    p.add_argument("u")
    p.add_argument("--budget", help="ROUNDS:VERTICES to actually run the probe")
    p.add_argument("--out", help="write the query bundle JSON here")

    p = add("certify", cmd_certify, "validate a membership factorisation certificate")
    p.add_argument("instance")
    p.add_argument("u")
    p.add_argument("--factorization", required=True, help="comma list of 1-based indices")

    p = add("suite", cmd_suite, "run the verification suite")
    p.add_argument("--criteria", help="comma list of criterion numbers")
    p.add_argument("--scale", choices=("full", "quick"), default="full")
    p.add_argument("--out", help="write results and artifacts to this directory")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except InvwordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
