"""Command-line front end: ``neronjumps <command> ...``.

Exit codes: 0 ok, 1 failed check or golden mismatch, 2 descriptor error,
3 below threshold, 4 any other library error. Errors go to stderr as JSON.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from . import __version__
from .errors import BelowThreshold, DescriptorError, NeronJumpsError, StructuralError
from .glattice import (
    GLattice,
    augmentation_ideal,
    dual,
    flasque_resolve,
    invariant_rank,
    norm_one_character,
    parse_group,
    permutation,
    regular,
    sign,
    tate_cohomology,
    trivial,
)
from .jumps import (
    InducedTorus,
    Nu1,
    ZERO,
    c_tame,
    d_jumps_of,
    descriptor_from_json,
    descriptor_to_json,
    describe,
    jumps_of,
    ord_,
    split_torus,
    threshold,
)
from .jumps.descriptors import GroupDescriptor
from . import render
from .weights import GradedSubstitution, Scale, WeightMultiset, apply_scale, induced_weights

EXIT_OK, EXIT_FAIL, EXIT_DESCRIPTOR, EXIT_BELOW, EXIT_ERROR = 0, 1, 2, 3, 4


# ---- argument helpers ----------------------------------------------------------

def _int_list(text: str) -> List[int]:
    text = text.strip()
    return [int(x) for x in text.split(",")] if text else []


def _seeds(text: Optional[str]) -> Optional[Dict[int, int]]:
    """'1:2,2:3' -> {1: 2, 2: 3}."""
    if not text:
        return None
    out = {}
    for item in text.split(","):
        k, v = item.split(":")
        out[int(k)] = int(v)
    return out


def _q_arg(text: str) -> Optional[int]:
    return None if text == "auto" else int(text)


def descriptor_from_args(args: argparse.Namespace) -> GroupDescriptor:
    if getattr(args, "descriptor", None):
        src = args.descriptor
        if os.path.exists(src):
            src = Path(src).read_text()
        return descriptor_from_json(src)
    kind = getattr(args, "kind", None)
    if kind is None:
        raise DescriptorError("give a kind (induced, nu1, split, zero) or --descriptor")
    if kind == "induced":
        if args.e is None:
            raise DescriptorError("induced needs --e")
        return InducedTorus(args.e, args.f or 1)
    if kind == "nu1":
        if args.r is None or args.p is None:
            raise DescriptorError("nu1 needs --r and --p")
        return Nu1(args.r, args.p)
    if kind == "split":
        return split_torus(args.n or 1)
    if kind == "zero":
        return ZERO
    raise DescriptorError(f"unknown kind {kind!r}")


def _p_for(g: GroupDescriptor, args: argparse.Namespace) -> Optional[int]:
    if isinstance(g, Nu1):
        return g.p
    return getattr(args, "p", None)


# ---- commands ---------------------------------------------------------------------

def cmd_jumps(args) -> str:
    g = descriptor_from_args(args)
    if args.d is not None:
        return render.render_djumps(d_jumps_of(g, args.d, _p_for(g, args)), args.format)
    return render.render_jumps(jumps_of(g), args.format, args.decimals)


def cmd_djumps(args) -> str:
    g = descriptor_from_args(args)
    return render.render_djumps(d_jumps_of(g, args.d, _p_for(g, args)), args.format)


def cmd_ord(args) -> str:
    g = descriptor_from_args(args)
    return render.render_scalar("ord", ord_(g, args.d, _p_for(g, args)), args.format, d=args.d)


def cmd_ctame(args) -> str:
    g = descriptor_from_args(args)
    return render.render_scalar("c_tame", c_tame(g), args.format, args.decimals, threshold=threshold(g))


def cmd_zeta(args) -> str:
    from .corpus import zeta_input_for
    from .zeta import verify_rationality, zeta_closed_form, zeta_truncated

    g = descriptor_from_args(args)
    p = _p_for(g, args)
    if p is None:
        raise StructuralError("zeta needs --p")
    z = zeta_input_for(g, p, describe(g), t=args.t, phi=args.phi, delta=args.delta,
                       t_seeds=_seeds(args.t_seeds), phi_seeds=_seeds(args.phi_seeds))
    out = []
    if args.closed_form:
        closed = zeta_closed_form(z)
        out.append(render.render_closed(closed, args.format))
        if args.verify:
            res = verify_rationality(z, args.verify_terms, closed)
            if not res:
                raise _CheckFailed(
                    "\n".join(out + [f"mismatch at x^{res.first_mismatch}: expected {res.expected}, got {res.got}"])
                )
            out.append(f"verified to {args.verify_terms} terms")
    else:
        out.append(render.render_truncated(zeta_truncated(z, args.terms), args.terms, args.format))
        if args.verify:
            res = verify_rationality(z, args.verify_terms)
            if not res:
                raise _CheckFailed(f"closed form disagrees at x^{res.first_mismatch}")
            out.append(f"verified to {args.verify_terms} terms")
    return "\n".join(out)


def cmd_oracle(args) -> str:
    from .oracle import oracle_grid

    rep = oracle_grid(args.e_max, args.f_max, args.d_max, _q_arg(args.q), jobs=args.jobs,
                      seed=args.seed, all_tame=args.all_tame)
    npass, nfail, nskip = rep.counts()
    if args.format == "text":
        lines = [c.line() for c in rep.cells]
        lines.append(f"{npass} PASS, {nfail} FAIL, {nskip} SKIPPED")
        text = "\n".join(lines)
    else:
        rows = [(c.e, c.f, c.d, c.q, c.status, " ".join(map(str, c.expected)), " ".join(map(str, c.got)), c.message)
                for c in rep.cells]
        text = render.render_table(("e", "f", "d", "q", "status", "expected", "got", "message"), rows, args.format)
    if nfail:
        raise _CheckFailed(text)
    return text


def _lattice_from_args(args):
    if getattr(args, "descriptor", None):
        from .zeta import character_lattice

        return character_lattice(descriptor_from_args(args))
    G = parse_group(args.group)
    return G, _lattice_from_text(G, args.lattice)


def _lattice_from_text(G, text: str) -> GLattice:
    """trivial[:n] | regular | perm:K | augmentation | norm-one | sign:K | dual:LATTICE."""
    head, _, rest = text.partition(":")
    subs = G.subgroups()
    if head == "dual":
        return dual(_lattice_from_text(G, rest))
    if head == "trivial":
        return trivial(G, int(rest) if rest else 1)
    if head == "regular":
        return regular(G)
    if head == "augmentation":
        return augmentation_ideal(G)
    if head == "norm-one":
        return norm_one_character(G)
    if head in ("perm", "sign"):
        if not rest:
            raise StructuralError(f"{head} needs a subgroup index, e.g. {head}:0")
        h = subs[int(rest)]
        return permutation(G, h) if head == "perm" else sign(G, h)
    raise StructuralError(f"cannot parse lattice {text!r}")


def _subgroups(G, index: Optional[int]):
    subs = G.subgroups()
    return list(enumerate(subs)) if index is None else [(index, subs[index])]


def cmd_lattice(args) -> str:
    G, A = _lattice_from_args(args)
    if args.action == "tate-cohomology":
        rows = []
        for i, h in _subgroups(G, args.subgroup):
            for deg in args.degree:
                rows.append((i, len(h), deg, str(tate_cohomology(G, h, A, deg))))
        return render.render_table(("subgroup", "order", "degree", "group"), rows, args.format)
    if args.action == "invariant-rank":
        rows = [(i, len(h), invariant_rank(G, h, A)) for i, h in _subgroups(G, args.subgroup)]
        return render.render_table(("subgroup", "order", "rank"), rows, args.format)
    res = flasque_resolve(G, A)
    if args.format == "json":
        return render.dumps({
            "group": G.name, "M_rank": A.rank, "P_rank": res.P.rank, "F_rank": res.F.rank,
            "P_summands": [list(h) for h in res.P_summands],
            "inclusion": res.inclusion, "projection": res.projection,
        })
    rows = [("M", A.rank), ("P", res.P.rank), ("F", res.F.rank)]
    text = render.render_table(("term", "rank"), rows, args.format)
    if args.format == "text":
        orders = ", ".join(f"Z[G/H], |H|={len(h)}" for h in res.P_summands) or "0"
        text += f"\nP = {orders}\nF flasque: yes"
    return text


def cmd_weights(args) -> str:
    if args.action == "apply-scale":
        s = Scale(_int_list(args.scale), args.torsor_order, args.p if args.torsor_order else None)
        w = apply_scale((args.d, _int_list(args.weights)), s, args.p)
    else:
        images = []
        for img in args.image:
            images.append(frozenset(tuple(_int_list(mono)) for mono in img.split("+")))
        w = induced_weights(GradedSubstitution(args.d, tuple(_int_list(args.weights)), tuple(images)))
    if args.format == "json":
        return render.dumps({"modulus": w.modulus, "weights": [[r, m] for r, m in w.entries]})
    if args.format == "csv":
        return render.render_table(("weight", "multiplicity"), w.entries, "csv")
    return str(w)


class _CheckFailed(Exception):
    """A command ran but its check failed; the message is the full output."""


# ---- parser ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", default="text", choices=render.FORMATS)
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized unimodular twists")
    p.add_argument("--golden", help="compare output with this file; exit 1 on mismatch")
    p.add_argument("--decimals", action="store_true", help="text only: append ≈ decimals")


def _descriptor_args(p: argparse.ArgumentParser, kind_required: bool = False) -> None:
    p.add_argument("kind", nargs=None if kind_required else "?", choices=("induced", "nu1", "split", "zero"))
    p.add_argument("--descriptor", help="descriptor JSON, or a path to a JSON file")
    p.add_argument("--e", type=int, help="ramification index (induced)")
    p.add_argument("--f", type=int, help="inertia degree (induced)")
    p.add_argument("--r", type=int, help="nu1 parameter")
    p.add_argument("--n", type=int, help="rank (split)")
    p.add_argument("--p", type=int, help="residue characteristic")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="neronjumps", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jumps", help="jump multiset (or d-jumps with --d)")
    _descriptor_args(p)
    p.add_argument("--d", type=int)
    _common(p)
    p.set_defaults(func=cmd_jumps)

    p = sub.add_parser("djumps", help="d-jump multiset")
    _descriptor_args(p)
    p.add_argument("--d", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_djumps)

    p = sub.add_parser("ord", help="ord(d), the sum of the d-jumps")
    _descriptor_args(p)
    p.add_argument("--d", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_ord)

    p = sub.add_parser("ctame", help="tame base-change conductor")
    _descriptor_args(p)
    _common(p)
    p.set_defaults(func=cmd_ctame)

    p = sub.add_parser("zeta", help="motivic zeta function")
    _descriptor_args(p)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--verify", action="store_true", help="check the closed form against the series")
    p.add_argument("--verify-terms", type=int, default=60)
    p.add_argument("--t", type=int, help="constant torus rank (overrides the lattice model)")
    p.add_argument("--phi", type=int, help="constant #Phi_tors (overrides the lattice model)")
    p.add_argument("--delta", type=int, default=2, help="abelian variant: splitting degree")
    p.add_argument("--t-seeds", help="abelian variant, e.g. 1:1,2:2")
    p.add_argument("--phi-seeds", help="abelian variant, e.g. 1:2,2:3")
    _common(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("oracle", help="DVR oracle grid for induced tori")
    p.add_argument("--e-max", type=int, default=6)
    p.add_argument("--f-max", type=int, default=3)
    p.add_argument("--d-max", type=int, default=50)
    p.add_argument("--q", default="auto", help="residue field size, or 'auto' per cell")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-tame", action="store_true", help="every d, not only d = 1 mod e")
    _common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("lattice", help="G-lattice computations")
    p.add_argument("action", choices=("tate-cohomology", "flasque-resolve", "invariant-rank"))
    p.add_argument("--group", default="C2", help="C4, D4, S3, A4, Q8, C2xC2, ...")
    p.add_argument("--lattice", default="trivial",
                   help="trivial[:n] | regular | perm:K | augmentation | norm-one | sign:K | dual:LATTICE")
    p.add_argument("--descriptor", help="use the character lattice of this torus descriptor")
    p.add_argument("--subgroup", type=int, help="index into the subgroup list (default: all)")
    p.add_argument("--degree", type=int, nargs="+", default=[-1, 0], choices=(-1, 0))
    _common(p)
    p.set_defaults(func=cmd_lattice, kind=None)

    p = sub.add_parser("weights", help="weight bookkeeping")
    p.add_argument("action", choices=("apply-scale", "induced"))
    p.add_argument("--d", type=int, required=True, help="modulus")
    p.add_argument("--weights", required=True, help="comma-separated source weights")
    p.add_argument("--scale", default="", help="apply-scale: comma-separated exponents")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--torsor-order", type=int)
    p.add_argument("--image", action="append", default=[],
                   help="induced: one per target, monomials as exponent vectors joined by '+', e.g. 2,0+0,1")
    _common(p)
    p.set_defaults(func=cmd_weights)
    return ap


def _emit(text: str, args) -> int:
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    if args.golden:
        want = Path(args.golden).read_text().rstrip()
        if want != text.rstrip():
            print(json.dumps({"error": "golden-mismatch", "golden": args.golden}), file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except _CheckFailed as exc:
        print(str(exc))
        return EXIT_FAIL
    except (DescriptorError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": "descriptor", "message": str(exc)}), file=sys.stderr)
        return EXIT_DESCRIPTOR
    except BelowThreshold as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_BELOW
    except NeronJumpsError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}), file=sys.stderr)
        return EXIT_ERROR
    return _emit(text, args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
