"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import ehx
from .errors import CominusculeError, Inconsistency
from .minrep import build_rep, oracle_denominator, oracle_numerator
from .potential import LaurentPotential, compute_potential, render
from .quiver import build_quiver, lex_minimal_subset
from .rootdata import CominusculeSpace, langlands_dual, space_data
from .weyl import compute_wprime, enumerate_subexpressions_bruteforce

FORMAT_ENV = "COMINUSCULE_LG_FORMAT"
FORMATS = ("text", "latex", "json", "dot")
SPACES = ("gr", "quadric", "lg", "og", "cayley", "e6", "freudenthal", "e7")
LIMITS = {"gr": 12, "quadric": 20, "lg": 8, "og": 8}

EXIT_OK, EXIT_CHECK, EXIT_ARGS, EXIT_INCONSISTENT = 0, 1, 2, 3


class ArgumentError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cominuscule-lg",
        description="Laurent polynomial Landau-Ginzburg potentials of cominuscule spaces.",
    )
    p.add_argument("--space", required=True, choices=SPACES)
    p.add_argument("--k", type=int, help="Grassmannian subspace dimension")
    p.add_argument("--n", type=int, help="rank parameter: Gr(k,n), LG(n,2n), OG(n,2n)")
    p.add_argument("--dim", type=int, help="quadric dimension")
    p.add_argument("--format", choices=FORMATS, default=None,
                   help=f"output format (default: ${FORMAT_ENV} or text)")
    p.add_argument("--check", action="append", choices=("oracle", "moves", "ehx"), default=[],
                   help="run a verification suite instead of printing the potential; repeatable")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--word", help="comma-separated reduced word for w^P to use instead of the canonical one")
    p.add_argument("--output", help="write to this file instead of stdout")
    return p


def space_from_args(args) -> CominusculeSpace:
    s = args.space

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise ArgumentError(f"--space {s} requires --{name}")
        return v

    if s == "gr":
        k, n = need("k"), need("n")
        if not 2 <= n <= LIMITS["gr"]:
            raise ArgumentError(f"Grassmannians are limited to 2 <= n <= {LIMITS['gr']}")
        return CominusculeSpace.grassmannian(k, n)
    if s == "quadric":
        d = need("dim")
        if not 3 <= d <= LIMITS["quadric"]:
            raise ArgumentError(f"quadrics are limited to 3 <= d <= {LIMITS['quadric']}")
        return CominusculeSpace.quadric(d)
    if s in ("lg", "og"):
        n = need("n")
        if n > LIMITS[s]:
            raise ArgumentError(f"{s} is limited to n <= {LIMITS[s]}")
        if s == "lg":
            return CominusculeSpace.lagrangian_grassmannian(n)
        return CominusculeSpace.orthogonal_grassmannian(n)
    if s in ("cayley", "e6"):
        return CominusculeSpace.cayley_plane()
    return CominusculeSpace.freudenthal()


def _parse_word(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise ArgumentError(f"cannot parse word {text!r}") from None


def _monomial_diff(expected, got) -> dict:
    expected, got = set(map(tuple, expected)), set(map(tuple, got))
    return {"missing": [list(m) for m in sorted(expected - got)],
            "unexpected": [list(m) for m in sorted(got - expected)]}


def check_oracle(space: CominusculeSpace, p: LaurentPotential) -> dict:
    c, k = space_data(space)
    cd = langlands_dual(c)
    wd = compute_wprime(cd, k, p.word)
    rep = build_rep(cd, k)
    ell = p.ell
    num = oracle_numerator(rep, p.word, wd.wPprime_word)
    den = oracle_denominator(rep, p.word)
    sign = (-1) ** (ell + 1)
    want_num = {m: sign for m in p.numerator}
    want_den = {tuple(range(1, ell + 1)): (-1) ** ell}
    ok = num == want_num and den == want_den
    out = {"suite": "oracle", "pass": ok, "monomials": len(p.numerator),
           "sign": f"(-1)^{ell + 1}", "rep_dimension": len(rep)}
    if not ok:
        out["numerator_diff"] = _monomial_diff(want_num, [m for m, c_ in num.items() if c_ == sign])
        out["bad_coefficients"] = sorted([list(m), c_] for m, c_ in num.items() if c_ != sign)
        out["denominator"] = [[list(m), c_] for m, c_ in den.items()]
    return out


def check_moves(space: CominusculeSpace, p: LaurentPotential) -> dict:
    c, k = space_data(space)
    cd = langlands_dual(c)
    wd = compute_wprime(cd, k, p.word)
    brute = enumerate_subexpressions_bruteforce(cd, p.word, wd.wprime, wd.ellprime)
    moves = list(p.numerator)
    ok = sorted(brute) == sorted(moves)
    out = {"suite": "moves", "pass": ok, "moves": len(moves), "bruteforce": len(brute)}
    if not ok:
        out["diff"] = _monomial_diff(brute, moves)
    return out


def check_ehx(space: CominusculeSpace, p: LaurentPotential, trials: int, seed: int) -> dict:
    if space.family != "gr":
        raise ArgumentError("the EHX check applies to Grassmannians only")
    rep = ehx.phi_pullback_check(space.k, space.n, trials, seed, potential=p)
    return {"suite": "ehx", "pass": not rep["failures"], **rep}


def render_output(space: CominusculeSpace, p: LaurentPotential, fmt: str) -> str:
    if fmt == "dot":
        c, k = space_data(space)
        cd = langlands_dual(c)
        quiver = build_quiver(cd, p.word)
        marked = lex_minimal_subset(quiver, compute_wprime(cd, k, p.word).wprime)
        return quiver.to_dot(space.name, marked)
    return render(p, fmt) + "\n"


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse arguments and return (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_OK if exc.code == 0 else EXIT_ARGS), ""
    fmt = args.format or os.environ.get(FORMAT_ENV, "text")
    try:
        if fmt not in FORMATS:
            raise ArgumentError(f"unknown format {fmt!r} from ${FORMAT_ENV}")
        space = space_from_args(args)
        word = _parse_word(args.word)
        p = compute_potential(space, word=word)
    except (ArgumentError, CominusculeError) as exc:
        code = EXIT_INCONSISTENT if isinstance(exc, Inconsistency) else EXIT_ARGS
        print(f"error: {exc}", file=sys.stderr)
        return code, ""

    if not args.check:
        return EXIT_OK, render_output(space, p, fmt)

    reports = []
    try:
        for suite in args.check:
            if suite == "oracle":
                reports.append(check_oracle(space, p))
            elif suite == "moves":
                reports.append(check_moves(space, p))
            else:
                reports.append(check_ehx(space, p, args.trials, args.seed))
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS, ""
    except CominusculeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT, ""
    ok = all(r["pass"] for r in reports)
    for r in reports:
        print(f"{r['suite']}: {'PASS' if r['pass'] else 'FAIL'} ({space.name})", file=sys.stderr)
    text = json.dumps({"space": space.name, "pass": ok, "reports": reports}, indent=2) + "\n"
    return (EXIT_OK if ok else EXIT_CHECK), text


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(argv)
    if text:
        args = build_parser().parse_args(argv)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
