"""Command-line entry point: ``kreinscan {classify,spectrum,region,verify,lemmas}``.

Exit codes: 0 success, 1 a verification or consistency check failed,
2 bad input (flags, config file, output path).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from fractions import Fraction
from pathlib import Path

from kreinscan import identities, oracle
from kreinscan._rational import to_fraction
from kreinscan.dispersion import DispersionRelation, bifurcation_speed, comoving
from kreinscan.models import (
    BalancedModel,
    balanced_thresholds,
    gkdv_dispersion,
    hokdv_dispersion,
    region_sweep,
)
from kreinscan.reduction import DEFAULT_TOL, collision_report

CAVEAT = (
    "note: an opposite-signature collision is a necessary, not sufficient, "
    "condition for a Hamiltonian-Hopf bifurcation"
)
COMMANDS = ("classify", "spectrum", "region", "verify", "lemmas")


class InputError(Exception):
    pass


def fmt(x) -> str:
    """Shortest round-trip decimal for floats; exact rationals go through float."""
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def _jsonable(x):
    if isinstance(x, Fraction):
        return float(x)
    return x


def _fraction_arg(text):
    try:
        return to_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def _positive_float(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common(dn_max_default=None) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("model")
    g.add_argument("--family", choices=["gkdv", "hokdv", "balanced", "custom"])
    g.add_argument("--alpha-coeffs", help="comma list alpha_0,alpha_1,... of omega(k) = sum alpha_j k^(2j+1)")
    g.add_argument("--alpha", type=_fraction_arg, default=Fraction(1))
    g.add_argument("--k", type=int, default=1, help="branch: speed c = omega(k)/k")
    g.add_argument("--p", type=int)
    g.add_argument("--q", type=int)
    g.add_argument("--beta", type=_fraction_arg)
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config", help="key=value file; flags on the command line win")
    if dn_max_default is not None:
        p.add_argument("--dn-max", type=int, default=dn_max_default)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kreinscan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[_common(100)], help="collision records and Hopf-candidate verdict")

    sp = sub.add_parser("spectrum", parents=[_common()], help="zero-amplitude spectrum slices")
    sp.add_argument("--mu", default="-0.4", help="comma list of mu_tilde values in (-1/2, 1/2]")
    sp.add_argument("--n-min", type=int, default=-10)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--plot", help="also render the slices to this image file")

    rg = sub.add_parser("region", parents=[_common(12)], help="(dn, beta) regimes for the balanced family")
    rg.add_argument("--beta-grid", default="1/200:1:200", help="lo:hi:count (inclusive) or comma list")
    rg.add_argument("--plot", help="also render the regime diagram to this image file")

    vf = sub.add_parser("verify", parents=[_common()], help="oracle and identity self-checks")
    vf.add_argument("--samples", type=int, default=100, help="random reduction-identity instances")
    vf.add_argument("--brute", type=int, default=5, help="random dispersions for the brute-force scan")

    lm = sub.add_parser("lemmas", parents=[_common()], help="exact sampling of the s_m inequalities")
    lm.add_argument("--m-max", type=int, default=identities.DEFAULT_M_MAX)
    return parser


def _read_config(path: str) -> list[str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc.strerror}") from exc
    argv = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("_", "-")
        if key == "config":
            raise InputError(f"{path}:{lineno}: nested config files are not supported")
        argv += [f"--{key}", value]
    return argv


_NEGATIVE = re.compile(r"^-[\d.]")


def _glue_negative(argv: list[str]) -> list[str]:
    # "--mu -0.4,0.3" would otherwise be read as an unknown option
    out = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def _with_config(argv: list[str]) -> list[str]:
    # config values go first so that explicit flags, parsed later, override them
    probe = argparse.ArgumentParser(add_help=False)
    probe.add_argument("--config")
    known, _ = probe.parse_known_args(argv)
    if not known.config or not argv or argv[0] not in COMMANDS:
        return argv
    return [argv[0], *_glue_negative(_read_config(known.config)), *argv[1:]]


def build_model(args):
    """Comoving dispersion for the requested family, moved to its bifurcation speed."""
    family = args.family or ("custom" if args.alpha_coeffs else "gkdv")
    if args.k < 1:
        raise InputError(f"--k must be >= 1 (c_k = omega(k)/k is undefined at k = 0), got {args.k}")
    try:
        if family == "gkdv":
            return gkdv_dispersion(args.alpha, args.k)
        if family == "hokdv":
            return hokdv_dispersion(args.p if args.p is not None else 2, args.alpha, args.k)
        if family == "balanced":
            if args.beta is None:
                raise InputError("--family balanced needs --beta")
            return BalancedModel(args.p or 2, args.q or 1, args.beta).dispersion()
        if not args.alpha_coeffs:
            raise InputError("--family custom needs --alpha-coeffs")
        coeffs = tuple(to_fraction(c.strip()) for c in args.alpha_coeffs.split(","))
        d = DispersionRelation(coeffs)
        return comoving(d, bifurcation_speed(d, args.k))
    except InputError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc.strerror}") from exc


# ------------------------------------------------------------------ commands


def verdict(candidates, dn_max: int) -> str:
    if not candidates:
        head = (
            f"no candidates, dn <= {dn_max}: no opposite-signature collisions "
            "(high-frequency spectrally stable at onset)"
        )
    else:
        dns = ", ".join(str(dn) for dn in sorted({dn for dn, _ in candidates}))
        head = f"Hopf candidates at dn = {dns}"
    return f"{head}\n{CAVEAT}\n"


def cmd_classify(args) -> int:
    if args.dn_max < 1:
        raise InputError("--dn-max must be >= 1")
    cd = build_model(args)
    records = []
    for dn in range(1, args.dn_max + 1):
        records += collision_report(cd, dn, args.tol)
    candidates = [(r.dn, r) for r in records if r.candidate]
    text = verdict(candidates, args.dn_max)

    header = ["dn", "gamma", "class", "mu1", "mu2", "lambda_im", "krein_product", "candidate"]
    rows = []
    for r in records:
        mu1, mu2 = r.mu_pair or (None, None)
        rows.append([r.dn, r.gamma, r.klass.value, mu1, mu2, r.lambda_im, r.krein_product, r.candidate])
    if args.format == "json":
        body = json.dumps(
            {
                "coeffs": [str(c) for c in cd.coeffs],
                "records": [dict(zip(header, map(_jsonable, row))) for row in rows],
                "candidates": sorted({dn for dn, _ in candidates}),
                "verdict": text.strip().splitlines(),
            },
            indent=2,
        ) + "\n"
    else:
        body = _csv(header, rows)
    if args.out:
        _write(body, args.out)
        sys.stdout.write(text)
    elif args.format == "json":
        _write(body, None)
    else:
        _write(body + "".join(f"# {line}\n" for line in text.splitlines()), None)
    return 0


def _mu_list(text: str) -> list[float]:
    out = []
    for part in text.split(","):
        if not part.strip():
            continue
        mt = float(to_fraction(part.strip()))
        if not -0.5 < mt <= 0.5:
            raise InputError(f"mu_tilde must lie in (-1/2, 1/2], got {part.strip()}")
        out.append(mt)
    return out


def cmd_spectrum(args) -> int:
    cd = build_model(args)
    try:
        mus = _mu_list(args.mu)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --mu: {exc}") from exc
    ns = list(range(args.n_min, args.n_max + 1))
    rows = []
    for mt in mus:
        rows += [(mt, n, lam) for n, lam in oracle.spectrum_slice(cd, mt, ns).entries]
    header = ["mu_tilde", "n", "lambda_im"]
    if args.format == "json":
        body = json.dumps({"rows": [dict(zip(header, r)) for r in rows]}, indent=2) + "\n"
    else:
        body = _csv(header, rows)
    _write(body, args.out)
    if args.plot:
        from kreinscan.plotting import plot_spectrum

        _plot(plot_spectrum, cd, mus, ns, args.plot)
    return 0


def parse_beta_grid(text: str) -> list[Fraction]:
    try:
        if ":" in text:
            lo, hi, count = text.split(":")
            lo, hi, count = to_fraction(lo), to_fraction(hi), int(count)
            if count < 1:
                raise ValueError("count must be positive")
            if count == 1:
                return [lo]
            return [lo + (hi - lo) * i / (count - 1) for i in range(count)]
        return [to_fraction(b.strip()) for b in text.split(",") if b.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad --beta-grid {text!r}: {exc}") from exc


def _sibling(out: str, tag: str) -> str:
    p = Path(out)
    return str(p.with_name(f"{p.stem}_{tag}{p.suffix}"))


def cmd_region(args) -> int:
    if args.family not in (None, "balanced"):
        raise InputError("region is defined for --family balanced only")
    if args.dn_max < 1:
        raise InputError("--dn-max must be >= 1")
    p, q = args.p or 2, args.q or 1
    betas = parse_beta_grid(args.beta_grid)
    try:
        cells = region_sweep(p, q, betas, args.dn_max, check=False)
        ths = [balanced_thresholds(p, q, dn) for dn in range(1, args.dn_max + 1)]
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    mismatched = [c for c in cells if not c.agrees]
    if args.format == "json":
        body = json.dumps(
            {
                "p": p,
                "q": q,
                "cells": [
                    {
                        "dn": c.dn,
                        "beta": float(c.beta),
                        "regime": c.regime.value,
                        "root_regime": c.root_regime.value,
                        "spectral_regime": c.spectral_regime.value,
                        "endpoint": c.endpoint,
                        "resonant": c.resonant,
                        "origin_shifted": c.origin_shifted,
                    }
                    for c in cells
                ],
                "thresholds": [
                    {"dn": t.dn, "beta0": float(t.beta0), "beta_quarter": float(t.beta_quarter)} for t in ths
                ],
            },
            indent=2,
        ) + "\n"
        _write(body, args.out)
    else:
        regimes = _csv(["dn", "beta", "regime"], [(c.dn, c.beta, c.regime.value) for c in cells])
        thresholds = _csv(["dn", "beta0", "beta_quarter"], [(t.dn, t.beta0, t.beta_quarter) for t in ths])
        if args.out:
            _write(regimes, args.out)
            _write(thresholds, _sibling(args.out, "thresholds"))
        else:
            _write(regimes + "\n" + thresholds, None)
    if args.plot:
        from kreinscan.plotting import plot_region

        _plot(plot_region, cells, ths, args.plot)
    for c in mismatched:
        print(
            f"mismatch: dn={c.dn} beta={c.beta}: thresholds {c.regime.value}, roots {c.root_regime.value}",
            file=sys.stderr,
        )
    return 1 if mismatched else 0


def _plot(fn, *args):
    *data, path = args
    try:
        fn(*data, path)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from exc


def _random_mu(rng) -> Fraction:
    return Fraction(rng.randint(-40, 40), rng.randint(1, 9))


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    lines, failed = [], False

    def result(ok: bool, label: str, detail: str = ""):
        nonlocal failed
        failed |= not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else ""))

    # reduction identity on random instances
    bad = None
    for _ in range(args.samples):
        cd = oracle.random_dispersion(rng, max_order=6)
        dn = rng.randint(1, 8)
        rep = oracle.verify_reduction(cd, dn, [_random_mu(rng)])
        if not rep.ok:
            mu, lhs, rhs = rep.counterexample
            bad = f"coeffs={[str(c) for c in cd.coeffs]} dn={dn} mu={mu} lhs={lhs} rhs={rhs}"
            break
    result(bad is None, f"reduction identity, {args.samples} random instances", bad or "")

    # brute force against reduced-polynomial roots
    cases = [("gkdv k=2", gkdv_dispersion(1, 2))]
    cases += [(f"random #{i}", oracle.random_dispersion(rng)) for i in range(args.brute)]
    for name, cd in cases:
        cc = oracle.cross_check(cd, n_max=20)
        detail = f"{len(cc.brute)} collisions, {cc.roots_checked} roots matched, {cc.uncovered} outside window"
        if not cc.ok:
            detail += f"; unmatched brute {cc.unmatched_brute[:3]}, unmatched roots {cc.unmatched_roots[:3]}"
        result(cc.ok, f"brute-force scan vs roots ({name})", detail)

    mus = [round(-0.49 + 0.98 * i / 49, 12) for i in range(50)]
    bad_mu = [mt for mt in mus if not oracle.kdv_subharmonic_check(mt)]
    result(not bad_mu, "KdV subharmonic identity, 50 mu_tilde values", f"fails at {bad_mu}" if bad_mu else "")

    for rep in identities.run_all():
        result(rep.passed, rep.summary(), "; ".join(map(str, rep.violations[:3])))

    _write("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_lemmas(args) -> int:
    if args.m_max < 2:
        raise InputError("--m-max must be >= 2")
    reports = identities.run_all(args.m_max)
    lines = []
    for rep in reports:
        lines.append(rep.summary())
        for v in rep.violations[:10]:
            lines.append(f"  violation {v}")
        for label, ok in rep.equality_cases:
            if not ok:
                lines.append(f"  equality case not attained: {label}")
    _write("\n".join(lines) + "\n", args.out)
    return 0 if all(r.passed for r in reports) else 1


HANDLERS = {
    "classify": cmd_classify,
    "spectrum": cmd_spectrum,
    "region": cmd_region,
    "verify": cmd_verify,
    "lemmas": cmd_lemmas,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_with_config(_glue_negative(argv)))
        return HANDLERS[args.command](args)
    except InputError as exc:
        print(f"kreinscan: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
