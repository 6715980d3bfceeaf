"""Regenerate src/levelspacing/_frozen.py.

Two kinds of exact tables are frozen:

  * deep small-argument series for all six transcendents, grown by the
    live recurrence in series.py (which stays the source of truth; the
    test suite re-derives low orders and compares);
  * large-argument expansions for the four Bessel-family transcendents,
    sigma ~ x/4 + e sqrt(x) + a0 + sum a_k x^(-k/2), derived here by
    descending-order matching. These feed the far boundary condition of
    the two-point solver and its audits.

Run from the repository root:

    python3 scripts/freeze_series.py [--tau 24] [--asym-terms 12]

Regeneration takes a few minutes; the deep recurrence cost grows quickly
with order.
"""

from __future__ import annotations

import argparse
import concurrent.futures as cf
import pathlib
import sys
import time
from fractions import Fraction

import sympy as sp

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from levelspacing.catalog import (PI, S, Y, Y1, Y2, TranscendentId, lookup)
from levelspacing.series import _run_recurrence  # noqa: E402

# Branch of the sqrt(x) term in the Bessel-family large-argument
# expansion, validated against forward integration of each transcendent.
ASYM_BRANCH = {
    TranscendentId.SIGMA_B: Fraction(1, 4),
    TranscendentId.SIGMA_B_PLUS: Fraction(-1, 4),
    TranscendentId.TILDE_SIGMA_B: Fraction(1, 4),
    TranscendentId.TILDE_SIGMA_B_PLUS: Fraction(-1, 4),
}

# sine-kernel family: sigma ~ -x^2/4 + b0 + sum a_k x^(-k), even k only
SINE_IDS = (TranscendentId.SIGMA_PV, TranscendentId.TILDE_SIGMA)


def expr_to_triples(c: sp.Expr) -> list[tuple[int, int, int]]:
    """Decompose an element of Q[pi, 1/pi] into (num, den, pi_pow) triples."""
    out = []
    for term in sp.Add.make_args(sp.expand(c)):
        coeff, exp = term.as_coeff_exponent(PI)
        if not coeff.is_Rational or not exp.is_Integer:
            raise ValueError(f"coefficient not in Q[pi,1/pi]: {c}")
        out.append((int(coeff.p), int(coeff.q), int(exp)))
    out.sort(key=lambda t: -t[2])
    return out


def deep_series(tid_value: str, target_tau: int):
    tid = TranscendentId(tid_value)
    spec = lookup(tid)
    t0 = time.time()
    solved = _run_recurrence(spec, target_tau)
    packed = [(k, expr_to_triples(v)) for k, v in sorted(solved.items())]
    return tid_value, target_tau, packed, time.time() - t0


def _march_descending(spec, sig, t, unknowns, clear_pow):
    """Cancel the far-expansion residual order by order in t = 1/x^p."""
    resid = spec.residual_expr.subs({S: sig["x_of_t"], Y: sig["y"],
                                     Y1: sig["y1"], Y2: sig["y2"]})
    poly = sp.Poly(sp.expand(resid * t**clear_pow), t)
    terms = {m[0]: c for m, c in zip(poly.monoms(), poly.coeffs())}
    solved: dict[sp.Symbol, sp.Expr] = {}
    for j in sorted(terms):
        ex = sp.expand(terms[j].subs(solved))
        if ex == 0:
            continue
        syms = [u for u in unknowns if u in ex.free_symbols]
        if not syms:
            if sp.simplify(ex) != 0:
                break  # truncation zone
            continue
        if len(syms) > 1:
            break
        u = syms[0]
        sol = sp.solve(ex, u)
        if len(sol) != 1:
            sol = [r for r in sol if r.is_Rational]
            if len(sol) != 1:
                break
        solved[u] = sp.cancel(sol[0])
    return solved


def asymptote_bessel(tid: TranscendentId, n_terms: int) -> list[Fraction]:
    """Coefficients a_0 .. a_{n_terms-1}, sigma = x/4 + e sqrt(x) + sum a_k x^(-k/2).

    Work in t = x^(-1/2) with d/dx = -(t^3/2) d/dt; matching the ODE
    residual order by order gives one linear equation per coefficient.
    """
    spec = lookup(tid)
    e = sp.Rational(ASYM_BRANCH[tid])
    t = sp.Symbol("t", positive=True)
    aa = [sp.Symbol(f"a{k}") for k in range(n_terms)]
    y = sp.Rational(1, 4) / t**2 + e / t + sum(a * t**k for k, a in enumerate(aa))
    y1 = -(t**3 / 2) * sp.diff(y, t)
    y2 = -(t**3 / 2) * sp.diff(y1, t)
    solved = _march_descending(
        spec, {"x_of_t": 1 / t**2, "y": y, "y1": y1, "y2": y2}, t, aa, 2)
    out = []
    for a in aa:
        v = solved.get(a)
        if v is None:
            break
        if not v.is_Rational:
            raise ValueError(f"{tid.value}: non-rational asymptote term {v}")
        out.append(Fraction(int(v.p), int(v.q)))
    return out


def asymptote_sine(tid: TranscendentId, n_terms: int) -> list[tuple[Fraction, Fraction]]:
    """(power, coefficient) pairs of sigma ~ -x^2/4 + b0 + sum a_k x^(-k).

    Work in t = 1/x with d/dx = -t^2 d/dt. The quadratic leading order
    admits b2 in {0, -1/4}; the decaying-determinant branch is b2 = -1/4
    and is imposed, after which every further order is linear.
    """
    spec = lookup(tid)
    t = sp.Symbol("t", positive=True)
    b1, b0 = sp.symbols("b1 b0")
    aa = [sp.Symbol(f"a{k}") for k in range(1, n_terms)]
    y = sp.Rational(-1, 4) / t**2 + b1 / t + b0 + sum(
        a * t**k for k, a in zip(range(1, n_terms), aa))
    y1 = -t**2 * sp.diff(y, t)
    y2 = -t**2 * sp.diff(y1, t)
    solved = _march_descending(
        spec, {"x_of_t": 1 / t, "y": y, "y1": y1, "y2": y2}, t, [b1, b0] + aa, 4)
    out = [(Fraction(2), Fraction(-1, 4))]
    for power, u in [(Fraction(1), b1), (Fraction(0), b0)] + [
            (Fraction(-k), a) for k, a in zip(range(1, n_terms), aa)]:
        v = solved.get(u)
        if v is None:
            break
        if not v.is_Rational:
            raise ValueError(f"{tid.value}: non-rational asymptote term {v}")
        if v != 0:
            out.append((power, Fraction(int(v.p), int(v.q))))
    return out


# Leading coefficients cross-checked against integration before freezing;
# regeneration must reproduce them exactly.
KNOWN_ASYM = {
    TranscendentId.SIGMA_B: [
        Fraction(1, 16), Fraction(-1, 32), Fraction(1, 64), Fraction(-13, 512),
        Fraction(5, 128), Fraction(-413, 4096), Fraction(131, 512),
        Fraction(-119197, 131072)],
    TranscendentId.SIGMA_B_PLUS: [
        Fraction(1, 16), Fraction(1, 32), Fraction(1, 64), Fraction(13, 512),
        Fraction(5, 128), Fraction(413, 4096), Fraction(131, 512),
        Fraction(119197, 131072)],
    TranscendentId.TILDE_SIGMA_B: [
        Fraction(-7, 16), Fraction(15, 32), Fraction(-15, 64),
        Fraction(-45, 512), Fraction(45, 128), Fraction(-2925, 4096),
        Fraction(675, 512), Fraction(-431325, 131072)],
    TranscendentId.TILDE_SIGMA_B_PLUS: [
        Fraction(9, 16), Fraction(-15, 32), Fraction(-15, 64),
        Fraction(45, 512), Fraction(45, 128), Fraction(2925, 4096),
        Fraction(675, 512), Fraction(431325, 131072)],
}

# (power, coefficient) heads of the sine-family far expansions
KNOWN_ASYM_SINE = {
    TranscendentId.SIGMA_PV: [
        (Fraction(2), Fraction(-1, 4)), (Fraction(0), Fraction(-1, 4)),
        (Fraction(-2), Fraction(-1, 4)), (Fraction(-4), Fraction(-5, 2)),
        (Fraction(-6), Fraction(-131, 2))],
    TranscendentId.TILDE_SIGMA: [
        (Fraction(2), Fraction(-1, 4)), (Fraction(0), Fraction(3, 4)),
        (Fraction(-2), Fraction(-9, 4)), (Fraction(-4), Fraction(-9, 2)),
        (Fraction(-6), Fraction(-243, 2))],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau", type=int, default=24,
                    help="target order in tau = sqrt(s) for the deep series")
    ap.add_argument("--asym-terms", type=int, default=12,
                    help="number of a_k coefficients in the far expansions")
    ap.add_argument("--out", default=str(ROOT / "src/levelspacing/_frozen.py"))
    args = ap.parse_args()

    series_packed = {}
    t_all = time.time()
    with cf.ProcessPoolExecutor(max_workers=6) as pool:
        futs = [pool.submit(deep_series, tid.value, args.tau)
                for tid in TranscendentId]
        for fut in cf.as_completed(futs):
            tid_value, tau, packed, dt = fut.result()
            series_packed[tid_value] = {"max_tau": tau, "terms": packed}
            print(f"  series {tid_value:22s} {len(packed):3d} terms  {dt:7.1f}s",
                  flush=True)

    asym_packed = {}
    for tid, known in KNOWN_ASYM.items():
        coeffs = asymptote_bessel(tid, args.asym_terms)
        if coeffs[:8] != known:
            raise SystemExit(
                f"{tid.value}: regenerated far expansion disagrees with the "
                f"integration-validated coefficients:\n  new: {coeffs[:8]}\n"
                f"  ref: {known}")
        e = ASYM_BRANCH[tid]
        terms = [(1, 4, 1, 1), (e.numerator, e.denominator, 1, 2)]
        terms += [(a.numerator, a.denominator, -k, 2)
                  for k, a in enumerate(coeffs) if a != 0]
        asym_packed[tid.value] = {"terms": terms}
        print(f"  asym   {tid.value:22s} {len(terms):3d} terms", flush=True)

    for tid, known in KNOWN_ASYM_SINE.items():
        pairs = asymptote_sine(tid, args.asym_terms + 6)
        head = [p for p in pairs if p[0] >= -6]
        if head != known:
            raise SystemExit(
                f"{tid.value}: regenerated far expansion disagrees:\n"
                f"  new: {head}\n  ref: {known}")
        asym_packed[tid.value] = {"terms": [
            (c.numerator, c.denominator, p.numerator, p.denominator)
            for p, c in pairs]}
        print(f"  asym   {tid.value:22s} {len(pairs):3d} terms", flush=True)

    body = [
        '"""Frozen exact tables generated by scripts/freeze_series.py.',
        "",
        "Do not edit by hand; regenerate with the script. The live recurrence",
        "in series.py remains the source of truth and the test suite compares",
        "low orders of these tables against it.",
        '"""',
        "",
        "# series coefficient encoding: (k, [(num, den, pi_pow), ...]) means",
        "# the s**(k/2) coefficient equals sum of num/den * pi**pi_pow.",
        f"SERIES = {series_packed!r}",
        "",
        "# far-expansion encoding: each (num, den, p_num, p_den) term",
        "# contributes (num/den) * x**(p_num/p_den) to sigma at large x.",
        f"ASYMPTOTES = {asym_packed!r}",
        "",
    ]
    pathlib.Path(args.out).write_text("\n".join(body))
    print(f"wrote {args.out}  ({time.time() - t_all:.0f}s total)")


if __name__ == "__main__":
    main()
