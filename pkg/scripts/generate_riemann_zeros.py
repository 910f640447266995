"""Regenerate the Riemann zero ordinate fixture used by the explicit-formula tests.

Writes tests/fixtures/riemann_zeros_1000.txt: the imaginary parts of the
first 1000 nontrivial zeros of the Riemann zeta function on the critical
line, one per line, ascending, 15 significant digits.  Values are computed
with mpmath.zetazero (Riemann-Siegel based root isolation), which agrees
with the classical Odlyzko tables to all printed digits.

Usage: python scripts/generate_riemann_zeros.py [count] [outfile]
"""

import sys

import mpmath as mp


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    out = sys.argv[2] if len(sys.argv) > 2 else "tests/fixtures/riemann_zeros_1000.txt"
    mp.mp.dps = 25
    lines = [
        "# Imaginary parts of the first %d nontrivial zeros of the Riemann zeta" % count,
        "# function (critical-line ordinates, ascending).  Computed with",
        "# mpmath %s zetazero(); matches the standard Odlyzko/LMFDB tables." % mp.__version__,
    ]
    for n in range(1, count + 1):
        gamma = mp.zetazero(n).imag
        lines.append(mp.nstr(gamma, 15))
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote %s (%d zeros)" % (out, count))


if __name__ == "__main__":
    main()
