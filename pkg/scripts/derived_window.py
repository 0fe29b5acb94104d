"""Which group monomials of a square window lie in [H, H]?

For a Hamiltonian config with every slot group-only and a twisted pair,
brackets of window monomials span every nonconstant window monomial except
x^sigma.  The grid printed below marks reached cells with '#', the missing
sigma with 's' and the origin with '.'.

    python3 scripts/derived_window.py --radius 3 --sigma 1 1
"""

import argparse

from gencartan.hamiltonian import HamiltonianConfig, derived_subalgebra_window


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--radius", type=int, default=2)
    ap.add_argument("--sigma", type=int, nargs=2, default=(1, 1))
    args = ap.parse_args()
    cfg = HamiltonianConfig.build(2, 2, "00", [[1, 0], [0, 1]], m1=1, sigmas=[list(args.sigma)])
    r = args.radius
    window = [(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1)]
    got = derived_subalgebra_window(cfg, window)
    for b in range(r, -r - 1, -1):
        row = []
        for a in range(-r, r + 1):
            cell = (a, b)
            row.append("#" if cell in got else "s" if cell == tuple(args.sigma) else "." if cell == (0, 0) else "?")
        print(" ".join(row))
    missing = sorted(set(window) - got - {(0, 0)})
    print(f"{len(got)} of {len(window) - 1} nonconstant monomials reached; missing {missing}")


if __name__ == "__main__":
    main()
