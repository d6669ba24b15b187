"""A small exhaustive sweep of fvs <= 2*cp over generated corpora.

Generates every connected subcubic planar graph up to isomorphism (simple
up to n=9 here, multigraphs up to n=7), solves both optima exactly, and
tabulates the margin 2*cp - fvs.  The full acceptance suite pushes this to
n=12 / n=8 with zero violations.
"""

from collections import Counter

from jonescheck import harness, solvers


def sweep(cls, max_n):
    margins = Counter()
    total = 0
    for g in harness.generate_corpus(harness.CorpusSpec(cls, max_n)):
        fvs = solvers.fvs_exact(g)
        cp = solvers.cp_exact(g)
        assert fvs.size <= 2 * cp.size, f"violation on {g}"
        margins[2 * cp.size - fvs.size] += 1
        total += 1
    print(f"{cls} (n <= {max_n}): {total} graphs, zero violations")
    for margin in sorted(margins):
        tag = "  <- bound attained (fvs = 2*cp)" if margin == 0 else ""
        print(f"  margin 2*cp - fvs = {margin}: {margins[margin]} graphs{tag}")


def main():
    sweep("subcubic-planar-simple", 9)
    sweep("subcubic-planar-multi", 7)
    sweep("cubic-planar-simple", 10)


if __name__ == "__main__":
    main()
