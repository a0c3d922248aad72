"""How many expansions does a point have?

The branch graph of x collects every switch-region value reachable from x;
its infinite paths correspond one-to-one with the expansions of x.  The
classifier reads the graph's strongly connected components:

  * no cycle                         -> Finite(k), k = number of paths
  * cycles, every component simple   -> countably infinite
  * a component with an extra edge   -> continuum
"""

from fractions import Fraction

from betaforge import (
    PeriodicWord,
    bfs_expansions,
    build_branch_graph,
    classify,
    count_expansions,
    define_field,
    enumerate_expansions,
    eval_word,
    golden_field,
    parse_word,
    q2_field,
    qf_field,
    to_decimal,
    viable_prefix_counts,
)


def member(k):
    """A point with exactly k expansions in the companion base."""
    return PeriodicWord((1,) + (0, 0, 0, 0) * (k - 1) + (0,), (1, 0))


def main():
    qf = qf_field()

    print("exact finite counts in the companion base:")
    for k in (1, 2, 3, 5, 8):
        x = eval_word(member(k), qf)
        print(f"  {str(member(k)):>24} -> {count_expansions(x)}")

    print()
    x3 = eval_word(member(3), qf)
    print("the three expansions of", member(3), "listed and re-evaluated:")
    for w in enumerate_expansions(x3):
        print(f"  {w}   value matches: {eval_word(w, qf) == x3}")

    print()
    print("independent cross-check: distinct length-n prefixes, n = 1..12")
    print(" ", viable_prefix_counts(x3, 12))

    print()
    x_inf = eval_word(parse_word("1(0)*"), qf)
    print("the point 1/q has countably many expansions:", count_expansions(x_inf))
    words, complete = bfs_expansions(x_inf, max_count=6)
    print("first six by fewest branch decisions (complete: %s):" % complete)
    for w in words:
        print("  ", w)

    print()
    g = build_branch_graph(eval_word(parse_word("(01)*"), golden_field()))
    print("golden base, x = 1/q: a 2-cycle of switch points ->", classify(g))

    P = define_field((-1, -1, 0, 1), (Fraction(13, 10), Fraction(14, 10)))
    g = build_branch_graph(P.one)
    print(f"cubic base x^3=x+1, x = 1: {len(g.nodes)} switch points ->", classify(g))

    print()
    q2 = q2_field()
    e1 = eval_word(parse_word("01(10)*"), q2)
    print("quartic base witness", to_decimal(e1, 6), "->", count_expansions(e1))
    for w in enumerate_expansions(e1):
        print("  ", w)


if __name__ == "__main__":
    main()
