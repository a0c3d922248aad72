"""The verification suite.

Twelve independent checks re-derive every frozen reference value in
betaforge.fixtures with the exact engine: decimal constants, iterate tables,
expansion counts, branch families, orbit identities, and endpoint
inequalities.  Each check returns a PASS/FAIL record with a witness string;
a corrupted fixture is caught and named by row and column.

Run the same suite from the command line with:  betaforge verify all
"""

from betaforge import fixtures
from betaforge.verify import render_text, run_all


def main():
    print("quick profile (family bounds k, j <= 8):")
    results = run_all("quick")
    print(render_text(results))

    print()
    print("fault injection: corrupt one table cell and re-run that check")
    original = fixtures.TABLE_T1
    fixtures.TABLE_T1 = tuple(
        (word, ("1.277400",) + cells[1:] if word == "00(01)*" else cells)
        for word, cells in original
    )
    try:
        print(render_text(run_all("quick", check_ids=["T1"])))
    finally:
        fixtures.TABLE_T1 = original

    print()
    print("the full profile (k, j <= 50) runs the same checks harder:")
    print("  betaforge verify all --profile full")


if __name__ == "__main__":
    main()
