"""Daily returns, descriptive moments, and the Jarque-Bera normality test.

Walks one index through the first stage of the battery: segment the return
series into the crisis periods, summarize each segment's moments, and ask
whether the returns could plausibly be normal.  Fat-tailed daily returns
essentially never are, and the JB statistic makes that quantitative.
"""

from effitest import default_scheme, describe, jarque_bera, segment

from _data import load_fixture


def main():
    _, returns = load_fixture()["ALPHA"]
    scheme = default_scheme()

    print(f"{'period':>8} {'n':>6} {'mean':>11} {'std':>9} {'skew':>8} "
          f"{'kurt':>7} {'JB':>12} {'p':>8}  normal?")
    for label, sub in segment(returns, scheme).items():
        stats = describe(sub)
        jb = jarque_bera(stats)
        verdict = "rejected" if jb.reject_at_5pct else "not rejected"
        print(f"{label:>8} {stats.n:>6} {stats.mean:>11.3e} {stats.std_dev:>9.5f} "
              f"{stats.skewness:>8.4f} {stats.kurtosis:>7.3f} {jb.statistic:>12.2f} "
              f"{jb.p_value:>8.1e}  {verdict}")

    print()
    print("A normal sample has skewness 0 and kurtosis 3; JB weighs the")
    print("squared deviations of both, scaled by the sample size.")


if __name__ == "__main__":
    main()
