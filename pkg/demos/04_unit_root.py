"""Augmented Dickey-Fuller tests: returns vs price levels, three variants.

A random walk has a unit root: its level wanders without reverting.  Run
on RETURNS the test should reject resoundingly (returns of almost any
price process are stationary); run on LOG PRICE LEVELS of a random walk it
should fail to reject.  Both directions are shown, with the lag order from
the cube-root rule, across the three deterministic-term variants.
"""

import numpy as np

from effitest import adf_test, default_lag, default_scheme, segment

from _data import load_fixture


def main():
    prices, returns = load_fixture()["ALPHA"]
    full_returns = segment(returns, default_scheme())["Full"]
    log_prices = np.log(prices.values)

    print(f"lag order for n={len(full_returns)}: {default_lag(len(full_returns))}")
    print()
    print(f"{'target':>12} {'model':>13} {'tau':>9} {'p':>6} {'lags':>5} {'n_obs':>6}  unit root?")
    for target, values in (("returns", full_returns.values), ("log_prices", log_prices)):
        for model in ("none", "drift", "drift_trend"):
            r = adf_test(values, model=model, target=target)
            verdict = "rejected (stationary)" if r.reject_at_5pct else "not rejected"
            print(f"{target:>12} {model:>13} {r.tau:>9.2f} {r.p_value:>6.2f} "
                  f"{r.lags:>5} {r.n_obs:>6}  {verdict}")

    print()
    print("p-values interpolate simulated finite-sample tau quantiles and")
    print("clamp to [0.01, 0.99]; tau is compared against Dickey-Fuller,")
    print("not Student-t, critical points.")


if __name__ == "__main__":
    main()
