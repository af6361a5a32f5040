"""Autocorrelation function, its two standard-error conventions, Ljung-Box.

Each lag-k coefficient measures linear dependence between returns k days
apart.  Significance can be judged per lag (t = rho/se) or jointly over a
horizon (the Ljung-Box Q statistic).  Two SE conventions are computed:
1/sqrt(n) per observation count, and sd(rho_1..rho_K)/sqrt(K) across the
coefficients themselves; reports label which one the t column uses.
"""

from effitest import acf, default_scheme, ljung_box, segment

from _data import load_fixture


def main():
    _, returns = load_fixture()["ALPHA"]
    full = segment(returns, default_scheme())["Full"]

    result = acf(full, max_lag=20)
    print(f"n = {result.n_obs}, se(appendix) = {result.se_appendix:.6f}, "
          f"se(table) = {result.se_paper_table:.6f}")
    print(f"{'lag':>4} {'rho':>9} {'t':>7}  significant?")
    for k in range(result.lags):
        mark = "yes" if abs(result.t_values[k]) > 1.96 else ""
        print(f"{k + 1:>4} {result.rho[k]:>9.4f} {result.t_values[k]:>7.2f}  {mark}")

    lb = ljung_box(result, result.n_obs, 20)
    print(f"\nLjung-Box Q(20) = {lb.statistic:.3f}, p = {lb.p_value:.4f} "
          f"-> joint null of zero autocorrelation "
          f"{'rejected' if lb.reject_at_5pct else 'not rejected'}")


if __name__ == "__main__":
    main()
