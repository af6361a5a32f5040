"""Monte-Carlo size and power of the battery's tests.

Size: feed a test data that satisfies its null and check it rejects about
5% of the time at alpha = 0.05.  Power: feed data violating the null and
check it rejects nearly always.  Every draw comes from the deterministic
SplitMix64 stream, so these rates are exactly reproducible.

This is a trimmed-down version of the calibration battery behind
``effitest validate-mc``; expect a couple of minutes at full trial counts,
a few seconds here.
"""

from effitest import GeneratorSpec, size_power


def main():
    gauss = GeneratorSpec(kind="iid_gaussian", n=500, seed=11)
    walk = GeneratorSpec(kind="random_walk", n=1000, seed=22)
    ar1 = GeneratorSpec(kind="ar1", n=500, phi=0.3, seed=33)

    cases = [
        ("size", "runs_test", gauss),
        ("size", "jarque_bera", gauss),
        ("size", ("ljung_box", {"h": 10}), gauss),
        ("size", ("adf", {"model": "drift"}), walk),
        ("power", ("ljung_box", {"h": 10}), ar1),
    ]
    print(f"{'kind':>6} {'test':>24} {'generator':>13} {'rate':>7} {'+-':>7}")
    for kind, test, spec in cases:
        r = size_power(test, spec, trials=400)
        name = test if isinstance(test, str) else f"{test[0]}{test[1]}"
        print(f"{kind:>6} {name:>24} {spec.kind:>13} {r.rejection_rate:>7.3f} "
              f"{r.ci_halfwidth:>7.3f}")

    print("\nsize rows should sit near 0.05; the power row near 1.0")


if __name__ == "__main__":
    main()
