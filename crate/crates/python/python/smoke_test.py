"""Smoke test for the compiled extension: a few identities end to end."""

import secant_census as sc


def main():
    p = sc.SecantParams(10, 4, 12, 6, 3)
    assert p.rho() == 0 and p.mu() == 0, p
    assert p.macdonald() == p.macdonald("two") == 41

    for t in (1, 2, 3):
        for u in (1, 2, 3):
            d = t + 1
            expected = sc.macdonald_r1(d, (2 * t + 1) * u, 2 * t * (u + 1))
            assert sc.count_set_s(t, u) == sc.count_r1(t, u) == expected

    for u in range(1, 7):
        assert sc.count_rs1(3, u) == sc.macdonald_rs1(3, u)

    assert sc.enumerate_w(6, 4) == [364, 784, 148, 0, 0]
    assert len(sc.maximal_chains(5)) == 5
    assert [1, 3, 2, 4, 3, 5] in sc.chain_prohibitions(5)
    band = sc.band_decomposition([1, 3, 2, 4, 3, 5], 5, 2)
    assert band["leftover"] == 4

    assert sc.word_to_tableau([1, 2, 1, 2], 1) == [[1, 2], [3, 4]]
    assert len(sc.enumerate_tableaux(3, 3)) == sc.eta(9, 2, 8) == 42

    report = sc.verify_claim("A", 4, 20, 3, 2, 1)
    assert report["min_shift"] == 3 and not report["vacuous"]

    ambient, included = sc.chan_tables()
    assert sc.eh_violations(included, 7) == []
    assert sc.eh_violations(ambient, 10) == [(4, 0, 9)]

    big = sc.count_r1(8, 200)
    assert big == sc.macdonald_r1(9, 17 * 200, 16 * 201) and big > 2**64

    try:
        sc.SecantParams(6, 2, 6, 2, 0)
    except ValueError:
        pass
    else:
        raise AssertionError("r = 0 must be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
