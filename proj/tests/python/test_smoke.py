"""Smoke tests for the _privpipe python module."""

from fractions import Fraction

import privpipe


def frac(s):
    return Fraction(s)


def entries(m):
    return [[frac(v) for v in row] for row in m["entries"]]


def test_geometric_mechanism():
    g2 = privpipe.mech_build("geometric", 3, "1/2")
    assert entries(g2) == [
        [Fraction(2, 3), Fraction(1, 6), Fraction(1, 6)],
        [Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)],
        [Fraction(1, 6), Fraction(1, 6), Fraction(2, 3)],
    ]
    assert abs(privpipe.mech_epsilon("geometric", 3, "1/2") - 0.6931471805599453) < 1e-12


def test_random_response_and_ratio():
    rr = privpipe.mech_build("rr", 2, "1/2")
    assert entries(rr)[0] == [Fraction(3, 4), Fraction(1, 4)]
    eps = privpipe.realized_epsilon(rr)
    assert eps["ratio"] == "3"
    assert not eps["unbounded"]


def test_geometric_witness_and_structural_checks():
    w = privpipe.geometric_witness(3, "1/3", "1/2")
    assert entries(w) == [
        [Fraction(5, 6), Fraction(1, 12), Fraction(1, 12)],
        [Fraction(5, 24), Fraction(7, 12), Fraction(5, 24)],
        [Fraction(1, 12), Fraction(1, 12), Fraction(5, 6)],
    ]
    outlier = privpipe.boolean_aggregator([0, 1, 2], [0, 2])
    zeros = privpipe.boolean_aggregator([0, 1, 2], [0])
    assert privpipe.structural_stability_check(w, outlier)
    assert not privpipe.structural_stability_check(w, zeros)

    g3 = privpipe.mech_build("geometric", 3, "1/3")
    g2 = privpipe.mech_build("geometric", 3, "1/2")
    assert privpipe.instability_precheck(g3, g2, zeros) == "UNSTABLE"


def test_refinement_verdicts():
    r3 = privpipe.mech_build("rr", 3, "2/5")
    r2 = privpipe.mech_build("rr", 3, "1/4")
    verdict = privpipe.check_refinement(r3, r2)
    assert verdict["refines"]
    w = verdict["witness"]
    product = privpipe.matmul(r3, w)
    assert entries(product) == entries(r2)

    # the reverse direction must refute with a validated certificate
    reverse = privpipe.check_refinement(r2, r3)
    assert not reverse["refines"]
    cert = reverse["certificate"]
    ua = Fraction(privpipe.posterior_uncertainty(cert["loss"], cert["prior"], r2))
    ub = Fraction(privpipe.posterior_uncertainty(cert["loss"], cert["prior"], r3))
    assert ua > ub


def test_posterior_uncertainty():
    identity = privpipe.mech_build("rr", 3, "1")
    loss = privpipe.builtin_loss("bayes_risk", [0, 1, 2])
    prior = privpipe.uniform_prior([0, 1, 2])
    assert Fraction(privpipe.posterior_uncertainty(loss, prior, identity)) == 0


def test_known_context_count_matches_expected_loss():
    g = privpipe.mech_build("geometric", 7, "2/7")
    counts = privpipe.known_context_count(g, [0, 1, 1], 0, list(range(7)))
    loss = privpipe.builtin_loss("scaled_abs", list(range(7)), "1000")
    prior = privpipe.uniform_prior(list(range(7)))
    u = Fraction(privpipe.posterior_uncertainty(loss, prior, counts))
    assert u == Fraction(1276949536000, 771895089)


def test_run_experiment():
    verdict = privpipe.run_experiment("outlier-stability")
    assert verdict["precheck_zeros"] == "UNSTABLE"
    assert verdict["structural_check_outlier"] is True


def test_csv_round_trip():
    g2 = privpipe.mech_build("geometric", 3, "1/2")
    text = privpipe.matrix_to_csv(g2)
    back = privpipe.matrix_from_csv(text)
    assert entries(back) == entries(g2)
