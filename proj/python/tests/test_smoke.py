import ptg


def test_fixtures_rejected():
    for name in ["net", "tent", "u3k2", "u2p3", "up2p4"]:
        assert not ptg.recognize(ptg.fixture(name))["paired_threshold"], name


def test_nested_family_certificate_validates():
    g = ptg.nested_family(3)
    r = ptg.recognize(g)
    assert r["paired_threshold"]
    assert ptg.check_weight_certificate(g, r["weights"], r["threshold"])
    assert ptg.check_broom(g, r["sigma"], r["p"])


def test_weights_round_trip():
    weights = ["20", "40", "60", "724", "725", "726", "747", "808", "809", "810",
               "831", "832", "853", "854", "875", "876", "1525.85", "1544.9", "1604.95", "1653"]
    g = ptg.pt_from_weights(weights, "800")
    assert ptg.check_weight_certificate(g, weights, "800")
    assert ptg.recognize(g)["paired_threshold"]


def test_parse_render_round_trip():
    g = ptg.parse_graph("0 1\n1 2\n")
    assert (g.n, g.m) == (3, 2)
    h = ptg.parse_graph(ptg.render_graph(g))
    assert h.edges() == g.edges()


def test_bad_input_raises():
    try:
        ptg.parse_graph("0 0\n")
    except ptg.ParseError:
        return
    raise AssertionError("self-loop accepted")


def test_clique_path_of_non_interval_is_none():
    assert ptg.clique_path(ptg.fixture("c4")) is None
    assert len(ptg.clique_path(ptg.fixture("fig3"))) == 5
