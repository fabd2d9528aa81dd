import pytest

from genus2pairs.errors import (
    InvalidParamsError,
    UnknownCurveError,
    UnlabeledBandError,
)
from genus2pairs.rr_diagram import (
    Arc,
    ArcStep,
    Band,
    CanonicalParams,
    Endpoint,
    HandleLabel,
    RRDiagram,
    TraverseStep,
    alpha_word_fig3a,
    build_canonical,
    diagram_from_json,
    diagram_to_json,
    parse_endpoint,
    parse_step,
    trace_word,
    validate,
)
from genus2pairs.primitivity import is_primitive
from genus2pairs.words import CyclicWord

FIG3A_GRID = [
    (a, b, p, eps)
    for a, b in [(1, 1), (1, 2), (2, 1), (3, 2), (2, 3), (1, 4), (5, 2)]
    for eps in (1, -1)
    for p in ([2, 3] if eps == 1 else [3, 4])
]


def kinds(violations):
    return {v.kind for v in violations}


class TestTokens:
    def test_traverse_token_round_trip(self):
        step = TraverseStep("A", 0, 1)
        assert step.token() == "A.0.+"
        assert parse_step("A.0.+") == step
        assert parse_step("B.2.-") == TraverseStep("B", 2, -1)

    def test_arc_token_round_trip(self):
        assert ArcStep(3, -1).token() == "arc:3.-"
        assert parse_step("arc:3.-") == ArcStep(3, -1)

    def test_endpoint_round_trip(self):
        assert parse_endpoint("A.1.-") == Endpoint("A", 1, "-")
        assert Endpoint("B", 0, "+").token() == "B.0.+"

    @pytest.mark.parametrize(
        "bad", ["C.0.+", "A.x.+", "A.0.*", "arc:+.3", "arc:1", "A.0", ""]
    )
    def test_malformed_tokens(self, bad):
        with pytest.raises(InvalidParamsError):
            parse_step(bad)


class TestHandleConstraints:
    def build(self, bands_a, bands_b=(Band(1, 1),)):
        handle_a = HandleLabel("A", tuple(bands_a))
        handle_b = HandleLabel("B", tuple(bands_b))
        return RRDiagram(handle_a, handle_b)

    def test_missing_bands(self):
        d = self.build(())
        assert "MissingBands" in kinds(validate(d))

    def test_too_many_bands(self):
        d = self.build([Band(1, 1), Band(1, 2), Band(1, 3), Band(1, 4)])
        assert "TooManyBands" in kinds(validate(d))

    def test_two_band_gcd(self):
        d = self.build([Band(1, 2), Band(1, 4)])
        assert "GcdViolation" in kinds(validate(d))

    def test_two_band_coprime_ok(self):
        d = self.build([Band(1, 2), Band(1, 3)])
        assert "GcdViolation" not in kinds(validate(d))

    def test_three_band_middle_sum(self):
        d = self.build([Band(1, 1), Band(1, 4), Band(1, 2)])
        assert "BandSumViolation" in kinds(validate(d))

    def test_three_band_sum_ok(self):
        d = self.build([Band(1, 1), Band(1, 3), Band(1, 2)])
        assert "BandSumViolation" not in kinds(validate(d))

    def test_full_label_determinant(self):
        d = self.build([Band(1, 3, 1), Band(1, 1, 1)])
        assert "DetViolation" in kinds(validate(d))
        d = self.build([Band(1, 2, 1), Band(1, 1, 1)])
        assert "DetViolation" not in kinds(validate(d))

    def test_unlabeled_multi_band(self):
        d = self.build([Band(1, None), Band(1, 1)])
        assert "UnlabeledBand" in kinds(validate(d))

    def test_bad_multiplicity(self):
        d = self.build([Band(0, 1)])
        assert "BadMultiplicity" in kinds(validate(d))


class TestDiagramConstraints:
    def test_unknown_endpoint(self):
        d = RRDiagram(
            HandleLabel("A", (Band(1, 1),)),
            HandleLabel("B", (Band(1, 1),)),
            arcs=(Arc(Endpoint("A", 0, "+"), Endpoint("A", 5, "-"), 1),),
        )
        assert "UnknownEndpoint" in kinds(validate(d))

    def test_endpoint_balance(self):
        d = RRDiagram(
            HandleLabel("A", (Band(2, 1),)),
            HandleLabel("B", (Band(1, 1),)),
            arcs=(
                Arc(Endpoint("A", 0, "+"), Endpoint("A", 0, "-"), 1),
                Arc(Endpoint("B", 0, "+"), Endpoint("B", 0, "-"), 1),
            ),
        )
        assert "EndpointBalance" in kinds(validate(d))

    def test_open_curve(self):
        d = build_canonical(CanonicalParams.fig1a())
        d.curves = dict(d.curves)
        d.curves["alpha"] = (TraverseStep("A", 0, 1), ArcStep(1, 1))
        assert "OpenCurve" in kinds(validate(d))

    def test_unknown_step(self):
        d = build_canonical(CanonicalParams.fig1a())
        d.curves = dict(d.curves)
        d.curves["alpha"] = (TraverseStep("A", 7, 1),)
        assert "UnknownStep" in kinds(validate(d))

    def test_empty_curve(self):
        d = build_canonical(CanonicalParams.fig1a())
        d.curves = dict(d.curves)
        d.curves["alpha"] = ()
        assert "EmptyCurve" in kinds(validate(d))

    def test_slot_usage(self):
        d = build_canonical(CanonicalParams.fig1a())
        d.curves = dict(d.curves)
        # beta walks its band but nobody uses arc 0 or band A.
        del d.curves["alpha"]
        assert "SlotUsage" in kinds(validate(d))


class TestCanonicalParams:
    def test_fig1a_takes_no_params(self):
        with pytest.raises(InvalidParamsError):
            CanonicalParams("fig1a", p=3).validated()

    @pytest.mark.parametrize("p, q", [(0, 1), (4, 2), (6, 3)])
    def test_fig2a_invalid(self, p, q):
        with pytest.raises(InvalidParamsError):
            CanonicalParams.fig2a(p, q).validated()

    @pytest.mark.parametrize(
        "a, b, p, eps",
        [
            (2, 2, 2, 1),    # gcd
            (2, 0, 2, 1),    # b < 1
            (1, 1, 1, 1),    # min exponent 1
            (1, 1, 2, -1),   # min exponent 1 after eps
            (1, 1, 2, 2),    # eps not a sign
            (1, 0, 2, 1),    # a + b < 2
        ],
    )
    def test_fig3a_invalid(self, a, b, p, eps):
        with pytest.raises(InvalidParamsError):
            CanonicalParams.fig3a(a, b, p, eps).validated()

    def test_unknown_variant(self):
        with pytest.raises(InvalidParamsError):
            CanonicalParams("fig9z").validated()


class TestBuilders:
    def test_fig1a_validates_and_traces(self):
        d = build_canonical(CanonicalParams.fig1a())
        assert validate(d) == []
        assert trace_word(d, "alpha") == CyclicWord("A")
        assert trace_word(d, "beta") == CyclicWord("B")

    @pytest.mark.parametrize("p, q", [(2, 1), (3, 1), (5, 2), (-2, 1), (1, 0), (-1, 3)])
    def test_fig2a_validates_and_traces(self, p, q):
        d = build_canonical(CanonicalParams.fig2a(p, q))
        assert validate(d) == []
        expected = CyclicWord(("A" if p > 0 else "a") * abs(p) + "B")
        assert trace_word(d, "alpha") == expected
        assert trace_word(d, "beta") == CyclicWord("B")

    def test_fig2a_crossing_counts(self):
        d = build_canonical(CanonicalParams.fig2a(2, 1))
        alpha = d.curves["alpha"]
        a_crossings = sum(
            1 for s in alpha if isinstance(s, TraverseStep) and s.handle == "A"
        )
        b_crossings = sum(
            1 for s in alpha if isinstance(s, TraverseStep) and s.handle == "B"
        )
        assert (a_crossings, b_crossings) == (1, 1)
        assert d.handle("A").bands[0].disk == 2

    @pytest.mark.parametrize("a, b, p, eps", FIG3A_GRID)
    def test_fig3a_validates_and_traces(self, a, b, p, eps):
        d = build_canonical(CanonicalParams.fig3a(a, b, p, eps))
        assert validate(d) == []
        assert trace_word(d, "alpha") == alpha_word_fig3a(a, b, p, eps)
        assert trace_word(d, "beta") == CyclicWord("B")

    def test_fig3a_crossing_counts(self):
        d = build_canonical(CanonicalParams.fig3a(1, 1, 2, 1))
        alpha = d.curves["alpha"]
        b_crossings = sum(
            1 for s in alpha if isinstance(s, TraverseStep) and s.handle == "B"
        )
        assert b_crossings == 2  # s = a + b

    def test_beta_convention(self):
        # One B-handle traversal plus one inessential arc in each family.
        for params in (
            CanonicalParams.fig1a(),
            CanonicalParams.fig2a(3, 2),
            CanonicalParams.fig3a(2, 1, 2, 1),
        ):
            d = build_canonical(params)
            beta = d.curves["beta"]
            assert len(beta) == 2
            assert isinstance(beta[0], TraverseStep) and beta[0].handle == "B"
            assert isinstance(beta[1], ArcStep)


class TestTraceWord:
    def test_unknown_curve(self):
        d = build_canonical(CanonicalParams.fig1a())
        with pytest.raises(UnknownCurveError):
            trace_word(d, "gamma")

    def test_unlabeled_band(self):
        d = RRDiagram(
            HandleLabel("A", (Band(1, None),)),
            HandleLabel("B", (Band(1, 1),)),
            curves={"alpha": (TraverseStep("A", 0, 1),)},
        )
        with pytest.raises(UnlabeledBandError):
            trace_word(d, "alpha")

    def test_negative_direction_inverts(self):
        d = RRDiagram(
            HandleLabel("A", (Band(1, 2),)),
            HandleLabel("B", (Band(1, 1),)),
            curves={
                "alpha": (TraverseStep("A", 0, -1),),
                "beta": (TraverseStep("B", 0, 1),),
            },
        )
        assert trace_word(d, "alpha") == CyclicWord("aa")

    @pytest.mark.parametrize(
        "params",
        [CanonicalParams.fig1a(), CanonicalParams.fig2a(5, 2),
         CanonicalParams.fig3a(3, 2, 2, 1)],
    )
    def test_rotation_invariance(self, params):
        d = build_canonical(params)
        steps = d.curves["alpha"]
        reference = trace_word(d, "alpha")
        for k in range(1, len(steps)):
            d.curves = dict(d.curves)
            d.curves["alpha"] = steps[k:] + steps[:k]
            assert trace_word(d, "alpha") == reference


class TestAlphaWordFig3a:
    def test_minimal_instance(self):
        assert alpha_word_fig3a(1, 1, 2, 1) == CyclicWord("AABAAAB")

    def test_sturmian_arrangement(self):
        expected = CyclicWord("AAB" + "AAB" + "AAAB" + "AAB" + "AAAB")
        assert alpha_word_fig3a(3, 2, 2, 1) == expected

    def test_invalid_params_rejected(self):
        with pytest.raises(InvalidParamsError):
            alpha_word_fig3a(2, 0, 2, 1)

    @pytest.mark.parametrize("a, b, p, eps", FIG3A_GRID)
    def test_exponent_multiset(self, a, b, p, eps):
        sylls = alpha_word_fig3a(a, b, p, eps).syllables()
        exponents = [e for gen, e in sylls if gen == "A"]
        b_exponents = [e for gen, e in sylls if gen == "B"]
        assert sorted(exponents) == sorted([p] * a + [p + eps] * b)
        assert b_exponents == [1] * (a + b)

    @pytest.mark.parametrize("a, b, p, eps", FIG3A_GRID)
    def test_abelianization(self, a, b, p, eps):
        w = alpha_word_fig3a(a, b, p, eps)
        assert w.abelianization() == (a * p + b * (p + eps), a + b)

    @pytest.mark.parametrize("a, b, p, eps", FIG3A_GRID)
    def test_primitive(self, a, b, p, eps):
        assert is_primitive(alpha_word_fig3a(a, b, p, eps))

    @pytest.mark.parametrize("a, b, p, eps", FIG3A_GRID)
    def test_balanced_runs(self, a, b, p, eps):
        # Balance: all occurrences of the rarer exponent are spread out,
        # so consecutive equal-exponent runs differ in length by <= 1.
        exponents = [e for gen, e in alpha_word_fig3a(a, b, p, eps).syllables()
                     if gen == "A"]
        doubled = exponents + exponents
        runs = []
        count = 0
        for value in doubled:
            if value == p:
                count += 1
            elif count:
                runs.append(count)
                count = 0
        inner = runs[1:-1] if len(runs) > 2 else runs
        if inner and b > 1:
            assert max(inner) - min(inner) <= 1


class TestJson:
    @pytest.mark.parametrize(
        "params",
        [CanonicalParams.fig1a(), CanonicalParams.fig2a(5, 2),
         CanonicalParams.fig3a(2, 3, 3, -1)],
    )
    def test_round_trip(self, params):
        d = build_canonical(params)
        data = diagram_to_json(d)
        rebuilt = diagram_from_json(data)
        assert diagram_to_json(rebuilt) == data
        assert trace_word(rebuilt, "alpha") == trace_word(d, "alpha")
        assert validate(rebuilt) == []

    def test_label_null_round_trip(self):
        d = RRDiagram(
            HandleLabel("A", (Band(1, None),)),
            HandleLabel("B", (Band(1, 1),)),
        )
        rebuilt = diagram_from_json(diagram_to_json(d))
        assert rebuilt.handle("A").bands[0].disk is None

    @pytest.mark.parametrize(
        "data",
        [
            {},
            {"handles": {"A": {"bands": []}}},
            {"handles": {"A": {"bands": [{"label": [1, 0]}]}, "B": {"bands": []}}},
        ],
    )
    def test_malformed_rejected(self, data):
        with pytest.raises(InvalidParamsError):
            diagram_from_json(data)

    def test_deterministic_serialization(self):
        d1 = build_canonical(CanonicalParams.fig3a(3, 2, 2, 1))
        d2 = build_canonical(CanonicalParams.fig3a(3, 2, 2, 1))
        assert diagram_to_json(d1) == diagram_to_json(d2)
