from collections import Counter
from pathlib import Path

import numpy as np

from src.data import load_algebra
from src.errors import AlgebraMismatchError, NotAPartitionError, NotTriangularError
from src.modules import (
    Representation,
    cokernel,
    direct_sum,
    hom_space,
    identity_morphism,
    injective_module,
    is_isomorphic,
    min_proj_presentation,
    projective_module,
    registry_for,
    regular_module,
    simple_module,
    zero_module,
)
from src.tilting import d_sigma_contains, enumerate_stt, is_support_tau_tilting, is_tau_rigid
from src.triangular import (
    assembled_presentation,
    check_lift_silting,
    check_lift_stt,
    check_lift_tilting,
    check_lift_tilting_by_generation,
    left_module,
    left_module_is_projective,
    lift,
    lift_of_gamma_module,
    parse_split,
    parse_triple_label,
    presentation_is_monic,
    rep_to_triple,
    right_module,
    sweep_lifts,
    tensor_morphism,
    tensor_with_M,
    tensored_presentation_is_monic,
    triangular_split,
    triple_label,
    triple_to_rep,
)
from src.triangular.lift import check_lift_tau_rigid, lift_summand_count

ALGEBRAS = Path(__file__).resolve().parent / "algebras"
R = load_algebra(ALGEBRAS / "triangular_r.yaml")
SPLIT = triangular_split(R, ["1", "2"], ["3", "4", "5"])
LAM_POSET = enumerate_stt(SPLIT.lam)
GAMMA_POSET = enumerate_stt(SPLIT.gamma)

TENSOR_TABLE = {
    "P3P4P5": "P1P2",
    "P3P4S4": "P1P2P2",
    "P3S3P5": "P1S1",
    "P4P5": "P2",
    "P3S4": "P1P2",
    "S3P5": "S1",
    "P3S3": "P1S1",
    "P4S4": "P2P2",
    "S3": "S1",
    "S4": "P2",
    "P5": "0",
    "0": "0",
}

PASSING = {
    "(P1P2,0)": set(TENSOR_TABLE),
    "(P1S1,0)": {"P3S3P5", "S3P5", "P3S3", "S3", "P5", "0"},
    "(P2,P1)": {"P4P5", "P4S4", "S4", "P5", "0"},
    "(S1,P2)": {"S3P5", "S3", "P5", "0"},
    "(0,P1P2)": {"P5", "0"},
}


def _gamma(label: str):
    return next(node for node in GAMMA_POSET.nodes if node.module_label == label)


def _lam(label: str):
    return LAM_POSET.find(label)


def test_split_of_the_worked_example():
    assert SPLIT.lam.dim == 3
    assert SPLIT.gamma.dim == 5
    assert SPLIT.m_dim == 3
    assert SPLIT.a_vertices == ("1", "2")
    assert registry_for(SPLIT.lam).label_sum(right_module(SPLIT)) == "P1P2"
    assert left_module(SPLIT).dims == (2, 1, 0)
    # epsilon spans a copy of Gamma e3 and gamma one of Gamma e4, since alpha.gamma = epsilon.delta is
    # nonzero in R; so _Gamma M is projective here
    assert left_module_is_projective(SPLIT)
    assert SPLIT.describe()["dim_M"] == 3


def test_split_parsing_and_rejection():
    assert parse_split("A=1,2;B=3,4,5") == (["1", "2"], ["3", "4", "5"])
    try:
        triangular_split(R, ["3", "4", "5"], ["1", "2"])
    except NotTriangularError as exc:
        assert "A to B" in str(exc)
    else:
        raise AssertionError("swapped split accepted")
    for a, b in ((["1"], ["3", "4", "5"]), (["1", "2", "3"], ["3", "4", "5"])):
        try:
            triangular_split(R, a, b)
        except NotAPartitionError:
            pass
        else:
            raise AssertionError(f"{a} | {b} accepted as a partition")
    try:
        parse_split("A=1,2")
    except NotAPartitionError:
        pass
    else:
        raise AssertionError("split without B accepted")


def test_tensor_table():
    registry = registry_for(SPLIT.lam)
    for node in GAMMA_POSET.nodes:
        tensored = tensor_with_M(node.module, SPLIT).module
        assert registry.label_sum(tensored) == TENSOR_TABLE[node.module_label], node.label


def test_tensor_rejects_lambda_modules():
    try:
        tensor_with_M(simple_module(SPLIT.lam, "1"), SPLIT)
    except AlgebraMismatchError:
        pass
    else:
        raise AssertionError("Lambda module tensored with M")


def test_single_piece_lifts():
    expected = {"P3": "(P1,P3)", "P4": "(P2,P4)", "P5": "(0,P5)", "S3": "(S1,S3)", "S4": "(P2,S4)"}
    gamma = SPLIT.gamma
    pieces = {
        "P3": projective_module(gamma, ["3"]),
        "P4": projective_module(gamma, ["4"]),
        "P5": projective_module(gamma, ["5"]),
        "S3": simple_module(gamma, "3"),
        "S4": simple_module(gamma, "4"),
    }
    for name, module in pieces.items():
        assert triple_label(lift_of_gamma_module(module, SPLIT), SPLIT) == expected[name]
    assert is_isomorphic(lift_of_gamma_module(pieces["P3"], SPLIT), projective_module(R, ["3"]))


def test_sweep_of_the_worked_example():
    table = sweep_lifts(SPLIT, verify=True)
    assert len(table.rows) == 60
    assert all(row.verified == row.verdict for row in table.rows)
    summary = table.summary()
    assert summary["passing"] == 29
    assert summary["passing_by_x"] == {x: len(ys) for x, ys in PASSING.items()}
    for x_label, ys in PASSING.items():
        passing = {row.y_label for row in table.by_x(x_label) if row.verdict}
        assert passing == {_gamma(y).label for y in ys}, x_label
    for row in table.rows:
        if not row.verdict:
            assert row.failed and row.lift_label == ""
    frame = table.to_frame()
    assert frame.shape == (60, 8)
    assert int(frame["verdict"].sum()) == 29


def test_lift_labels():
    table = sweep_lifts(SPLIT)
    lifts = {(row.x_label, row.y_label): row.lift_label for row in table.passing()}
    zero_x = "(0,P1P2)"
    assert lifts[(zero_x, _gamma("P5").label)] == "(0,P5)"
    assert lifts[(zero_x, _gamma("0").label)] == "0"
    assert lifts[("(P1P2,0)", _gamma("P3P4S4").label)] == "(P1,0)(P2,0)(P1,P3)(P2,P4)(P2,S4)"
    # the tensor column is filled for failing rows as well
    tensors = {row.y_label: row.tensor_label for row in table.by_x(zero_x)}
    assert tensors[_gamma("P3P4S4").label] == "P1P2P2"


def test_tilting_lift():
    x = _lam("(P1P2,0)").module
    y = _gamma("P3P4S4").module
    assert tensored_presentation_is_monic(y, SPLIT)
    assert presentation_is_monic(y)
    assert not presentation_is_monic(simple_module(SPLIT.gamma, "3"))
    assert check_lift_tilting(x, y, SPLIT)
    lifted = lift(x, y, SPLIT)
    pair = is_support_tau_tilting(lifted)
    assert pair is not None and pair.support == ()


def test_witness_outside_the_lifts():
    # (0,P3): the thin module on 3 -> 4
    corner_piece = Representation(R, (0, 0, 1, 1, 0), {"alpha": np.array([[1]])})
    witness = direct_sum(
        [corner_piece] + [projective_module(R, [v]) for v in ("2", "3", "4", "5")]
    )
    label = triple_label(witness, SPLIT)
    assert Counter(parse_triple_label(label)) == Counter(
        parse_triple_label("(0,P3)(P2,0)(P1,P3)(P2,P4)(0,P5)")
    )
    pair = is_support_tau_tilting(witness)
    assert pair is not None and pair.support == ()
    labels = {row.lift_label for row in sweep_lifts(SPLIT).passing()}
    assert all(Counter(parse_triple_label(l)) != Counter(parse_triple_label(label)) for l in labels)


def test_triple_round_trip():
    corner_piece = Representation(R, (0, 0, 1, 1, 0), {"alpha": np.array([[1]])})
    modules = [
        corner_piece,
        projective_module(R, ["3"]),
        direct_sum([projective_module(R, ["4"]), simple_module(R, "1")]),
        lift(_lam("(P1S1,0)").module, _gamma("P3S3P5").module, SPLIT),
    ]
    for module in modules:
        triple = rep_to_triple(module, SPLIT)
        assert triple.f.intertwines()
        assert is_isomorphic(triple_to_rep(triple, SPLIT), module)


def test_lift_preserves_summand_counts():
    for x in LAM_POSET.nodes:
        for y in GAMMA_POSET.nodes:
            count, expected = lift_summand_count(x.module, y.module, SPLIT)
            assert count == expected, (x.label, y.label)


def test_criteria_agree():
    for x in LAM_POSET.nodes:
        for y in GAMMA_POSET.nodes:
            verdict = check_lift_stt(x.module, y.module, SPLIT).verdict
            assert check_lift_silting(x.module, y.module, SPLIT) == verdict, (x.label, y.label)
            if verdict:
                assert check_lift_tau_rigid(x.module, y.module, SPLIT)


def test_failed_conditions_are_reported():
    x = _lam("(0,P1P2)").module
    y = _gamma("S3").module
    verdict = check_lift_stt(x, y, SPLIT)
    assert not verdict.verdict
    assert 4 in verdict.failed
    assert verdict.tensor_label == "S1"
    try:
        check_lift_stt(y, x, SPLIT)
    except AlgebraMismatchError:
        pass
    else:
        raise AssertionError("swapped corners accepted")
    assert lift(zero_module(SPLIT.lam), zero_module(SPLIT.gamma), SPLIT).is_zero()


def test_doubled_a2_sweep_is_verified():
    algebra = load_algebra(ALGEBRAS / "a2_doubled.yaml")
    split = triangular_split(algebra, *parse_split("A=1,2;B=3,4"))
    table = sweep_lifts(split, verify=True)
    assert len(table.rows) == 25
    assert all(row.verified == row.verdict for row in table.rows)
    assert table.passing()


def test_one_point_extension_sweep_is_verified():
    algebra = load_algebra(ALGEBRAS / "a3_one_point.yaml")
    split = triangular_split(algebra, ["1", "2"], ["3"])
    table = sweep_lifts(split, verify=True)
    assert len(table.rows) == 10
    assert all(row.verified == row.verdict for row in table.rows)
    # over the field corner every X survives the zero Y
    zero_y = next(node.label for node in table.gamma_poset.nodes if not node.summands)
    assert {row.x_label for row in table.passing() if row.y_label == zero_y} == set(table.lam_poset.labels())


def test_block_presentation_presents_the_lift():
    for x_label, y_label in (("(P1P2,0)", "P3P4S4"), ("(S1,P2)", "S3P5"), ("(P2,P1)", "P4S4")):
        x = _lam(x_label).module
        y = _gamma(y_label).module
        quotient, _ = cokernel(assembled_presentation(x, y, SPLIT))
        assert is_isomorphic(quotient, lift(x, y, SPLIT))


def test_tau_rigid_criterion_matches_the_lift():
    for x in LAM_POSET.nodes:
        for y in GAMMA_POSET.nodes:
            expected = is_tau_rigid(lift(x.module, y.module, SPLIT))
            assert check_lift_tau_rigid(x.module, y.module, SPLIT) == expected, (x.label, y.label)


def test_lifts_sit_inside_the_enumeration_over_r():
    poset = enumerate_stt(R)
    labels = set(poset.labels())
    lifted = set()
    for x in LAM_POSET.nodes:
        for y in GAMMA_POSET.nodes:
            if check_lift_stt(x.module, y.module, SPLIT).verdict:
                lifted.add(is_support_tau_tilting(lift(x.module, y.module, SPLIT)).label)
    assert len(lifted) == 29
    assert lifted < labels
    corner_piece = Representation(R, (0, 0, 1, 1, 0), {"alpha": np.array([[1]])})
    witness = direct_sum([corner_piece] + [projective_module(R, [v]) for v in ("2", "3", "4", "5")])
    label = is_support_tau_tilting(witness).label
    assert label in labels and label not in lifted


def test_tilting_routes_agree_on_every_pair():
    tilting = set()
    for x in LAM_POSET.nodes:
        for y in GAMMA_POSET.nodes:
            verdict = check_lift_tilting(x.module, y.module, SPLIT)
            assert verdict == check_lift_tilting_by_generation(x.module, y.module, SPLIT), (x.label, y.label)
            if verdict:
                tilting.add((x.label, y.module_label))
    assert ("(P1P2,0)", "P3P4S4") in tilting
    # only the two tilting Lambda-modules can sit under a tilting lift
    assert {x_label for x_label, _ in tilting} <= {"(P1P2,0)", "(P1S1,0)"}


def test_one_point_extension_tilting_sweep():
    algebra = load_algebra(ALGEBRAS / "a3_one_point.yaml")
    split = triangular_split(algebra, ["1", "2"], ["3"])
    assert left_module_is_projective(split)
    table = sweep_lifts(split, verify=True, tilting=True)
    assert table.summary()["tilting"] == 2
    assert {row.x_label for row in table.rows if row.tilting} == {"(P1P2,0)", "(P1S1,0)"}
    assert all(row.verdict for row in table.rows if row.tilting)
    assert table.to_frame()["tilting"].notna().all()


def test_presentation_membership_is_componentwise():
    modules = [projective_module(R, [v]) for v in R.vertices]
    modules += [simple_module(R, v) for v in R.vertices]
    modules += [injective_module(R, [v]) for v in R.vertices]
    modules.append(Representation(R, (0, 0, 1, 1, 0), {"alpha": np.array([[1]])}))
    triples = [rep_to_triple(module, SPLIT) for module in modules]
    for x in LAM_POSET.nodes:
        sigma_x = min_proj_presentation(x.module).sigma
        in_x = [d_sigma_contains(sigma_x, triple.x) for triple in triples]
        for y in GAMMA_POSET.nodes:
            sigma_y = min_proj_presentation(y.module).sigma
            sigma = assembled_presentation(x.module, y.module, SPLIT)
            for module, triple, x_part in zip(modules, triples, in_x):
                expected = x_part and d_sigma_contains(sigma_y, triple.y)
                assert d_sigma_contains(sigma, module) == expected, (x.label, y.label, module.dims)


def test_lifts_with_one_corner_fixed():
    lam, gamma = SPLIT.lam, SPLIT.gamma
    lam_modules = [node.module for node in LAM_POSET.nodes] + [
        projective_module(lam, ["1"]),
        direct_sum([projective_module(lam, ["2"]), simple_module(lam, "1")]),
    ]
    gamma_modules = [node.module for node in GAMMA_POSET.nodes] + [
        projective_module(gamma, ["3"]),
        direct_sum([simple_module(gamma, "3"), simple_module(gamma, "4")]),
    ]

    def is_stt(module):
        return is_support_tau_tilting(module) is not None

    for x in lam_modules:
        assert is_stt(lift(x, zero_module(gamma), SPLIT)) == is_stt(x), x.dims
        assert check_lift_stt(x, zero_module(gamma), SPLIT).verdict == is_stt(x)
    regular = regular_module(lam)
    for y in gamma_modules:
        assert is_stt(lift(regular, y, SPLIT)) == is_stt(y), y.dims
        expected = is_stt(y) and tensor_with_M(y, SPLIT).module.is_zero()
        assert is_stt(lift(zero_module(lam), y, SPLIT)) == expected, y.dims
        assert check_lift_stt(zero_module(lam), y, SPLIT).verdict == expected


def test_tensoring_morphisms_is_functorial():
    gamma = SPLIT.gamma
    p = R.p
    p3 = projective_module(gamma, ["3"])
    h = hom_space(projective_module(gamma, ["4"]), p3)[0]
    g = hom_space(p3, simple_module(gamma, "3"))[0]
    scalar = hom_space(p3, p3)[0].scaled(2)
    _, _, h_m = tensor_morphism(h, SPLIT)
    _, _, g_m = tensor_morphism(g, SPLIT)
    # P4 (x) M = P2 goes into P3 (x) M = P1, which maps onto S3 (x) M = S1
    assert h_m.is_injective() and not h_m.is_zero()
    assert g_m.is_surjective() and not g_m.is_zero()
    for first, second in ((h, g), (scalar, g), (h, scalar)):
        _, _, first_m = tensor_morphism(first, SPLIT)
        _, _, second_m = tensor_morphism(second, SPLIT)
        _, _, composite_m = tensor_morphism(second.compose(first), SPLIT)
        for a, b, c in zip(second_m.maps, first_m.maps, composite_m.maps):
            assert np.array_equal(np.mod(a @ b, p), c)
    _, _, identity_m = tensor_morphism(identity_morphism(p3), SPLIT)
    for m in identity_m.maps:
        assert np.array_equal(m, np.eye(m.shape[0], dtype=np.int64))



if __name__ == "__main__":
    test_split_of_the_worked_example()
    test_split_parsing_and_rejection()
    test_tensor_table()
    test_tensor_rejects_lambda_modules()
    test_single_piece_lifts()
    test_sweep_of_the_worked_example()
    test_lift_labels()
    test_tilting_lift()
    test_witness_outside_the_lifts()
    test_triple_round_trip()
    test_lift_preserves_summand_counts()
    test_criteria_agree()
    test_failed_conditions_are_reported()
    test_doubled_a2_sweep_is_verified()
    test_one_point_extension_sweep_is_verified()
    test_block_presentation_presents_the_lift()
    test_tau_rigid_criterion_matches_the_lift()
    test_lifts_sit_inside_the_enumeration_over_r()
    test_tilting_routes_agree_on_every_pair()
    test_one_point_extension_tilting_sweep()
    test_presentation_membership_is_componentwise()
    test_lifts_with_one_corner_fixed()
    test_tensoring_morphisms_is_functorial()
    print("triangular tests passed")
