from itertools import combinations, combinations_with_replacement
from pathlib import Path

from src.data import load_algebra
from src.modules import (
    direct_sum,
    hom_space,
    identity_morphism,
    is_isomorphic,
    label_of,
    min_proj_presentation,
    proj_dim_le_one,
    projective_module,
    regular_module,
    simple_module,
    summand_count,
    zero_module,
)
from src.tilting import (
    d_sigma_contains,
    is_support_tau_tilting,
    is_tau_rigid,
    is_tilting,
    max_annihilating_idempotent,
    nakayama_of_projective_map,
    tau,
    transpose,
)

ALGEBRAS = Path(__file__).resolve().parent / "algebras"
LAMBDA = load_algebra(ALGEBRAS / "lambda_a2.yaml")
GAMMA = load_algebra(ALGEBRAS / "gamma_a3_zero.yaml")

P1 = projective_module(LAMBDA, ["1"])
P2 = projective_module(LAMBDA, ["2"])
S1 = simple_module(LAMBDA, "1")
LAMBDA_INDECOMPOSABLES = [P1, P2, S1]
GAMMA_INDECOMPOSABLES = [
    projective_module(GAMMA, ["3"]),
    projective_module(GAMMA, ["4"]),
    projective_module(GAMMA, ["5"]),
    simple_module(GAMMA, "3"),
    simple_module(GAMMA, "4"),
]


def test_nakayama_sends_projectives_to_injectives():
    assert nakayama_of_projective_map(identity_morphism(P1)).target.dims == (1, 0)
    image = nakayama_of_projective_map(identity_morphism(projective_module(GAMMA, ["3"])))
    assert image.target.dims == (1, 0, 0)
    assert image.is_isomorphism()


def test_translates():
    assert label_of(tau(S1)) == "P2"
    assert label_of(tau(simple_module(GAMMA, "3"))) == "S4"
    assert label_of(tau(simple_module(GAMMA, "4"))) == "P5"
    for v in GAMMA.vertices:
        assert tau(projective_module(GAMMA, [v])).is_zero()
    assert tau(zero_module(LAMBDA)).is_zero()
    assert is_isomorphic(tau(direct_sum([S1, P1])), tau(S1))


def test_tau_is_additive():
    for indecomposables in (LAMBDA_INDECOMPOSABLES, GAMMA_INDECOMPOSABLES):
        for a, b in combinations_with_replacement(indecomposables, 2):
            summed = tau(direct_sum([a, b]))
            assert is_isomorphic(summed, direct_sum([tau(a), tau(b)])), (a.dims, b.dims)


def test_tau_rigidity():
    assert is_tau_rigid(direct_sum([P1, S1]))
    assert is_tau_rigid(regular_module(LAMBDA))
    assert not is_tau_rigid(direct_sum([P2, S1]))
    assert is_tau_rigid(zero_module(GAMMA))


def test_annihilating_idempotent():
    assert max_annihilating_idempotent(S1) == ("2",)
    assert max_annihilating_idempotent(P1) == ()
    assert max_annihilating_idempotent(zero_module(GAMMA)) == ("3", "4", "5")


def test_support_tau_tilting_pairs():
    assert is_support_tau_tilting(S1).label == "(S1,P2)"
    assert is_support_tau_tilting(direct_sum([S1, P1])).label == "(P1S1,0)"
    assert is_support_tau_tilting(regular_module(LAMBDA)).label == "(P1P2,0)"
    assert is_support_tau_tilting(zero_module(LAMBDA)).label == "(0,P1P2)"
    # tau-rigid but too small
    assert is_support_tau_tilting(P1) is None
    assert is_support_tau_tilting(direct_sum([P2, S1])) is None
    # repeated summands count once
    assert is_support_tau_tilting(direct_sum([S1, S1])).label == "(S1,P2)"


def test_rigid_pairs_never_exceed_the_rank():
    n = GAMMA.n_vertices
    for size in (1, 2):
        for combo in combinations(GAMMA_INDECOMPOSABLES, size):
            module = direct_sum(list(combo))
            if is_tau_rigid(module):
                assert summand_count(module) + len(max_annihilating_idempotent(module)) <= n


def test_tilting_modules():
    assert is_tilting(direct_sum([P1, S1]))
    assert is_tilting(regular_module(LAMBDA))
    assert not is_tilting(S1)
    assert not is_tilting(direct_sum([P2, S1]))
    assert proj_dim_le_one(S1)


def test_presentation_condition_matches_hom_into_translate():
    for indecomposables in (LAMBDA_INDECOMPOSABLES, GAMMA_INDECOMPOSABLES):
        for x in indecomposables:
            sigma = min_proj_presentation(x).sigma
            translate = tau(x)
            for a in indecomposables:
                assert d_sigma_contains(sigma, a) == (not hom_space(a, translate)), (x.dims, a.dims)


def test_presentation_of_a_projective_contains_everything():
    sigma = min_proj_presentation(P1).sigma
    for module in (P1, P2, S1, zero_module(LAMBDA)):
        assert d_sigma_contains(sigma, module)
    s1_sigma = min_proj_presentation(S1).sigma
    assert d_sigma_contains(s1_sigma, S1)
    assert not d_sigma_contains(s1_sigma, P2)


def test_transpose():
    op = LAMBDA.opposite()
    tr = transpose(S1)
    assert tr.algebra is op
    assert tr.dims == (0, 1)
    assert transpose(P1).is_zero()
    assert is_isomorphic(transpose(tr), S1)


if __name__ == "__main__":
    test_nakayama_sends_projectives_to_injectives()
    test_translates()
    test_tau_is_additive()
    test_tau_rigidity()
    test_annihilating_idempotent()
    test_support_tau_tilting_pairs()
    test_rigid_pairs_never_exceed_the_rank()
    test_tilting_modules()
    test_presentation_condition_matches_hom_into_translate()
    test_presentation_of_a_projective_contains_everything()
    test_transpose()
    print("tau tests passed")
