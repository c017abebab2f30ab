from pathlib import Path

import numpy as np

from src.data import load_algebra, parse_module_spec
from src.errors import AlgebraMismatchError, ModuleSpecError
from src.modules import (
    Morphism,
    Representation,
    cokernel,
    decompose,
    direct_sum,
    find_isomorphism,
    gen_membership,
    hom_space,
    image,
    injective_module,
    is_indecomposable,
    is_isomorphic,
    is_projective,
    kernel,
    label_of,
    min_proj_presentation,
    path_matrix,
    projective_cover,
    projective_map,
    projective_module,
    radical_top,
    regular_module,
    registry_for,
    restrict,
    simple_module,
    summand_count,
    zero_module,
)

ALGEBRAS = Path(__file__).resolve().parent / "algebras"
LAMBDA = load_algebra(ALGEBRAS / "lambda_a2.yaml")
GAMMA = load_algebra(ALGEBRAS / "gamma_a3_zero.yaml")
R = load_algebra(ALGEBRAS / "triangular_r.yaml")


def test_distinguished_modules():
    assert projective_module(LAMBDA, ["1"]).dims == (1, 1)
    assert projective_module(LAMBDA, ["2"]).dims == (0, 1)
    assert injective_module(LAMBDA, ["2"]).dims == (1, 1)
    assert simple_module(GAMMA, "4").dims == (0, 1, 0)
    assert regular_module(R).total_dim == R.dim
    assert projective_module(R, ["3"]).dims == (1, 1, 1, 1, 0)
    for module in (projective_module(R, ["3"]), injective_module(R, ["5"]), simple_module(R, "1")):
        assert not module.relation_violations()


def test_hom_dimension_from_projective_is_the_vertex_dimension():
    for target in (regular_module(GAMMA), injective_module(GAMMA, ["5"]), simple_module(GAMMA, "3")):
        for v in GAMMA.vertices:
            assert len(hom_space(projective_module(GAMMA, [v]), target)) == target.dim_at(v)
    assert len(hom_space(projective_module(LAMBDA, ["1"]), projective_module(LAMBDA, ["2"]))) == 0
    assert len(hom_space(simple_module(LAMBDA, "1"), simple_module(LAMBDA, "1"))) == 1


def test_hom_space_elements_intertwine():
    p1 = projective_module(R, ["3"])
    target = injective_module(R, ["2"])
    homs = hom_space(p1, target)
    assert homs
    assert all(h.intertwines() for h in homs)


def test_algebra_mismatch():
    try:
        hom_space(simple_module(LAMBDA, "1"), simple_module(GAMMA, "3"))
    except AlgebraMismatchError:
        pass
    else:
        raise AssertionError("modules over different algebras accepted")


def test_kernel_cokernel_image():
    p1 = projective_module(LAMBDA, ["1"])
    p2 = projective_module(LAMBDA, ["2"])
    inclusion = hom_space(p2, p1)[0]
    assert inclusion.is_injective()
    quotient, projection = cokernel(inclusion)
    assert is_isomorphic(quotient, simple_module(LAMBDA, "1"))
    assert projection.is_surjective()
    sub, _ = kernel(inclusion)
    assert sub.is_zero()
    im, _ = image(inclusion)
    assert is_isomorphic(im, p2)


def test_radical_and_top():
    parts = radical_top(projective_module(GAMMA, ["3"]))
    assert parts.top.dims == (1, 0, 0)
    assert parts.radical.dims == (0, 1, 0)


def test_projective_cover_and_presentation():
    s1 = simple_module(LAMBDA, "1")
    p0, cover = projective_cover(s1)
    assert p0.generators == ("1",)
    assert cover.is_surjective()
    presentation = min_proj_presentation(s1)
    assert presentation.p1.generators == ("2",)
    assert presentation.p0.generators == ("1",)
    quotient, _ = cokernel(presentation.sigma)
    assert is_isomorphic(quotient, s1)
    assert min_proj_presentation(projective_module(LAMBDA, ["1"])).p1.generators == ()


def test_projective_map_reads_back_its_path_matrix():
    delta = LAMBDA.path_element("1", ["delta"])
    entries = np.zeros((1, 1, LAMBDA.dim), dtype=np.int64)
    entries[0, 0] = delta
    f = projective_map(LAMBDA, ["2"], ["1"], entries)
    assert f.intertwines()
    assert f.is_injective()
    assert np.array_equal(path_matrix(f), entries)


def test_decomposition_of_regular_modules():
    pieces = decompose(regular_module(GAMMA))
    assert [piece.dims for piece, _ in pieces] == [(1, 1, 0), (0, 1, 1), (0, 0, 1)]
    assert all(mult == 1 for _, mult in pieces)
    assert summand_count(regular_module(R)) == 5
    doubled = direct_sum([simple_module(LAMBDA, "1"), simple_module(LAMBDA, "1"), projective_module(LAMBDA, ["2"])])
    assert [(piece.dims, mult) for piece, mult in decompose(doubled)] == [((1, 0), 2), ((0, 1), 1)]
    assert summand_count(doubled) == 2


def test_indecomposable_with_a_hidden_splitting():
    # P1 + S1 over Lambda written in a non-diagonal basis
    module = Representation(LAMBDA, (2, 1), {"delta": np.array([[1, 1]])})
    assert not is_indecomposable(module)
    assert is_isomorphic(module, direct_sum([projective_module(LAMBDA, ["1"]), simple_module(LAMBDA, "1")]))
    assert is_indecomposable(projective_module(R, ["3"]))


def test_find_isomorphism_returns_a_witness():
    literal = Representation(LAMBDA, (1, 1), {"delta": np.array([[3]])})
    iso = find_isomorphism(literal, projective_module(LAMBDA, ["1"]))
    assert iso is not None and iso.is_isomorphism() and iso.intertwines()
    assert find_isomorphism(simple_module(LAMBDA, "1"), projective_module(LAMBDA, ["2"])) is None


def test_projectivity_and_generation():
    assert is_projective(direct_sum([projective_module(LAMBDA, ["1"]), projective_module(LAMBDA, ["2"])]))
    assert not is_projective(simple_module(LAMBDA, "1"))
    assert gen_membership(simple_module(LAMBDA, "1"), projective_module(LAMBDA, ["1"]))
    assert not gen_membership(projective_module(LAMBDA, ["2"]), projective_module(LAMBDA, ["1"]))
    assert gen_membership(zero_module(LAMBDA), simple_module(LAMBDA, "1"))


def test_restriction_to_corners():
    lam = R.corner(["1", "2"])
    gamma = R.corner(["3", "4", "5"])
    p3 = projective_module(R, ["3"])
    assert restrict(p3, lam).dims == (1, 1)
    assert restrict(p3, gamma).dims == (1, 1, 0)
    assert label_of(restrict(p3, lam)) == "P1"
    assert label_of(restrict(p3, gamma)) == "P3"


def test_label_registry():
    assert registry_for(LAMBDA).known_labels() == ["P1", "P2", "S1"]
    assert registry_for(GAMMA).known_labels() == ["P3", "P4", "P5", "S3", "S4"]
    mixed = direct_sum([simple_module(LAMBDA, "1"), projective_module(LAMBDA, ["2"]), projective_module(LAMBDA, ["1"])])
    assert label_of(mixed) == "P1S1P2"
    assert label_of(zero_module(LAMBDA)) == "0"
    assert registry_for(LAMBDA) is registry_for(LAMBDA)


def test_injectives_keep_earlier_names():
    # over R the injective at 4 is the thin module on 3 -> 4
    assert registry_for(R).label(injective_module(R, ["4"])) == "I4"
    assert registry_for(GAMMA).label(injective_module(GAMMA, ["4"])) == "P3"


def test_unnamed_indecomposables_get_dimension_labels():
    module = Representation(
        R, (1, 0, 1, 1, 0), {"epsilon": np.array([[1]]), "alpha": np.array([[1]])}
    )
    assert is_indecomposable(module)
    assert label_of(module) == "M(1,0,1,1,0)"


def test_module_specs():
    assert parse_module_spec(LAMBDA, "P1+S1").dims == (2, 1)
    assert parse_module_spec(LAMBDA, "0").is_zero()
    literal = parse_module_spec(LAMBDA, "{dims: [1, 1], maps: {delta: [[1]]}}")
    assert label_of(literal) == "P1"
    for bad in ("P9", "P1+", "{dims: [1], maps: {}}", "{dims: [1, 1], colour: 1}"):
        try:
            parse_module_spec(LAMBDA, bad)
        except ModuleSpecError:
            pass
        else:
            raise AssertionError(f"{bad!r} accepted")


def test_module_literal_must_satisfy_relations():
    try:
        parse_module_spec(GAMMA, "{dims: [1, 1, 1], maps: {alpha: [[1]], beta: [[1]]}}")
    except ModuleSpecError as exc:
        assert "relations" in str(exc)
    else:
        raise AssertionError("alpha.beta != 0 accepted")


def test_wrong_shaped_matrices_are_rejected():
    # delta runs 1 -> 2, so with dims (1, 2) its matrix is 2 x 1
    try:
        parse_module_spec(LAMBDA, "{dims: [1, 2], maps: {delta: [[1, 1]]}}")
    except ModuleSpecError as exc:
        assert "delta" in str(exc)
        assert "(2, 1)" in str(exc)
    else:
        raise AssertionError("transposed delta accepted")
    column = parse_module_spec(LAMBDA, "{dims: [1, 2], maps: {delta: [[1], [1]]}}")
    assert column.maps["delta"].shape == (2, 1)
    p1 = projective_module(LAMBDA, ["1"])
    try:
        Morphism(p1, p1, (np.array([[1, 0]]), np.array([[1]])))
    except ValueError as exc:
        assert "vertex 1" in str(exc)
    else:
        raise AssertionError("wrong-shaped morphism block accepted")


if __name__ == "__main__":
    test_distinguished_modules()
    test_hom_dimension_from_projective_is_the_vertex_dimension()
    test_hom_space_elements_intertwine()
    test_algebra_mismatch()
    test_kernel_cokernel_image()
    test_radical_and_top()
    test_projective_cover_and_presentation()
    test_projective_map_reads_back_its_path_matrix()
    test_decomposition_of_regular_modules()
    test_indecomposable_with_a_hidden_splitting()
    test_find_isomorphism_returns_a_witness()
    test_projectivity_and_generation()
    test_restriction_to_corners()
    test_label_registry()
    test_injectives_keep_earlier_names()
    test_unnamed_indecomposables_get_dimension_labels()
    test_module_specs()
    test_module_literal_must_satisfy_relations()
    test_wrong_shaped_matrices_are_rejected()
    print("module tests passed")
