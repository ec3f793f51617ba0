import pytest

from quadlie.hall import free_nilpotent
from quadlie.liealg import nilpotency_class
from quadlie.obstructions import (
    dim_series_obstruction,
    heisenberg_reiter_obstruction,
    theta_ideal,
)
from quadlie.parabolic import (
    build_nilradical,
    classify_nilradical,
    decompose_root,
    match_free_nilpotent,
    natural_marked_decomposition,
    parse_parabolic_spec,
    structured_decompositions,
    verify_lcs_grading,
)


def test_parse_parabolic_spec():
    assert parse_parabolic_spec("B3:g3") == ("B3", (3,))
    assert parse_parabolic_spec("A3:g1,g3") == ("A3", (1, 3))
    assert parse_parabolic_spec("e6:4") == ("e6", (4,))
    with pytest.raises(ValueError):
        parse_parabolic_spec("B3")
    with pytest.raises(ValueError):
        parse_parabolic_spec("B3:gx")


def test_build_g2_alpha1():
    pn = build_nilradical("G2", [1])
    assert pn.algebra.dim == 5
    assert pn.grading_dims == (2, 1, 2)
    assert pn.k == 3
    assert nilpotency_class(pn.algebra) == 3


def test_build_b3_alpha3_free_two_step():
    pn = build_nilradical("B3", [3])
    assert pn.algebra.dim == 6
    assert pn.grading_dims == (3, 3)
    assert pn.k == 2


def test_build_a3_alpha1_abelian():
    pn = build_nilradical("A3", [1])
    assert pn.algebra.dim == 3
    assert pn.k == 1
    assert not pn.algebra.brackets


def test_build_rejects_bad_marks():
    with pytest.raises(ValueError):
        build_nilradical("A3", [])
    with pytest.raises(ValueError):
        build_nilradical("A3", [4])


@pytest.mark.parametrize(
    "case",
    ["G2:g1", "G2:g2", "B3:g2", "B3:g3", "C3:g1", "D4:g2", "A3:g2", "E6:g3", "F4:g1", "B4:g1,g3"],
)
def test_grading_matches_lower_central_series(case):
    type_string, pi0 = parse_parabolic_spec(case)
    pn = build_nilradical(type_string, pi0)
    report = verify_lcs_grading(pn)
    assert report.ok, report


def test_e6_top_layer_dimension_table():
    # g3 and g5 are swapped by the diagram automorphism (1<->6, 3<->5), so
    # their top layers must have equal dimension; enumeration gives 5 for both.
    expected = {2: 1, 4: 2, 3: 5, 5: 5}
    for l, dim in expected.items():
        pn = build_nilradical("E6", [l])
        assert pn.grading_dims[-1] == dim
        assert pn.algebra.center().dim == dim
    # the nonabelian marks, for reference: g1 and g6 give the 16-dim abelian
    # nilradical (half-spin layer), not part of this table
    assert build_nilradical("E6", [1]).algebra.dim == 16


def test_e6_dim_count_refutation_data():
    # nonabelian single-mark cases overshoot the dimension identity
    for l in (2, 3, 4, 5):
        pn = build_nilradical("E6", [l])
        top = pn.grading_dims[-1]
        comm = pn.algebra.commutator_subspace().dim
        assert top + comm > 0
        assert pn.grading_dims[0] > top  # dim n/C^1 > dim C^(k-1)
        assert dim_series_obstruction(pn.algebra) is not None


def test_type_c_commutator_includes_long_roots():
    pn = build_nilradical("C3", [2])
    comm_roots = {pn.delta_n[b] for b in pn.layer_indices(2)}
    eps = {pn.rs.epsilon[r] for r in comm_roots}
    from fractions import Fraction as Q

    plus = {
        tuple(Q(x) for x in v)
        for v in [(1, 1, 0)]
    }
    longs = {tuple(Q(x) for x in v) for v in [(2, 0, 0), (0, 2, 0)]}
    assert eps == plus | longs  # paper-style sum roots plus the two long roots


def test_decompose_root_a3_two_marks():
    pn = build_nilradical("A3", [1, 3])
    gamma = pn.rs.gamma_max
    assert pn.o(gamma) == pn.k == 2
    cert = decompose_root(pn, gamma, 1)
    assert cert.t == 1
    assert cert.delta[0] == 0
    assert cert.verify(pn)


def test_decompose_root_c3_double_coordinate():
    pn = build_nilradical("C3", [1, 2])
    gamma = pn.rs.gamma_max  # 2eps1: coordinate 2 at g2
    cert = decompose_root(pn, gamma, 2)
    assert cert.verify(pn)
    assert cert.t <= gamma[1]


def test_decompose_root_every_top_layer_root_rank_le_4():
    for case in ["A3:g1,g3", "B3:g1,g2", "B4:g2,g4", "C4:g1,g3", "D4:g2,g4"]:
        type_string, pi0 = parse_parabolic_spec(case)
        pn = build_nilradical(type_string, pi0)
        for gamma in pn.top_layer_roots():
            for alpha in pi0:
                cert = decompose_root(pn, gamma, alpha)
                assert cert.verify(pn)
                assert 1 <= cert.t <= gamma[alpha - 1]


def test_decompose_root_preconditions():
    pn = build_nilradical("B3", [3])
    with pytest.raises(ValueError):
        decompose_root(pn, pn.rs.gamma_max, 3)
    pn2 = build_nilradical("A3", [1, 3])
    with pytest.raises(ValueError):
        decompose_root(pn2, pn2.rs.gamma_max, 2)
    with pytest.raises(ValueError):
        decompose_root(pn2, pn2.delta_n[0], 1)


def test_natural_decomposition_refutes_two_marked_roots():
    for case in ["A3:g1,g3", "B3:g1,g2", "C3:g2,g3", "D4:g1,g3"]:
        type_string, pi0 = parse_parabolic_spec(case)
        pn = build_nilradical(type_string, pi0)
        dec = natural_marked_decomposition(pn)
        theta = theta_ideal(pn.algebra, dec)
        assert not theta.is_zero(), case


def test_type_b_three_part_theta_is_center():
    pn = build_nilradical("B4", [2])
    theta_decs, hr_pairs = structured_decompositions(pn)
    shaped = [d for d in theta_decs if "epsilon" in d.description]
    assert shaped and len(shaped[0].parts) == 3
    theta = theta_ideal(pn.algebra, shaped[0])
    assert theta == pn.algebra.center()
    assert not hr_pairs


def test_type_c_and_d_heisenberg_reiter():
    for case in ["C3:g2", "C4:g2", "D4:g2", "D5:g3"]:
        type_string, pi0 = parse_parabolic_spec(case)
        pn = build_nilradical(type_string, pi0)
        _, hr_pairs = structured_decompositions(pn)
        assert hr_pairs, case
        v1, v2 = hr_pairs[0]
        cert = heisenberg_reiter_obstruction(pn.algebra, v1, v2)
        assert cert.verify(pn.algebra), case


def test_g2_alpha2_dim_series():
    pn = build_nilradical("G2", [2])
    assert pn.algebra.center().dim == 1
    cert = dim_series_obstruction(pn.algebra)
    assert cert is not None and cert.j == 1


def test_classify_nilradical_cases():
    assert classify_nilradical("B3", [3]).prediction == "n32"
    assert classify_nilradical("G2", [1]).prediction == "n23"
    assert classify_nilradical("G2", [2]).prediction == "refutes"
    assert classify_nilradical("A5", [3]).prediction == "abelian"
    assert classify_nilradical("B4", [4]).prediction == "refutes"
    assert classify_nilradical("B4", [2]).prediction == "refutes"
    assert classify_nilradical("C3", [1]).prediction == "refutes"
    assert classify_nilradical("C3", [3]).prediction == "abelian"
    assert classify_nilradical("D4", [2]).prediction == "refutes"
    assert classify_nilradical("D4", [4]).prediction == "abelian"
    assert classify_nilradical("E6", [1]).prediction == "abelian"
    assert classify_nilradical("E6", [4]).prediction == "refutes"
    assert classify_nilradical("F4", [1]).prediction == "refutes"
    assert classify_nilradical("A3", [1, 2]).prediction == "refutes"


def test_exceptional_constructions_supported():
    # E7 with the chain-end mark: the 27-dimensional abelian nilradical
    e7 = build_nilradical("E7", [7])
    assert e7.algebra.dim == 27
    assert e7.k == 1 and not e7.algebra.brackets
    # E8 with the chain-end mark: 57-dimensional, two-step, 1-dim top layer
    e8 = build_nilradical("E8", [8])
    assert e8.algebra.dim == 57
    assert e8.grading_dims == (56, 1)
    assert e8.algebra.center().dim == 1


def test_match_free_nilpotent_certificates():
    b3 = build_nilradical("B3", [3])
    cert = match_free_nilpotent(b3, 3, 2)
    assert cert is not None
    g2 = build_nilradical("G2", [1])
    cert2 = match_free_nilpotent(g2, 2, 3)
    assert cert2 is not None
    # graded dims agree with the free models
    assert b3.grading_dims == (3, 3)
    assert g2.grading_dims == (2, 1, 2)
    assert free_nilpotent(3, 2).dim == b3.algebra.dim
    assert free_nilpotent(2, 3).dim == g2.algebra.dim
    # negative control: B4:g4 is free 2-step on 4 generators, not on 3
    assert match_free_nilpotent(build_nilradical("B4", [4]), 3, 2) is None
