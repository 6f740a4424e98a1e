from e8forms.chevalley import (
    LieAlgebra,
    branching_report,
    cartan_restriction_class,
    complement_class,
    killing_form_class,
    sublattice_split,
)
from e8forms.qform import QForm, form_repeat, is_hyperbolic, witt_equal
from e8forms.roots import RootSystem, d8_in_e8


def test_jacobi_small_systems_exhaustive():
    assert LieAlgebra(RootSystem("A1")).jacobi_check_exhaustive() == 0
    assert LieAlgebra(RootSystem("D4")).jacobi_check_exhaustive() == 0


def test_jacobi_e8_sampled(e8):
    assert e8.jacobi_check_sampled(2000, seed=0) == 0


def test_killing_pairs_are_twice_coxeter(e8):
    kappa = e8.killing_matrix()
    for r in e8.roots:
        i = e8.root_index[r]
        j = e8.root_index[tuple(-x for x in r)]
        assert kappa[i][j] == 60


def test_cartan_block_is_scaled_gram(e8):
    kappa = e8.killing_matrix()
    for i in range(8):
        for j in range(8):
            assert kappa[i][j] == 60 * e8.system.gram[i][j]


def test_split_killing_class_is_eight_ones(e8):
    ones = form_repeat(QForm.diagonal((1,)), 8)
    assert witt_equal(killing_form_class(e8), ones)
    assert witt_equal(cartan_restriction_class(e8), ones)


def test_a1_killing_class():
    a1 = LieAlgebra(RootSystem("A1"))
    assert witt_equal(killing_form_class(a1), QForm.diagonal((2,)))


def test_branching_along_d8(e8):
    rep = branching_report(e8, d8_in_e8().columns)
    assert rep == {
        "inside_roots": 112,
        "cartan_dim": 8,
        "outside_roots": 128,
        "cross_terms": 0,
        "hyperbolic_planes": 64,
        "unpaired": 0,
    }


def test_sublattice_split_partitions_root_vectors(e8):
    split = sublattice_split(e8, d8_in_e8().columns)
    assert len(split["inside"]) == 112
    assert len(split["outside"]) == 128
    # cartan slots 0..7 belong to neither side
    assert sorted(split["inside"] + split["outside"]) == list(range(8, 248))


def test_complement_class_is_hyperbolic(e8):
    cc = complement_class(e8, d8_in_e8().columns)
    assert cc.dim == 128
    assert is_hyperbolic(cc)
