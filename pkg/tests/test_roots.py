from e8forms.roots import (
    CorootMap,
    RootSystem,
    a1_in_d8,
    a1_in_e8,
    c4_in_d8,
    c4_in_e8,
    cartan_matrix,
    centralizer_roots,
    compose,
    coroot_gram_matrix,
    d8_in_e8,
    pgl2_quad_in_e8,
    recognize_subsystem,
    rost_multiplier,
    verify_embedding,
)


def test_root_counts():
    for name, count in (("A1", 2), ("C4", 32), ("D4", 24), ("D8", 112), ("E8", 240)):
        assert len(RootSystem(name).roots) == count


def test_cartan_matrix_c4():
    assert cartan_matrix("C4") == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -1, 2, -1),
        (0, 0, -2, 2),
    )


def test_c4_root_lengths():
    c4 = RootSystem("C4")
    lengths = sorted(c4.lensq(r) for r in c4.roots)
    assert lengths.count(2) == 24 and lengths.count(4) == 8


def test_e8_highest_root():
    e8 = RootSystem("E8")
    top = e8.highest_root()
    assert top == (2, 3, 4, 6, 5, 4, 3, 2)
    assert e8.height(top) == 29


def test_coxeter_numbers():
    expect = {"A1": (2, 2), "D4": (6, 6), "D8": (14, 14), "E8": (30, 30), "C4": (8, 5)}
    for name, (h, hv) in expect.items():
        sys = RootSystem(name)
        assert sys.coxeter_number() == h
        assert sys.dual_coxeter_number() == hv


def test_coroot_gram_c4():
    assert coroot_gram_matrix("C4") == (
        (4, -2, 0, 0),
        (-2, 4, -2, 0),
        (0, -2, 4, -2),
        (0, 0, -2, 2),
    )


def test_embeddings_have_no_mismatches():
    maps = [d8_in_e8(), a1_in_d8(), c4_in_d8(), a1_in_e8(), c4_in_e8()]
    maps.extend(pgl2_quad_in_e8())
    for m in maps:
        assert verify_embedding([m]) == []


def test_compositions_through_d8():
    outer = d8_in_e8()
    assert compose(outer, a1_in_d8()).columns == a1_in_e8().columns
    assert compose(outer, c4_in_d8()).columns == c4_in_e8().columns


def test_rost_multipliers():
    assert rost_multiplier(a1_in_e8()) == 4
    assert rost_multiplier(c4_in_e8()) == 1
    assert rost_multiplier(d8_in_e8()) == 1
    for m in pgl2_quad_in_e8():
        assert rost_multiplier(m) == 4


def test_centralizer_of_c4_images_is_d4():
    e8 = RootSystem("E8")
    cent = centralizer_roots(e8, c4_in_e8().columns)
    sub = recognize_subsystem(e8, cent)
    assert sub.type_name == "D4"
    assert len(cent) == 24
    top = tuple(sub.highest_root_ambient())
    assert top == (2, 2, 4, 5, 4, 3, 2, 1)
    assert top != tuple(e8.highest_root())
