import pytest

import semiring_lab as sl
from semiring_lab.errors import (
    IncompatiblePartition,
    NotACongruence,
    NotAdditivelyIdempotent,
    NotASubsemimodule,
)

import oracles


class TestNamedSemirings:
    def test_chain_is_boolean_for_n1(self, B):
        assert sl.chain_semiring(1) == B

    def test_b3_tables(self, B3):
        assert B3.mul[1][1] == 1 and B3.mul[1][2] == 2

    def test_b4_zeroic_with_top(self, B4):
        assert sl.element_classes(B4).infinite == 3
        assert sl.classify_semiring(B4).zeroic

    def test_b31_arithmetic(self, B31):
        assert B31.add[1][1] == 2
        assert B31.mul[1][1] == 1
        assert B31.mul[2][2] == 2

    def test_chain_rejects_zero(self):
        with pytest.raises(ValueError):
            sl.chain_semiring(0)

    def test_boolean_lattice_k1_is_boolean(self, B):
        assert sl.are_isomorphic(sl.boolean_lattice_semiring(1), B) is not None

    def test_chain3_lattice_is_not_boolean_algebra(self, L3):
        # the middle element has no complement: no x with 1|x=top and 1&x=0
        assert not any(
            L3.add[1][x] == L3.one and L3.mul[1][x] == 0 for x in range(3)
        )

    def test_lattice_vs_chain_semiring_differ(self, B3, L3):
        assert sl.are_isomorphic(B3, L3) is None
        assert L3.mul[1][2] == 1 and B3.mul[1][2] == 2

    def test_bool2_gelfand(self, Bool2):
        assert sl.classify_semiring(Bool2).gelfand


class TestExt:
    def test_ext_f2_shape(self, ExtF2):
        assert ExtF2.order == 4
        top = 3
        assert all(ExtF2.add[top][x] == top for x in range(4))
        assert ExtF2.mul[0][top] == 0 and ExtF2.mul[top][0] == 0
        assert ExtF2.mul[1][top] == top  # ring zero times top is top

    def test_ext_zero_ring_is_chain3(self, B3):
        E = sl.ext_semiring(sl.cyclic_ring(1))
        assert E.order == 3
        assert sl.are_isomorphic(E, B3) is not None

    def test_ext_z3_flags(self, ExtZ3):
        f = sl.classify_semiring(ExtZ3)
        assert f.anti_bounded and f.zerosumfree

    def test_ext_requires_ring(self, B3):
        with pytest.raises(ValueError):
            sl.ext_semiring(B3)

    def test_ext_anti_bounded_for_small_rings(self):
        rings = [sl.cyclic_ring(1), sl.cyclic_ring(2), sl.cyclic_ring(3),
                 sl.cyclic_ring(4),
                 sl.direct_product(sl.cyclic_ring(2), sl.cyclic_ring(2))]
        # the two non-cyclic unital rings of order 4
        gf4 = sl.validate_semiring(
            ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)),
            ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2)),
            1, name="GF4")
        dual = sl.validate_semiring(
            ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)),
            ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 2), (0, 3, 2, 1)),
            1, name="Z2[t]/(t^2)")
        rings.extend([gf4, dual])
        for R in rings:
            assert sl.is_ring(R)
            flags = sl.classify_semiring(sl.ext_semiring(R))
            assert flags.anti_bounded and flags.zerosumfree

    def test_ext_module(self, F2):
        M = sl.regular_semimodule(F2)
        EM = sl.ext_semimodule(F2, M)
        assert EM.order == 4
        assert EM.semiring == sl.ext_semiring(F2)


class TestMatrixAndProducts:
    def test_m2b_order(self, B):
        assert sl.matrix_semiring(B, 2).order == 16

    def test_m1_identity(self, B3):
        assert sl.are_isomorphic(sl.matrix_semiring(B3, 1), B3) is not None

    def test_m2b_identity_matrix(self, B):
        M2 = sl.matrix_semiring(B, 2)
        assert M2.one == 0b1001  # [[1,0],[0,1]] read row-major

    def test_size_cap(self, B3):
        with pytest.raises(sl.SizeCapExceeded):
            sl.matrix_semiring(B3, 2)  # 81 > default cap 16

    def test_product_v_class(self, F2, B):
        P = sl.direct_product(F2, B)
        assert sorted(sl.element_classes(P).vclass) == [0, 2]

    def test_product_with_trivial(self, B3):
        P = sl.direct_product(B3, sl.trivial_semiring())
        assert sl.are_isomorphic(P, B3) is not None

    def test_bxb_is_boolean_algebra(self, B, Bool2):
        assert sl.are_isomorphic(sl.direct_product(B, B), Bool2) is not None

    def test_direct_sum_needs_same_base(self, B, B3):
        with pytest.raises(ValueError):
            sl.direct_sum(sl.regular_semimodule(B), sl.regular_semimodule(B3))


class TestQuotient:
    def test_quotient_by_diagonal(self, B3):
        reg = sl.regular_semimodule(B3)
        Q, proj = sl.quotient(reg, sl.Congruence.diagonal(3))
        assert Q.order == 3 and proj == (0, 1, 2)
        assert sl.are_isomorphic(Q, reg) is not None

    def test_quotient_by_universal(self, B3):
        reg = sl.regular_semimodule(B3)
        Q, _ = sl.quotient(reg, sl.Congruence.universal(3))
        assert Q.order == 1

    def test_quotient_collapse(self, B3):
        reg = sl.regular_semimodule(B3)
        theta = sl.Congruence(size=3, blocks=((0,), (1, 2)))
        Q, proj = sl.quotient(reg, theta)
        assert Q.order == 2 and proj == (0, 1, 1)
        assert Q.add == ((0, 1), (1, 1))

    def test_incompatible_partition_rejected(self, B3):
        reg = sl.regular_semimodule(B3)
        theta = sl.Congruence(size=3, blocks=((0, 1), (2,)))
        with pytest.raises(IncompatiblePartition):
            sl.quotient(reg, theta)

    def test_semiring_quotient(self, ExtF2):
        theta = sl.diamond_congruence(ExtF2)
        Q, _ = sl.quotient(ExtF2, theta)
        assert sl.are_isomorphic(Q, sl.chain_semiring(2)) is not None


class TestNamedCongruences:
    def test_bourne_zero_is_diagonal(self, B3, B31, ExtF2):
        for S in (B3, B31, ExtF2):
            reg = sl.regular_semimodule(S)
            assert sl.bourne_congruence(reg, (0,)).is_diagonal()

    def test_bourne_b3_by_02_is_universal(self, B3):
        reg = sl.regular_semimodule(B3)
        assert sl.bourne_congruence(reg, (0, 2)).is_universal()

    def test_bourne_ext_by_v_is_diagonal(self, ExtF2):
        reg = sl.regular_semimodule(ExtF2)
        v = tuple(sorted(sl.element_classes(ExtF2).vclass))
        assert v == (0,)
        assert sl.bourne_congruence(reg, v).is_diagonal()

    def test_bourne_rejects_non_subsemimodule(self, B3):
        reg = sl.regular_semimodule(B3)
        with pytest.raises(NotASubsemimodule):
            sl.bourne_congruence(reg, (0, 1))

    def test_diamond_ext_f2(self, ExtF2, B3):
        theta = sl.diamond_congruence(ExtF2)
        assert theta.blocks == ((0,), (1, 2), (3,))
        Q, _ = sl.quotient(ExtF2, theta)
        assert sl.are_isomorphic(Q, B3) is not None

    def test_diamond_boolean_is_diagonal(self, B):
        assert sl.diamond_congruence(B).is_diagonal()

    def test_diamond_trivial(self):
        assert sl.diamond_congruence(sl.trivial_semiring()).blocks == ((0,),)

    def test_diamond_additively_idempotent_mutual_absorption(self, B3):
        # on an additively idempotent algebra the relation degenerates to
        # mutual absorption: x ~ y iff x+t=y and y+t'=x are both solvable
        theta = sl.diamond_congruence(B3)
        assert theta.is_diagonal()

    def test_sigma_b3(self, B3):
        reg = sl.regular_semimodule(B3)
        assert sl.sigma_congruence(reg).blocks == ((0,), (1, 2))

    def test_sigma_submodule_diagonal(self, B3):
        reg = sl.regular_semimodule(B3)
        sub, _ = sl.submodule(reg, (0, 2))
        assert sl.sigma_congruence(sub).is_diagonal()

    def test_sigma_trivial(self, B3):
        triv = sl.validate_semimodule(B3, ((0,),), ((0,), (0,), (0,)))
        assert sl.sigma_congruence(triv).is_diagonal()

    def test_rho_b31_is_diagonal(self, B31):
        # 1+1 = 2 and 2+x = 2 always, so the merged class is a singleton
        theta = sl.rho_congruence(B31)
        assert theta.is_diagonal()
        Q, _ = sl.quotient(B31, theta)
        assert sl.are_isomorphic(Q, B31) is not None

    def test_rho_b4_merges_one_plus_anything(self, B4):
        # 1+1 is the element 1 in a chain, so the class {(1+1)+x} is {1,2,3}
        theta = sl.rho_congruence(B4)
        assert theta.blocks == ((0,), (1, 2, 3))

    def test_rho_boolean_diagonal(self, B):
        assert sl.rho_congruence(B).is_diagonal()


class TestCharacterSemimodule:
    def test_b3_selfdual(self, B3):
        reg = sl.regular_semimodule(B3)
        ch = sl.character_semimodule(reg)
        assert ch.order == 3
        assert sl.are_isomorphic(ch, reg) is not None

    def test_boolean_selfdual(self, B):
        reg = sl.regular_semimodule(B)
        ch = sl.character_semimodule(reg)
        assert ch.order == 2
        assert sl.are_isomorphic(ch, reg) is not None

    def test_trivial(self, B):
        triv = sl.validate_semimodule(B, ((0,),), ((0,), (0,)))
        assert sl.character_semimodule(triv).order == 1

    def test_requires_additive_idempotence(self, B31):
        reg = sl.regular_semimodule(B31)
        with pytest.raises(NotAdditivelyIdempotent):
            sl.character_semimodule(reg)


class TestMorita:
    def test_reduce_regular_is_square(self, B):
        M2 = sl.matrix_semiring(B, 2)
        A = sl.regular_semimodule(M2)
        FA, image = sl.morita_reduce(A, B, 2)
        assert FA.order == 4
        square = sl.direct_sum(sl.regular_semimodule(B), sl.regular_semimodule(B))
        assert sl.are_isomorphic(FA, square) is not None

    def test_roundtrip_regular(self, B):
        M2 = sl.matrix_semiring(B, 2)
        A = sl.regular_semimodule(M2)
        FA, _ = sl.morita_reduce(A, B, 2)
        assert sl.are_isomorphic(sl.morita_expand(FA, 2), A) is not None

    def test_roundtrip_all_small_boolean_semimodules(self, B):
        for M in sl.enumerate_semimodules(B, 4):
            back, _ = sl.morita_reduce(sl.morita_expand(M, 2), B, 2)
            assert sl.are_isomorphic(back, M) is not None

    def test_dimension_one_is_identity(self, B3):
        reg = sl.regular_semimodule(B3)
        expanded = sl.morita_expand(reg, 1)
        reduced, _ = sl.morita_reduce(expanded, B3, 1)
        assert sl.are_isomorphic(reduced, reg) is not None


class TestWitness412_413:
    def test_chain_witness_shape(self):
        M, sub, pairs = sl.b4_extension_counterexample()
        assert M.order == 5 and len(sub) == 4
        assert dict(pairs) == {0: 0, 2: 1, 3: 2, 4: 3}

    def test_nine_element_witness_addition(self):
        M9, sub, _ = sl.b31_retract_counterexample()
        assert M9.order == 9 and sub == (0, 1, 2)
        # a_i + a_j = 1 for distinct i, j
        assert M9.add[3][4] == M9.add[3][5] == M9.add[4][5] == 1
        # a_i + a_i = b_i and 2*a_i = b_i
        for i in range(3):
            assert M9.add[3 + i][3 + i] == 6 + i
            assert M9.action[2][3 + i] == 6 + i
        # embedded copy agrees with B(3,1)
        B31 = sl.b31()
        for a in range(3):
            for b in range(3):
                assert M9.add[a][b] == B31.add[a][b]


class TestDecomposition:
    def test_product_of_ring_and_boolean(self, F2, B):
        P = sl.direct_product(F2, B)
        got = sl.zerosumfree_decomposition(P)
        assert got is not None
        R, T, iso = got
        assert sl.are_isomorphic(R, F2) is not None
        assert sl.are_isomorphic(T, B) is not None
        assert len(iso) == P.order

    def test_zerosumfree_input_gives_trivial_ring(self, B3):
        R, T, _ = sl.zerosumfree_decomposition(B3)
        assert R.order == 1
        assert sl.are_isomorphic(T, B3) is not None

    def test_ring_input_gives_trivial_summand(self, Z4):
        R, T, _ = sl.zerosumfree_decomposition(Z4)
        assert R.order == 4 and T.order == 1

    def test_constructed_objects_validate(self, B, B3, B31, ExtF2, Bool2, L3):
        # constructors route through the validators; re-validate explicitly
        for S in (B, B3, B31, ExtF2, Bool2, L3,
                  sl.matrix_semiring(B, 2),
                  sl.direct_product(B3, B)):
            sl.validate_semiring(S.add, S.mul, S.one)
