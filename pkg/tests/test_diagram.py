import itertools
import random

import pytest

from squareop.algebra import BooleanAlgebra
from squareop.diagram import (
    INFORMATIVITY_COVERS,
    Diagram,
    DiagramMap,
    RelationKind,
    canonical_square,
    check_infomorphism,
    check_iso,
    classify,
    compose_maps,
    find_isos,
    informativity_leq,
    informativity_order,
    relation_table,
)
from squareop.sampling import random_crisp_diagram

BI, LI, RI = RelationKind.BI, RelationKind.LI, RelationKind.RI
CD, C, SC, UN = RelationKind.CD, RelationKind.C, RelationKind.SC, RelationKind.UN


def oracle_classify(x, y):
    """Independent classification via atom-label sets, same clause order."""
    xs = frozenset(x.atom_labels())
    ys = frozenset(y.atom_labels())
    atoms = frozenset(x.algebra.atoms)
    if xs == ys:
        return BI
    if xs < ys:
        return LI
    if ys < xs:
        return RI
    if not (xs & ys) and xs | ys == atoms:
        return CD
    if not (xs & ys):
        return C
    if xs | ys == atoms:
        return SC
    return UN


class TestClassify:
    def setup_method(self):
        self.b3 = BooleanAlgebra.of(3)

    def test_identity_is_bi(self):
        x = self.b3.from_atoms(["a", "b"])
        assert classify(x, x) is BI

    def test_contradictory_pair(self):
        x = self.b3.from_atoms(["a"])
        y = self.b3.from_atoms(["b", "c"])
        assert x.meet(y) == self.b3.bottom and x.join(y) == self.b3.top
        assert classify(x, y) is CD

    def test_contrary_pair(self):
        x = self.b3.from_atoms(["a"])
        y = self.b3.from_atoms(["c"])
        assert x.meet(y) == self.b3.bottom and x.join(y) != self.b3.top
        assert classify(x, y) is C

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_oracle_on_all_pairs(self, n):
        b = BooleanAlgebra.of(n)
        for x, y in itertools.product(b.elements(), repeat=2):
            assert classify(x, y) is oracle_classify(x, y)

    def test_bounds_classified_by_first_match(self):
        # 0 < 1 satisfies both the LI and CD clauses; LI is listed first
        assert classify(self.b3.bottom, self.b3.top) is LI

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_partition_on_contingent_pairs(self, n):
        b = BooleanAlgebra.of(n)
        contingent = [e for e in b.elements() if e.is_contingent]
        for x, y in itertools.product(contingent, repeat=2):
            if x == y:
                continue
            meet_bottom = x.meet(y).is_bottom
            join_top = x.join(y).is_top
            holds = [
                x.lt(y),
                y.lt(x),
                meet_bottom and join_top,
                meet_bottom and not join_top,
                not meet_bottom and join_top,
                not (x.lt(y) or y.lt(x) or meet_bottom or join_top),
            ]
            assert sum(holds) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_symmetry_properties(self, n):
        b = BooleanAlgebra.of(n)
        for x, y in itertools.product(b.elements(), repeat=2):
            r, s = classify(x, y), classify(y, x)
            if r is LI:
                assert s is RI
            elif r is RI:
                assert s is LI
            else:
                assert r is s


class TestRelationTable:
    def test_singleton_table(self):
        b = BooleanAlgebra.of(2)
        d = Diagram(b, (b.from_atoms(["a"]),))
        assert relation_table(d) == ((BI,),)

    def test_complement_pair_is_cd(self):
        b = BooleanAlgebra.of(3)
        x = b.from_atoms(["a", "b"])
        d = Diagram(b, (x, x.complement()))
        assert relation_table(d) == ((BI, CD), (CD, BI))

    def test_duplicate_fragment_rejected(self):
        b = BooleanAlgebra.of(2)
        x = b.from_atoms(["a"])
        with pytest.raises(ValueError):
            Diagram(b, (x, x))

    def test_contingency_flag(self):
        b = BooleanAlgebra.of(2)
        assert Diagram(b, (b.from_atoms(["a"]),)).all_contingent
        assert not Diagram(b, (b.bottom, b.from_atoms(["a"]))).all_contingent


class TestCanonicalSquare:
    def setup_method(self):
        self.square = canonical_square()
        self.a, self.e, self.i, self.o = self.square.fragment

    def test_six_theses(self):
        assert classify(self.a, self.o) is CD
        assert classify(self.e, self.i) is CD
        assert classify(self.a, self.e) is C
        assert classify(self.i, self.o) is SC
        assert classify(self.a, self.i) is LI
        assert classify(self.e, self.o) is LI

    def test_subalternation_is_strict_containment(self):
        assert self.a.lt(self.i)
        assert self.e.lt(self.o)

    def test_labels(self):
        assert self.square.labels == (
            "Every S is P",
            "No S is P",
            "Some S is P",
            "Some S is not P",
        )

    def test_all_contingent(self):
        assert self.square.all_contingent


class TestInformativity:
    def test_generating_pairs(self):
        assert informativity_leq(UN, LI)
        assert informativity_leq(UN, RI)
        assert informativity_leq(UN, C)
        assert informativity_leq(UN, SC)
        assert informativity_leq(LI, BI)
        assert informativity_leq(RI, BI)
        assert informativity_leq(C, CD)
        assert informativity_leq(SC, CD)

    def test_reflexive(self):
        for r in RelationKind:
            assert informativity_leq(r, r)

    def test_cd_not_below_c(self):
        assert not informativity_leq(CD, C)

    def test_closure_is_exactly_covers_plus_reflexive_plus_derived(self):
        expected = {(r, r) for r in RelationKind}
        expected.update(INFORMATIVITY_COVERS)
        expected.update({(UN, BI), (UN, CD)})
        assert informativity_order() == expected

    def test_partial_order_laws(self):
        kinds = list(RelationKind)
        for r in kinds:
            assert informativity_leq(r, r)
        for r, s in itertools.product(kinds, repeat=2):
            if informativity_leq(r, s) and informativity_leq(s, r):
                assert r is s
        for r, s, t in itertools.product(kinds, repeat=3):
            if informativity_leq(r, s) and informativity_leq(s, t):
                assert informativity_leq(r, t)


class TestIsomorphisms:
    def setup_method(self):
        self.square = canonical_square()

    def test_identity_is_iso(self):
        assert check_iso(DiagramMap.identity(self.square))

    def test_mirror_is_iso(self):
        # swap A with E and I with O
        assert check_iso(DiagramMap(self.square, self.square, (1, 0, 3, 2)))

    def test_swapping_a_and_i_is_not_iso(self):
        assert not check_iso(DiagramMap(self.square, self.square, (2, 1, 0, 3)))

    def test_non_bijective_map_rejected(self):
        with pytest.raises(ValueError):
            check_iso(DiagramMap(self.square, self.square, (0, 0, 2, 3)))

    def test_square_has_exactly_two_isos(self):
        found = find_isos(self.square, self.square)
        assert [m.mapping for m in found] == [(0, 1, 2, 3), (1, 0, 3, 2)]

    def test_brute_force_oracle(self):
        table = relation_table(self.square)
        expected = []
        for perm in itertools.permutations(range(4)):
            if all(
                table[i][j] == table[perm[i]][perm[j]]
                for i in range(4)
                for j in range(4)
            ):
                expected.append(perm)
        assert [m.mapping for m in find_isos(self.square, self.square)] == expected

    def test_size_mismatch_gives_empty(self):
        b = BooleanAlgebra.of(2)
        single = Diagram(b, (b.from_atoms(["a"]),))
        assert find_isos(self.square, single) == []

    def test_two_singletons_have_one_iso(self):
        b = BooleanAlgebra.of(2)
        d1 = Diagram(b, (b.from_atoms(["a"]),))
        d2 = Diagram(b, (b.from_atoms(["b"]),))
        assert [m.mapping for m in find_isos(d1, d2)] == [(0,)]

    def test_large_fragments_refused(self):
        b = BooleanAlgebra.of(4)
        big = Diagram(b, tuple(b.element(i) for i in range(11)))
        with pytest.raises(ValueError):
            find_isos(big, big)


class TestInfomorphisms:
    def setup_method(self):
        self.square = canonical_square()

    def test_identity_passes(self):
        assert check_infomorphism(DiagramMap.identity(self.square))

    def test_every_iso_passes(self):
        for m in find_isos(self.square, self.square):
            assert check_infomorphism(m)

    def test_collapsing_c_onto_un_fails(self):
        b3 = BooleanAlgebra.of(3)
        source = Diagram(b3, (b3.from_atoms(["a"]), b3.from_atoms(["b"])))  # a C pair
        b4 = BooleanAlgebra.of(4)
        target = Diagram(
            b4, (b4.from_atoms(["a", "b"]), b4.from_atoms(["b", "c"]))
        )  # an Un pair
        assert classify(*source.fragment) is C
        assert classify(*target.fragment) is UN
        assert not check_infomorphism(DiagramMap(source, target, (0, 1)))

    def test_un_to_c_passes(self):
        b4 = BooleanAlgebra.of(4)
        source = Diagram(b4, (b4.from_atoms(["a", "b"]), b4.from_atoms(["b", "c"])))
        b3 = BooleanAlgebra.of(3)
        target = Diagram(b3, (b3.from_atoms(["a"]), b3.from_atoms(["b"])))
        assert check_infomorphism(DiagramMap(source, target, (0, 1)))

    def test_found_isos_are_infomorphisms_on_random_diagrams(self):
        rng = random.Random(5)
        for _ in range(25):
            d1 = random_crisp_diagram(rng)
            d2 = random_crisp_diagram(rng)
            for m in find_isos(d1, d2):
                assert check_infomorphism(m)

    def test_composition_of_infomorphisms_is_infomorphism(self):
        rng = random.Random(11)
        found = 0
        while found < 40:
            d1 = random_crisp_diagram(rng, max_fragment=3)
            d2 = random_crisp_diagram(rng, max_fragment=3)
            d3 = random_crisp_diagram(rng, max_fragment=3)
            m1 = DiagramMap(
                d1, d2, tuple(rng.randrange(len(d2.fragment)) for _ in d1.fragment)
            )
            m2 = DiagramMap(
                d2, d3, tuple(rng.randrange(len(d3.fragment)) for _ in d2.fragment)
            )
            if check_infomorphism(m1) and check_infomorphism(m2):
                found += 1
                assert check_infomorphism(compose_maps(m1, m2))

    def test_compose_requires_matching_middle(self):
        b = BooleanAlgebra.of(2)
        other = Diagram(b, (b.from_atoms(["a"]),))
        m = DiagramMap.identity(self.square)
        with pytest.raises(ValueError):
            compose_maps(m, DiagramMap.identity(other))
