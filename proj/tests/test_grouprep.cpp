#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kirwan/grouprep.hpp"

#include "fixtures.hpp"

using namespace kirwan;
using kirwan::testing::curve33_weight_system;

namespace {

QRationalFunction rf(std::map<int, int> factors) {
    return QRationalFunction(QPolynomial::one(), std::move(factors));
}

} // namespace

TEST_CASE("classifying series of the built-in cast") {
    const GroupCatalog cat = GroupCatalog::builtin();
    CHECK(classifying_series(cat.get("SL2")) == rf({{4, 1}}));
    CHECK(classifying_series(cat.get("G")) == rf({{4, 1}, {8, 1}}));
    CHECK(classifying_series(cat.get("T_iota")) == rf({{2, 1}, {4, 1}}));
    CHECK(classifying_series(cat.get("T")) == rf({{2, 2}}));
    CHECK(classifying_series(cat.get("CxSL2")) == rf({{2, 1}, {4, 1}}));
    CHECK(classifying_series(cat.get("C*")) == rf({{2, 1}}));
    CHECK(classifying_series(cat.get("Cstar_inv")) == rf({{4, 1}}));
    CHECK(classifying_series(cat.get("N_RC")) == rf({{4, 1}}));
    CHECK(classifying_series(cat.get("N_RD")) == rf({{4, 2}}));
    {
        // Joint-even part of Q[c1,c2]: generated by c1^2, c1c2, c2^2 with
        // one relation.
        QPolynomial num = QPolynomial::one();
        num.set(4, Rat(1));
        CHECK(classifying_series(cat.get("N_RA")) ==
              QRationalFunction(num, {{4, 2}}));
    }
    CHECK(classifying_series(cat.get("HS_Z2")) == rf({{4, 1}}));
    CHECK(classifying_series(cat.get("That1_Z2")) == rf({{2, 1}}));
    CHECK(classifying_series(cat.get("T_swap")) == rf({{2, 1}, {4, 1}}));
}

TEST_CASE("classifying series of the trivial group is 1") {
    GroupDesc trivial;
    trivial.name = "1";
    trivial.classifying = GradedAction::trivial({});
    CHECK(classifying_series(trivial) == QRationalFunction::one());
}

TEST_CASE("catalog dimension facts") {
    const GroupCatalog cat = GroupCatalog::builtin();
    CHECK(cat.get("R_C").dim == 3);
    CHECK(cat.get("R_D").dim == 1);
    CHECK(cat.get("R_A").dim == 1);
    CHECK(cat.get("N_RC").dim == 3);
    CHECK(cat.get("N_RD").dim == 2);
    CHECK(cat.get("N_RA").dim == 2);
}

TEST_CASE("stabilizer_of on the (3,3) index set") {
    const GroupCatalog cat = GroupCatalog::builtin();
    const GroupDesc& G = cat.get("G");

    SUBCASE("antidiagonal points keep the double cover of T") {
        for (const Weight& beta :
             {Weight(3, -3), Weight(2, -2), Weight(1, -1)}) {
            const GroupDesc stab = stabilizer_of(G, beta, cat);
            CHECK(stab.name == "T_iota");
            CHECK(stab.dim == 2);
            CHECK(stab.pi0_order == 2);
            CHECK(stab.central_torus_rank == 1);
            CHECK(classifying_series(stab) == rf({{2, 1}, {4, 1}}));
        }
    }
    SUBCASE("points with an orthogonal root get C* x SL2") {
        for (const Weight& beta : {Weight(3, 0), Weight(1, 0)}) {
            const GroupDesc stab = stabilizer_of(G, beta, cat);
            CHECK(stab.name == "CxSL2");
            CHECK(stab.dim == 4);
            CHECK(stab.positive_roots.size() == 1);
        }
    }
    SUBCASE("generic points get the torus") {
        for (const Weight& beta :
             {Weight(2, -1), Weight(3, -1), Weight(Rat(9, 5), Rat(-3, 5)),
              Weight(Rat(9, 13), Rat(-6, 13)), Weight(Rat(6, 5), Rat(-3, 5)),
              Weight(Rat(2, 5), Rat(-1, 5))}) {
            const GroupDesc stab = stabilizer_of(G, beta, cat);
            CHECK(stab.name == "T");
            CHECK(stab.dim == 2);
            CHECK(stab.pi0_order == 1);
        }
    }
    SUBCASE("beta = 0 is rejected") {
        CHECK_THROWS_AS(stabilizer_of(G, Weight(0, 0), cat),
                        std::domain_error);
    }
}

TEST_CASE("stabilizer dimensions cross-check the codimension count") {
    // #{positive roots with <gamma,beta> > 0} == (dim G - dim Stab beta)/2
    // for dominant beta; both routes feed d(beta).
    const GroupCatalog cat = GroupCatalog::builtin();
    const GroupDesc& G = cat.get("G");
    const WeightSystem ws = curve33_weight_system();
    const std::vector<Weight> betas = {
        Weight(3, -3), Weight(2, -2), Weight(1, -1),
        Weight(2, -1), Weight(Rat(6, 5), Rat(-3, 5)),
        Weight(Rat(2, 5), Rat(-1, 5)), Weight(3, -1),
        Weight(Rat(9, 5), Rat(-3, 5)), Weight(Rat(9, 13), Rat(-6, 13)),
        Weight(3, 0), Weight(1, 0)};
    for (const Weight& beta : betas) {
        CAPTURE(beta.str());
        int above = 0;
        for (const auto& root : G.positive_roots)
            if (ws.gram.inner(root, beta).sign() > 0) ++above;
        const GroupDesc stab = stabilizer_of(G, beta, cat);
        CHECK(above == (G.dim - stab.dim) / 2);
    }
}

TEST_CASE("stabilizers inside the normaliser of R_D") {
    const GroupCatalog cat = GroupCatalog::builtin();
    const GroupDesc& N = cat.get("N_RD");
    // Antidiagonal directions are fixed by the iota-type component only.
    const GroupDesc stab = stabilizer_of(N, Weight(1, -1), cat);
    CHECK(stab.name == "T_iota");
    // The diagonal direction is fixed by the plain swap.
    const GroupDesc diag_stab = stabilizer_of(N, Weight(1, 1), cat);
    CHECK(diag_stab.name == "T_swap");
    CHECK(classifying_series(diag_stab) == rf({{2, 1}, {4, 1}}));
}

TEST_CASE("cartan symmetry closure sizes") {
    const GroupCatalog cat = GroupCatalog::builtin();
    CHECK(cat.get("G").cartan_symmetry().size() == 8);     // dihedral
    CHECK(cat.get("G0").cartan_symmetry().size() == 4);
    CHECK(cat.get("N_RD").cartan_symmetry().size() == 4);
    CHECK(cat.get("T").cartan_symmetry().size() == 1);
    CHECK(cat.get("SL2").cartan_symmetry().size() == 2);
}
