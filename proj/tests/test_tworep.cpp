#include "doctest.h"
#include "helpers.hpp"
#include "liedouble/tworep.hpp"

using namespace liedouble;
using namespace testutil;

namespace {

// The adjoint-style package (identity shift, one connection twice, its
// curvature) — a verified 2-rep for any connection over an honest algebroid.
TwoRep tangent_package(std::shared_ptr<const Algebroid> alg, const Conn& conn) {
    const RingPtr ring = alg->ring;
    return make_tworep(alg, identity_mat(ring, conn.bundle_rank()), conn, conn,
                       curvature(conn));
}

}  // namespace

TEST_CASE("identity-shift package is verified, both characterizations") {
    auto ring = VarRing::make_base(2);
    auto tm = coordinate_algebroid(ring);
    std::vector<std::vector<std::vector<Poly>>> table(
        2, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly(ring))));
    table[0][0][0] = P(ring, "x2");  // non-flat line bundle
    Conn conn(tm, 1, table);

    TwoRep t = tangent_package(tm, conn);
    Report v = validate_tworep(t);
    CHECK(v.pass);
    CHECK(v.check == "check-tworep");
    REQUIRE(v.condition_status.size() == 4);
    CHECK(v.condition_status[0].first == "chain-map");
    CHECK(v.condition_status[3].first == "curvature-closed");

    Report s = structure_operator_check(t);
    CHECK(s.pass);
    CHECK(s.check == "structure-operator");
    CHECK(s.condition_status.size() == 1);
    CHECK(s.condition_status[0].first == "d-squared");
}

TEST_CASE("closure family is exercised at frame size three") {
    auto ring = VarRing::make_base(3);
    auto tm = coordinate_algebroid(ring);
    std::mt19937 rng(43u);
    Conn conn = random_conn(tm, 2, rng);
    TwoRep t = tangent_package(tm, conn);
    Report v = validate_tworep(t);
    CHECK(v.pass);  // includes a non-vacuous curvature-closed family
    CHECK(structure_operator_check(t).pass);
}

TEST_CASE("plain representation: pass iff flat") {
    auto ring = VarRing::make_base(2);
    auto tm = coordinate_algebroid(ring);

    // E0 = 0: partial is r1 x 0, curvature of conn1 is the only obstruction.
    auto zero_e0 = [&](const Conn& c1) {
        PolyMat partial(c1.bundle_rank());  // rows of width 0
        return make_tworep(tm, partial, Conn::zero(tm, 0), c1,
                           zero_hom_two_form(ring, 2, 0, c1.bundle_rank()));
    };

    // Commuting constant action: flat.
    std::vector<std::vector<std::vector<Poly>>> flat_table(
        2, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly(ring))));
    flat_table[0][0][0] = P(ring, "3");
    TwoRep flat = zero_e0(Conn(tm, 1, flat_table));
    CHECK(validate_tworep(flat).pass);
    CHECK(structure_operator_check(flat).pass);

    std::vector<std::vector<std::vector<Poly>>> curved_table(
        2, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, Poly(ring))));
    curved_table[0][0][0] = P(ring, "x2");
    TwoRep curved = zero_e0(Conn(tm, 1, curved_table));
    Report rep = validate_tworep(curved);
    CHECK_FALSE(rep.pass);
    CHECK(rep.condition_passed("chain-map"));
    CHECK(rep.condition_passed("curvature-e0"));
    CHECK_FALSE(rep.condition_passed("curvature-e1"));
    CHECK_FALSE(structure_operator_check(curved).pass);
}

TEST_CASE("mismatched connections break the chain map") {
    auto ring = VarRing::make_base(1);
    auto tm = coordinate_algebroid(ring);
    std::vector<std::vector<std::vector<Poly>>> t0(
        1, std::vector<std::vector<Poly>>(1, std::vector<Poly>(1, P(ring, "1"))));
    Conn conn0(tm, 1, t0);          // grad f = rho(f) + f
    Conn conn1 = Conn::zero(tm, 1); // flat
    TwoRep t = make_tworep(tm, identity_mat(ring, 1), conn0, conn1,
                           zero_hom_two_form(ring, 1, 1, 1));
    Report rep = validate_tworep(t);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.condition_passed("chain-map"));
    REQUIRE(!rep.entries.empty());
    CHECK(rep.entries[0].condition == "chain-map");
    CHECK(rep.entries[0].indices == std::vector<std::size_t>{1, 1, 1});
    CHECK(rep.entries[0].residual == "1");
    CHECK_FALSE(structure_operator_check(t).pass);
}

TEST_CASE("dual package") {
    auto ring = VarRing::make_base(2);
    auto tm = coordinate_algebroid(ring);
    std::mt19937 rng(47u);
    Conn conn = random_conn(tm, 2, rng);
    TwoRep t = tangent_package(tm, conn);
    TwoRep d = dual_tworep(t);

    // dual of (Id, conn, conn, R) = (Id, conn*, conn*, -R transposed)
    CHECK(d.partial == identity_mat(ring, 2));
    CHECK(d.conn0 == dual_connection(conn));
    CHECK(d.conn1 == dual_connection(conn));
    CHECK(d.R.value(0, 1) == mat_neg(mat_transpose(t.R.value(0, 1))));

    CHECK(validate_tworep(d).pass);
    CHECK(dual_tworep(d) == t);

    // Zero data stays zero.
    TwoRep z = make_tworep(tm, zero_mat(ring, 1, 2), Conn::zero(tm, 2), Conn::zero(tm, 1),
                           zero_hom_two_form(ring, 2, 2, 1));
    TwoRep dz = dual_tworep(z);
    CHECK(mat_is_zero(dz.partial));
    CHECK(dz.R.is_zero());
    CHECK(dz.r0 == 1);
    CHECK(dz.r1 == 2);
    CHECK(dual_tworep(dz) == z);
}

TEST_CASE("change of splitting") {
    auto ring = VarRing::make_base(2);
    auto tm = coordinate_algebroid(ring);
    std::mt19937 rng(53u);
    Conn conn = random_conn(tm, 2, rng);
    TwoRep t = tangent_package(tm, conn);

    SplittingChange zero_phi{std::vector<std::vector<std::vector<Poly>>>(
        2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(ring))))};
    CHECK(change_splitting(t, zero_phi) == t);

    for (int rep = 0; rep < 5; ++rep) {
        SplittingChange phi = zero_phi, neg = zero_phi;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) {
                    phi.phi[i][j][l] = random_poly(ring, rng, 2, 1);
                    neg.phi[i][j][l] = -phi.phi[i][j][l];
                }
        TwoRep moved = change_splitting(t, phi);
        CHECK(validate_tworep(moved).pass);
        CHECK(structure_operator_check(moved).pass);
        CHECK(change_splitting(moved, neg) == t);
        if (!mat_is_zero(phi.matrix_at(ring, 0))) CHECK_FALSE(moved == t);
    }
}

TEST_CASE("the two characterizations agree on random packages") {
    auto ring = VarRing::make_base(2);
    auto tm = coordinate_algebroid(ring);
    std::mt19937 rng(59u);
    int pass_count = 0, fail_count = 0;
    for (int rep = 0; rep < 24; ++rep) {
        // Either a verified package, possibly resplit, or a perturbed one.
        Conn conn = random_conn(tm, 2, rng);
        TwoRep t = tangent_package(tm, conn);
        if (rep % 3 == 1) {
            SplittingChange phi{std::vector<std::vector<std::vector<Poly>>>(
                2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(ring))))};
            for (auto& b : phi.phi)
                for (auto& r : b)
                    for (auto& p : r) p = random_poly(ring, rng, 2, 1);
            t = change_splitting(t, phi);
        }
        if (rep % 3 == 2) {
            // single-entry perturbation of some datum
            std::uniform_int_distribution<int> which(0, 2);
            Poly bump = random_poly(ring, rng, 1, 1) + P(ring, "1");
            switch (which(rng)) {
                case 0: t.partial[0][1] += bump; break;
                case 1: {
                    PolyMat m = t.R.value(0, 1);
                    m[1][0] += bump;
                    t.R.set(0, 1, m);
                    break;
                }
                default: {
                    auto g = t.conn0;
                    std::vector<std::vector<std::vector<Poly>>> table(
                        2, std::vector<std::vector<Poly>>(2, std::vector<Poly>(2, Poly(ring))));
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j)
                            for (std::size_t l = 0; l < 2; ++l)
                                table[i][j][l] = g.gamma(i, j, l);
                    table[1][0][1] += bump;
                    t.conn0 = Conn(tm, 2, table);
                    break;
                }
            }
        }
        bool a = validate_tworep(t).pass;
        bool b = structure_operator_check(t).pass;
        CHECK(a == b);
        (a ? pass_count : fail_count) += 1;
    }
    CHECK(pass_count > 0);
    CHECK(fail_count > 0);
}
