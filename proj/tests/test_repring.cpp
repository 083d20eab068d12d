#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktdual/linalg.hpp"
#include "ktdual/repring.hpp"

using namespace ktdual;

namespace {

VirtualCharacter random_genuine(const GroupPtr& g, std::mt19937_64& rng, long max_mult = 2) {
    std::uniform_int_distribution<long> m(0, max_mult);
    std::vector<long> mult(static_cast<size_t>(g->num_irreducibles()));
    bool any = false;
    for (auto& x : mult) {
        x = m(rng);
        any = any || x > 0;
    }
    if (!any) mult[0] = 1;
    return VirtualCharacter::from_multiplicities(g, mult);
}

const SubgroupEmbedding& embedding_of_order(const std::vector<SubgroupEmbedding>& es, long order) {
    for (const auto& e : es)
        if (e.subgroup->order() == order) return e;
    throw std::runtime_error("no embedding of requested order");
}

// Rows = irreducibles, columns = all classes of all cyclic subgroups.
int joint_restriction_rank(const GroupPtr& g) {
    auto embeddings = cyclic_subgroup_embeddings(g);
    linalg::Matrix<Cyclotomic> m;
    for (int i = 0; i < g->num_irreducibles(); ++i) {
        std::vector<Cyclotomic> row;
        VirtualCharacter chi = VirtualCharacter::irreducible(g, i);
        for (const auto& e : embeddings) {
            VirtualCharacter res = restrict_to(chi, e);
            for (const auto& v : res.values()) row.push_back(v);
        }
        m.push_back(std::move(row));
    }
    return linalg::rank(std::move(m));
}

} // namespace

TEST_CASE("tensor") {
    GroupPtr s3 = resolve_group("s3");
    VirtualCharacter std2 = VirtualCharacter::irreducible(s3, s3->find_irreducible("std"));
    VirtualCharacter triv = VirtualCharacter::trivial(s3);
    CHECK(tensor(triv, std2) == std2);

    GroupPtr c2 = make_cyclic(2);
    VirtualCharacter sigma = VirtualCharacter::irreducible(c2, 1);
    CHECK(tensor(sigma, sigma) == VirtualCharacter::trivial(c2));

    VirtualCharacter sq = tensor(std2, std2);
    CHECK(sq.values() == std::vector<Cyclotomic>{Cyclotomic(4), Cyclotomic(1), Cyclotomic(0)});
    auto mult = integral_multiplicities(sq);
    REQUIRE(mult.has_value());
    CHECK(*mult == std::vector<long>{1, 1, 1}); // triv + sign + std
    CHECK(sq.str() == "1 + sign + std");

    GroupPtr c3 = make_cyclic(3);
    CHECK_THROWS_AS(tensor(sigma, VirtualCharacter::trivial(c3)), UserError);
}

TEST_CASE("dual") {
    GroupPtr s3 = resolve_group("s3");
    for (int i = 0; i < 3; ++i) {
        VirtualCharacter chi = VirtualCharacter::irreducible(s3, i);
        CHECK(dual(chi) == chi); // real-valued table
    }
    GroupPtr c3 = make_cyclic(3);
    VirtualCharacter omega = VirtualCharacter::irreducible(c3, 1);
    CHECK(dual(omega) == VirtualCharacter::irreducible(c3, 2));
    CHECK(dual(dual(omega)) == omega);
}

TEST_CASE("adams operations") {
    GroupPtr c6 = make_cyclic(6);
    std::mt19937_64 rng(11);
    VirtualCharacter a = random_genuine(c6, rng);
    CHECK(adams(a, 1) == a);

    // line characters: psi^k(alpha) = alpha^k
    for (int i = 0; i < 6; ++i) {
        VirtualCharacter alpha = VirtualCharacter::irreducible(c6, i);
        VirtualCharacter pow = VirtualCharacter::trivial(c6);
        for (int k = 0; k <= 4; ++k) {
            CHECK(adams(alpha, k) == pow);
            pow = pow * alpha;
        }
    }

    GroupPtr c2 = make_cyclic(2);
    VirtualCharacter rho = VirtualCharacter::from_multiplicities(c2, {1, 1});
    VirtualCharacter twice = VirtualCharacter::trivial(c2) * Cyclotomic(2);
    CHECK(adams(rho, 2) == twice);

    // psi^0 is the virtual dimension times the trivial character
    GroupPtr s3 = resolve_group("s3");
    VirtualCharacter v = parse_rep(s3, "std - sign");
    CHECK(adams(v, 0) == VirtualCharacter::trivial(s3) * Cyclotomic(1));
}

TEST_CASE("exterior powers") {
    GroupPtr c2 = make_cyclic(2);
    VirtualCharacter rho = VirtualCharacter::from_multiplicities(c2, {1, 1});
    CHECK(exterior(rho, 0) == VirtualCharacter::trivial(c2));
    CHECK(exterior(rho, 2) == VirtualCharacter::irreducible(c2, 1));

    GroupPtr c3 = make_cyclic(3);
    VirtualCharacter v = VirtualCharacter::from_multiplicities(c3, {0, 1, 1});
    CHECK(exterior(v, 2) == VirtualCharacter::trivial(c3));

    // lambda^k of a sum of lines = elementary symmetric polynomial in the lines
    GroupPtr c4 = make_cyclic(4);
    VirtualCharacter w = VirtualCharacter::from_multiplicities(c4, {1, 1, 0, 1});
    VirtualCharacter a0 = VirtualCharacter::irreducible(c4, 0), a1 = VirtualCharacter::irreducible(c4, 1),
                     a3 = VirtualCharacter::irreducible(c4, 3);
    CHECK(exterior(w, 2) == a0 * a1 + a0 * a3 + a1 * a3);
    CHECK(exterior(w, 3) == a0 * a1 * a3);
    CHECK(exterior(w, 4).is_zero()); // above the dimension
}

TEST_CASE("determinant character") {
    GroupPtr c1 = make_cyclic(1);
    VirtualCharacter cn = VirtualCharacter::trivial(c1) * Cyclotomic(4);
    CHECK(det_rep(cn) == VirtualCharacter::trivial(c1));

    GroupPtr c2 = make_cyclic(2);
    CHECK(det_rep(VirtualCharacter::from_multiplicities(c2, {1, 1})) ==
          VirtualCharacter::irreducible(c2, 1));

    GroupPtr s3 = resolve_group("s3");
    VirtualCharacter std2 = parse_rep(s3, "std");
    VirtualCharacter det = det_rep(std2);
    CHECK(det == parse_rep(s3, "sign"));
    CHECK(det.values() == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)});

    CHECK_THROWS_AS(det_rep(parse_rep(s3, "std - sign")), UserError); // not genuine
}

TEST_CASE("restriction") {
    GroupPtr s3 = resolve_group("s3");
    auto embeddings = cyclic_subgroup_embeddings(s3);
    const auto& to_c1 = embedding_of_order(embeddings, 1);
    const auto& to_c2 = embedding_of_order(embeddings, 2);
    const auto& to_c3 = embedding_of_order(embeddings, 3);

    VirtualCharacter std2 = parse_rep(s3, "std");
    VirtualCharacter r1 = restrict_to(std2, to_c1);
    CHECK(r1 == VirtualCharacter::trivial(to_c1.subgroup) * Cyclotomic(2));

    GroupPtr c2 = make_cyclic(2);
    auto c2_embeddings = cyclic_subgroup_embeddings(c2);
    VirtualCharacter sigma = VirtualCharacter::irreducible(c2, 1);
    CHECK(restrict_to(sigma, embedding_of_order(c2_embeddings, 1)) ==
          VirtualCharacter::trivial(embedding_of_order(c2_embeddings, 1).subgroup));

    VirtualCharacter r3 = restrict_to(std2, to_c3);
    auto mult = integral_multiplicities(r3);
    REQUIRE(mult.has_value());
    CHECK(*mult == std::vector<long>{0, 1, 1}); // omega + omega^2

    CHECK_THROWS_AS(restrict_to(sigma, to_c2), UserError); // wrong ambient group
}

TEST_CASE("lambda-ring properties on random characters") {
    std::mt19937_64 rng(20260811);
    std::vector<GroupPtr> groups{make_cyclic(6), resolve_group("s3"), make_dihedral(4), make_quaternion8()};
    for (const auto& g : groups) {
        for (int iter = 0; iter < 10; ++iter) {
            VirtualCharacter a = random_genuine(g, rng, 1);
            VirtualCharacter b = random_genuine(g, rng, 1);

            // Cartan formula for k = 0..3
            for (long k = 0; k <= 3; ++k) {
                VirtualCharacter lhs = exterior(a + b, k);
                VirtualCharacter rhs = VirtualCharacter::zero(g);
                for (long i = 0; i <= k; ++i) rhs += exterior(a, i) * exterior(b, k - i);
                CHECK(lhs == rhs);
            }

            // psi^k is a ring homomorphism and psi^k psi^l = psi^kl
            for (long k = 1; k <= 4; ++k) {
                CHECK(adams(a * b, k) == adams(a, k) * adams(b, k));
                CHECK(adams(a + b, k) == adams(a, k) + adams(b, k));
                for (long l = 1; l <= 4; ++l) CHECK(adams(adams(a, l), k) == adams(a, k * l));
            }

            // exterior powers of genuine characters are genuine
            long n = genuine_dim(a);
            for (long k = 0; k <= n; ++k) CHECK(is_genuine(exterior(a, k)));
            if (n >= 1) {
                CHECK(exterior(a, n + 1).is_zero());
                VirtualCharacter det = det_rep(a);
                CHECK(to_long(*det.dim().as_rational()) == 1);
                CHECK((det * dual(det)) == VirtualCharacter::trivial(g));
            }
        }
    }
}

TEST_CASE("restriction commutes with the operations") {
    std::mt19937_64 rng(5);
    for (const char* name : {"s3", "d4", "q8", "c6"}) {
        GroupPtr g = resolve_group(name);
        for (const auto& e : cyclic_subgroup_embeddings(g)) {
            VirtualCharacter a = random_genuine(g, rng, 1);
            VirtualCharacter b = random_genuine(g, rng, 1);
            CHECK(restrict_to(a * b, e) == restrict_to(a, e) * restrict_to(b, e));
            CHECK(restrict_to(dual(a), e) == dual(restrict_to(a, e)));
            for (long k = 1; k <= 3; ++k) {
                CHECK(restrict_to(adams(a, k), e) == adams(restrict_to(a, e), k));
                CHECK(restrict_to(exterior(a, k), e) == exterior(restrict_to(a, e), k));
            }
        }
    }
}

TEST_CASE("joint restriction to cyclic subgroups is injective") {
    for (const char* name : {"s3", "d4", "q8", "s4", "c4", "c2xc2"}) {
        GroupPtr g = resolve_group(name);
        CHECK(joint_restriction_rank(g) == g->num_irreducibles());
    }
}

TEST_CASE("abelian line decomposition") {
    GroupPtr c3 = make_cyclic(3);
    VirtualCharacter v(c3, {Cyclotomic(3), Cyclotomic(0), Cyclotomic(0)});
    auto lines = abelian_line_decomposition(v);
    REQUIRE(lines.size() == 3);
    VirtualCharacter sum = VirtualCharacter::zero(c3);
    for (const auto& l : lines) sum += l;
    CHECK(sum == v);

    GroupPtr c1 = make_cyclic(1);
    auto triv_lines = abelian_line_decomposition(VirtualCharacter::trivial(c1) * Cyclotomic(3));
    CHECK(triv_lines.size() == 3);

    CHECK_THROWS_AS(abelian_line_decomposition(parse_rep(resolve_group("s3"), "std")), UserError);
}

TEST_CASE("representation spec parsing") {
    GroupPtr c2 = make_cyclic(2);
    CHECK(parse_rep(c2, "triv+sigma") == VirtualCharacter::from_multiplicities(c2, {1, 1}));
    CHECK(parse_rep(c2, " 2*triv + 3*sigma ") == VirtualCharacter::from_multiplicities(c2, {2, 3}));
    CHECK(parse_rep(c2, "3") == VirtualCharacter::from_multiplicities(c2, {3, 0}));
    CHECK(parse_rep(c2, "chi1") == VirtualCharacter::irreducible(c2, 1));

    GroupPtr c5 = make_cyclic(5);
    CHECK(parse_rep(c5, "chi1+2*chi3") ==
          VirtualCharacter::from_multiplicities(c5, {0, 1, 0, 2, 0}));

    GroupPtr s3 = resolve_group("s3");
    CHECK(parse_rep(s3, "triv+std") == VirtualCharacter::from_multiplicities(s3, {1, 0, 1}));
    CHECK(parse_rep(s3, "std-sign") == VirtualCharacter::from_multiplicities(s3, {0, -1, 1}));
    CHECK_THROWS_AS(parse_rep(s3, "nosuch"), UserError);
    CHECK_THROWS_AS(parse_rep(s3, ""), UserError);
}
