#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktdual/flags.hpp"

using namespace ktdual;

namespace {

VirtualCharacter rnd_virtual(const GroupPtr& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> m(-2, 2);
    std::vector<long> mult(static_cast<size_t>(g->num_irreducibles()));
    for (auto& x : mult) x = m(rng);
    return VirtualCharacter::from_multiplicities(g, mult);
}

} // namespace

TEST_CASE("flag bases") {
    // trivial group: every flag gives {1, y, y^2}
    GroupPtr c1 = make_cyclic(1);
    KContextPtr flat = KContext::create(VirtualCharacter::trivial(c1) * Cyclotomic(3));
    auto flags = enumerate_flags(flat);
    REQUIRE(flags.size() == 1);
    auto basis = flag_basis(flags[0]);
    for (int i = 0; i < 3; ++i) CHECK(basis[static_cast<size_t>(i)] == KClass::y_power(flat, i));

    GroupPtr c2 = make_cyclic(2);
    KContextPtr ctx = KContext::create(parse_rep(c2, "triv+sigma"));
    VirtualCharacter triv = VirtualCharacter::trivial(c2);
    VirtualCharacter sigma = parse_rep(c2, "sigma");

    Flag forward = make_flag(ctx, {triv, sigma});
    auto fb = flag_basis(forward);
    CHECK(fb[0] == KClass::one(ctx));
    CHECK(fb[1] == KClass::y_power(ctx, 1)); // 1 - z = y

    Flag backward = make_flag(ctx, {sigma, triv});
    auto bb = flag_basis(backward);
    CHECK(bb[0] == KClass::one(ctx));
    // 1 - sigma z = (1 - sigma) + sigma y
    CHECK(bb[1].coord(0) == triv - sigma);
    CHECK(bb[1].coord(1) == sigma);

    // flags must be permutations of the actual summands
    CHECK_THROWS_AS(make_flag(ctx, {triv, triv}), UserError);
    GroupPtr s3 = resolve_group("s3");
    CHECK_THROWS_AS(enumerate_flags(KContext::create(parse_rep(s3, "triv+std"))), UserError);
}

TEST_CASE("flag basis elements multiply consistently") {
    GroupPtr c6 = make_cyclic(6);
    KContextPtr ctx = KContext::create(parse_rep(c6, "chi1+chi2+chi4"));
    for (const Flag& f : enumerate_flags(ctx)) {
        auto basis = flag_basis(f);
        for (size_t i = 0; i + 1 < basis.size(); ++i) {
            LaurentPolynomial factor = LaurentPolynomial::one(c6);
            factor.set_coeff(1, -f.order[i]);
            CHECK(basis[i] * reduce(ctx, factor) == basis[i + 1]);
        }
    }
}

TEST_CASE("flag dual sums equal the fundamental class") {
    GroupPtr c2 = make_cyclic(2);
    KContextPtr ctx = KContext::create(parse_rep(c2, "triv+sigma"));
    VirtualCharacter triv = VirtualCharacter::trivial(c2);
    VirtualCharacter sigma = parse_rep(c2, "sigma");

    KHomologyClass fwd = flag_dual_sum(make_flag(ctx, {triv, sigma}));
    KHomologyClass bwd = flag_dual_sum(make_flag(ctx, {sigma, triv}));
    CHECK(fwd == bwd);
    CHECK(fwd == poincare_dual(KClass::one(ctx)));
    for (const auto& c : fwd.coords()) CHECK(c == triv);

    // functional check: the flag coordinates of 1 - sigma z sum to eps = 1
    LaurentPolynomial p = LaurentPolynomial::one(c2);
    p.set_coeff(1, -sigma);
    KClass x = reduce(ctx, p);
    CHECK(epsilon(x) == triv);
    auto coords = flag_dual_coords(make_flag(ctx, {sigma, triv}), x);
    VirtualCharacter total = VirtualCharacter::zero(c2);
    for (const auto& c : coords) total += c;
    CHECK(total == triv);
}

TEST_CASE("sum of flag-dual coordinates is the augmentation") {
    std::mt19937_64 rng(20260811);
    GroupPtr c6 = make_cyclic(6);
    KContextPtr ctx = KContext::create(parse_rep(c6, "chi1+chi3+chi4"));
    for (const Flag& f : enumerate_flags(ctx)) {
        for (int iter = 0; iter < 4; ++iter) {
            KClass x(ctx, {rnd_virtual(c6, rng), rnd_virtual(c6, rng), rnd_virtual(c6, rng)});
            auto coords = flag_dual_coords(f, x);
            VirtualCharacter total = VirtualCharacter::zero(c6);
            for (const auto& c : coords) total += c;
            CHECK(total == epsilon(x));
        }
    }
}

TEST_CASE("change-of-basis determinants are units") {
    GroupPtr c5 = make_cyclic(5);
    KContextPtr ctx = KContext::create(parse_rep(c5, "chi1+chi2+chi3"));
    auto flags = enumerate_flags(ctx);
    REQUIRE(flags.size() == 6);
    for (const Flag& f : flags) {
        VirtualCharacter det = flag_change_determinant(flags[0], f);
        CHECK(is_virtual(det));
        CHECK(det * dual(det) == VirtualCharacter::trivial(c5));
    }
}

TEST_CASE("flag independence reports") {
    GroupPtr c5 = make_cyclic(5);
    auto rep5 = verify_flag_independence(KContext::create(parse_rep(c5, "chi1+chi2+chi3")));
    CHECK(rep5.flag_count == 6);
    CHECK(rep5.independent);

    GroupPtr c1 = make_cyclic(1);
    auto rep1 = verify_flag_independence(KContext::create(VirtualCharacter::trivial(c1) * Cyclotomic(4)));
    CHECK(rep1.flag_count == 1);
    CHECK(rep1.independent);

    GroupPtr c2 = make_cyclic(2);
    auto rep3 = verify_flag_independence(KContext::create(parse_rep(c2, "2*triv+sigma")));
    CHECK(rep3.flag_count == 3);
    CHECK(rep3.independent);

    auto j = rep3.to_json();
    CHECK(j.at("flag_count").get<long>() == 3);
    CHECK(j.at("independent").get<bool>());
}

TEST_CASE("full flag scope for the four-dimensional case") {
    GroupPtr c5 = make_cyclic(5);
    auto rep = verify_flag_independence(KContext::create(parse_rep(c5, "chi1+chi2+chi3+chi4")));
    CHECK(rep.flag_count == 24);
    CHECK(rep.independent);
}
