#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktdual/cyclo.hpp"

using namespace ktdual;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
    static const long conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    std::uniform_int_distribution<int> pick(0, 7);
    long n = conductors[pick(rng)];
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::vector<Rational> cs(static_cast<size_t>(euler_phi(n)));
    for (auto& c : cs) c = Rational(coeff(rng));
    return Cyclotomic::from_polynomial(n, std::move(cs));
}

double dist(const Cyclotomic& a, const Cyclotomic& b) { return std::abs(a.evalf() - b.evalf()); }

} // namespace

TEST_CASE("cyclotomic polynomials") {
    auto check = [](long n, std::vector<long> expect) {
        const auto& p = cyclotomic_polynomial(n);
        REQUIRE(p.size() == expect.size());
        for (size_t i = 0; i < p.size(); ++i) CHECK(p[i] == expect[i]);
    };
    check(1, {-1, 1});
    check(2, {1, 1});
    check(3, {1, 1, 1});
    check(4, {1, 0, 1});
    check(6, {1, -1, 1});
    check(12, {1, 0, -1, 0, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("arithmetic examples") {
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));

    Cyclotomic w = Cyclotomic::zeta(3);
    CHECK(w + w * w == Cyclotomic(-1));

    // 1 + zeta_3 = zeta_6; numeric cross-check as well.
    Cyclotomic lhs = Cyclotomic(1) + w;
    Cyclotomic z6 = Cyclotomic::zeta(6);
    CHECK(lhs == z6);
    CHECK(dist(lhs, z6) < 1e-9);
}

TEST_CASE("conductor is normalized downward") {
    CHECK(Cyclotomic::zeta(6, 2).conductor() == 3);  // zeta_6^2 = zeta_3
    CHECK(Cyclotomic::zeta(12, 3).conductor() == 4); // zeta_12^3 = zeta_4
    CHECK(Cyclotomic::zeta(2).conductor() == 1);     // zeta_2 = -1
    CHECK(Cyclotomic::zeta(2) == Cyclotomic(-1));
    CHECK(Cyclotomic::zeta(6).conductor() == 3);     // Q(zeta_6) = Q(zeta_3)
    // zeta_12^4 = zeta_3 lives in the subfield even though its power-basis
    // expression at conductor 12 is not constant.
    CHECK(Cyclotomic::zeta(12, 4) == Cyclotomic::zeta(3));
}

TEST_CASE("inversion examples") {
    for (long n : {2, 3, 4, 5, 8, 12}) {
        Cyclotomic z = Cyclotomic::zeta(n);
        CHECK(z.inverse() == Cyclotomic::zeta(n, n - 1));
        CHECK(z * z.inverse() == Cyclotomic(1));
    }
    CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));

    Cyclotomic a = Cyclotomic(1) + Cyclotomic::zeta(4);
    Cyclotomic inv = a.inverse();
    CHECK(a * inv == Cyclotomic(1));
    // frozen value: (1 - zeta_4)/2
    Cyclotomic expect = (Cyclotomic(1) - Cyclotomic::zeta(4)) * Cyclotomic(Rational(1, 2));
    CHECK(inv == expect);

    CHECK_THROWS_AS(Cyclotomic(0).inverse(), UserError);
}

TEST_CASE("rationality detection") {
    Cyclotomic w = Cyclotomic::zeta(3);
    Cyclotomic s = w + w * w + Cyclotomic(1);
    REQUIRE(s.as_rational().has_value());
    CHECK(*s.as_rational() == 0);

    CHECK(!Cyclotomic::zeta(5).as_rational().has_value());

    Cyclotomic c = Cyclotomic::zeta(6, 3);
    REQUIRE(c.as_rational().has_value());
    CHECK(*c.as_rational() == -1);
}

TEST_CASE("field axioms on randomized inputs") {
    std::mt19937_64 rng(20260811);
    for (int iter = 0; iter < 200; ++iter) {
        Cyclotomic a = random_cyclotomic(rng);
        Cyclotomic b = random_cyclotomic(rng);
        Cyclotomic c = random_cyclotomic(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK(dist(a * b + c, a * b + c) == 0.0);
        // numeric agreement of an exact identity
        CHECK(dist((a + b) * c, a * c + b * c) < 1e-9);
    }
}

TEST_CASE("embedding round-trip is the identity") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        Cyclotomic a = random_cyclotomic(rng);
        long m = a.conductor() * 4; // proper multiple
        // embed upward by adding zero at the larger conductor, then compare
        Cyclotomic up = a + (Cyclotomic::zeta(m) - Cyclotomic::zeta(m));
        CHECK(up == a);
        CHECK(up.conductor() == a.conductor());
    }
}

TEST_CASE("conjugation") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        Cyclotomic a = random_cyclotomic(rng);
        CHECK(a.conj().conj() == a);
        Cyclotomic norm = a * a.conj();
        auto nf = norm.evalf();
        CHECK(std::abs(nf.imag()) < 1e-9);
        CHECK(std::abs(nf.real() - std::norm(a.evalf())) < 1e-9);
    }
    CHECK(Cyclotomic::zeta(5).conj() == Cyclotomic::zeta(5, 4));
}

TEST_CASE("serialization round-trip") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        Cyclotomic a = random_cyclotomic(rng);
        nlohmann::json j = a;
        CHECK(j.at("conductor").get<long>() == a.conductor());
        Cyclotomic back = j.get<Cyclotomic>();
        CHECK(back == a);
    }
    // shorthand forms
    CHECK(nlohmann::json(7).get<Cyclotomic>() == Cyclotomic(7));
    CHECK(nlohmann::json("3/4").get<Cyclotomic>() == Cyclotomic(Rational(3, 4)));
}

TEST_CASE("rendering") {
    CHECK(Cyclotomic(0).str() == "0");
    CHECK(Cyclotomic(Rational(-3, 2)).str() == "-3/2");
    CHECK(Cyclotomic::zeta(5).str() == "z5");
    CHECK((Cyclotomic(1) - Cyclotomic::zeta(8)).str() == "1 - z8");
}
