#include <random>
#include <stdexcept>

#include "doctest.h"
#include "poly.hpp"

using namespace cfl;

namespace {

Poly U(int a = 1) { return Poly::monomial(a, 0); }
Poly V(int b = 1) { return Poly::monomial(0, b); }

Poly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
	std::vector<Mono> ts;
	int n = (int)(rng() % (max_terms + 1));
	for (int i = 0; i < n; ++i)
		ts.push_back(Mono{(int)(rng() % (max_exp + 1)), (int)(rng() % (max_exp + 1))});
	return Poly::from_terms(std::move(ts));
}

}  // namespace

TEST_CASE("addition is characteristic-2 symmetric difference") {
	CHECK((U() + V()) + V() == U());
	Poly p = Poly::parse("U^2*V + U + 1");
	CHECK(p + p == Poly::zero());
	CHECK(Poly::parse("U^2*V") + Poly::parse("U*V^2") == Poly::parse("U^2*V + U*V^2"));
}

TEST_CASE("multiplication distributes and cancels") {
	CHECK(U() * V() == Poly::monomial(1, 1));
	Poly s = U() + V();
	CHECK(s * s == Poly::parse("U^2 + V^2"));  // Frobenius over F2
	CHECK(Poly::zero() * Poly::parse("U + V^3") == Poly::zero());
	CHECK(Poly::one() * s == s);
}

TEST_CASE("formal derivatives keep odd exponents only") {
	CHECK(U(2).d_du() == Poly::zero());
	CHECK(Poly::parse("U^3*V").d_du() == Poly::parse("U^2*V"));
	CHECK(V(2).d_du() == Poly::zero());
	CHECK(Poly::parse("U^3*V").d_dv() == Poly::parse("U^3"));
	CHECK(Poly::parse("V^2").d_dv() == Poly::zero());
}

TEST_CASE("substitution") {
	Poly p = Poly::parse("U*V + V^2");
	CHECK(p.substitute(Poly::Sub::to_zero, Poly::Sub::keep) == Poly::parse("V^2"));
	CHECK(p.substitute(Poly::Sub::keep, Poly::Sub::to_one) == Poly::parse("U + 1"));
	// U=0 then V=0 kills every nonconstant monomial
	Poly q = Poly::parse("U^2*V^2 + U + V + 1");
	CHECK(q.substitute(Poly::Sub::to_zero, Poly::Sub::keep)
	          .substitute(Poly::Sub::keep, Poly::Sub::to_zero) == Poly::one());
}

TEST_CASE("algebra laws on random polynomials") {
	std::mt19937 rng(12345);
	for (int it = 0; it < 300; ++it) {
		Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
		CHECK(p + q == q + p);
		CHECK((p + q) + r == p + (q + r));
		CHECK(p + p == Poly::zero());
		CHECK(p * q == q * p);
		CHECK((p * q) * r == p * (q * r));
		CHECK(p * (q + r) == p * q + p * r);
		// Leibniz for both derivations
		CHECK((p * q).d_du() == p.d_du() * q + p * q.d_du());
		CHECK((p * q).d_dv() == p.d_dv() * q + p * q.d_dv());
	}
}

TEST_CASE("text round-trip is bit-exact on canonical form") {
	std::mt19937 rng(777);
	CHECK(Poly::zero().str() == "0");
	CHECK(Poly::one().str() == "1");
	CHECK(Poly::parse("V^2*U").str() == "U*V^2");
	CHECK(Poly::parse("UV").str() == "U*V");  // * omissible on input
	CHECK(Poly::parse("U^1*V^1") == Poly::monomial(1, 1));
	for (int it = 0; it < 200; ++it) {
		Poly p = random_poly(rng, 6, 5);
		CHECK(Poly::parse(p.str()) == p);
		CHECK(Poly::parse(p.str()).str() == p.str());
	}
	// Laurent exponents for infinity-flavored contexts
	Poly l = Poly::monomial(-2, 1);
	CHECK(Poly::parse(l.str()) == l);
	CHECK(l.str() == "U^-2*V");
}

TEST_CASE("parse rejects malformed input") {
	CHECK_THROWS_AS(Poly::parse(""), std::invalid_argument);
	CHECK_THROWS_AS(Poly::parse("U +"), std::invalid_argument);
	CHECK_THROWS_AS(Poly::parse("x"), std::invalid_argument);
	CHECK_THROWS_AS(Poly::parse("U^"), std::invalid_argument);
	CHECK_THROWS_AS(Poly::parse("0 + U"), std::invalid_argument);
}
