#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfl {

// Monomial U^u V^v. Laurent exponents are allowed at the type level;
// non-negativity is a complex-level invariant (minus flavor).
struct Mono {
	int u = 0;
	int v = 0;

	friend bool operator==(const Mono& a, const Mono& b) { return a.u == b.u && a.v == b.v; }
	friend bool operator<(const Mono& a, const Mono& b) {
		return a.u != b.u ? a.u < b.u : a.v < b.v;
	}
	Mono times(const Mono& o) const { return Mono{u + o.u, v + o.v}; }
};

// Element of F2[U,V] (or its Laurent extension): the set of monomials with
// coefficient 1. Stored as a sorted, duplicate-free vector; addition is
// symmetric difference.
class Poly {
public:
	Poly() = default;
	explicit Poly(Mono m) : terms_{m} {}
	static Poly zero() { return Poly(); }
	static Poly one() { return Poly(Mono{0, 0}); }
	static Poly monomial(int u, int v) { return Poly(Mono{u, v}); }
	// Normalizes an arbitrary term list (sorts, cancels pairs mod 2).
	static Poly from_terms(std::vector<Mono> ts);

	bool is_zero() const { return terms_.empty(); }
	bool is_one() const { return terms_.size() == 1 && terms_[0] == Mono{0, 0}; }
	bool is_monomial() const { return terms_.size() == 1; }
	const std::vector<Mono>& terms() const { return terms_; }
	bool contains(Mono m) const;

	friend Poly operator+(const Poly& a, const Poly& b);
	friend Poly operator*(const Poly& a, const Poly& b);
	Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
	friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
	friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

	// Formal partial derivatives, reduced mod 2: U^a V^b -> a*U^(a-1) V^b.
	Poly d_du() const;
	Poly d_dv() const;

	// Variable substitutions used by the complex reductions.
	enum class Sub { keep, to_zero, to_one };
	Poly substitute(Sub on_u, Sub on_v) const;

	// Textual form: terms joined by " + ", monomials as U^a*V^b with ^1 and
	// * omissible, 1 for the unit, 0 for zero. parse() accepts any spacing.
	std::string str() const;
	static Poly parse(const std::string& text);  // throws std::invalid_argument

	int max_u_exponent() const;  // 0 for the zero polynomial

private:
	std::vector<Mono> terms_;
};

std::string mono_str(Mono m);

}  // namespace cfl
