#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cfl {

// Exact rational on int64 with reduced representation, den > 0.
// Intermediate products go through __int128 so desk-scale filtration
// arithmetic cannot overflow silently.
struct Rational {
	std::int64_t num = 0;
	std::int64_t den = 1;

	Rational() = default;
	Rational(std::int64_t n) : num(n), den(1) {}
	Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

	void reduce() {
		if (den == 0) throw std::domain_error("rational: zero denominator");
		if (den < 0) { num = -num; den = -den; }
		std::int64_t g = std::gcd(num < 0 ? -num : num, den);
		if (g > 1) { num /= g; den /= g; }
		if (num == 0) den = 1;
	}

	friend Rational operator+(const Rational& a, const Rational& b) {
		__int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
		__int128 d = (__int128)a.den * b.den;
		return make_checked(n, d);
	}
	friend Rational operator-(const Rational& a, const Rational& b) {
		__int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
		__int128 d = (__int128)a.den * b.den;
		return make_checked(n, d);
	}
	friend Rational operator*(const Rational& a, const Rational& b) {
		return make_checked((__int128)a.num * b.num, (__int128)a.den * b.den);
	}
	friend Rational operator/(const Rational& a, const Rational& b) {
		if (b.num == 0) throw std::domain_error("rational: division by zero");
		return make_checked((__int128)a.num * b.den, (__int128)a.den * b.num);
	}
	Rational operator-() const { return Rational(-num, den); }

	friend bool operator==(const Rational& a, const Rational& b) {
		return a.num == b.num && a.den == b.den;
	}
	friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
	friend bool operator<(const Rational& a, const Rational& b) {
		return (__int128)a.num * b.den < (__int128)b.num * a.den;
	}
	friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
	friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
	friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

	// Lowest terms, "p/q"; integers render without the denominator.
	std::string str() const {
		if (den == 1) return std::to_string(num);
		return std::to_string(num) + "/" + std::to_string(den);
	}

private:
	static Rational make_checked(__int128 n, __int128 d) {
		if (d < 0) { n = -n; d = -d; }
		__int128 an = n < 0 ? -n : n;
		__int128 g = gcd128(an, d);
		if (g > 1) { n /= g; d /= g; }
		if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
			throw std::overflow_error("rational: overflow");
		Rational r;
		r.num = (std::int64_t)n;
		r.den = n == 0 ? 1 : (std::int64_t)d;
		return r;
	}
	static __int128 gcd128(__int128 a, __int128 b) {
		while (b) { __int128 t = a % b; a = b; b = t; }
		return a;
	}
};

}  // namespace cfl
