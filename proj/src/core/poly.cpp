#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cfl {

Poly Poly::from_terms(std::vector<Mono> ts) {
	std::sort(ts.begin(), ts.end());
	Poly p;
	for (const Mono& m : ts) {
		if (!p.terms_.empty() && p.terms_.back() == m)
			p.terms_.pop_back();  // char 2: pairs cancel
		else
			p.terms_.push_back(m);
	}
	return p;
}

bool Poly::contains(Mono m) const {
	return std::binary_search(terms_.begin(), terms_.end(), m);
}

Poly operator+(const Poly& a, const Poly& b) {
	Poly r;
	r.terms_.reserve(a.terms_.size() + b.terms_.size());
	std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
	                              b.terms_.end(), std::back_inserter(r.terms_));
	return r;
}

Poly operator*(const Poly& a, const Poly& b) {
	std::vector<Mono> ts;
	ts.reserve(a.terms_.size() * b.terms_.size());
	for (const Mono& x : a.terms_)
		for (const Mono& y : b.terms_) ts.push_back(x.times(y));
	return Poly::from_terms(std::move(ts));
}

Poly Poly::d_du() const {
	std::vector<Mono> ts;
	for (const Mono& m : terms_)
		if (m.u % 2 != 0) ts.push_back(Mono{m.u - 1, m.v});
	return from_terms(std::move(ts));
}

Poly Poly::d_dv() const {
	std::vector<Mono> ts;
	for (const Mono& m : terms_)
		if (m.v % 2 != 0) ts.push_back(Mono{m.u, m.v - 1});
	return from_terms(std::move(ts));
}

Poly Poly::substitute(Sub on_u, Sub on_v) const {
	std::vector<Mono> ts;
	for (Mono m : terms_) {
		if (on_u == Sub::to_zero && m.u != 0) continue;
		if (on_v == Sub::to_zero && m.v != 0) continue;
		if (on_u == Sub::to_one) m.u = 0;
		if (on_v == Sub::to_one) m.v = 0;
		ts.push_back(m);
	}
	return from_terms(std::move(ts));
}

std::string mono_str(Mono m) {
	if (m.u == 0 && m.v == 0) return "1";
	std::string s;
	if (m.u != 0) {
		s += "U";
		if (m.u != 1) s += "^" + std::to_string(m.u);
	}
	if (m.v != 0) {
		if (!s.empty()) s += "*";
		s += "V";
		if (m.v != 1) s += "^" + std::to_string(m.v);
	}
	return s;
}

std::string Poly::str() const {
	if (terms_.empty()) return "0";
	std::string s;
	for (size_t i = 0; i < terms_.size(); ++i) {
		if (i) s += " + ";
		s += mono_str(terms_[i]);
	}
	return s;
}

namespace {

struct Cursor {
	const std::string& s;
	size_t i = 0;
	void skip_ws() {
		while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
	}
	bool eof() { skip_ws(); return i >= s.size(); }
	char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
	[[noreturn]] void fail(const std::string& what) {
		throw std::invalid_argument("polynomial syntax error at offset " +
		                            std::to_string(i) + ": " + what);
	}
	int parse_int() {
		skip_ws();
		size_t start = i;
		if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
		size_t digits = i;
		while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
		if (i == digits) fail("expected integer");
		return std::stoi(s.substr(start, i - start));
	}
};

Mono parse_mono(Cursor& c) {
	// 1 | factor (* factor)* where factor = U[^k] | V[^k]
	if (c.peek() == '1') {
		++c.i;
		return Mono{0, 0};
	}
	Mono m{0, 0};
	bool any = false;
	for (;;) {
		char ch = c.peek();
		if (ch == 'U' || ch == 'V') {
			++c.i;
			int e = 1;
			if (c.peek() == '^') {
				++c.i;
				e = c.parse_int();
			}
			if (ch == 'U') m.u += e; else m.v += e;
			any = true;
		} else {
			break;
		}
		if (c.peek() == '*') {
			++c.i;
			continue;
		}
	}
	if (!any) c.fail("expected monomial");
	return m;
}

}  // namespace

Poly Poly::parse(const std::string& text) {
	Cursor c{text};
	if (c.eof()) throw std::invalid_argument("empty polynomial");
	if (c.peek() == '0') {
		++c.i;
		if (!c.eof()) c.fail("trailing input after 0");
		return Poly::zero();
	}
	std::vector<Mono> ts;
	ts.push_back(parse_mono(c));
	while (!c.eof()) {
		if (c.peek() != '+') c.fail("expected '+'");
		++c.i;
		ts.push_back(parse_mono(c));
	}
	return from_terms(std::move(ts));
}

int Poly::max_u_exponent() const {
	int m = 0;
	for (const Mono& t : terms_) m = std::max(m, t.u);
	return m;
}

}  // namespace cfl
