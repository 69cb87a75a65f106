#include "complex.hpp"

#include <algorithm>

#include "error.hpp"

namespace cfl {

const char* ring_name(Ring r) {
	switch (r) {
		case Ring::uv_minus: return "F2[U,V]";
		case Ring::uv_infinity: return "F2[U,V,U^-1,V^-1]";
		case Ring::v_only: return "F2[V]";
		case Ring::u_only: return "F2[U]";
		case Ring::uhat: return "F2[Uhat]";
		case Ring::f2: return "F2";
	}
	return "?";
}

const char* error_code_name(ErrorCode c) {
	switch (c) {
		case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
		case ErrorCode::unknown_name: return "UNKNOWN_NAME";
		case ErrorCode::parse_error: return "PARSE_ERROR";
		case ErrorCode::validation_failed: return "VALIDATION_FAILED";
		case ErrorCode::shape_mismatch: return "SHAPE_MISMATCH";
		case ErrorCode::non_homogeneous: return "NON_HOMOGENEOUS";
		case ErrorCode::search_cap_exceeded: return "SEARCH_CAP_EXCEEDED";
		case ErrorCode::genus_zero: return "GENUS_ZERO";
		case ErrorCode::infinite_slice: return "INFINITE_SLICE";
		case ErrorCode::not_ultrametric: return "NOT_ULTRAMETRIC";
		case ErrorCode::io_error: return "IO_ERROR";
		case ErrorCode::internal: return "INTERNAL";
	}
	return "?";
}

std::string ValidationReport::str() const {
	if (ok()) return "ok";
	std::string s;
	for (const auto& p : problems) {
		if (!s.empty()) s += "\n";
		s += p;
	}
	return s;
}

KnotComplex::KnotComplex(std::string name, Ring ring, std::vector<Generator> gens)
    : name_(std::move(name)),
      ring_(ring),
      gens_(std::move(gens)),
      diff_(gens_.size()),
      cache_(std::make_unique<CacheBox>()) {}

void KnotComplex::add_diff(int src, int tgt, const Poly& p) {
	if (src < 0 || src >= size() || tgt < 0 || tgt >= size())
		fail(ErrorCode::invalid_argument, "differential entry out of range");
	if (p.is_zero()) return;
	auto& row = diff_[src];
	auto it = std::lower_bound(row.begin(), row.end(), tgt,
	                           [](const auto& e, int t) { return e.first < t; });
	if (it != row.end() && it->first == tgt) {
		it->second += p;
		if (it->second.is_zero()) row.erase(it);
	} else {
		row.insert(it, {tgt, p});
	}
}

const Poly& KnotComplex::diff_entry(int src, int tgt) const {
	static const Poly kZero;
	const auto& row = diff_[src];
	auto it = std::lower_bound(row.begin(), row.end(), tgt,
	                           [](const auto& e, int t) { return e.first < t; });
	return (it != row.end() && it->first == tgt) ? it->second : kZero;
}

int KnotComplex::gen_index(const std::string& name) const {
	for (int i = 0; i < size(); ++i)
		if (gens_[i].name == name) return i;
	return -1;
}

bool KnotComplex::mono_legal(Mono m) const {
	switch (ring_) {
		case Ring::uv_minus: return m.u >= 0 && m.v >= 0;
		case Ring::uv_infinity: return true;
		case Ring::v_only: return m.u == 0 && m.v >= 0;
		case Ring::u_only: return m.v == 0 && m.u >= 0;
		case Ring::uhat: return m.u == m.v && m.u >= 0;
		case Ring::f2: return m.u == 0 && m.v == 0;
	}
	return false;
}

std::optional<Mono> KnotComplex::forced_mono(int src, int tgt, int shift_gr_w,
                                             int shift_alexander) const {
	const Generator& x = gens_[src];
	const Generator& y = gens_[tgt];
	int num = y.gr_w - x.gr_w - shift_gr_w;
	if (num % 2 != 0) return std::nullopt;
	int a = num / 2;
	int b = x.alexander + shift_alexander - y.alexander + a;
	Mono m{a, b};
	if (!mono_legal(m)) return std::nullopt;
	return m;
}

namespace {

// Grading law for a differential entry, per ring. The uhat ring's Alexander
// field is filtration metadata, not a grading, so only gr_w is constrained.
bool entry_mono_graded(Ring ring, const Generator& x, const Generator& y, Mono m) {
	switch (ring) {
		case Ring::uv_minus:
		case Ring::uv_infinity:
			return y.gr_w - 2 * m.u == x.gr_w - 1 && y.alexander + m.v - m.u == x.alexander;
		case Ring::v_only:
			return y.gr_w == x.gr_w - 1 && y.alexander + m.v == x.alexander;
		case Ring::u_only:
			return y.gr_w - 2 * m.u == x.gr_w - 1 && y.alexander - m.u == x.alexander;
		case Ring::uhat:
			return y.gr_w - 2 * m.u == x.gr_w - 1;
		case Ring::f2:
			return y.gr_w == x.gr_w - 1 && y.alexander == x.alexander;
	}
	return false;
}

}  // namespace

ValidationReport KnotComplex::validate() const {
	ValidationReport rep;
	if (gens_.empty()) {
		rep.problems.push_back("empty complex");
		return rep;
	}
	for (int s = 0; s < size(); ++s) {
		for (const auto& [t, p] : diff_[s]) {
			for (const Mono& m : p.terms()) {
				if (!mono_legal(m))
					rep.problems.push_back("illegal exponents " + mono_str(m) + " for ring " +
					                       ring_name(ring_) + " in entry (" + gens_[s].name +
					                       " -> " + gens_[t].name + ")");
				if (!entry_mono_graded(ring_, gens_[s], gens_[t], m))
					rep.problems.push_back("grading violation at entry (" + gens_[s].name +
					                       " -> " + gens_[t].name + "), monomial " + mono_str(m));
			}
		}
	}
	// d^2 = 0
	for (int s = 0; s < size(); ++s) {
		std::map<int, Poly> sq;
		for (const auto& [mid, p] : diff_[s])
			for (const auto& [t, q] : diff_[mid]) sq[t] += p * q;
		for (const auto& [t, val] : sq)
			if (!val.is_zero())
				rep.problems.push_back("d^2 != 0: composite (" + gens_[s].name + " -> " +
				                       gens_[t].name + ") = " + val.str());
	}
	return rep;
}

int KnotComplex::max_diff_u_exponent() const {
	int m = 0;
	for (const auto& row : diff_)
		for (const auto& [t, p] : row) m = std::max(m, p.max_u_exponent());
	return m;
}

ComplexPtr KnotComplex::reduce(Reduction r) const {
	{
		std::lock_guard<std::mutex> lk(cache_->mu);
		auto it = cache_->reductions.find(r);
		if (it != cache_->reductions.end()) return it->second;
	}
	if (ring_ != Ring::uv_minus)
		fail(ErrorCode::invalid_argument,
		     "reduce requires a minus-flavor complex over F2[U,V]");

	std::string suffix;
	Ring ring = Ring::uv_minus;
	switch (r) {
		case Reduction::u0: suffix = "[U=0]"; ring = Ring::v_only; break;
		case Reduction::v0: suffix = "[V=0]"; ring = Ring::u_only; break;
		case Reduction::v1: suffix = "[V=1]"; ring = Ring::uhat; break;
		case Reduction::u1: suffix = "[U=1]"; ring = Ring::uhat; break;
		case Reduction::uv0: suffix = "[U=V=0]"; ring = Ring::f2; break;
	}
	std::vector<Generator> gens = gens_;
	if (r == Reduction::u1)
		for (Generator& g : gens) g.gr_w = g.gr_z();  // gr_z is the operative grading
	auto out = std::make_shared<KnotComplex>(name_ + suffix, ring, std::move(gens));
	for (int s = 0; s < size(); ++s) {
		for (const auto& [t, p] : diff_[s]) {
			Poly q;
			switch (r) {
				case Reduction::u0: q = p.substitute(Poly::Sub::to_zero, Poly::Sub::keep); break;
				case Reduction::v0: q = p.substitute(Poly::Sub::keep, Poly::Sub::to_zero); break;
				case Reduction::uv0: q = p.substitute(Poly::Sub::to_zero, Poly::Sub::to_zero); break;
				case Reduction::v1: {
					Poly erased = p.substitute(Poly::Sub::keep, Poly::Sub::to_one);
					std::vector<Mono> ts;
					for (Mono m : erased.terms()) ts.push_back(Mono{m.u, m.u});  // U^a -> Uhat^a
					q = Poly::from_terms(std::move(ts));
					break;
				}
				case Reduction::u1: {
					Poly erased = p.substitute(Poly::Sub::to_one, Poly::Sub::keep);
					std::vector<Mono> ts;
					for (Mono m : erased.terms()) ts.push_back(Mono{m.v, m.v});  // V^b -> Uhat^b
					q = Poly::from_terms(std::move(ts));
					break;
				}
			}
			if (!q.is_zero()) out->add_diff(s, t, q);
		}
	}
	ComplexPtr result = out;
	std::lock_guard<std::mutex> lk(cache_->mu);
	auto [it, inserted] = cache_->reductions.try_emplace(r, result);
	return it->second;
}

ComplexPtr dual(const ComplexPtr& c) {
	std::vector<Generator> gens;
	gens.reserve(c->size());
	for (const Generator& g : c->gens())
		gens.push_back(Generator{g.name + "^", -g.gr_w, -g.alexander});
	auto out = std::make_shared<KnotComplex>(c->name() + "^", c->ring(), std::move(gens));
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : c->diff_row(s)) out->add_diff(t, s, p);  // transpose
	return out;
}

ComplexPtr tensor(const ComplexPtr& a, const ComplexPtr& b) {
	if (a->ring() != b->ring())
		fail(ErrorCode::shape_mismatch, "tensor requires complexes over the same ring");
	if (a->ring() != Ring::uv_minus && a->ring() != Ring::uv_infinity)
		fail(ErrorCode::invalid_argument, "tensor is defined over the F2[U,V] rings");
	int n1 = a->size(), n2 = b->size();
	std::vector<Generator> gens;
	gens.reserve((size_t)n1 * n2);
	for (int i = 0; i < n1; ++i)
		for (int j = 0; j < n2; ++j)
			gens.push_back(Generator{a->gen(i).name + "|" + b->gen(j).name,
			                         a->gen(i).gr_w + b->gen(j).gr_w,
			                         a->gen(i).alexander + b->gen(j).alexander});
	auto out = std::make_shared<KnotComplex>("(" + a->name() + ")x(" + b->name() + ")",
	                                         a->ring(), std::move(gens));
	for (int i = 0; i < n1; ++i) {
		for (int j = 0; j < n2; ++j) {
			int src = i * n2 + j;
			for (const auto& [t, p] : a->diff_row(i)) out->add_diff(src, t * n2 + j, p);
			for (const auto& [t, p] : b->diff_row(j)) out->add_diff(src, i * n2 + t, p);
		}
	}
	out->tensor_factors_ = std::make_pair(n1, n2);
	return out;
}

ComplexPtr knotify(const ComplexPtr& c) {
	if (c->ring() != Ring::uhat)
		fail(ErrorCode::invalid_argument, "knotify requires a complex over F2[Uhat]");
	std::vector<Generator> gens = c->gens();
	for (Generator& g : gens) g.alexander = 0;
	auto out = std::make_shared<KnotComplex>("Kn(" + c->name() + ")", Ring::uv_minus,
	                                         std::move(gens));
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : c->diff_row(s)) out->add_diff(s, t, p);  // Uhat^i = U^i V^i
	return out;
}

bool Element::is_zero() const {
	for (const Poly& p : coords_)
		if (!p.is_zero()) return false;
	return true;
}

Element operator+(const Element& a, const Element& b) {
	if (a.complex_ != b.complex_)
		fail(ErrorCode::shape_mismatch, "element addition across different complexes");
	Element r = a;
	for (int g = 0; g < (int)r.coords_.size(); ++g) r.coords_[g] += b.coords_[g];
	return r;
}

Element Element::times(const Poly& p) const {
	Element r(complex_);
	for (int g = 0; g < (int)coords_.size(); ++g) r.coords_[g] = coords_[g] * p;
	return r;
}

Element Element::boundary() const {
	Element r(complex_);
	for (int g = 0; g < (int)coords_.size(); ++g) {
		if (coords_[g].is_zero()) continue;
		for (const auto& [t, p] : complex_->diff_row(g)) r.coords_[t] += coords_[g] * p;
	}
	return r;
}

std::optional<std::pair<int, int>> Element::bigrading() const {
	std::optional<std::pair<int, int>> bg;
	for (int g = 0; g < (int)coords_.size(); ++g) {
		const Generator& gen = complex_->gen(g);
		for (const Mono& m : coords_[g].terms()) {
			std::pair<int, int> here{gen.gr_w - 2 * m.u, gen.alexander + m.v - m.u};
			if (!bg)
				bg = here;
			else if (*bg != here)
				fail(ErrorCode::non_homogeneous, "element is not homogeneous in (gr_w, A)");
		}
	}
	return bg;
}

std::vector<LatticePoint> Element::lattice(int v_shift) const {
	std::vector<LatticePoint> pts;
	for (int g = 0; g < (int)coords_.size(); ++g) {
		const Generator& gen = complex_->gen(g);
		for (const Mono& m : coords_[g].terms()) {
			LatticePoint p{g, m.u, m.v + v_shift};
			if (gen.alexander + p.j - p.i != 0)
				fail(ErrorCode::non_homogeneous,
				     "element does not lie in the Alexander-zero lattice after shift");
			pts.push_back(p);
		}
	}
	std::sort(pts.begin(), pts.end());
	return pts;
}

}  // namespace cfl
