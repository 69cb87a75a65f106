#include "maps.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "bitmatrix.hpp"
#include "error.hpp"

namespace cfl {

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int shift_gr_w, int shift_alexander)
    : source_(std::move(source)),
      target_(std::move(target)),
      shift_gr_w_(shift_gr_w),
      shift_alexander_(shift_alexander),
      matrix_(source_->size()) {}

ChainMap ChainMap::identity(const ComplexPtr& c) {
	ChainMap f(c, c, 0, 0);
	for (int i = 0; i < c->size(); ++i) f.add_entry(i, i, Poly::one());
	return f;
}

ChainMap ChainMap::zero(const ComplexPtr& c, int shift_gr_w, int shift_alexander) {
	return ChainMap(c, c, shift_gr_w, shift_alexander);
}

ChainMap ChainMap::differential(const ComplexPtr& c) {
	ChainMap f(c, c, -1, 0);
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : c->diff_row(s)) f.add_entry(s, t, p);
	return f;
}

const Poly& ChainMap::entry(int src, int tgt) const {
	static const Poly kZero;
	const auto& row = matrix_[src];
	auto it = std::lower_bound(row.begin(), row.end(), tgt,
	                           [](const auto& e, int t) { return e.first < t; });
	return (it != row.end() && it->first == tgt) ? it->second : kZero;
}

void ChainMap::add_entry(int src, int tgt, const Poly& p) {
	if (src < 0 || src >= source_->size() || tgt < 0 || tgt >= target_->size())
		fail(ErrorCode::invalid_argument, "chain map entry out of range");
	if (p.is_zero()) return;
	auto& row = matrix_[src];
	auto it = std::lower_bound(row.begin(), row.end(), tgt,
	                           [](const auto& e, int t) { return e.first < t; });
	if (it != row.end() && it->first == tgt) {
		it->second += p;
		if (it->second.is_zero()) row.erase(it);
	} else {
		row.insert(it, {tgt, p});
	}
}

bool ChainMap::is_zero() const {
	for (const auto& row : matrix_)
		if (!row.empty()) return false;
	return true;
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
	if (a.source_ != b.source_ || a.target_ != b.target_)
		fail(ErrorCode::shape_mismatch, "chain map addition: source/target mismatch");
	if (a.shift_gr_w_ != b.shift_gr_w_ || a.shift_alexander_ != b.shift_alexander_)
		fail(ErrorCode::shape_mismatch, "chain map addition: shift mismatch");
	ChainMap r = a;
	for (int s = 0; s < (int)b.matrix_.size(); ++s)
		for (const auto& [t, p] : b.matrix_[s]) r.add_entry(s, t, p);
	return r;
}

ChainMap operator*(const ChainMap& f, const ChainMap& g) {
	if (g.target_ != f.source_)
		fail(ErrorCode::shape_mismatch, "chain map composition: shape mismatch");
	ChainMap r(g.source_, f.target_, f.shift_gr_w_ + g.shift_gr_w_,
	           f.shift_alexander_ + g.shift_alexander_);
	for (int s = 0; s < (int)g.matrix_.size(); ++s)
		for (const auto& [mid, p] : g.matrix_[s])
			for (const auto& [t, q] : f.matrix_[mid]) r.add_entry(s, t, q * p);
	return r;
}

bool operator==(const ChainMap& a, const ChainMap& b) {
	return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
}

Element ChainMap::apply(const Element& e) const {
	if (e.complex() != source_)
		fail(ErrorCode::shape_mismatch, "chain map applied to element of another complex");
	Element r(target_);
	for (int g = 0; g < source_->size(); ++g) {
		if (e.coord(g).is_zero()) continue;
		for (const auto& [t, p] : matrix_[g]) r.coord(t) += e.coord(g) * p;
	}
	return r;
}

ChainMap ChainMap::scale(const Poly& p) const {
	if (!p.is_monomial())
		fail(ErrorCode::invalid_argument, "scale expects a single monomial");
	Mono m = p.terms()[0];
	ChainMap r(source_, target_, shift_gr_w_ - 2 * m.u, shift_alexander_ + m.v - m.u);
	for (int s = 0; s < (int)matrix_.size(); ++s)
		for (const auto& [t, q] : matrix_[s]) r.add_entry(s, t, q * p);
	return r;
}

ChainMap ChainMap::commutator_with_diff() const {
	if (source_ != target_) {
		// d_tgt o f + f o d_src
		ChainMap a = ChainMap::differential(target_) * (*this);
		ChainMap b = (*this) * ChainMap::differential(source_);
		ChainMap r(source_, target_, shift_gr_w_ - 1, shift_alexander_);
		for (int s = 0; s < (int)a.matrix_.size(); ++s)
			for (const auto& [t, p] : a.matrix_[s]) r.add_entry(s, t, p);
		for (int s = 0; s < (int)b.matrix_.size(); ++s)
			for (const auto& [t, p] : b.matrix_[s]) r.add_entry(s, t, p);
		return r;
	}
	ChainMap d = ChainMap::differential(source_);
	return d * (*this) + (*this) * d;
}

bool ChainMap::is_filtered() const {
	for (const auto& row : matrix_)
		for (const auto& [t, p] : row)
			for (const Mono& m : p.terms())
				if (m.u < 0 || m.v < 0) return false;
	return true;
}

bool ChainMap::entries_match_shifts() const {
	for (int s = 0; s < (int)matrix_.size(); ++s)
		for (const auto& [t, p] : matrix_[s]) {
			const Generator& x = source_->gen(s);
			const Generator& y = target_->gen(t);
			for (const Mono& m : p.terms()) {
				if (y.gr_w - 2 * m.u != x.gr_w + shift_gr_w_) return false;
				if (y.alexander + m.v - m.u != x.alexander + shift_alexander_) return false;
			}
		}
	return true;
}

void ChainMap::derive_shifts() {
	bool found = false;
	for (int s = 0; s < (int)matrix_.size() && !found; ++s)
		for (const auto& [t, p] : matrix_[s]) {
			const Mono& m = p.terms()[0];
			shift_gr_w_ = target_->gen(t).gr_w - 2 * m.u - source_->gen(s).gr_w;
			shift_alexander_ =
			    target_->gen(t).alexander + m.v - m.u - source_->gen(s).alexander;
			found = true;
			break;
		}
	if (!entries_match_shifts())
		fail(ErrorCode::non_homogeneous, "map entries have inconsistent grading shifts");
}

namespace {

ChainMap derivative_map(const ComplexPtr& c, bool with_respect_to_u) {
	// Default shifts cover the zero-differential case (unknot); otherwise
	// they are re-derived from the entries.
	ChainMap f(c, c, with_respect_to_u ? 1 : -1, with_respect_to_u ? 1 : -1);
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : c->diff_row(s)) {
			Poly d = with_respect_to_u ? p.d_du() : p.d_dv();
			if (!d.is_zero()) f.add_entry(s, t, d);
		}
	f.derive_shifts();
	return f;
}

}  // namespace

ChainMap phi(const ComplexPtr& c) { return derivative_map(c, true); }
ChainMap psi(const ComplexPtr& c) { return derivative_map(c, false); }

std::optional<ChainMap> null_homotopy(const ChainMap& f) {
	const ComplexPtr& c = f.source();
	if (f.target() != c)
		fail(ErrorCode::invalid_argument, "null_homotopy expects an endomorphism");
	int hw = f.shift_gr_w() + 1;
	int ha = f.shift_alexander();

	// Unknowns: allowed entries of H, each a single forced monomial.
	struct Slot { int src, tgt; Mono m; };
	std::vector<Slot> slots;
	for (int s = 0; s < c->size(); ++s)
		for (int t = 0; t < c->size(); ++t)
			if (auto m = c->forced_mono(s, t, hw, ha)) slots.push_back({s, t, *m});

	// Equations: coefficients of d H_k + H_k d, linearized over all
	// (src, tgt, monomial) triples that appear, plus those of f.
	std::map<std::tuple<int, int, Mono>, int> rows;
	auto row_of = [&rows](int s, int t, Mono m) {
		auto [it, inserted] = rows.try_emplace(std::make_tuple(s, t, m), (int)rows.size());
		return it->second;
	};
	std::vector<std::vector<std::pair<int, Mono>>> incoming(c->size());  // tgt -> (src, mono)
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : c->diff_row(s))
			for (const Mono& q : p.terms()) incoming[t].push_back({s, q});

	struct Contribution { int row, col; };
	std::vector<Contribution> contribs;
	for (int k = 0; k < (int)slots.size(); ++k) {
		const Slot& sl = slots[k];
		// d o H_k : src -> sl.tgt -> t'
		for (const auto& [t2, p] : c->diff_row(sl.tgt))
			for (const Mono& q : p.terms())
				contribs.push_back({row_of(sl.src, t2, sl.m.times(q)), k});
		// H_k o d : s' -> sl.src -> sl.tgt
		for (const auto& [s2, q] : incoming[sl.src])
			contribs.push_back({row_of(s2, sl.tgt, sl.m.times(q)), k});
	}
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : f.row(s))
			for (const Mono& m : p.terms()) row_of(s, t, m);

	BitMatrix sys(rows.size(), slots.size());
	for (const Contribution& cb : contribs) sys.flip(cb.row, cb.col);
	BitVec rhs(rows.size());
	for (int s = 0; s < c->size(); ++s)
		for (const auto& [t, p] : f.row(s))
			for (const Mono& m : p.terms()) rhs.flip(row_of(s, t, m));

	auto sol = sys.solve(rhs);
	if (!sol) return std::nullopt;
	ChainMap h(c, c, hw, ha);
	for (int k = 0; k < (int)slots.size(); ++k)
		if (sol->get(k)) h.add_entry(slots[k].src, slots[k].tgt, Poly(slots[k].m));
	return h;
}

bool is_null_homotopic(const ChainMap& f) { return null_homotopy(f).has_value(); }

ChainMap roll_map(const ComplexPtr& c, int l) {
	if (l < 0) fail(ErrorCode::invalid_argument, "roll power must be non-negative");
	ChainMap r = ChainMap::identity(c);
	if (l % 2 == 1) r = r + phi(c) * psi(c);  // composite shifts: (+1,+1)+(-1,-1) = (0,0)
	return r;
}

ChainMap tensor_map(const ChainMap& f, const ChainMap& g, const ComplexPtr& src,
                    const ComplexPtr& tgt) {
	auto sf = src->tensor_factors();
	auto tf = tgt->tensor_factors();
	if (!sf || !tf)
		fail(ErrorCode::invalid_argument, "tensor_map requires tensor-built complexes");
	auto [sn1, sn2] = *sf;
	auto [tn1, tn2] = *tf;
	if (f.source()->size() != sn1 || g.source()->size() != sn2 ||
	    f.target()->size() != tn1 || g.target()->size() != tn2)
		fail(ErrorCode::shape_mismatch, "tensor_map factor sizes do not match");
	ChainMap r(src, tgt, f.shift_gr_w() + g.shift_gr_w(),
	           f.shift_alexander() + g.shift_alexander());
	for (int a = 0; a < sn1; ++a)
		for (const auto& [a2, p] : f.row(a))
			for (int b = 0; b < sn2; ++b)
				for (const auto& [b2, q] : g.row(b))
					r.add_entry(a * sn2 + b, a2 * tn2 + b2, p * q);
	return r;
}

ChainMap swap_factors(const ComplexPtr& cc) {
	auto tf = cc->tensor_factors();
	if (!tf || tf->first != tf->second)
		fail(ErrorCode::invalid_argument, "swap_factors requires tensor(c, c)");
	int n = tf->first;
	ChainMap r(cc, cc, 0, 0);
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) r.add_entry(a * n + b, b * n + a, Poly::one());
	return r;
}

ChainMap summand_swap(const ComplexPtr& cc, const ComplexPtr& factor, bool variant) {
	auto tf = cc->tensor_factors();
	if (!tf || tf->first != factor->size() || tf->second != factor->size())
		fail(ErrorCode::invalid_argument, "summand_swap requires tensor(c, c) and its factor");
	ChainMap id_c = ChainMap::identity(factor);
	ChainMap pp = phi(factor) * psi(factor);
	ChainMap sum = ChainMap::identity(cc);
	if (!variant) {
		// id (x) id + id (x) (Phi o Psi) + Psi (x) Phi
		sum = sum + tensor_map(id_c, pp, cc, cc) +
		      tensor_map(psi(factor), phi(factor), cc, cc);
	} else {
		// id (x) id + (Phi o Psi) (x) id + Phi (x) Psi
		sum = sum + tensor_map(pp, id_c, cc, cc) +
		      tensor_map(phi(factor), psi(factor), cc, cc);
	}
	return swap_factors(cc) * sum;
}

}  // namespace cfl
