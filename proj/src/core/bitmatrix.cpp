#include "bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cfl {

bool BitVec::any() const {
	for (std::uint64_t w : w_)
		if (w) return true;
	return false;
}

void BitVec::operator^=(const BitVec& o) {
	if (o.n_ != n_) throw std::invalid_argument("bitvec size mismatch");
	for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool BitVec::dot(const BitVec& o) const {
	if (o.n_ != n_) throw std::invalid_argument("bitvec size mismatch");
	std::uint64_t acc = 0;
	for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
	return std::popcount(acc) & 1;
}

std::size_t BitVec::first_set() const {
	for (std::size_t i = 0; i < w_.size(); ++i)
		if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
	return npos;
}

BitMatrix BitMatrix::identity(std::size_t n) {
	BitMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i) m.set(i, i);
	return m;
}

BitVec BitMatrix::apply(const BitVec& x) const {
	if (x.size() != cols_) throw std::invalid_argument("bitmatrix apply: size mismatch");
	BitVec y(rows_);
	for (std::size_t r = 0; r < rows_; ++r) y.set(r, row_[r].dot(x));
	return y;
}

BitMatrix BitMatrix::transposed() const {
	BitMatrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (row_[r].get(c)) t.set(c, r);
	return t;
}

std::size_t BitMatrix::rank() const {
	std::vector<BitVec> work = row_;
	std::size_t rk = 0;
	for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
		std::size_t piv = BitVec::npos;
		for (std::size_t r = rk; r < rows_; ++r)
			if (work[r].get(c)) { piv = r; break; }
		if (piv == BitVec::npos) continue;
		std::swap(work[rk], work[piv]);
		for (std::size_t r = 0; r < rows_; ++r)
			if (r != rk && work[r].get(c)) work[r] ^= work[rk];
		++rk;
	}
	return rk;
}

std::optional<BitVec> BitMatrix::solve(const BitVec& b) const {
	if (b.size() != rows_) throw std::invalid_argument("bitmatrix solve: size mismatch");
	std::vector<BitVec> work = row_;
	BitVec rhs = b;
	std::vector<std::size_t> pivot_col;
	std::size_t rk = 0;
	for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
		std::size_t piv = BitVec::npos;
		for (std::size_t r = rk; r < rows_; ++r)
			if (work[r].get(c)) { piv = r; break; }
		if (piv == BitVec::npos) continue;
		std::swap(work[rk], work[piv]);
		bool brk = rhs.get(rk), bpv = rhs.get(piv);
		rhs.set(rk, bpv);
		rhs.set(piv, brk);
		for (std::size_t r = 0; r < rows_; ++r)
			if (r != rk && work[r].get(c)) {
				work[r] ^= work[rk];
				if (rhs.get(rk)) rhs.flip(r);
			}
		pivot_col.push_back(c);
		++rk;
	}
	for (std::size_t r = rk; r < rows_; ++r)
		if (rhs.get(r)) return std::nullopt;
	// consistency rows among the first rk: row r has pivot at pivot_col[r]
	BitVec x(cols_);
	for (std::size_t r = 0; r < rk; ++r) x.set(pivot_col[r], rhs.get(r));
	return x;
}

bool IncrementalSpan::add(BitVec col) {
	if (col.size() != dim_) throw std::invalid_argument("incremental span: size mismatch");
	for (const auto& [lead, vec] : basis_)
		if (col.get(lead)) col ^= vec;
	std::size_t lead = col.first_set();
	if (lead == BitVec::npos) return false;
	basis_.emplace_back(lead, std::move(col));
	// keep basis ordered by leading index so reduction stays canonical
	std::sort(basis_.begin(), basis_.end(),
	          [](const auto& a, const auto& b) { return a.first < b.first; });
	return true;
}

bool IncrementalSpan::contains(BitVec b) const {
	if (b.size() != dim_) throw std::invalid_argument("incremental span: size mismatch");
	for (const auto& [lead, vec] : basis_)
		if (b.get(lead)) b ^= vec;
	return !b.any();
}

}  // namespace cfl
