#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cfl {

// Bit vector over F2, packed into 64-bit words.
class BitVec {
public:
	BitVec() = default;
	explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

	std::size_t size() const { return n_; }
	bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
	void set(std::size_t i, bool b = true) {
		std::uint64_t m = std::uint64_t(1) << (i & 63);
		if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
	}
	void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
	bool any() const;
	// parity of the AND with another vector (i.e. <a, b> over F2)
	bool dot(const BitVec& o) const;
	void operator^=(const BitVec& o);
	// Index of the first set bit, or npos.
	static constexpr std::size_t npos = ~std::size_t(0);
	std::size_t first_set() const;

	friend bool operator==(const BitVec& a, const BitVec& b) {
		return a.n_ == b.n_ && a.w_ == b.w_;
	}

private:
	std::size_t n_ = 0;
	std::vector<std::uint64_t> w_;
};

// Sparse-facade matrix over F2 with dense packed rows behind it.
// Elimination is column-major with row pivoting by first set bit, so all
// outputs are deterministic.
class BitMatrix {
public:
	BitMatrix() = default;
	BitMatrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}
	static BitMatrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
	void set(std::size_t r, std::size_t c, bool b = true) { row_[r].set(c, b); }
	void flip(std::size_t r, std::size_t c) { row_[r].flip(c); }

	BitVec apply(const BitVec& x) const;  // M * x
	BitMatrix transposed() const;

	std::size_t rank() const;
	// Some x with M*x = b, or nullopt if b is outside the column span.
	// Free variables are set to zero.
	std::optional<BitVec> solve(const BitVec& b) const;
	bool in_image(const BitVec& b) const { return solve(b).has_value(); }

private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<BitVec> row_;
};

// Incremental column space: columns are added one by one and membership
// queries run against the span so far. Used by the upsilon sweep, where
// columns arrive sorted by filtration level.
class IncrementalSpan {
public:
	explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}
	// Returns true if the column increased the rank.
	bool add(BitVec col);
	bool contains(BitVec b) const;
	std::size_t rank() const { return basis_.size(); }

private:
	std::size_t dim_;
	std::vector<std::pair<std::size_t, BitVec>> basis_;  // (leading index, vector)
};

}  // namespace cfl
