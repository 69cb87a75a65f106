#pragma once

#include <optional>
#include <vector>

#include "complex.hpp"

namespace cfl {

// Graded, equivariant map between complexes, stored as a sparse matrix of
// polynomials with declared (gr_w, Alexander) shifts. The grading law pins
// each potential entry to a single monomial; derive_shifts() recovers the
// shifts from the matrix and rejects inconsistent data.
class ChainMap {
public:
	ChainMap() = default;
	ChainMap(ComplexPtr source, ComplexPtr target, int shift_gr_w, int shift_alexander);

	static ChainMap identity(const ComplexPtr& c);
	static ChainMap zero(const ComplexPtr& c, int shift_gr_w = 0, int shift_alexander = 0);
	static ChainMap differential(const ComplexPtr& c);  // shifts (-1, 0)

	const ComplexPtr& source() const { return source_; }
	const ComplexPtr& target() const { return target_; }
	int shift_gr_w() const { return shift_gr_w_; }
	int shift_alexander() const { return shift_alexander_; }
	const std::vector<std::pair<int, Poly>>& row(int src) const { return matrix_[src]; }
	const Poly& entry(int src, int tgt) const;
	void add_entry(int src, int tgt, const Poly& p);  // xor
	bool is_zero() const;

	friend ChainMap operator+(const ChainMap& a, const ChainMap& b);
	// (f * g)(x) = f(g(x)); shifts add.
	friend ChainMap operator*(const ChainMap& f, const ChainMap& g);
	friend bool operator==(const ChainMap& a, const ChainMap& b);

	Element apply(const Element& e) const;
	ChainMap scale(const Poly& p) const;  // entrywise multiplication

	// d o f + f o d as a map (zero iff f is a chain map; over F2 the sign
	// convention is immaterial).
	ChainMap commutator_with_diff() const;
	bool is_chain_map() const { return commutator_with_diff().is_zero(); }
	bool is_filtered() const;  // all entries have non-negative exponents

	// Checks every entry against the declared shifts.
	bool entries_match_shifts() const;
	// Recomputes shifts from the first nonzero entry and validates the rest;
	// fails with non_homogeneous when entries disagree.
	void derive_shifts();

private:
	ComplexPtr source_, target_;
	int shift_gr_w_ = 0, shift_alexander_ = 0;
	std::vector<std::vector<std::pair<int, Poly>>> matrix_;
};

// Basepoint endomorphisms modeled as formal derivatives of the differential
// matrix: phi = d/dU applied entrywise, psi = d/dV. Shifts are derived from
// the entries ((+1,+1) and (-1,-1) respectively on valid complexes).
ChainMap phi(const ComplexPtr& c);
ChainMap psi(const ComplexPtr& c);

// Solves dH + Hd = f over F2. Allowed entries of H are pinned by the grading
// shifts (f's gr_w shift plus one); returns the witness homotopy if one
// exists.
std::optional<ChainMap> null_homotopy(const ChainMap& f);
bool is_null_homotopic(const ChainMap& f);

// (id + Phi Psi)^l = id + (l mod 2) Phi Psi over F2.
ChainMap roll_map(const ComplexPtr& c, int l);

// f (x) g on tensor complexes: (f (x) g)(x (x) y) = f(x) (x) g(y).
ChainMap tensor_map(const ChainMap& f, const ChainMap& g, const ComplexPtr& src,
                    const ComplexPtr& tgt);

// Factor-swap chain map x (x) y -> y (x) x on tensor(c, c).
ChainMap swap_factors(const ComplexPtr& cc);

// The summand-swap deformation on tensor(c, c):
//   Sw o (id (x) id + id (x) (Phi o Psi) + Psi (x) Phi)
// and, behind the variant flag, the homotopy-conjugate form
//   Sw o (id (x) id + (Phi o Psi) (x) id + Phi (x) Psi).
ChainMap summand_swap(const ComplexPtr& cc, const ComplexPtr& factor, bool variant = false);

}  // namespace cfl
