#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "complex.hpp"

namespace cfl {

// Sub-quotient shape: a subset S of Z x Z such that whenever two comparable
// points lie in S, the whole rectangle between them does. C(K, S) is then a
// sub-quotient complex of CFK^infty; terms of the induced differential whose
// exponent pair leaves S are dropped.
class Shape {
public:
	// R(i,j)   = { (m,n) : m >= i, n >= j }
	// I(n)     = {0} x [-n, inf)
	// L(m,n)   = I(n)  union  [0,m] x {-n}
	// H(c)     = { (i,j) : j >= c }
	// T(r,k)   = { (i,j) : j == r, i >= k }
	// Z(r,k)   = H(r+1)  union  T(r,k)
	static Shape R(int i, int j);
	static Shape I(int n);
	static Shape L(int m, int n);
	static Shape H(int c);
	static Shape T(int r, int k);
	static Shape Z(int r, int k);
	static Shape all();
	static Shape custom(std::string key, std::function<bool(int, int)> pred);

	bool contains(int i, int j) const { return pred_(i, j); }
	const std::string& key() const { return key_; }

	// Exhaustive rectangle check on the window [-w, w]^2.
	bool is_subquotient_on_window(int w) const;

private:
	Shape(std::string key, std::function<bool(int, int)> pred)
	    : key_(std::move(key)), pred_(std::move(pred)) {}
	std::string key_;
	std::function<bool(int, int)> pred_;
};

// A_k^- = C(K, R(0,-k)), the sub-quotient shape bound to a complex.
struct ShapeHandle {
	ComplexPtr complex;
	Shape shape;
};
ShapeHandle a_k_minus(const ComplexPtr& c, int k);

// One gr_w-homogeneous slice of the Alexander-zero lattice of a complex,
// restricted to a shape. For fixed degree d, a generator x contributes the
// single monomial with i = (gr_w(x) - d)/2, j = i - A(x) when that pair is
// integral and lies in the shape, so slices are always finite.
struct Slice {
	int degree = 0;
	std::vector<LatticePoint> basis;  // ordered by generator index
	std::vector<int> pos_of_gen;      // generator -> basis position, -1 absent
	int index_of(const LatticePoint& p) const {
		int k = pos_of_gen[p.gen];
		if (k < 0) return -1;
		const LatticePoint& q = basis[k];
		return (q.i == p.i && q.j == p.j) ? k : -1;
	}
};

using SlicePtr = std::shared_ptr<const Slice>;

SlicePtr slice_basis(const ComplexPtr& c, const Shape& s, int degree);

// Induced differential matrix from the degree-d slice to the (d-1)-slice;
// rows index the target slice, columns the source slice. Cached per
// (complex, shape, degree).
std::shared_ptr<const BitMatrix> slice_matrix(const ComplexPtr& c, const Shape& s, int degree);

// Does the class of xi vanish in H_*(C(c, shape))? xi is first projected
// into the shape (quotient structure); the test then asks whether the
// projection is hit by the induced differential from one degree up.
// xi must be gr_w-homogeneous; its degree is derived from the points.
bool class_vanishes(const ComplexPtr& c, const Shape& s, const std::vector<LatticePoint>& xi);

}  // namespace cfl
