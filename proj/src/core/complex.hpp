#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace cfl {

// Coefficient ring of a complex. The uv rings carry the full bigrading;
// the reduced rings remember which exponent pattern is legal.
enum class Ring {
	uv_minus,     // F2[U,V], exponents >= 0
	uv_infinity,  // F2[U,V,U^-1,V^-1]
	v_only,       // F2[V]      (U = 0 reduction)
	u_only,       // F2[U]      (V = 0 reduction)
	uhat,         // F2[Uhat]; Uhat^i stored as U^i V^i
	f2,           // F2         (U = V = 0 reduction)
};

const char* ring_name(Ring r);

struct Generator {
	std::string name;
	int gr_w = 0;
	int alexander = 0;
	int gr_z() const { return gr_w - 2 * alexander; }
};

struct ValidationReport {
	std::vector<std::string> problems;
	bool ok() const { return problems.empty(); }
	std::string str() const;
};

enum class Reduction { u0, v0, v1, u1, uv0 };

class KnotComplex;
using ComplexPtr = std::shared_ptr<const KnotComplex>;

// Basis monomial U^i V^j * gen of the Alexander-grading-zero lattice,
// subject to A(gen) + j - i = 0.
struct LatticePoint {
	int gen = 0;
	int i = 0;
	int j = 0;
	friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
		return a.gen == b.gen && a.i == b.i && a.j == b.j;
	}
	friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
		if (a.gen != b.gen) return a.gen < b.gen;
		if (a.i != b.i) return a.i < b.i;
		return a.j < b.j;
	}
};

// Finitely generated free bigraded complex over one of the rings above,
// with a sparse polynomial differential. Immutable once shared; helper
// caches are internally synchronized.
class KnotComplex {
public:
	KnotComplex(std::string name, Ring ring, std::vector<Generator> gens);

	// Setup-phase mutation; xors the polynomial into the entry.
	void add_diff(int src, int tgt, const Poly& p);

	const std::string& name() const { return name_; }
	Ring ring() const { return ring_; }
	int size() const { return (int)gens_.size(); }
	const Generator& gen(int i) const { return gens_[i]; }
	const std::vector<Generator>& gens() const { return gens_; }
	// Sorted by target index; zero entries not stored.
	const std::vector<std::pair<int, Poly>>& diff_row(int src) const { return diff_[src]; }
	const Poly& diff_entry(int src, int tgt) const;
	int gen_index(const std::string& name) const;  // -1 if absent

	// Forced exponents for an entry src -> tgt of a map with the given
	// grading shifts (the differential has shifts (-1, 0)). nullopt when the
	// gr_w gap is odd or the monomial is illegal in this ring.
	std::optional<Mono> forced_mono(int src, int tgt, int shift_gr_w, int shift_alexander) const;
	bool mono_legal(Mono m) const;

	ValidationReport validate() const;
	int max_diff_u_exponent() const;

	// The five reductions; results are cached per complex.
	ComplexPtr reduce(Reduction r) const;

	// Tensor-factor bookkeeping set by tensor(); (n1, n2) generator counts,
	// index of (a, b) = a * n2 + b.
	std::optional<std::pair<int, int>> tensor_factors() const { return tensor_factors_; }

	// Shared cache for derived data (slices, matrices), internally
	// synchronized so concurrent readers of one complex are safe.
	struct CacheBox {
		std::mutex mu;
		std::map<std::string, std::shared_ptr<const void>> entries;
		std::map<Reduction, ComplexPtr> reductions;
	};
	CacheBox& cache() const { return *cache_; }

private:
	std::string name_;
	Ring ring_;
	std::vector<Generator> gens_;
	std::vector<std::vector<std::pair<int, Poly>>> diff_;
	std::optional<std::pair<int, int>> tensor_factors_;
	std::unique_ptr<CacheBox> cache_;

	friend ComplexPtr tensor(const ComplexPtr&, const ComplexPtr&);
};

ComplexPtr dual(const ComplexPtr& c);
ComplexPtr tensor(const ComplexPtr& a, const ComplexPtr& b);
ComplexPtr knotify(const ComplexPtr& c);  // requires ring uhat

// Module element: one polynomial coordinate per generator.
class Element {
public:
	Element() = default;
	explicit Element(ComplexPtr c) : complex_(std::move(c)), coords_(complex_->size()) {}

	const ComplexPtr& complex() const { return complex_; }
	const Poly& coord(int g) const { return coords_[g]; }
	Poly& coord(int g) { return coords_[g]; }
	bool is_zero() const;

	friend Element operator+(const Element& a, const Element& b);
	Element times(const Poly& p) const;
	Element boundary() const;  // apply the differential
	bool is_cycle() const { return boundary().is_zero(); }

	// Bigrading when homogeneous; fails with non_homogeneous otherwise.
	// nullopt for the zero element.
	std::optional<std::pair<int, int>> bigrading() const;  // (gr_w, A)

	// A-zero lattice form after multiplying by V^v_shift: each monomial
	// U^a V^b on gen g becomes the point (g, a, b + v_shift). Checks that
	// the result satisfies A(gen) + j - i = 0 on every point.
	std::vector<LatticePoint> lattice(int v_shift) const;

	friend bool operator==(const Element& a, const Element& b) {
		return a.coords_ == b.coords_;
	}

private:
	ComplexPtr complex_;
	std::vector<Poly> coords_;
};

// Fetch-or-compute against a complex's cache box.
template <class T, class Fn>
std::shared_ptr<const T> cache_get(const KnotComplex& c, const std::string& key, Fn&& make) {
	auto& box = c.cache();
	{
		std::lock_guard<std::mutex> lk(box.mu);
		auto it = box.entries.find(key);
		if (it != box.entries.end()) return std::static_pointer_cast<const T>(it->second);
	}
	std::shared_ptr<const T> made = make();
	std::lock_guard<std::mutex> lk(box.mu);
	auto [it, inserted] = box.entries.try_emplace(key, made);
	return std::static_pointer_cast<const T>(it->second);
}

}  // namespace cfl
