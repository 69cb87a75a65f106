#include "invariants.hpp"

#include <algorithm>

#include "bitmatrix.hpp"
#include "error.hpp"

namespace cfl {

namespace {

void require_pair(const DiskElement& e1, const DiskElement& e2, Side side) {
	if (e1.element.complex() != e2.element.complex())
		fail(ErrorCode::shape_mismatch, "pair invariants need elements of one complex");
	if (!e1.is_closed() || !e2.is_closed())
		fail(ErrorCode::invalid_argument, "pair invariants need closed elements");
	if (!e1.homogeneous_for_side(side) || !e2.homogeneous_for_side(side))
		fail(ErrorCode::invalid_argument,
		     side == Side::z ? "expected z-side elements with A = +genus"
		                     : "expected w-side elements with A = -genus");
}

std::vector<LatticePoint> sym_diff(std::vector<LatticePoint> a,
                                   const std::vector<LatticePoint>& b) {
	std::vector<LatticePoint> out;
	std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
	                              std::back_inserter(out));
	return out;
}

std::vector<LatticePoint> shift_hat(const std::vector<LatticePoint>& pts, int n) {
	std::vector<LatticePoint> out = pts;
	for (LatticePoint& p : out) { p.i += n; p.j += n; }
	return out;
}

// U = 0 image of an element of a minus complex, as an element of the
// cached reduction.
Element reduce_u0(const Element& e) {
	ComplexPtr r = e.complex()->reduce(Reduction::u0);
	Element out(r);
	for (int g = 0; g < r->size(); ++g)
		out.coord(g) = e.coord(g).substitute(Poly::Sub::to_zero, Poly::Sub::keep);
	return out;
}

// Membership in the image of the differential inside one (A, gr_w) piece of
// a complex over F2[V]. Pieces are finite: a generator y contributes the
// single monomial V^{n - A(y)} when that exponent is non-negative.
struct ReducedPiece {
	std::vector<int> gens;        // generators present in the piece
	std::vector<int> pos_of_gen;  // -1 absent
};

std::shared_ptr<const ReducedPiece> reduced_piece(const ComplexPtr& r, int n, int degree) {
	std::string key = "redpiece:" + std::to_string(n) + ":" + std::to_string(degree);
	return cache_get<ReducedPiece>(*r, key, [&]() {
		auto piece = std::make_shared<ReducedPiece>();
		piece->pos_of_gen.assign(r->size(), -1);
		for (int g = 0; g < r->size(); ++g) {
			if (r->gen(g).gr_w != degree) continue;
			if (n - r->gen(g).alexander < 0) continue;
			piece->pos_of_gen[g] = (int)piece->gens.size();
			piece->gens.push_back(g);
		}
		return piece;
	});
}

std::shared_ptr<const BitMatrix> reduced_piece_matrix(const ComplexPtr& r, int n, int degree) {
	std::string key = "redmat:" + std::to_string(n) + ":" + std::to_string(degree);
	return cache_get<BitMatrix>(*r, key, [&]() {
		auto src = reduced_piece(r, n, degree);
		auto tgt = reduced_piece(r, n, degree - 1);
		auto m = std::make_shared<BitMatrix>(tgt->gens.size(), src->gens.size());
		for (std::size_t col = 0; col < src->gens.size(); ++col)
			for (const auto& [t, p] : r->diff_row(src->gens[col]))
				if (!p.is_zero() && tgt->pos_of_gen[t] >= 0)
					m->flip(tgt->pos_of_gen[t], col);
		return m;
	});
}

bool is_boundary_in_reduction(const Element& xi) {
	const ComplexPtr& r = xi.complex();
	if (r->ring() != Ring::v_only)
		fail(ErrorCode::internal, "reduced boundary test expects an F2[V] complex");
	auto bg = xi.bigrading();
	if (!bg) return true;
	auto [degree, n] = *bg;
	auto piece = reduced_piece(r, n, degree);
	BitVec b(piece->gens.size());
	for (int g = 0; g < r->size(); ++g) {
		if (xi.coord(g).is_zero()) continue;
		int pos = piece->pos_of_gen[g];
		if (pos < 0) fail(ErrorCode::internal, "element outside its Alexander piece");
		b.flip(pos);
	}
	return reduced_piece_matrix(r, n, degree + 1)->in_image(b);
}

int pair_cap(const DiskElement& e1, const DiskElement& e2, int slack) {
	return std::max(e1.genus, e2.genus) + e1.element.complex()->size() +
	       (slack > 0 ? slack : kDefaultSlack);
}

}  // namespace

int tau(const DiskElement& e1, const DiskElement& e2, int slack) {
	require_pair(e1, e2, Side::z);
	Element r1 = reduce_u0(e1.element);
	Element r2 = reduce_u0(e2.element);
	int lo = std::max(e1.genus, e2.genus);
	int cap = pair_cap(e1, e2, slack);
	for (int n = lo; n <= cap; ++n) {
		Element xi = r1.times(Poly::monomial(0, n - e1.genus)) +
		             r2.times(Poly::monomial(0, n - e2.genus));
		if (xi.is_zero() || is_boundary_in_reduction(xi)) return n;
	}
	fail(ErrorCode::search_cap_exceeded,
	     "tau: classes never agree below n = " + std::to_string(cap) +
	         " (non-torsion difference; check the inputs)");
}

int tau_via_shapes(const DiskElement& e1, const DiskElement& e2, int slack) {
	require_pair(e1, e2, Side::z);
	const ComplexPtr& m = e1.element.complex();
	auto xi = sym_diff(e1.element.lattice(-e1.genus), e2.element.lattice(-e2.genus));
	int lo = std::max(e1.genus, e2.genus);
	int cap = pair_cap(e1, e2, slack);
	for (int n = lo; n <= cap; ++n)
		if (class_vanishes(m, Shape::I(n), xi)) return n;
	fail(ErrorCode::search_cap_exceeded, "tau_via_shapes: no agreement below the cap");
}

TauPrime tau_prime(const DiskElement& e1, const DiskElement& e2, int slack, int m_max) {
	int t = tau(e1, e2, slack);
	const ComplexPtr& m = e1.element.complex();
	if (m_max <= 0) m_max = std::max(1, m->max_diff_u_exponent()) * m->size();
	auto xi = sym_diff(e1.element.lattice(-e1.genus), e2.element.lattice(-e2.genus));
	for (int mm = 0; mm <= m_max; ++mm) {
		if (!class_vanishes(m, Shape::L(mm, t), xi)) {
			if (mm == 0)
				fail(ErrorCode::internal, "tau_prime: vanishing fails at m = 0, contradicting tau");
			return TauPrime{false, -(mm - 1)};
		}
	}
	return TauPrime{true, 0};
}

int nu(const DiskElement& e1, const DiskElement& e2, int slack) {
	TauPrime tp = tau_prime(e1, e2, slack);
	int t = tau(e1, e2, slack);
	return tp.minus_infinity ? t : t + 1;
}

int v_k(const DiskElement& e1, const DiskElement& e2, int k, int slack) {
	require_pair(e1, e2, Side::z);
	if (e1.genus != e2.genus)
		fail(ErrorCode::invalid_argument, "V_k is defined for pairs of equal genus");
	if (k < e1.genus)
		fail(ErrorCode::invalid_argument, "V_k needs k >= genus");
	const ComplexPtr& m = e1.element.complex();
	auto xi = sym_diff(e1.element.lattice(-e1.genus), e2.element.lattice(-e2.genus));
	if (xi.empty()) return 0;
	Shape ak = Shape::R(0, -k);
	int cap = pair_cap(e1, e2, slack);
	for (int n = 0; n <= cap; ++n)
		if (class_vanishes(m, ak, shift_hat(xi, n))) return n;
	fail(ErrorCode::search_cap_exceeded, "v_k: classes never agree below the cap");
}

namespace {

Rational level_of(const Rational& t, int i, int j) {
	// filtration level of U^i V^j: smallest s with t*j + (2-t)*i >= -s
	return -(t * Rational(j) + (Rational(2) - t) * Rational(i));
}

}  // namespace

Rational upsilon(const DiskElement& e1, const DiskElement& e2, const Rational& t, int slack) {
	if (!(Rational(0) < t && t < Rational(2)))
		fail(ErrorCode::infinite_slice,
		     "upsilon: t = " + t.str() +
		         " gives a degenerate filtration with infinite enumeration; the endpoints "
		         "are handled by the slope laws");
	require_pair(e1, e2, Side::z);
	const ComplexPtr& m = e1.element.complex();
	int g1 = e1.genus, g2 = e2.genus;
	Rational base = t * Rational(std::max(g1, g2));
	auto xi = sym_diff(e1.element.lattice(-g1), e2.element.lattice(-g2));
	if (xi.empty()) return base;

	int degree = m->gen(xi[0].gen).gr_w - 2 * xi[0].i;
	Shape all = Shape::all();
	SlicePtr rows = slice_basis(m, all, degree);
	SlicePtr cols = slice_basis(m, all, degree + 1);
	auto mat = slice_matrix(m, all, degree + 1);

	BitVec b(rows->basis.size());
	for (const LatticePoint& p : xi) {
		if (m->gen(p.gen).gr_w - 2 * p.i != degree)
			fail(ErrorCode::non_homogeneous, "upsilon: difference is not gr_w-homogeneous");
		int pos = rows->index_of(p);
		if (pos < 0) fail(ErrorCode::internal, "upsilon: lattice point missing from slice");
		b.flip(pos);
		base = std::max(base, level_of(t, p.i, p.j));
	}

	std::vector<std::pair<Rational, std::size_t>> order;
	order.reserve(cols->basis.size());
	for (std::size_t kk = 0; kk < cols->basis.size(); ++kk)
		order.push_back({level_of(t, cols->basis[kk].i, cols->basis[kk].j), kk});
	std::sort(order.begin(), order.end(), [](const auto& a, const auto& b2) {
		if (a.first != b2.first) return a.first < b2.first;
		return a.second < b2.second;
	});

	std::vector<Rational> candidates{base};
	for (const auto& [lv, kk] : order)
		if (base < lv && (candidates.back() != lv)) candidates.push_back(lv);

	IncrementalSpan span(rows->basis.size());
	std::size_t ptr = 0;
	for (const Rational& s : candidates) {
		while (ptr < order.size() && order[ptr].first <= s) {
			std::size_t col = order[ptr].second;
			BitVec v(rows->basis.size());
			for (std::size_t rr = 0; rr < rows->basis.size(); ++rr)
				if (mat->get(rr, col)) v.set(rr);
			span.add(std::move(v));
			++ptr;
		}
		if (span.contains(b)) return s;
	}
	(void)slack;
	fail(ErrorCode::search_cap_exceeded,
	     "upsilon: difference class is not a boundary at any filtration level");
}

UpsilonCurve upsilon_curve(const DiskElement& e1, const DiskElement& e2, int grid_q,
                           int slack) {
	if (grid_q < 2) fail(ErrorCode::invalid_argument, "upsilon grid denominator must be >= 2");
	UpsilonCurve curve;
	for (int k = 1; k <= 2 * grid_q - 1; ++k) {
		Rational t(k, grid_q);
		curve.samples.push_back({t, upsilon(e1, e2, t, slack)});
	}
	for (std::size_t k = 1; k + 1 < curve.samples.size(); ++k) {
		Rational before = curve.samples[k].second - curve.samples[k - 1].second;
		Rational after = curve.samples[k + 1].second - curve.samples[k].second;
		if (before != after) curve.breakpoints.push_back(curve.samples[k].first);
	}
	return curve;
}

int kappa0(const DiskElement& e, int slack) {
	if (!e.is_closed()) fail(ErrorCode::invalid_argument, "kappa0 needs a closed element");
	if (!e.homogeneous_for_side(Side::w))
		fail(ErrorCode::invalid_argument, "kappa0 expects a w-side element with A = -genus");
	if (e.genus == 0) return 0;
	Element red = reduce_u0(e.element);
	int cap = e.genus + e.element.complex()->size() + (slack > 0 ? slack : kDefaultSlack);
	for (int n = e.genus; n <= cap; ++n) {
		Element xi = red.times(Poly::monomial(0, n - e.genus));
		if (xi.is_zero() || is_boundary_in_reduction(xi)) return n;
	}
	fail(ErrorCode::search_cap_exceeded, "kappa0: class never vanishes below the cap");
}

int kappa(const DiskElement& e1, const DiskElement& e2, int slack) {
	require_pair(e1, e2, Side::w);
	if (e1.genus != e2.genus)
		fail(ErrorCode::invalid_argument, "kappa is defined for pairs of equal genus");
	if (e1.genus == 0)
		fail(ErrorCode::genus_zero, "kappa only makes sense for genus g > 0");
	Element r1 = reduce_u0(e1.element);
	Element r2 = reduce_u0(e2.element);
	int cap = pair_cap(e1, e2, slack);
	for (int n = e1.genus; n <= cap; ++n) {
		Poly vpow = Poly::monomial(0, n - e1.genus);
		Element xi = r1.times(vpow) + r2.times(vpow);
		if (xi.is_zero() || is_boundary_in_reduction(xi)) return n;
	}
	fail(ErrorCode::search_cap_exceeded, "kappa: classes never agree below the cap");
}

std::vector<std::vector<Rational>> normalize_filtration(
    const std::vector<std::vector<Rational>>& mu) {
	std::size_t n = mu.size();
	for (const auto& row : mu)
		if (row.size() != n)
			fail(ErrorCode::invalid_argument, "filtration matrix must be square");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) {
			if (mu[i][j] != mu[j][i])
				fail(ErrorCode::not_ultrametric, "filtration matrix is not symmetric");
			if (mu[i][j] < Rational(0))
				fail(ErrorCode::not_ultrametric, "filtration matrix has a negative entry");
		}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
				if (!(mu[i][k] <= std::max(mu[i][j], mu[j][k])))
					fail(ErrorCode::not_ultrametric,
					     "ultrametric inequality fails on triple (" + std::to_string(i) + "," +
					         std::to_string(j) + "," + std::to_string(k) + ")");

	std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			out[i][j] = mu[i][j] - std::min(mu[i][i], mu[j][j]);

	// the normalization of a metric filtration is a pseudometric; verify
	for (std::size_t i = 0; i < n; ++i) {
		if (out[i][i] != Rational(0))
			fail(ErrorCode::internal, "normalization: nonzero diagonal");
		for (std::size_t j = 0; j < n; ++j) {
			if (out[i][j] != out[j][i] || out[i][j] < Rational(0))
				fail(ErrorCode::internal, "normalization: not symmetric non-negative");
			for (std::size_t k = 0; k < n; ++k)
				if (!(out[i][k] <= out[i][j] + out[j][k]))
					fail(ErrorCode::internal, "normalization: triangle inequality fails");
		}
	}
	return out;
}

}  // namespace cfl
