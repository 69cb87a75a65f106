#include "shapes.hpp"

#include <mutex>

#include "error.hpp"

namespace cfl {

Shape Shape::R(int i, int j) {
	return Shape("R(" + std::to_string(i) + "," + std::to_string(j) + ")",
	             [i, j](int m, int n) { return m >= i && n >= j; });
}

Shape Shape::I(int n) {
	return Shape("I(" + std::to_string(n) + ")",
	             [n](int i, int j) { return i == 0 && j >= -n; });
}

Shape Shape::L(int m, int n) {
	return Shape("L(" + std::to_string(m) + "," + std::to_string(n) + ")",
	             [m, n](int i, int j) {
		             return (i == 0 && j >= -n) || (j == -n && i >= 0 && i <= m);
	             });
}

Shape Shape::H(int c) {
	return Shape("H(" + std::to_string(c) + ")", [c](int, int j) { return j >= c; });
}

Shape Shape::T(int r, int k) {
	return Shape("T(" + std::to_string(r) + "," + std::to_string(k) + ")",
	             [r, k](int i, int j) { return j == r && i >= k; });
}

Shape Shape::Z(int r, int k) {
	return Shape("Z(" + std::to_string(r) + "," + std::to_string(k) + ")",
	             [r, k](int i, int j) { return j >= r + 1 || (j == r && i >= k); });
}

Shape Shape::all() {
	return Shape("ALL", [](int, int) { return true; });
}

Shape Shape::custom(std::string key, std::function<bool(int, int)> pred) {
	return Shape("custom:" + std::move(key), std::move(pred));
}

bool Shape::is_subquotient_on_window(int w) const {
	for (int i = -w; i <= w; ++i)
		for (int j = -w; j <= w; ++j) {
			if (!contains(i, j)) continue;
			for (int m = i; m <= w; ++m)
				for (int n = j; n <= w; ++n) {
					if (!contains(m, n)) continue;
					// rectangle spanned by (i,j) and (m,n)
					for (int a = i; a <= m; ++a)
						for (int b = j; b <= n; ++b)
							if (!contains(a, b)) return false;
				}
		}
	return true;
}

ShapeHandle a_k_minus(const ComplexPtr& c, int k) {
	if (k < 0) fail(ErrorCode::invalid_argument, "a_k_minus requires k >= 0");
	return ShapeHandle{c, Shape::R(0, -k)};
}

SlicePtr slice_basis(const ComplexPtr& c, const Shape& s, int degree) {
	std::string key = "slice:" + s.key() + ":" + std::to_string(degree);
	return cache_get<Slice>(*c, key, [&]() {
		auto sl = std::make_shared<Slice>();
		sl->degree = degree;
		sl->pos_of_gen.assign(c->size(), -1);
		for (int g = 0; g < c->size(); ++g) {
			int num = c->gen(g).gr_w - degree;
			if (num % 2 != 0) continue;
			int i = num / 2;
			int j = i - c->gen(g).alexander;
			if (!s.contains(i, j)) continue;
			sl->pos_of_gen[g] = (int)sl->basis.size();
			sl->basis.push_back(LatticePoint{g, i, j});
		}
		return sl;
	});
}

std::shared_ptr<const BitMatrix> slice_matrix(const ComplexPtr& c, const Shape& s, int degree) {
	std::string key = "mat:" + s.key() + ":" + std::to_string(degree);
	return cache_get<BitMatrix>(*c, key, [&]() {
		SlicePtr src = slice_basis(c, s, degree);
		SlicePtr tgt = slice_basis(c, s, degree - 1);
		auto m = std::make_shared<BitMatrix>(tgt->basis.size(), src->basis.size());
		for (std::size_t col = 0; col < src->basis.size(); ++col) {
			const LatticePoint& p = src->basis[col];
			for (const auto& [t, poly] : c->diff_row(p.gen)) {
				for (const Mono& mono : poly.terms()) {
					LatticePoint q{t, p.i + mono.u, p.j + mono.v};
					int row = tgt->index_of(q);
					if (row >= 0) m->flip(row, col);  // out-of-shape terms are dropped
				}
			}
		}
		return m;
	});
}

bool class_vanishes(const ComplexPtr& c, const Shape& s, const std::vector<LatticePoint>& xi) {
	// project into the shape
	std::vector<LatticePoint> proj;
	for (const LatticePoint& p : xi)
		if (s.contains(p.i, p.j)) proj.push_back(p);
	if (proj.empty()) return true;
	int degree = c->gen(proj[0].gen).gr_w - 2 * proj[0].i;
	SlicePtr tgt = slice_basis(c, s, degree);
	BitVec b(tgt->basis.size());
	for (const LatticePoint& p : proj) {
		if (c->gen(p.gen).gr_w - 2 * p.i != degree)
			fail(ErrorCode::non_homogeneous, "class_vanishes: element is not gr_w-homogeneous");
		int row = tgt->index_of(p);
		if (row < 0) fail(ErrorCode::internal, "class_vanishes: projected point missing from slice");
		b.flip(row);
	}
	if (!b.any()) return true;
	return slice_matrix(c, s, degree + 1)->in_image(b);
}

}  // namespace cfl
