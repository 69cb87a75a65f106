#include "disks.hpp"

#include "error.hpp"

namespace cfl {

bool DiskElement::homogeneous_for_side(Side s) const {
	auto bg = element.bigrading();  // throws if mixed
	if (!bg) return true;
	int want = s == Side::z ? genus : -genus;
	return bg->second == want;
}

Element cotrace_in(const ComplexPtr& c, const ComplexPtr& ambient) {
	auto tf = ambient->tensor_factors();
	int n = c->size();
	if (!tf || tf->first != n || tf->second != n || ambient->size() != n * n)
		fail(ErrorCode::shape_mismatch, "cotrace ambient must be tensor(dual(c), c)");
	Element e(ambient);
	for (int x = 0; x < n; ++x) e.coord(x * n + x) += Poly::one();
	if (!e.is_cycle()) fail(ErrorCode::internal, "cotrace element is not a cycle");
	return e;
}

Element cotrace(const ComplexPtr& c) {
	return cotrace_in(c, tensor(dual(c), c));
}

DiskElement deform_spun_disk(const ComplexPtr& c, const ChainMap& d, const ComplexPtr& ambient) {
	if (d.source() != c || d.target() != c)
		fail(ErrorCode::invalid_argument, "deformation must be an endomorphism of the knot complex");
	if (d.shift_gr_w() != 0 || d.shift_alexander() != 0)
		fail(ErrorCode::invalid_argument, "deformation must have zero grading shifts");
	int n = c->size();
	Element e(ambient);
	// (id (x) d)(sum_x x^dual (x) x) = sum_x sum_y d_{x->y} x^dual (x) y
	for (int x = 0; x < n; ++x)
		for (const auto& [y, p] : d.row(x)) e.coord(x * n + y) += p;
	if (!e.is_cycle())
		fail(ErrorCode::invalid_argument, "deformation is not a chain map: spun element is not closed");
	return DiskElement{std::move(e), 0, Side::z};
}

DiskElement deform_spun_disk(const ComplexPtr& c, const ChainMap& d) {
	return deform_spun_disk(c, d, tensor(dual(c), c));
}

DiskElement stabilize(const DiskElement& e, int dw, int dz) {
	if (dw < 0 || dz < 0)
		fail(ErrorCode::invalid_argument, "stabilization exponents must be non-negative");
	DiskElement r = e;
	r.element = e.element.times(Poly::monomial(dw, dz));
	if (e.genus == 0 && dw > 0 && dz == 0) {
		r.side = Side::w;
		r.genus = dw;
	} else if (e.side == Side::z) {
		r.genus = e.genus + dz;
	} else {
		r.genus = e.genus + dw;
	}
	return r;
}

Deformation Deformation::parse(const std::string& name) {
	if (name == "id") return Deformation{Kind::id, 0};
	if (name == "roll") return Deformation{Kind::roll, 1};
	if (name.rfind("roll^", 0) == 0) {
		try {
			int l = std::stoi(name.substr(5));
			if (l < 0) throw std::invalid_argument("negative");
			return Deformation{Kind::roll, l};
		} catch (const std::exception&) {
			fail(ErrorCode::unknown_name, "bad roll power in deformation '" + name + "'");
		}
	}
	if (name == "swap") return Deformation{Kind::swap_rigid, 0};
	if (name == "swap_variant") return Deformation{Kind::swap_variant, 0};
	fail(ErrorCode::unknown_name,
	     "unknown deformation '" + name + "' (expected id, roll^l, swap, swap_variant)");
}

std::string Deformation::str() const {
	switch (kind) {
		case Kind::id: return "id";
		case Kind::roll: return roll_power == 1 ? "roll" : "roll^" + std::to_string(roll_power);
		case Kind::swap_rigid: return "swap";
		case Kind::swap_variant: return "swap_variant";
	}
	return "?";
}

namespace {

ChainMap deformation_map(const ComplexPtr& x, const ComplexPtr& factor, const Deformation& d) {
	switch (d.kind) {
		case Deformation::Kind::id: return ChainMap::identity(x);
		case Deformation::Kind::roll: return roll_map(x, d.roll_power);
		case Deformation::Kind::swap_rigid: return summand_swap(x, factor, false);
		case Deformation::Kind::swap_variant: return summand_swap(x, factor, true);
	}
	fail(ErrorCode::internal, "unreachable deformation kind");
}

}  // namespace

DiskPair make_disk_pair(const ComplexPtr& knot, const Deformation& a, const Deformation& b) {
	bool sum = a.needs_connected_sum() || b.needs_connected_sum();
	ComplexPtr x = sum ? tensor(knot, knot) : knot;
	ComplexPtr ambient = tensor(dual(x), x);
	DiskPair pair;
	pair.spun_knot = x;
	pair.ambient = ambient;
	pair.first = deform_spun_disk(x, deformation_map(x, knot, a), ambient);
	pair.second = deform_spun_disk(x, deformation_map(x, knot, b), ambient);
	return pair;
}

}  // namespace cfl
