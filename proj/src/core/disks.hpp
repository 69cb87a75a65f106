#pragma once

#include <string>

#include "complex.hpp"
#include "maps.hpp"

namespace cfl {

enum class Side { w, z };

// A cycle carrying the value t(1) of a surface's extremal principal
// invariant, together with the genus of the surface and which extremal
// decoration it models. z-side elements satisfy A = +genus, w-side A = -genus.
struct DiskElement {
	Element element;
	int genus = 0;
	Side side = Side::z;  // for disks the two sides agree; stored as z

	bool is_closed() const { return element.is_cycle(); }
	// A(element) == +genus (z) resp. -genus (w); vacuous for the zero element.
	bool homogeneous_for_side(Side s) const;
};

// The canonical cycle sum_x x^dual (x) x in tensor(dual(c), c); bigrading
// (0, 0). The returned element owns the freshly built ambient complex.
Element cotrace(const ComplexPtr& c);
// Variant reusing a prebuilt ambient = tensor(dual(c), c).
Element cotrace_in(const ComplexPtr& c, const ComplexPtr& ambient);

// (id (x) d)(cotrace): the principal invariant of the slice disk obtained by
// deform-spinning with the automorphism d of c. d must be an endomorphism
// with zero shifts. ambient must be tensor(dual(c), c).
DiskElement deform_spun_disk(const ComplexPtr& c, const ChainMap& d, const ComplexPtr& ambient);
DiskElement deform_spun_disk(const ComplexPtr& c, const ChainMap& d);

// Genus-(dw, dz) stabilization: multiplies the element by U^dw V^dz. The
// genus grows on the element's own side (w-side by dw, z-side by dz); a
// genus-0 disk acquires the w side when only dw is positive.
DiskElement stabilize(const DiskElement& e, int dw, int dz);

// Deformation names accepted by the pair builder: id | roll^l | swap |
// swap_variant. swap forms tensor(knot, knot) internally.
struct Deformation {
	enum class Kind { id, roll, swap_rigid, swap_variant };
	Kind kind = Kind::id;
	int roll_power = 1;

	static Deformation parse(const std::string& name);  // unknown_name on failure
	std::string str() const;
	bool needs_connected_sum() const {
		return kind == Kind::swap_rigid || kind == Kind::swap_variant;
	}
};

// A pair of deform-spun disk elements over a common ambient complex
// tensor(dual(X), X), where X is the knot complex itself or tensor(c, c)
// when a summand swap is involved.
struct DiskPair {
	ComplexPtr spun_knot;  // X
	ComplexPtr ambient;    // dual(X) (x) X
	DiskElement first, second;
};

DiskPair make_disk_pair(const ComplexPtr& knot, const Deformation& a, const Deformation& b);

}  // namespace cfl
