#include "knots.hpp"

#include "error.hpp"

namespace cfl {

namespace {

struct GenSpec { const char* name; int gr_w, a; };
struct DiffSpec { int src, tgt; int u, v; };

ComplexPtr build(const char* name, std::vector<GenSpec> gens, std::vector<DiffSpec> diffs) {
	std::vector<Generator> gs;
	gs.reserve(gens.size());
	for (const GenSpec& g : gens) gs.push_back(Generator{g.name, g.gr_w, g.a});
	auto c = std::make_shared<KnotComplex>(name, Ring::uv_minus, std::move(gs));
	for (const DiffSpec& d : diffs) c->add_diff(d.src, d.tgt, Poly::monomial(d.u, d.v));
	ValidationReport rep = c->validate();
	if (!rep.ok())
		fail(ErrorCode::internal, std::string("library entry '") + name + "' invalid: " + rep.str());
	return c;
}

std::vector<LibraryEntry> make_library() {
	std::vector<LibraryEntry> lib;

	lib.push_back({"unknot",
	               build("unknot", {{"x0", 0, 0}}, {}),
	               "one generator in bigrading (0,0), zero differential", true});

	// Genus-1 staircase: the (2,3) torus knot model; Alexander polynomial
	// t - 1 + 1/t.
	lib.push_back({"trefoil_right",
	               build("trefoil_right",
	                     {{"x0", -2, -1}, {"x1", -1, 0}, {"x2", 0, 1}},
	                     {{1, 0, 0, 1}, {1, 2, 1, 0}}),
	               "3-step staircase model of the right-handed trefoil", true});

	// Five generators, central square; Alexander polynomial t - 3 + 1/t.
	lib.push_back({"figure8",
	               build("figure8",
	                     {{"x0", 1, 1}, {"x1", 0, 0}, {"x2", 0, 0}, {"x3", 0, 0}, {"x4", -1, -1}},
	                     {{0, 1, 0, 1}, {3, 4, 0, 1}, {3, 0, 1, 0}, {4, 1, 1, 0}}),
	               "standard 5-generator model of the figure-eight knot", true});

	lib.push_back({"T34",
	               build("T34",
	                     {{"x0", -6, -3}, {"x1", -5, -2}, {"x2", -2, 0}, {"x3", -1, 2}, {"x4", 0, 3}},
	                     {{1, 0, 0, 1}, {1, 2, 2, 0}, {3, 2, 0, 2}, {3, 4, 1, 0}}),
	               "staircase model of the (3,4) torus knot", true});

	lib.push_back({"T45",
	               build("T45",
	                     {{"x0", -12, -6}, {"x1", -11, -5}, {"x2", -6, -2}, {"x3", -5, 0},
	                      {"x4", -2, 2}, {"x5", -1, 5}, {"x6", 0, 6}},
	                     {{1, 0, 0, 1}, {1, 2, 3, 0}, {3, 2, 0, 2}, {3, 4, 2, 0},
	                      {5, 4, 0, 3}, {5, 6, 1, 0}}),
	               "staircase model of the (4,5) torus knot", true});

	// Two-component link model; the printed gradings are formal solutions of
	// the grading equations (the true link gradings are half-integral and
	// omitted). Used only for map-level checks such as Phi o Psi = 0.
	lib.push_back({"hopf_neg_model",
	               build("hopf_neg_model",
	                     {{"x1", 0, 0}, {"x2", -1, -1}, {"x3", -2, -2}, {"x4", -1, -1}},
	                     {{0, 1, 0, 1}, {0, 3, 0, 1}, {2, 1, 1, 0}, {2, 3, 1, 0}}),
	               "negative Hopf link model complex (formal gradings)", false});

	return lib;
}

}  // namespace

const std::vector<LibraryEntry>& library() {
	static const std::vector<LibraryEntry> lib = make_library();
	return lib;
}

ComplexPtr builtin(const std::string& name) {
	for (const LibraryEntry& e : library())
		if (e.name == name) return e.complex;
	fail(ErrorCode::unknown_name, "unknown builtin complex '" + name + "'");
}

std::vector<std::string> builtin_names() {
	std::vector<std::string> out;
	for (const LibraryEntry& e : library()) out.push_back(e.name);
	return out;
}

std::vector<std::string> builtin_knot_names() {
	std::vector<std::string> out;
	for (const LibraryEntry& e : library())
		if (e.is_knot) out.push_back(e.name);
	return out;
}

}  // namespace cfl
