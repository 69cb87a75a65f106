#include "verify.hpp"

#include <map>
#include <random>

#include "bitmatrix.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "knots.hpp"
#include "maps.hpp"

namespace cfl {

int VerifyReport::passed() const {
	int n = 0;
	for (const auto& c : checks) n += c.pass;
	return n;
}

int VerifyReport::failed() const { return (int)checks.size() - passed(); }

namespace {

struct Runner {
	VerifyReport& rep;
	int slack;

	template <class Fn>
	void check(const std::string& name, Fn&& fn) {
		CheckResult r;
		r.name = name;
		try {
			std::string detail;
			r.pass = fn(detail);
			r.detail = detail;
		} catch (const std::exception& ex) {
			r.pass = false;
			r.detail = ex.what();
		}
		rep.checks.push_back(std::move(r));
	}
};

// total homology dimension of the Alexander-n piece of an F2[V] complex
int piece_homology_dim(const ComplexPtr& r, int n) {
	int lo = 0, hi = 0;
	for (const Generator& g : r->gens()) {
		lo = std::min(lo, g.gr_w - 1);
		hi = std::max(hi, g.gr_w + 1);
	}
	int total = 0;
	for (int d = lo; d <= hi; ++d) {
		// dim_d - rank(d: d -> d-1) - rank(d: d+1 -> d), clipped by pieces
		int dim = 0;
		for (const Generator& g : r->gens())
			if (g.gr_w == d && n - g.alexander >= 0) ++dim;
		std::vector<int> here, below, above;
		for (int g = 0; g < r->size(); ++g) {
			if (n - r->gen(g).alexander < 0) continue;
			if (r->gen(g).gr_w == d) here.push_back(g);
			if (r->gen(g).gr_w == d - 1) below.push_back(g);
			if (r->gen(g).gr_w == d + 1) above.push_back(g);
		}
		auto build = [&](const std::vector<int>& src, const std::vector<int>& tgt) {
			BitMatrix m(tgt.size(), src.size());
			for (std::size_t c = 0; c < src.size(); ++c)
				for (const auto& [t, p] : r->diff_row(src[c]))
					if (!p.is_zero())
						for (std::size_t rr = 0; rr < tgt.size(); ++rr)
							if (tgt[rr] == t) m.flip(rr, c);
			return m;
		};
		total += dim - (int)build(here, below).rank() - (int)build(above, here).rank();
	}
	return total;
}

void entry_suite(Runner& run, const LibraryEntry& entry) {
	const std::string& nm = entry.name;
	const ComplexPtr& c = entry.complex;

	run.check(nm + ": validate", [&](std::string& detail) {
		ValidationReport r = c->validate();
		detail = r.str();
		return r.ok();
	});
	run.check(nm + ": Leibniz (Phi and Psi anticommute with d)", [&](std::string&) {
		return phi(c).commutator_with_diff().is_zero() &&
		       psi(c).commutator_with_diff().is_zero();
	});
	run.check(nm + ": Phi^2 and Psi^2 null-homotopic", [&](std::string&) {
		return is_null_homotopic(phi(c) * phi(c)) && is_null_homotopic(psi(c) * psi(c));
	});
	run.check(nm + ": Uhat * Phi o Psi null-homotopic", [&](std::string&) {
		return is_null_homotopic((phi(c) * psi(c)).scale(Poly::monomial(1, 1)));
	});

	if (!entry.is_knot) {
		run.check(nm + ": Phi o Psi vanishes identically", [&](std::string&) {
			return (phi(c) * psi(c)).is_zero();
		});
		return;
	}

	run.check(nm + ": Euler characteristic symmetric with |det(1)| = 1",
	          [&](std::string& detail) {
		          std::map<int, int> chi;  // A -> signed count mod arithmetic over Z
		          for (const Generator& g : c->gens())
			          chi[g.alexander] += (g.gr_w % 2 == 0) ? 1 : -1;
		          int at_one = 0;
		          bool symmetric = true;
		          for (const auto& [a, v] : chi) {
			          at_one += v;
			          if (chi.count(-a) == 0 || chi.at(-a) != v) symmetric = false;
		          }
		          if (!symmetric) detail = "coefficient multiset is not symmetric in A <-> -A";
		          if (at_one != 1 && at_one != -1) detail += " |value at t=1| != 1";
		          return symmetric && (at_one == 1 || at_one == -1);
	          });

	run.check(nm + ": U=0 homology is one tower plus torsion (rank check)",
	          [&](std::string& detail) {
		          ComplexPtr r = c->reduce(Reduction::u0);
		          int max_a = 0;
		          for (const Generator& g : c->gens()) max_a = std::max(max_a, g.alexander);
		          int n = max_a + c->size() + 1;
		          int dim = piece_homology_dim(r, n);
		          if (dim != 1)
			          detail = "stable Alexander piece has homology dimension " +
			                   std::to_string(dim);
		          return dim == 1;
	          });

	run.check(nm + ": roll bound tau(D_id, D_roll) <= 1", [&](std::string& detail) {
		DiskPair p = make_disk_pair(c, Deformation::parse("id"), Deformation::parse("roll"));
		int t = tau(p.first, p.second, run.slack);
		detail = "tau = " + std::to_string(t);
		return t <= 1;
	});

	run.check(nm + ": tau agrees along both routes (id/roll pair)", [&](std::string& detail) {
		DiskPair p = make_disk_pair(c, Deformation::parse("id"), Deformation::parse("roll"));
		int a = tau(p.first, p.second, run.slack);
		int b = tau_via_shapes(p.first, p.second, run.slack);
		detail = "reduction route " + std::to_string(a) + ", shape route " + std::to_string(b);
		return a == b;
	});

	run.check(nm + ": nu sandwich tau <= nu <= tau + 1 (id/roll pair)",
	          [&](std::string& detail) {
		          DiskPair p =
		              make_disk_pair(c, Deformation::parse("id"), Deformation::parse("roll"));
		          int t = tau(p.first, p.second, run.slack);
		          int v = nu(p.first, p.second, run.slack);
		          detail = "tau = " + std::to_string(t) + ", nu = " + std::to_string(v);
		          return t <= v && v <= t + 1;
	          });
}

void pair_suite(Runner& run, const std::string& knot, const char* d1, const char* d2) {
	ComplexPtr c = builtin(knot);
	DiskPair p = make_disk_pair(c, Deformation::parse(d1), Deformation::parse(d2));
	std::string nm = knot + " (" + d1 + "," + d2 + ")";
	int g = p.first.genus;

	run.check(nm + ": invariants symmetric", [&](std::string&) {
		return tau(p.first, p.second, run.slack) == tau(p.second, p.first, run.slack) &&
		       v_k(p.first, p.second, g, run.slack) == v_k(p.second, p.first, g, run.slack);
	});
	run.check(nm + ": V_k monotone, drops by at most one", [&](std::string& detail) {
		int prev = -1;
		for (int k = g; k <= g + 5; ++k) {
			int vk = v_k(p.first, p.second, k, run.slack);
			if (prev >= 0 && !(prev >= vk && vk >= prev - 1)) {
				detail = "V_" + std::to_string(k - 1) + " = " + std::to_string(prev) +
				         ", V_" + std::to_string(k) + " = " + std::to_string(vk);
				return false;
			}
			prev = vk;
		}
		return true;
	});
	run.check(nm + ": V_k positive below tau", [&](std::string& detail) {
		int t = tau(p.first, p.second, run.slack);
		for (int k = g; k < t; ++k)
			if (v_k(p.first, p.second, k, run.slack) <= 0) {
				detail = "V_" + std::to_string(k) + " = 0 with tau = " + std::to_string(t);
				return false;
			}
		return true;
	});
	run.check(nm + ": slope law upsilon(1/32) = tau/32", [&](std::string& detail) {
		int t = tau(p.first, p.second, run.slack);
		Rational u = upsilon(p.first, p.second, Rational(1, 32), run.slack);
		detail = "upsilon(1/32) = " + u.str() + ", tau = " + std::to_string(t);
		return u == Rational(t, 32);
	});
}

void swap_variant_suite(Runner& run, const std::string& knot) {
	ComplexPtr c = builtin(knot);
	run.check(knot + ": both swap variants give one tau and V_k", [&](std::string& detail) {
		DiskPair a = make_disk_pair(c, Deformation::parse("swap"), Deformation::parse("id"));
		DiskPair b =
		    make_disk_pair(c, Deformation::parse("swap_variant"), Deformation::parse("id"));
		int ta = tau(a.first, a.second, run.slack);
		int tb = tau(b.first, b.second, run.slack);
		if (ta != tb) {
			detail = "tau: " + std::to_string(ta) + " vs " + std::to_string(tb);
			return false;
		}
		for (int k = 0; k <= ta + 1; ++k)
			if (v_k(a.first, a.second, k, run.slack) != v_k(b.first, b.second, k, run.slack)) {
				detail = "V_" + std::to_string(k) + " differs between variants";
				return false;
			}
		return true;
	});
}

void ultrametric_suite(Runner& run, const std::string& knot) {
	ComplexPtr c = builtin(knot);
	// four disks over one ambient complex: id, roll, swap, swap variant on K # K
	ComplexPtr x = tensor(c, c);
	ComplexPtr ambient = tensor(dual(x), x);
	std::vector<DiskElement> disks;
	disks.push_back(deform_spun_disk(x, ChainMap::identity(x), ambient));
	disks.push_back(deform_spun_disk(x, roll_map(x, 1), ambient));
	disks.push_back(deform_spun_disk(x, summand_swap(x, c, false), ambient));
	disks.push_back(deform_spun_disk(x, summand_swap(x, c, true), ambient));

	run.check(knot + ": ultrametric inequality for tau, V_0, upsilon(1/8)",
	          [&](std::string& detail) {
		          int n = (int)disks.size();
		          std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
		          std::vector<std::vector<int>> v0(n, std::vector<int>(n, 0));
		          std::vector<std::vector<Rational>> up(n, std::vector<Rational>(n));
		          for (int i = 0; i < n; ++i)
			          for (int j = i + 1; j < n; ++j) {
				          t[i][j] = t[j][i] = tau(disks[i], disks[j], run.slack);
				          v0[i][j] = v0[j][i] = v_k(disks[i], disks[j], 0, run.slack);
				          up[i][j] = up[j][i] =
				              upsilon(disks[i], disks[j], Rational(1, 8), run.slack);
			          }
		          for (int i = 0; i < n; ++i)
			          for (int j = 0; j < n; ++j)
				          for (int k = 0; k < n; ++k) {
					          if (i == j || j == k || i == k) continue;
					          if (t[i][k] > std::max(t[i][j], t[j][k]) ||
					              v0[i][k] > std::max(v0[i][j], v0[j][k]) ||
					              up[i][k] > std::max(up[i][j], up[j][k])) {
						          detail = "triple (" + std::to_string(i) + "," +
						                   std::to_string(j) + "," + std::to_string(k) + ")";
						          return false;
					          }
				          }
		          return true;
	          });
}

void random_structure_suite(Runner& run, int combos) {
	run.check("randomized tensor/dual combinations validate", [&](std::string& detail) {
		std::mt19937 rng(271828);
		std::vector<std::string> small{"unknot", "trefoil_right", "figure8", "T34",
		                               "hopf_neg_model"};
		for (int it = 0; it < combos; ++it) {
			ComplexPtr c = builtin(small[rng() % small.size()]);
			int steps = 1 + (int)(rng() % 3);
			for (int s = 0; s < steps; ++s) {
				if (rng() % 2 == 0) {
					c = dual(c);
				} else {
					ComplexPtr other = builtin(small[rng() % small.size()]);
					if (c->size() * other->size() > 400) { c = dual(c); continue; }
					c = rng() % 2 ? tensor(c, other) : tensor(other, c);
				}
			}
			ValidationReport rep = c->validate();
			if (!rep.ok()) {
				detail = "combination " + std::to_string(it) + " (" + c->name() +
				         "): " + rep.str();
				return false;
			}
		}
		return true;
	});
}

void filtration_suite(Runner& run, int matrices) {
	run.check("normalization of random metric filtrations is a pseudometric",
	          [&](std::string& detail) {
		          std::mt19937 rng(314159);
		          const int n = 6;
		          for (int it = 0; it < matrices; ++it) {
			          // random vertex levels + random edge weights, then min-max
			          // path closure: the graph construction of a metric filtration
			          std::vector<Rational> f(n);
			          for (int i = 0; i < n; ++i) f[i] = Rational((int)(rng() % 9), 2);
			          std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
			          for (int i = 0; i < n; ++i)
				          for (int j = 0; j < n; ++j) {
					          if (i == j) { mu[i][i] = f[i]; continue; }
					          if (j < i) { mu[i][j] = mu[j][i]; continue; }
					          Rational w = std::max(std::max(f[i], f[j]),
					                                Rational((int)(rng() % 13), 2));
					          mu[i][j] = w;
				          }
			          for (int k = 0; k < n; ++k)
				          for (int i = 0; i < n; ++i)
					          for (int j = 0; j < n; ++j)
						          mu[i][j] = std::min(mu[i][j],
						                              std::max(mu[i][k], mu[k][j]));
			          try {
				          normalize_filtration(mu);
			          } catch (const std::exception& ex) {
				          detail = "matrix " + std::to_string(it) + ": " + ex.what();
				          return false;
			          }
		          }
		          return true;
	          });
}

}  // namespace

VerifyReport verify(const std::string& scope, int slack) {
	VerifyReport rep;
	Runner run{rep, slack > 0 ? slack : kDefaultSlack};

	bool all = scope.empty() || scope == "all";
	bool matched = false;
	for (const LibraryEntry& e : library()) {
		if (!all && e.name != scope) continue;
		matched = true;
		entry_suite(run, e);
	}
	if (!all && !matched)
		fail(ErrorCode::unknown_name, "verify scope '" + scope + "' is not a builtin name");

	auto want = [&](const std::string& n) { return all || scope == n; };
	if (want("figure8")) pair_suite(run, "figure8", "id", "roll");
	if (want("T34")) pair_suite(run, "T34", "swap", "id");
	if (want("T34")) swap_variant_suite(run, "T34");
	if (want("figure8")) ultrametric_suite(run, "figure8");
	if (want("T34")) ultrametric_suite(run, "T34");
	if (all) {
		random_structure_suite(run, 200);
		filtration_suite(run, 100);
	}
	return rep;
}

}  // namespace cfl
