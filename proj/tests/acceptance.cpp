// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cflkit.h"
#include "invariants.hpp"
#include "knots.hpp"
#include "maps.hpp"

using namespace cfl;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(clock_type::time_point start) {
	return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(int id, const std::string& desc, bool pass, double secs,
            const std::string& detail = "") {
	std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id,
	            desc.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
	std::fflush(stdout);
	if (!pass) ++g_failures;
}

struct PairNumbers {
	int64_t tau = -1;
	std::vector<int64_t> v;  // V_0 .. V_{len-1}
};

// headline numbers through the public C API
PairNumbers capi_pair_numbers(const char* knot, const char* d1, const char* d2, int v_count) {
	PairNumbers out;
	cfl_complex* c = nullptr;
	if (cfl_complex_builtin(knot, &c) != CFL_OK) return out;
	cfl_pair* p = nullptr;
	if (cfl_pair_create(c, d1, d2, &p) != CFL_OK) {
		cfl_complex_free(c);
		return out;
	}
	cfl_pair_tau(p, &out.tau);
	for (int k = 0; k < v_count; ++k) {
		int64_t v = -1;
		cfl_pair_v_k(p, k, &v);
		out.v.push_back(v);
	}
	cfl_pair_free(p);
	cfl_complex_free(c);
	return out;
}

bool run_cli(const std::string& args, const std::string& stdout_path) {
	std::string cmd = std::string(CFL_CLI_PATH) + " " + args + " > " + stdout_path;
	return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	std::ostringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

std::vector<DiskElement> disk_family(const ComplexPtr& knot, ComplexPtr& ambient_out) {
	ComplexPtr x = tensor(knot, knot);
	ComplexPtr ambient = tensor(dual(x), x);
	ambient_out = ambient;
	return {deform_spun_disk(x, ChainMap::identity(x), ambient),
	        deform_spun_disk(x, roll_map(x, 1), ambient),
	        deform_spun_disk(x, summand_swap(x, knot, false), ambient),
	        deform_spun_disk(x, summand_swap(x, knot, true), ambient)};
}

}  // namespace

// ---- criteria 1-3: the computed tables -------------------------------------

void criterion_1() {
	auto start = clock_type::now();
	PairNumbers n = capi_pair_numbers("figure8", "id", "roll", 2);
	double secs = seconds_since(start);
	bool pass = n.tau == 1 && n.v == std::vector<int64_t>{1, 0} && secs < 1.0;
	std::ostringstream d;
	d << "tau=" << n.tau << " V0=" << (n.v.size() > 0 ? n.v[0] : -1)
	  << " V1=" << (n.v.size() > 1 ? n.v[1] : -1) << ", budget 1s";
	report(1, "figure-eight pair (id, roll): tau = 1, V0 = 1, V1 = 0", pass, secs, d.str());
}

void criterion_2() {
	auto start = clock_type::now();
	PairNumbers n = capi_pair_numbers("T34", "swap", "id", 3);
	double secs = seconds_since(start);
	bool pass = n.tau == 2 && n.v == std::vector<int64_t>{1, 1, 0} && secs < 30.0;
	std::ostringstream d;
	d << "tau=" << n.tau;
	for (std::size_t k = 0; k < n.v.size(); ++k) d << " V" << k << "=" << n.v[k];
	d << ", budget 30s";
	report(2, "T34 # T34 (swap, id): tau = 2, V = (1,1,0)", pass, secs, d.str());
}

void criterion_3() {
	auto start = clock_type::now();
	PairNumbers n = capi_pair_numbers("T45", "swap", "id", 4);
	double secs = seconds_since(start);
	bool pass = n.tau == 3 && n.v == std::vector<int64_t>{2, 1, 1, 0} && secs < 300.0;
	std::ostringstream d;
	d << "tau=" << n.tau;
	for (std::size_t k = 0; k < n.v.size(); ++k) d << " V" << k << "=" << n.v[k];
	d << ", budget 300s";
	report(3, "T45 # T45 (swap, id): tau = 3, V = (2,1,1,0)", pass, secs, d.str());
}

// ---- criterion 4: slope law -------------------------------------------------

void criterion_4() {
	auto start = clock_type::now();
	bool pass = true;
	std::ostringstream d;
	struct Job { const char* knot; const char* d1; const char* d2; };
	for (const Job& job : {Job{"figure8", "id", "roll"}, Job{"T34", "swap", "id"},
	                       Job{"T45", "swap", "id"}}) {
		DiskPair p = make_disk_pair(builtin(job.knot), Deformation::parse(job.d1),
		                            Deformation::parse(job.d2));
		int t = tau(p.first, p.second);
		Rational u = upsilon(p.first, p.second, Rational(1, 32));
		bool here = (u == Rational(t, 32));
		pass = pass && here;
		d << job.knot << ": upsilon(1/32)=" << u.str() << " tau/32=" << Rational(t, 32).str()
		  << (here ? " " : " MISMATCH ");
	}
	report(4, "slope law upsilon(1/32) = tau/32 on all three pairs", pass,
	       seconds_since(start), d.str());
}

// ---- criterion 5: roll bound + mechanism ------------------------------------

void criterion_5() {
	auto start = clock_type::now();
	bool pass = true;
	std::ostringstream d;
	for (const auto& name : builtin_knot_names()) {
		DiskPair p = make_disk_pair(builtin(name), Deformation::parse("id"),
		                            Deformation::parse("roll"));
		int t = tau(p.first, p.second);
		if (t > 1) {
			pass = false;
			d << name << ": tau(id,roll)=" << t << " ";
		}
	}
	for (const auto& name : builtin_names()) {
		ComplexPtr c = builtin(name);
		ChainMap f = (phi(c) * psi(c)).scale(Poly::monomial(1, 1));
		auto h = null_homotopy(f);
		if (!h || !(h->commutator_with_diff() == f)) {
			pass = false;
			d << name << ": Uhat*PhiPsi not null-homotopic ";
		}
	}
	report(5, "roll bound tau <= 1 on every knot; Uhat*Phi*Psi null-homotopic on every builtin",
	       pass, seconds_since(start), d.str());
}

// ---- criterion 6: structural suites ------------------------------------------

void criterion_6() {
	auto start = clock_type::now();
	bool pass = true;
	std::ostringstream d;
	auto flag = [&](bool ok, const std::string& what) {
		if (!ok) {
			pass = false;
			d << what << " ";
		}
	};

	// d^2 = 0 and grading law: all builtins, 200 randomized tensor/dual combos
	for (const auto& name : builtin_names())
		flag(builtin(name)->validate().ok(), name + " invalid");
	{
		std::mt19937 rng(271828);
		std::vector<std::string> small{"unknot", "trefoil_right", "figure8", "T34",
		                               "hopf_neg_model"};
		for (int it = 0; it < 200; ++it) {
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
			if (!c->validate().ok()) {
				flag(false, "random combo " + std::to_string(it) + " invalid");
				break;
			}
		}
	}

	// Leibniz; Phi^2, Psi^2 null-homotopic with witnesses
	for (const auto& name : builtin_names()) {
		ComplexPtr c = builtin(name);
		flag(phi(c).commutator_with_diff().is_zero(), name + " Phi Leibniz");
		flag(psi(c).commutator_with_diff().is_zero(), name + " Psi Leibniz");
		for (bool u_side : {true, false}) {
			ChainMap f = u_side ? phi(c) : psi(c);
			ChainMap sq = f * f;
			auto h = null_homotopy(sq);
			flag(h.has_value() && h->commutator_with_diff() == sq,
			     name + (u_side ? " Phi^2" : " Psi^2"));
		}
	}

	// Phi o Psi = 0 on the Hopf model
	{
		ComplexPtr h = builtin("hopf_neg_model");
		flag((phi(h) * psi(h)).is_zero(), "hopf PhiPsi != 0");
	}

	// summand_swap^2 homotopic to id + Phi Psi, with witnesses
	for (const auto& name : builtin_knot_names()) {
		ComplexPtr c = builtin(name);
		ComplexPtr cc = tensor(c, c);
		ChainMap sw = summand_swap(cc, c, false);
		ChainMap target = sw * sw + ChainMap::identity(cc) + phi(cc) * psi(cc);
		auto h = null_homotopy(target);
		flag(h.has_value() && h->commutator_with_diff() == target, name + " swap^2");
	}

	// pair suites: monotonicity, positivity below tau, nu sandwich
	struct Job { const char* knot; const char* d1; const char* d2; };
	for (const Job& job : {Job{"figure8", "id", "roll"}, Job{"T34", "swap", "id"},
	                       Job{"T45", "swap", "id"}}) {
		DiskPair p = make_disk_pair(builtin(job.knot), Deformation::parse(job.d1),
		                            Deformation::parse(job.d2));
		int t = tau(p.first, p.second);
		int prev = -1;
		for (int k = 0; k <= 5; ++k) {
			int vk = v_k(p.first, p.second, k);
			if (k < t) flag(vk > 0, std::string(job.knot) + " V_k zero below tau");
			if (prev >= 0) flag(prev >= vk && vk >= prev - 1,
			                    std::string(job.knot) + " V_k monotonicity");
			prev = vk;
		}
		int n = nu(p.first, p.second);
		flag(t <= n && n <= t + 1, std::string(job.knot) + " nu sandwich");
	}

	// swap variants agree on the criteria-2/3 pairs
	for (const char* knot : {"T34", "T45"}) {
		DiskPair a = make_disk_pair(builtin(knot), Deformation::parse("swap"),
		                            Deformation::parse("id"));
		DiskPair b = make_disk_pair(builtin(knot), Deformation::parse("swap_variant"),
		                            Deformation::parse("id"));
		flag(tau(a.first, a.second) == tau(b.first, b.second),
		     std::string(knot) + " variant tau");
		for (int k = 0; k <= 3; ++k)
			flag(v_k(a.first, a.second, k) == v_k(b.first, b.second, k),
			     std::string(knot) + " variant V_" + std::to_string(k));
	}

	// ultrametric inequality for tau, V_0..V_2, upsilon(1/8) on the disk triples
	for (const char* knot : {"figure8", "T34", "T45"}) {
		ComplexPtr ambient;
		std::vector<DiskElement> disks = disk_family(builtin(knot), ambient);
		int n = (int)disks.size();
		std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
		std::vector<std::vector<std::vector<int>>> vk(
		    3, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
		std::vector<std::vector<Rational>> up(n, std::vector<Rational>(n));
		for (int i = 0; i < n; ++i)
			for (int j = i + 1; j < n; ++j) {
				t[i][j] = t[j][i] = tau(disks[i], disks[j]);
				for (int k = 0; k < 3; ++k)
					vk[k][i][j] = vk[k][j][i] = v_k(disks[i], disks[j], k);
				up[i][j] = up[j][i] = upsilon(disks[i], disks[j], Rational(1, 8));
			}
		for (int i = 0; i < n && pass; ++i)
			for (int j = 0; j < n; ++j)
				for (int k = 0; k < n; ++k) {
					if (i == j || j == k || i == k) continue;
					flag(t[i][k] <= std::max(t[i][j], t[j][k]),
					     std::string(knot) + " tau ultrametric");
					for (int kk = 0; kk < 3; ++kk)
						flag(vk[kk][i][k] <= std::max(vk[kk][i][j], vk[kk][j][k]),
						     std::string(knot) + " V_" + std::to_string(kk) + " ultrametric");
					flag(up[i][k] <= std::max(up[i][j], up[j][k]),
					     std::string(knot) + " upsilon ultrametric");
				}
	}

	// normalization of 100 random valid 6x6 metric filtrations
	{
		std::mt19937 rng(314159);
		const int n = 6;
		for (int it = 0; it < 100; ++it) {
			std::vector<Rational> f(n);
			for (int i = 0; i < n; ++i) f[i] = Rational((int)(rng() % 9), 2);
			std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j) {
					if (i == j) mu[i][i] = f[i];
					else if (j < i) mu[i][j] = mu[j][i];
					else mu[i][j] = std::max(std::max(f[i], f[j]),
					                         Rational((int)(rng() % 13), 2));
				}
			for (int k = 0; k < n; ++k)
				for (int i = 0; i < n; ++i)
					for (int j = 0; j < n; ++j)
						mu[i][j] = std::min(mu[i][j], std::max(mu[i][k], mu[k][j]));
			try {
				normalize_filtration(mu);  // validates the pseudometric laws
			} catch (const std::exception& ex) {
				flag(false, std::string("filtration ") + std::to_string(it) + ": " + ex.what());
				break;
			}
		}
	}

	report(6, "structural property suites", pass, seconds_since(start), d.str());
}

// ---- criterion 7: determinism ------------------------------------------------

void criterion_7() {
	auto start = clock_type::now();
	bool pass = true;
	std::ostringstream d;
	namespace fs = std::filesystem;
	fs::path tmp = fs::temp_directory_path() / "cflkit_accept";
	fs::create_directories(tmp);

	struct Job { const char* name; std::string args; bool csv; };
	std::vector<Job> jobs{
	    {"tau", "tau --knot figure8 --pair id,roll", false},
	    {"vk", "vk --knot T34 --pair swap,id --k 0..3", false},
	    {"upsilon", "upsilon --knot figure8 --pair id,roll --grid 32", true},
	};
	for (const Job& job : jobs) {
		std::string out1 = (tmp / (std::string(job.name) + "_1.json")).string();
		std::string out2 = (tmp / (std::string(job.name) + "_2.json")).string();
		std::string args1 = job.args, args2 = job.args;
		std::string csv1, csv2;
		if (job.csv) {
			csv1 = (tmp / (std::string(job.name) + "_1.csv")).string();
			csv2 = (tmp / (std::string(job.name) + "_2.csv")).string();
			args1 += " --csv " + csv1;
			args2 += " --csv " + csv2;
		}
		bool ok1 = run_cli(args1, out1);
		bool ok2 = run_cli(args2, out2);
		if (!ok1 || !ok2) {
			pass = false;
			d << job.name << " run failed ";
			continue;
		}
		std::string a = slurp(out1), b = slurp(out2);
		// the CSV path differs between runs; compare JSON after masking it
		if (job.csv) {
			std::string::size_type p1 = a.find(csv1);
			std::string::size_type p2 = b.find(csv2);
			if (p1 != std::string::npos) a.replace(p1, csv1.size(), "CSV");
			if (p2 != std::string::npos) b.replace(p2, csv2.size(), "CSV");
		}
		if (a != b || a.empty()) {
			pass = false;
			d << job.name << " JSON differs ";
		}
		if (job.csv && slurp(csv1) != slurp(csv2)) {
			pass = false;
			d << job.name << " CSV differs ";
		}
		if (job.csv) {
			// 63 interior rows plus the header
			std::string csv = slurp(csv1);
			int rows = 0;
			for (char ch : csv)
				if (ch == '\n') ++rows;
			if (rows != 64) {
				pass = false;
				d << "CSV rows=" << rows << " want 64 ";
			}
		}
	}
	report(7, "byte-identical JSON/CSV across repeated runs", pass, seconds_since(start),
	       d.str());
}

int main() {
	criterion_1();
	criterion_2();
	criterion_3();
	criterion_4();
	criterion_5();
	criterion_6();
	criterion_7();
	if (g_failures) {
		std::printf("%d criterion(s) FAILED\n", g_failures);
		return 1;
	}
	std::printf("all acceptance criteria passed\n");
	return 0;
}
