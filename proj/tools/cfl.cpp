// cfl — command-line front end for libcflkit. Computes secondary invariants
// of pairs of deform-spun slice disks from built-in or user-supplied knot
// complexes, and emits deterministic JSON (and CSV for upsilon curves).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cflkit.h"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Cleanup {
	cfl_complex* complex = nullptr;
	cfl_pair* pair = nullptr;
	~Cleanup() {
		cfl_pair_free(pair);
		cfl_complex_free(complex);
	}
};

[[noreturn]] void die(cfl_status s) {
	json err;
	err["error"]["code"] = cfl_status_name(s);
	err["error"]["message"] = cfl_last_error();
	std::cerr << err.dump(2) << "\n";
	std::exit((int)s);
}

void must(cfl_status s) {
	if (s != CFL_OK) die(s);
}

std::string rational_str(cfl_rational r) {
	if (r.den == 1) return std::to_string(r.num);
	return std::to_string(r.num) + "/" + std::to_string(r.den);
}

cfl_rational parse_rational(const std::string& s) {
	std::size_t slash = s.find('/');
	try {
		if (slash == std::string::npos) return {std::stoll(s), 1};
		return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
	} catch (const std::exception&) {
		std::cerr << "bad rational '" << s << "' (expected p or p/q)\n";
		std::exit((int)CFL_E_INVALID_ARGUMENT);
	}
}

struct JobOptions {
	std::string knot;
	std::string file;
	std::string pair = "id,roll";
	int cap_slack = 0;  // 0 -> env or default
	std::string out_path;
	std::string stabilize1, stabilize2, stabilize_both;
};

void add_common(CLI::App* cmd, JobOptions& opt, bool with_pair = true) {
	auto* knot = cmd->add_option("--knot", opt.knot, "built-in complex name");
	auto* file = cmd->add_option("--file,-f", opt.file, "complex file in the text format");
	knot->excludes(file);
	if (with_pair) {
		cmd->add_option("--pair", opt.pair,
		                "two deformations: id | roll^l | swap | swap_variant")
		    ->capture_default_str();
		cmd->add_option("--stabilize", opt.stabilize_both,
		                "dw,dz stabilization applied to both disks");
		cmd->add_option("--stabilize1", opt.stabilize1, "dw,dz stabilization of the first disk");
		cmd->add_option("--stabilize2", opt.stabilize2, "dw,dz stabilization of the second disk");
	}
	cmd->add_option("--cap", opt.cap_slack,
	                "search-cap slack (default 8; env CFLKIT_SEARCH_CAP)");
	cmd->add_option("--out,-o", opt.out_path, "write JSON here instead of stdout");
}

int resolve_slack(const JobOptions& opt) {
	if (opt.cap_slack > 0) return opt.cap_slack;
	if (const char* env = std::getenv("CFLKIT_SEARCH_CAP")) {
		try {
			int v = std::stoi(env);
			if (v > 0) return v;
		} catch (const std::exception&) {
			std::cerr << "ignoring unparsable CFLKIT_SEARCH_CAP='" << env << "'\n";
		}
	}
	return 0;  // library default
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
	std::size_t comma = s.find(',');
	if (comma == std::string::npos || comma == 0 || comma + 1 == s.size()) {
		std::cerr << "--pair expects two comma-separated deformations, got '" << s << "'\n";
		std::exit((int)CFL_E_INVALID_ARGUMENT);
	}
	return {s.substr(0, comma), s.substr(comma + 1)};
}

std::pair<int, int> split_ints(const std::string& s, const char* what) {
	std::size_t comma = s.find(',');
	try {
		if (comma != std::string::npos)
			return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
	} catch (const std::exception&) {
	}
	std::cerr << what << " expects dw,dz\n";
	std::exit((int)CFL_E_INVALID_ARGUMENT);
}

void load_complex(const JobOptions& opt, Cleanup& own, json& meta) {
	if (opt.knot.empty() == opt.file.empty()) {
		std::cerr << "exactly one of --knot / --file is required\n";
		std::exit((int)CFL_E_INVALID_ARGUMENT);
	}
	if (!opt.knot.empty()) {
		must(cfl_complex_builtin(opt.knot.c_str(), &own.complex));
		meta["complex"] = opt.knot;
	} else {
		must(cfl_complex_read_file(opt.file.c_str(), &own.complex));
		meta["complex"] = opt.file;
	}
}

void make_pair(const JobOptions& opt, Cleanup& own, json& meta) {
	load_complex(opt, own, meta);
	auto [d1, d2] = split_pair(opt.pair);
	must(cfl_pair_create(own.complex, d1.c_str(), d2.c_str(), &own.pair));
	meta["pair"] = json::array({d1, d2});
	int slack = resolve_slack(opt);
	if (slack > 0) cfl_pair_set_cap_slack(own.pair, slack);
	if (!opt.stabilize_both.empty()) {
		auto [dw, dz] = split_ints(opt.stabilize_both, "--stabilize");
		must(cfl_pair_stabilize(own.pair, 1, dw, dz));
		must(cfl_pair_stabilize(own.pair, 2, dw, dz));
		meta["stabilize"] = json::array({dw, dz});
	}
	if (!opt.stabilize1.empty()) {
		auto [dw, dz] = split_ints(opt.stabilize1, "--stabilize1");
		must(cfl_pair_stabilize(own.pair, 1, dw, dz));
		meta["stabilize1"] = json::array({dw, dz});
	}
	if (!opt.stabilize2.empty()) {
		auto [dw, dz] = split_ints(opt.stabilize2, "--stabilize2");
		must(cfl_pair_stabilize(own.pair, 2, dw, dz));
		meta["stabilize2"] = json::array({dw, dz});
	}
}

void emit(const JobOptions& opt, const json& j) {
	std::string text = j.dump(2);
	text += "\n";
	if (opt.out_path.empty()) {
		std::cout << text;
	} else {
		std::ofstream out(opt.out_path, std::ios::binary);
		if (!out) {
			std::cerr << "cannot write '" << opt.out_path << "'\n";
			std::exit((int)CFL_E_IO);
		}
		out << text;
	}
}

// "a..b" or "k"
std::pair<int, int> parse_k_range(const std::string& s) {
	std::size_t dots = s.find("..");
	try {
		if (dots == std::string::npos) {
			int k = std::stoi(s);
			return {k, k};
		}
		return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
	} catch (const std::exception&) {
		std::cerr << "--k expects k or a..b, got '" << s << "'\n";
		std::exit((int)CFL_E_INVALID_ARGUMENT);
	}
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact knot Floer complex toolkit: secondary invariants of slice-disk pairs"};
	app.require_subcommand(1);

	JobOptions tau_opt, nu_opt, vk_opt, ups_opt, k0_opt, kp_opt, pr_opt, val_opt;
	std::string vk_range = "0..3";
	std::string ups_t;
	int ups_grid = 0;
	std::string ups_csv;
	std::string verify_scope = "all";
	int verify_cap = 0;
	std::string verify_out;
	int k0_which = 1;

	auto* c_tau = app.add_subcommand("tau", "tau of a pair of deform-spun disks");
	add_common(c_tau, tau_opt);

	auto* c_nu = app.add_subcommand("nu", "tau' and nu of a pair");
	add_common(c_nu, nu_opt);

	auto* c_vk = app.add_subcommand("vk", "local h-invariants V_k of a pair");
	add_common(c_vk, vk_opt);
	c_vk->add_option("--k", vk_range, "k or range a..b")->capture_default_str();

	auto* c_ups = app.add_subcommand("upsilon", "upsilon of a pair (single t or a grid)");
	add_common(c_ups, ups_opt);
	c_ups->add_option("--t", ups_t, "single rational t in (0,2), e.g. 1/32");
	c_ups->add_option("--grid", ups_grid, "grid denominator q: sample t = 1/q .. (2q-1)/q");
	c_ups->add_option("--csv", ups_csv, "write interior samples as CSV (t,upsilon)");

	auto* c_k0 = app.add_subcommand("kappa0", "kappa_0 of one disk of a pair");
	add_common(c_k0, k0_opt);
	c_k0->add_option("--which", k0_which, "disk selector 1|2")->capture_default_str();

	auto* c_kp = app.add_subcommand("kappa", "kappa of a pair (equal positive genus)");
	add_common(c_kp, kp_opt);

	auto* c_print = app.add_subcommand("print", "canonical text form of a complex");
	add_common(c_print, pr_opt, false);

	auto* c_val = app.add_subcommand("validate", "validate a complex file");
	c_val->add_option("--file,-f", val_opt.file, "complex file")->required();

	auto* c_list = app.add_subcommand("list", "list built-in complexes");

	auto* c_verify = app.add_subcommand("verify", "run the structural property suites");
	c_verify->add_option("--scope", verify_scope, "all or a builtin name")->capture_default_str();
	c_verify->add_option("--cap", verify_cap, "search-cap slack");
	c_verify->add_option("--out,-o", verify_out, "write JSON report here");

	CLI11_PARSE(app, argc, argv);

	if (c_tau->parsed()) {
		Cleanup own;
		json j;
		make_pair(tau_opt, own, j);
		int64_t t = 0;
		must(cfl_pair_tau(own.pair, &t));
		j["tau"] = t;
		emit(tau_opt, j);
	} else if (c_nu->parsed()) {
		Cleanup own;
		json j;
		make_pair(nu_opt, own, j);
		int64_t t = 0, tp = 0, v = 0;
		int minf = 0;
		must(cfl_pair_tau(own.pair, &t));
		must(cfl_pair_tau_prime(own.pair, &tp, &minf));
		must(cfl_pair_nu(own.pair, &v));
		j["tau"] = t;
		if (minf) j["tau_prime"] = "-inf";
		else j["tau_prime"] = tp;
		j["nu"] = v;
		emit(nu_opt, j);
	} else if (c_vk->parsed()) {
		Cleanup own;
		json j;
		make_pair(vk_opt, own, j);
		auto [klo, khi] = parse_k_range(vk_range);
		json vals;
		for (int k = klo; k <= khi; ++k) {
			int64_t v = 0;
			must(cfl_pair_v_k(own.pair, k, &v));
			vals[std::to_string(k)] = v;
		}
		j["vk"] = vals;
		emit(vk_opt, j);
	} else if (c_ups->parsed()) {
		Cleanup own;
		json j;
		make_pair(ups_opt, own, j);
		if (ups_t.empty() == (ups_grid == 0)) {
			std::cerr << "upsilon needs exactly one of --t / --grid\n";
			return (int)CFL_E_INVALID_ARGUMENT;
		}
		if (!ups_t.empty()) {
			cfl_rational t = parse_rational(ups_t);
			cfl_rational u{0, 1};
			must(cfl_pair_upsilon(own.pair, t, &u));
			j["t"] = rational_str(t);
			j["upsilon"] = rational_str(u);
			emit(ups_opt, j);
		} else {
			cfl_rational* ts = nullptr;
			cfl_rational* vals = nullptr;
			cfl_rational* brk = nullptr;
			size_t count = 0, brk_count = 0;
			must(cfl_pair_upsilon_curve(own.pair, ups_grid, &ts, &vals, &count, &brk,
			                            &brk_count));
			j["grid"] = ups_grid;
			json samples = json::array();
			for (size_t i = 0; i < count; ++i)
				samples.push_back(json::array({rational_str(ts[i]), rational_str(vals[i])}));
			j["samples"] = samples;
			json breakpoints = json::array();
			for (size_t i = 0; i < brk_count; ++i) breakpoints.push_back(rational_str(brk[i]));
			j["breakpoints"] = breakpoints;
			// endpoints are fixed by the slope laws, not by enumeration
			j["endpoints"]["t0"] = "0";
			j["endpoints"]["t2"] = "not computed (degenerate filtration)";
			if (!ups_csv.empty()) {
				std::ofstream csv(ups_csv, std::ios::binary);
				if (!csv) {
					std::cerr << "cannot write '" << ups_csv << "'\n";
					return (int)CFL_E_IO;
				}
				csv << "t,upsilon\r\n";
				for (size_t i = 0; i < count; ++i)
					csv << rational_str(ts[i]) << "," << rational_str(vals[i]) << "\r\n";
				j["csv"] = ups_csv;
			}
			cfl_rational_array_free(ts);
			cfl_rational_array_free(vals);
			cfl_rational_array_free(brk);
			emit(ups_opt, j);
		}
	} else if (c_k0->parsed()) {
		Cleanup own;
		json j;
		make_pair(k0_opt, own, j);
		int64_t v = 0;
		must(cfl_pair_kappa0(own.pair, k0_which, &v));
		j["which"] = k0_which;
		j["kappa0"] = v;
		emit(k0_opt, j);
	} else if (c_kp->parsed()) {
		Cleanup own;
		json j;
		make_pair(kp_opt, own, j);
		int64_t v = 0;
		must(cfl_pair_kappa(own.pair, &v));
		j["kappa"] = v;
		emit(kp_opt, j);
	} else if (c_print->parsed()) {
		Cleanup own;
		json meta;
		load_complex(pr_opt, own, meta);
		char* text = nullptr;
		must(cfl_complex_serialize(own.complex, &text));
		std::cout << text;
		cfl_string_free(text);
	} else if (c_val->parsed()) {
		cfl_complex* c = nullptr;
		cfl_status s = cfl_complex_read_file(val_opt.file.c_str(), &c);
		json j;
		j["file"] = val_opt.file;
		if (s == CFL_OK) {
			j["valid"] = true;
			std::cout << j.dump(2) << "\n";
			cfl_complex_free(c);
		} else {
			j["valid"] = false;
			j["code"] = cfl_status_name(s);
			j["report"] = cfl_last_error();
			std::cout << j.dump(2) << "\n";
			return (int)s;
		}
	} else if (c_list->parsed()) {
		json j = json::array();
		for (int i = 0; i < cfl_builtin_count(); ++i) {
			json e;
			e["name"] = cfl_builtin_name(i);
			e["knot"] = cfl_builtin_is_knot(i) == 1;
			j.push_back(e);
		}
		std::cout << j.dump(2) << "\n";
	} else if (c_verify->parsed()) {
		char* report = nullptr;
		int ok = 0;
		int slack = verify_cap;
		if (slack <= 0) {
			if (const char* env = std::getenv("CFLKIT_SEARCH_CAP")) {
				try { slack = std::stoi(env); } catch (const std::exception&) { slack = 0; }
			}
		}
		must(cfl_verify(verify_scope.c_str(), slack, &report, &ok));
		if (verify_out.empty()) {
			std::cout << report << "\n";
		} else {
			std::ofstream out(verify_out, std::ios::binary);
			out << report << "\n";
		}
		cfl_string_free(report);
		if (!ok) return 1;
	}
	return 0;
}
