#include "cflkit.h"

#include <cstring>
#include <string>

#include "disks.hpp"
#include "error.hpp"
#include "invariants.hpp"
#include "knots.hpp"
#include "textio.hpp"
#include "verify.hpp"

#include "json.hpp"

namespace {

thread_local std::string g_last_error;

cfl_status status_of(cfl::ErrorCode c) {
	using EC = cfl::ErrorCode;
	switch (c) {
		case EC::invalid_argument: return CFL_E_INVALID_ARGUMENT;
		case EC::unknown_name: return CFL_E_UNKNOWN_NAME;
		case EC::parse_error: return CFL_E_PARSE;
		case EC::validation_failed: return CFL_E_VALIDATION;
		case EC::shape_mismatch: return CFL_E_SHAPE_MISMATCH;
		case EC::non_homogeneous: return CFL_E_NON_HOMOGENEOUS;
		case EC::search_cap_exceeded: return CFL_E_SEARCH_CAP_EXCEEDED;
		case EC::genus_zero: return CFL_E_GENUS_ZERO;
		case EC::infinite_slice: return CFL_E_INFINITE_SLICE;
		case EC::not_ultrametric: return CFL_E_NOT_ULTRAMETRIC;
		case EC::io_error: return CFL_E_IO;
		case EC::internal: return CFL_E_INTERNAL;
	}
	return CFL_E_INTERNAL;
}

template <class Fn>
cfl_status guarded(Fn&& fn) {
	try {
		fn();
		g_last_error.clear();
		return CFL_OK;
	} catch (const cfl::Error& e) {
		g_last_error = e.what();
		return status_of(e.code());
	} catch (const std::exception& e) {
		g_last_error = e.what();
		return CFL_E_INTERNAL;
	}
}

char* dup_string(const std::string& s) {
	char* out = new char[s.size() + 1];
	std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

cfl_rational* dup_rationals(const std::vector<cfl::Rational>& v) {
	cfl_rational* out = new cfl_rational[v.empty() ? 1 : v.size()];
	for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i].num, v[i].den};
	return out;
}

}  // namespace

struct cfl_complex {
	cfl::ComplexPtr c;
};

struct cfl_pair {
	cfl::DiskPair pair;
	int slack = cfl::kDefaultSlack;
};

extern "C" {

const char* cfl_status_name(cfl_status s) {
	switch (s) {
		case CFL_OK: return "OK";
		case CFL_E_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
		case CFL_E_UNKNOWN_NAME: return "UNKNOWN_NAME";
		case CFL_E_PARSE: return "PARSE_ERROR";
		case CFL_E_VALIDATION: return "VALIDATION_FAILED";
		case CFL_E_SHAPE_MISMATCH: return "SHAPE_MISMATCH";
		case CFL_E_NON_HOMOGENEOUS: return "NON_HOMOGENEOUS";
		case CFL_E_SEARCH_CAP_EXCEEDED: return "SEARCH_CAP_EXCEEDED";
		case CFL_E_GENUS_ZERO: return "GENUS_ZERO";
		case CFL_E_INFINITE_SLICE: return "INFINITE_SLICE";
		case CFL_E_NOT_ULTRAMETRIC: return "NOT_ULTRAMETRIC";
		case CFL_E_IO: return "IO_ERROR";
		case CFL_E_INTERNAL: return "INTERNAL";
	}
	return "?";
}

const char* cfl_last_error(void) { return g_last_error.c_str(); }

void cfl_string_free(char* s) { delete[] s; }
void cfl_rational_array_free(cfl_rational* a) { delete[] a; }

int cfl_builtin_count(void) { return (int)cfl::library().size(); }

const char* cfl_builtin_name(int index) {
	const auto& lib = cfl::library();
	if (index < 0 || index >= (int)lib.size()) return nullptr;
	return lib[index].name.c_str();
}

int cfl_builtin_is_knot(int index) {
	const auto& lib = cfl::library();
	if (index < 0 || index >= (int)lib.size()) return -1;
	return lib[index].is_knot ? 1 : 0;
}

cfl_status cfl_complex_builtin(const char* name, cfl_complex** out) {
	if (!name || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = new cfl_complex{cfl::builtin(name)}; });
}

cfl_status cfl_complex_parse(const char* text, cfl_complex** out) {
	if (!text || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = new cfl_complex{cfl::parse_complex(text)}; });
}

cfl_status cfl_complex_read_file(const char* path, cfl_complex** out) {
	if (!path || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = new cfl_complex{cfl::parse_complex_file(path)}; });
}

void cfl_complex_free(cfl_complex* c) { delete c; }

int cfl_complex_generator_count(const cfl_complex* c) { return c ? c->c->size() : -1; }

cfl_status cfl_complex_serialize(const cfl_complex* c, char** out_text) {
	if (!c || !out_text) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out_text = dup_string(cfl::serialize_complex(*c->c)); });
}

cfl_status cfl_complex_validation_report(const cfl_complex* c, char** out_report) {
	if (!c || !out_report) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out_report = dup_string(c->c->validate().str()); });
}

cfl_status cfl_pair_create(const cfl_complex* knot, const char* deform1, const char* deform2,
                           cfl_pair** out) {
	if (!knot || !deform1 || !deform2 || !out) {
		g_last_error = "null argument";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		cfl::DiskPair p = cfl::make_disk_pair(knot->c, cfl::Deformation::parse(deform1),
		                                      cfl::Deformation::parse(deform2));
		*out = new cfl_pair{std::move(p), cfl::kDefaultSlack};
	});
}

void cfl_pair_free(cfl_pair* p) { delete p; }

int cfl_pair_ambient_generator_count(const cfl_pair* p) {
	return p ? p->pair.ambient->size() : -1;
}

void cfl_pair_set_cap_slack(cfl_pair* p, int slack) {
	if (p) p->slack = slack > 0 ? slack : cfl::kDefaultSlack;
}

cfl_status cfl_pair_stabilize(cfl_pair* p, int which, int dw, int dz) {
	if (!p || (which != 1 && which != 2)) {
		g_last_error = "pair element selector must be 1 or 2";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		cfl::DiskElement& e = which == 1 ? p->pair.first : p->pair.second;
		e = cfl::stabilize(e, dw, dz);
	});
}

cfl_status cfl_pair_tau(const cfl_pair* p, int64_t* out) {
	if (!p || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = cfl::tau(p->pair.first, p->pair.second, p->slack); });
}

cfl_status cfl_pair_tau_prime(const cfl_pair* p, int64_t* out, int* out_minus_infinity) {
	if (!p || !out || !out_minus_infinity) {
		g_last_error = "null argument";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		cfl::TauPrime tp = cfl::tau_prime(p->pair.first, p->pair.second, p->slack);
		*out_minus_infinity = tp.minus_infinity ? 1 : 0;
		*out = tp.minus_infinity ? 0 : tp.value;
	});
}

cfl_status cfl_pair_nu(const cfl_pair* p, int64_t* out) {
	if (!p || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = cfl::nu(p->pair.first, p->pair.second, p->slack); });
}

cfl_status cfl_pair_v_k(const cfl_pair* p, int k, int64_t* out) {
	if (!p || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = cfl::v_k(p->pair.first, p->pair.second, k, p->slack); });
}

cfl_status cfl_pair_upsilon(const cfl_pair* p, cfl_rational t, cfl_rational* out) {
	if (!p || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] {
		cfl::Rational r = cfl::upsilon(p->pair.first, p->pair.second,
		                               cfl::Rational(t.num, t.den), p->slack);
		*out = {r.num, r.den};
	});
}

cfl_status cfl_pair_upsilon_curve(const cfl_pair* p, int grid_q, cfl_rational** out_ts,
                                  cfl_rational** out_values, size_t* out_count,
                                  cfl_rational** out_breakpoints,
                                  size_t* out_breakpoint_count) {
	if (!p || !out_ts || !out_values || !out_count || !out_breakpoints ||
	    !out_breakpoint_count) {
		g_last_error = "null argument";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		cfl::UpsilonCurve curve =
		    cfl::upsilon_curve(p->pair.first, p->pair.second, grid_q, p->slack);
		std::vector<cfl::Rational> ts, vals;
		for (const auto& [t, v] : curve.samples) { ts.push_back(t); vals.push_back(v); }
		*out_ts = dup_rationals(ts);
		*out_values = dup_rationals(vals);
		*out_count = ts.size();
		*out_breakpoints = dup_rationals(curve.breakpoints);
		*out_breakpoint_count = curve.breakpoints.size();
	});
}

cfl_status cfl_pair_kappa0(const cfl_pair* p, int which, int64_t* out) {
	if (!p || !out || (which != 1 && which != 2)) {
		g_last_error = "pair element selector must be 1 or 2";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		*out = cfl::kappa0(which == 1 ? p->pair.first : p->pair.second, p->slack);
	});
}

cfl_status cfl_pair_kappa(const cfl_pair* p, int64_t* out) {
	if (!p || !out) { g_last_error = "null argument"; return CFL_E_INVALID_ARGUMENT; }
	return guarded([&] { *out = cfl::kappa(p->pair.first, p->pair.second, p->slack); });
}

cfl_status cfl_verify(const char* scope, int slack, char** out_report_json, int* out_ok) {
	if (!scope || !out_report_json || !out_ok) {
		g_last_error = "null argument";
		return CFL_E_INVALID_ARGUMENT;
	}
	return guarded([&] {
		cfl::VerifyReport rep = cfl::verify(scope, slack);
		nlohmann::ordered_json j;
		j["scope"] = scope;
		nlohmann::ordered_json checks = nlohmann::ordered_json::array();
		for (const cfl::CheckResult& c : rep.checks) {
			nlohmann::ordered_json jc;
			jc["name"] = c.name;
			jc["pass"] = c.pass;
			if (!c.detail.empty()) jc["detail"] = c.detail;
			checks.push_back(jc);
		}
		j["checks"] = checks;
		j["passed"] = rep.passed();
		j["failed"] = rep.failed();
		*out_report_json = dup_string(j.dump(2));
		*out_ok = rep.ok() ? 1 : 0;
	});
}

}  // extern "C"
