#include "textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace cfl {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& what) {
	fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
	std::vector<std::string> out;
	std::istringstream in(line);
	std::string t;
	while (in >> t) out.push_back(t);
	return out;
}

bool valid_id(const std::string& s) {
	if (s.empty()) return false;
	for (char c : s)
		if (std::isspace((unsigned char)c) || c == '*' || c == '+' || c == '=' || c == '#')
			return false;
	return true;
}

int parse_int(const std::string& s, int line, const char* what) {
	try {
		std::size_t used = 0;
		int v = std::stoi(s, &used);
		if (used != s.size()) throw std::invalid_argument("trailing");
		return v;
	} catch (const std::exception&) {
		syntax_error(line, std::string("expected integer for ") + what + ", got '" + s + "'");
	}
}

// One summand "<mono>*<id>": everything up to the last '*' is the monomial,
// the rest is the generator id.
std::pair<Mono, std::string> parse_summand(const std::string& s, int line) {
	std::size_t star = s.rfind('*');
	if (star == std::string::npos)
		syntax_error(line, "summand '" + s + "' must have the form <mono>*<id>");
	std::string mono_text = s.substr(0, star);
	std::string id = s.substr(star + 1);
	if (!valid_id(id)) syntax_error(line, "bad generator id '" + id + "'");
	Poly p;
	try {
		p = Poly::parse(mono_text);
	} catch (const std::exception& ex) {
		syntax_error(line, std::string("bad monomial '") + mono_text + "': " + ex.what());
	}
	if (!p.is_monomial())
		syntax_error(line, "coefficient '" + mono_text + "' must be a single monomial");
	return {p.terms()[0], id};
}

}  // namespace

ComplexPtr parse_complex(const std::string& text) {
	std::istringstream in(text);
	std::string line;
	int lineno = 0;

	std::string name;
	Ring ring = Ring::uv_minus;
	bool have_header = false;
	std::vector<Generator> gens;
	struct RawDiff { int line; std::string src; std::vector<std::pair<Mono, std::string>> terms; };
	std::vector<RawDiff> diffs;

	while (std::getline(in, line)) {
		++lineno;
		std::vector<std::string> tok = tokens(line);
		if (tok.empty() || tok[0][0] == '#') continue;
		if (tok[0] == "complex") {
			if (have_header) syntax_error(lineno, "duplicate complex header");
			if (tok.size() != 4 || tok[2] != "flavor")
				syntax_error(lineno, "expected: complex <name> flavor <minus|infinity>");
			if (!valid_id(tok[1])) syntax_error(lineno, "bad complex name '" + tok[1] + "'");
			name = tok[1];
			if (tok[3] == "minus") ring = Ring::uv_minus;
			else if (tok[3] == "infinity") ring = Ring::uv_infinity;
			else syntax_error(lineno, "unknown flavor '" + tok[3] + "'");
			have_header = true;
		} else if (tok[0] == "gen") {
			if (!have_header) syntax_error(lineno, "gen before complex header");
			if (tok.size() != 6 || tok[2] != "grw" || tok[4] != "A")
				syntax_error(lineno, "expected: gen <id> grw <int> A <int>");
			if (!valid_id(tok[1])) syntax_error(lineno, "bad generator id '" + tok[1] + "'");
			for (const Generator& g : gens)
				if (g.name == tok[1]) syntax_error(lineno, "duplicate generator '" + tok[1] + "'");
			gens.push_back(Generator{tok[1], parse_int(tok[3], lineno, "grw"),
			                         parse_int(tok[5], lineno, "A")});
		} else if (tok[0] == "d") {
			if (!have_header) syntax_error(lineno, "d before complex header");
			if (tok.size() < 4 || tok[2] != "=")
				syntax_error(lineno, "expected: d <id> = <mono>*<id> [+ ...]");
			RawDiff rd;
			rd.line = lineno;
			rd.src = tok[1];
			bool expect_term = true;
			for (std::size_t i = 3; i < tok.size(); ++i) {
				if (expect_term) {
					rd.terms.push_back(parse_summand(tok[i], lineno));
					expect_term = false;
				} else {
					if (tok[i] != "+") syntax_error(lineno, "expected '+', got '" + tok[i] + "'");
					expect_term = true;
				}
			}
			if (expect_term) syntax_error(lineno, "dangling '+'");
			diffs.push_back(std::move(rd));
		} else {
			syntax_error(lineno, "unknown directive '" + tok[0] + "'");
		}
	}
	if (!have_header) syntax_error(lineno, "missing complex header");

	auto c = std::make_shared<KnotComplex>(name, ring, std::move(gens));
	for (const RawDiff& rd : diffs) {
		int src = c->gen_index(rd.src);
		if (src < 0) syntax_error(rd.line, "unknown generator '" + rd.src + "' in d-line");
		for (const auto& [m, tgt_name] : rd.terms) {
			int tgt = c->gen_index(tgt_name);
			if (tgt < 0) syntax_error(rd.line, "unknown generator '" + tgt_name + "' in d-line");
			c->add_diff(src, tgt, Poly(m));
		}
	}
	ValidationReport rep = c->validate();
	if (!rep.ok()) fail(ErrorCode::validation_failed, rep.str());
	return c;
}

ComplexPtr parse_complex_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) fail(ErrorCode::io_error, "cannot open '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_complex(buf.str());
}

std::string serialize_complex(const KnotComplex& c) {
	Ring r = c.ring();
	if (r != Ring::uv_minus && r != Ring::uv_infinity)
		fail(ErrorCode::invalid_argument, "only F2[U,V] complexes serialize to the text format");
	std::ostringstream out;
	out << "complex " << c.name() << " flavor "
	    << (r == Ring::uv_minus ? "minus" : "infinity") << "\n";
	for (const Generator& g : c.gens())
		out << "gen " << g.name << " grw " << g.gr_w << " A " << g.alexander << "\n";
	for (int s = 0; s < c.size(); ++s) {
		const auto& row = c.diff_row(s);
		if (row.empty()) continue;
		out << "d " << c.gen(s).name << " =";
		bool first = true;
		for (const auto& [t, p] : row) {
			for (const Mono& m : p.terms()) {
				out << (first ? " " : " + ") << mono_str(m) << "*" << c.gen(t).name;
				first = false;
			}
		}
		out << "\n";
	}
	return out.str();
}

}  // namespace cfl
