#pragma once

#include <stdexcept>
#include <string>

namespace cfl {

enum class ErrorCode {
	invalid_argument,
	unknown_name,
	parse_error,
	validation_failed,
	shape_mismatch,
	non_homogeneous,
	search_cap_exceeded,
	genus_zero,
	infinite_slice,
	not_ultrametric,
	io_error,
	internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& msg)
	    : std::runtime_error(msg), code_(code) {}
	ErrorCode code() const { return code_; }

private:
	ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

}  // namespace cfl
