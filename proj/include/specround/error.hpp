#pragma once

#include <stdexcept>
#include <string>

namespace specround {

/// Error categories shared between the C++ core and the C API status codes.
enum class ErrorCode {
    invalid_argument = 1,
    k_too_large,
    nonfinite_input,
    isolated_vertex,
    q_out_of_range,
    k_out_of_range,
    length_mismatch,
    empty_data,
    single_cluster,
    nonfinite_likelihood,
    solver_failure,
    io_error,
    parse_error,
    internal_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace specround
