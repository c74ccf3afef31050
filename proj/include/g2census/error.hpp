#pragma once

#include <stdexcept>
#include <string>

namespace g2census {

enum class Errc {
    degenerate_lattice,
    bad_signature,
    not_full_rank,
    parse_error,
    validation_error,
    no_solution,
    ambiguous_solution,
    check_failed,
    k_not_one,
    hypotheses_not_met,
    non_integral,
    not_primitive_ample,
    signature_fail,
    odd_d,
    inconsistent,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace g2census
