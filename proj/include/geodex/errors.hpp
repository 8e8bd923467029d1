// Error taxonomy shared by all geodex modules. Every failure carries a
// machine-readable code plus a human-readable message; the CLI maps codes
// onto process exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace geodex {

enum class errc {
  bad_params,
  too_large,
  malformed_input,
  not_prime,
  reducible,
  division_by_zero,
  ambient_mismatch,
  unsupported_characteristic,
  not_a_square,
  not_bipartite,
  not_antipodal,
  bad_distance,
  disconnected,
  not_permutation,
  bad_flag,
  not_a_geodesic,
  opposite_ends,
  bad_type,
  not_distinct,
  not_singular,
  maximal_not_allowed,
  not_opposite_maximals,
  not_distance_regular,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw Error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

}  // namespace geodex
