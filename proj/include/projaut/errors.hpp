#pragma once

#include <stdexcept>
#include <string>

namespace projaut {

// Machine-readable failure codes. The CLI maps these to structured error
// objects on stderr and exit status 1; library users can switch on them.
enum class errc {
  division_by_zero,
  incompatible_rings,
  pole_at_center,
  singular_matrix,
  division_by_zero_constant_term,
  nonzero_constant_term,
  not_invertible,
  not_locally_injective,
  insufficient_order,
  dimension_mismatch,
  fuchsian_translation_nonzero,
  no_rotation_order,
  unsupported_ring,
  excluded_case,
  negative_dimension,
  not_hyperbolic,
  unbounded_enumeration,
  incompatible_multiplier,
  disconnected,
  genus_too_small,
  group_too_large,
  bad_input,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace projaut
