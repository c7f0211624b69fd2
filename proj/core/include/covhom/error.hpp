#ifndef COVHOM_ERROR_HPP
#define COVHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace covhom {

enum class errc {
  index_out_of_range,
  rank_mismatch,
  ambient_mismatch,
  infinite_group,
  not_surjective,
  not_in_kernel,
  not_compatible,
  not_torelli,
  not_square,
  singular,
  invalid_bound,
  invalid_params,
  depth_mismatch,
  bad_degree,
  no_witness,
  invalid_tower,
  not_p_group,
  disconnected,
  degenerate,
  parse_error,
  validation_error,
  internal_error,
};

/// Stable machine-readable code, e.g. NOT_TORELLI. Used by the CLI.
inline const char* errc_name(errc code) {
  switch (code) {
    case errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case errc::rank_mismatch: return "RANK_MISMATCH";
    case errc::ambient_mismatch: return "AMBIENT_MISMATCH";
    case errc::infinite_group: return "INFINITE_GROUP";
    case errc::not_surjective: return "NOT_SURJECTIVE";
    case errc::not_in_kernel: return "NOT_IN_KERNEL";
    case errc::not_compatible: return "NOT_COMPATIBLE";
    case errc::not_torelli: return "NOT_TORELLI";
    case errc::not_square: return "NOT_SQUARE";
    case errc::singular: return "SINGULAR";
    case errc::invalid_bound: return "INVALID_BOUND";
    case errc::invalid_params: return "INVALID_PARAMS";
    case errc::depth_mismatch: return "DEPTH_MISMATCH";
    case errc::bad_degree: return "BAD_DEGREE";
    case errc::no_witness: return "NO_WITNESS";
    case errc::invalid_tower: return "INVALID_TOWER";
    case errc::not_p_group: return "NOT_P_GROUP";
    case errc::disconnected: return "DISCONNECTED";
    case errc::degenerate: return "DEGENERATE";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::validation_error: return "VALIDATION_ERROR";
    case errc::internal_error: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace covhom

#endif
