#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "su11/state_builders.hpp"
#include "su11/wigner.hpp"

namespace su11 {

/// Schema or parameter problems in user-supplied inputs (CLI exit status 2).
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Doubles are emitted with 17 significant digits everywhere, so parsing and
/// re-emitting a file reproduces it byte for byte.
std::string format_double17(double v);

/// One row of a d-function table.
struct DFuncRow {
  std::int64_t twice_k;
  std::int64_t twice_mu;
  std::int64_t twice_mu_prime;
  double tau;
  double d_value;
};

void write_dfunc_csv(std::ostream& os, const std::vector<std::string>& comments,
                     const std::vector<DFuncRow>& rows);

/// Wigner grid CSV: comment lines, then
/// xi_re,xi_im,tau,chi,w_re,w_im,w_abs
void write_wigner_csv(std::ostream& os, const WignerField& field,
                      const std::vector<std::string>& extra_comments, bool with_timestamp);

/// Generic parsed CSV (comments + header + numeric rows), used for the
/// round-trip contract.
struct ParsedCsv {
  std::vector<std::string> comments;  // without the leading "# "
  std::string header;
  std::vector<std::vector<double>> rows;
};
ParsedCsv parse_csv(std::istream& is);
void write_csv(std::ostream& os, const ParsedCsv& csv);

/// StateSpec <-> JSON. Schema:
///   {"variant": "tmsv",                    "params": {"xi": [re, im]}, "cutoff": 60}
///   {"variant": "coherent_times_squeezed", "params": {"alpha": [re, im], "xi": [re, im]}}
///   {"variant": "su11_coherent",           "params": {"k": "3/2", "xi": [re, im]}}
///   {"variant": "raw_amplitudes",          "params": {"entries": [[na, nb, re, im], ...]}}
/// "cutoff" is optional; "k" accepts a number (2k integral) or a "p/2" string.
/// For coherent_times_squeezed, "xi" is the squeeze parameter of the operator
/// exponential (|xi| = squeeze strength), not a disk coordinate.
StateSpec parse_state_spec(const std::string& json_text);
StateSpec load_state_spec(const std::string& path);
std::string state_spec_to_json(const StateSpec& spec);

}  // namespace su11
