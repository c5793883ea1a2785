#ifndef IFORGE_CLI_IO_HPP
#define IFORGE_CLI_IO_HPP

#include <cstdint>
#include <string>

#include "iforge/composite.hpp"
#include "iforge/matrix.hpp"
#include "iforge/oracle.hpp"

namespace iforge::cli {

// exit-code contract: 0 success/true, 1 negative answer, 2 input error,
// 3 internal invariant breach
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr std::uint64_t kDefaultFuzzSeed = 0x1f0421a5eedULL;

struct Problem {
  Field field;
  Scalar alpha;
  Scalar beta;
  Matrix matrix;
};

Problem parse_problem(const std::string& json_text);
std::string render_problem(const Problem& problem);

/// Certificate files carry only the two matrices; scalars and field come
/// from the problem they certify.
Certificate parse_certificate(const std::string& json_text, const Problem& problem);
std::string render_certificate(const Certificate& cert);

std::string render_decision(const Decision& decision);
Decision parse_decision(const std::string& json_text);

std::string render_verify_report(const VerifyReport& report);

std::string render_canon_report(const Problem& problem);

/// "Q", "GF7", "GF:7" or "GF(7)".
Field parse_field_flag(const std::string& text);

struct FuzzOptions {
  Field field;
  std::size_t n;
  Scalar alpha;
  Scalar beta;
  OracleMode mode;
  std::uint64_t seed;
  std::size_t samples;
};

/// Runs oracle comparisons and prints one line per case plus a JSON
/// summary; returns the process exit code.
int run_fuzz(const FuzzOptions& options);

/// Full command-line entry point.
int run_cli(int argc, char** argv);

}  // namespace iforge::cli

#endif
