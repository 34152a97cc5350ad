#pragma once

#include "frobroot/test_ideal.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frobroot {

enum class Verb { gb, nf, fpow, froot, tau, certify, skoda, bskoda, strict, fpt, subadd };

const char* to_string(Verb verb) noexcept;

struct FactorRef {
  std::string name;
  RationalExponent exponent;
};

/// One parsed directive. Which fields are meaningful depends on the verb.
struct Command {
  Verb verb = Verb::gb;
  std::size_t line = 0;
  /// The directive as written, trimmed; echoed in reports and errors.
  std::string source;

  std::string name;                  // gb nf fpow froot skoda bskoda strict fpt subadd
  std::optional<Polynomial> poly;    // nf, certify
  std::vector<FactorRef> factors;    // tau, certify
  std::optional<Polynomial> d;       // tau, certify
  std::optional<FactorRef> b;        // skoda
  std::uint64_t e = 0;               // fpow, froot
  std::uint64_t n = 0;               // skoda, bskoda
  RationalExponent lo, hi, s, t;     // fpt, subadd
  std::uint64_t max_den = 0;         // fpt
};

struct Session {
  RingPtr ring;
  std::map<std::string, Ideal> bindings;
  std::vector<Command> commands;
};

/// Parses the line-oriented session grammar. Errors carry "line L, column C".
/// Throws syntax_error, unknown_name or duplicate_ring.
Session parse_session(std::string_view text);

enum class OutputFormat { text, json };

struct RunOptions {
  OutputFormat format = OutputFormat::text;
  std::uint64_t max_e = 10;
};

struct RunResult {
  std::string output;
  /// 0 success, 1 engine error, 2 truncation somewhere.
  int exit_code = 0;
};

/// Executes the commands in order. An engine error stops the run and is
/// reported with the offending command; truncation is reported and the run
/// continues.
RunResult run_session(const Session& session, const RunOptions& opts);

/// JSON text for a single tau result, in the same shape `run_session` uses.
std::string tau_result_json(const TestIdealResult& result);

}  // namespace frobroot
