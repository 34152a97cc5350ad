// Batch front end: reads a session from a file or from -c lines and prints the
// report. Links only the C interface.
#include "frobroot.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

bool read_all(std::istream& in, std::string& out) {
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return !in.bad();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobroot: test ideals via Frobenius roots over F_p"};
  std::string format = "text";
  std::string session_path;
  std::vector<std::string> lines;
  std::uint64_t max_e = 10;

  // The environment only replaces the built-in default; --max-e still wins.
  if (const char* env = std::getenv("FROBROOT_MAX_E")) {
    try {
      std::size_t used = 0;
      std::string v = env;
      max_e = std::stoull(v, &used);
      if (used != v.size() || v.find('-') != std::string::npos) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      std::cerr << "error: FROBROOT_MAX_E must be a nonnegative integer\n";
      return 1;
    }
  }

  app.add_option("session", session_path, "Session file ('-' for stdin)");
  app.add_option("-c,--command", lines, "Session line; may be repeated instead of a file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-e", max_e, "Largest Frobenius exponent e to try");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  std::string text;
  if (!lines.empty()) {
    if (!session_path.empty()) {
      std::cerr << "error: give either a session file or -c lines, not both\n";
      return 1;
    }
    for (const auto& l : lines) text += l + "\n";
  } else if (session_path.empty() || session_path == "-") {
    if (!read_all(std::cin, text)) {
      std::cerr << "error: cannot read stdin\n";
      return 1;
    }
  } else {
    std::ifstream in(session_path, std::ios::binary);
    if (!in || !read_all(in, text)) {
      std::cerr << "error: cannot read " << session_path << "\n";
      return 1;
    }
  }

  frob_session* session = nullptr;
  if (frob_status st = frob_session_parse(text.c_str(), &session); st != FROB_OK) {
    std::cerr << "error: " << frob_status_name(st) << ": " << frob_last_error() << "\n";
    return 1;
  }
  char* output = nullptr;
  int exit_code = 0;
  frob_status st = frob_session_run(session, format == "json" ? FROB_FORMAT_JSON : FROB_FORMAT_TEXT,
                                    max_e, &output, &exit_code);
  frob_session_free(session);
  if (st != FROB_OK) {
    std::cerr << "error: " << frob_status_name(st) << ": " << frob_last_error() << "\n";
    return 1;
  }
  std::cout << output;
  frob_string_free(output);
  return exit_code;
}
