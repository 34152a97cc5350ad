#include "frobroot/session.hpp"

#include "frobroot/error.hpp"
#include "frobroot/frobenius.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

namespace frobroot {

using nlohmann::ordered_json;

const char* to_string(Verb verb) noexcept {
  switch (verb) {
    case Verb::gb: return "gb";
    case Verb::nf: return "nf";
    case Verb::fpow: return "fpow";
    case Verb::froot: return "froot";
    case Verb::tau: return "tau";
    case Verb::certify: return "certify";
    case Verb::skoda: return "skoda";
    case Verb::bskoda: return "bskoda";
    case Verb::strict: return "strict";
    case Verb::fpt: return "fpt";
    case Verb::subadd: return "subadd";
  }
  return "?";
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based within the line
};

// One source line with the helpers the directive parsers share.
class Line {
 public:
  Line(std::size_t number, std::string_view raw) : number_(number), raw_(raw) {
    std::size_t i = 0;
    while (i < raw_.size()) {
      while (i < raw_.size() && std::isspace(static_cast<unsigned char>(raw_[i]))) ++i;
      if (i >= raw_.size()) break;
      std::size_t start = i;
      while (i < raw_.size() && !std::isspace(static_cast<unsigned char>(raw_[i]))) ++i;
      tokens_.push_back({raw_.substr(start, i - start), start + 1});
    }
  }

  std::size_t number() const { return number_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  std::string trimmed() const {
    if (tokens_.empty()) return {};
    std::size_t b = tokens_.front().column - 1;
    std::size_t e = tokens_.back().column - 1 + tokens_.back().text.size();
    return std::string(raw_.substr(b, e - b));
  }
  // Source text from token `first` through token `last` inclusive.
  std::string_view span(std::size_t first, std::size_t last) const {
    std::size_t b = tokens_[first].column - 1;
    std::size_t e = tokens_[last].column - 1 + tokens_[last].text.size();
    return raw_.substr(b, e - b);
  }

  [[noreturn]] void error(std::size_t column, const std::string& msg,
                          ErrorCode code = ErrorCode::syntax_error) const {
    fail(code, "line " + std::to_string(number_) + ", column " + std::to_string(column) + ": " + msg);
  }
  [[noreturn]] void error_at(std::size_t token, const std::string& msg,
                             ErrorCode code = ErrorCode::syntax_error) const {
    error(token < tokens_.size() ? tokens_[token].column : raw_.size() + 1, msg, code);
  }

 private:
  std::size_t number_;
  std::string_view raw_;
  std::vector<Token> tokens_;
};

std::uint64_t parse_uint(const Line& line, std::size_t tok, std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    line.error_at(tok, "expected a nonnegative integer, got '" + std::string(text) + "'");
  }
  return v;
}

RationalExponent parse_rational(const Line& line, std::size_t tok, std::string_view text) {
  try {
    return RationalExponent::parse(text);
  } catch (const Error& e) {
    line.error_at(tok, e.what(), e.code());
  }
}

// Value of a `key=value` token; errors if the key differs.
std::string_view keyed(const Line& line, std::size_t tok, std::string_view key) {
  if (tok >= line.tokens().size()) line.error_at(tok, "missing " + std::string(key) + "=");
  std::string_view t = line.tokens()[tok].text;
  if (t.size() <= key.size() || t.substr(0, key.size()) != key || t[key.size()] != '=') {
    line.error_at(tok, "expected " + std::string(key) + "=<value>, got '" + std::string(t) + "'");
  }
  return t.substr(key.size() + 1);
}

class Parser {
 public:
  Session parse(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view raw = text.substr(pos, nl - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      ++number;
      Line line(number, raw);
      if (!line.tokens().empty()) directive(line);
      pos = nl + 1;
    }
    if (!session_.ring) fail(ErrorCode::syntax_error, "ring must be declared first");
    return std::move(session_);
  }

 private:
  void directive(const Line& line) {
    std::string_view head = line.tokens()[0].text;
    if (head == "ring") return ring(line);
    if (!session_.ring) line.error(line.tokens()[0].column, "ring must be declared first");
    if (head == "ideal") return ideal(line);
    command(line);
  }

  void ring(const Line& line) {
    if (session_.ring) line.error_at(0, "ring declared twice", ErrorCode::duplicate_ring);
    std::optional<std::uint64_t> p;
    std::vector<std::string> vars;
    MonomialOrder order;
    for (std::size_t i = 1; i < line.tokens().size(); ++i) {
      std::string_view t = line.tokens()[i].text;
      auto eq = t.find('=');
      if (eq == std::string_view::npos) line.error_at(i, "expected key=value");
      std::string_view key = t.substr(0, eq), value = t.substr(eq + 1);
      if (key == "p") {
        p = parse_uint(line, i, value);
        if (!is_prime(*p)) line.error_at(i, "p must be prime");
        if (*p > 2147483647u) line.error_at(i, "p must be below 2^31");
      } else if (key == "vars") {
        std::size_t start = 0;
        while (start <= value.size()) {
          auto comma = value.find(',', start);
          if (comma == std::string_view::npos) comma = value.size();
          std::string name(value.substr(start, comma - start));
          if (!is_valid_variable_name(name)) line.error_at(i, "invalid variable name '" + name + "'");
          for (const auto& v : vars) {
            if (v == name) line.error_at(i, "variable '" + name + "' repeated");
          }
          vars.push_back(std::move(name));
          start = comma + 1;
        }
      } else if (key == "order") {
        if (value == "lex") order.kind = OrderKind::lex;
        else if (value == "grlex") order.kind = OrderKind::grlex;
        else if (value == "grevlex") order.kind = OrderKind::grevlex;
        else line.error_at(i, "order must be lex, grlex or grevlex");
      } else {
        line.error_at(i, "unknown ring key '" + std::string(key) + "'");
      }
    }
    if (!p) line.error_at(line.tokens().size(), "ring needs p=<prime>");
    if (vars.empty()) line.error_at(line.tokens().size(), "ring needs vars=<names>");
    session_.ring = Ring::create(*p, std::move(vars), order);
  }

  void ideal(const Line& line) {
    const auto& toks = line.tokens();
    if (toks.size() < 2) line.error_at(1, "expected 'ideal <name> = <poly>, ...'");
    std::string_view rest = line.span(1, toks.size() - 1);
    auto eq = rest.find('=');
    if (eq == std::string_view::npos) line.error_at(1, "expected 'ideal <name> = <poly>, ...'");
    std::string_view name_view = rest.substr(0, eq);
    while (!name_view.empty() && std::isspace(static_cast<unsigned char>(name_view.back()))) {
      name_view.remove_suffix(1);
    }
    std::string name(name_view);
    if (!is_valid_variable_name(name)) line.error_at(1, "invalid ideal name '" + name + "'");
    if (session_.ring->variable_index(name)) line.error_at(1, "ideal name '" + name + "' is a variable");
    if (session_.bindings.count(name)) line.error_at(1, "ideal '" + name + "' already defined");
    const std::size_t body_column = toks[1].column + eq + 1;
    std::string_view body = rest.substr(eq + 1);
    if (body.find_first_not_of(" \t") == std::string_view::npos) {
      line.error(body_column, "ideal needs at least one generator");
    }
    try {
      session_.bindings.emplace(name, parse_ideal(session_.ring, body));
    } catch (const Error& e) {
      line.error(body_column, e.what(), e.code());
    }
  }

  Polynomial poly(const Line& line, std::size_t first, std::size_t last) {
    if (first > last || last >= line.tokens().size()) line.error_at(first, "expected a polynomial");
    try {
      return parse_polynomial(session_.ring, line.span(first, last));
    } catch (const Error& e) {
      line.error_at(first, e.what(), e.code());
    }
  }

  std::string bound_name(const Line& line, std::size_t tok, std::string_view name) {
    if (tok >= line.tokens().size()) line.error_at(tok, "expected an ideal name");
    if (!session_.bindings.count(std::string(name))) {
      line.error_at(tok, "unknown ideal '" + std::string(name) + "'", ErrorCode::unknown_name);
    }
    return std::string(name);
  }

  FactorRef factor(const Line& line, std::size_t tok) {
    std::string_view t = line.tokens()[tok].text;
    auto caret = t.find('^');
    if (caret == std::string_view::npos) return {bound_name(line, tok, t), RationalExponent(1)};
    return {bound_name(line, tok, t.substr(0, caret)), parse_rational(line, tok, t.substr(caret + 1))};
  }

  // Factors from token `first` up to an optional trailing d=<poly>.
  void factors_and_d(const Line& line, std::size_t first, Command& cmd) {
    const auto& toks = line.tokens();
    std::size_t end = toks.size();
    for (std::size_t i = first; i < toks.size(); ++i) {
      if (toks[i].text.substr(0, 2) == "d=") {
        end = i;
        break;
      }
    }
    if (end == first) line.error_at(first, "expected at least one factor <name>^<rat>");
    for (std::size_t i = first; i < end; ++i) cmd.factors.push_back(factor(line, i));
    if (end < toks.size()) {
      std::string_view rest = line.span(end, toks.size() - 1).substr(2);
      if (rest.empty()) line.error_at(end, "d= needs a polynomial");
      try {
        cmd.d = parse_polynomial(session_.ring, rest);
      } catch (const Error& e) {
        line.error_at(end, e.what(), e.code());
      }
      if (cmd.d->is_zero()) line.error_at(end, "d must be nonzero");
    }
  }

  void expect_count(const Line& line, std::size_t count) {
    if (line.tokens().size() > count) line.error_at(count, "unexpected argument");
    if (line.tokens().size() < count) line.error_at(line.tokens().size(), "missing argument");
  }

  void command(const Line& line) {
    const auto& toks = line.tokens();
    std::string_view verb = toks[0].text;
    Command cmd;
    cmd.line = line.number();
    cmd.source = line.trimmed();
    auto name_at = [&](std::size_t tok) {
      return bound_name(line, tok, tok < toks.size() ? toks[tok].text : std::string_view{});
    };
    if (verb == "gb") {
      expect_count(line, 2);
      cmd.name = name_at(1);
    } else if (verb == "nf") {
      cmd.verb = Verb::nf;
      if (toks.size() < 4 || toks[toks.size() - 2].text != "in") {
        line.error_at(toks.size(), "expected 'nf <poly> in <name>'");
      }
      cmd.poly = poly(line, 1, toks.size() - 3);
      cmd.name = name_at(toks.size() - 1);
    } else if (verb == "fpow" || verb == "froot") {
      cmd.verb = verb == "fpow" ? Verb::fpow : Verb::froot;
      expect_count(line, 3);
      cmd.name = name_at(1);
      cmd.e = parse_uint(line, 2, keyed(line, 2, "e"));
    } else if (verb == "tau") {
      cmd.verb = Verb::tau;
      factors_and_d(line, 1, cmd);
    } else if (verb == "certify") {
      cmd.verb = Verb::certify;
      std::size_t in = 0;
      for (std::size_t i = 2; i + 1 < toks.size(); ++i) {
        if (toks[i].text == "in" && toks[i + 1].text == "tau") {
          in = i;
          break;
        }
      }
      if (in == 0) line.error_at(toks.size(), "expected 'certify <poly> in tau <factors>'");
      cmd.poly = poly(line, 1, in - 1);
      factors_and_d(line, in + 2, cmd);
    } else if (verb == "skoda") {
      cmd.verb = Verb::skoda;
      cmd.name = name_at(1);
      std::size_t next = 2;
      if (next < toks.size() && toks[next].text.substr(0, 2) == "b=") {
        std::string_view arg = keyed(line, next, "b");
        auto caret = arg.find('^');
        if (caret == std::string_view::npos) {
          cmd.b = FactorRef{bound_name(line, next, arg), RationalExponent(1)};
        } else {
          cmd.b = FactorRef{bound_name(line, next, arg.substr(0, caret)),
                            parse_rational(line, next, arg.substr(caret + 1))};
        }
        ++next;
      }
      cmd.n = parse_uint(line, next, keyed(line, next, "n"));
      expect_count(line, next + 1);
    } else if (verb == "bskoda") {
      cmd.verb = Verb::bskoda;
      expect_count(line, 3);
      cmd.name = name_at(1);
      cmd.n = parse_uint(line, 2, keyed(line, 2, "n"));
    } else if (verb == "strict") {
      cmd.verb = Verb::strict;
      expect_count(line, 2);
      cmd.name = name_at(1);
    } else if (verb == "fpt") {
      cmd.verb = Verb::fpt;
      expect_count(line, 5);
      cmd.name = name_at(1);
      cmd.lo = parse_rational(line, 2, keyed(line, 2, "lo"));
      cmd.hi = parse_rational(line, 3, keyed(line, 3, "hi"));
      cmd.max_den = parse_uint(line, 4, keyed(line, 4, "maxden"));
    } else if (verb == "subadd") {
      cmd.verb = Verb::subadd;
      expect_count(line, 4);
      cmd.name = name_at(1);
      cmd.s = parse_rational(line, 2, keyed(line, 2, "s"));
      cmd.t = parse_rational(line, 3, keyed(line, 3, "t"));
    } else {
      line.error_at(0, "unknown directive '" + std::string(verb) + "'");
    }
    session_.commands.push_back(std::move(cmd));
  }

  Session session_;
};

// ---- running -------------------------------------------------------------

ordered_json ideal_json(const Ideal& ideal) { return generator_strings(ideal); }

std::string factors_label(const std::vector<FactorRef>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += ' ';
    out += f.name + "^" + f.exponent.to_string();
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(const Session& s, const RunOptions& o) : session_(s), opts_(o) {}

  RunResult run() {
    ordered_json results = ordered_json::array();
    std::ostringstream text;
    ordered_json error = nullptr;
    int exit_code = 0;
    for (const auto& cmd : session_.commands) {
      Outcome out;
      try {
        out = execute(cmd);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::truncated) {
          out.truncated = true;
          out.text = std::string(to_string(cmd.verb)) + ": truncated: " + e.what();
          out.json = {{"truncated", true}, {"message", e.what()}};
        } else {
          text << "error: line " << cmd.line << ": " << cmd.source << "\n  " << to_string(e.code())
               << ": " << e.what() << "\n";
          error = {{"line", cmd.line},
                   {"command", cmd.source},
                   {"code", to_string(e.code())},
                   {"message", e.what()}};
          exit_code = 1;
          break;
        }
      }
      if (out.truncated) exit_code = 2;
      text << out.text << "\n";
      ordered_json entry = {{"line", cmd.line}, {"command", cmd.source}, {"verb", to_string(cmd.verb)}};
      entry.update(out.json);
      results.push_back(std::move(entry));
    }
    RunResult r;
    r.exit_code = exit_code;
    if (opts_.format == OutputFormat::text) {
      r.output = text.str();
    } else {
      const Ring& ring = *session_.ring;
      ordered_json doc = {
          {"ring",
           {{"p", ring.characteristic()}, {"vars", ring.variables()}, {"order", to_string(ring.order().kind)}}},
          {"max_e", opts_.max_e},
          {"results", std::move(results)},
          {"error", std::move(error)},
          {"exit_code", exit_code}};
      r.output = doc.dump(2) + "\n";
    }
    return r;
  }

 private:
  struct Outcome {
    std::string text;
    ordered_json json = ordered_json::object();
    bool truncated = false;
  };

  const Ideal& bound(const std::string& name) const { return session_.bindings.at(name); }

  TauOptions tau_options(const std::optional<Polynomial>& d = std::nullopt) const {
    TauOptions t;
    t.max_e = opts_.max_e;
    t.d = d;
    return t;
  }

  std::vector<ExponentedIdeal> factors(const std::vector<FactorRef>& refs) const {
    std::vector<ExponentedIdeal> out;
    for (const auto& r : refs) out.push_back({bound(r.name), r.exponent});
    return out;
  }

  Outcome execute(const Command& cmd) {
    switch (cmd.verb) {
      case Verb::gb: return gb(cmd);
      case Verb::nf: return nf(cmd);
      case Verb::fpow:
      case Verb::froot: return frobenius(cmd);
      case Verb::tau: return tau_cmd(cmd);
      case Verb::certify: return certify(cmd);
      case Verb::skoda: return skoda(cmd);
      case Verb::bskoda: return bskoda(cmd);
      case Verb::strict: return strict(cmd);
      case Verb::fpt: return fpt(cmd);
      case Verb::subadd: return subadd(cmd);
    }
    fail(ErrorCode::invalid_argument, "unknown verb");
  }

  Outcome gb(const Command& cmd) {
    const Ideal& a = bound(cmd.name);
    return {"gb(" + cmd.name + ") = " + to_string(a), {{"basis", ideal_json(a)}}};
  }

  Outcome nf(const Command& cmd) {
    const Ideal& a = bound(cmd.name);
    Polynomial r = normal_form(*cmd.poly, a.groebner_basis());
    return {"nf(" + to_string(*cmd.poly) + ", " + cmd.name + ") = " + to_string(r),
            {{"normal_form", to_string(r)}, {"member", r.is_zero()}}};
  }

  Outcome frobenius(const Command& cmd) {
    const Ideal& a = bound(cmd.name);
    Ideal out = cmd.verb == Verb::fpow ? frobenius_power(a, cmd.e) : frobenius_root(a, cmd.e);
    return {std::string(to_string(cmd.verb)) + "(" + cmd.name + ", e=" + std::to_string(cmd.e) +
                ") = " + to_string(out),
            {{"e", cmd.e}, {"ideal", ideal_json(out)}}};
  }

  std::string tau_label(const Command& cmd) const {
    std::string label = "tau(" + factors_label(cmd.factors);
    if (cmd.d) label += "; d=" + to_string(*cmd.d);
    return label + ")";
  }

  Outcome tau_cmd(const Command& cmd) {
    auto f = factors(cmd.factors);
    TestIdealResult r = tau(f, tau_options(cmd.d));
    std::string line = tau_label(cmd) + " = " + to_string(r.tau);
    if (r.lower_bound) line += " [lower bound]";
    if (r.truncated) line += " [truncated at e=" + std::to_string(r.stabilized_at) + "]";
    return {line, ordered_json::parse(tau_result_json(r)), r.truncated};
  }

  Outcome certify(const Command& cmd) {
    auto f = factors(cmd.factors);
    auto res = certify_membership(*cmd.poly, f, tau_options(cmd.d));
    std::string head = "certify(" + to_string(*cmd.poly) + " in " + tau_label(cmd) + ")";
    if (auto* nm = std::get_if<NotMember>(&res)) {
      return {head + " = not a member; tau = " + to_string(nm->tau.tau),
              {{"member", false}, {"tau", ideal_json(nm->tau.tau)}, {"stabilized_at", nm->tau.stabilized_at}}};
    }
    const auto& cert = std::get<Certificate>(res);
    std::string text = head + " = member at e1=" + std::to_string(cert.e1);
    ordered_json steps = ordered_json::array();
    for (const auto& step : cert.per_e) {
      std::vector<std::string> basis, cof;
      for (const auto& b : step.basis) basis.push_back(to_string(b));
      for (const auto& c : step.cofactors) cof.push_back(to_string(c));
      text += "\n  e=" + std::to_string(step.e) + ": S = " + to_string(step.ideal) + "; piece = " +
              to_string(step.piece);
      steps.push_back({{"e", step.e}, {"basis", basis}, {"cofactors", cof}, {"piece", to_string(step.piece)}});
    }
    const bool ok = cert.verify();
    text += std::string("\n  reconstruction: ") + (ok ? "exact" : "FAILED");
    return {text, {{"member", true}, {"e1", cert.e1}, {"per_e", steps}, {"verified", ok}}};
  }

  Outcome skoda(const Command& cmd) {
    const Ideal& a = bound(cmd.name);
    Ideal b = cmd.b ? bound(cmd.b->name) : Ideal::unit(a.ring());
    RationalExponent t = cmd.b ? cmd.b->exponent : RationalExponent(0);
    std::string bl = cmd.b ? cmd.b->name + "^" + t.to_string() : std::string("(1)^0");
    SkodaReport rep = skoda_check(a, b, t, a.num_generators(), cmd.n, tau_options());
    std::string text;
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      if (!text.empty()) text += "\n";
      text += "skoda(" + cmd.name + "; b=" + bl + ", l=" + std::to_string(rep.l) + ") k=" +
              std::to_string(row.k) + ": " + to_string(row.lhs) + (row.equal ? " = " : " != ") +
              to_string(row.rhs);
      rows.push_back({{"k", row.k}, {"lhs", ideal_json(row.lhs)}, {"rhs", ideal_json(row.rhs)}, {"equal", row.equal}});
    }
    return {text, {{"l", rep.l}, {"rows", rows}, {"holds", rep.all_equal()}}};
  }

  Outcome bskoda(const Command& cmd) {
    const Ideal& a = bound(cmd.name);
    BrianconSkodaReport rep = briancon_skoda_check(a, a.num_generators(), cmd.n, tau_options());
    std::string text;
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
      if (!text.empty()) text += "\n";
      text += "bskoda(" + cmd.name + "; l=" + std::to_string(rep.l) + ") n=" + std::to_string(row.n) +
              ": tau = " + to_string(row.tau) + ", power = " + to_string(row.power) + ": " +
              to_string(row.relation) + (row.holds ? " (holds)" : " (FAILS)");
      rows.push_back({{"n", row.n},
                      {"tau", ideal_json(row.tau)},
                      {"power", ideal_json(row.power)},
                      {"relation", to_string(row.relation)},
                      {"holds", row.holds}});
    }
    return {text, {{"l", rep.l}, {"rows", rows}, {"holds", rep.all_hold()}}};
  }

  Outcome strict(const Command& cmd) {
    StrictnessReport rep = strictness_check(bound(cmd.name), tau_options());
    std::string text = "strict(" + cmd.name + "): tau = " + to_string(rep.tau) +
                       "; contained: " + yes_no(rep.contained) + "; strict: " + yes_no(rep.strict) +
                       "; colon = " + to_string(rep.colon) + " contained: " + yes_no(rep.colon_contained);
    if (rep.witness) text += "; witness " + to_string(*rep.witness);
    ordered_json j = {{"tau", ideal_json(rep.tau)},
                      {"colon", ideal_json(rep.colon)},
                      {"contained", rep.contained},
                      {"strict", rep.strict},
                      {"colon_contained", rep.colon_contained},
                      {"witness", rep.witness ? ordered_json(to_string(*rep.witness)) : ordered_json(nullptr)},
                      {"holds", rep.holds()}};
    return {text, j};
  }

  Outcome fpt(const Command& cmd) {
    ThresholdResult r = threshold_search(bound(cmd.name), cmd.lo, cmd.hi, cmd.max_den, tau_options());
    std::string text = "fpt(" + cmd.name + ") in [" + r.lower.to_string() + ", " + r.upper.to_string() +
                       "]" + (r.exact ? " (exact" : " (bracket") + ", maxden=" + std::to_string(cmd.max_den) + ")";
    return {text,
            {{"lower", r.lower.to_string()},
             {"upper", r.upper.to_string()},
             {"exact", r.exact},
             {"probe", r.probe ? ordered_json(r.probe->to_string()) : ordered_json(nullptr)},
             {"tau_below", ideal_json(r.tau_lower)},
             {"tau_at_upper", ideal_json(r.tau_upper)},
             {"evaluations", r.evaluations}}};
  }

  Outcome subadd(const Command& cmd) {
    SubadditivityReport r = subadditivity_check(bound(cmd.name), cmd.s, cmd.t, tau_options());
    std::string text = "subadd(" + cmd.name + "; s=" + cmd.s.to_string() + ", t=" + cmd.t.to_string() +
                       "): " + to_string(r.lhs) + (r.holds ? " in " : " not in ") + to_string(r.rhs);
    return {text, {{"lhs", ideal_json(r.lhs)}, {"rhs", ideal_json(r.rhs)}, {"holds", r.holds}}};
  }

  const Session& session_;
  const RunOptions& opts_;
};

}  // namespace

Session parse_session(std::string_view text) { return Parser().parse(text); }

RunResult run_session(const Session& session, const RunOptions& opts) {
  return Runner(session, opts).run();
}

std::string tau_result_json(const TestIdealResult& result) {
  ordered_json chain = ordered_json::array();
  for (const auto& c : result.chain) {
    chain.push_back({{"e", c.e}, {"term", ideal_json(c.term)}, {"partial_sum", ideal_json(c.partial_sum)}});
  }
  ordered_json j = {{"tau", ideal_json(result.tau)},
                    {"stabilized_at", result.stabilized_at},
                    {"truncated", result.truncated},
                    {"lower_bound", result.lower_bound},
                    {"chain", std::move(chain)}};
  return j.dump();
}

}  // namespace frobroot
