#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subshift/errors.hpp"
#include "subshift/spec.hpp"

namespace subshift {

/// Named B-families: "prime-squares:CUTOFF", "primes:CUTOFF",
/// "progression:A,R:CUTOFF" (the set {A k + R : k >= 1} up to CUTOFF).
inline std::vector<std::int64_t> parse_b_family(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    throw input_error("bad B-family '" + std::string(text) + "': " + why);
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad("expected NAME:ARGS");
  const std::string_view name = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  const auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) bad("not an integer: '" + std::string(s) + "'");
    return v;
  };
  if (name == "prime-squares") return family_prime_squares(to_int(args));
  if (name == "primes") return family_primes(to_int(args));
  if (name == "progression") {
    const auto comma = args.find(',');
    const auto colon2 = args.find(':');
    if (comma == std::string_view::npos || colon2 == std::string_view::npos || comma > colon2)
      bad("expected progression:A,R:CUTOFF");
    return family_progression(to_int(args.substr(0, comma)),
                              to_int(args.substr(comma + 1, colon2 - comma - 1)),
                              to_int(args.substr(colon2 + 1)));
  }
  bad("unknown family name '" + std::string(name) + "'");
  return {};
}

namespace detail {

struct SpecLine {
  int number;
  std::string key;
  std::string value;
};

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] inline void parse_fail(int line, const std::string& field, const std::string& why) {
  throw spec_parse_error("spec parse error at line " + std::to_string(line) + ", field '" +
                         field + "': " + why);
}

inline std::int64_t parse_int(const SpecLine& l, const std::string& field,
                              const std::string& token) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(token, &used);
    if (used != token.size()) parse_fail(l.number, field, "trailing characters in '" + token + "'");
    return v;
  } catch (const spec_parse_error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(l.number, field, "not an integer: '" + token + "'");
  }
}

inline double parse_double(const SpecLine& l, const std::string& field, const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) parse_fail(l.number, field, "trailing characters in '" + token + "'");
    return v;
  } catch (const spec_parse_error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(l.number, field, "not a number: '" + token + "'");
  }
}

}  // namespace detail

/// Parses the structured-text spec format:
///
///   kind: sft | sofic | bfree | sturmian | periodic | full
///   forbidden: 00 111            (sft; omit or leave empty for none)
///   vertices: 3                  (sofic)
///   edge: FROM TO LABEL          (sofic, repeated)
///   b: 4 9 25 49                 (bfree; or b-family: prime-squares:100)
///   window: 1000000              (bfree, sturmian)
///   alpha: 0.618... | P/Q        (sturmian)
///   rho: 0.0                     (sturmian, optional)
///   pattern: 011                 (periodic)
///
/// '#' starts a comment; blank lines are ignored.
inline SubshiftSpec parse_spec(std::istream& in) {
  std::vector<detail::SpecLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    const std::string text = detail::trim(raw);
    if (text.empty()) continue;
    const auto colon = text.find(':');
    if (colon == std::string::npos)
      detail::parse_fail(number, text, "expected 'key: value'");
    lines.push_back({number, detail::trim(text.substr(0, colon)),
                     detail::trim(text.substr(colon + 1))});
  }
  if (lines.empty()) throw spec_parse_error("spec parse error at line 1, field 'kind': empty file");
  if (lines[0].key != "kind")
    detail::parse_fail(lines[0].number, lines[0].key, "first entry must be 'kind'");
  const std::string kind = lines[0].value;

  auto find = [&](const std::string& key) -> const detail::SpecLine* {
    for (std::size_t i = 1; i < lines.size(); ++i)
      if (lines[i].key == key) return &lines[i];
    return nullptr;
  };
  auto require = [&](const std::string& key) -> const detail::SpecLine& {
    const auto* l = find(key);
    if (!l) detail::parse_fail(lines.back().number, key, "missing required field");
    return *l;
  };
  auto tokens = [](const std::string& v) {
    std::istringstream ss(v);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
  };

  if (kind == "full") return SubshiftSpec::full_shift();

  if (kind == "sft") {
    std::vector<Block> words;
    if (const auto* l = find("forbidden")) {
      for (const std::string& t : tokens(l->value)) {
        try {
          words.push_back(Block::from_string(t));
        } catch (const input_error& e) {
          detail::parse_fail(l->number, "forbidden", e.what());
        }
      }
    }
    return SubshiftSpec::sft(ForbiddenSet(std::move(words)));
  }

  if (kind == "sofic") {
    const auto& lv = require("vertices");
    LabeledGraph g;
    g.vertex_count = static_cast<int>(detail::parse_int(lv, "vertices", lv.value));
    if (g.vertex_count < 1) detail::parse_fail(lv.number, "vertices", "must be positive");
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].key != "edge") continue;
      const auto ts = tokens(lines[i].value);
      if (ts.size() != 3) detail::parse_fail(lines[i].number, "edge", "expected FROM TO LABEL");
      const auto from = detail::parse_int(lines[i], "edge", ts[0]);
      const auto to = detail::parse_int(lines[i], "edge", ts[1]);
      const auto label = detail::parse_int(lines[i], "edge", ts[2]);
      try {
        g.add_edge(static_cast<int>(from), static_cast<int>(to), static_cast<int>(label));
      } catch (const input_error& e) {
        detail::parse_fail(lines[i].number, "edge", e.what());
      }
    }
    if (g.edges.empty()) detail::parse_fail(lines.back().number, "edge", "sofic spec has no edges");
    return SubshiftSpec::sofic(std::move(g));
  }

  if (kind == "bfree") {
    const auto& lw = require("window");
    const std::int64_t window = detail::parse_int(lw, "window", lw.value);
    std::vector<std::int64_t> b;
    if (const auto* lb = find("b")) {
      for (const std::string& t : tokens(lb->value)) b.push_back(detail::parse_int(*lb, "b", t));
    } else if (const auto* lf = find("b-family")) {
      try {
        b = parse_b_family(lf->value);
      } catch (const input_error& e) {
        detail::parse_fail(lf->number, "b-family", e.what());
      }
    } else {
      detail::parse_fail(lines.back().number, "b", "need 'b' or 'b-family'");
    }
    try {
      return SubshiftSpec::bfree(BFreeSpec(std::move(b), window));
    } catch (const input_error& e) {
      detail::parse_fail(lw.number, "window", e.what());
    }
  }

  if (kind == "sturmian") {
    const auto& la = require("alpha");
    const auto& lw = require("window");
    const std::int64_t window = detail::parse_int(lw, "window", lw.value);
    double rho = 0.0;
    if (const auto* lr = find("rho")) rho = detail::parse_double(*lr, "rho", lr->value);
    try {
      const auto slash = la.value.find('/');
      if (slash != std::string::npos) {
        const auto p = detail::parse_int(la, "alpha", la.value.substr(0, slash));
        const auto q = detail::parse_int(la, "alpha", la.value.substr(slash + 1));
        return SubshiftSpec::sturmian(SturmianSpec::from_rational(p, q, rho, window));
      }
      return SubshiftSpec::sturmian(
          SturmianSpec::from_double(detail::parse_double(la, "alpha", la.value), rho, window));
    } catch (const input_error& e) {
      detail::parse_fail(la.number, "alpha", e.what());
    }
  }

  if (kind == "periodic") {
    const auto& lp = require("pattern");
    try {
      return SubshiftSpec::periodic(Block::from_string(lp.value));
    } catch (const input_error& e) {
      detail::parse_fail(lp.number, "pattern", e.what());
    }
  }

  detail::parse_fail(lines[0].number, "kind", "unknown kind '" + kind + "'");
}

inline SubshiftSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_parse_error("cannot open spec file '" + path + "'");
  return parse_spec(in);
}

inline void write_spec(std::ostream& os, const SubshiftSpec& spec) {
  os << "kind: " << to_string(spec.kind) << '\n';
  switch (spec.kind) {
    case SpecKind::full:
      break;
    case SpecKind::sft: {
      const auto& f = std::get<ForbiddenSet>(spec.payload);
      os << "forbidden:";
      for (const Block& w : f.words()) os << ' ' << w.to_string();
      os << '\n';
      break;
    }
    case SpecKind::sofic: {
      const auto& g = std::get<LabeledGraph>(spec.payload);
      os << "vertices: " << g.vertex_count << '\n';
      for (const auto& e : g.edges)
        os << "edge: " << e.from << ' ' << e.to << ' ' << int(e.label) << '\n';
      break;
    }
    case SpecKind::bfree: {
      const auto& b = std::get<BFreeSpec>(spec.payload);
      os << "b:";
      for (std::int64_t v : b.b) os << ' ' << v;
      os << '\n' << "window: " << b.window << '\n';
      break;
    }
    case SpecKind::sturmian: {
      const auto& s = std::get<SturmianSpec>(spec.payload);
      if (s.alpha_den > 0)
        os << "alpha: " << s.alpha_num << '/' << s.alpha_den << '\n';
      else {
        os.precision(17);
        os << "alpha: " << s.alpha << '\n';
      }
      os.precision(17);
      os << "rho: " << s.rho << '\n' << "window: " << s.window << '\n';
      break;
    }
    case SpecKind::periodic:
      os << "pattern: " << std::get<PeriodicSpec>(spec.payload).pattern.to_string() << '\n';
      break;
  }
}

}  // namespace subshift
