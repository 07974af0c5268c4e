#pragma once

#include <string>
#include <variant>

#include "subshift/block.hpp"
#include "subshift/errors.hpp"
#include "subshift/forbidden.hpp"
#include "subshift/generators.hpp"
#include "subshift/graph.hpp"

namespace subshift {

enum class SpecKind { full, sft, sofic, bfree, sturmian, periodic };

inline const char* to_string(SpecKind k) {
  switch (k) {
    case SpecKind::full: return "full";
    case SpecKind::sft: return "sft";
    case SpecKind::sofic: return "sofic";
    case SpecKind::bfree: return "bfree";
    case SpecKind::sturmian: return "sturmian";
    case SpecKind::periodic: return "periodic";
  }
  return "?";
}

struct PeriodicSpec {
  Block pattern;
  friend bool operator==(const PeriodicSpec& a, const PeriodicSpec& b) {
    return a.pattern == b.pattern;
  }
};

/// Declarative description of a subshift: a presentation (SFT forbidden set,
/// sofic graph, periodic pattern, full shift) or the parameters of a
/// generic-point generator (B-free, Sturmian). Languages, graphs and points
/// are derived from it on demand.
struct SubshiftSpec {
  SpecKind kind = SpecKind::full;
  std::variant<std::monostate, ForbiddenSet, LabeledGraph, BFreeSpec, SturmianSpec, PeriodicSpec>
      payload;

  static SubshiftSpec full_shift() { return {SpecKind::full, std::monostate{}}; }
  static SubshiftSpec sft(ForbiddenSet f) { return {SpecKind::sft, std::move(f)}; }
  static SubshiftSpec sofic(LabeledGraph g) { return {SpecKind::sofic, std::move(g)}; }
  static SubshiftSpec bfree(BFreeSpec b) { return {SpecKind::bfree, std::move(b)}; }
  static SubshiftSpec sturmian(SturmianSpec s) { return {SpecKind::sturmian, std::move(s)}; }
  static SubshiftSpec periodic(Block pattern) {
    return {SpecKind::periodic, PeriodicSpec{pattern}};
  }

  bool has_graph_presentation() const {
    return kind == SpecKind::full || kind == SpecKind::sft || kind == SpecKind::sofic ||
           kind == SpecKind::periodic;
  }

  bool has_point_generator() const {
    return kind == SpecKind::bfree || kind == SpecKind::sturmian || kind == SpecKind::periodic;
  }

  friend bool operator==(const SubshiftSpec& a, const SubshiftSpec& b) {
    return a.kind == b.kind && a.payload == b.payload;
  }
};

/// The (essential) labeled-graph presentation of a spec with one.
inline LabeledGraph presentation_graph(const SubshiftSpec& spec) {
  switch (spec.kind) {
    case SpecKind::full: return full_shift_graph();
    case SpecKind::sft: return sft_to_graph(std::get<ForbiddenSet>(spec.payload));
    case SpecKind::sofic: {
      LabeledGraph g = essentialize(std::get<LabeledGraph>(spec.payload));
      if (g.vertex_count == 0) throw empty_subshift_error("sofic presentation is inessential");
      return g;
    }
    case SpecKind::periodic:
      return periodic_orbit_graph(std::get<PeriodicSpec>(spec.payload).pattern);
    default:
      throw input_error(std::string("no graph presentation for kind '") + to_string(spec.kind) +
                        "'");
  }
}

/// The generated finite window of a point-generator spec (eta, a Sturmian
/// coding, or the periodic point repeated across a default window).
inline BitSeq generated_window(const SubshiftSpec& spec, std::int64_t window_override = 0) {
  switch (spec.kind) {
    case SpecKind::bfree: {
      BFreeSpec b = std::get<BFreeSpec>(spec.payload);
      if (window_override > 0) b = BFreeSpec(b.b, window_override);
      return eta(b);
    }
    case SpecKind::sturmian: {
      SturmianSpec s = std::get<SturmianSpec>(spec.payload);
      if (window_override > 0) s.window = window_override;
      return sturmian_point(s);
    }
    case SpecKind::periodic: {
      const Block& p = std::get<PeriodicSpec>(spec.payload).pattern;
      const std::int64_t n = window_override > 0 ? window_override : 64 * p.length();
      BitSeq out(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p.bit(i % p.length()));
      return out;
    }
    default:
      throw input_error(std::string("kind '") + to_string(spec.kind) +
                        "' does not generate a point");
  }
}

}  // namespace subshift
