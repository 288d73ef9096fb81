#pragma once

#include <string>
#include <vector>

#include "soclelab/poset.hpp"
#include "soclelab/ring_spec.hpp"
#include "soclelab/theorems.hpp"

namespace soclelab {

/// The nine bundled posets. Mirrored as JSON files under data/posets/ so
/// the same shapes are usable through --poset; a test keeps both in sync.
inline std::vector<finite_poset> builtin_posets() {
  auto named = [](const char* name, std::vector<std::string> elems,
                  std::vector<std::pair<std::string, std::string>> covers) {
    finite_poset p = build_poset(std::move(elems), std::move(covers));
    p.set_name(name);
    return p;
  };
  std::vector<finite_poset> out;
  out.push_back(named("singleton", {"a"}, {}));
  out.push_back(named("chain2", {"1", "2"}, {{"1", "2"}}));
  out.push_back(named("chain3", {"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));
  out.push_back(named("vee", {"x", "y", "z"}, {{"x", "y"}, {"x", "z"}}));
  out.push_back(named("wedge", {"x", "y", "z"}, {{"y", "x"}, {"z", "x"}}));
  out.push_back(named("antichain2", {"a", "b"}, {}));
  out.push_back(named("antichain3", {"a", "b", "c"}, {}));
  out.push_back(named("enn", {"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}));
  out.push_back(
      named("diamond", {"bot", "l", "r", "top"},
            {{"bot", "l"}, {"bot", "r"}, {"l", "top"}, {"r", "top"}}));
  return out;
}

inline finite_poset builtin_poset(const std::string& name) {
  for (auto& p : builtin_posets())
    if (p.name() == name) return p;
  fail(errc::input_error, "no bundled poset named '" + name + "'");
}

inline const std::vector<std::string>& builtin_ring_specs() {
  static const std::vector<std::string> specs = {"F2", "F3", "Z4",
                                                 "Z6", "U2(F2)", "F2 x F2"};
  return specs;
}

inline std::size_t comparable_pair_count(const finite_poset& X) {
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < X.size(); ++y)
      if (X.leq(x, y)) ++pairs;
  return pairs;
}

/// Algebra size |R|^pairs without building anything; saturates on overflow.
inline std::size_t algebra_size_of(const finite_poset& X, std::size_t ring_size) {
  std::size_t total = 1;
  for (std::size_t p = 0; p < comparable_pair_count(X); ++p) {
    if (ring_size != 0 && total > static_cast<std::size_t>(-1) / ring_size)
      return static_cast<std::size_t>(-1);
    total *= ring_size;
  }
  return total;
}

/// Every (poset, ring) pair whose algebra fits the enumeration cap. The
/// default suite carries only instances it can actually brute-force, so a
/// clean run has no cap skips; larger combinations stay reachable through
/// explicit --poset/--ring arguments.
inline std::vector<suite_instance> builtin_corpus(const caps& cfg = {}) {
  std::vector<suite_instance> out;
  for (const auto& poset : builtin_posets()) {
    for (const auto& spec_text : builtin_ring_specs()) {
      const std::size_t ring_size = spec_size(parse_ring_spec_tree(spec_text));
      if (algebra_size_of(poset, ring_size) > cfg.enumeration_cap) continue;
      out.push_back(suite_instance{poset.name(), poset, spec_text});
    }
  }
  return out;
}

}  // namespace soclelab
