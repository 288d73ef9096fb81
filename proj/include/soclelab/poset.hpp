#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "soclelab/error.hpp"

namespace soclelab {

/// A finite partially ordered set over string labels.
///
/// Built from cover relations; the full order is the reflexive-transitive
/// closure of the input edges, and the stored covers are the Hasse diagram
/// (transitive input edges are dropped, recorded by input_was_reduced()).
/// Immutable after construction; every query is pure.
class finite_poset {
 public:
  finite_poset() = default;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool contains(const std::string& l) const { return index_.count(l) != 0; }

  std::size_t index(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) fail(errc::unknown_label, "no element named '" + l + "'");
    return it->second;
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool leq(const std::string& a, const std::string& b) const {
    return leq(index(a), index(b));
  }
  bool strictly_less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Hasse covers as index pairs (a, b): a covered by b. Sorted by (a, b).
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }

  std::vector<std::pair<std::string, std::string>> hasse_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(hasse_.size());
    for (auto [a, b] : hasse_) out.emplace_back(labels_[a], labels_[b]);
    return out;
  }

  /// True when construction dropped redundant input covers (transitive
  /// edges, duplicates, self-loops).
  bool input_was_reduced() const { return reduced_; }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // --- order queries ------------------------------------------------------

  std::vector<std::size_t> interval_indices(std::size_t x, std::size_t z) const {
    std::vector<std::size_t> out;
    if (!leq(x, z)) return out;
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(x, y) && leq(y, z)) out.push_back(y);
    return out;
  }

  std::vector<std::string> interval(const std::string& x, const std::string& z) const {
    return to_labels(interval_indices(index(x), index(z)));
  }

  std::vector<std::size_t> min_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < size() && minimal; ++j)
        if (strictly_less(j, i)) minimal = false;
      if (minimal) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> max_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < size() && maximal; ++j)
        if (strictly_less(i, j)) maximal = false;
      if (maximal) out.push_back(i);
    }
    return out;
  }

  std::vector<std::string> min_elements() const { return to_labels(min_indices()); }
  std::vector<std::string> max_elements() const { return to_labels(max_indices()); }

  std::vector<std::size_t> up_set_indices(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(x, y)) out.push_back(y);
    return out;
  }
  std::vector<std::size_t> down_set_indices(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < size(); ++y)
      if (leq(y, x)) out.push_back(y);
    return out;
  }

  std::vector<std::string> up_set(const std::string& x) const {
    return to_labels(up_set_indices(index(x)));
  }
  std::vector<std::string> down_set(const std::string& x) const {
    return to_labels(down_set_indices(index(x)));
  }

  /// |{y : x <= y}| and |{y : y <= x}|.
  std::size_t up_set_size(const std::string& x) const {
    return up_set_indices(index(x)).size();
  }
  std::size_t down_set_size(const std::string& x) const {
    return down_set_indices(index(x)).size();
  }

  bool is_antichain(std::span<const std::string> s) const {
    std::vector<std::size_t> idx;
    idx.reserve(s.size());
    for (const auto& l : s) idx.push_back(index(l));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        if (idx[i] != idx[j] && comparable(idx[i], idx[j])) return false;
    return true;
  }

  /// Extension check: maximal iff every outside element is comparable to
  /// some member, so no strict antichain superset exists.
  bool is_maximal_antichain(std::span<const std::string> s) const {
    if (!is_antichain(s)) return false;
    std::vector<bool> in(size(), false);
    for (const auto& l : s) in[index(l)] = true;
    for (std::size_t t = 0; t < size(); ++t) {
      if (in[t]) continue;
      bool blocked = false;
      for (std::size_t i = 0; i < size() && !blocked; ++i)
        if (in[i] && comparable(t, i)) blocked = true;
      if (!blocked) return false;
    }
    return true;
  }

  bool is_antichain_poset() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (comparable(i, j)) return false;
    return true;
  }

  /// Order dual: same elements in the same declaration order, covers
  /// reversed.
  finite_poset reversed() const;

  /// Induced subposet on a subset of elements (declaration order kept).
  finite_poset induced(const std::vector<std::string>& subset) const;

 private:
  friend finite_poset build_poset(std::vector<std::string>,
                                  std::vector<std::pair<std::string, std::string>>);

  std::vector<std::string> to_labels(const std::vector<std::size_t>& idx) const {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(labels_[i]);
    return out;
  }

  std::string name_ = "X";
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<char> leq_;  // row-major n*n reachability closure
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  bool reduced_ = false;
};

/// Builds a poset from labels and cover pairs (a, b) meaning a < b with
/// nothing between. Transitive/duplicate/reflexive input edges are accepted
/// and reduced away; cyclic input is rejected (it would break antisymmetry).
inline finite_poset build_poset(std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> covers) {
  finite_poset p;
  p.labels_ = std::move(elements);
  const std::size_t n = p.labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second)
      fail(errc::duplicate_label, "element '" + p.labels_[i] + "' declared twice");
  }

  std::vector<char> edge(n * n, 0);
  std::size_t accepted = 0;
  for (const auto& [a, b] : covers) {
    const std::size_t i = p.index(a);
    const std::size_t j = p.index(b);
    if (i == j) {
      p.reduced_ = true;  // self-loops never contribute to the order
      continue;
    }
    if (edge[i * n + j]) {
      p.reduced_ = true;
      continue;
    }
    edge[i * n + j] = 1;
    ++accepted;
  }

  // Reflexive-transitive closure (Warshall; posets here are tiny).
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (std::size_t i = 0; i < n * n; ++i)
    if (edge[i]) p.leq_[i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        fail(errc::cycle_detected,
             "'" + p.labels_[i] + "' and '" + p.labels_[j] + "' order each other");

  // Hasse diagram of the generated order. Every cover is necessarily one of
  // the accepted input edges, so comparing counts detects reduction.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq_[i * n + j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq_[i * n + k] && p.leq_[k * n + j]) cover = false;
      if (cover) p.hasse_.emplace_back(i, j);
    }
  std::sort(p.hasse_.begin(), p.hasse_.end());
  if (p.hasse_.size() != accepted) p.reduced_ = true;
  return p;
}

inline finite_poset finite_poset::reversed() const {
  std::vector<std::pair<std::string, std::string>> covers;
  covers.reserve(hasse_.size());
  for (auto [a, b] : hasse_) covers.emplace_back(labels_[b], labels_[a]);
  finite_poset q = build_poset(labels_, std::move(covers));
  q.set_name(name_ + "^op");
  return q;
}

inline finite_poset finite_poset::induced(const std::vector<std::string>& subset) const {
  std::vector<std::string> elems;
  std::vector<char> keep(size(), 0);
  for (const auto& l : subset) keep[index(l)] = 1;
  for (std::size_t i = 0; i < size(); ++i)
    if (keep[i]) elems.push_back(labels_[i]);

  // Emit the restricted strict order as explicit edges; build_poset reduces
  // them back to the induced Hasse diagram.
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (keep[i] && keep[j] && strictly_less(i, j))
        covers.emplace_back(labels_[i], labels_[j]);
  finite_poset q = build_poset(std::move(elems), std::move(covers));
  q.reduced_ = false;  // edges were synthesised, not user input
  q.set_name(name_ + "|induced");
  return q;
}

/// Partition of the elements into the part reachable from some minimal
/// element and its complement. For a finite nonempty poset the complement
/// is always empty; the type exists so decompositions report uniformly.
struct yz_decomposition {
  std::vector<std::string> y_part;
  std::vector<std::string> z_part;
};

inline yz_decomposition yz_decompose(const finite_poset& p) {
  yz_decomposition d;
  const auto mins = p.min_indices();
  for (std::size_t y = 0; y < p.size(); ++y) {
    bool above_min = false;
    for (auto x : mins)
      if (p.leq(x, y)) {
        above_min = true;
        break;
      }
    (above_min ? d.y_part : d.z_part).push_back(p.label(y));
  }
  return d;
}

/// DOT rendering of the Hasse diagram, ranked bottom-to-top.
inline std::string to_dot(const finite_poset& p) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
    return out;
  };
  std::string dot = "digraph poset {\n  rankdir=BT;\n";
  for (const auto& l : p.labels()) dot += "  " + quote(l) + ";\n";
  for (auto [a, b] : p.hasse())
    dot += "  " + quote(p.label(a)) + " -> " + quote(p.label(b)) + ";\n";
  dot += "}\n";
  return dot;
}

}  // namespace soclelab
