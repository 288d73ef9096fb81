#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "soclelab/caps.hpp"
#include "soclelab/error.hpp"
#include "soclelab/ideals.hpp"
#include "soclelab/poset.hpp"
#include "soclelab/ring.hpp"

namespace soclelab {

/// The incidence algebra I(X, R): functions on the comparable pairs of X
/// valued in R, with pointwise addition and convolution product. Conforms
/// to finite_ring, so the generic ideal machinery applies verbatim.
///
/// Pair order is fixed row-major in element declaration order; element
/// indices are mixed-radix over the pair values with pair 0 least
/// significant (index = sum_p value_p * |R|^p), so indices are stable
/// across runs and reports diff cleanly.
class incidence_algebra final : public finite_ring {
 public:
  incidence_algebra(finite_poset X, ring_ptr base, caps cfg, std::size_t total)
      : finite_ring(total, 0, identity_index(X, *base)),
        X_(std::move(X)),
        base_(std::move(base)),
        cfg_(cfg) {
    const std::size_t n = X_.size();
    pair_at_.assign(n * n, -1);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (X_.leq(x, y)) {
          pair_at_[x * n + y] = static_cast<std::int32_t>(pairs_.size());
          pairs_.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
        }
    if (pairs_.size() > max_pairs)
      fail(errc::size_cap_exceeded, "too many comparable pairs");

    pow_.resize(pairs_.size() + 1);
    pow_[0] = 1;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      pow_[p + 1] = pow_[p] * static_cast<std::uint64_t>(base_->size());

    conv_.resize(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto [x, y] = pairs_[p];
      for (std::size_t z : X_.interval_indices(x, y))
        conv_[p].emplace_back(pair_index(x, z), pair_index(z, y));
    }
  }

  const finite_poset& poset() const { return X_; }
  const ring_ptr& base() const { return base_; }
  const caps& config() const { return cfg_; }

  std::size_t pair_count() const { return pairs_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs() const { return pairs_; }

  bool has_pair(std::size_t x, std::size_t y) const {
    return pair_at_[x * X_.size() + y] >= 0;
  }

  std::size_t pair_index(std::size_t x, std::size_t y) const {
    const std::int32_t p = pair_at_[x * X_.size() + y];
    if (p < 0)
      fail(errc::incomparable_pair,
           "'" + X_.label(x) + "' is not below '" + X_.label(y) + "'");
    return static_cast<std::size_t>(p);
  }

  /// Value of element f at pair index p (a base-ring element index).
  elem value_at(elem f, std::size_t p) const {
    return static_cast<elem>((f / pow_[p]) % base_->size());
  }

  elem encode(std::span<const elem> values) const {
    elem out = 0;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      out = static_cast<elem>(out + values[p] * pow_[p]);
    return out;
  }

  std::vector<elem> decode(elem f) const {
    std::vector<elem> out(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) out[p] = value_at(f, p);
    return out;
  }

  std::string describe(elem f) const override {
    if (f == zero()) return "0";
    std::string out = "{";
    bool first = true;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const elem v = value_at(f, p);
      if (v == base_->zero()) continue;
      if (!first) out += ", ";
      first = false;
      out += "(" + X_.label(pairs_[p].first) + "," + X_.label(pairs_[p].second) +
             "):" + base_->describe(v);
    }
    return out + "}";
  }

  std::string name() const override { return "I(" + X_.name() + ", " + base_->name() + ")"; }

 protected:
  static constexpr std::size_t max_pairs = 64;

  elem add_impl(elem a, elem b) const override {
    std::array<elem, max_pairs> out{};
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      out[p] = base_->add(value_at(a, p), value_at(b, p));
    return encode({out.data(), pairs_.size()});
  }

  elem mul_impl(elem a, elem b) const override {
    std::array<elem, max_pairs> fa{}, fb{}, out{};
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      fa[p] = value_at(a, p);
      fb[p] = value_at(b, p);
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      elem acc = base_->zero();
      for (auto [p1, p2] : conv_[p]) acc = base_->add(acc, base_->mul(fa[p1], fb[p2]));
      out[p] = acc;
    }
    return encode({out.data(), pairs_.size()});
  }

  elem neg_impl(elem a) const override {
    std::array<elem, max_pairs> out{};
    for (std::size_t p = 0; p < pairs_.size(); ++p) out[p] = base_->neg(value_at(a, p));
    return encode({out.data(), pairs_.size()});
  }

 private:
  // delta has the base identity at every diagonal pair; its index must be
  // known before the finite_ring subobject is initialized.
  static elem identity_index(const finite_poset& X, const finite_ring& base) {
    elem out = 0;
    std::uint64_t radix = 1;
    for (std::size_t x = 0; x < X.size(); ++x)
      for (std::size_t y = 0; y < X.size(); ++y) {
        if (!X.leq(x, y)) continue;
        if (x == y) out = static_cast<elem>(out + base.one() * radix);
        radix *= base.size();
      }
    return out;
  }

  finite_poset X_;
  ring_ptr base_;
  caps cfg_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<std::int32_t> pair_at_;
  std::vector<std::uint64_t> pow_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> conv_;
};

using algebra_ptr = std::shared_ptr<const incidence_algebra>;

/// Builds I(X, R) as a finite_ring. Arithmetic is structured always; full
/// add/mul tables are cached when the element count fits table_cap, and
/// brute-force enumeration elsewhere is gated separately by enumeration_cap.
inline algebra_ptr make_incidence_algebra(finite_poset X, ring_ptr base, const caps& cfg = {}) {
  if (X.empty()) fail(errc::empty_poset, "incidence algebra over the empty poset");
  if (base->size() < 2)
    fail(errc::zero_ring, "incidence algebra over the zero ring " + base->name());
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < X.size(); ++y)
      if (X.leq(x, y)) ++pairs;
  const std::size_t total = detail::checked_power(base->size(), pairs, cfg,
                                                  "I(" + X.name() + ", " + base->name() + ")");
  auto A = std::make_shared<incidence_algebra>(std::move(X), std::move(base), cfg, total);
  if (A->size() <= cfg.table_cap) A->cache_tables();
  check_ring_axioms(*A, cfg);
  return A;
}

// --- element-level operations ------------------------------------------------

/// An incidence element as explicit per-pair values (base-ring indices, in
/// the algebra's pair order).
struct incidence_element {
  std::vector<elem> values;
};

inline incidence_element decode_element(const incidence_algebra& A, elem f) {
  return incidence_element{A.decode(f)};
}

inline elem encode_element(const incidence_algebra& A, const incidence_element& f) {
  return A.encode(f.values);
}

/// (fg)(x,y) = sum over z in [x,y] of f(x,z) g(z,y).
inline incidence_element convolve(const incidence_algebra& A, const incidence_element& f,
                                  const incidence_element& g) {
  return decode_element(A, A.mul(encode_element(A, f), encode_element(A, g)));
}

/// The multiplicative identity: base one on the diagonal, zero elsewhere.
inline incidence_element identity_element(const incidence_algebra& A) {
  return decode_element(A, A.one());
}

/// Indicator of a single comparable pair, base one at (x, y).
inline incidence_element pair_indicator(const incidence_algebra& A, const std::string& x,
                                        const std::string& y) {
  const std::size_t p = A.pair_index(A.poset().index(x), A.poset().index(y));
  incidence_element f{std::vector<elem>(A.pair_count(), A.base()->zero())};
  f.values[p] = A.base()->one();
  return f;
}

/// Index of the element with base value r at pair (x, y) and zero elsewhere.
inline elem scaled_pair_element(const incidence_algebra& A, elem r, std::size_t x,
                                std::size_t y) {
  incidence_element f{std::vector<elem>(A.pair_count(), A.base()->zero())};
  f.values[A.pair_index(x, y)] = r;
  return encode_element(A, f);
}

/// Left scalar action r.f, realized as multiplication by r*delta (which
/// coincides with scaling every value on the left by r).
inline incidence_element scalar_mul(const incidence_algebra& A, elem r,
                                    const incidence_element& f) {
  incidence_element rdelta{std::vector<elem>(A.pair_count(), A.base()->zero())};
  for (std::size_t p = 0; p < A.pair_count(); ++p)
    if (A.pairs()[p].first == A.pairs()[p].second) rdelta.values[p] = r;
  return convolve(A, rdelta, f);
}

/// Comparable pairs carrying a nonzero value, as label pairs in pair order.
inline std::vector<std::pair<std::string, std::string>> support(const incidence_algebra& A,
                                                                const incidence_element& f) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t p = 0; p < A.pair_count(); ++p)
    if (f.values[p] != A.base()->zero())
      out.emplace_back(A.poset().label(A.pairs()[p].first),
                       A.poset().label(A.pairs()[p].second));
  return out;
}

// --- subset constructions ------------------------------------------------------

namespace detail {

/// Members of the subset whose value at pair p ranges over allowed[p],
/// enumerated with an odometer. Verifies one-sided closure when the algebra
/// is small enough to scan.
inline sided_ideal ideal_from_allowed_values(const algebra_ptr& A,
                                             const std::vector<std::vector<elem>>& allowed,
                                             side s, const char* what) {
  sided_ideal out{A, s, bitvec(A->size())};
  std::vector<std::size_t> digit(A->pair_count(), 0);
  while (true) {
    elem idx = 0;
    std::uint64_t radix = 1;
    for (std::size_t p = 0; p < A->pair_count(); ++p) {
      idx = static_cast<elem>(idx + allowed[p][digit[p]] * radix);
      radix *= A->base()->size();
    }
    out.members.set(idx);
    std::size_t p = 0;
    while (p < A->pair_count() && ++digit[p] == allowed[p].size()) {
      digit[p] = 0;
      ++p;
    }
    if (p == A->pair_count()) break;
  }
  if (A->size() <= A->config().enumeration_cap && !is_one_sided_ideal(A, out.members, s))
    fail(errc::internal_error, std::string(what) + " is not a " + side_name(s) + " ideal");
  return out;
}

inline std::vector<elem> ideal_value_list(const sided_ideal& I) { return I.elements(); }

}  // namespace detail

/// I(X, J) for a two-sided ideal J of the base ring: every value in J.
inline sided_ideal subalgebra_over_ideal(const algebra_ptr& A, const sided_ideal& J) {
  if (J.ring != A->base())
    fail(errc::input_error, "ideal does not live in the base ring");
  if (!is_two_sided_ideal(J.ring, J.members))
    fail(errc::not_two_sided, "I(X, J) needs a two-sided J");
  std::vector<std::vector<elem>> allowed(A->pair_count(), detail::ideal_value_list(J));
  sided_ideal out = detail::ideal_from_allowed_values(A, allowed, side::left, "I(X, J)");
  if (A->size() <= A->config().enumeration_cap &&
      !is_one_sided_ideal(A, out.members, side::right))
    fail(errc::internal_error, "I(X, J) is not two-sided");
  return out;
}

/// S(x, I): elements valued in the left ideal I on pairs with source x and
/// zero elsewhere. Requires x minimal, which makes the subset a left ideal.
inline sided_ideal row_subspace(const algebra_ptr& A, const std::string& x,
                                const sided_ideal& I) {
  const std::size_t xi = A->poset().index(x);
  const auto mins = A->poset().min_indices();
  if (std::find(mins.begin(), mins.end(), xi) == mins.end())
    fail(errc::not_minimal_element, "'" + x + "' is not a minimal element");
  if (I.s != side::left) fail(errc::side_mismatch, "row subspace takes a left ideal");
  if (I.ring != A->base()) fail(errc::input_error, "ideal does not live in the base ring");
  const auto vals = detail::ideal_value_list(I);
  std::vector<std::vector<elem>> allowed(A->pair_count());
  for (std::size_t p = 0; p < A->pair_count(); ++p)
    allowed[p] = (A->pairs()[p].first == xi) ? vals : std::vector<elem>{A->base()->zero()};
  return detail::ideal_from_allowed_values(A, allowed, side::left, "row subspace");
}

/// T(x, I): dual of row_subspace — values in the right ideal I on pairs
/// with target x, zero elsewhere; requires x maximal.
inline sided_ideal column_subspace(const algebra_ptr& A, const std::string& x,
                                   const sided_ideal& I) {
  const std::size_t xi = A->poset().index(x);
  const auto maxs = A->poset().max_indices();
  if (std::find(maxs.begin(), maxs.end(), xi) == maxs.end())
    fail(errc::not_maximal_element, "'" + x + "' is not a maximal element");
  if (I.s != side::right) fail(errc::side_mismatch, "column subspace takes a right ideal");
  if (I.ring != A->base()) fail(errc::input_error, "ideal does not live in the base ring");
  const auto vals = detail::ideal_value_list(I);
  std::vector<std::vector<elem>> allowed(A->pair_count());
  for (std::size_t p = 0; p < A->pair_count(); ++p)
    allowed[p] = (A->pairs()[p].second == xi) ? vals : std::vector<elem>{A->base()->zero()};
  return detail::ideal_from_allowed_values(A, allowed, side::right, "column subspace");
}

/// Internal direct sum of row subspaces over all minimal elements, one left
/// ideal of the base per minimal element. Summands have disjoint supports
/// (distinct source rows), which is also asserted.
inline sided_ideal row_sum_ideal(const algebra_ptr& A,
                                 const std::map<std::string, sided_ideal>& assignment) {
  const auto mins = A->poset().min_indices();
  std::vector<std::vector<elem>> allowed(A->pair_count());
  std::vector<const sided_ideal*> row_ideal(A->poset().size(), nullptr);
  for (auto m : mins) {
    auto it = assignment.find(A->poset().label(m));
    if (it == assignment.end())
      fail(errc::missing_assignment, "no ideal assigned to '" + A->poset().label(m) + "'");
    if (it->second.s != side::left) fail(errc::side_mismatch, "row sum takes left ideals");
    row_ideal[m] = &it->second;
  }
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto src = A->pairs()[p].first;
    allowed[p] = row_ideal[src] ? detail::ideal_value_list(*row_ideal[src])
                                : std::vector<elem>{A->base()->zero()};
  }
  sided_ideal out = detail::ideal_from_allowed_values(A, allowed, side::left, "row sum");
  // directness: distinct summands intersect in zero
  for (std::size_t i = 0; i < mins.size(); ++i)
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      const auto Si = row_subspace(A, A->poset().label(mins[i]), *row_ideal[mins[i]]);
      const auto Sj = row_subspace(A, A->poset().label(mins[j]), *row_ideal[mins[j]]);
      if (Si.members.intersects_excluding(Sj.members, A->zero()))
        fail(errc::internal_error, "row summands are not independent");
    }
  return out;
}

/// Values from one base ideal on every pair anchored at one of the given
/// elements (source anchor for left, target anchor for right), zero
/// elsewhere. The anchors need not be the minimal/maximal elements; callers
/// use this as an independent construction route.
inline sided_ideal anchored_rows_ideal(const algebra_ptr& A,
                                       const std::vector<std::string>& anchors,
                                       const sided_ideal& I, side s) {
  if (I.s != s) fail(errc::side_mismatch, "anchored rows ideal: side mismatch");
  std::vector<char> anchored(A->poset().size(), 0);
  for (const auto& l : anchors) anchored[A->poset().index(l)] = 1;
  const auto vals = detail::ideal_value_list(I);
  std::vector<std::vector<elem>> allowed(A->pair_count());
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const std::size_t anchor = s == side::left ? A->pairs()[p].first : A->pairs()[p].second;
    allowed[p] = anchored[anchor] ? vals : std::vector<elem>{A->base()->zero()};
  }
  return detail::ideal_from_allowed_values(A, allowed, s, "anchored rows ideal");
}

/// Dual of row_sum_ideal over maximal elements and right ideals.
inline sided_ideal column_sum_ideal(const algebra_ptr& A,
                                    const std::map<std::string, sided_ideal>& assignment) {
  const auto maxs = A->poset().max_indices();
  std::vector<std::vector<elem>> allowed(A->pair_count());
  std::vector<const sided_ideal*> col_ideal(A->poset().size(), nullptr);
  for (auto m : maxs) {
    auto it = assignment.find(A->poset().label(m));
    if (it == assignment.end())
      fail(errc::missing_assignment, "no ideal assigned to '" + A->poset().label(m) + "'");
    if (it->second.s != side::right) fail(errc::side_mismatch, "column sum takes right ideals");
    col_ideal[m] = &it->second;
  }
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto dst = A->pairs()[p].second;
    allowed[p] = col_ideal[dst] ? detail::ideal_value_list(*col_ideal[dst])
                                : std::vector<elem>{A->base()->zero()};
  }
  return detail::ideal_from_allowed_values(A, allowed, side::right, "column sum");
}

/// For side == left, the ideal of elements vanishing on every pair (x, y)
/// with |[x, y]| <= n whose source is not minimal (free elsewhere); the
/// side == right mirror conditions on targets that are not maximal.
inline sided_ideal short_interval_zero_ideal(const algebra_ptr& A, std::size_t n, side s) {
  if (n < 1) fail(errc::input_error, "interval bound must be positive");
  const auto& X = A->poset();
  std::vector<char> exempt(X.size(), 0);
  for (auto m : s == side::left ? X.min_indices() : X.max_indices()) exempt[m] = 1;
  std::vector<elem> full;
  for (elem v = 0; v < A->base()->size(); ++v) full.push_back(v);
  std::vector<std::vector<elem>> allowed(A->pair_count());
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto [x, y] = A->pairs()[p];
    const std::size_t anchor = s == side::left ? x : y;
    const bool forced_zero =
        !exempt[anchor] && X.interval_indices(x, y).size() <= n;
    allowed[p] = forced_zero ? std::vector<elem>{A->base()->zero()} : full;
  }
  return detail::ideal_from_allowed_values(A, allowed, s, "short-interval ideal");
}

/// Same vanishing condition, but with all values confined to the given
/// socle of the base ring.
inline sided_ideal short_interval_socle_ideal(const algebra_ptr& A, std::size_t n, side s,
                                              const sided_ideal& base_socle) {
  if (n < 1) fail(errc::input_error, "interval bound must be positive");
  const auto& X = A->poset();
  std::vector<char> exempt(X.size(), 0);
  for (auto m : s == side::left ? X.min_indices() : X.max_indices()) exempt[m] = 1;
  const auto soc_vals = detail::ideal_value_list(base_socle);
  std::vector<std::vector<elem>> allowed(A->pair_count());
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto [x, y] = A->pairs()[p];
    const std::size_t anchor = s == side::left ? x : y;
    const bool forced_zero =
        !exempt[anchor] && X.interval_indices(x, y).size() <= n;
    allowed[p] = forced_zero ? std::vector<elem>{A->base()->zero()} : soc_vals;
  }
  return detail::ideal_from_allowed_values(A, allowed, s, "short-interval socle ideal");
}

/// Longest interval size of the poset; the short-interval ideals stabilize
/// from this bound on.
inline std::size_t longest_interval(const finite_poset& X) {
  std::size_t best = 0;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < X.size(); ++y)
      if (X.leq(x, y)) best = std::max(best, X.interval_indices(x, y).size());
  return best;
}

// --- structural rendering ------------------------------------------------------

/// Structural matrix picture: rows/columns in element order, one entry per
/// ordered pair. Without an overlay, comparable pairs read "R"; with one,
/// each comparable entry is the set of values the ideal's members take
/// there ("0" singleton, "R" when every base value occurs, or a list).
struct render_matrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> entries;
};

inline render_matrix render_structure(const algebra_ptr& A,
                                      const sided_ideal* overlay = nullptr) {
  const auto& X = A->poset();
  if (X.size() > A->config().render_cap)
    fail(errc::render_cap_exceeded, "poset too large to render");
  render_matrix m;
  m.labels = X.labels();
  m.entries.assign(X.size(), std::vector<std::string>(X.size(), "0"));

  std::vector<std::vector<char>> seen;
  if (overlay) {
    seen.assign(A->pair_count(), std::vector<char>(A->base()->size(), 0));
    overlay->members.for_each([&](std::size_t f) {
      for (std::size_t p = 0; p < A->pair_count(); ++p)
        seen[p][A->value_at(static_cast<elem>(f), p)] = 1;
    });
  }

  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto [x, y] = A->pairs()[p];
    std::string& cell = m.entries[x][y];
    if (!overlay) {
      cell = "R";
      continue;
    }
    std::size_t distinct = 0;
    for (char c : seen[p]) distinct += (c != 0);
    if (distinct == 1 && seen[p][A->base()->zero()]) {
      cell = "0";
    } else if (distinct == A->base()->size()) {
      cell = "R";
    } else {
      cell = "{";
      bool first = true;
      for (elem v = 0; v < A->base()->size(); ++v) {
        if (!seen[p][v]) continue;
        if (!first) cell += ",";
        first = false;
        cell += A->base()->describe(v);
      }
      cell += "}";
    }
  }
  return m;
}

/// One element as a structural matrix (used in counterexample payloads).
inline render_matrix render_element(const algebra_ptr& A, elem f) {
  const auto& X = A->poset();
  if (X.size() > A->config().render_cap)
    fail(errc::render_cap_exceeded, "poset too large to render");
  render_matrix m;
  m.labels = X.labels();
  m.entries.assign(X.size(), std::vector<std::string>(X.size(), "0"));
  for (std::size_t p = 0; p < A->pair_count(); ++p) {
    const auto [x, y] = A->pairs()[p];
    m.entries[x][y] = A->base()->describe(A->value_at(f, p));
  }
  return m;
}

/// Compact one-line form, e.g. [[R,R,R],[0,R,0],[0,0,R]].
inline std::string to_compact(const render_matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.entries.size(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m.entries[r].size(); ++c) {
      if (c) out += ",";
      out += m.entries[r][c];
    }
    out += "]";
  }
  return out + "]";
}

/// Aligned multi-line table with row/column labels.
inline std::string to_text(const render_matrix& m) {
  std::vector<std::size_t> width(m.labels.size());
  for (std::size_t c = 0; c < m.labels.size(); ++c) {
    width[c] = m.labels[c].size();
    for (const auto& row : m.entries) width[c] = std::max(width[c], row[c].size());
  }
  std::size_t label_w = 0;
  for (const auto& l : m.labels) label_w = std::max(label_w, l.size());

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::string out = std::string(label_w, ' ');
  for (std::size_t c = 0; c < m.labels.size(); ++c) out += "  " + pad(m.labels[c], width[c]);
  out += "\n";
  for (std::size_t r = 0; r < m.entries.size(); ++r) {
    out += pad(m.labels[r], label_w);
    for (std::size_t c = 0; c < m.entries[r].size(); ++c)
      out += "  " + pad(m.entries[r][c], width[c]);
    out += "\n";
  }
  return out;
}

}  // namespace soclelab
