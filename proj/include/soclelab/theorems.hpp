#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "soclelab/caps.hpp"
#include "soclelab/error.hpp"
#include "soclelab/ideals.hpp"
#include "soclelab/incidence.hpp"
#include "soclelab/poset.hpp"
#include "soclelab/ring.hpp"
#include "soclelab/ring_spec.hpp"

namespace soclelab {

enum class check_status { pass, fail, skipped_hypothesis, skipped_cap, out_of_scope };

inline const char* status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped_hypothesis: return "skipped (hypothesis not met)";
    case check_status::skipped_cap: return "skipped (cap)";
    case check_status::out_of_scope: return "out of scope (infinite poset)";
  }
  return "?";
}

inline const char* status_key(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped_hypothesis: return "skipped_hypothesis";
    case check_status::skipped_cap: return "skipped_cap";
    case check_status::out_of_scope: return "out_of_scope";
  }
  return "?";
}

struct check_witness {
  std::string summary;
  std::vector<std::string> details;
  bool empty() const { return summary.empty() && details.empty(); }
};

struct check_result {
  std::string id;
  check_status status = check_status::pass;
  check_witness witness;
  double elapsed_ms = 0.0;
};

struct instance_report {
  std::string poset_name;
  std::string ring_name;
  std::vector<check_result> checks;
  std::vector<std::string> caps_hit;
  std::string input_error;
};

struct verification_report {
  std::vector<instance_report> instances;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool any_caps_hit = false;
  bool any_input_error = false;

  void tally() {
    passed = failed = skipped = 0;
    any_caps_hit = any_input_error = false;
    for (const auto& inst : instances) {
      if (!inst.input_error.empty()) any_input_error = true;
      if (!inst.caps_hit.empty()) any_caps_hit = true;
      for (const auto& c : inst.checks) {
        switch (c.status) {
          case check_status::pass: ++passed; break;
          case check_status::fail: ++failed; break;
          default: ++skipped; break;
        }
      }
    }
  }
};

/// Shared, lazily memoized per-instance data: the algebra, principal-ideal
/// tables and the brute-force socles/singular ideals both checks and
/// reports reuse. One context is owned by one worker at a time, so the lazy
/// members need no locking.
class instance_context {
 public:
  instance_context(std::string poset_name, finite_poset X, ring_ptr base, caps cfg)
      : poset_name_(std::move(poset_name)), cfg_(cfg) {
    X.set_name(poset_name_);
    A_ = make_incidence_algebra(std::move(X), std::move(base), cfg_);
  }

  const algebra_ptr& algebra() const { return A_; }
  const finite_poset& poset() const { return A_->poset(); }
  const ring_ptr& base() const { return A_->base(); }
  const caps& config() const { return cfg_; }
  const std::string& poset_name() const { return poset_name_; }

  bool enumerable() const { return A_->size() <= cfg_.enumeration_cap; }

  void require_enumerable() const {
    if (!enumerable())
      fail(errc::enumeration_cap_exceeded,
           A_->name() + " has " + std::to_string(A_->size()) +
               " elements, enumeration cap is " + std::to_string(cfg_.enumeration_cap));
  }

  // The algebra-level accessors below are brute-force enumerations; they
  // refuse to run past the enumeration cap.
  const principal_table& table(side s, const deadline* dl = nullptr) {
    require_enumerable();
    auto& slot = tables_[s == side::left ? 0 : 1];
    if (!slot) slot.emplace(A_, s, dl);
    return *slot;
  }

  const principal_table& base_table(side s, const deadline* dl = nullptr) {
    auto& slot = base_tables_[s == side::left ? 0 : 1];
    if (!slot) slot.emplace(A_->base(), s, dl);
    return *slot;
  }

  const sided_ideal& brute_socle(side s, const deadline* dl = nullptr) {
    require_enumerable();
    auto& slot = soc_[s == side::left ? 0 : 1];
    if (!slot) slot = socle(A_, s, &table(s, dl));
    return *slot;
  }

  const sided_ideal& brute_singular(side s, const deadline* dl = nullptr) {
    require_enumerable();
    auto& slot = sing_[s == side::left ? 0 : 1];
    if (!slot) slot = singular_ideal(A_, s, &table(s, dl), dl);
    return *slot;
  }

  const sided_ideal& base_socle(side s, const deadline* dl = nullptr) {
    auto& slot = base_soc_[s == side::left ? 0 : 1];
    if (!slot) slot = socle(A_->base(), s, &base_table(s, dl));
    return *slot;
  }

  const sided_ideal& base_singular(side s, const deadline* dl = nullptr) {
    auto& slot = base_sing_[s == side::left ? 0 : 1];
    if (!slot) slot = singular_ideal(A_->base(), s, &base_table(s, dl), dl);
    return *slot;
  }

 private:
  std::string poset_name_;
  caps cfg_;
  algebra_ptr A_;
  std::optional<principal_table> tables_[2], base_tables_[2];
  std::optional<sided_ideal> soc_[2], sing_[2], base_soc_[2], base_sing_[2];
};

// --- witness helpers ---------------------------------------------------------

namespace detail {

inline std::string ideal_brief(const incidence_algebra& A, const sided_ideal& I,
                               std::size_t max_items = 4) {
  std::string out = std::to_string(I.count()) + " elements {";
  std::size_t shown = 0;
  for (elem e : I.elements()) {
    if (shown == max_items) {
      out += ", ...";
      break;
    }
    if (shown) out += ", ";
    out += A.describe(e);
    ++shown;
  }
  return out + "}";
}

inline void record_mismatch(const algebra_ptr& A, const sided_ideal& got,
                            const sided_ideal& want, const std::string& got_name,
                            const std::string& want_name, check_result& out) {
  out.status = check_status::fail;
  out.witness.summary = got_name + " has " + std::to_string(got.count()) +
                        " elements, " + want_name + " has " + std::to_string(want.count());
  auto diff = [&](const sided_ideal& a, const sided_ideal& b, const std::string& label) {
    std::size_t shown = 0;
    for (elem e : a.elements()) {
      if (b.contains(e)) continue;
      if (shown == 0)
        out.witness.details.push_back(label + ":");
      if (shown == 3) {
        out.witness.details.push_back("  ...");
        break;
      }
      out.witness.details.push_back("  " + A->describe(e));
      if (shown == 0 && A->poset().size() <= A->config().render_cap)
        out.witness.details.push_back("  as matrix: " + to_compact(render_element(A, e)));
      ++shown;
    }
  };
  diff(got, want, "only in " + got_name);
  diff(want, got, "only in " + want_name);
}

/// Equality assertion between a brute-force result and a closed form.
inline void expect_equal(const algebra_ptr& A, const sided_ideal& brute,
                         const sided_ideal& closed, const std::string& brute_name,
                         const std::string& closed_name, check_result& out) {
  if (out.status != check_status::pass) return;
  if (brute.members == closed.members) return;
  record_mismatch(A, brute, closed, brute_name, closed_name, out);
}

inline void expect(bool cond, const std::string& what, check_result& out) {
  if (out.status != check_status::pass || cond) return;
  out.status = check_status::fail;
  out.witness.summary = what;
}

inline std::map<std::string, sided_ideal> uniform_assignment(
    const std::vector<std::string>& keys, const sided_ideal& I) {
  std::map<std::string, sided_ideal> out;
  for (const auto& k : keys) out.emplace(k, I);
  return out;
}

}  // namespace detail

// --- individual theorem checks -------------------------------------------------

/// Brute-force socle equals the direct sum of row (column) subspaces over
/// the minimal (maximal) elements valued in the base socle.
inline check_result verify_socle_closed_form(instance_context& ctx, side s,
                                             const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& A = ctx.algebra();
  const auto& brute = ctx.brute_socle(s, dl);
  const auto keys = s == side::left ? ctx.poset().min_elements() : ctx.poset().max_elements();
  const auto assign = detail::uniform_assignment(keys, ctx.base_socle(s, dl));
  const sided_ideal closed =
      s == side::left ? row_sum_ideal(A, assign) : column_sum_ideal(A, assign);
  detail::expect_equal(A, brute, closed, "brute-force socle", "closed form", out);
  return out;
}

/// Sandwich for the singular ideal: for a finite poset the finitely
/// supported lower bound and the upper bound I(X, Sing(R)) coincide, so the
/// containments collapse to equality with the brute-force singular ideal.
inline check_result verify_singular_sandwich(instance_context& ctx, side s,
                                             const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& A = ctx.algebra();
  const auto& brute = ctx.brute_singular(s, dl);
  const sided_ideal bound = subalgebra_over_ideal(A, ctx.base_singular(s, dl));
  detail::expect(bound.members.is_subset_of(brute.members),
                 "finitely-supported lower bound not inside the singular ideal", out);
  detail::expect(brute.members.is_subset_of(bound.members),
                 "singular ideal escapes I(X, Sing(R))", out);
  detail::expect_equal(A, brute, bound, "brute-force singular ideal", "I(X, Sing(R))", out);
  return out;
}

/// Under the (for finite posets automatic) hypothesis that the minimal
/// (maximal) elements form a maximal antichain with finite up-sets
/// (down-sets), the singular ideal equals I(X, Sing(R)) exactly.
inline check_result verify_singular_subalgebra(instance_context& ctx, side s,
                                               const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& X = ctx.poset();
  const auto frontier = s == side::left ? X.min_elements() : X.max_elements();
  if (!X.is_maximal_antichain(frontier)) {
    out.status = check_status::skipped_hypothesis;
    out.witness.summary = "frontier is not a maximal antichain";
    return out;
  }
  const auto& A = ctx.algebra();
  const auto& brute = ctx.brute_singular(s, dl);
  const sided_ideal bound = subalgebra_over_ideal(A, ctx.base_singular(s, dl));
  detail::expect_equal(A, brute, bound, "brute-force singular ideal", "I(X, Sing(R))", out);
  return out;
}

/// For every base element r and comparable pair (x, y): the annihilator of
/// the single-pair element r*e_xy is essential in the algebra iff the
/// annihilator of r is essential in the base ring.
inline check_result verify_annihilator_transfer(instance_context& ctx, side s,
                                                const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& A = ctx.algebra();
  const auto& base = *ctx.base();
  for (elem r = 0; r < base.size(); ++r) {
    poll(dl, "annihilator transfer");
    const elem base_targets[1] = {r};
    const bool ess_base =
        is_essential(annihilator(ctx.base(), base_targets, s), ctx.base_table(s, dl));
    for (std::size_t p = 0; p < A->pair_count(); ++p) {
      const auto [x, y] = A->pairs()[p];
      const elem targets[1] = {scaled_pair_element(*A, r, x, y)};
      const bool ess_alg = is_essential(annihilator(A, targets, s), ctx.table(s, dl));
      if (ess_alg != ess_base) {
        out.status = check_status::fail;
        out.witness.summary = "transfer mismatch at r=" + base.describe(r) + ", pair (" +
                              ctx.poset().label(x) + "," + ctx.poset().label(y) + ")";
        out.witness.details.push_back(std::string("algebra-side essential: ") +
                                      (ess_alg ? "yes" : "no"));
        out.witness.details.push_back(std::string("base-side essential: ") +
                                      (ess_base ? "yes" : "no"));
        return out;
      }
    }
  }
  return out;
}

/// Section criterion for essential one-sided ideals: K is essential iff for
/// every pair anchored at the minimal (maximal) frontier the section
/// {r : r*e_xy in K} is essential in the base ring. Sections are also
/// checked to be one-sided ideals contained in the corresponding value set
/// of K.
inline check_result verify_essential_sections(instance_context& ctx, side s,
                                              const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& A = ctx.algebra();
  const auto& X = ctx.poset();
  const auto& base = ctx.base();

  std::vector<std::pair<std::string, sided_ideal>> family;
  family.emplace_back("zero ideal", zero_ideal(A, s));
  family.emplace_back("whole algebra", whole_ring_ideal(A, s));
  family.emplace_back("brute socle", ctx.brute_socle(s, dl));
  const std::size_t nmax = longest_interval(X);
  for (std::size_t n = 1; n <= nmax; ++n) {
    family.emplace_back("short-interval ideal n=" + std::to_string(n),
                        short_interval_zero_ideal(A, n, s));
    family.emplace_back("short-interval socle ideal n=" + std::to_string(n),
                        short_interval_socle_ideal(A, n, s, ctx.base_socle(s, dl)));
  }
  {
    const auto keys = s == side::left ? X.min_elements() : X.max_elements();
    const auto assign = detail::uniform_assignment(keys, ctx.base_socle(s, dl));
    family.emplace_back("socle closed form", s == side::left ? row_sum_ideal(A, assign)
                                                             : column_sum_ideal(A, assign));
  }
  std::mt19937_64 rng(ctx.config().seed ^ (A->size() * 2 + (s == side::left ? 0 : 1)));
  std::uniform_int_distribution<std::size_t> pick(0, A->size() - 1);
  for (int i = 0; i < 3; ++i) {
    const elem g = static_cast<elem>(pick(rng));
    family.emplace_back("principal ideal of " + A->describe(g), principal_ideal(A, g, s));
  }

  const auto anchors = s == side::left ? X.min_indices() : X.max_indices();
  for (const auto& [kname, K] : family) {
    poll(dl, "essential sections");
    const bool k_ess = is_essential(K, ctx.table(s, dl));
    bool all_sections_ess = true;
    for (const std::size_t a : anchors) {
      const auto others = s == side::left ? X.up_set_indices(a) : X.down_set_indices(a);
      for (const std::size_t y : others) {
        const std::size_t px = s == side::left ? a : y;
        const std::size_t py = s == side::left ? y : a;
        const std::size_t p = A->pair_index(px, py);
        sided_ideal section{base, s, bitvec(base->size())};
        bitvec value_set(base->size());
        K.members.for_each([&](std::size_t f) {
          value_set.set(A->value_at(static_cast<elem>(f), p));
        });
        for (elem r = 0; r < base->size(); ++r)
          if (K.contains(scaled_pair_element(*A, r, px, py))) section.members.set(r);
        detail::expect(is_one_sided_ideal(base, section.members, s),
                       "section of '" + kname + "' is not a " + side_name(s) + " ideal", out);
        detail::expect(section.members.is_subset_of(value_set),
                       "section of '" + kname + "' escapes the value set", out);
        if (out.status != check_status::pass) return out;
        if (!is_essential(section, ctx.base_table(s, dl))) all_sections_ess = false;
      }
    }
    if (k_ess != all_sections_ess) {
      out.status = check_status::fail;
      out.witness.summary = "essentiality biconditional fails for " + kname;
      out.witness.details.push_back(std::string("ideal essential: ") + (k_ess ? "yes" : "no"));
      out.witness.details.push_back(std::string("all sections essential: ") +
                                    (all_sections_ess ? "yes" : "no"));
      return out;
    }
  }
  return out;
}

/// The short-interval vanishing ideals: two-sided, essential and dense for
/// every bound n; their intersection is the row (column) form over the
/// frontier with full base values, and it contains the socle.
inline check_result verify_short_interval_full(instance_context& ctx, side s,
                                               const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& A = ctx.algebra();
  const auto& X = ctx.poset();
  const std::size_t nmax = longest_interval(X);
  std::optional<sided_ideal> last;
  std::optional<sided_ideal> meet;
  for (std::size_t n = 1; n <= nmax; ++n) {
    poll(dl, "short-interval ideals");
    sided_ideal Z = short_interval_zero_ideal(A, n, s);
    detail::expect(is_two_sided_ideal(A, Z.members),
                   "short-interval ideal n=" + std::to_string(n) + " is not two-sided", out);
    detail::expect(is_essential(Z, ctx.table(s, dl)),
                   "short-interval ideal n=" + std::to_string(n) + " is not essential", out);
    const bool dense = s == side::left ? is_dense(Z, dl) : is_right_dense(Z, dl);
    detail::expect(dense, "short-interval ideal n=" + std::to_string(n) + " is not dense", out);
    if (last)
      detail::expect(Z.members.is_subset_of(last->members),
                     "short-interval ideals are not decreasing", out);
    if (out.status != check_status::pass) return out;
    if (!meet)
      meet = Z;
    else
      meet->members &= Z.members;
    last = std::move(Z);
  }
  const auto frontier = s == side::left ? X.min_elements() : X.max_elements();
  const sided_ideal rows = anchored_rows_ideal(A, frontier, whole_ring_ideal(ctx.base(), s), s);
  detail::expect_equal(A, *meet, rows, "intersection of short-interval ideals",
                       "frontier rows over the base ring", out);
  detail::expect(ctx.brute_socle(s, dl).members.is_subset_of(meet->members),
                 "socle escapes the short-interval intersection", out);
  return out;
}

/// Same family with values confined to the base socle; meaningful when the
/// base ring is nonsingular on the relevant side (every finite ring is
/// Artinian, so that is the only live hypothesis).
inline check_result verify_short_interval_socle(instance_context& ctx, side s,
                                                const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  if (!ctx.base_singular(s, dl).is_zero()) {
    out.status = check_status::skipped_hypothesis;
    out.witness.summary = "base ring is singular on the " + std::string(side_name(s)) + " side";
    return out;
  }
  const auto& A = ctx.algebra();
  const auto& X = ctx.poset();
  const std::size_t nmax = longest_interval(X);
  std::optional<sided_ideal> meet;
  for (std::size_t n = 1; n <= nmax; ++n) {
    poll(dl, "short-interval socle ideals");
    sided_ideal D = short_interval_socle_ideal(A, n, s, ctx.base_socle(s, dl));
    detail::expect(is_two_sided_ideal(A, D.members),
                   "socle-valued ideal n=" + std::to_string(n) + " is not two-sided", out);
    detail::expect(is_essential(D, ctx.table(s, dl)),
                   "socle-valued ideal n=" + std::to_string(n) + " is not essential", out);
    const bool dense = s == side::left ? is_dense(D, dl) : is_right_dense(D, dl);
    detail::expect(dense, "socle-valued ideal n=" + std::to_string(n) + " is not dense", out);
    if (out.status != check_status::pass) return out;
    if (!meet)
      meet = D;
    else
      meet->members &= D.members;
  }
  const auto frontier = s == side::left ? X.min_elements() : X.max_elements();
  const auto assign = detail::uniform_assignment(frontier, ctx.base_socle(s, dl));
  const sided_ideal closed =
      s == side::left ? row_sum_ideal(A, assign) : column_sum_ideal(A, assign);
  detail::expect_equal(A, *meet, closed, "intersection of socle-valued ideals",
                       "socle closed form", out);
  detail::expect(ctx.brute_socle(s, dl).members.is_subset_of(meet->members),
                 "socle escapes the socle-valued intersection", out);
  return out;
}

/// When the poset is an antichain and the base socles agree, the left and
/// right socles of the algebra coincide and are the componentwise copies of
/// the base socle.
inline check_result verify_antichain_socle(instance_context& ctx,
                                           const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  const auto& X = ctx.poset();
  if (!X.is_antichain_poset()) {
    out.status = check_status::skipped_hypothesis;
    out.witness.summary = "poset is not an antichain";
    return out;
  }
  if (ctx.base_socle(side::left, dl).members != ctx.base_socle(side::right, dl).members) {
    out.status = check_status::skipped_hypothesis;
    out.witness.summary = "base socles differ by side";
    return out;
  }
  const auto& A = ctx.algebra();
  const auto& socl = ctx.brute_socle(side::left, dl);
  const auto& socr = ctx.brute_socle(side::right, dl);
  detail::expect(socl.members == socr.members, "left and right socles differ", out);
  const sided_ideal componentwise = subalgebra_over_ideal(A, ctx.base_socle(side::left, dl));
  detail::expect_equal(A, socl, componentwise, "brute-force socle", "componentwise socle",
                       out);
  return out;
}

/// Socle via the decomposition into the part reachable from the frontier:
/// anchors are the minimal elements of the induced reachable part, computed
/// through the decomposition rather than assumed equal to the frontier.
inline check_result verify_reachable_socle(instance_context& ctx, side s,
                                           const deadline* dl = nullptr) {
  check_result out;
  ctx.require_enumerable();
  if (!ctx.base_singular(s, dl).is_zero()) {
    out.status = check_status::skipped_hypothesis;
    out.witness.summary = "base ring is singular on the " + std::string(side_name(s)) + " side";
    return out;
  }
  const auto& A = ctx.algebra();
  const finite_poset oriented = s == side::left ? ctx.poset() : ctx.poset().reversed();
  const yz_decomposition d = yz_decompose(oriented);
  detail::expect(d.z_part.empty(), "a finite poset left an unreachable part", out);
  if (out.status != check_status::pass) return out;
  const auto anchors = oriented.induced(d.y_part).min_elements();
  const sided_ideal closed = anchored_rows_ideal(A, anchors, ctx.base_socle(s, dl), s);
  detail::expect_equal(A, ctx.brute_socle(s, dl), closed, "brute-force socle",
                       "reachable-part closed form", out);
  return out;
}

// --- registry and runner --------------------------------------------------------

struct check_spec {
  std::string id;
  std::function<check_result(instance_context&, const deadline*)> run;  // null: permanent
  std::string permanent_note;
};

inline const std::vector<check_spec>& check_registry() {
  static const std::vector<check_spec> registry = [] {
    std::vector<check_spec> r;
    auto add = [&r](std::string id, auto fn) {
      r.push_back(check_spec{std::move(id), fn, {}});
    };
    add("min_socle", [](instance_context& c, const deadline* dl) {
      return verify_socle_closed_form(c, side::left, dl);
    });
    add("max_socle", [](instance_context& c, const deadline* dl) {
      return verify_socle_closed_form(c, side::right, dl);
    });
    for (side s : {side::left, side::right}) {
      const std::string sfx = std::string("_") + side_name(s);
      add("singular_chain" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_singular_sandwich(c, s, dl);
      });
      add("singular_subalgebra" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_singular_subalgebra(c, s, dl);
      });
      add("annihilator_transfer" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_annihilator_transfer(c, s, dl);
      });
      add("essential_sections" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_essential_sections(c, s, dl);
      });
      add("short_interval_full" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_short_interval_full(c, s, dl);
      });
      add("short_interval_socle" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_short_interval_socle(c, s, dl);
      });
      add("reachable_socle" + sfx, [s](instance_context& c, const deadline* dl) {
        return verify_reachable_socle(c, s, dl);
      });
    }
    add("antichain_socle", [](instance_context& c, const deadline* dl) {
      return verify_antichain_socle(c, dl);
    });
    // Statements whose hypotheses need an infinite poset; recorded so the
    // registry is visibly complete, never executable at this scale.
    auto out_of_scope = [&r](std::string id, std::string note) {
      r.push_back(check_spec{std::move(id), nullptr, std::move(note)});
    };
    out_of_scope("empty_min_socle",
                 "socle vanishing when no minimal elements exist needs an infinite poset");
    out_of_scope("doubly_infinite_chain_socle",
                 "equal one-sided socles on the unbounded chain need an infinite poset");
    out_of_scope("upper_finite_nonmaximal_min",
                 "an upper-finite poset whose minimal elements fail to be a maximal "
                 "antichain needs infinitely many elements");
    return r;
  }();
  return registry;
}

inline std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& c : check_registry()) out.push_back(c.id);
  return out;
}

/// Partner id under order/ring duality: the left-side verdict on (X, R)
/// must match the partner's verdict on (X reversed, R opposite).
inline std::string dual_check_id(const std::string& id) {
  if (id == "min_socle") return "max_socle";
  if (id == "max_socle") return "min_socle";
  const auto swap_suffix = [&](const char* from, const char* to) -> std::optional<std::string> {
    const std::string f = from;
    if (id.size() > f.size() && id.compare(id.size() - f.size(), f.size(), f) == 0)
      return id.substr(0, id.size() - f.size()) + to;
    return std::nullopt;
  };
  if (auto r = swap_suffix("_left", "_right")) return *r;
  if (auto r = swap_suffix("_right", "_left")) return *r;
  return id;  // side-symmetric and out-of-scope entries are self-dual
}

struct suite_instance {
  std::string poset_name;
  finite_poset poset;
  std::string ring_spec_text;
};

namespace detail {

inline instance_report run_instance(const suite_instance& inst, const caps& cfg,
                                    const std::vector<std::string>& only_ids) {
  instance_report rep;
  rep.poset_name = inst.poset_name;
  rep.ring_name = inst.ring_spec_text;

  auto wanted = [&](const std::string& id) {
    if (only_ids.empty()) return true;
    for (const auto& w : only_ids)
      if (w == id) return true;
    return false;
  };

  std::optional<instance_context> ctx;
  std::string construction_cap_reason;
  try {
    ring_ptr base = parse_ring_spec(inst.ring_spec_text, cfg);
    rep.ring_name = base->name();
    ctx.emplace(inst.poset_name, inst.poset, std::move(base), cfg);
  } catch (const error& e) {
    if (is_cap_error(e.code())) {
      construction_cap_reason = e.what();
    } else {
      rep.input_error = e.what();
      return rep;
    }
  }

  for (const auto& spec : check_registry()) {
    if (!wanted(spec.id)) continue;
    check_result res;
    res.id = spec.id;
    if (!spec.run) {
      res.status = check_status::out_of_scope;
      res.witness.summary = spec.permanent_note;
      rep.checks.push_back(std::move(res));
      continue;
    }
    if (!construction_cap_reason.empty()) {
      res.status = check_status::skipped_cap;
      res.witness.summary = construction_cap_reason;
      rep.caps_hit.push_back(spec.id);
      rep.checks.push_back(std::move(res));
      continue;
    }
    const auto started = std::chrono::steady_clock::now();
    const deadline dl = deadline::after_seconds(cfg.timeout_s);
    try {
      res = spec.run(*ctx, &dl);
      res.id = spec.id;
    } catch (const error& e) {
      if (is_cap_error(e.code())) {
        res.status = check_status::skipped_cap;
        res.witness.summary = e.what();
        rep.caps_hit.push_back(spec.id);
      } else {
        res.status = check_status::fail;
        res.witness.summary = std::string("unexpected error: ") + e.what();
      }
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    rep.checks.push_back(std::move(res));
  }
  return rep;
}

}  // namespace detail

/// Runs every registered check on every instance. Instances may run on
/// parallel workers; the report keeps input order either way.
inline verification_report run_suite(const std::vector<suite_instance>& instances,
                                     const caps& cfg, std::size_t jobs = 1,
                                     const std::vector<std::string>& only_ids = {}) {
  verification_report report;
  report.instances.resize(instances.size());
  if (jobs <= 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      report.instances[i] = detail::run_instance(instances[i], cfg, only_ids);
  } else {
    std::vector<std::future<instance_report>> futures(instances.size());
    std::size_t next = 0;
    while (next < instances.size()) {
      const std::size_t batch = std::min(jobs, instances.size() - next);
      for (std::size_t j = 0; j < batch; ++j)
        futures[next + j] = std::async(std::launch::async, [&, idx = next + j] {
          return detail::run_instance(instances[idx], cfg, only_ids);
        });
      for (std::size_t j = 0; j < batch; ++j)
        report.instances[next + j] = futures[next + j].get();
      next += batch;
    }
  }
  report.tally();
  return report;
}

}  // namespace soclelab
