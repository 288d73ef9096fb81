// Acceptance suite: end-to-end checks of the brute-force oracles against the
// closed forms on the bundled corpus, one verdict line per criterion.
// Criteria with a stated wall-clock budget fail when they exceed it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "soclelab/soclelab.hpp"

using namespace soclelab;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_s,
               const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_budget = budget_s <= 0.0 || secs <= budget_s;
  const bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.1f s", pass ? "PASS" : "FAIL", number,
              title.c_str(), secs);
  if (budget_s > 0.0) std::printf(", budget %.0f s", budget_s);
  std::printf(")\n");
  if (!detail.empty()) std::printf("           %s\n", detail.c_str());
  if (ok && !in_budget) std::printf("           exceeded the time budget\n");
}

instance_context make_context(const std::string& poset, const std::string& ring,
                              const caps& cfg = {}) {
  return instance_context(poset, builtin_poset(poset), parse_ring_spec(ring, cfg), cfg);
}

const check_spec& registry_entry(const std::string& id) {
  for (const auto& spec : check_registry())
    if (spec.id == id) return spec;
  throw std::logic_error("unknown check id " + id);
}

bool flagship_socles(std::string& detail) {
  auto ctx = make_context("vee", "Z4");
  const auto& A = ctx.algebra();
  if (A->size() != 1024) {
    detail = "unexpected algebra size " + std::to_string(A->size());
    return false;
  }
  const auto& X = ctx.poset();

  const auto& socl = ctx.brute_socle(side::left);
  const auto closed_l =
      row_sum_ideal(A, {{X.min_elements().front(), ctx.base_socle(side::left)}});
  if (socl.members != closed_l.members || socl.count() != 8) {
    detail = "left socle: brute " + std::to_string(socl.count()) + ", closed form " +
             std::to_string(closed_l.count()) + ", expected 8";
    return false;
  }

  const auto& socr = ctx.brute_socle(side::right);
  std::map<std::string, sided_ideal> maxassign;
  for (const auto& m : X.max_elements()) maxassign.emplace(m, ctx.base_socle(side::right));
  const auto closed_r = column_sum_ideal(A, maxassign);
  if (socr.members != closed_r.members) {
    detail = "right socle differs from the column closed form";
    return false;
  }

  // value profile: zero at (x,x); {0,2} free exactly on (x,y),(x,z),(y,y),(z,z)
  const std::size_t xx = A->pair_index(X.index("x"), X.index("x"));
  const std::size_t free_pairs[4] = {
      A->pair_index(X.index("x"), X.index("y")), A->pair_index(X.index("x"), X.index("z")),
      A->pair_index(X.index("y"), X.index("y")), A->pair_index(X.index("z"), X.index("z"))};
  for (elem f : socr.elements()) {
    if (A->value_at(f, xx) != 0) {
      detail = "right socle member with a nonzero (x,x) entry";
      return false;
    }
    for (std::size_t p : free_pairs)
      if (A->value_at(f, p) != 0 && A->value_at(f, p) != 2) {
        detail = "right socle member with a value outside {0,2}";
        return false;
      }
  }
  if (socr.count() != 16) {  // all 2^4 combinations on the free pairs
    detail = "right socle has " + std::to_string(socr.count()) + " elements, expected 2^4";
    return false;
  }
  if (socl.members == socr.members) {
    detail = "left and right socles coincide";
    return false;
  }
  return true;
}

bool flagship_singular(std::string& detail) {
  auto ctx = make_context("vee", "Z4");
  const auto& A = ctx.algebra();
  const auto& singl = ctx.brute_singular(side::left);
  const auto bound = subalgebra_over_ideal(A, ctx.base_singular(side::left));
  if (singl.members != bound.members || singl.count() != 32) {
    detail = "singular ideal: brute " + std::to_string(singl.count()) +
             ", I(X, Sing(R)) " + std::to_string(bound.count()) + ", expected 32";
    return false;
  }
  const auto socle_members = ctx.brute_socle(side::left).elements();
  const auto annr = annihilator(A, socle_members, side::right);
  if (annr.members != singl.members) {
    detail = "right annihilator of the left socle has " + std::to_string(annr.count()) +
             " elements, singular ideal has " + std::to_string(singl.count());
    return false;
  }
  return true;
}

bool nonsingular_transfer(std::string& detail) {
  const caps cfg;
  std::size_t checked = 0, skipped = 0;
  for (const auto& poset : builtin_posets()) {
    for (const char* ring : {"F2", "F3", "Z6"}) {
      const std::size_t ring_size = spec_size(parse_ring_spec_tree(ring));
      if (algebra_size_of(poset, ring_size) > cfg.enumeration_cap) {
        ++skipped;
        continue;
      }
      auto ctx = make_context(poset.name(), ring, cfg);
      if (!ctx.brute_singular(side::left).is_zero()) {
        detail = "nonzero singular ideal on " + ctx.algebra()->name();
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances nonsingular, " + std::to_string(skipped) +
           " skipped over the enumeration cap";
  return checked > 0;
}

bool socle_closed_form_sweep(std::string& detail) {
  std::size_t checked = 0;
  for (const auto& inst : builtin_corpus()) {
    auto ctx = instance_context(inst.poset_name, inst.poset,
                                parse_ring_spec(inst.ring_spec_text), caps{});
    for (side s : {side::left, side::right}) {
      const auto res = verify_socle_closed_form(ctx, s);
      if (res.status != check_status::pass) {
        detail = inst.poset_name + " / " + inst.ring_spec_text + " (" + side_name(s) +
                 "): " + res.witness.summary;
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " socle comparisons, zero failures";
  return checked > 0;
}

bool annihilator_transfer_sweep(std::string& detail) {
  const caps cfg;
  std::size_t ran = 0, skipped = 0;
  for (const char* ring : {"Z4", "Z6", "F2", "U2(F2)"}) {
    for (const char* poset : {"chain3", "vee"}) {
      const std::size_t ring_size = spec_size(parse_ring_spec_tree(ring));
      if (algebra_size_of(builtin_poset(poset), ring_size) > cfg.enumeration_cap) {
        ++skipped;
        continue;
      }
      auto ctx = make_context(poset, ring, cfg);
      const auto res = verify_annihilator_transfer(ctx, side::left);
      if (res.status != check_status::pass) {
        detail = std::string(poset) + " / " + ring + ": " + res.witness.summary;
        return false;
      }
      ++ran;
    }
  }
  detail = std::to_string(ran) + " instances swept, " + std::to_string(skipped) +
           " skipped over the enumeration cap";
  return ran > 0;
}

bool minimal_row_ideals(std::string& detail) {
  for (const char* poset : {"vee", "chain3"}) {
    auto ctx = make_context(poset, "F2");
    const auto& A = ctx.algebra();
    const auto bottom = ctx.poset().min_elements().front();
    const auto algebra_minimals = minimal_ideals(A, side::left, &ctx.table(side::left));
    for (const auto& M : minimal_ideals(ctx.base(), side::left)) {
      const auto S = row_subspace(A, bottom, M);
      sided_ideal sum = zero_ideal(A, side::left);
      for (elem g : S.elements()) {
        if (g == A->zero()) continue;
        const auto gen = principal_ideal(A, g, side::left);
        bool minimal = false;
        for (const auto& N : algebra_minimals) minimal = minimal || N.members == gen.members;
        if (!minimal) {
          detail = std::string(poset) + ": " + A->describe(g) +
                   " does not generate a minimal left ideal";
          return false;
        }
        sum = ideal_sum(sum, gen);
      }
      if (sum.members != S.members) {
        detail = std::string(poset) + ": generated sum differs from the row subspace";
        return false;
      }
    }
  }
  return true;
}

bool chain_socles(std::string& detail) {
  for (const char* poset : {"singleton", "chain2", "chain3"}) {
    for (const char* ring : {"F2", "Z4"}) {
      auto ctx = make_context(poset, ring);
      const auto bottom = ctx.poset().min_elements().front();
      const auto S = row_subspace(ctx.algebra(), bottom, ctx.base_socle(side::left));
      if (ctx.brute_socle(side::left).members != S.members) {
        detail = std::string(poset) + " / " + ring + ": socle is not the bottom row";
        return false;
      }
    }
  }
  return true;
}

bool antichain_socles(std::string& detail) {
  for (const char* poset : {"singleton", "antichain2", "antichain3"}) {
    for (const char* ring : {"Z4", "F2"}) {
      auto ctx = make_context(poset, ring);
      const auto& socl = ctx.brute_socle(side::left);
      const auto& socr = ctx.brute_socle(side::right);
      const auto componentwise =
          subalgebra_over_ideal(ctx.algebra(), ctx.base_socle(side::left));
      if (socl.members != socr.members || socl.members != componentwise.members) {
        detail = std::string(poset) + " / " + ring + ": socles differ";
        return false;
      }
    }
  }
  return true;
}

bool duality_metamorphic(std::string& detail) {
  const caps cfg;
  std::size_t compared = 0, mismatched = 0;
  for (const auto& inst : builtin_corpus(cfg)) {
    auto ctx = instance_context(inst.poset_name, inst.poset,
                                parse_ring_spec(inst.ring_spec_text, cfg), cfg);
    auto dual = instance_context(inst.poset_name + "^op", inst.poset.reversed(),
                                 make_opposite(parse_ring_spec(inst.ring_spec_text, cfg), cfg),
                                 cfg);
    for (const auto& spec : check_registry()) {
      if (!spec.run) continue;
      const auto mine = spec.run(ctx, nullptr);
      const auto theirs = registry_entry(dual_check_id(spec.id)).run(dual, nullptr);
      ++compared;
      if (std::string(status_key(mine.status)) != status_key(theirs.status)) {
        ++mismatched;
        if (detail.empty())
          detail = inst.poset_name + " / " + inst.ring_spec_text + ": " + spec.id + "=" +
                   status_key(mine.status) + " vs " + dual_check_id(spec.id) + "=" +
                   status_key(theirs.status);
      }
    }
  }
  if (mismatched == 0)
    detail = std::to_string(compared) + " verdict pairs compared, zero discrepancies";
  return mismatched == 0 && compared > 0;
}

bool socle_oracle_agreement(std::string& detail) {
  const caps cfg;
  std::vector<std::pair<std::string, ring_ptr>> rings;
  for (const auto& spec : builtin_ring_specs())
    rings.emplace_back(spec, parse_ring_spec(spec, cfg));
  bool saw_flagship_f2 = false;
  for (const auto& inst : builtin_corpus(cfg)) {
    const std::size_t ring_size = spec_size(parse_ring_spec_tree(inst.ring_spec_text));
    if (algebra_size_of(inst.poset, ring_size) > 64) continue;
    auto A = make_incidence_algebra(inst.poset, parse_ring_spec(inst.ring_spec_text, cfg), cfg);
    saw_flagship_f2 =
        saw_flagship_f2 || (inst.poset_name == "vee" && inst.ring_spec_text == "F2");
    rings.emplace_back(A->name(), A);
  }
  std::size_t checked = 0;
  for (const auto& [name, R] : rings) {
    if (R->size() > 64) continue;
    for (side s : {side::left, side::right}) {
      const auto by_minimals = socle(R, s);
      const auto by_essentials = socle_by_essential_intersection(R, s, cfg);
      if (by_minimals.members != by_essentials.members) {
        detail = name + " (" + side_name(s) + "): oracle disagreement";
        return false;
      }
      ++checked;
    }
  }
  if (!saw_flagship_f2) {
    detail = "the 32-element flagship algebra over F2 was not covered";
    return false;
  }
  detail = std::to_string(checked) + " oracle comparisons, zero disagreements";
  return checked > 0;
}

}  // namespace

int main() {
  criterion(1, "flagship socles match the closed forms on both sides", 60.0,
            flagship_socles);
  criterion(2, "flagship singular ideal equals I(X, Sing(R)) and the socle annihilator",
            120.0, flagship_singular);
  criterion(3, "nonsingular base rings transfer to nonsingular algebras", 30.0,
            nonsingular_transfer);
  criterion(4, "socle closed form holds on every corpus instance, both sides", 0.0,
            socle_closed_form_sweep);
  criterion(5, "annihilator essentiality transfers for every element and pair", 60.0,
            annihilator_transfer_sweep);
  criterion(6, "nonzero bottom-row elements generate minimal left ideals", 0.0,
            minimal_row_ideals);
  criterion(7, "chain socles live in the bottom row", 0.0, chain_socles);
  criterion(8, "antichain socles coincide componentwise", 0.0, antichain_socles);
  criterion(9, "left verdicts equal right verdicts on the dual instance", 0.0,
            duality_metamorphic);
  criterion(10, "socle oracles agree on every small corpus ring", 0.0,
            socle_oracle_agreement);
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
