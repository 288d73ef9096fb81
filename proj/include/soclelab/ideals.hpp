#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "soclelab/bitvec.hpp"
#include "soclelab/caps.hpp"
#include "soclelab/error.hpp"
#include "soclelab/ring.hpp"

namespace soclelab {

enum class side : std::uint8_t { left, right };

inline side opposite(side s) { return s == side::left ? side::right : side::left; }
inline const char* side_name(side s) { return s == side::left ? "left" : "right"; }

/// A one-sided ideal of a finite ring, stored as a membership bitset over
/// element indices. Always contains zero and is closed under addition,
/// negation, and ring multiplication on the declared side.
struct sided_ideal {
  ring_ptr ring;
  side s = side::left;
  bitvec members;

  std::size_t count() const { return members.count(); }
  bool contains(elem a) const { return members.test(a); }
  bool is_zero() const { return count() == 1; }
  bool is_whole_ring() const { return count() == ring->size(); }
  std::vector<elem> elements() const {
    std::vector<elem> out;
    out.reserve(count());
    members.for_each([&](std::size_t i) { out.push_back(static_cast<elem>(i)); });
    return out;
  }
};

inline sided_ideal zero_ideal(ring_ptr R, side s) {
  sided_ideal I{std::move(R), s, bitvec(0)};
  I.members = bitvec(I.ring->size());
  I.members.set(I.ring->zero());
  return I;
}

inline sided_ideal whole_ring_ideal(ring_ptr R, side s) {
  sided_ideal I{std::move(R), s, bitvec(0)};
  I.members = bitvec(I.ring->size());
  for (std::size_t a = 0; a < I.ring->size(); ++a) I.members.set(a);
  return I;
}

/// Ra = {ra : r in R} on the left, aR on the right. The ring is unital, so
/// the generator itself is a member.
inline sided_ideal principal_ideal(ring_ptr R, elem a, side s) {
  sided_ideal I{std::move(R), s, bitvec(0)};
  const auto& r = *I.ring;
  I.members = bitvec(r.size());
  for (elem x = 0; x < r.size(); ++x)
    I.members.set(s == side::left ? r.mul(x, a) : r.mul(a, x));
  return I;
}

/// Sum of two one-sided ideals of the same ring and side. Since both are
/// additive subgroups, the elementwise sum set is already the ideal sum.
inline sided_ideal ideal_sum(const sided_ideal& A, const sided_ideal& B) {
  if (A.s != B.s) fail(errc::side_mismatch, "summing ideals of different sides");
  sided_ideal out{A.ring, A.s, bitvec(A.ring->size())};
  const auto& r = *A.ring;
  const auto bs = B.elements();
  A.members.for_each([&](std::size_t a) {
    for (elem b : bs) out.members.set(r.add(static_cast<elem>(a), b));
  });
  return out;
}

inline sided_ideal intersect(const sided_ideal& A, const sided_ideal& B) {
  if (A.s != B.s) fail(errc::side_mismatch, "intersecting ideals of different sides");
  sided_ideal out = A;
  out.members &= B.members;
  return out;
}

/// Smallest one-sided ideal containing the generators: the additive closure
/// of the union of their principal ideals, folded as iterated ideal sums.
inline sided_ideal ideal_closure(ring_ptr R, std::span<const elem> gens, side s) {
  sided_ideal out = zero_ideal(R, s);
  for (elem g : gens) out = ideal_sum(out, principal_ideal(R, g, s));
  return out;
}

/// side == left:  {r : rs = 0 for every s in targets}   (a left ideal)
/// side == right: {r : sr = 0 for every s in targets}   (a right ideal)
inline sided_ideal annihilator(ring_ptr R, std::span<const elem> targets, side s) {
  sided_ideal out{std::move(R), s, bitvec(0)};
  const auto& r = *out.ring;
  out.members = bitvec(r.size());
  for (elem x = 0; x < r.size(); ++x) {
    bool kills = true;
    for (elem t : targets) {
      const elem p = s == side::left ? r.mul(x, t) : r.mul(t, x);
      if (p != r.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.members.set(x);
  }
  return out;
}

/// E:a = {r : ra in E} for a left ideal E; again a left ideal, containing E.
inline sided_ideal transporter(const sided_ideal& E, elem a) {
  if (E.s != side::left) fail(errc::side_mismatch, "transporter needs a left ideal");
  sided_ideal out{E.ring, side::left, bitvec(E.ring->size())};
  const auto& r = *E.ring;
  for (elem x = 0; x < r.size(); ++x)
    if (E.members.test(r.mul(x, a))) out.members.set(x);
  return out;
}

namespace detail {

// Right-handed transporter {r : ar in D}; used by the right-dense test.
inline sided_ideal transporter_right(const sided_ideal& D, elem a) {
  sided_ideal out{D.ring, side::right, bitvec(D.ring->size())};
  const auto& r = *D.ring;
  for (elem x = 0; x < r.size(); ++x)
    if (D.members.test(r.mul(a, x))) out.members.set(x);
  return out;
}

}  // namespace detail

/// All principal ideals of one side, deduplicated. Built once per ring and
/// shared by the essential/socle/singular scans.
class principal_table {
 public:
  principal_table(ring_ptr R, side s, const deadline* dl = nullptr)
      : ring_(std::move(R)), side_(s) {
    const auto& r = *ring_;
    index_of_.resize(r.size());
    std::unordered_map<bitvec, std::uint32_t, bitvec_hash> seen;
    for (elem a = 0; a < r.size(); ++a) {
      if ((a & 0xff) == 0) poll(dl, "principal-ideal table");
      bitvec m(r.size());
      for (elem x = 0; x < r.size(); ++x)
        m.set(s == side::left ? r.mul(x, a) : r.mul(a, x));
      const auto [it, fresh] =
          seen.emplace(m, static_cast<std::uint32_t>(distinct_.size()));
      index_of_[a] = it->second;
      if (fresh) {
        generator_.push_back(a);
        distinct_.push_back(std::move(m));
      }
    }
  }

  ring_ptr ring() const { return ring_; }
  side table_side() const { return side_; }
  const bitvec& of(elem a) const { return distinct_[index_of_[a]]; }
  /// Distinct principal ideals in first-generator order.
  const std::vector<bitvec>& distinct() const { return distinct_; }
  /// First generator of each distinct principal ideal.
  const std::vector<elem>& generators() const { return generator_; }

 private:
  ring_ptr ring_;
  side side_;
  std::vector<std::uint32_t> index_of_;
  std::vector<elem> generator_;
  std::vector<bitvec> distinct_;
};

/// Essential test, reduced to principal probes: E is essential iff it meets
/// every nonzero principal ideal nontrivially. The reduction is valid
/// because every nonzero one-sided ideal contains the nonzero principal
/// ideal of any of its nonzero members, and probing the distinct principal
/// ideals covers them all.
inline bool is_essential(const sided_ideal& E, const principal_table& pt) {
  if (E.s != pt.table_side() || E.ring != pt.ring())
    fail(errc::side_mismatch, "essential test against a foreign principal table");
  const elem z = E.ring->zero();
  for (const auto& P : pt.distinct()) {
    if (P.count() == 1) continue;  // the zero ideal
    if (!P.intersects_excluding(E.members, z)) return false;
  }
  return true;
}

inline bool is_essential(const sided_ideal& E) {
  return is_essential(E, principal_table(E.ring, E.s));
}

/// Dense test for left ideals: D is dense iff ann_r(D:a) = 0 for every a.
inline bool is_dense(const sided_ideal& D, const deadline* dl = nullptr) {
  if (D.s != side::left) fail(errc::side_mismatch, "density is defined for left ideals here");
  const auto& r = *D.ring;
  for (elem a = 0; a < r.size(); ++a) {
    poll(dl, "dense test");
    const sided_ideal T = transporter(D, a);
    const auto ts = T.elements();
    for (elem x = 0; x < r.size(); ++x) {
      if (x == r.zero()) continue;
      bool annihilates = true;
      for (elem t : ts)
        if (r.mul(t, x) != r.zero()) {
          annihilates = false;
          break;
        }
      if (annihilates) return false;  // nonzero right annihilator
    }
  }
  return true;
}

/// Mirror of is_dense for right ideals: ann_l({r : ar in D}) = 0 for all a.
inline bool is_right_dense(const sided_ideal& D, const deadline* dl = nullptr) {
  if (D.s != side::right) fail(errc::side_mismatch, "expected a right ideal");
  const auto& r = *D.ring;
  for (elem a = 0; a < r.size(); ++a) {
    poll(dl, "dense test");
    const sided_ideal T = detail::transporter_right(D, a);
    const auto ts = T.elements();
    for (elem x = 0; x < r.size(); ++x) {
      if (x == r.zero()) continue;
      bool annihilates = true;
      for (elem t : ts)
        if (r.mul(x, t) != r.zero()) {
          annihilates = false;
          break;
        }
      if (annihilates) return false;
    }
  }
  return true;
}

/// All minimal nonzero one-sided ideals. Every minimal ideal is principal
/// (on any of its nonzero members) and every inclusion-minimal nonzero
/// principal ideal is globally minimal, so the principal list suffices.
inline std::vector<sided_ideal> minimal_ideals(ring_ptr R, side s,
                                               const principal_table* pt = nullptr) {
  if (pt && (pt->table_side() != s || pt->ring() != R))
    fail(errc::side_mismatch, "minimal ideals against a foreign principal table");
  std::optional<principal_table> local;
  if (!pt) local.emplace(R, s);
  const principal_table& table = pt ? *pt : *local;
  const auto& cands = table.distinct();
  std::vector<sided_ideal> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].count() == 1) continue;  // zero ideal
    bool minimal = true;
    for (std::size_t j = 0; j < cands.size() && minimal; ++j) {
      if (j == i || cands[j].count() == 1) continue;
      if (cands[j].is_subset_of(cands[i]) && cands[j] != cands[i]) minimal = false;
    }
    if (minimal) out.push_back(sided_ideal{R, s, cands[i]});
  }
  return out;
}

/// Left/right socle: the ideal sum of all minimal one-sided ideals. The
/// independent oracle lives in socle_by_essential_intersection.
inline sided_ideal socle(ring_ptr R, side s, const principal_table* pt = nullptr) {
  sided_ideal out = zero_ideal(R, s);
  for (const auto& M : minimal_ideals(R, s, pt)) out = ideal_sum(out, M);
  return out;
}

/// {a : the one-sided annihilator of a is essential on that side}. The
/// result is checked to be a two-sided ideal, which the theory guarantees.
inline sided_ideal singular_ideal(ring_ptr R, side s, const principal_table* pt = nullptr,
                                  const deadline* dl = nullptr) {
  if (pt && (pt->table_side() != s || pt->ring() != R))
    fail(errc::side_mismatch, "singular ideal against a foreign principal table");
  std::optional<principal_table> local;
  if (!pt) local.emplace(R, s);
  const principal_table& table = pt ? *pt : *local;
  const auto& r = *R;
  sided_ideal out{R, s, bitvec(r.size())};
  for (elem a = 0; a < r.size(); ++a) {
    if ((a & 0x3f) == 0) poll(dl, "singular ideal");
    sided_ideal ann{R, s, bitvec(r.size())};
    for (elem x = 0; x < r.size(); ++x) {
      const elem p = s == side::left ? r.mul(x, a) : r.mul(a, x);
      if (p == r.zero()) ann.members.set(x);
    }
    if (is_essential(ann, table)) out.members.set(a);
  }
  for (elem a : out.elements())
    for (elem x = 0; x < r.size(); ++x)
      if (!out.members.test(r.mul(x, a)) || !out.members.test(r.mul(a, x)))
        fail(errc::internal_error, "singular ideal of " + r.name() + " is not two-sided");
  return out;
}

/// Every one-sided ideal, as the closure of the principal ideals under
/// ideal sum (worklist saturation, one principal summand at a time — every
/// ideal is a finite sum of principal ideals). Gated by oracle_cap.
inline std::vector<sided_ideal> all_ideals(ring_ptr R, side s, const caps& cfg = {},
                                           const deadline* dl = nullptr) {
  if (R->size() > cfg.oracle_cap)
    fail(errc::oracle_cap_exceeded,
         R->name() + " has " + std::to_string(R->size()) + " elements, oracle cap is " +
             std::to_string(cfg.oracle_cap));
  principal_table pt(R, s, dl);

  std::unordered_set<bitvec, bitvec_hash> seen;
  std::deque<bitvec> queue;
  bitvec zero_members(R->size());
  zero_members.set(R->zero());
  seen.insert(zero_members);
  queue.push_back(zero_members);
  for (const auto& P : pt.distinct())
    if (seen.insert(P).second) queue.push_back(P);

  const auto& r = *R;
  std::vector<bitvec> done;
  while (!queue.empty()) {
    poll(dl, "ideal enumeration");
    bitvec I = std::move(queue.front());
    queue.pop_front();
    std::vector<elem> is;
    is.reserve(I.count());
    I.for_each([&](std::size_t i) { is.push_back(static_cast<elem>(i)); });
    for (const auto& P : pt.distinct()) {
      if (P.is_subset_of(I)) continue;
      bitvec J(r.size());
      P.for_each([&](std::size_t p) {
        for (elem i : is) J.set(r.add(static_cast<elem>(p), i));
      });
      if (seen.insert(J).second) queue.push_back(J);
    }
    done.push_back(std::move(I));
  }

  std::sort(done.begin(), done.end(), [](const bitvec& a, const bitvec& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.lex_less(b);
  });
  std::vector<sided_ideal> out;
  out.reserve(done.size());
  for (auto& m : done) out.push_back(sided_ideal{R, s, std::move(m)});
  return out;
}

/// Independent socle oracle: the intersection of all essential one-sided
/// ideals. Total for finite rings; do not extrapolate the equality with the
/// minimal-ideal sum beyond them.
inline sided_ideal socle_by_essential_intersection(ring_ptr R, side s, const caps& cfg = {},
                                                   const deadline* dl = nullptr) {
  const auto ideals = all_ideals(R, s, cfg, dl);
  principal_table pt(R, s, dl);
  sided_ideal out = whole_ring_ideal(R, s);
  for (const auto& I : ideals) {
    poll(dl, "essential intersection");
    if (is_essential(I, pt)) out.members &= I.members;
  }
  return out;
}

/// Membership-level closure checks, used to validate constructed subsets.
inline bool is_one_sided_ideal(const ring_ptr& R, const bitvec& members, side s) {
  const auto& r = *R;
  if (!members.test(r.zero())) return false;
  std::vector<elem> ms;
  members.for_each([&](std::size_t i) { ms.push_back(static_cast<elem>(i)); });
  for (elem a : ms) {
    for (elem b : ms)
      if (!members.test(r.add(a, b))) return false;
    for (elem x = 0; x < r.size(); ++x) {
      const elem p = s == side::left ? r.mul(x, a) : r.mul(a, x);
      if (!members.test(p)) return false;
    }
  }
  return true;
}

inline bool is_two_sided_ideal(const ring_ptr& R, const bitvec& members) {
  return is_one_sided_ideal(R, members, side::left) &&
         is_one_sided_ideal(R, members, side::right);
}

}  // namespace soclelab
