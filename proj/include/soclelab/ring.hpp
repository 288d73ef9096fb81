#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "soclelab/caps.hpp"
#include "soclelab/error.hpp"

namespace soclelab {

/// Ring element handle: a canonical index in 0..size-1. Each concrete ring
/// documents its index encoding so reports are reproducible.
using elem = std::uint32_t;

/// A finite unital associative ring presented through element indices.
///
/// Base rings and incidence algebras both conform to this interface, so the
/// ideal machinery runs on either without change. Rings are immutable once
/// a factory hands them out: arithmetic tables are built eagerly at
/// construction time (never lazily), which keeps concurrent readers safe.
class finite_ring {
 public:
  virtual ~finite_ring() = default;

  std::size_t size() const { return size_; }
  elem zero() const { return zero_; }
  elem one() const { return one_; }

  elem add(elem a, elem b) const {
    return add_tab_.empty() ? add_impl(a, b) : elem{add_tab_[a * size_ + b]};
  }
  elem mul(elem a, elem b) const {
    return mul_tab_.empty() ? mul_impl(a, b) : elem{mul_tab_[a * size_ + b]};
  }
  elem neg(elem a) const { return neg_tab_.empty() ? neg_impl(a) : neg_tab_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  bool tables_cached() const { return !mul_tab_.empty(); }

  virtual std::string describe(elem a) const = 0;
  virtual std::string name() const = 0;

  // Structured arithmetic, bypassing any cached table. Exposed so tests can
  // assert table/structure agreement.
  elem add_structured(elem a, elem b) const { return add_impl(a, b); }
  elem mul_structured(elem a, elem b) const { return mul_impl(a, b); }
  elem neg_structured(elem a) const { return neg_impl(a); }

  /// Builds full add/mul/neg tables (2-byte entries). Called by factories
  /// when size <= table_cap; requires indices to fit 16 bits.
  void cache_tables() {
    if (tables_cached() || size_ > 0xffffu) return;
    add_tab_.resize(size_ * size_);
    mul_tab_.resize(size_ * size_);
    neg_tab_.resize(size_);
    for (elem a = 0; a < size_; ++a) {
      neg_tab_[a] = static_cast<elem>(neg_impl(a));
      for (elem b = 0; b < size_; ++b) {
        add_tab_[a * size_ + b] = static_cast<std::uint16_t>(add_impl(a, b));
        mul_tab_[a * size_ + b] = static_cast<std::uint16_t>(mul_impl(a, b));
      }
    }
  }

 protected:
  finite_ring(std::size_t size, elem zero_index, elem one_index)
      : size_(size), zero_(zero_index), one_(one_index) {}

  virtual elem add_impl(elem a, elem b) const = 0;
  virtual elem mul_impl(elem a, elem b) const = 0;
  virtual elem neg_impl(elem a) const = 0;

 private:
  std::size_t size_;
  elem zero_;
  elem one_;
  std::vector<std::uint16_t> add_tab_, mul_tab_;
  std::vector<elem> neg_tab_;
};

using ring_ptr = std::shared_ptr<const finite_ring>;

// --- axiom validation -------------------------------------------------------

namespace detail {

inline void axiom_violation(const finite_ring& r, const std::string& what) {
  fail(errc::internal_error, r.name() + " fails ring axiom: " + what);
}

inline void check_triple(const finite_ring& r, elem a, elem b, elem c) {
  if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
    axiom_violation(r, "additive associativity");
  if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
    axiom_violation(r, "multiplicative associativity");
  if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
    axiom_violation(r, "left distributivity");
  if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
    axiom_violation(r, "right distributivity");
}

}  // namespace detail

/// Asserts the ring axioms: exhaustively for size <= exhaustive_cap, by
/// seeded random sampling above. Throws errc::internal_error on violation.
inline void check_ring_axioms(const finite_ring& r, const caps& cfg) {
  const std::size_t n = r.size();
  for (elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) detail::axiom_violation(r, "additive identity");
    if (r.add(a, r.neg(a)) != r.zero()) detail::axiom_violation(r, "additive inverse");
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a)
      detail::axiom_violation(r, "multiplicative identity");
  }
  if (n <= cfg.exhaustive_cap) {
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) {
        if (r.add(a, b) != r.add(b, a)) detail::axiom_violation(r, "additive commutativity");
        for (elem c = 0; c < n; ++c) detail::check_triple(r, a, b, c);
      }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 4096; ++i) {
      const elem a = static_cast<elem>(pick(rng));
      const elem b = static_cast<elem>(pick(rng));
      const elem c = static_cast<elem>(pick(rng));
      if (r.add(a, b) != r.add(b, a)) detail::axiom_violation(r, "additive commutativity");
      detail::check_triple(r, a, b, c);
    }
  }
}

// --- concrete rings ---------------------------------------------------------

/// Z/n with elements indexed by their residue.
class zmod_ring final : public finite_ring {
 public:
  zmod_ring(std::uint64_t n, bool spelled_as_field)
      : finite_ring(static_cast<std::size_t>(n), 0, n == 1 ? 0 : 1),
        n_(n),
        field_(spelled_as_field) {}

  std::string describe(elem a) const override { return std::to_string(a); }
  std::string name() const override {
    return (field_ ? "F" : "Z") + std::to_string(n_);
  }

 protected:
  elem add_impl(elem a, elem b) const override {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<elem>(s >= n_ ? s - n_ : s);
  }
  elem mul_impl(elem a, elem b) const override {
    return static_cast<elem>((std::uint64_t{a} * b) % n_);
  }
  elem neg_impl(elem a) const override { return a == 0 ? 0 : static_cast<elem>(n_ - a); }

 private:
  std::uint64_t n_;
  bool field_;
};

/// Componentwise product. Index encoding is mixed-radix with component 0
/// least significant: index = sum_i c_i * prod_{j<i} |R_j|.
class product_ring final : public finite_ring {
 public:
  product_ring(std::vector<ring_ptr> factors, std::size_t total, elem zero_index,
               elem one_index)
      : finite_ring(total, zero_index, one_index), factors_(std::move(factors)) {}

  const std::vector<ring_ptr>& factors() const { return factors_; }

  elem project(elem a, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) a = static_cast<elem>(a / factors_[j]->size());
    return static_cast<elem>(a % factors_[i]->size());
  }

  std::string describe(elem a) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ", ";
      out += factors_[i]->describe(project(a, i));
    }
    return out + ")";
  }

  std::string name() const override {
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += " x ";
      out += factors_[i]->name();
    }
    return out;
  }

 protected:
  elem componentwise(elem a, elem b, bool multiply) const {
    elem out = 0;
    elem radix = 1;
    for (const auto& f : factors_) {
      const elem n = static_cast<elem>(f->size());
      const elem ca = a % n, cb = b % n;
      a /= n;
      b /= n;
      out = static_cast<elem>(out + (multiply ? f->mul(ca, cb) : f->add(ca, cb)) * radix);
      radix = static_cast<elem>(radix * n);
    }
    return out;
  }

  elem add_impl(elem a, elem b) const override { return componentwise(a, b, false); }
  elem mul_impl(elem a, elem b) const override { return componentwise(a, b, true); }
  elem neg_impl(elem a) const override {
    elem out = 0;
    elem radix = 1;
    for (const auto& f : factors_) {
      const elem n = static_cast<elem>(f->size());
      out = static_cast<elem>(out + f->neg(a % n) * radix);
      a /= n;
      radix = static_cast<elem>(radix * n);
    }
    return out;
  }

 private:
  std::vector<ring_ptr> factors_;
};

/// k-by-k matrices, or their upper-triangular subring, over a base ring.
///
/// Index encoding: the stored entry positions (row-major; all of them for
/// the full matrix ring, those with row <= column for the triangular one)
/// are mixed-radix digits with position 0 least significant, radix |base|.
class matrix_shape_ring final : public finite_ring {
 public:
  matrix_shape_ring(ring_ptr base, std::size_t k, bool upper_triangular,
                    std::size_t total)
      : finite_ring(total, 0, encode_identity(*base, k, upper_triangular)),
        base_(std::move(base)),
        k_(k),
        upper_(upper_triangular) {
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < k_; ++c)
        if (!upper_ || r <= c) positions_.emplace_back(r, c);
  }

  const ring_ptr& base() const { return base_; }
  std::size_t dim() const { return k_; }

  std::string describe(elem a) const override {
    const auto m = decode(a);
    std::string out = "[";
    for (std::size_t r = 0; r < k_; ++r) {
      if (r) out += ",";
      out += "[";
      for (std::size_t c = 0; c < k_; ++c) {
        if (c) out += ",";
        out += (upper_ && r > c) ? base_->describe(base_->zero())
                                 : base_->describe(m[r * k_ + c]);
      }
      out += "]";
    }
    return out + "]";
  }

  std::string name() const override {
    return std::string(upper_ ? "U" : "M") + std::to_string(k_) + "(" + base_->name() + ")";
  }

 protected:
  // Full k*k entry grid; suppressed positions stay at base zero.
  std::vector<elem> decode(elem a) const {
    std::vector<elem> m(k_ * k_, base_->zero());
    const elem n = static_cast<elem>(base_->size());
    for (auto [r, c] : positions_) {
      m[r * k_ + c] = a % n;
      a /= n;
    }
    return m;
  }

  elem encode(const std::vector<elem>& m) const {
    elem out = 0;
    elem radix = 1;
    const elem n = static_cast<elem>(base_->size());
    for (auto [r, c] : positions_) {
      out = static_cast<elem>(out + m[r * k_ + c] * radix);
      radix = static_cast<elem>(radix * n);
    }
    return out;
  }

  elem add_impl(elem a, elem b) const override {
    elem out = 0;
    elem radix = 1;
    const elem n = static_cast<elem>(base_->size());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      out = static_cast<elem>(out + base_->add(a % n, b % n) * radix);
      a /= n;
      b /= n;
      radix = static_cast<elem>(radix * n);
    }
    return out;
  }

  elem mul_impl(elem a, elem b) const override {
    const auto ma = decode(a);
    const auto mb = decode(b);
    std::vector<elem> mc(k_ * k_, base_->zero());
    for (auto [r, c] : positions_) {
      elem acc = base_->zero();
      for (std::size_t m = 0; m < k_; ++m) {
        if (upper_ && (m < r || m > c)) continue;
        acc = base_->add(acc, base_->mul(ma[r * k_ + m], mb[m * k_ + c]));
      }
      mc[r * k_ + c] = acc;
    }
    return encode(mc);
  }

  elem neg_impl(elem a) const override {
    elem out = 0;
    elem radix = 1;
    const elem n = static_cast<elem>(base_->size());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      out = static_cast<elem>(out + base_->neg(a % n) * radix);
      a /= n;
      radix = static_cast<elem>(radix * n);
    }
    return out;
  }

 private:
  static elem encode_identity(const finite_ring& base, std::size_t k, bool upper) {
    elem out = 0;
    elem radix = 1;
    const elem n = static_cast<elem>(base.size());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        if (upper && r > c) continue;
        out = static_cast<elem>(out + (r == c ? base.one() : base.zero()) * radix);
        radix = static_cast<elem>(radix * n);
      }
    return out;
  }

  ring_ptr base_;
  std::size_t k_;
  bool upper_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
};

/// Same carrier, multiplication reversed. Used by the duality metamorphic
/// checks; element indices and descriptions are shared with the inner ring.
class opposite_ring final : public finite_ring {
 public:
  explicit opposite_ring(ring_ptr inner)
      : finite_ring(inner->size(), inner->zero(), inner->one()), inner_(std::move(inner)) {}

  std::string describe(elem a) const override { return inner_->describe(a); }
  std::string name() const override { return inner_->name() + "^op"; }

 protected:
  elem add_impl(elem a, elem b) const override { return inner_->add(a, b); }
  elem mul_impl(elem a, elem b) const override { return inner_->mul(b, a); }
  elem neg_impl(elem a) const override { return inner_->neg(a); }

 private:
  ring_ptr inner_;
};

// --- factories --------------------------------------------------------------

namespace detail {

template <typename R>
ring_ptr finalize(std::shared_ptr<R> r, const caps& cfg) {
  if (r->size() > cfg.construction_cap)
    fail(errc::size_cap_exceeded,
         r->name() + " has " + std::to_string(r->size()) + " elements, cap is " +
             std::to_string(cfg.construction_cap));
  if (r->size() <= cfg.table_cap) r->cache_tables();
  check_ring_axioms(*r, cfg);
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

inline ring_ptr make_zmod(std::uint64_t n, const caps& cfg = {}) {
  if (n == 0) fail(errc::invalid_modulus, "modulus must be positive");
  if (n > cfg.construction_cap)
    fail(errc::size_cap_exceeded, "Z" + std::to_string(n) + " exceeds the construction cap");
  return detail::finalize(std::make_shared<zmod_ring>(n, false), cfg);
}

inline ring_ptr make_prime_field(std::uint64_t p, const caps& cfg = {}) {
  if (!detail::is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  return detail::finalize(std::make_shared<zmod_ring>(p, true), cfg);
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exponent, const caps& cfg,
                                 const std::string& what) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && total > cfg.construction_cap / base)
      fail(errc::size_cap_exceeded, what + " exceeds the construction cap");
    total *= base;
  }
  if (total > cfg.construction_cap)
    fail(errc::size_cap_exceeded, what + " exceeds the construction cap");
  return total;
}

}  // namespace detail

inline ring_ptr make_matrix_ring(ring_ptr base, std::size_t k, const caps& cfg = {}) {
  if (k < 1) fail(errc::input_error, "matrix dimension must be at least 1");
  const std::size_t total =
      detail::checked_power(base->size(), k * k, cfg, "M" + std::to_string(k));
  return detail::finalize(
      std::make_shared<matrix_shape_ring>(std::move(base), k, false, total), cfg);
}

inline ring_ptr make_upper_triangular(ring_ptr base, std::size_t k, const caps& cfg = {}) {
  if (k < 1) fail(errc::input_error, "matrix dimension must be at least 1");
  const std::size_t total =
      detail::checked_power(base->size(), k * (k + 1) / 2, cfg, "U" + std::to_string(k));
  return detail::finalize(
      std::make_shared<matrix_shape_ring>(std::move(base), k, true, total), cfg);
}

inline ring_ptr make_product(std::vector<ring_ptr> factors, const caps& cfg = {}) {
  if (factors.empty()) fail(errc::input_error, "product of no rings");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f->size() != 0 && total > cfg.construction_cap / f->size())
      fail(errc::size_cap_exceeded, "product exceeds the construction cap");
    total *= f->size();
  }
  elem zero_index = 0, one_index = 0;
  elem radix = 1;
  for (const auto& f : factors) {
    zero_index = static_cast<elem>(zero_index + f->zero() * radix);
    one_index = static_cast<elem>(one_index + f->one() * radix);
    radix = static_cast<elem>(radix * f->size());
  }
  return detail::finalize(
      std::make_shared<product_ring>(std::move(factors), total, zero_index, one_index), cfg);
}

inline ring_ptr make_opposite(ring_ptr inner, const caps& cfg = {}) {
  return detail::finalize(std::make_shared<opposite_ring>(std::move(inner)), cfg);
}

}  // namespace soclelab
