#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "soclelab/error.hpp"

namespace soclelab {

// Size gates and execution limits. Defaults keep the whole builtin corpus
// tractable on a laptop; everything is overridable from the CLI or the
// SOCLE_LAB_* environment variables.
struct caps {
  std::size_t table_cap = 4096;       // cache add/mul tables up to this ring size
  std::size_t exhaustive_cap = 256;   // exhaustive axiom checking up to this size
  std::size_t oracle_cap = 1024;      // all-ideal enumeration gate
  std::size_t enumeration_cap = 4096; // brute-force scans over an incidence algebra
  std::size_t construction_cap = std::size_t{1} << 20;  // refuse to build larger rings
  std::size_t render_cap = 12;        // structural-matrix rendering gate (|X|)
  double timeout_s = 120.0;           // per-check budget in the verification suite
  std::uint64_t seed = 0x51ab5eed;    // sampling seed (axiom checks, random ideals)
};

// Cooperative deadline for long-running scans. Expensive loops poll it and
// bail out with errc::timeout, which the suite records as a cap hit.
class deadline {
 public:
  deadline() = default;
  static deadline after_seconds(double s) {
    deadline d;
    d.armed_ = true;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(s));
    return d;
  }

  bool expired() const {
    return armed_ && std::chrono::steady_clock::now() > at_;
  }

  void check(const char* where) const {
    if (expired()) fail(errc::timeout, std::string("budget exhausted in ") + where);
  }

 private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point at_{};
};

inline void poll(const deadline* dl, const char* where) {
  if (dl) dl->check(where);
}

}  // namespace soclelab
