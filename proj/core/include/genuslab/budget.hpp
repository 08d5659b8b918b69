#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

namespace genuslab {

/// Search budget shared by the exhaustive procedures. The node limit is the
/// primary, deterministic bound; the wall-clock deadline is a secondary guard
/// and may make results vary between runs (never their correctness).
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Budget(std::uint64_t max_nodes,
                  std::optional<std::chrono::milliseconds> max_time = std::nullopt)
      : max_nodes_(max_nodes) {
    if (max_time) deadline_ = Clock::now() + *max_time;
  }

  static Budget unlimited() { return Budget(std::numeric_limits<std::uint64_t>::max()); }

  /// Accounts for `nodes` search nodes. Returns false once the budget is spent.
  bool charge(std::uint64_t nodes = 1) {
    if (exhausted_) return false;
    used_ += nodes;
    if (used_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (deadline_ && (used_ & 0x3ffu) < nodes && Clock::now() > *deadline_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t max_nodes() const noexcept { return max_nodes_; }
  std::uint64_t remaining() const noexcept {
    return used_ >= max_nodes_ ? 0 : max_nodes_ - used_;
  }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t used_ = 0;
  std::optional<Clock::time_point> deadline_;
  bool exhausted_ = false;
};

}  // namespace genuslab
