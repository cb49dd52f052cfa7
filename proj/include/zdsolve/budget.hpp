#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace zdsolve {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-thread soft wall-clock budget. Long-running loops poll check();
/// a zero deadline means no limit.
namespace budget {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline();
void set_limit_ms(std::int64_t ms);  // ms <= 0 clears the limit
void clear();
void check();  // throws BudgetExceeded past the deadline

/// RAII scope for a budget; restores the previous deadline on exit.
class Scope {
 public:
  explicit Scope(std::int64_t ms);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  Clock::time_point saved_;
};

}  // namespace budget
}  // namespace zdsolve
