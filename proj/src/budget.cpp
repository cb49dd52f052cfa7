#include "zdsolve/budget.hpp"

namespace zdsolve::budget {

namespace {
thread_local Clock::time_point g_deadline{};  // epoch == unlimited
}

Clock::time_point deadline() { return g_deadline; }

void set_limit_ms(std::int64_t ms) {
  if (ms <= 0) {
    g_deadline = Clock::time_point{};
  } else {
    g_deadline = Clock::now() + std::chrono::milliseconds(ms);
  }
}

void clear() { g_deadline = Clock::time_point{}; }

void check() {
  if (g_deadline != Clock::time_point{} && Clock::now() > g_deadline)
    throw BudgetExceeded("time budget exceeded");
}

Scope::Scope(std::int64_t ms) : saved_(g_deadline) {
  set_limit_ms(ms);
}

Scope::~Scope() { g_deadline = saved_; }

}  // namespace zdsolve::budget
