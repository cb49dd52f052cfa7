#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdsolve/fields.hpp"
#include "zdsolve/prng.hpp"

namespace zdsolve {

/// A named reproduction failed one of its pinned outcomes.
struct GoldenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CaseReport {
  std::string name;
  std::uint64_t seed = 0;
  std::string field;
  int dim = 0;
  long degree = 0;
  std::optional<long> real;
  nlohmann::json extras = nlohmann::json::object();
  std::int64_t ms = 0;

  nlohmann::json to_json() const;
};

struct CaseOptions {
  std::uint64_t seed = 0;
  std::optional<FieldDesc> field;
  std::optional<int> dataset;
  bool dump_ideal = false;  // record the built ideal as a file under extras
};

std::vector<std::string> case_names();
bool is_case_registered(const std::string& name);

/// Runs a registered case; throws GoldenFailure when a pinned value does
/// not reproduce, std::invalid_argument for unknown names or bad options.
CaseReport run_case(const std::string& name, const CaseOptions& opts);

struct TransversalityResult {
  bool succeeded = false;
  int iterations_used = 0;
};

/// Random instances of the 6-solution Schubert problem over F_p until the
/// characteristic polynomial of a random linear form comes out squarefree
/// (i.e. the instance is radical), up to `iters` attempts.
TransversalityResult transversality_experiment(std::uint64_t p, int iters,
                                               std::uint64_t seed);

/// Number of lines tangent to 2(n-1) random spheres in P^n, as the degree
/// of the local tangency ideal over F_1009.
long expected_count(int n, std::uint64_t seed);

}  // namespace zdsolve
