#pragma once

#include <string>
#include <vector>

#include "hfun/catalog.hpp"
#include "hfun/identities.hpp"

namespace hfun {

struct GridPoint {
  Complex argument;
  Complex lhs;
  Complex rhs;
  double rel_discrepancy = 0.0;
};

struct IdentityReport {
  std::string identity_name;
  std::vector<GridPoint> grid;
  double max_rel_discrepancy = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string error;  // set when an evaluation threw; the report then fails
};

enum class Suite { Gamma, Splits, MlSum, Catalog, All };

/// Throws Error(Parse) on an unknown name.
Suite parse_suite(std::string_view name);

struct VerifyOptions {
  double threshold = 1e-7;
  const Catalog* catalog = nullptr;  // nullptr: the built-in catalog
};

/// Each report uses min(options.threshold, the suite's own tolerance).
/// Reports come back sorted by name.
std::vector<IdentityReport> run_suite(Suite suite, const VerifyOptions& options = {});

std::vector<IdentityReport> gamma_suite(double threshold);
std::vector<IdentityReport> splits_suite(double threshold);
std::vector<IdentityReport> mlsum_suite(double threshold);
std::vector<IdentityReport> catalog_suite(const Catalog& catalog, double threshold);
std::vector<IdentityReport> registry_suite(double threshold);
std::vector<IdentityReport> oracle_suite(const Catalog& catalog, double threshold);

inline constexpr double kGammaTolerance = 1e-11;
inline constexpr double kDuplicationTolerance = 1e-10;
inline constexpr double kMlSumTolerance = 1e-8;
inline constexpr double kRegistryTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-7;

/// Recomputes max_rel_discrepancy and pass from the grid.
void finalize(IdentityReport& report);

bool all_pass(const std::vector<IdentityReport>& reports);
std::string reports_to_json(const std::vector<IdentityReport>& reports);
/// identity_name,max_rel_discrepancy,pass
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

/// Randomized valid specs for the split identities, reproducible from the seed.
struct RandomSplitCase {
  SplitResult split;
  std::vector<Argument> arguments;
};
std::vector<RandomSplitCase> random_split_cases(std::string_view identity, int count, std::uint64_t seed);

}  // namespace hfun
