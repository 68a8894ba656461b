#ifndef SEMIBRACE_SEARCH_HPP_
#define SEMIBRACE_SEARCH_HPP_

#include <cstdint>
#include <vector>

#include "semibrace/corresp.hpp"

namespace semibrace {

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // node expansions
  int jobs = 1;                        // workers; results are schedule-independent
  int max_carrier_endo = 8;            // bound for the n^n endomorphism scan
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;
  double wall_seconds = 0;  // diagnostic only, never serialized
  bool complete = true;
};

enum class Route { good, gamma, affine, oracle };

const char* to_string(Route r);

// One enumeration run over a fixed carrier. Results are sorted by the
// lexicographic order of the induced varied operation table, so reports
// are identical across runs and worker counts. Exactly one of the
// route-specific vectors is populated, aligned with `braces`.
struct EnumerationReport {
  Route route = Route::gamma;
  CayleyTable carrier;
  EndoList endos;  // gamma/good routes only
  std::vector<GoodSubsemigroup> goods;
  std::vector<GammaFunction> gammas;
  std::vector<AffineStructure> affines;
  std::vector<WeakBrace> braces;
  SearchStats stats;
};

// Backtracking over assignments x -> gamma_x with (F4) pinning idempotent
// images first and the composition law of (F1) propagated incrementally.
Result<EnumerationReport> enumerate_gamma_functions(
    const CliffordStructure& add, const SearchOptions& opt = {});

// Same engine driven by (G3)/(G4) and closure of the holomorph product;
// by the correspondence the induced brace set equals the gamma route's.
Result<EnumerationReport> enumerate_good_subsemigroups(
    const CliffordStructure& add, const SearchOptions& opt = {});

// Backtracking over diamond tables with rows and columns pinned by (A3),
// per-cell domains cut by (a a^-1)(a^-1 <> b) = a^-1 <> b, and (A1)/(A2)
// checked incrementally.
Result<EnumerationReport> enumerate_affine_structures(
    const InverseSemigroup& mul, const SearchOptions& opt = {});

enum class OracleSide {
  second_op_mul,  // fixed addition, enumerate multiplications
  second_op_add,  // fixed multiplication, enumerate additions
};

// Definition-only oracle: scans all n^(n*n) second-operation tables with
// row-prefix associativity pruning and keeps the pairs satisfying the full
// weak brace definition. Independent of the correspondence machinery.
// Mandatory for n <= 3; best effort for n = 4 (an exhausted budget is
// reported as incomplete, never silently truncated).
Result<EnumerationReport> oracle_enumerate_braces(
    const InverseSemigroup& fixed, OracleSide side,
    const SearchOptions& opt = {});

// Partition of the given braces under carrier bijections preserving both
// operations (exhaustive over n! bijections, n <= 8). When all braces
// share one addition with an identity, the partition is cross-checked
// against conjugacy of the corresponding good subsemigroups.
Result<std::vector<std::vector<int>>> isomorphism_classes(
    const std::vector<WeakBrace>& braces);

}  // namespace semibrace

#endif  // SEMIBRACE_SEARCH_HPP_
