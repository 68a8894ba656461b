#ifndef SEMIBRACE_CLASSES_HPP_
#define SEMIBRACE_CLASSES_HPP_

#include <vector>

#include "semibrace/brace.hpp"

namespace semibrace {

// Outcome of a brace classifier. `witness` carries the first violating
// tuple when the property fails; `implication` is non-ok only when a
// consequence that provably follows from the property failed, which would
// mean the engine itself is wrong.
struct ClassifyResult {
  bool holds = false;
  Diag witness;
  Diag implication;
};

// Symmetric: x(y+z) = xy - x + xz and x + yz = (x+y) x^-1 (x+z). A
// symmetric brace satisfies -x+x = xx^-1 and x-x = x^-1x and is dual;
// those consequences are asserted whenever the property holds.
ClassifyResult is_symmetric(const WeakBrace& b);

// lambda_{x+y} = lambda_x o lambda_y pointwise; implies dual.
ClassifyResult is_lambda_homomorphic(const WeakBrace& b);

// lambda_{x+y} = lambda_y o lambda_x pointwise. Checked in both its
// two-map formulation and the equivalent single axiom
// y(-x + xz) = -x + (x+y)z; the two must agree. Implies dual.
ClassifyResult is_lambda_anti_homomorphic(const WeakBrace& b);

// ---------------------------------------------------------------------
// Strong semilattices of skew left braces.
//
// A lower semilattice Y, a disjoint family of skew braces B_alpha, and
// brace homomorphisms hom[alpha][beta] : B_alpha -> B_beta for
// alpha >= beta (meet(alpha,beta) == beta) with hom[a][a] = id and
// hom[b][c] o hom[a][b] = hom[a][c]. Both operations of the composite on
// the disjoint union are a + b = hom[al][al^be](a) + hom[be][al^be](b),
// and the composite is a dual weak brace. Conversely every dual weak
// brace decomposes this way along its idempotents.
// ---------------------------------------------------------------------

struct SemilatticeSpec {
  CayleyTable meet;                   // Y; commutative idempotent associative
  std::vector<WeakBrace> components;  // aligned with the Y carrier
  // homs[a][b]: image of each element of component a inside component b;
  // empty vector when a >= b does not hold
  std::vector<std::vector<std::vector<int>>> homs;
};

// Validates the spec invariants; the diagnostic names the violated
// condition: (1) identity self-homs, (2) transitivity, or a hom failing to
// be a brace homomorphism.
Diag check_semilattice_spec(const SemilatticeSpec& spec);

// Composite brace on the disjoint union; carrier names are qualified as
// "<Y name>.<component name>" so disjointness cannot be violated.
Result<WeakBrace> compose_semilattice(const SemilatticeSpec& spec);

// Splits a dual brace along Y = E(S) with e^f = e+f, components the
// subgroups H_e, and homs x -> f + x. The choice of homs is verified a
// posteriori: each must be a brace homomorphism and recomposition must
// reproduce the brace.
Result<SemilatticeSpec> decompose_semilattice(const WeakBrace& b);

// Tablewise equality of `composed` (with qualified names "alpha.x")
// against `original` (with names "x").
Diag check_recomposition(const WeakBrace& original, const WeakBrace& composed);

}  // namespace semibrace

#endif  // SEMIBRACE_CLASSES_HPP_
