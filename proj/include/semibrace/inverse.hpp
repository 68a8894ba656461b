#ifndef SEMIBRACE_INVERSE_HPP_
#define SEMIBRACE_INVERSE_HPP_

#include <vector>

#include "semibrace/table.hpp"

namespace semibrace {

// An inverse semigroup: an associative table where every element a has a
// unique element -a with a = a + (-a) + a and -a = (-a) + a + (-a).
// Caches the inverse map, the idempotent set E(S) and the per-element
// idempotent zero_part[a] = (-a) + a.
struct InverseSemigroup {
  CayleyTable base;
  std::vector<int> inv;
  ElemSet idempotents = 0;
  std::vector<int> zero_part;

  int n() const { return base.n; }
  int at(int i, int j) const { return base.at(i, j); }
  int neg(int i) const { return inv[i]; }
  bool idem(int i) const { return set_contains(idempotents, i); }
  const std::string& name(int i) const { return base.name(i); }
};

// Builds an InverseSemigroup by exhaustively locating the unique von
// Neumann inverse of every element. Rejects non-associative, non-regular
// and merely-regular tables (e.g. bands with non-commuting idempotents).
Result<InverseSemigroup> von_neumann_inverses(const CayleyTable& t);

// The fixed points of squaring. Always equal to s.idempotents; recomputed
// from the table so the cached set can be cross-checked.
ElemSet idempotent_set(const InverseSemigroup& s);

// Definitional Clifford check: -a + a == a - a for every a.
Diag check_clifford(const InverseSemigroup& s);
bool is_clifford(const InverseSemigroup& s);

// Equivalent characterization: regular with all idempotents central. Kept
// separate so both routes can be compared on the same inputs.
Diag check_clifford_by_centrality(const InverseSemigroup& s);

// Identities every inverse semigroup satisfies: -(-a) = a,
// -(a*b) = (-b)*(-a), and -e = e for idempotent e.
Diag check_inverse_identities(const InverseSemigroup& s);

// A Clifford semigroup together with its partition into maximal subgroups
// H_a = { x : x0 == a0 }, each a group whose identity is the shared
// idempotent.
struct CliffordStructure {
  InverseSemigroup base;
  std::vector<int> h_class;                 // class id per element
  std::vector<std::vector<int>> h_classes;  // members per class, ascending
  std::vector<int> h_identity;              // the idempotent of each class

  int n() const { return base.n(); }
  int at(int i, int j) const { return base.at(i, j); }
  int neg(int i) const { return base.neg(i); }
  int zero_part(int i) const { return base.zero_part[i]; }
  const std::string& name(int i) const { return base.name(i); }
};

Result<CliffordStructure> build_clifford(const InverseSemigroup& s);

// Identities of Clifford semigroups used throughout: a0 is idempotent and
// central, a0 + a = a + a0 = a, (a + b)0 = a0 + b0, e + a = a + e, and
// every H class is a group under the operation.
Diag check_clifford_identities(const CliffordStructure& s);

}  // namespace semibrace

#endif  // SEMIBRACE_INVERSE_HPP_
