#ifndef SEMIBRACE_BRACE_HPP_
#define SEMIBRACE_BRACE_HPP_

#include <vector>

#include "semibrace/endo.hpp"
#include "semibrace/inverse.hpp"

namespace semibrace {

// A weak left brace (S, +, .): two inverse semigroups on one carrier with
//   x(y + z) = xy - x + xz      and      x x^-1 = -x + x.
// The addition is then automatically Clifford, and the maps
// lambda_a(b) = -a + ab are additive endomorphisms with ab = a + lambda_a(b);
// both facts are re-verified at construction, never assumed.
struct WeakBrace {
  CliffordStructure add;
  InverseSemigroup mul;
  std::vector<int> lambda;  // row a = the map lambda_a, n*n entries

  int n() const { return add.n(); }
  int plus(int a, int b) const { return add.at(a, b); }
  int times(int a, int b) const { return mul.at(a, b); }
  int neg(int a) const { return add.neg(a); }
  int minv(int a) const { return mul.neg(a); }
  int lam(int a, int b) const { return lambda[a * n() + b]; }
  std::vector<int> lambda_row(int a) const {
    return {lambda.begin() + a * n(), lambda.begin() + (a + 1) * n()};
  }
  const std::string& name(int i) const { return add.name(i); }

  bool same_tables(const WeakBrace& o) const {
    return add.base.base == o.add.base.base && mul.base == o.mul.base;
  }
};

// Validates the full weak brace definition and caches the lambda table.
// On failure reports the first failing axiom with a witness tuple.
Result<WeakBrace> check_weak_brace(const CayleyTable& add,
                                   const CayleyTable& mul);

// The three identities whose conjunction pattern characterizes the
// distributivity axiom:
//   weak1:  x(y+z) = xy - x + xz
//   weak2:  -x + x(y+z) = -x + xy - x + xz   (each lambda_x additive)
//   weak3:  -(xy) + xyz = -x + x(-y + yz)    (lambda multiplicative)
// weak1 holds iff weak2 and weak3 both hold.
Diag check_axiom_weak1(const InverseSemigroup& add,
                       const InverseSemigroup& mul);
Diag check_axiom_weak2(const InverseSemigroup& add,
                       const InverseSemigroup& mul);
Diag check_axiom_weak3(const InverseSemigroup& add,
                       const InverseSemigroup& mul);

// The map b -> -a + ab, verified to be an endomorphism of (S, +).
Result<EndoMap> lambda_of(const WeakBrace& b, int a);

// Whether lambda_{ab} = lambda_a o lambda_b pointwise; true for every
// valid brace, but computed rather than assumed.
bool lambda_is_mul_homomorphism(const WeakBrace& b);

struct DualCheck {
  bool dual = false;
  Diag detail;  // non-Clifford witness, or an internal violation
};

// A brace is dual when its multiplication is Clifford. When it is, each
// lambda_a restricted to the subgroup H_a must permute H_a; that
// consequence is asserted here as well.
DualCheck is_dual(const WeakBrace& b);

// Consequences of the brace axioms, checked verbatim over all tuples:
// ea = e+a = a+e for idempotent e, a0+a = a+a0 = a, a0+b0 = (a+b)0, and
// (-a)0 = a0 = a-a = -a+a.
Diag check_brace_identities(const WeakBrace& b);

// The additional identities of dual braces: x0 = x x^-1 = x^-1 x,
// a = a0 a = a a0, ae = a+e, (ab)0 = a0 b0 = a0+b0, (a^-1)0 = a0.
Diag check_dual_brace_identities(const WeakBrace& b);

// The additive identity exists iff the multiplicative identity exists, and
// they coincide.
Diag check_identity_correspondence(const WeakBrace& b);

}  // namespace semibrace

#endif  // SEMIBRACE_BRACE_HPP_
