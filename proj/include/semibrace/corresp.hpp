#ifndef SEMIBRACE_CORRESP_HPP_
#define SEMIBRACE_CORRESP_HPP_

#include <vector>

#include "semibrace/brace.hpp"
#include "semibrace/endo.hpp"

namespace semibrace {

// ---------------------------------------------------------------------
// Good inverse subsemigroups of End(S,+) x| (S,+).
//
// A product-closed set H that is an inverse semigroup in its own right is
// good when:
//   (G1) (f,x) -> x is a bijection from H onto S,
//   (G2) (f,x) in H with inverse (g,y) implies (f, f(-y)) in H,
//   (G3) (f,x) in H implies -x + x + f(y) = f(y) for all y,
//   (G4) if (S,+) has an identity 0 then f(0) = -x + x for all (f,x) in H.
// These sets correspond bijectively to the weak brace structures on (S,+).
// ---------------------------------------------------------------------

enum class SubKind { inverse, clifford };

struct GoodSubsemigroup {
  HolomorphSet elems;  // sorted
  SubKind kind = SubKind::inverse;
};

Result<GoodSubsemigroup> is_good_subsemigroup(const Holomorph& hol,
                                              const HolomorphSet& h);

// a o b = a + f(b) where (f, a) is the unique element of H over a. The
// result is re-validated as a weak brace and the projection is checked to
// be an isomorphism onto (S, o).
Result<WeakBrace> brace_from_good(const Holomorph& hol,
                                  const GoodSubsemigroup& h);

// { (lambda_a, a) : a in S }, validated good; Clifford exactly when the
// brace is dual.
Result<GoodSubsemigroup> good_from_brace(const Holomorph& hol,
                                         const WeakBrace& b);

// ---------------------------------------------------------------------
// Gamma functions on a Clifford semigroup (S,+): maps x -> gamma_x into
// End(S,+) with
//   (F1) gamma_x gamma_y = gamma_{x + gamma_x(y)},  gamma_{x0}(x) = x,
//        x0 + gamma_x(y) = gamma_x(y),
//   (F2) gamma_x(x) = x0 implies x = x0,
//   (F3) some x^-1 has gamma_x(x^-1) = -x and gamma_{x^-1}(x) = -x^-1,
//   (F4) gamma_e(f) = e + f for idempotents e, f.
// Dual Gamma functions replace (F2)/(F3) by
//   (D1) gamma_x restricted to H_x is a bijection of H_x,
//   (D2) the first and third parts of (F1),
//   (D3) = (F4);
// every dual Gamma function is a Gamma function, which the checker asserts.
// ---------------------------------------------------------------------

struct GammaFunction {
  std::vector<int> endo_of;  // endomorphism index per carrier element
  bool dual = false;
  // all elements witnessing (F3) per x; they must collapse to the single
  // multiplicative inverse once the brace is built
  std::vector<std::vector<int>> f3_witnesses;
};

Result<GammaFunction> is_gamma_function(const Holomorph& hol,
                                        const std::vector<int>& endo_of);

// The dual conditions alone; ok() means (D1)-(D3) hold.
Diag check_dual_gamma(const Holomorph& hol, const std::vector<int>& endo_of);

// x o y = x + gamma_x(y); re-validated, and every recorded (F3) witness is
// checked to equal the multiplicative inverse.
Result<WeakBrace> brace_from_gamma(const Holomorph& hol,
                                   const GammaFunction& g);

// gamma_x := lambda_x, resolved against the endomorphism list.
Result<GammaFunction> gamma_from_brace(const Holomorph& hol,
                                       const WeakBrace& b);

// ---------------------------------------------------------------------
// Affine structures on an inverse semigroup (S,.): binary operations with
//   (A1) (ab) <> c = b <> (a <> c),
//   (A2) a <> (b(b <> c)) = (a <> b)((a <> b) <> (a <> c)),
//   (A3) e <> a = ea and a <> e = a^-1 e a for idempotent e.
// x + y := x(x <> y) then yields a weak brace with this multiplication.
// ---------------------------------------------------------------------

struct AffineStructure {
  std::vector<int> table;  // n*n over the carrier of the fixed (S,.)
  int n = 0;
  int at(int i, int j) const { return table[i * n + j]; }
};

Result<AffineStructure> is_affine_structure(const InverseSemigroup& mul,
                                            const std::vector<int>& diamond);

// x + y = x(x <> y); re-validated, dual exactly when (S,.) is Clifford,
// and -a = a^-1 <> a^-1 is checked elementwise.
Result<WeakBrace> brace_from_affine(const InverseSemigroup& mul,
                                    const AffineStructure& d);

// a <> b = a^-1(a + b) (= lambda_{a^-1}(b), both routes compared), then
// validated against (A1)-(A3). Validation failures are surfaced, never
// suppressed.
Result<AffineStructure> affine_from_brace(const WeakBrace& b);

// Consequences that hold on every valid affine structure, with + the
// induced x(x <> y): (a a^-1) <> a = a, a <> b = a^-1(a + b),
// e + a = a + e = ea for idempotent e, and a <> (b+c) = (a<>b) + (a<>c).
Diag check_affine_identities(const InverseSemigroup& mul,
                             const AffineStructure& d);

}  // namespace semibrace

#endif  // SEMIBRACE_CORRESP_HPP_
