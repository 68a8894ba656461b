#ifndef SEMIBRACE_DIAG_HPP_
#define SEMIBRACE_DIAG_HPP_

#include <cassert>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semibrace {

// Reason codes for failed validations. Every check reports the first
// violation in row-major scan order so diagnostics are deterministic.
enum class Fail {
  none = 0,
  // table construction
  dimension_mismatch,
  index_out_of_range,
  duplicate_name,
  empty_name,
  carrier_too_large,
  // semigroup / inverse semigroup structure
  not_associative,
  not_regular,
  inverse_not_unique,
  idempotents_dont_commute,
  not_clifford,
  // weak brace axioms
  add_not_inverse,
  mul_not_inverse,
  distributivity_fails,
  inverse_axiom_fails,
  lambda_not_endo,
  // endomorphisms and the semidirect product
  endo_not_in_list,
  no_identity,
  not_closed,
  // good subsemigroup conditions
  not_inverse_sub,
  g1_fails,
  g2_fails,
  g3_fails,
  g4_fails,
  // Gamma function conditions
  f1_fails,
  f2_fails,
  f3_fails,
  f4_fails,
  d1_fails,
  d2_fails,
  d3_fails,
  // affine structure conditions
  a1_fails,
  a2_fails,
  a3_fails,
  // strong semilattice specs
  spec_invalid,
  not_dual,
  // search
  budget_exceeded,
  // file formats
  parse_error,
  // a consequence that holds for every valid input failed at run time;
  // indicates an engine bug, never a bad input
  internal_implication,
};

const char* to_string(Fail f);

struct Diag {
  Fail code = Fail::none;
  std::vector<int> witness;  // carrier indices involved in the violation
  std::string detail;

  bool ok() const { return code == Fail::none; }
  std::string str() const;
};

inline Diag ok_diag() { return {}; }

inline Diag fail(Fail code, std::vector<int> witness = {},
                 std::string detail = {}) {
  assert(code != Fail::none);
  return Diag{code, std::move(witness), std::move(detail)};
}

// Value-or-diagnostic. Validation failures are ordinary values here, not
// exceptions: the searches reject millions of candidates this way.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Diag d) : v_(std::move(d)) { assert(!error().ok()); }

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &std::get<T>(v_); }

  const Diag& error() const {
    static const Diag kOk{};
    return ok() ? kOk : std::get<Diag>(v_);
  }

 private:
  std::variant<T, Diag> v_;
};

}  // namespace semibrace

#endif  // SEMIBRACE_DIAG_HPP_
