#include "semibrace/table.hpp"

#include <set>
#include <sstream>

namespace semibrace {

const char* to_string(Fail f) {
  switch (f) {
    case Fail::none: return "ok";
    case Fail::dimension_mismatch: return "dimension mismatch";
    case Fail::index_out_of_range: return "index out of range";
    case Fail::duplicate_name: return "duplicate name";
    case Fail::empty_name: return "empty name";
    case Fail::carrier_too_large: return "carrier too large";
    case Fail::not_associative: return "not associative";
    case Fail::not_regular: return "not regular";
    case Fail::inverse_not_unique: return "inverse not unique";
    case Fail::idempotents_dont_commute: return "idempotents do not commute";
    case Fail::not_clifford: return "not Clifford";
    case Fail::add_not_inverse: return "add is not an inverse semigroup";
    case Fail::mul_not_inverse: return "mul is not an inverse semigroup";
    case Fail::distributivity_fails: return "distributivity axiom fails";
    case Fail::inverse_axiom_fails: return "inverse axiom fails";
    case Fail::lambda_not_endo: return "lambda map is not an endomorphism";
    case Fail::endo_not_in_list: return "endomorphism not in enumerated list";
    case Fail::no_identity: return "no additive identity";
    case Fail::not_closed: return "not closed under the product";
    case Fail::not_inverse_sub: return "not an inverse subsemigroup";
    case Fail::g1_fails: return "(G1) fails";
    case Fail::g2_fails: return "(G2) fails";
    case Fail::g3_fails: return "(G3) fails";
    case Fail::g4_fails: return "(G4) fails";
    case Fail::f1_fails: return "(F1) fails";
    case Fail::f2_fails: return "(F2) fails";
    case Fail::f3_fails: return "(F3) fails";
    case Fail::f4_fails: return "(F4) fails";
    case Fail::d1_fails: return "(D1) fails";
    case Fail::d2_fails: return "(D2) fails";
    case Fail::d3_fails: return "(D3) fails";
    case Fail::a1_fails: return "(A1) fails";
    case Fail::a2_fails: return "(A2) fails";
    case Fail::a3_fails: return "(A3) fails";
    case Fail::spec_invalid: return "semilattice spec invalid";
    case Fail::not_dual: return "not a dual weak left brace";
    case Fail::budget_exceeded: return "budget exceeded";
    case Fail::parse_error: return "parse error";
    case Fail::internal_implication: return "internal implication violated";
  }
  return "unknown";
}

std::string Diag::str() const {
  std::ostringstream os;
  os << to_string(code);
  if (!witness.empty()) {
    os << " [witness";
    for (int w : witness) os << ' ' << w;
    os << ']';
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::vector<int> set_elements(ElemSet s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxCarrier; ++i)
    if (set_contains(s, i)) out.push_back(i);
  return out;
}

std::string CayleyTable::tuple_str(const std::vector<int>& elems) const {
  std::string out = "(";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += names[elems[i]];
  }
  out += ")";
  return out;
}

Result<CayleyTable> validate_magma(int n, std::vector<std::string> names,
                                   std::vector<int> table) {
  if (n < 1)
    return fail(Fail::dimension_mismatch, {}, "carrier must be nonempty");
  if (n > kMaxCarrier)
    return fail(Fail::carrier_too_large, {},
                "carrier size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxCarrier));
  if (static_cast<int>(names.size()) != n)
    return fail(Fail::dimension_mismatch, {},
                "expected " + std::to_string(n) + " names, got " +
                    std::to_string(names.size()));
  if (static_cast<int>(table.size()) != n * n)
    return fail(Fail::dimension_mismatch, {},
                "expected " + std::to_string(n * n) + " table entries, got " +
                    std::to_string(table.size()));
  for (int i = 0; i < n; ++i) {
    if (names[i].empty()) return fail(Fail::empty_name, {i});
    for (int j = 0; j < i; ++j)
      if (names[i] == names[j])
        return fail(Fail::duplicate_name, {j, i}, "name '" + names[i] + "'");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = table[i * n + j];
      if (v < 0 || v >= n)
        return fail(Fail::index_out_of_range, {i, j},
                    "entry " + std::to_string(v) + " at row " + names[i] +
                        ", column " + names[j]);
    }
  CayleyTable t;
  t.n = n;
  t.names = std::move(names);
  t.table = std::move(table);
  return t;
}

Diag check_associative(const CayleyTable& t) {
  const int n = t.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t.at(x, y);
      for (int z = 0; z < n; ++z)
        if (t.at(xy, z) != t.at(x, t.at(y, z)))
          return fail(Fail::not_associative, {x, y, z},
                      "(" + t.name(x) + "*" + t.name(y) + ")*" + t.name(z) +
                          " != " + t.name(x) + "*(" + t.name(y) + "*" +
                          t.name(z) + ")");
    }
  return ok_diag();
}

bool is_associative(const CayleyTable& t) { return check_associative(t).ok(); }

ElemSet center(const CayleyTable& t) {
  ElemSet out = 0;
  for (int x = 0; x < t.n; ++x) {
    bool central = true;
    for (int a = 0; a < t.n && central; ++a)
      central = t.at(x, a) == t.at(a, x);
    if (central) out = set_insert(out, x);
  }
  return out;
}

bool is_commutative(const CayleyTable& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < x; ++y)
      if (t.at(x, y) != t.at(y, x)) return false;
  return true;
}

std::optional<int> identity_element(const CayleyTable& t) {
  for (int e = 0; e < t.n; ++e) {
    bool id = true;
    for (int a = 0; a < t.n && id; ++a)
      id = t.at(e, a) == a && t.at(a, e) == a;
    if (id) return e;
  }
  return std::nullopt;
}

}  // namespace semibrace
