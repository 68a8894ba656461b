#include "semibrace/inverse.hpp"

#include <algorithm>

namespace semibrace {

Result<InverseSemigroup> von_neumann_inverses(const CayleyTable& t) {
  if (Diag d = check_associative(t); !d.ok()) return d;
  const int n = t.n;
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < n; ++x) {
      if (t.at(t.at(a, x), a) != a) continue;
      if (t.at(t.at(x, a), x) != x) continue;  // not mutual
      if (inv[a] != -1)
        return fail(Fail::inverse_not_unique, {a, inv[a], x},
                    t.name(a) + " has mutual inverses " + t.name(inv[a]) +
                        " and " + t.name(x));
      inv[a] = x;
    }
    if (inv[a] == -1) {
      // a regular element always has a mutual inverse (x a x is one), so
      // reaching here means a is not regular at all
      return fail(Fail::not_regular, {a}, t.name(a) + " has no inverse");
    }
  }
  ElemSet idem = 0;
  for (int e = 0; e < n; ++e)
    if (t.at(e, e) == e) idem = set_insert(idem, e);
  for (int e : set_elements(idem))
    for (int f : set_elements(idem))
      if (t.at(e, f) != t.at(f, e))
        return fail(Fail::idempotents_dont_commute, {e, f},
                    t.name(e) + "+" + t.name(f) + " != " + t.name(f) + "+" +
                        t.name(e));
  InverseSemigroup s;
  s.base = t;
  s.inv = std::move(inv);
  s.idempotents = idem;
  s.zero_part.resize(n);
  for (int a = 0; a < n; ++a) s.zero_part[a] = t.at(s.inv[a], a);
  return s;
}

ElemSet idempotent_set(const InverseSemigroup& s) {
  ElemSet out = 0;
  for (int e = 0; e < s.n(); ++e)
    if (s.at(e, e) == e) out = set_insert(out, e);
  return out;
}

Diag check_clifford(const InverseSemigroup& s) {
  for (int a = 0; a < s.n(); ++a)
    if (s.at(s.neg(a), a) != s.at(a, s.neg(a)))
      return fail(Fail::not_clifford, {a},
                  "-" + s.name(a) + "+" + s.name(a) + " != " + s.name(a) +
                      "-" + s.name(a));
  return ok_diag();
}

bool is_clifford(const InverseSemigroup& s) { return check_clifford(s).ok(); }

Diag check_clifford_by_centrality(const InverseSemigroup& s) {
  // an inverse semigroup is regular by construction, so only centrality of
  // the idempotents is at stake
  ElemSet c = center(s.base);
  for (int e : set_elements(s.idempotents))
    if (!set_contains(c, e))
      return fail(Fail::not_clifford, {e},
                  "idempotent " + s.name(e) + " is not central");
  return ok_diag();
}

Diag check_inverse_identities(const InverseSemigroup& s) {
  const int n = s.n();
  for (int a = 0; a < n; ++a)
    if (s.neg(s.neg(a)) != a)
      return fail(Fail::internal_implication, {a}, "-(-a) != a");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.neg(s.at(a, b)) != s.at(s.neg(b), s.neg(a)))
        return fail(Fail::internal_implication, {a, b}, "-(a*b) != -b*-a");
  for (int e : set_elements(s.idempotents))
    if (s.neg(e) != e)
      return fail(Fail::internal_implication, {e}, "-e != e for idempotent");
  return ok_diag();
}

Result<CliffordStructure> build_clifford(const InverseSemigroup& s) {
  if (Diag d = check_clifford(s); !d.ok()) return d;
  if (Diag d = check_clifford_by_centrality(s); !d.ok()) {
    // the two characterizations agree on inverse semigroups; disagreement
    // would mean the checks themselves are broken
    d.code = Fail::internal_implication;
    return d;
  }
  CliffordStructure c;
  c.base = s;
  const int n = s.n();
  c.h_class.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (c.h_class[a] != -1) continue;
    int id = static_cast<int>(c.h_classes.size());
    std::vector<int> members;
    for (int x = a; x < n; ++x)
      if (s.zero_part[x] == s.zero_part[a]) {
        c.h_class[x] = id;
        members.push_back(x);
      }
    c.h_identity.push_back(s.zero_part[a]);
    c.h_classes.push_back(std::move(members));
  }
  if (Diag d = check_clifford_identities(c); !d.ok()) return d;
  return c;
}

Diag check_clifford_identities(const CliffordStructure& s) {
  const int n = s.n();
  for (int a = 0; a < n; ++a) {
    const int a0 = s.zero_part(a);
    if (s.at(a0, a) != a || s.at(a, a0) != a)
      return fail(Fail::internal_implication, {a}, "a0+a != a or a+a0 != a");
    if (s.zero_part(s.neg(a)) != a0)
      return fail(Fail::internal_implication, {a}, "(-a)0 != a0");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (s.zero_part(s.at(a, b)) != s.at(s.zero_part(a), s.zero_part(b)))
        return fail(Fail::internal_implication, {a, b}, "(a+b)0 != a0+b0");
  for (int e : set_elements(s.base.idempotents))
    for (int a = 0; a < n; ++a)
      if (s.at(e, a) != s.at(a, e))
        return fail(Fail::internal_implication, {e, a},
                    "idempotent not central");
  // each H class is a group: closed, has the identity, has inverses
  for (size_t k = 0; k < s.h_classes.size(); ++k) {
    const auto& members = s.h_classes[k];
    const int e = s.h_identity[k];
    if (s.h_class[e] != static_cast<int>(k))
      return fail(Fail::internal_implication, {e}, "H class identity astray");
    for (int x : members) {
      if (s.h_class[s.neg(x)] != static_cast<int>(k))
        return fail(Fail::internal_implication, {x}, "H class not inv-closed");
      for (int y : members)
        if (s.h_class[s.at(x, y)] != static_cast<int>(k))
          return fail(Fail::internal_implication, {x, y},
                      "H class not closed");
    }
  }
  return ok_diag();
}

}  // namespace semibrace
