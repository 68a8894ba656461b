#ifndef SEMIBRACE_TESTS_SUPPORT_HPP_
#define SEMIBRACE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <stdexcept>
#include <array>
#include <cassert>
#include <string>
#include <vector>

#include "semibrace/brace.hpp"
#include "semibrace/inverse.hpp"
#include "semibrace/table.hpp"

namespace testsupport {

using namespace semibrace;

inline std::string fixture(const std::string& name) {
  return std::string(SEMIBRACE_FIXTURE_DIR) + "/" + name;
}

inline CayleyTable make_table(std::vector<std::string> names,
                              std::vector<int> t) {
  const int n = static_cast<int>(names.size());
  auto r = validate_magma(n, std::move(names), std::move(t));
  if (!r.ok()) throw std::logic_error("bad test table: " + r.error().str());
  return *r;
}

inline const std::vector<std::string> kFive = {"0", "e", "f", "a", "b"};

// Clifford semigroup with subgroups {0}, {e,a}, {f,b}
inline CayleyTable ex1_add() {
  return make_table(kFive, {0, 0, 0, 0, 0,   //
                            0, 1, 0, 3, 0,   //
                            0, 0, 2, 0, 4,   //
                            0, 3, 0, 1, 0,   //
                            0, 0, 4, 0, 2});
}

// Brandt semigroup B2; also the second multiplication over ex1_add
inline CayleyTable b2_mul() {
  return make_table(kFive, {0, 0, 0, 0, 0,   //
                            0, 1, 0, 3, 0,   //
                            0, 0, 2, 0, 4,   //
                            0, 0, 3, 0, 1,   //
                            0, 4, 0, 2, 0});
}

// the unique affine structure on B2
inline std::vector<int> diamond1() {
  return {0, 0, 0, 0, 0,   //
          0, 1, 0, 3, 0,   //
          0, 0, 2, 0, 4,   //
          0, 2, 0, 4, 0,   //
          0, 0, 1, 0, 3};
}

inline CayleyTable c2() { return make_table({"0", "1"}, {0, 1, 1, 0}); }

inline CayleyTable c3() {
  return make_table({"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}

inline CayleyTable sl2() { return make_table({"0", "1"}, {0, 0, 0, 1}); }

inline CayleyTable singleton() { return make_table({"x"}, {0}); }

inline CayleyTable left_zero_band2() {
  return make_table({"x", "y"}, {0, 0, 1, 1});
}

inline CayleyTable klein() {
  return make_table({"0", "1", "2", "3"},
                    {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
}

inline CayleyTable c4() {
  return make_table({"0", "1", "2", "3"},
                    {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
}

// multiplication of the skew brace over c4(): x * y = x + (-1)^x y
inline CayleyTable c4_neg_mul() {
  return make_table({"0", "1", "2", "3"},
                    {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
}

// symmetric group on three points, elements indexed by one-line notation
inline CayleyTable s3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::string> names(n);
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    names[i] = std::to_string(perms[i][0]) + std::to_string(perms[i][1]) +
               std::to_string(perms[i][2]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      for (int k = 0; k < n; ++k)
        if (perms[k] == comp) table[i * n + j] = k;
    }
  return make_table(std::move(names), std::move(table));
}

// the opposite group of s3: x * y = y + x. Paired with s3() as addition
// it forms a skew brace whose lambda is conjugation, anti-homomorphic but
// not homomorphic.
inline CayleyTable s3_op() {
  CayleyTable t = s3();
  CayleyTable out = t;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) out.table[i * t.n + j] = t.at(j, i);
  return out;
}

// the three counterexample pairs: weak2 without weak1, weak3 without
// weak1, and all of weak1-weak3 without the inverse axiom
inline CayleyTable remark1_add() {
  return make_table({"0", "1"}, {0, 0, 0, 1});
}
inline CayleyTable remark1_mul() {
  return make_table({"0", "1"}, {0, 1, 1, 1});
}
inline CayleyTable remark2_add() {
  return make_table({"0", "1", "2"}, {0, 0, 2, 0, 1, 2, 2, 2, 2});
}
inline CayleyTable remark2_mul() {
  return make_table({"0", "1", "2"}, {0, 2, 2, 2, 1, 2, 2, 2, 2});
}
inline CayleyTable remark3_add() {
  return make_table({"0", "1"}, {1, 0, 0, 1});
}
inline CayleyTable remark3_mul() {
  return make_table({"0", "1"}, {0, 0, 0, 1});
}

inline InverseSemigroup inverse_of(const CayleyTable& t) {
  auto r = von_neumann_inverses(t);
  if (!r.ok()) throw std::logic_error("not inverse: " + r.error().str());
  return *r;
}

inline CliffordStructure clifford_of(const CayleyTable& t) {
  auto r = build_clifford(inverse_of(t));
  if (!r.ok()) throw std::logic_error("not Clifford: " + r.error().str());
  return *r;
}

inline WeakBrace brace_of(const CayleyTable& add, const CayleyTable& mul) {
  auto r = check_weak_brace(add, mul);
  if (!r.ok()) throw std::logic_error("not a brace: " + r.error().str());
  return *r;
}

// endomorphism image arrays of ex1_add used as reference points; the
// index set {0..4} follows kFive
inline std::vector<int> phi_const0() { return {0, 0, 0, 0, 0}; }
inline std::vector<int> phi4() { return {0, 0, 1, 0, 1}; }
inline std::vector<int> phi5() { return {0, 0, 1, 0, 3}; }
inline std::vector<int> phi6() { return {0, 1, 0, 1, 0}; }
inline std::vector<int> phi7() { return {0, 1, 0, 3, 0}; }
inline std::vector<int> phi8() { return {0, 0, 2, 0, 2}; }
inline std::vector<int> phi9() { return {0, 0, 2, 0, 4}; }
inline std::vector<int> phi10() { return {0, 2, 0, 2, 0}; }
inline std::vector<int> phi11() { return {0, 2, 0, 4, 0}; }

// every inverse-semigroup table on {0..n-1}, by scanning all n^(n*n)
// tables; independent of the search machinery
inline std::vector<CayleyTable> all_inverse_tables(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  std::vector<CayleyTable> out;
  std::vector<int> cells(n * n, 0);
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < n * n; ++i) t *= n;
    return t;
  }();
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n * n; ++i) {
      cells[i] = static_cast<int>(c % n);
      c /= n;
    }
    auto table = validate_magma(n, names, cells);
    if (!table.ok()) continue;
    if (von_neumann_inverses(*table).ok()) out.push_back(*table);
  }
  return out;
}

}  // namespace testsupport

#endif  // SEMIBRACE_TESTS_SUPPORT_HPP_
