#ifndef SEMIBRACE_TABLE_HPP_
#define SEMIBRACE_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semibrace/diag.hpp"

namespace semibrace {

// Subsets of a carrier are bit masks; the carrier bound keeps them in one
// machine word.
using ElemSet = std::uint64_t;

inline constexpr int kMaxCarrier = 64;

inline bool set_contains(ElemSet s, int i) { return (s >> i) & 1u; }
inline ElemSet set_insert(ElemSet s, int i) { return s | (ElemSet{1} << i); }
std::vector<int> set_elements(ElemSet s);

// A finite magma: carrier {0,...,n-1} with printable names and an n x n
// operation table, at(i, j) = index of element_i * element_j. Element
// identity is the index; names are presentation only.
struct CayleyTable {
  int n = 0;
  std::vector<std::string> names;
  std::vector<int> table;  // row-major, n*n entries

  int at(int i, int j) const { return table[i * n + j]; }
  const std::string& name(int i) const { return names[i]; }
  std::string tuple_str(const std::vector<int>& elems) const;

  bool operator==(const CayleyTable& other) const {
    return n == other.n && table == other.table;  // names presentation only
  }
};

// Checks dimensions, entry ranges and name validity of raw table data.
Result<CayleyTable> validate_magma(int n, std::vector<std::string> names,
                                   std::vector<int> table);

// First violating triple (x, y, z) in row-major order, if any.
Diag check_associative(const CayleyTable& t);
bool is_associative(const CayleyTable& t);

// Elements commuting with the whole carrier.
ElemSet center(const CayleyTable& t);

bool is_commutative(const CayleyTable& t);

// The two-sided identity, if one exists.
std::optional<int> identity_element(const CayleyTable& t);

}  // namespace semibrace

#endif  // SEMIBRACE_TABLE_HPP_
