#ifndef SEMIBRACE_ENDO_HPP_
#define SEMIBRACE_ENDO_HPP_

#include <compare>
#include <optional>
#include <unordered_map>
#include <vector>

#include "semibrace/inverse.hpp"

namespace semibrace {

// A self-map of a fixed additive carrier with img[x + y] = img[x] + img[y].
struct EndoMap {
  std::vector<int> img;

  int operator()(int x) const { return img[x]; }
  bool operator==(const EndoMap& other) const { return img == other.img; }
  bool is_bijective() const;
};

// All endomorphisms of one carrier, interned in lexicographic order of
// their image arrays. Downstream code stores indices into this list, so
// equality and hashing are integer comparisons.
class EndoList {
 public:
  EndoList() = default;
  explicit EndoList(std::vector<EndoMap> maps);

  int size() const { return static_cast<int>(maps_.size()); }
  const EndoMap& at(int i) const { return maps_[i]; }
  const std::vector<EndoMap>& maps() const { return maps_; }

  // -1 when the image array does not occur in the list.
  int index_of(const std::vector<int>& img) const;

  // Index of maps_[i] composed-after maps_[j] (apply j first), or -1 when
  // the composite is absent; never -1 once the list is complete.
  int compose(int i, int j) const;

  int identity_index() const { return identity_; }

 private:
  std::vector<EndoMap> maps_;
  std::unordered_map<std::string, int> index_;
  int identity_ = -1;
};

// Brute force over all n^n self-maps with prefix pruning: a partial map is
// abandoned as soon as some constraint img[x+y] = img[x]+img[y] with all
// three positions decided is violated. Output is lexicographically sorted.
Result<EndoList> enumerate_endomorphisms(const InverseSemigroup& s,
                                         int max_carrier = 8);

// The bijective endomorphisms; verified to form a group under composition.
Result<std::vector<EndoMap>> enumerate_automorphisms(const InverseSemigroup& s,
                                                     int max_carrier = 8);

// An element (f, x) of End(S,+) x S with the product
// (f, x)(g, y) = (f o g, x + f(y)).
struct HolomorphElement {
  int endo = 0;
  int point = 0;
  auto operator<=>(const HolomorphElement&) const = default;
};

// Finite sets of holomorph elements, kept sorted and unique.
using HolomorphSet = std::vector<HolomorphElement>;

HolomorphSet make_holomorph_set(HolomorphSet elems);
bool holomorph_set_contains(const HolomorphSet& set, HolomorphElement e);

// Context pairing an additive Clifford semigroup with its endomorphism
// list: the semidirect product End(S,+) x| (S,+).
class Holomorph {
 public:
  Holomorph(const CliffordStructure& add, const EndoList& endos)
      : add_(&add), endos_(&endos) {}

  const CliffordStructure& add() const { return *add_; }
  const EndoList& endos() const { return *endos_; }
  int carrier_size() const { return add_->n(); }

  Result<HolomorphElement> product(HolomorphElement u,
                                   HolomorphElement v) const;

  // Least product-closed superset of the seed; bounded by |End| * n.
  Result<HolomorphSet> closure(HolomorphSet seed) const;

  // Exhaustive associativity check of the full product, |End| * n elements.
  Diag check_product_associative() const;

  // Searches Aut(S,+) for psi with (psi,0) H (psi^-1,0) = K. Requires an
  // additive identity; without one the conjugation formula is meaningless.
  Result<std::optional<EndoMap>> conjugating_automorphism(
      const HolomorphSet& h, const HolomorphSet& k) const;

 private:
  const CliffordStructure* add_;
  const EndoList* endos_;
};

}  // namespace semibrace

#endif  // SEMIBRACE_ENDO_HPP_
