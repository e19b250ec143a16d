#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "core/exact.hpp"

namespace skewtab {

// A partition: weakly decreasing positive parts. The empty partition is
// permitted; it only occurs as the inner shape of a skew shape.
// Immutable after construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  // Accepts "3,2,1" with exponent sugar ("3,1^3" means 3,1,1,1); rejects
  // empty text, non-integer tokens and increasing parts.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned long n() const { return n_; }
  unsigned height() const { return static_cast<unsigned>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  unsigned first_part() const { return parts_.empty() ? 0u : parts_.front(); }
  // 1-based row index; 0 beyond the height.
  unsigned part_or_zero(unsigned i) const {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0u;
  }

  Partition conjugate() const;
  unsigned multiplicity(unsigned value) const;
  // z = prod_i i^{m_i} m_i!; n!/z is the conjugacy-class size.
  Int z_factor() const;
  // One entry j-i per cell (i,j), rows first.
  std::vector<long> contents() const;
  bool contains(const Partition& inner) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
  unsigned long n_ = 0;
};

// Weight entries for SSYT counting: positive, not necessarily monotone.
// Same token syntax as Partition::parse.
std::vector<unsigned> parse_weight(std::string_view text);

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (n) first, (1^n) last.
std::vector<Partition> generate_partitions(unsigned long n);

// Validated pair with the inner diagram contained in the outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  unsigned long cells() const { return outer_.n() - inner_.n(); }

 private:
  Partition outer_;
  Partition inner_;
};

inline SkewShape skew(Partition outer, Partition inner) {
  return SkewShape(std::move(outer), std::move(inner));
}

// Conjugacy-class label of S_degree, stored as parts with |parts| <= degree
// and read as (parts, 1^{degree - |parts|}).
struct CycleType {
  CycleType(Partition parts_in, unsigned long degree_in);

  Partition parts;
  unsigned long degree;
};

}  // namespace skewtab
