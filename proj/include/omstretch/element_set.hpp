#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace omstretch {

/// Largest ground set the bitmask representation can hold.
inline constexpr int kMaxElements = 31;

/**
 * A subset of the ground set {1, ..., n}. Element e is stored in bit e-1.
 */
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements);
  explicit ElementSet(const std::vector<int>& elements);

  static constexpr ElementSet from_bits(std::uint32_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  /// The full ground set {1, ..., n}.
  static ElementSet range(int n);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  bool contains(int e) const;
  void insert(int e);
  void erase(int e);
  /// Smallest element, or 0 when empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element, or 0 when empty.
  constexpr int max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<int> elements() const;
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/**
 * A sign vector on the ground set, stored as its positive and negative parts.
 * Used for signed circuits, face labels and covectors alike.
 */
struct SignedSet {
  ElementSet pos;
  ElementSet neg;

  constexpr ElementSet support() const { return pos | neg; }
  constexpr bool is_zero() const { return pos.empty() && neg.empty(); }
  constexpr SignedSet negated() const { return {neg, pos}; }
  /// +1, -1 or 0.
  int sign(int e) const;
  /// No element receives opposite signs in the two vectors.
  constexpr bool conforms_with(const SignedSet& other) const {
    return !pos.intersects(other.neg) && !neg.intersects(other.pos);
  }
  /// this <= other in the conformal order: same signs wherever this is nonzero.
  constexpr bool conformal_below(const SignedSet& other) const {
    return pos.is_subset_of(other.pos) && neg.is_subset_of(other.neg);
  }
  /// The composition this o other: this's sign where nonzero, else other's.
  constexpr SignedSet composed_with(const SignedSet& other) const {
    return {pos | (other.pos - neg), neg | (other.neg - pos)};
  }
  std::string to_string() const;

  friend constexpr bool operator==(const SignedSet&, const SignedSet&) = default;
  friend constexpr auto operator<=>(const SignedSet&, const SignedSet&) = default;
};

/// Iterate over all subsets of {1..n} with the given cardinality, in increasing bit order.
std::vector<ElementSet> subsets_of_size(int n, int k);

}  // namespace omstretch
