#include "omstretch/element_set.hpp"

#include "omstretch/errors.hpp"

namespace omstretch {

namespace {

void check_label(int e) {
  if (e < 1 || e > kMaxElements) {
    throw ArgumentError("element label " + std::to_string(e) + " outside 1.." +
                        std::to_string(kMaxElements));
  }
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

ElementSet::ElementSet(const std::vector<int>& elements) {
  for (int e : elements) insert(e);
}

ElementSet ElementSet::range(int n) {
  if (n < 0 || n > kMaxElements) throw ArgumentError("ground set size out of range");
  return from_bits(n == 32 ? ~0u : ((1u << n) - 1u));
}

bool ElementSet::contains(int e) const {
  if (e < 1 || e > kMaxElements) return false;
  return (bits_ >> (e - 1)) & 1u;
}

void ElementSet::insert(int e) {
  check_label(e);
  bits_ |= 1u << (e - 1);
}

void ElementSet::erase(int e) {
  check_label(e);
  bits_ &= ~(1u << (e - 1));
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

int SignedSet::sign(int e) const {
  if (pos.contains(e)) return 1;
  if (neg.contains(e)) return -1;
  return 0;
}

std::string SignedSet::to_string() const { return pos.to_string() + "+" + neg.to_string() + "-"; }

std::vector<ElementSet> subsets_of_size(int n, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {ElementSet{}};
  // Gosper's hack over n-bit words.
  std::uint32_t s = (1u << k) - 1u;
  const std::uint32_t limit = 1u << n;
  while (s < limit) {
    out.push_back(ElementSet::from_bits(s));
    std::uint32_t c = s & -s;
    std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace omstretch
