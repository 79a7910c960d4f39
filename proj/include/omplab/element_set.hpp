#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

#include "omplab/errors.hpp"

namespace omplab {

using ElementId = unsigned;

/// Largest carrier any structure may have; element sets are one machine word.
inline constexpr std::size_t kMaxElements = 64;

/// Finite set of element indices in [0, 64), stored as a bitmask.
class ElementSet {
public:
  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<ElementId> xs) {
    for (ElementId x : xs) insert(x);
  }

  static constexpr ElementSet singleton(ElementId x) { return ElementSet{}.with(x); }

  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    if (n > kMaxElements) throw ContractError("element set wider than 64");
    return ElementSet(n == kMaxElements ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_singleton() const noexcept { return std::has_single_bit(bits_); }

  constexpr bool contains(ElementId x) const noexcept {
    return x < kMaxElements && ((bits_ >> x) & 1U) != 0;
  }

  constexpr void insert(ElementId x) {
    if (x >= kMaxElements) throw ContractError("element index out of range");
    bits_ |= std::uint64_t{1} << x;
  }
  constexpr void erase(ElementId x) noexcept {
    if (x < kMaxElements) bits_ &= ~(std::uint64_t{1} << x);
  }
  constexpr ElementSet with(ElementId x) const {
    ElementSet s = *this;
    s.insert(x);
    return s;
  }

  /// Smallest member. Undefined on the empty set.
  constexpr ElementId first() const noexcept { return static_cast<ElementId>(std::countr_zero(bits_)); }

  constexpr bool subset_of(ElementSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator&(ElementSet o) const noexcept { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const noexcept { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const noexcept { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator|=(ElementSet o) noexcept { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const noexcept = default;
  // Numeric order of the masks; only used to sort sets deterministically.
  constexpr auto operator<=>(const ElementSet&) const noexcept = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ElementId;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr ElementId operator*() const noexcept { return static_cast<ElementId>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { iterator t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const noexcept = default;

  private:
    std::uint64_t rest_ = 0;
  };

  /// Members in increasing index order.
  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

private:
  std::uint64_t bits_ = 0;
};

} // namespace omplab
