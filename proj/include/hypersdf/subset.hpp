#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hypersdf {

// Carrier elements are indices 0..order-1.
using Element = std::uint32_t;

// Identifies the ring a Subset was created for. Copies of a ring share it.
enum class RingId : std::uint64_t {};

// Fixed-width bit set over the carrier of one ring.
//
// Every hyperproduct, hyperideal and member of the product families is a
// Subset. Binary operations require both operands to carry the same RingId
// and throw std::invalid_argument otherwise.
class Subset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Subset() = default;
  Subset(RingId ring, std::size_t universe);
  Subset(RingId ring, std::size_t universe, std::initializer_list<Element> elements);

  static Subset full(RingId ring, std::size_t universe);

  [[nodiscard]] RingId ring() const noexcept { return ring_; }
  [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

  [[nodiscard]] bool contains(Element x) const noexcept {
    return x < universe_ && ((words_[x / word_bits] >> (x % word_bits)) & 1U) != 0;
  }
  void insert(Element x);
  void erase(Element x);

  [[nodiscard]] std::size_t count() const noexcept;
  [[nodiscard]] bool empty() const noexcept;
  [[nodiscard]] bool is_full() const noexcept { return count() == universe_; }

  [[nodiscard]] bool is_subset_of(Subset const& other) const;
  [[nodiscard]] bool intersects(Subset const& other) const;

  Subset& operator|=(Subset const& other);
  Subset& operator&=(Subset const& other);
  // Set difference (this \ other), not the additive difference.
  Subset& remove_all(Subset const& other);

  friend Subset operator|(Subset lhs, Subset const& rhs) { return lhs |= rhs; }
  friend Subset operator&(Subset lhs, Subset const& rhs) { return lhs &= rhs; }

  friend bool operator==(Subset const& lhs, Subset const& rhs) noexcept;
  // Orders by the bit pattern read as an unsigned integer (element 0 is the
  // least significant bit).
  friend std::strong_ordering operator<=>(Subset const& lhs, Subset const& rhs) noexcept;

  // Calls fn(x) for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        auto const bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Element>(w * word_bits + bit));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::vector<Element> elements() const;
  [[nodiscard]] Element min() const;  // precondition: !empty()
  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  void require_same_ring(Subset const& other) const;

  RingId ring_{};
  std::uint32_t universe_ = 0;
  boost::container::small_vector<word_type, 4> words_;
};

}  // namespace hypersdf

template <>
struct std::hash<hypersdf::Subset> {
  std::size_t operator()(hypersdf::Subset const& s) const noexcept { return s.hash(); }
};
