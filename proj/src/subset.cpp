#include "hypersdf/subset.hpp"

#include <stdexcept>
#include <string>

namespace hypersdf {

namespace {
std::size_t words_for(std::size_t universe) {
  return (universe + Subset::word_bits - 1) / Subset::word_bits;
}
}  // namespace

Subset::Subset(RingId ring, std::size_t universe)
    : ring_(ring), universe_(static_cast<std::uint32_t>(universe)), words_(words_for(universe), 0) {}

Subset::Subset(RingId ring, std::size_t universe, std::initializer_list<Element> elements)
    : Subset(ring, universe) {
  for (Element x : elements) {
    insert(x);
  }
}

Subset Subset::full(RingId ring, std::size_t universe) {
  Subset s(ring, universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    s.words_[w] = ~word_type{0};
  }
  if (auto const tail = universe % word_bits; tail != 0) {
    s.words_.back() = (word_type{1} << tail) - 1;
  }
  return s;
}

void Subset::insert(Element x) {
  if (x >= universe_) {
    throw std::out_of_range("element " + std::to_string(x) + " outside carrier of size "
                            + std::to_string(universe_));
  }
  words_[x / word_bits] |= word_type{1} << (x % word_bits);
}

void Subset::erase(Element x) {
  if (x < universe_) {
    words_[x / word_bits] &= ~(word_type{1} << (x % word_bits));
  }
}

std::size_t Subset::count() const noexcept {
  std::size_t n = 0;
  for (word_type w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool Subset::empty() const noexcept {
  for (word_type w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

void Subset::require_same_ring(Subset const& other) const {
  if (ring_ != other.ring_ || universe_ != other.universe_) {
    throw std::invalid_argument("subset operands belong to different rings");
  }
}

bool Subset::is_subset_of(Subset const& other) const {
  require_same_ring(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) {
      return false;
    }
  }
  return true;
}

bool Subset::intersects(Subset const& other) const {
  require_same_ring(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) {
      return true;
    }
  }
  return false;
}

Subset& Subset::operator|=(Subset const& other) {
  require_same_ring(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

Subset& Subset::operator&=(Subset const& other) {
  require_same_ring(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

Subset& Subset::remove_all(Subset const& other) {
  require_same_ring(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= ~other.words_[w];
  }
  return *this;
}

bool operator==(Subset const& lhs, Subset const& rhs) noexcept {
  return lhs.ring_ == rhs.ring_ && lhs.universe_ == rhs.universe_ && lhs.words_ == rhs.words_;
}

std::strong_ordering operator<=>(Subset const& lhs, Subset const& rhs) noexcept {
  if (auto c = lhs.universe_ <=> rhs.universe_; c != 0) {
    return c;
  }
  for (std::size_t w = lhs.words_.size(); w-- > 0;) {
    if (auto c = lhs.words_[w] <=> rhs.words_[w]; c != 0) {
      return c;
    }
  }
  return lhs.ring_ <=> rhs.ring_;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

Element Subset::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Element>(w * word_bits
                                  + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  throw std::logic_error("min() of an empty subset");
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(ring_));
  for (word_type w : words_) {
    h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hypersdf
