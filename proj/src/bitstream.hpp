#ifndef SGTREE_BITSTREAM_HPP
#define SGTREE_BITSTREAM_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgt {

// Raised when a bit would be shifted past the fixed capacity.  Losing bits
// silently would corrupt the exploration near the conductor limit, so this
// is always a reported error.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed-capacity sequence of bits indexed 0..capacity-1, index 0 being the
// least significant.  Words = 2 gives the 128-bit flavour, Words = 4 the
// extended 256-bit one.  All indices at or above the logical length of a
// stream are zero, so a stream stands for itself with any number of
// trailing zeros appended.
template <unsigned Words>
class Bitstream {
  static_assert(Words >= 1);

 public:
  static constexpr unsigned capacity = 64u * Words;

  constexpr Bitstream() = default;

  static constexpr Bitstream zero() { return Bitstream{}; }

  // (n)_b for n < 2^64.
  static constexpr Bitstream from_uint(std::uint64_t n) {
    Bitstream r;
    r.words_[0] = n;
    return r;
  }

  // (2^i)_b
  static constexpr Bitstream unit(unsigned i) {
    Bitstream r;
    r.set(i);
    return r;
  }

  // (2^n - 1)_b : n ones.
  static constexpr Bitstream ones(unsigned n) {
    if (n > capacity) throw overflow_error("ones: length exceeds capacity");
    Bitstream r;
    for (unsigned w = 0; w < Words && n > 0; ++w) {
      r.words_[w] = n >= 64 ? ~0ull : ((1ull << n) - 1);
      n = n >= 64 ? n - 64 : 0;
    }
    return r;
  }

  constexpr bool test(unsigned i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  constexpr void set(unsigned i) {
    check_index(i);
    words_[i >> 6] |= 1ull << (i & 63);
  }

  constexpr void reset(unsigned i) {
    check_index(i);
    words_[i >> 6] &= ~(1ull << (i & 63));
  }

  constexpr bool any() const {
    for (unsigned w = 0; w < Words; ++w)
      if (words_[w]) return true;
    return false;
  }

  constexpr bool none() const { return !any(); }

  // Index of the lowest set bit, or capacity if none.
  constexpr unsigned lowest_set() const {
    for (unsigned w = 0; w < Words; ++w)
      if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
    return capacity;
  }

  // Clears and returns the lowest set bit; capacity if the stream is zero.
  constexpr unsigned pop_lowest() {
    for (unsigned w = 0; w < Words; ++w)
      if (words_[w]) {
        unsigned b = std::countr_zero(words_[w]);
        words_[w] &= words_[w] - 1;
        return 64 * w + b;
      }
    return capacity;
  }

  constexpr Bitstream& operator&=(const Bitstream& o) {
    for (unsigned w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }

  constexpr Bitstream& operator|=(const Bitstream& o) {
    for (unsigned w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }

  friend constexpr Bitstream operator&(Bitstream a, const Bitstream& b) {
    a &= b;
    return a;
  }

  friend constexpr Bitstream operator|(Bitstream a, const Bitstream& b) {
    a |= b;
    return a;
  }

  // a with every bit of o cleared.
  constexpr Bitstream without(const Bitstream& o) const {
    Bitstream r = *this;
    for (unsigned w = 0; w < Words; ++w) r.words_[w] &= ~o.words_[w];
    return r;
  }

  friend constexpr bool operator==(const Bitstream&, const Bitstream&) = default;

  // a >> t in the paper's notation: prepend t zeros, i.e. multiply the
  // integer value by 2^t.  A nonzero bit moved past the capacity is an
  // overflow error.
  Bitstream shift_up(unsigned t) const {
    if (t == 0) return *this;
    if (t >= capacity) {
      if (any()) throw overflow_error("shift_up past capacity");
      return Bitstream{};
    }
    // Every bit at index >= capacity - t would fall off the top.
    if (weight_range(capacity - t, capacity - 1) != 0)
      throw overflow_error("shift_up past capacity");
    return shift_up_unchecked(t);
  }

  // a << t in the paper's notation: drop the first t positions, i.e.
  // divide the integer value by 2^t.  Bits fall off harmlessly.
  constexpr Bitstream shift_down(unsigned t) const {
    if (t == 0) return *this;
    Bitstream r;
    if (t >= capacity) return r;
    const unsigned ws = t >> 6, bs = t & 63;
    for (unsigned w = 0; w + ws < Words; ++w) {
      std::uint64_t v = words_[w + ws] >> bs;
      if (bs && w + ws + 1 < Words) v |= words_[w + ws + 1] << (64 - bs);
      r.words_[w] = v;
    }
    return r;
  }

  // Number of ones among indices i..j inclusive.  Both ends are masked
  // first, then the set bits of each word are cleared one at a time
  // (Kernighan); this is the hot counting primitive of the descendant
  // formulas.
  constexpr unsigned weight_range(unsigned i, unsigned j) const {
    if (i > j || j >= capacity)
      throw std::invalid_argument("weight_range: bad index range");
    const unsigned wi = i >> 6, wj = j >> 6;
    unsigned count = 0;
    for (unsigned w = wi; w <= wj; ++w) {
      std::uint64_t v = words_[w];
      if (w == wi) v &= ~0ull << (i & 63);
      if (w == wj) {
        const unsigned top = j & 63;
        if (top != 63) v &= (1ull << (top + 1)) - 1;
      }
      while (v) {
        v &= v - 1;
        ++count;
      }
    }
    return count;
  }

  constexpr unsigned weight() const {
    unsigned count = 0;
    for (unsigned w = 0; w < Words; ++w) {
      std::uint64_t v = words_[w];
      while (v) {
        v &= v - 1;
        ++count;
      }
    }
    return count;
  }

  // Value as an integer; only defined when it fits in 64 bits.
  constexpr std::uint64_t to_uint() const {
    for (unsigned w = 1; w < Words; ++w)
      if (words_[w]) throw overflow_error("to_uint: value exceeds 64 bits");
    return words_[0];
  }

  // Debug text form, LSB first: unit(0) with length 3 prints "100".
  std::string to_string(unsigned length) const {
    if (length > capacity) length = capacity;
    std::string s;
    s.reserve(length);
    for (unsigned i = 0; i < length; ++i) s.push_back(test(i) ? '1' : '0');
    return s;
  }

  // Widening copy into a stream with at least as many words.
  template <unsigned W2>
  Bitstream<W2> widen() const {
    static_assert(W2 >= Words);
    Bitstream<W2> r;
    for (unsigned w = 0; w < Words; ++w)
      if (words_[w]) r |= Bitstream<W2>::from_uint(words_[w]).shift_up_unchecked(64 * w);
    return r;
  }

  // Narrowing copy; a set bit beyond the smaller capacity is an overflow.
  template <unsigned W2>
  Bitstream<W2> narrow() const {
    static_assert(W2 <= Words);
    for (unsigned w = W2; w < Words; ++w)
      if (words_[w]) throw overflow_error("narrow: value exceeds target capacity");
    Bitstream<W2> r;
    for (unsigned w = 0; w < W2; ++w)
      if (words_[w]) r |= Bitstream<W2>::from_uint(words_[w]).shift_up_unchecked(64 * w);
    return r;
  }

  // Internal fast path: caller guarantees no set bit reaches the capacity.
  constexpr Bitstream shift_up_unchecked(unsigned t) const {
    Bitstream r;
    if (t >= capacity) return r;
    const unsigned ws = t >> 6, bs = t & 63;
    for (unsigned w = Words; w-- > ws;) {
      std::uint64_t v = words_[w - ws] << bs;
      if (bs && w > ws) v |= words_[w - ws - 1] >> (64 - bs);
      r.words_[w] = v;
    }
    return r;
  }

  // In-place single shift up, unchecked; the child-update inner loop.
  constexpr void shift_up1_unchecked() {
    for (unsigned w = Words; w-- > 1;)
      words_[w] = (words_[w] << 1) | (words_[w - 1] >> 63);
    words_[0] <<= 1;
  }

 private:
  static constexpr void check_index(unsigned i) {
    if (i >= capacity) throw std::invalid_argument("bit index out of range");
  }

  std::array<std::uint64_t, Words> words_{};
};

}  // namespace sgt

#endif
