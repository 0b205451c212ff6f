/*! \file rng.hh
  \brief Counter-based deterministic random stream.
*/

#ifndef WOM_RNG_HH
#define WOM_RNG_HH

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace wom {

  //! Seed naming a deterministic random stream.
  struct RngSeed {
    std::uint64_t value = 0;
    friend bool operator==(RngSeed, RngSeed) = default;
  };

  //! SplitMix64 finalizer; a bijection on 64-bit words.
  constexpr std::uint64_t mix64(std::uint64_t z)
  {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  /*! \brief Counter-based random stream.

    Draw i of a stream with key K is mix64(K + (i+1)·γ) with γ the golden
    ratio increment, so the output depends only on (key, counter) and is
    identical on every platform. Derived streams are obtained with split(),
    which hashes a stream label into a fresh key.

    All sampling helpers below are written out explicitly rather than using
    <random> distributions, whose outputs are implementation-defined.
  */
  class Rng {
  public:
    explicit Rng(RngSeed seed) : key_(mix64(seed.value ^ 0x6a09e667f3bcc909ULL)) {}

    std::uint64_t next()
    {
      ++counter_;
      return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    //! Uniform real in [0,1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    //! Bernoulli trial; succeeds iff the draw is strictly below p.
    bool bernoulli(double p) { return uniform01() < p; }

    //! Uniform integer in [0, n), n > 0 (Lemire's multiply-and-reject).
    std::uint64_t uniform_index(std::uint64_t n);

    //! Independent child stream named by label.
    Rng split(std::uint64_t label) const;
    Rng split(std::string_view label) const;

    std::uint64_t draws() const { return counter_; }

    //! Fisher-Yates shuffle, last position first.
    template <typename T>
    void shuffle(std::span<T> items)
    {
      for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_index(i);
        std::swap(items[i - 1], items[j]);
      }
    }

    /*! Uniform sample of m distinct values from [0, n), without
        replacement, in the order drawn (partial Fisher-Yates). */
    std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t m);

  private:
    Rng(std::uint64_t key, int) : key_(key) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
  };

} // namespace wom

#endif
