/*! \file rng.cc
  \brief Rng sampling helpers.
*/

#include "wom/rng.hh"

#include <numeric>
#include <stdexcept>

namespace wom {

  std::uint64_t Rng::uniform_index(std::uint64_t n)
  {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  Rng Rng::split(std::uint64_t label) const
  {
    return Rng(mix64(key_ ^ mix64(label + 0x3c6ef372fe94f82bULL)), 0);
  }

  Rng Rng::split(std::string_view label) const
  {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return split(h);
  }

  std::vector<std::uint32_t> Rng::sample(std::uint32_t n, std::uint32_t m)
  {
    if (m > n) throw std::invalid_argument("sample: more items requested than available");
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < m; ++i) {
      auto j = i + static_cast<std::uint32_t>(uniform_index(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return pool;
  }

} // namespace wom
