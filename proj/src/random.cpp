#include "zforce/random.hpp"

namespace zforce {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t tag_hash(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Seed derive_seed(Seed master, std::string_view model_tag, std::uint64_t grid_index,
                 std::uint64_t replica) {
  std::uint64_t s = splitmix64(master ^ tag_hash(model_tag));
  s = splitmix64(s ^ grid_index);
  return splitmix64(s ^ replica);
}

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's nearly-divisionless multiply-shift with rejection.
  u128 m = static_cast<u128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<u128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace zforce
