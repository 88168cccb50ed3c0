#include "sicmub/random.hpp"

#include "sicmub/errors.hpp"

namespace sicmub {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(splitmix64(seed) ^ (stream * 0xd1b54a32d192ed03ULL))),
      engine_(key_) {}

RandomStream RandomStream::split(std::uint64_t child) const {
    return {key_, child};
}

std::uint64_t RandomStream::uniform_int(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) {
        throw DomainError("uniform_int: empty range");
    }
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    return dist(engine_);
}

} // namespace sicmub
