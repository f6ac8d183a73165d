#include "cvur/rng.hpp"

namespace cvur {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kSplitSalt = 0xD1B54A32D192ED03ull;

// splitmix64 output function (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGolden * (stream + 1))) {}

CounterRng CounterRng::split(std::uint64_t index) const {
  CounterRng child(0);
  child.key_ = mix64((key_ ^ kSplitSalt) + kGolden * (index + 1));
  child.counter_ = 0;
  return child;
}

std::uint64_t CounterRng::next_u64() {
  counter_ += 1;
  return mix64(key_ + kGolden * counter_);
}

double CounterRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

}  // namespace cvur
