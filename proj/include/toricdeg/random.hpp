#pragma once

#include <cstdint>
#include <random>

namespace toricdeg {

// Every randomized routine takes its generator explicitly; nothing in the
// library seeds itself.
using Rng = std::mt19937_64;

} // namespace toricdeg
