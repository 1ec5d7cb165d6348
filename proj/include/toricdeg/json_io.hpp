#pragma once

#include "toricdeg/harness.hpp"

#include <json.hpp>

namespace toricdeg {

// Insertion-ordered so that output is byte-deterministic. Rationals are
// emitted as strings "p" or "p/q".
using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const Exponent& u);
Json to_json(const WeightVector& w);
Json to_json(const PrimeVerdict& v);
Json to_json(const RankReport& r);
Json to_json(const BinomialPattern& g);
Json to_json(const LinearSystem& sys);
Json to_json(const FeasibilityResult& r);
Json to_json(const WitnessBundle& b);
Json to_json(const NonexistenceReport& r);
Json to_json(const SweepRow& row);

} // namespace toricdeg
