#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ampbound {

enum class Provenance { Simulated, Generated, Ingested };

std::string to_string(Provenance p);

// One variable's observations plus where they came from. Seed lineage lists
// every RNG seed that touched the data, oldest first.
struct Sample {
    std::vector<double> values;
    Provenance provenance = Provenance::Simulated;
    std::vector<std::uint64_t> seed_lineage;

    std::size_t n() const { return values.size(); }
};

}  // namespace ampbound
