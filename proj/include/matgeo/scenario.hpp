#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace matgeo {

// One expectation inside a named reproduction, with both sides rendered for
// diffing.
struct StepResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct ScenarioReport {
    std::string name;
    bool pass = false;
    std::vector<StepResult> steps;
    double elapsed_ms = 0.0;
};

// Known names: s2f3-a4, s2f2-a5, alt-shift:<even n>, lemma21, herm-witness.
// Unknown names raise Error. Every scenario is deterministic for a fixed
// seed.
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed = 42);

std::vector<std::string> scenario_names();

}  // namespace matgeo
