#pragma once

#include <string>
#include <vector>

#include "fatpoints/field.hpp"

namespace fatpoints {

struct ReproduceCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReproduceResult {
    std::string target;
    bool pass = false;
    std::vector<ReproduceCheck> checks;
};

std::vector<std::string> reproduce_targets();

/// Self-contained reproduction of one named reference computation, checked
/// against its frozen expected values.
ReproduceResult run_reproduce(const std::string& target,
                              const FieldContext& F = FieldContext{});

}  // namespace fatpoints
