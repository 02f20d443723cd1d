#pragma once

#include <string>
#include <vector>

namespace monlef {

struct SelftestResult {
    std::string name;
    bool passed = false;
};

/// Runs the built-in fixture suite (the worked examples the library is
/// expected to reproduce exactly) and reports one result per fixture.
std::vector<SelftestResult> run_selftest(int threads = 0);

} // namespace monlef
