#pragma once

#include <string>
#include <vector>

namespace qma {

/// Outcome of one verified identity.  Failures carry the offending case in
/// `witness` so a broken identity is debuggable from the report alone.
struct CheckResult {
    std::string identity;
    std::string shape;
    std::string index;
    bool pass = false;
    std::string witness;

    static CheckResult ok(std::string identity, std::string shape, std::string index) {
        return {std::move(identity), std::move(shape), std::move(index), true, ""};
    }

    static CheckResult fail(std::string identity, std::string shape, std::string index,
                            std::string witness) {
        return {std::move(identity), std::move(shape), std::move(index), false,
                std::move(witness)};
    }
};

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace qma
