#pragma once

#include <optional>
#include <string>

namespace equicode {

/// Outcome of an executable identity check.
struct Report {
    std::string flavor;                 // which identity was checked
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::optional<std::string> witness; // first discrepancy, when failing
    std::string detail;                 // free-form context (instance, sizes)

    std::string to_text() const;
};

} // namespace equicode
