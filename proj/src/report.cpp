#include "equicode/report.hpp"

namespace equicode {

std::string Report::to_text() const {
    std::string out = flavor + ": " + (pass ? "PASS" : "FAIL");
    if (!detail.empty()) out += " (" + detail + ")";
    out += "\n  lhs: " + lhs + "\n  rhs: " + rhs;
    if (witness) out += "\n  witness: " + *witness;
    return out + "\n";
}

} // namespace equicode
