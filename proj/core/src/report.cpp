#include "kuramoto_signed/report.hpp"

#include <algorithm>
#include <sstream>

namespace kuramoto_signed {

std::string short_number(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

std::string format_report(const std::vector<AssertionLine>& lines) {
    std::string out;
    for (const auto& l : lines) {
        out += l.pass ? "PASS " : "FAIL ";
        out += l.assertion;
        if (l.time) out += " t=" + short_number(*l.time);
        out += '\n';
    }
    return out;
}

bool all_pass(const std::vector<AssertionLine>& lines) noexcept {
    return std::all_of(lines.begin(), lines.end(), [](const AssertionLine& l) { return l.pass; });
}

}  // namespace kuramoto_signed
