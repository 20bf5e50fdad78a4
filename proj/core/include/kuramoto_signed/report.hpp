#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kuramoto_signed {

/// One checked assertion, optionally tied to a simulation time.
struct AssertionLine {
    bool pass = true;
    std::string assertion;
    std::optional<double> time;
};

/// `PASS|FAIL <assertion> t=<time>` per line; the time field is omitted when absent.
[[nodiscard]] std::string format_report(const std::vector<AssertionLine>& lines);

[[nodiscard]] bool all_pass(const std::vector<AssertionLine>& lines) noexcept;

/// Short decimal rendering used inside assertion text.
[[nodiscard]] std::string short_number(double x);

}  // namespace kuramoto_signed
