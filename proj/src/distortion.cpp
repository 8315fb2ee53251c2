#include "metembed/distortion.hpp"

#include "metembed/errors.hpp"

#include <string>

namespace metembed {

void require_bounds(const DistortionReport& report, const Rational& lower, const Rational& upper,
                    const char* what) {
    if (report.min_ratio < lower) {
        auto [a, b] = report.witness_min;
        throw CounterexampleError(std::string(what) + ": pair (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ") has ratio " +
                                      to_string(report.min_ratio) + " below " + to_string(lower),
                                  a, b);
    }
    if (report.max_ratio > upper) {
        auto [a, b] = report.witness_max;
        throw CounterexampleError(std::string(what) + ": pair (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ") has ratio " +
                                      to_string(report.max_ratio) + " above " + to_string(upper),
                                  a, b);
    }
}

}  // namespace metembed
