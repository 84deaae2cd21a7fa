#include "greymadm/grey_number.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace greymadm {

GreyInterval::GreyInterval(double lower, double upper) : lower_(lower), upper_(upper) {
    if (!std::isfinite(lower) || !std::isfinite(upper)) {
        throw InputError(fmt::format("interval bounds must be finite, got [{}, {}]", lower, upper));
    }
    if (lower > upper) {
        throw InputError(fmt::format("reversed interval [{}, {}]: lower bound exceeds upper", lower, upper));
    }
}

GreyNumber::GreyNumber(double kernel, double greyness) : kernel_(kernel), greyness_(greyness) {
    if (!std::isfinite(kernel) || !std::isfinite(greyness)) {
        throw InputError(fmt::format("grey number components must be finite, got ({}, {})", kernel, greyness));
    }
    if (greyness < 0.0) {
        throw InputError(fmt::format("degree of greyness must be non-negative, got {}", greyness));
    }
}

GreyNumber from_interval(const GreyInterval& iv) {
    return GreyNumber((iv.lower() + iv.upper()) / 2.0, iv.upper() - iv.lower());
}

GreyInterval to_interval(const GreyNumber& g) {
    const double half = g.greyness() / 2.0;
    return GreyInterval(g.kernel() - half, g.kernel() + half);
}

GreyNumber add(const GreyNumber& x, const GreyNumber& y) {
    return GreyNumber(x.kernel() + y.kernel(), std::max(x.greyness(), y.greyness()));
}

GreyNumber mul(const GreyNumber& x, const GreyNumber& y) {
    return GreyNumber(x.kernel() * y.kernel(), std::max(x.greyness(), y.greyness()));
}

GreyNumber scalar_mul(double c, const GreyNumber& x) {
    return GreyNumber(c * x.kernel(), x.greyness());
}

RelativeScore relative_score(const GreyNumber& x) noexcept {
    const double gamma = 1.0 / (1.0 + x.greyness());
    return RelativeScore{gamma, gamma * x.kernel()};
}

std::partial_ordering compare(const GreyNumber& x, const GreyNumber& y) noexcept {
    const RelativeScore sx = relative_score(x);
    const RelativeScore sy = relative_score(y);
    if (auto c = sx.delta <=> sy.delta; c != 0) {
        return c;
    }
    return sx.gamma <=> sy.gamma;
}

std::string to_string(const GreyNumber& g, int decimals) {
    return fmt::format("({:.{}f},{:.{}f})", g.kernel(), decimals, g.greyness(), decimals);
}

std::string to_string(const GreyInterval& iv, int decimals) {
    return fmt::format("[{:.{}f},{:.{}f}]", iv.lower(), decimals, iv.upper(), decimals);
}

}  // namespace greymadm
