#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace greymadm {

/// Raised for malformed user input (bad intervals, dimension mismatches,
/// unknown identifiers). Callers at the CLI boundary map it to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal postcondition does not hold.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Closed interval [lower, upper] of a grey number before simplification.
class GreyInterval {
public:
    GreyInterval() = default;
    GreyInterval(double lower, double upper);

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    double width() const noexcept { return upper_ - lower_; }

    bool operator==(const GreyInterval&) const = default;

private:
    double lower_ = 0.0;
    double upper_ = 0.0;
};

/// Grey number in simplified form: kernel (interval midpoint) and degree of
/// greyness (interval width over a unit domain).
///
/// The kernel is unrestricted; greyness must be finite and non-negative.
/// A crisp real c is the grey number (c, 0).
class GreyNumber {
public:
    GreyNumber() = default;
    GreyNumber(double kernel, double greyness);

    static GreyNumber crisp(double value) { return GreyNumber(value, 0.0); }

    double kernel() const noexcept { return kernel_; }
    double greyness() const noexcept { return greyness_; }
    bool is_crisp() const noexcept { return greyness_ == 0.0; }

    bool operator==(const GreyNumber&) const = default;

private:
    double kernel_ = 0.0;
    double greyness_ = 0.0;
};

/// Precision gamma = 1/(1+g) and relative kernel delta = gamma * kernel.
struct RelativeScore {
    double gamma = 1.0;
    double delta = 0.0;

    bool operator==(const RelativeScore&) const = default;
};

GreyNumber from_interval(const GreyInterval& iv);
GreyInterval to_interval(const GreyNumber& g);

// Kernels follow real arithmetic; greyness takes the max of the operands.
GreyNumber add(const GreyNumber& x, const GreyNumber& y);
GreyNumber mul(const GreyNumber& x, const GreyNumber& y);
GreyNumber scalar_mul(double c, const GreyNumber& x);

inline GreyNumber operator+(const GreyNumber& x, const GreyNumber& y) { return add(x, y); }
inline GreyNumber operator*(const GreyNumber& x, const GreyNumber& y) { return mul(x, y); }
inline GreyNumber operator*(double c, const GreyNumber& x) { return scalar_mul(c, x); }

RelativeScore relative_score(const GreyNumber& x) noexcept;

/// Orders by relative kernel, then by precision (smaller greyness wins).
/// Both keys use exact floating comparison.
std::partial_ordering compare(const GreyNumber& x, const GreyNumber& y) noexcept;

std::string to_string(const GreyNumber& g, int decimals = 4);
std::string to_string(const GreyInterval& iv, int decimals = 4);

}  // namespace greymadm
