#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sandrank/graph.hpp"

namespace sandrank {

/// Power series in up to three variables with exact integer coefficients,
/// truncated by total-degree bounds on groups of variables. A monomial is
/// stored only if, for every bound, the exponents of its variables sum to at
/// most the bound. Every variable must belong to some bound, which makes the
/// kept monomials finite and truncation an ideal (so products are exact).
class TruncatedSeries {
public:
    static constexpr int kMaxVars = 3;
    using Exponents = std::array<int, kMaxVars>;

    struct Bound {
        std::vector<int> vars;
        int max_total = 0;
        friend bool operator==(const Bound&, const Bound&) = default;
    };

    TruncatedSeries(int nvars, std::vector<Bound> bounds);

    static TruncatedSeries constant(int nvars, std::vector<Bound> bounds, Int c);
    TruncatedSeries zero_like() const { return TruncatedSeries(nvars_, bounds_); }
    TruncatedSeries monomial_like(Exponents e, Int c = 1) const;

    int nvars() const noexcept { return nvars_; }
    const std::vector<Bound>& bounds() const noexcept { return bounds_; }
    bool admits(const Exponents& e) const;

    /// Adds c to the coefficient of e; silently drops monomials beyond the bounds.
    void add_term(const Exponents& e, Int c);
    Int coefficient(const Exponents& e) const;
    const std::map<Exponents, Int>& terms() const noexcept { return terms_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(Int c) const;

    /// Multiplicative inverse; the constant term must be 1 or -1.
    TruncatedSeries inverse() const;

    /// Applies an exponent substitution (e.g. z -> qz) termwise, re-truncating.
    TruncatedSeries map_exponents(const std::function<Exponents(const Exponents&)>& f) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    /// e.g. "1 + x + 2*x^2*y" with the given variable names.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void require_same_shape(const TruncatedSeries& o) const;

    int nvars_;
    std::vector<Bound> bounds_;
    std::map<Exponents, Int> terms_;
};

} // namespace sandrank
