#include "sandrank/series.hpp"

#include <sstream>
#include <stdexcept>

namespace sandrank {

TruncatedSeries::TruncatedSeries(int nvars, std::vector<Bound> bounds) : nvars_(nvars), bounds_(std::move(bounds)) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("series supports 1 to 3 variables");
    std::array<bool, kMaxVars> covered{};
    for (const auto& b : bounds_) {
        if (b.max_total < 0) throw std::invalid_argument("truncation bound must be nonnegative");
        for (int v : b.vars) {
            if (v < 0 || v >= nvars) throw std::invalid_argument("truncation bound names an unknown variable");
            covered[v] = true;
        }
    }
    for (int v = 0; v < nvars; ++v)
        if (!covered[v]) throw std::invalid_argument("every series variable needs a truncation bound");
}

TruncatedSeries TruncatedSeries::constant(int nvars, std::vector<Bound> bounds, Int c) {
    TruncatedSeries s(nvars, std::move(bounds));
    s.add_term({0, 0, 0}, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial_like(Exponents e, Int c) const {
    TruncatedSeries s = zero_like();
    s.add_term(e, c);
    return s;
}

bool TruncatedSeries::admits(const Exponents& e) const {
    for (int v = 0; v < kMaxVars; ++v)
        if (e[v] < 0 || (v >= nvars_ && e[v] != 0)) return false;
    for (const auto& b : bounds_) {
        int total = 0;
        for (int v : b.vars) total += e[v];
        if (total > b.max_total) return false;
    }
    return true;
}

void TruncatedSeries::add_term(const Exponents& e, Int c) {
    if (c == 0 || !admits(e)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Int TruncatedSeries::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_ || bounds_ != o.bounds_) throw std::invalid_argument("series with different truncations");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_shape(o);
    for (const auto& [e, c] : o.terms_) add_term(e, checked_sub(0, c));
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_shape(b);
    TruncatedSeries out = a.zero_like();
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            TruncatedSeries::Exponents e{};
            for (int v = 0; v < TruncatedSeries::kMaxVars; ++v) e[v] = ea[v] + eb[v];
            if (out.admits(e)) out.add_term(e, checked_mul(ca, cb));
        }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(Int c) const {
    TruncatedSeries out = zero_like();
    for (const auto& [e, v] : terms_) out.add_term(e, checked_mul(v, c));
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Int c0 = coefficient({0, 0, 0});
    if (c0 != 1 && c0 != -1) throw std::domain_error("series inverse needs constant term 1 or -1");
    // f = c0 (1 - g) with g free of constant term; 1/f = c0 (1 + g + g^2 + ...),
    // and g^k vanishes once k exceeds the truncation.
    TruncatedSeries g = scaled(-c0);
    g.add_term({0, 0, 0}, 1);
    TruncatedSeries sum = constant(nvars_, bounds_, 1);
    TruncatedSeries power = sum;
    for (;;) {
        power = power * g;
        if (power.terms_.empty()) break;
        sum += power;
    }
    return sum.scaled(c0);
}

TruncatedSeries TruncatedSeries::map_exponents(const std::function<Exponents(const Exponents&)>& f) const {
    TruncatedSeries out = zero_like();
    for (const auto& [e, c] : terms_) out.add_term(f(e), c);
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nvars_ == b.nvars_ && a.bounds_ == b.bounds_ && a.terms_ == b.terms_;
}

std::string TruncatedSeries::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool unit = e == Exponents{0, 0, 0};
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << '-';
        first = false;
        const Int mag = c < 0 ? -c : c;
        bool wrote = false;
        if (mag != 1 || unit) {
            out << mag;
            wrote = true;
        }
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (wrote) out << '*';
            out << (v < static_cast<int>(names.size()) ? names[v] : "v" + std::to_string(v));
            if (e[v] > 1) out << '^' << e[v];
            wrote = true;
        }
    }
    return out.str();
}

} // namespace sandrank
