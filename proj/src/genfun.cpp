#include "sandrank/genfun.hpp"

#include <stdexcept>

#include "sandrank/complete_graph.hpp"
#include "sandrank/dyck.hpp"
#include "sandrank/strip.hpp"

namespace sandrank {

namespace {

void require_bound(int T) {
    if (T < 0) throw std::invalid_argument("truncation bound must be nonnegative");
}

Int catalan(Int k) {
    Int c = 1;
    for (Int i = 0; i < k; ++i) c = checked_mul(c, 2 * (2 * i + 1)) / (i + 2);
    return c;
}

void require_small_n(int n) {
    if (n < 1) throw std::invalid_argument("L_n needs n >= 1");
    if (n > 20 || catalan(n - 1) > kMaxLnWords)
        throw std::invalid_argument("D_n has more than " + std::to_string(kMaxLnWords) + " words");
}

} // namespace

TruncatedSeries xy_series(int T) {
    require_bound(T);
    return TruncatedSeries(2, {{{0, 1}, T}});
}

TruncatedSeries xyz_series(int T, int z_max) {
    require_bound(T);
    require_bound(z_max);
    return TruncatedSeries(3, {{{0, 1}, T}, {{2}, z_max}});
}

TruncatedSeries qz_series(int Tq, int Tz) {
    require_bound(Tq);
    require_bound(Tz);
    return TruncatedSeries(2, {{{0}, Tq}, {{1}, Tz}});
}

TruncatedSeries h_series(int T) {
    TruncatedSeries h = xy_series(T);
    h.add_term({0, 0, 0}, 1);
    for (int i = 1; i <= T; ++i) {
        h.add_term({i, 0, 0}, 1);
        h.add_term({0, i, 0}, 1);
    }
    return h;
}

TruncatedSeries Ln_direct(int n, int T) {
    require_small_n(n);
    TruncatedSeries out = xy_series(T);
    auto emit = [&](const LeftRight& lr) {
        if (lr.left + lr.right <= T) out.add_term({static_cast<int>(lr.left), static_cast<int>(lr.right), 0}, 1);
    };
    for (const BinaryWord& w : all_Dn_words(static_cast<std::size_t>(n))) {
        // left grows with s and right shrinks, so both scans end at the bound.
        for (Int s = 0;; ++s) {
            const LeftRight lr = left_right(w, s);
            if (lr.left > T) break;
            emit(lr);
        }
        for (Int s = -1;; --s) {
            const LeftRight lr = left_right(w, s);
            if (lr.right > T) break;
            emit(lr);
        }
    }
    return out;
}

std::pair<Int, Int> word_weight(const BinaryWord& w) {
    Int alpha = 0;
    Int beta = 0;
    for (Int h : heights(w)) {
        if (h >= 0) alpha += h + 1;
        else beta += -h - 1;
    }
    return {alpha, beta};
}

TruncatedSeries toxy_word_sum(int n, int T) {
    if (n < 2) throw std::invalid_argument("the A_n word sum needs n >= 2");
    require_small_n(n);
    TruncatedSeries out = xy_series(T);
    for (const BinaryWord& w : all_An_words(static_cast<std::size_t>(n))) {
        const bool first_a = w.is_a(0);
        const bool last_a = w.is_a(w.size() - 1);
        if (first_a != last_a) continue;
        const auto [alpha, beta] = word_weight(w);
        if (alpha + beta > T) continue;
        out.add_term({static_cast<int>(alpha), static_cast<int>(beta), 0}, first_a ? -1 : 1);
    }
    return out;
}

TruncatedSeries Ln_via_toxy(int n, int T) { return h_series(T) * toxy_word_sum(n, T); }

TruncatedSeries carlitz_by_enumeration(int Tq, int Tz) {
    TruncatedSeries out = qz_series(Tq, Tz);
    for (int p = 0; p <= Tz; ++p)
        for (const BinaryWord& w : all_dyck_words(static_cast<std::size_t>(p)))
            out.add_term({static_cast<int>(area(w)), p, 0}, 1);
    return out;
}

TruncatedSeries carlitz_by_recurrence(int Tq, int Tz) {
    const TruncatedSeries one = TruncatedSeries::constant(2, qz_series(Tq, Tz).bounds(), 1);
    const TruncatedSeries z = one.monomial_like({0, 1, 0});
    auto z_to_qz = [](const TruncatedSeries::Exponents& e) {
        return TruncatedSeries::Exponents{e[0] + e[1], e[1], 0};
    };
    // Each pass fixes at least one more power of z.
    TruncatedSeries c = one;
    for (int pass = 0; pass <= Tz + 1; ++pass) c = one + z * c * c.map_exponents(z_to_qz);
    const TruncatedSeries again = one + z * c * c.map_exponents(z_to_qz);
    if (!(again == c)) throw std::logic_error("Carlitz recurrence did not reach its fixpoint");
    return c;
}

TruncatedSeries LnC_left(int N, int T) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    TruncatedSeries out = xyz_series(T, N - 1);
    for (int n = 1; n <= N; ++n) {
        const TruncatedSeries ln = Ln_direct(n, T);
        for (const auto& [e, c] : ln.terms()) out.add_term({e[0], e[1], n - 1}, c);
    }
    return out;
}

TruncatedSeries LnC_right(int N, int T) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    const TruncatedSeries shape = xyz_series(T, N - 1);
    const TruncatedSeries carlitz = carlitz_by_recurrence(T, N - 1);
    TruncatedSeries cx = shape.zero_like();
    TruncatedSeries cy = shape.zero_like();
    for (const auto& [e, c] : carlitz.terms()) {
        // q^a z^b -> x^(a+b) z^b, and likewise in y.
        cx.add_term({e[0] + e[1], 0, e[1]}, c);
        cy.add_term({0, e[0] + e[1], e[1]}, c);
    }
    const TruncatedSeries h_xy = h_series(T);
    TruncatedSeries h = shape.zero_like();
    for (const auto& [e, c] : h_xy.terms()) h.add_term(e, c);
    const TruncatedSeries one = shape.monomial_like({0, 0, 0});
    const TruncatedSeries z = shape.monomial_like({0, 0, 1});
    const TruncatedSeries numerator = h * (cx + cy - cx * cy);
    const TruncatedSeries denominator = one - cx * z * cy;
    return numerator * denominator.inverse();
}

bool LnC_identity_check(int N, int T) { return LnC_left(N, T) == LnC_right(N, T); }

bool Kn_bistatistic_check(int n, Int s_min, Int s_max) {
    require_small_n(n);
    const Int c = static_cast<Int>(n - 1) * (n - 2) / 2;
    for (const BinaryWord& w : all_Dn_words(static_cast<std::size_t>(n)))
        for (Int s = s_min; s <= s_max; ++s) {
            const Configuration f = SortedParking{w, s}.to_configuration();
            const Int rank = rank_formula(f);
            const LeftRight lr = left_right(w, s);
            if (degree(f) != c - 1 + lr.left - lr.right || rank != lr.left - 1) return false;
        }
    return true;
}

} // namespace sandrank
