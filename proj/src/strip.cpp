#include "sandrank/strip.hpp"

#include <algorithm>
#include <stdexcept>

#include "sandrank/dyck.hpp"

namespace sandrank {

namespace {

Int strip_size(const BinaryWord& w) {
    require_Dn(w);
    return w.count_a() + 1;
}

} // namespace

Int cell_label(Int n, Int x, Int y) {
    if (n < 2 || y < 0 || y > n - 2) throw std::out_of_range("cell row outside the strip");
    return checked_add(y, checked_mul(y - 1 - x, n - 1));
}

std::pair<Int, Int> cell_position(Int n, Int k) {
    if (n < 2) throw std::out_of_range("strip needs n >= 2");
    const Int y = floor_mod(k, n - 1);
    return {y - 1 - (k - y) / (n - 1), y};
}

Int vertex_label(Int n, Int x, Int y) { return checked_sub(checked_mul(n, y), checked_mul(n - 1, x)); }

bool is_left_cell(const BinaryWord& w, Int k) {
    const Int n = strip_size(w);
    if (n < 2) throw std::invalid_argument("the strip of D_1 has no cells");
    const auto [x, y] = cell_position(n, k);
    const Int bs_before = static_cast<Int>(w.position_of_a(static_cast<std::size_t>(y))) - y;
    return x < bs_before;
}

LeftRight left_right(const BinaryWord& w, Int s) {
    const Int n = strip_size(w);
    if (n == 1) return {std::max<Int>(0, s + 1), std::max<Int>(0, -s - 1)};
    const std::vector<Int> eta = heights(w);
    LeftRight out;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        const Int row = static_cast<Int>(i);
        // Left cells of this row: row + (eta + t)(n-1), t >= 0; right cells:
        // row + (eta - 1 - t)(n-1), t >= 0.
        const Int lowest_left = row + eta[i] * (n - 1);
        const Int highest_right = row + (eta[i] - 1) * (n - 1);
        out.left += std::max<Int>(0, floor_div(s - lowest_left, n - 1) + 1);
        out.right += std::max<Int>(0, floor_div(highest_right - s - 1, n - 1) + 1);
    }
    return out;
}

Int lastright(const BinaryWord& w) {
    const Int n = strip_size(w);
    if (n == 1) return -1;
    const std::vector<Int> eta = heights(w);
    Int best = 0;
    for (std::size_t i = 0; i < eta.size(); ++i) {
        const Int label = static_cast<Int>(i) + (eta[i] - 1) * (n - 1);
        if (i == 0 || label > best) best = label;
    }
    return best;
}

Int lastright_prefix_formula(const BinaryWord& w) {
    const Int n = strip_size(w);
    if (n == 1) return -1;
    const std::vector<Int> eta = heights(w);
    std::size_t m = eta.size() - 1;
    for (std::size_t i = eta.size(); i-- > 0;)
        if (eta[i] > eta[m]) m = i;
    const std::size_t len = w.position_of_a(m);
    const Int ua = static_cast<Int>(m);
    const Int ub = static_cast<Int>(len) - ua;
    return n * ua - (n - 1) * (ub + 1);
}

std::vector<Int> crossing_indices(const BinaryWord& w) {
    const Int n = strip_size(w);
    if (n < 2) throw std::invalid_argument("the strip of D_1 has no cells");
    // Every label below -1 is right and every label above lastright is left.
    std::vector<Int> out;
    for (Int k = -2; k <= lastright(w); ++k)
        if (is_left_cell(w, k) != is_left_cell(w, k + 1)) out.push_back(k);
    return out;
}

StripPoint psi_involution(const BinaryWord& w, Int s) {
    return {phi_involution(w), checked_sub(checked_sub(lastright(w), 1), s)};
}

} // namespace sandrank
