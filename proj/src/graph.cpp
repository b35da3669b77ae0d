#include "sandrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sandrank {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

Configuration Configuration::unit(std::size_t n, std::size_t i) {
    Configuration e(n);
    e.values_.at(i) = 1;
    return e;
}

Configuration& Configuration::operator+=(const Configuration& other) {
    if (other.size() != size()) throw std::invalid_argument("configuration size mismatch");
    for (std::size_t i = 0; i < size(); ++i) values_[i] = checked_add(values_[i], other.values_[i]);
    return *this;
}

Configuration& Configuration::operator-=(const Configuration& other) {
    if (other.size() != size()) throw std::invalid_argument("configuration size mismatch");
    for (std::size_t i = 0; i < size(); ++i) values_[i] = checked_sub(values_[i], other.values_[i]);
    return *this;
}

Configuration Configuration::operator-() const {
    Configuration r(size());
    for (std::size_t i = 0; i < size(); ++i) r.values_[i] = checked_sub(0, values_[i]);
    return r;
}

std::string Configuration::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < size(); ++i) out << (i ? "," : "") << values_[i];
    out << ')';
    return out.str();
}

Int degree(const Configuration& f) {
    Int s = 0;
    for (Int v : f) s = checked_add(s, v);
    return s;
}

bool is_effective(const Configuration& f) {
    return std::all_of(f.begin(), f.end(), [](Int v) { return v >= 0; });
}

MultiGraph::MultiGraph(std::vector<std::vector<Int>> mult) : mult_(std::move(mult)) {
    n_ = static_cast<int>(mult_.size());
    if (n_ < 1) throw std::invalid_argument("graph must have at least one vertex");
    for (const auto& row : mult_)
        if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("multiplicity matrix is not square");
    degree_.assign(n_, 0);
    neighbors_.assign(n_, {});
    Int twice_edges = 0;
    for (int i = 0; i < n_; ++i) {
        if (mult_[i][i] != 0) throw std::invalid_argument("graph has a loop at vertex " + std::to_string(i + 1));
        for (int j = 0; j < n_; ++j) {
            if (mult_[i][j] < 0) throw std::invalid_argument("negative edge multiplicity");
            if (mult_[i][j] != mult_[j][i]) throw std::invalid_argument("multiplicity matrix is not symmetric");
            if (mult_[i][j] > 0) neighbors_[i].push_back(j);
            degree_[i] = checked_add(degree_[i], mult_[i][j]);
        }
        twice_edges = checked_add(twice_edges, degree_[i]);
    }
    edges_ = twice_edges / 2;

    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n_) throw std::invalid_argument("graph is not connected");
}

MultiGraph MultiGraph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::out_of_range("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("graph has a loop at vertex " + std::to_string(e.u + 1));
        if (e.multiplicity < 0) throw std::invalid_argument("negative edge multiplicity");
        m[e.u][e.v] = checked_add(m[e.u][e.v], e.multiplicity);
        m[e.v][e.u] = m[e.u][e.v];
    }
    return MultiGraph(std::move(m));
}

MultiGraph MultiGraph::complete(int n) {
    if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 1));
    for (int i = 0; i < n; ++i) m[i][i] = 0;
    return MultiGraph(std::move(m));
}

MultiGraph MultiGraph::wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel needs at least 3 rim vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < rim; ++i) {
        edges.push_back({i, (i + 1) % rim, 1});
        edges.push_back({i, rim, 1});
    }
    return from_edges(rim + 1, edges);
}

MultiGraph MultiGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
    return from_edges(n, edges);
}

bool MultiGraph::is_complete() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (mult_[i][j] != (i == j ? 0 : 1)) return false;
    return true;
}

std::size_t MultiGraph::index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i);
}

void require_vertex(const MultiGraph& g, int i) {
    if (i < 0 || i >= g.vertex_count()) throw std::out_of_range("vertex index " + std::to_string(i) + " out of range");
}

void require_size(const MultiGraph& g, const Configuration& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("configuration has " + std::to_string(f.size()) + " entries, graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

Configuration laplacian_row(const MultiGraph& g, int i) {
    require_vertex(g, i);
    Configuration row(g.vertex_count());
    for (int j : g.neighbors(i)) row[j] = -g.multiplicity(i, j);
    row[i] = g.vertex_degree(i);
    return row;
}

void topple_in_place(const MultiGraph& g, Configuration& f, int i, Int times) {
    require_vertex(g, i);
    require_size(g, f);
    if (times == 0) return;
    f[i] = checked_sub(f[i], checked_mul(times, g.vertex_degree(i)));
    for (int j : g.neighbors(i)) f[j] = checked_add(f[j], checked_mul(times, g.multiplicity(i, j)));
}

Configuration topple(const MultiGraph& g, Configuration f, int i) {
    topple_in_place(g, f, i, 1);
    return f;
}

Configuration degrees(const MultiGraph& g) {
    Configuration d(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) d[i] = g.vertex_degree(i);
    return d;
}

Configuration max_stable(const MultiGraph& g) {
    Configuration d(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) d[i] = g.vertex_degree(i) - 1;
    return d;
}

Int spanning_tree_count(const MultiGraph& g) {
    // Bareiss fraction-free elimination on the reduced Laplacian (sink row/column removed).
    const int k = g.vertex_count() - 1;
    if (k == 0) return 1;
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = (i == j) ? g.vertex_degree(i) : -g.multiplicity(i, j);
    Int sign = 1;
    Int prev = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (a[p][p] == 0) {
            int swap = -1;
            for (int r = p + 1; r < k; ++r)
                if (a[r][p] != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[p], a[swap]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                a[i][j] = checked_sub(checked_mul(a[i][j], a[p][p]), checked_mul(a[i][p], a[p][j])) / prev;
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

} // namespace sandrank
