#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sandrank {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Every configuration and series operation goes
// through these so that wraparound surfaces as std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Floor division / modulo (remainder in [0, |b|) for b > 0).
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

/// Token assignment on the vertices of a graph. Entries may be negative.
/// Storage is 0-based: vertex x_i of the literature is index i-1, and the
/// sink x_n is the last index.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::size_t n, Int fill = 0) : values_(n, fill) {}
    explicit Configuration(std::vector<Int> values) : values_(std::move(values)) {}
    Configuration(std::initializer_list<Int> values) : values_(values) {}

    static Configuration unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    Int& operator[](std::size_t i) { return values_[i]; }
    Int operator[](std::size_t i) const { return values_[i]; }
    Int sink() const { return values_.back(); }

    const std::vector<Int>& values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    Configuration& operator+=(const Configuration& other);
    Configuration& operator-=(const Configuration& other);
    friend Configuration operator+(Configuration a, const Configuration& b) { return a += b; }
    friend Configuration operator-(Configuration a, const Configuration& b) { return a -= b; }
    Configuration operator-() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

    std::string to_string() const;

private:
    std::vector<Int> values_;
};

/// Sum of all entries.
Int degree(const Configuration& f);

/// True iff every entry (sink included) is nonnegative.
bool is_effective(const Configuration& f);

struct Edge {
    int u = 0;
    int v = 0;
    Int multiplicity = 1;
};

/// Loopless connected multigraph given by a symmetric multiplicity matrix.
/// The constructor validates symmetry, zero diagonal, nonnegativity and
/// connectivity and throws std::invalid_argument on failure.
class MultiGraph {
public:
    explicit MultiGraph(std::vector<std::vector<Int>> mult);

    /// 0-based endpoints; repeated pairs accumulate.
    static MultiGraph from_edges(int n, const std::vector<Edge>& edges);
    static MultiGraph complete(int n);
    /// Wheel W_k: rim cycle x_1..x_k plus a hub joined to every rim vertex.
    /// The hub is the last vertex (the sink).
    static MultiGraph wheel(int rim);
    static MultiGraph cycle(int n);

    int vertex_count() const noexcept { return n_; }
    int sink() const noexcept { return n_ - 1; }
    Int multiplicity(int i, int j) const { return mult_[index(i)][index(j)]; }
    Int vertex_degree(int i) const { return degree_[index(i)]; }
    Int edge_count() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int i) const { return neighbors_[index(i)]; }
    const std::vector<std::vector<Int>>& matrix() const noexcept { return mult_; }

    /// Simple complete graph K_n (every pair joined by exactly one edge).
    bool is_complete() const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) { return a.mult_ == b.mult_; }

private:
    std::size_t index(int i) const;

    int n_ = 0;
    Int edges_ = 0;
    std::vector<std::vector<Int>> mult_;
    std::vector<Int> degree_;
    std::vector<std::vector<int>> neighbors_;
};

void require_vertex(const MultiGraph& g, int i);
void require_size(const MultiGraph& g, const Configuration& f);

/// Laplacian configuration: d_i at vertex i, -e_{i,j} at every other j.
Configuration laplacian_row(const MultiGraph& g, int i);

/// Unconstrained toppling f - Delta^(i).
Configuration topple(const MultiGraph& g, Configuration f, int i);

/// In-place f -= times * Delta^(i).
void topple_in_place(const MultiGraph& g, Configuration& f, int i, Int times = 1);

/// Vertex degrees d_i.
Configuration degrees(const MultiGraph& g);

/// delta_i = d_i - 1, the maximal stable configuration.
Configuration max_stable(const MultiGraph& g);

/// Number of spanning trees (any principal minor of the Laplacian).
Int spanning_tree_count(const MultiGraph& g);

} // namespace sandrank
