#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sandrank/graph.hpp"

namespace sandrank {

/// Word over {a, b}, stored bit-packed (a = 1, b = 0) together with the prefix
/// sums of delta = |.|_a - |.|_b so that every prefix height is O(1).
class BinaryWord {
public:
    BinaryWord() : prefix_{0} {}
    explicit BinaryWord(std::vector<bool> letters);

    /// Throws std::invalid_argument on letters other than 'a' and 'b'.
    static BinaryWord parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    bool is_a(std::size_t i) const { return letters_.at(i); }
    const std::vector<bool>& letters() const noexcept { return letters_; }

    Int count_a() const noexcept { return count_a_; }
    Int count_b() const noexcept { return static_cast<Int>(size()) - count_a_; }
    /// delta of the whole word.
    Int delta() const noexcept { return prefix_.back(); }
    /// delta of the prefix of length k.
    Int delta_prefix(std::size_t k) const { return prefix_.at(k); }
    /// Position of the i-th a (0-based i).
    std::size_t position_of_a(std::size_t i) const { return a_positions_.at(i); }

    BinaryWord substr(std::size_t pos, std::size_t len) const;
    /// w[k..] w[..k]
    BinaryWord rotated(std::size_t k) const;
    /// Mirror image (the paper's w-tilde).
    BinaryWord reversed() const;
    BinaryWord operator+(const BinaryWord& other) const;
    BinaryWord with_letter(bool a) const;

    std::string str() const;

    friend bool operator==(const BinaryWord& x, const BinaryWord& y) { return x.letters_ == y.letters_; }
    friend bool operator<(const BinaryWord& x, const BinaryWord& y) { return x.letters_ < y.letters_; }

private:
    std::vector<bool> letters_;
    std::vector<Int> prefix_;
    std::vector<std::size_t> a_positions_;
    Int count_a_ = 0;
};

/// (ab)^p
BinaryWord alternating_word(std::size_t p);
/// a^p b^q
BinaryWord block_word(std::size_t p, std::size_t q);

/// |w|_b == |w|_a + 1
bool is_An(const BinaryWord& w);
/// In A_n and every strict prefix has delta >= 0.
bool is_Dn(const BinaryWord& w);
/// Balanced with every prefix delta >= 0.
bool is_dyck(const BinaryWord& w);

void require_Dn(const BinaryWord& w);
void require_dyck(const BinaryWord& w);

/// Dyck word -> D_n word (append b) and back (strip the final b).
BinaryWord dyck_to_Dn(const BinaryWord& w);
BinaryWord Dn_to_dyck(const BinaryWord& w);

/// Every Dyck word of semilength p, in lexicographic order with a < b.
std::vector<BinaryWord> all_dyck_words(std::size_t p);
/// Every word of D_n (n >= 1).
std::vector<BinaryWord> all_Dn_words(std::size_t n);
/// Every word of A_n (n >= 1).
std::vector<BinaryWord> all_An_words(std::size_t n);

} // namespace sandrank
