#include "sandrank/word.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sandrank {

BinaryWord::BinaryWord(std::vector<bool> letters) : letters_(std::move(letters)) {
    prefix_.resize(letters_.size() + 1);
    prefix_[0] = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i]) {
            a_positions_.push_back(i);
            ++count_a_;
        }
        prefix_[i + 1] = prefix_[i] + (letters_[i] ? 1 : -1);
    }
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<bool> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == 'a') letters.push_back(true);
        else if (c == 'b') letters.push_back(false);
        else throw std::invalid_argument(std::string("word letter '") + c + "' is not a or b");
    }
    return BinaryWord(std::move(letters));
}

BinaryWord BinaryWord::substr(std::size_t pos, std::size_t len) const {
    if (pos > size()) throw std::out_of_range("substr position past end of word");
    len = std::min(len, size() - pos);
    return BinaryWord(std::vector<bool>(letters_.begin() + pos, letters_.begin() + pos + len));
}

BinaryWord BinaryWord::rotated(std::size_t k) const {
    if (k > size()) throw std::out_of_range("rotation past end of word");
    std::vector<bool> out(letters_.begin() + k, letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + k);
    return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::reversed() const { return BinaryWord(std::vector<bool>(letters_.rbegin(), letters_.rend())); }

BinaryWord BinaryWord::operator+(const BinaryWord& other) const {
    std::vector<bool> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return BinaryWord(std::move(out));
}

BinaryWord BinaryWord::with_letter(bool a) const {
    std::vector<bool> out = letters_;
    out.push_back(a);
    return BinaryWord(std::move(out));
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(size());
    for (bool l : letters_) s.push_back(l ? 'a' : 'b');
    return s;
}

BinaryWord alternating_word(std::size_t p) {
    std::vector<bool> l;
    for (std::size_t i = 0; i < p; ++i) {
        l.push_back(true);
        l.push_back(false);
    }
    return BinaryWord(std::move(l));
}

BinaryWord block_word(std::size_t p, std::size_t q) {
    std::vector<bool> l(p, true);
    l.insert(l.end(), q, false);
    return BinaryWord(std::move(l));
}

bool is_An(const BinaryWord& w) { return w.count_b() == w.count_a() + 1; }

bool is_Dn(const BinaryWord& w) {
    if (!is_An(w)) return false;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w.delta_prefix(k) < 0) return false;
    return true;
}

bool is_dyck(const BinaryWord& w) {
    if (w.delta() != 0) return false;
    for (std::size_t k = 0; k <= w.size(); ++k)
        if (w.delta_prefix(k) < 0) return false;
    return true;
}

void require_Dn(const BinaryWord& w) {
    if (!is_Dn(w)) throw std::invalid_argument("word " + w.str() + " is not in D_n");
}

void require_dyck(const BinaryWord& w) {
    if (!is_dyck(w)) throw std::invalid_argument("word " + w.str() + " is not a Dyck word");
}

BinaryWord dyck_to_Dn(const BinaryWord& w) {
    require_dyck(w);
    return w.with_letter(false);
}

BinaryWord Dn_to_dyck(const BinaryWord& w) {
    require_Dn(w);
    return w.substr(0, w.size() - 1);
}

std::vector<BinaryWord> all_dyck_words(std::size_t p) {
    std::vector<BinaryWord> out;
    std::vector<bool> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a, std::size_t b) {
        if (a == p && b == p) {
            out.emplace_back(cur);
            return;
        }
        if (a < p) {
            cur.push_back(true);
            rec(a + 1, b);
            cur.pop_back();
        }
        if (b < a) {
            cur.push_back(false);
            rec(a, b + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::vector<BinaryWord> all_Dn_words(std::size_t n) {
    if (n < 1) throw std::invalid_argument("D_n needs n >= 1");
    std::vector<BinaryWord> out;
    for (const auto& w : all_dyck_words(n - 1)) out.push_back(w.with_letter(false));
    return out;
}

std::vector<BinaryWord> all_An_words(std::size_t n) {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    std::vector<BinaryWord> out;
    std::vector<bool> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a, std::size_t b) {
        if (a == n - 1 && b == n) {
            out.emplace_back(cur);
            return;
        }
        if (a < n - 1) {
            cur.push_back(true);
            rec(a + 1, b);
            cur.pop_back();
        }
        if (b < n) {
            cur.push_back(false);
            rec(a, b + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

} // namespace sandrank
