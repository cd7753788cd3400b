#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclas/alphabet.hpp"

namespace cyclas {

/// Monomial in a free algebra: a sequence of generator indices. The empty
/// word is the unit.
struct Word {
    std::vector<uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<uint8_t> ls) : letters(std::move(ls)) {}
    static Word empty() { return Word(); }

    int degree() const { return static_cast<int>(letters.size()); }

    /// Dense index within the degree slice: base-n digits, leftmost letter
    /// most significant, so index order is lexicographic order.
    size_t index(int n_letters) const {
        size_t v = 0;
        for (uint8_t l : letters) {
            if (l >= n_letters) throw std::invalid_argument("Word: letter out of range");
            v = v * static_cast<size_t>(n_letters) + l;
        }
        return v;
    }
    static Word from_index(size_t idx, int degree, int n_letters) {
        std::vector<uint8_t> ls(static_cast<size_t>(degree));
        for (int i = degree - 1; i >= 0; --i) {
            ls[static_cast<size_t>(i)] = static_cast<uint8_t>(idx % static_cast<size_t>(n_letters));
            idx /= static_cast<size_t>(n_letters);
        }
        return Word(std::move(ls));
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word w = a;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }

    /// Space-separated generator names; "" for the unit word.
    std::string to_string(const Alphabet& alpha) const {
        std::string s;
        for (size_t i = 0; i < letters.size(); ++i) {
            if (i) s += ' ';
            s += alpha.name(letters[i]);
        }
        return s;
    }
    static Word parse(const std::string& s, const Alphabet& alpha) {
        Word w;
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            int i = alpha.index_of(tok);
            if (i < 0) throw std::invalid_argument("Word: unknown generator '" + tok + "'");
            w.letters.push_back(static_cast<uint8_t>(i));
        }
        return w;
    }
};

/// All riffle interleavings of u and v with multiplicities.
inline std::map<Word, long> shuffle(const Word& u, const Word& v) {
    std::map<Word, long> out;
    if (u.degree() == 0) {
        out[v] = 1;
        return out;
    }
    if (v.degree() == 0) {
        out[u] = 1;
        return out;
    }
    Word u_tail(std::vector<uint8_t>(u.letters.begin() + 1, u.letters.end()));
    Word v_tail(std::vector<uint8_t>(v.letters.begin() + 1, v.letters.end()));
    for (const auto& [w, m] : shuffle(u_tail, v)) {
        Word h(std::vector<uint8_t>{u.letters[0]});
        out[h + w] += m;
    }
    for (const auto& [w, m] : shuffle(u, v_tail)) {
        Word h(std::vector<uint8_t>{v.letters[0]});
        out[h + w] += m;
    }
    return out;
}

/// n^k with overflow guard; word-slice sizes.
inline size_t pow_size(int n, int k) {
    size_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > (static_cast<size_t>(1) << 40) / static_cast<size_t>(n))
            throw resource_error("degree slice too large: " + std::to_string(n) + "^" +
                                 std::to_string(k));
        v *= static_cast<size_t>(n);
    }
    return v;
}

} // namespace cyclas
