#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclas/alphabet.hpp"
#include "cyclas/scalar.hpp"
#include "cyclas/word.hpp"

namespace cyclas {

/// Sparse rational row over degree-slice columns, sorted ascending; the
/// leading (pivot) column is the largest, i.e. back().
using SparseRow = std::vector<std::pair<uint32_t, mpq_class>>;

namespace detail {

// NB: c by value, callers pass references into dst whose storage moves.
inline void row_axpy(SparseRow& dst, mpq_class c, const SparseRow& src) {
    // dst -= c * src, keeping sorted order and dropping zeros
    SparseRow out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -c * src[j].second);
            ++j;
        } else {
            mpq_class v = dst[i].second - c * src[j].second;
            if (v != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second == 0; }),
              out.end());
    dst = std::move(out);
}

} // namespace detail

/// The quadratic presentation of the infinitesimal pure-braid algebra on four
/// strands: generators t_ij (i<j) in the order t12,t13,t14,t23,t24,t34;
/// relations [t_ij + t_ik, t_jk] for each triple and [t_ij, t_kl] for the
/// three disjoint pairs. The redundant third commutator per triple is kept in
/// the generating set; row reduction discards the dependency (rank 11 in
/// degree 2).
class T4Presentation {
  public:
    static constexpr int n_gen = 6;

    static int pair_index(int i, int j) {
        if (i > j) std::swap(i, j);
        static constexpr int tbl[5][5] = {{-1, -1, -1, -1, -1},
                                          {-1, -1, 0, 1, 2},
                                          {-1, -1, -1, 3, 4},
                                          {-1, -1, -1, -1, 5},
                                          {-1, -1, -1, -1, -1}};
        int v = (i >= 1 && j <= 4) ? tbl[i][j] : -1;
        if (v < 0) throw std::invalid_argument("T4Presentation: bad strand pair");
        return v;
    }

    /// Degree-2 relation rows over free-word columns (6x6 slice).
    static std::vector<SparseRow> relations() {
        std::vector<SparseRow> rels;
        auto comm = [](int a, int b) {
            // [t_a, t_b] = ab - ba as free-word indices
            return std::pair<uint32_t, uint32_t>(static_cast<uint32_t>(a * n_gen + b),
                                                 static_cast<uint32_t>(b * n_gen + a));
        };
        auto add_sorted = [&rels](std::vector<std::pair<uint32_t, mpq_class>> entries) {
            std::sort(entries.begin(), entries.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            SparseRow row;
            for (auto& e : entries) {
                if (!row.empty() && row.back().first == e.first)
                    row.back().second += e.second;
                else
                    row.push_back(std::move(e));
            }
            row.erase(std::remove_if(row.begin(), row.end(),
                                     [](const auto& p) { return p.second == 0; }),
                      row.end());
            if (!row.empty()) rels.push_back(std::move(row));
        };
        // disjoint pairs
        for (auto [p, q] : {std::pair{pair_index(1, 2), pair_index(3, 4)},
                            std::pair{pair_index(1, 3), pair_index(2, 4)},
                            std::pair{pair_index(1, 4), pair_index(2, 3)}}) {
            auto [ab, ba] = comm(p, q);
            add_sorted({{ab, mpq_class(1)}, {ba, mpq_class(-1)}});
        }
        // triples: [t_ij + t_ik, t_jk] and the two rotations
        for (int i = 1; i <= 2; ++i)
            for (int j = i + 1; j <= 3; ++j)
                for (int k = j + 1; k <= 4; ++k) {
                    int ij = pair_index(i, j), ik = pair_index(i, k), jk = pair_index(j, k);
                    for (auto [a, b, c] : {std::tuple{ij, ik, jk}, std::tuple{ij, jk, ik},
                                           std::tuple{ik, jk, ij}}) {
                        auto [x1, y1] = comm(a, c);
                        auto [x2, y2] = comm(b, c);
                        add_sorted({{x1, mpq_class(1)},
                                    {y1, mpq_class(-1)},
                                    {x2, mpq_class(1)},
                                    {y2, mpq_class(-1)}});
                    }
                }
        return rels;
    }
};

/// Per-degree normal forms for the truncated enveloping algebra U(t4),
/// computed by exact rational row reduction of the two-sided ideal slice
/// spanned by {u * relation * v}. Pivots are the lexicographically largest
/// monomials; the surviving (non-pivot) monomials form the basis.
class NormalFormTable {
  public:
    static constexpr int n_gen = T4Presentation::n_gen;

    /// Builds normal forms for all degrees 0..degree. degree_guard bounds
    /// the admissible truncation (row reduction cost grows steeply).
    explicit NormalFormTable(int degree, int degree_guard = 5) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("NormalFormTable: negative degree");
        if (degree > degree_guard)
            throw resource_error("NormalFormTable: degree " + std::to_string(degree) +
                                 " exceeds guard " + std::to_string(degree_guard));
        levels_.resize(static_cast<size_t>(degree) + 1);
        init_level_trivial(0);
        if (degree >= 1) init_level_trivial(1);
        auto rels = T4Presentation::relations();
        for (int k = 2; k <= degree; ++k) build_level(k, rels);
    }

    int degree() const { return degree_; }
    size_t dim(int k) const { return level(k).basis.size(); }
    const std::vector<uint32_t>& basis(int k) const { return level(k).basis; }

    Word basis_word(int k, size_t pos) const {
        return Word::from_index(level(k).basis.at(pos), k, n_gen);
    }
    /// Basis position of a free word index, or -1 if it is a pivot.
    int64_t basis_pos(int k, size_t free_idx) const {
        int64_t v = level(k).pos.at(free_idx);
        return v >= 0 ? v : -1;
    }
    /// Reduction of a pivot word over the basis; nullptr for basis words.
    const SparseRow* pivot_row(int k, size_t free_idx) const {
        int64_t v = level(k).pos.at(free_idx);
        return v >= 0 ? nullptr : &level(k).pivots[static_cast<size_t>(~v)];
    }

    /// Normal form of an arbitrary free word as (basis position, coefficient)
    /// pairs in its degree slice.
    SparseRow nf_reduce(const Word& w) const {
        int k = w.degree();
        size_t idx = w.index(n_gen);
        int64_t v = level(k).pos.at(idx);
        if (v >= 0) return {{static_cast<uint32_t>(v), mpq_class(1)}};
        return level(k).pivots[static_cast<size_t>(~v)];
    }

    /// Normal form of a rational combination of same-degree free words.
    SparseRow nf_reduce(int k, const SparseRow& free_vec) const {
        std::map<uint32_t, mpq_class> acc;
        for (const auto& [idx, c] : free_vec) {
            int64_t v = level(k).pos.at(idx);
            if (v >= 0)
                acc[static_cast<uint32_t>(v)] += c;
            else
                for (const auto& [b, r] : level(k).pivots[static_cast<size_t>(~v)])
                    acc[b] += c * r;
        }
        SparseRow out;
        for (auto& [b, c] : acc)
            if (c != 0) out.emplace_back(b, std::move(c));
        return out;
    }

    /// Dimension predicted by the Hilbert series 1/((1-t)(1-2t)(1-3t)) of the
    /// PBW decomposition U(f3) (x) U(f2) (x) U(center).
    static long expected_dim(int k) {
        // denominator (1-t)(1-2t)(1-3t) = 1 - 6t + 11t^2 - 6t^3
        std::vector<long> d{1};
        for (int n = 1; n <= k; ++n) {
            long v = 6 * d[static_cast<size_t>(n - 1)];
            if (n >= 2) v -= 11 * d[static_cast<size_t>(n - 2)];
            if (n >= 3) v += 6 * d[static_cast<size_t>(n - 3)];
            d.push_back(v);
        }
        return d[static_cast<size_t>(k)];
    }

    /// Exact centrality of Z = sum t_ij: nf(Z w - w Z) = 0 for every basis
    /// monomial w of degree < built degree. Returns the offending word name
    /// in detail on failure.
    bool z_central(std::string* detail = nullptr) const {
        for (int k = 0; k < degree_; ++k) {
            for (size_t pos = 0; pos < dim(k); ++pos) {
                Word w = basis_word(k, pos);
                std::map<uint32_t, mpq_class> acc;
                for (int g = 0; g < n_gen; ++g) {
                    Word gw(std::vector<uint8_t>{static_cast<uint8_t>(g)});
                    for (const auto& [b, c] : nf_reduce(gw + w)) acc[b] += c;
                    for (const auto& [b, c] : nf_reduce(w + gw)) acc[b] -= c;
                }
                for (const auto& [b, c] : acc)
                    if (c != 0) {
                        if (detail) *detail = "Z not central past basis word at degree " +
                                              std::to_string(k) + " position " + std::to_string(pos);
                        return false;
                    }
            }
        }
        return true;
    }

    /// Cache identity: generator order and format version. A cached table is
    /// only valid for an identical fingerprint.
    static std::string fingerprint() { return "t4-nf-v1:t12,t13,t14,t23,t24,t34"; }

  private:
    struct Level {
        std::vector<uint32_t> basis;          // free indices, ascending
        std::vector<int64_t> pos;             // free idx -> basis pos or ~pivot slot
        std::vector<SparseRow> pivots;        // pivot slot -> reduction over basis positions
    };

    int degree_;
    std::vector<Level> levels_;

    const Level& level(int k) const {
        if (k < 0 || k > degree_) throw std::invalid_argument("NormalFormTable: degree out of range");
        return levels_[static_cast<size_t>(k)];
    }

    void init_level_trivial(int k) {
        Level& lv = levels_[static_cast<size_t>(k)];
        size_t n = pow_size(n_gen, k);
        lv.basis.resize(n);
        lv.pos.resize(n);
        for (size_t i = 0; i < n; ++i) {
            lv.basis[i] = static_cast<uint32_t>(i);
            lv.pos[i] = static_cast<int64_t>(i);
        }
    }

    void build_level(int k, const std::vector<SparseRow>& rels) {
        size_t ncols = pow_size(n_gen, k);
        // echelon rows keyed by leading column
        std::map<uint32_t, SparseRow> pivots;
        auto insert_row = [&pivots](SparseRow row) {
            while (!row.empty()) {
                uint32_t lead = row.back().first;
                auto it = pivots.find(lead);
                if (it == pivots.end()) {
                    mpq_class c = row.back().second;
                    for (auto& e : row) e.second /= c;
                    pivots.emplace(lead, std::move(row));
                    return;
                }
                mpq_class c = row.back().second; // pivot rows are monic
                detail::row_axpy(row, c, it->second);
            }
        };
        // slice generators: u * r * v over all degree splits
        size_t words_l = 1;
        for (int a = 0; a + 2 <= k; ++a, words_l *= n_gen) {
            size_t words_r = pow_size(n_gen, k - 2 - a);
            size_t shift_r = words_r;
            for (size_t u = 0; u < words_l; ++u) {
                for (size_t v = 0; v < words_r; ++v) {
                    for (const auto& rel : rels) {
                        SparseRow row;
                        row.reserve(rel.size());
                        for (const auto& [w2, c] : rel) {
                            size_t col = (u * 36 + w2) * shift_r + v;
                            row.emplace_back(static_cast<uint32_t>(col), c);
                        }
                        std::sort(row.begin(), row.end(),
                                  [](const auto& x, const auto& y) { return x.first < y.first; });
                        insert_row(std::move(row));
                    }
                }
            }
        }
        // back-substitution in ascending lead order: every pivot column left
        // in a tail has a smaller lead, whose row is already fully reduced,
        // so one substitution per tail entry terminates
        for (auto& [lead, row] : pivots) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& e : row) {
                    if (e.first == lead) continue;
                    auto it = pivots.find(e.first);
                    if (it != pivots.end()) {
                        detail::row_axpy(row, e.second, it->second);
                        changed = true;
                        break;
                    }
                }
            }
        }
        finalize_level(k, ncols, pivots);
    }

    void finalize_level(int k, size_t ncols, std::map<uint32_t, SparseRow>& pivots) {
        Level& lv = levels_[static_cast<size_t>(k)];
        lv.pos.assign(ncols, 0);
        for (size_t i = 0; i < ncols; ++i)
            if (!pivots.count(static_cast<uint32_t>(i)))
                lv.basis.push_back(static_cast<uint32_t>(i));
        std::vector<int64_t> bpos(ncols, -1);
        for (size_t p = 0; p < lv.basis.size(); ++p) bpos[lv.basis[p]] = static_cast<int64_t>(p);
        lv.pivots.reserve(pivots.size());
        for (auto& [lead, row] : pivots) {
            SparseRow red;
            red.reserve(row.size());
            for (const auto& [col, c] : row) {
                if (col == lead) continue;
                int64_t bp = bpos[col];
                if (bp < 0)
                    throw std::logic_error("NormalFormTable: pivot tail not fully reduced");
                red.emplace_back(static_cast<uint32_t>(bp), -c);
            }
            lv.pos[lead] = ~static_cast<int64_t>(lv.pivots.size());
            lv.pivots.push_back(std::move(red));
        }
        for (size_t p = 0; p < lv.basis.size(); ++p)
            lv.pos[lv.basis[p]] = static_cast<int64_t>(p);
    }
};

} // namespace cyclas
