#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclas/alphabet.hpp"
#include "cyclas/rational.hpp"
#include "cyclas/scalar.hpp"
#include "cyclas/t4algebra.hpp"
#include "cyclas/word.hpp"

namespace cyclas {

/// Complex-valued reduction cache over a rational NormalFormTable, fixed at a
/// working precision. Immutable once built; shared by all series using the
/// quotient multiplication.
class QuotientBackend {
  public:
    using CxRow = std::vector<std::pair<uint32_t, Complex>>;

    QuotientBackend(std::shared_ptr<const NormalFormTable> table, mpfr_prec_t prec)
        : table_(std::move(table)), prec_(prec) {
        int d = table_->degree();
        red_.resize(static_cast<size_t>(d) + 1);
        basis_free_.resize(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            size_t ncols = pow_size(NormalFormTable::n_gen, k);
            auto& rows = red_[static_cast<size_t>(k)];
            rows.resize(ncols);
            for (size_t i = 0; i < ncols; ++i) {
                int64_t bp = table_->basis_pos(k, i);
                if (bp >= 0) {
                    rows[i].emplace_back(static_cast<uint32_t>(bp), Complex::one(prec));
                } else {
                    for (const auto& [pos, q] : *table_->pivot_row(k, i))
                        rows[i].emplace_back(pos, Complex::of(q, mpq_class(0), prec));
                }
            }
            basis_free_[static_cast<size_t>(k)] = table_->basis(k);
        }
    }

    int degree() const { return table_->degree(); }
    mpfr_prec_t prec() const { return prec_; }
    size_t dim(int k) const { return table_->dim(k); }
    const NormalFormTable& table() const { return *table_; }
    std::shared_ptr<const NormalFormTable> table_ptr() const { return table_; }

    /// Reduction of a free word (by slice index) over the basis of its degree.
    const CxRow& reduce(int k, size_t free_idx) const {
        return red_[static_cast<size_t>(k)][free_idx];
    }
    /// Free-word index of a basis monomial.
    size_t basis_free_index(int k, size_t pos) const {
        return basis_free_[static_cast<size_t>(k)][pos];
    }

  private:
    std::shared_ptr<const NormalFormTable> table_;
    mpfr_prec_t prec_;
    std::vector<std::vector<CxRow>> red_;
    std::vector<std::vector<uint32_t>> basis_free_;
};

/// Degree-truncated non-commutative power series with Complex coefficients,
/// stored densely per degree. Multiplication is word concatenation under the
/// free backend, or normal-form reduction when a QuotientBackend is attached.
/// Values are immutable in spirit: all operations produce new series, and the
/// mutating helpers exist for the construction kernels.
class Series {
  public:
    Series(Alphabet::Ptr alpha, int degree, mpfr_prec_t prec,
           std::shared_ptr<const QuotientBackend> backend = nullptr)
        : alpha_(std::move(alpha)), degree_(degree), prec_(prec), backend_(std::move(backend)) {
        if (!alpha_) throw std::invalid_argument("Series: null alphabet");
        if (degree_ < 0) throw std::invalid_argument("Series: negative degree");
        if (backend_) {
            if (backend_->degree() < degree_)
                throw std::invalid_argument("Series: backend table not built to series degree");
            if (backend_->prec() != prec_)
                throw std::invalid_argument("Series: backend precision mismatch");
            if (alpha_->size() != NormalFormTable::n_gen)
                throw std::invalid_argument("Series: quotient backend expects the t4 alphabet");
        }
        c_.resize(static_cast<size_t>(degree_) + 1);
        for (int k = 0; k <= degree_; ++k) {
            size_t n = dim(k);
            c_[static_cast<size_t>(k)].reserve(n);
            for (size_t i = 0; i < n; ++i) c_[static_cast<size_t>(k)].emplace_back(prec_);
        }
    }

    static Series one(Alphabet::Ptr alpha, int degree, mpfr_prec_t prec,
                      std::shared_ptr<const QuotientBackend> backend = nullptr) {
        Series s(std::move(alpha), degree, prec, std::move(backend));
        s.c_[0][0] = Complex::one(prec);
        return s;
    }
    /// The generator as a series; at degree 0 it truncates to zero.
    static Series generator(Alphabet::Ptr alpha, int degree, mpfr_prec_t prec, int letter,
                            std::shared_ptr<const QuotientBackend> backend = nullptr) {
        Series s(std::move(alpha), degree, prec, std::move(backend));
        if (letter < 0 || letter >= s.alpha_->size())
            throw std::invalid_argument("Series: generator index out of range");
        if (degree >= 1) s.c_[1][static_cast<size_t>(letter)] = Complex::one(prec);
        return s;
    }
    /// Exact homogeneous degree-1 element from a rational combination.
    static Series lie_element(Alphabet::Ptr alpha, int degree, mpfr_prec_t prec,
                              const LieCombo& combo,
                              std::shared_ptr<const QuotientBackend> backend = nullptr) {
        Series s(std::move(alpha), degree, prec, std::move(backend));
        if (degree >= 1)
            for (const auto& [g, q] : combo) {
                if (g < 0 || g >= s.alpha_->size())
                    throw std::invalid_argument("Series: combo generator out of range");
                Complex v = Complex::of(q, mpq_class(0), prec);
                s.c_[1][static_cast<size_t>(g)] += v;
            }
        return s;
    }

    const Alphabet& alphabet() const { return *alpha_; }
    Alphabet::Ptr alphabet_ptr() const { return alpha_; }
    int degree() const { return degree_; }
    mpfr_prec_t prec() const { return prec_; }
    const std::shared_ptr<const QuotientBackend>& backend() const { return backend_; }
    bool is_free_backend() const { return backend_ == nullptr; }

    size_t dim(int k) const {
        return backend_ ? backend_->dim(k) : pow_size(alpha_->size(), k);
    }
    const Complex& coeff(int k, size_t idx) const { return c_.at(static_cast<size_t>(k)).at(idx); }
    void set_coeff(int k, size_t idx, Complex v) {
        c_.at(static_cast<size_t>(k)).at(idx) = std::move(v);
    }
    const Complex& constant_term() const { return c_[0][0]; }

    /// Coefficient of a free word (free backend only).
    const Complex& coeff(const Word& w) const {
        require_free("word coefficient access");
        return coeff(w.degree(), w.index(alpha_->size()));
    }

    Series truncated(int new_degree) const {
        if (new_degree > degree_)
            throw std::invalid_argument("Series: cannot truncate upward");
        Series s(alpha_, new_degree, prec_, backend_);
        for (int k = 0; k <= new_degree; ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return s;
    }

    // ---- in-place linear structure ----

    Series& operator+=(const Series& o) {
        require_compatible(o, "add");
        for (int k = 0; k <= degree_; ++k)
            for (size_t i = 0; i < c_[static_cast<size_t>(k)].size(); ++i)
                c_[static_cast<size_t>(k)][i] += o.c_[static_cast<size_t>(k)][i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        require_compatible(o, "subtract");
        for (int k = 0; k <= degree_; ++k)
            for (size_t i = 0; i < c_[static_cast<size_t>(k)].size(); ++i)
                c_[static_cast<size_t>(k)][i] -= o.c_[static_cast<size_t>(k)][i];
        return *this;
    }
    void scale(const Complex& s) {
        for (auto& slice : c_)
            for (auto& v : slice) {
                Complex t(prec_);
                Complex::addmul(t, v, s);
                v = std::move(t);
            }
    }
    void scale(const Real& s) {
        for (auto& slice : c_)
            for (auto& v : slice) v *= s;
    }
    void scale(long n) {
        for (auto& slice : c_)
            for (auto& v : slice) v *= n;
    }
    void divide(long n) {
        for (auto& slice : c_)
            for (auto& v : slice) v /= n;
    }
    void add_scaled(const Series& o, const Complex& s) {
        require_compatible(o, "add_scaled");
        for (int k = 0; k <= degree_; ++k)
            for (size_t i = 0; i < c_[static_cast<size_t>(k)].size(); ++i) {
                const Complex& src = o.c_[static_cast<size_t>(k)][i];
                if (!src.is_zero()) Complex::addmul(c_[static_cast<size_t>(k)][i], src, s);
            }
    }
    void add_scaled(const Series& o, const Real& s) {
        require_compatible(o, "add_scaled");
        for (int k = 0; k <= degree_; ++k)
            for (size_t i = 0; i < c_[static_cast<size_t>(k)].size(); ++i) {
                const Complex& src = o.c_[static_cast<size_t>(k)][i];
                if (!src.is_zero()) Complex::addmul(c_[static_cast<size_t>(k)][i], s, src);
            }
    }

    /// this += factor * (letter . src), degree-shifting left concatenation.
    /// Free backend only.
    void add_left_letter_mul(int letter, const Series& src, const Complex& factor) {
        require_free("left letter multiplication");
        int n = alpha_->size();
        for (int k = 0; k + 1 <= degree_ && k <= src.degree_; ++k) {
            size_t stride = pow_size(n, k);
            size_t base = static_cast<size_t>(letter) * stride;
            const auto& in = src.c_[static_cast<size_t>(k)];
            auto& out = c_[static_cast<size_t>(k) + 1];
            for (size_t i = 0; i < in.size(); ++i)
                if (!in[i].is_zero()) Complex::addmul(out[base + i], in[i], factor);
        }
    }
    /// this += factor * (src . letter).
    void add_right_letter_mul(int letter, const Series& src, const Complex& factor) {
        require_free("right letter multiplication");
        int n = alpha_->size();
        for (int k = 0; k + 1 <= degree_ && k <= src.degree_; ++k) {
            const auto& in = src.c_[static_cast<size_t>(k)];
            auto& out = c_[static_cast<size_t>(k) + 1];
            for (size_t i = 0; i < in.size(); ++i)
                if (!in[i].is_zero())
                    Complex::addmul(out[i * static_cast<size_t>(n) + static_cast<size_t>(letter)],
                                    in[i], factor);
        }
    }

    // ---- ring structure ----

    friend Series operator*(const Series& x, const Series& y) {
        x.require_compatible(y, "multiply");
        Series out(x.alpha_, x.degree_, x.prec_, x.backend_);
        if (!x.backend_) {
            int n = x.alpha_->size();
            for (int j = 0; j <= x.degree_; ++j) {
                const auto& X = x.c_[static_cast<size_t>(j)];
                for (int k = 0; j + k <= x.degree_; ++k) {
                    const auto& Y = y.c_[static_cast<size_t>(k)];
                    auto& O = out.c_[static_cast<size_t>(j + k)];
                    size_t stride = pow_size(n, k);
                    for (size_t a = 0; a < X.size(); ++a) {
                        if (X[a].is_zero()) continue;
                        size_t base = a * stride;
                        for (size_t b = 0; b < Y.size(); ++b)
                            if (!Y[b].is_zero()) Complex::addmul(O[base + b], X[a], Y[b]);
                    }
                }
            }
        } else {
            const QuotientBackend& qb = *x.backend_;
            for (int j = 0; j <= x.degree_; ++j) {
                const auto& X = x.c_[static_cast<size_t>(j)];
                for (int k = 0; j + k <= x.degree_; ++k) {
                    const auto& Y = y.c_[static_cast<size_t>(k)];
                    auto& O = out.c_[static_cast<size_t>(j + k)];
                    size_t rstride = pow_size(NormalFormTable::n_gen, k);
                    for (size_t a = 0; a < X.size(); ++a) {
                        if (X[a].is_zero()) continue;
                        size_t fa = qb.basis_free_index(j, a) * rstride;
                        for (size_t b = 0; b < Y.size(); ++b) {
                            if (Y[b].is_zero()) continue;
                            Complex t(x.prec_);
                            Complex::addmul(t, X[a], Y[b]);
                            for (const auto& [pos, c] : qb.reduce(j + k, fa + qb.basis_free_index(k, b)))
                                Complex::addmul(O[pos], t, c);
                        }
                    }
                }
            }
        }
        return out;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    /// exp(x) = sum x^k / k!, finite because x has no constant term.
    friend Series exp(const Series& x) {
        if (!x.constant_term().is_zero())
            throw std::domain_error("exp: series has a nonzero constant term");
        Series acc = one(x.alpha_, x.degree_, x.prec_, x.backend_);
        Series term = acc;
        for (int k = 1; k <= x.degree_; ++k) {
            term = term * x;
            term.divide(k);
            acc += term;
        }
        return acc;
    }
    /// log(g) for g = 1 + higher; inverse of exp up to the truncation degree.
    friend Series log(const Series& g) {
        g.require_unit_constant("log");
        Series y = g;
        y.c_[0][0] -= Complex::one(g.prec_);
        Series acc(g.alpha_, g.degree_, g.prec_, g.backend_);
        Series term = one(g.alpha_, g.degree_, g.prec_, g.backend_);
        for (int k = 1; k <= g.degree_; ++k) {
            term = term * y;
            Real c = Real::of(mpq_class(k % 2 ? 1 : -1, k), g.prec_);
            acc.add_scaled(term, c);
        }
        return acc;
    }
    /// Group inverse of g = 1 + higher: sum (1-g)^k.
    friend Series inverse(const Series& g) {
        g.require_unit_constant("inverse");
        Series y = one(g.alpha_, g.degree_, g.prec_, g.backend_);
        y -= g;
        Series acc = one(g.alpha_, g.degree_, g.prec_, g.backend_);
        Series term = acc;
        for (int k = 1; k <= g.degree_; ++k) {
            term = term * y;
            acc += term;
        }
        return acc;
    }

    // ---- norms ----

    /// max |coefficient| over all words, constant term included.
    Real sup_norm() const {
        Real m(prec_);
        for (const auto& slice : c_)
            for (const auto& v : slice)
                if (!v.is_zero()) m = max(m, abs(v));
        return m;
    }
    /// Distance to the unit series: max over words of |coeff(g - 1)|.
    Real residual_norm() const {
        Real m(prec_);
        for (int k = 0; k <= degree_; ++k) m = max(m, residual_norm_degree(k));
        return m;
    }
    Real residual_norm_degree(int k) const {
        Real m(prec_);
        const auto& slice = c_[static_cast<size_t>(k)];
        for (size_t i = 0; i < slice.size(); ++i) {
            if (k == 0 && i == 0) {
                Complex d = slice[i] - Complex::one(prec_);
                if (!d.is_zero()) m = max(m, abs(d));
            } else if (!slice[i].is_zero()) {
                m = max(m, abs(slice[i]));
            }
        }
        return m;
    }
    std::vector<Real> residual_per_degree() const {
        std::vector<Real> out;
        out.reserve(static_cast<size_t>(degree_) + 1);
        for (int k = 0; k <= degree_; ++k) out.push_back(residual_norm_degree(k));
        return out;
    }

    /// Shuffle-character residual: max over word pairs (u,v), deg u + deg v
    /// <= degree, of |c(u)c(v) - sum over shuffles of c(w)|. Zero exactly for
    /// group-like series. Free backend only.
    Real grouplike_residual() const {
        require_free("grouplike residual");
        require_unit_constant("grouplike residual");
        int n = alpha_->size();
        Real m(prec_);
        for (int j = 1; j <= degree_; ++j)
            for (int k = 1; j + k <= degree_; ++k)
                for (size_t a = 0; a < dim(j); ++a) {
                    Word u = Word::from_index(a, j, n);
                    for (size_t b = 0; b < dim(k); ++b) {
                        Word v = Word::from_index(b, k, n);
                        Complex lhs(prec_);
                        Complex::addmul(lhs, coeff(j, a), coeff(k, b));
                        for (const auto& [w, mult] : shuffle(u, v)) {
                            Complex t = coeff(j + k, w.index(n));
                            t *= mult;
                            lhs -= t;
                        }
                        if (!lhs.is_zero()) m = max(m, abs(lhs));
                    }
                }
        return m;
    }

    bool exact_equals(const Series& o) const {
        if (!(*alpha_ == *o.alpha_) || degree_ != o.degree_ || prec_ != o.prec_ ||
            backend_ != o.backend_)
            return false;
        for (int k = 0; k <= degree_; ++k)
            for (size_t i = 0; i < c_[static_cast<size_t>(k)].size(); ++i)
                if (!(c_[static_cast<size_t>(k)][i] == o.c_[static_cast<size_t>(k)][i]))
                    return false;
        return true;
    }

    void require_compatible(const Series& o, const char* op) const {
        if (!(*alpha_ == *o.alpha_))
            throw std::invalid_argument(std::string("Series: alphabet mismatch in ") + op);
        if (degree_ != o.degree_)
            throw std::invalid_argument(std::string("Series: degree mismatch in ") + op);
        if (prec_ != o.prec_)
            throw std::invalid_argument(std::string("Series: precision mismatch in ") + op);
        if (backend_ != o.backend_)
            throw std::invalid_argument(std::string("Series: backend mismatch in ") + op);
    }

  private:
    void require_free(const char* op) const {
        if (backend_)
            throw std::invalid_argument(std::string("Series: ") + op +
                                        " requires the free backend");
    }
    void require_unit_constant(const char* op) const {
        if (!(constant_term() == Complex::one(prec_)))
            throw std::domain_error(std::string(op) + ": constant term is not 1");
    }

    Alphabet::Ptr alpha_;
    int degree_;
    mpfr_prec_t prec_;
    std::shared_ptr<const QuotientBackend> backend_;
    std::vector<std::vector<Complex>> c_;
};

/// a^x = exp(x ln a) with the principal logarithm. a must avoid the closed
/// negative real axis; x must have no constant term.
inline Series scalar_power(const Complex& base, const Series& x) {
    Complex ln = log_principal(base);
    Series y = x;
    y.scale(ln);
    return exp(y);
}
inline Series scalar_power(const GaussRat& base, const Series& x) {
    if (base.on_closed_negative_real_axis())
        throw std::domain_error("scalar_power: base on the closed negative real axis");
    return scalar_power(base.to_complex(x.prec()), x);
}

} // namespace cyclas
