#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclas/series.hpp"

namespace cyclas {

/// Substitution homomorphism between truncated free algebras (or into a
/// quotient backend), given by the image of each domain generator. Images
/// must have zero constant term, so the extension to truncated series is the
/// unique algebra homomorphism.
///
/// Sign/permutation maps and alias expansions have exact small-integer
/// images; applying them introduces no rounding.
class GeneratorMap {
  public:
    GeneratorMap(Alphabet::Ptr domain, std::vector<Series> images)
        : domain_(std::move(domain)), images_(std::move(images)) {
        if (!domain_) throw std::invalid_argument("GeneratorMap: null domain");
        if (static_cast<int>(images_.size()) != domain_->size())
            throw std::invalid_argument("GeneratorMap: one image per domain generator required");
        for (size_t i = 1; i < images_.size(); ++i)
            images_[0].require_compatible(images_[i], "GeneratorMap images");
        for (const auto& im : images_)
            if (!im.constant_term().is_zero())
                throw std::invalid_argument("GeneratorMap: image has a nonzero constant term");
    }

    const Alphabet& domain() const { return *domain_; }
    Alphabet::Ptr domain_ptr() const { return domain_; }
    const Series& image(int i) const { return images_.at(static_cast<size_t>(i)); }
    const Alphabet& codomain() const { return images_[0].alphabet(); }
    Alphabet::Ptr codomain_ptr() const { return images_[0].alphabet_ptr(); }
    int degree() const { return images_[0].degree(); }
    mpfr_prec_t prec() const { return images_[0].prec(); }
    const std::shared_ptr<const QuotientBackend>& backend() const { return images_[0].backend(); }

    static GeneratorMap identity(Alphabet::Ptr alpha, int degree, mpfr_prec_t prec) {
        std::vector<Series> images;
        for (int i = 0; i < alpha->size(); ++i)
            images.push_back(Series::generator(alpha, degree, prec, i));
        return GeneratorMap(std::move(alpha), std::move(images));
    }

    /// Map from exact linear combinations: one combo (possibly empty, meaning
    /// the generator is sent to 0) per domain generator.
    static GeneratorMap from_combos(Alphabet::Ptr domain, Alphabet::Ptr codomain, int degree,
                                    mpfr_prec_t prec, const std::vector<LieCombo>& combos,
                                    std::shared_ptr<const QuotientBackend> backend = nullptr) {
        if (static_cast<int>(combos.size()) != domain->size())
            throw std::invalid_argument("GeneratorMap: one combo per domain generator required");
        std::vector<Series> images;
        images.reserve(combos.size());
        for (const auto& cb : combos)
            images.push_back(Series::lie_element(codomain, degree, prec, cb, backend));
        return GeneratorMap(std::move(domain), std::move(images));
    }

    /// Homomorphic extension applied to a series over the domain alphabet.
    Series apply(const Series& x) const {
        if (!(x.alphabet() == *domain_))
            throw std::invalid_argument("GeneratorMap: series alphabet does not match domain");
        if (!x.is_free_backend())
            throw std::invalid_argument("GeneratorMap: domain series must use the free backend");
        if (x.degree() != degree())
            throw std::invalid_argument("GeneratorMap: degree mismatch between series and map");
        if (x.prec() != prec())
            throw std::invalid_argument("GeneratorMap: precision mismatch between series and map");
        if (!backend() && all_images_linear()) return apply_linear(x);
        return apply_general(x);
    }

    bool exact_equals(const GeneratorMap& o) const {
        if (!(*domain_ == *o.domain_) || images_.size() != o.images_.size()) return false;
        for (size_t i = 0; i < images_.size(); ++i)
            if (!images_[i].exact_equals(o.images_[i])) return false;
        return true;
    }
    bool is_identity() const {
        if (!(*domain_ == codomain())) return false;
        for (int i = 0; i < domain_->size(); ++i)
            if (!images_[static_cast<size_t>(i)].exact_equals(
                    Series::generator(codomain_ptr(), degree(), prec(), i)))
                return false;
        return true;
    }

  private:
    bool all_images_linear() const {
        for (const auto& im : images_) {
            for (int k = 2; k <= im.degree(); ++k)
                for (size_t i = 0; i < im.dim(k); ++i)
                    if (!im.coeff(k, i).is_zero()) return false;
        }
        return true;
    }

    /// Degree-1-homogeneous images into a free codomain: apply the linear map
    /// to one tensor factor at a time within each degree slice.
    Series apply_linear(const Series& x) const {
        int n = domain_->size();
        int m = codomain().size();
        // sparse matrix rows: for domain letter l, the (target letter, coeff) pairs
        std::vector<std::vector<std::pair<int, Complex>>> L(static_cast<size_t>(n));
        for (int l = 0; l < n; ++l)
            for (int t = 0; t < m; ++t) {
                const Complex& c = images_[static_cast<size_t>(l)].degree() >= 1
                                       ? images_[static_cast<size_t>(l)].coeff(1, static_cast<size_t>(t))
                                       : Complex(prec());
                if (!c.is_zero()) L[static_cast<size_t>(l)].emplace_back(t, c);
            }
        Series out(codomain_ptr(), x.degree(), prec());
        out.set_coeff(0, 0, x.coeff(0, 0));
        for (int k = 1; k <= x.degree(); ++k) {
            // cur holds the slice with the first p axes already transformed
            std::vector<Complex> cur;
            cur.reserve(pow_size(n, k));
            for (size_t i = 0; i < pow_size(n, k); ++i) cur.push_back(x.coeff(k, i));
            for (int p = 0; p < k; ++p) {
                size_t lead = pow_size(m, p);
                size_t tail = pow_size(n, k - p - 1);
                std::vector<Complex> next;
                size_t next_size = lead * static_cast<size_t>(m) * tail;
                next.reserve(next_size);
                for (size_t i = 0; i < next_size; ++i) next.emplace_back(prec());
                for (size_t q = 0; q < lead; ++q)
                    for (int l = 0; l < n; ++l) {
                        if (L[static_cast<size_t>(l)].empty()) continue;
                        size_t src_base = (q * static_cast<size_t>(n) + static_cast<size_t>(l)) * tail;
                        for (const auto& [t, c] : L[static_cast<size_t>(l)]) {
                            size_t dst_base =
                                (q * static_cast<size_t>(m) + static_cast<size_t>(t)) * tail;
                            for (size_t r = 0; r < tail; ++r)
                                if (!cur[src_base + r].is_zero())
                                    Complex::addmul(next[dst_base + r], cur[src_base + r], c);
                        }
                    }
                cur = std::move(next);
            }
            for (size_t i = 0; i < cur.size(); ++i)
                if (!cur[i].is_zero()) out.set_coeff(k, i, std::move(cur[i]));
        }
        return out;
    }

    /// General path: walk the domain word tree, sharing partial image
    /// products along prefixes.
    Series apply_general(const Series& x) const {
        Series out(codomain_ptr(), degree(), prec(), backend());
        Series unit = Series::one(codomain_ptr(), degree(), prec(), backend());
        walk(x, 0, 0, unit, out);
        return out;
    }
    void walk(const Series& x, int depth, size_t idx, const Series& partial, Series& out) const {
        const Complex& c = x.coeff(depth, idx);
        if (!c.is_zero()) out.add_scaled(partial, c);
        if (depth == x.degree()) return;
        int n = domain_->size();
        for (int l = 0; l < n; ++l)
            walk(x, depth + 1, idx * static_cast<size_t>(n) + static_cast<size_t>(l),
                 partial * images_[static_cast<size_t>(l)], out);
    }

    Alphabet::Ptr domain_;
    std::vector<Series> images_;
};

/// outer after inner: x -> outer(inner(x)).
inline GeneratorMap compose(const GeneratorMap& outer, const GeneratorMap& inner) {
    std::vector<Series> images;
    images.reserve(static_cast<size_t>(inner.domain().size()));
    for (int i = 0; i < inner.domain().size(); ++i) images.push_back(outer.apply(inner.image(i)));
    return GeneratorMap(inner.domain_ptr(), std::move(images));
}

} // namespace cyclas
