#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclas {

/// Linear combination of generators with exact rational coefficients,
/// keyed by generator index. Alias expansions and substitution images in
/// their exact form.
using LieCombo = std::vector<std::pair<int, mpq_class>>;

/// Ordered generator names of a free algebra, plus named aliases that expand
/// to exact linear combinations of generators (C = -A - sum b[zeta] for the
/// cyclotomic algebras, Z = sum t_ij for the braid algebra).
class Alphabet {
  public:
    Alphabet(std::vector<std::string> names, std::map<std::string, LieCombo> aliases = {})
        : names_(std::move(names)), aliases_(std::move(aliases)) {
        for (const auto& n : names_)
            if (n.empty()) throw std::invalid_argument("Alphabet: empty generator name");
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("Alphabet: duplicate generator " + names_[i]);
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    const std::map<std::string, LieCombo>& aliases() const { return aliases_; }

    /// Generator index by name, -1 if unknown.
    int index_of(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }
    bool has_symbol(const std::string& n) const {
        return index_of(n) >= 0 || aliases_.count(n) > 0;
    }
    /// Resolves a generator or alias name to its exact expansion.
    LieCombo expand(const std::string& n) const {
        int i = index_of(n);
        if (i >= 0) return {{i, mpq_class(1)}};
        auto it = aliases_.find(n);
        if (it == aliases_.end())
            throw std::invalid_argument("Alphabet: unknown symbol " + n);
        return it->second;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ && a.aliases_ == b.aliases_;
    }

    using Ptr = std::shared_ptr<const Alphabet>;

    /// Cyclotomic alphabet of level N: generator A plus one generator per Nth
    /// root of unity, in root order zeta_k = exp(2 pi i k / N). Catalogue
    /// levels use the canonical ASCII names (B; b1,bm1; b1,bi,bm1,bmi); other
    /// levels fall back to br0..br{N-1}. Alias C = -A - sum of roots.
    static Ptr cyclotomic(int N) {
        if (N < 1) throw std::invalid_argument("Alphabet: level must be >= 1");
        std::vector<std::string> names{"A"};
        if (N == 1)
            names.push_back("B");
        else if (N == 2) {
            names.push_back("b1");
            names.push_back("bm1");
        } else if (N == 4) {
            names.insert(names.end(), {"b1", "bi", "bm1", "bmi"});
        } else {
            for (int k = 0; k < N; ++k) names.push_back("br" + std::to_string(k));
        }
        LieCombo c;
        for (int i = 0; i <= N; ++i) c.emplace_back(i, mpq_class(-1));
        return std::make_shared<const Alphabet>(std::move(names),
                                                std::map<std::string, LieCombo>{{"C", c}});
    }

    /// The six generators t_ij, 1 <= i < j <= 4, in the fixed order
    /// t12 < t13 < t14 < t23 < t24 < t34. Alias Z = sum of all generators.
    static Ptr t4() {
        std::vector<std::string> names{"t12", "t13", "t14", "t23", "t24", "t34"};
        LieCombo z;
        for (int i = 0; i < 6; ++i) z.emplace_back(i, mpq_class(1));
        return std::make_shared<const Alphabet>(std::move(names),
                                                std::map<std::string, LieCombo>{{"Z", z}});
    }
};

} // namespace cyclas
