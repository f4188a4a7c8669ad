#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coref/errors.hpp"
#include "coref/link_table.hpp"
#include "coref/ratio.hpp"

namespace coref {

// A K x K cross-classification of two coders' responses over the same
// items. Cell [i][j] counts items coded category_i by the row coder and
// category_j by the column coder; the diagonal holds the agreements.
class CoincidenceMatrix {
public:
    CoincidenceMatrix(std::vector<std::string> categories,
                      std::vector<std::vector<long long>> counts)
        : categories_(std::move(categories)), counts_(std::move(counts)) {
        const std::size_t k = categories_.size();
        if (k == 0) throw Error("coincidence matrix needs at least one category");
        if (counts_.size() != k)
            throw Error("coincidence matrix row count does not match categories");
        long long n = 0;
        for (const auto& row : counts_) {
            if (row.size() != k)
                throw Error("coincidence matrix must be square");
            for (long long cell : row) {
                if (cell < 0) throw Error("coincidence matrix cells must be non-negative");
                n += cell;
            }
        }
        if (n < 1) throw Error("coincidence matrix grand total must be at least 1");
        n_ = n;
    }

    // Embeds a 2x2 link table with categories {+link, -link}; rows are the
    // response coding, columns the target. Refuses flagged tables: a
    // negative cell is not a count and the chance model breaks on it.
    static CoincidenceMatrix from_link_table(const LinkTable& t) {
        if (t.negative_cell()) throw NegativeCellRefusal();
        return CoincidenceMatrix({"+link", "-link"},
                                 {{t.both, t.response_only}, {t.target_only, t.neither}});
    }

    std::size_t size() const { return categories_.size(); }
    long long n() const { return n_; }
    const std::vector<std::string>& categories() const { return categories_; }
    long long at(std::size_t row, std::size_t col) const { return counts_.at(row).at(col); }

    long long row_marginal(std::size_t k) const {
        long long sum = 0;
        for (long long cell : counts_.at(k)) sum += cell;
        return sum;
    }

    long long col_marginal(std::size_t k) const {
        long long sum = 0;
        for (const auto& row : counts_) sum += row.at(k);
        return sum;
    }

    CoincidenceMatrix transposed() const {
        std::vector<std::vector<long long>> t(size(), std::vector<long long>(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) t[j][i] = counts_[i][j];
        return CoincidenceMatrix(categories_, std::move(t));
    }

private:
    std::vector<std::string> categories_;
    std::vector<std::vector<long long>> counts_;
    long long n_;
};

// Proportion of items on the diagonal: sum of agreements over n.
inline Ratio observed_agreement(const CoincidenceMatrix& m) {
    long long diag = 0;
    for (std::size_t k = 0; k < m.size(); ++k) diag += m.at(k, k);
    return Ratio(diag, m.n());
}

// Chance expectation from the marginals: the row coder picks category k
// with probability row_k/n, the column coder with col_k/n, so by chance
// they coincide on k with the product of the two.
inline Ratio expected_agreement(const CoincidenceMatrix& m) {
    Ratio sum;
    for (std::size_t k = 0; k < m.size(); ++k)
        sum = sum + Ratio(m.row_marginal(k), m.n()) * Ratio(m.col_marginal(k), m.n());
    return sum;
}

// Chance-corrected agreement. Observed and expected agreement and
// disagreement sum to one exactly; kappa and alpha are computed by their
// own formulas and are equal as exact rationals whenever defined. When
// expected agreement is 1 there is no chance-corrected signal left and
// both carry the degenerate marker instead of a number.
struct AgreementResult {
    Ratio observed_agr;      // p_ao
    Ratio expected_agr;      // p_ae
    Ratio observed_dis;      // p_do = 1 - p_ao
    Ratio expected_dis;      // p_de = 1 - p_ae
    Ratio kappa;             // (p_ao - p_ae) / (1 - p_ae), or degenerate
    Ratio alpha;             // 1 - p_do / p_de, or degenerate

    bool degenerate() const { return kappa.is_degenerate(); }
};

inline AgreementResult kappa(const CoincidenceMatrix& m) {
    const Ratio one(1, 1);
    AgreementResult r;
    r.observed_agr = observed_agreement(m);
    r.expected_agr = expected_agreement(m);
    r.observed_dis = one - r.observed_agr;
    r.expected_dis = one - r.expected_agr;

    if (r.expected_agr == one) {
        r.kappa = Ratio::degenerate();
        r.alpha = Ratio::degenerate();
        return r;
    }
    r.kappa = (r.observed_agr - r.expected_agr) / (one - r.expected_agr);
    r.alpha = one - r.observed_dis / r.expected_dis;
    if (r.kappa != r.alpha)
        throw std::logic_error("kappa and alpha diverged; exact arithmetic is broken");
    return r;
}

inline AgreementResult kappa_from_link_table(const LinkTable& t) {
    return kappa(CoincidenceMatrix::from_link_table(t));
}

}  // namespace coref
