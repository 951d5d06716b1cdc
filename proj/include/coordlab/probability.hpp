#pragma once

// Finite-alphabet probability tables and the information measures used
// throughout: entropy, conditional entropy, mutual information, total
// variation, empirical types. All tables are dense and row-major; symbols
// are addressed by their index in the owning Alphabet. Logs are base 2.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coordlab/errors.hpp"

namespace coordlab {

// Sum tolerance for accepting a probability vector; inputs within this of 1
// are renormalized, anything further off is rejected.
inline constexpr double kPmfSumTolerance = 1e-12;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<std::size_t> index_of(const std::string& symbol) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> symbols_;
};

Alphabet binary_alphabet();
Alphabet indexed_alphabet(const std::string& prefix, std::size_t size);

class Pmf {
public:
    Pmf(Alphabet alphabet, std::vector<double> probs);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return probs_.size(); }
    double prob(std::size_t i) const { return probs_.at(i); }
    const std::vector<double>& probs() const { return probs_; }

private:
    Alphabet alphabet_;
    std::vector<double> probs_;
};

// Dense joint distribution over two or more axes.
class JointPmf {
public:
    JointPmf(std::vector<Alphabet> axes, std::vector<double> table);

    std::size_t axis_count() const { return axes_.size(); }
    const Alphabet& axis(std::size_t i) const { return axes_.at(i); }
    const std::vector<Alphabet>& axes() const { return axes_; }
    const std::vector<std::size_t>& shape() const { return shape_; }

    double at(std::span<const std::size_t> index) const;
    double at_flat(std::size_t flat) const { return table_.at(flat); }
    std::size_t table_size() const { return table_.size(); }
    const std::vector<double>& table() const { return table_; }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    void unflatten(std::size_t flat, std::span<std::size_t> out) const;

private:
    std::vector<Alphabet> axes_;
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> strides_;
    std::vector<double> table_;
};

// p(to | from): one distribution over the product of to_axes per
// conditioning symbol. Rows are stored flat in row-major to_axes order.
class ConditionalPmf {
public:
    ConditionalPmf(Alphabet from, std::vector<Alphabet> to_axes,
                   std::vector<std::vector<double>> rows);

    const Alphabet& from_alphabet() const { return from_; }
    const std::vector<Alphabet>& to_axes() const { return to_axes_; }
    const std::vector<double>& row(std::size_t from_index) const { return rows_.at(from_index); }
    std::size_t row_size() const { return rows_.empty() ? 0 : rows_.front().size(); }
    double prob(std::size_t from_index, std::span<const std::size_t> to_index) const;

private:
    Alphabet from_;
    std::vector<Alphabet> to_axes_;
    std::vector<std::vector<double>> rows_;
};

// Integer type counts of realized sequences.
struct EmpiricalCounts {
    std::vector<Alphabet> axes;
    std::vector<std::int64_t> counts;  // dense, row-major
    std::int64_t n = 0;

    JointPmf normalized() const;
};

// Source pmf plus the conditional p(a,b|x) to coordinate toward.
struct TargetSpec {
    Pmf source;
    ConditionalPmf channel;  // from X to (A,B)

    // p0(x) p(a,b|x) over axes (X, A, B).
    JointPmf joint() const;
};

// ---- information measures (bits) ----

double entropy(const Pmf& p);
double entropy(const JointPmf& p);

// H(target_axes | given_axes)
double conditional_entropy(const JointPmf& joint,
                           const std::vector<std::size_t>& target_axes,
                           const std::vector<std::size_t>& given_axes);

// I(axes1; axes2 | given_axes); clamped to >= 0.
double mutual_information(const JointPmf& joint,
                          const std::vector<std::size_t>& axes1,
                          const std::vector<std::size_t>& axes2,
                          const std::vector<std::size_t>& given_axes = {});

double total_variation(const JointPmf& p, const JointPmf& q);

// Type counts of equal-length index sequences, one sequence per axis.
EmpiricalCounts empirical(const std::vector<Alphabet>& axes,
                          const std::vector<std::vector<int>>& sequences);
EmpiricalCounts empirical(const Alphabet& x_alphabet, const Alphabet& a_alphabet,
                          const Alphabet& b_alphabet, std::span<const int> xs,
                          std::span<const int> as, std::span<const int> bs);

JointPmf marginalize(const JointPmf& joint, const std::vector<std::size_t>& keep_axes);
Pmf marginal_pmf(const JointPmf& joint, std::size_t axis);
JointPmf condition(const JointPmf& joint, std::size_t axis, std::size_t symbol);

}  // namespace coordlab
