#include "coordlab/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace coordlab {

namespace {

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

double entropy_of(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) h -= xlog2x(p);
    return std::max(h, 0.0);
}

std::vector<double> validate_probs(std::vector<double> probs, const char* what) {
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) {
            std::ostringstream os;
            os << what << ": negative or non-finite entry " << p;
            throw std::invalid_argument(os.str());
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
        std::ostringstream os;
        os << what << ": entries sum to " << sum << ", not 1";
        throw std::invalid_argument(os.str());
    }
    if (sum != 1.0 && sum > 0.0) {
        for (double& p : probs) p /= sum;
    }
    return probs;
}

void check_axis_list(const JointPmf& joint, const std::vector<std::size_t>& axes,
                     const char* what) {
    if (axes.empty()) throw std::invalid_argument(std::string(what) + ": empty axis list");
    for (std::size_t a : axes) {
        if (a >= joint.axis_count())
            throw std::invalid_argument(std::string(what) + ": axis index out of range");
    }
    std::set<std::size_t> seen(axes.begin(), axes.end());
    if (seen.size() != axes.size())
        throw std::invalid_argument(std::string(what) + ": repeated axis");
}

void check_disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                    const char* what) {
    for (std::size_t x : a)
        for (std::size_t y : b)
            if (x == y) throw std::invalid_argument(std::string(what) + ": overlapping axes");
}

// Entropy of the marginal over a subset of axes, without constructing a
// JointPmf (used by every composite measure below).
double subset_entropy(const JointPmf& joint, const std::vector<std::size_t>& axes) {
    std::size_t cells = 1;
    for (std::size_t a : axes) cells *= joint.axis(a).size();
    std::vector<double> marg(cells, 0.0);
    std::vector<std::size_t> idx(joint.axis_count());
    for (std::size_t flat = 0; flat < joint.table_size(); ++flat) {
        joint.unflatten(flat, idx);
        std::size_t m = 0;
        for (std::size_t a : axes) m = m * joint.axis(a).size() + idx[a];
        marg[m] += joint.at_flat(flat);
    }
    return entropy_of(marg);
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("Alphabet: needs at least one symbol");
    std::set<std::string> seen(symbols_.begin(), symbols_.end());
    if (seen.size() != symbols_.size())
        throw std::invalid_argument("Alphabet: duplicate symbol");
}

std::optional<std::size_t> Alphabet::index_of(const std::string& symbol) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }

Alphabet indexed_alphabet(const std::string& prefix, std::size_t size) {
    std::vector<std::string> syms;
    syms.reserve(size);
    for (std::size_t i = 0; i < size; ++i) syms.push_back(prefix + std::to_string(i));
    return Alphabet(std::move(syms));
}

Pmf::Pmf(Alphabet alphabet, std::vector<double> probs) : alphabet_(std::move(alphabet)) {
    if (probs.size() != alphabet_.size())
        throw std::invalid_argument("Pmf: probs length does not match alphabet size");
    probs_ = validate_probs(std::move(probs), "Pmf");
}

JointPmf::JointPmf(std::vector<Alphabet> axes, std::vector<double> table)
    : axes_(std::move(axes)) {
    if (axes_.size() < 2) throw std::invalid_argument("JointPmf: needs at least two axes");
    std::size_t cells = 1;
    for (const Alphabet& a : axes_) {
        shape_.push_back(a.size());
        cells *= a.size();
    }
    if (table.size() != cells)
        throw std::invalid_argument("JointPmf: table size does not match axes");
    strides_.assign(axes_.size(), 1);
    for (std::size_t i = axes_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * shape_[i];
    table_ = validate_probs(std::move(table), "JointPmf");
}

std::size_t JointPmf::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != axes_.size())
        throw std::invalid_argument("JointPmf: index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] >= shape_[i]) throw std::invalid_argument("JointPmf: index out of range");
        flat += index[i] * strides_[i];
    }
    return flat;
}

double JointPmf::at(std::span<const std::size_t> index) const {
    return table_[flat_index(index)];
}

void JointPmf::unflatten(std::size_t flat, std::span<std::size_t> out) const {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        out[i] = flat / strides_[i];
        flat %= strides_[i];
    }
}

ConditionalPmf::ConditionalPmf(Alphabet from, std::vector<Alphabet> to_axes,
                               std::vector<std::vector<double>> rows)
    : from_(std::move(from)), to_axes_(std::move(to_axes)) {
    if (to_axes_.empty()) throw std::invalid_argument("ConditionalPmf: no target axes");
    if (rows.size() != from_.size())
        throw std::invalid_argument("ConditionalPmf: one row per conditioning symbol required");
    std::size_t cells = 1;
    for (const Alphabet& a : to_axes_) cells *= a.size();
    rows_.reserve(rows.size());
    for (auto& r : rows) {
        if (r.size() != cells)
            throw std::invalid_argument("ConditionalPmf: row size does not match target axes");
        rows_.push_back(validate_probs(std::move(r), "ConditionalPmf row"));
    }
}

double ConditionalPmf::prob(std::size_t from_index, std::span<const std::size_t> to_index) const {
    if (to_index.size() != to_axes_.size())
        throw std::invalid_argument("ConditionalPmf: index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < to_index.size(); ++i) {
        if (to_index[i] >= to_axes_[i].size())
            throw std::invalid_argument("ConditionalPmf: index out of range");
        flat = flat * to_axes_[i].size() + to_index[i];
    }
    return rows_.at(from_index).at(flat);
}

JointPmf EmpiricalCounts::normalized() const {
    if (n <= 0) throw std::invalid_argument("EmpiricalCounts: empty");
    std::vector<double> table(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        table[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
    return JointPmf(axes, std::move(table));
}

JointPmf TargetSpec::joint() const {
    if (channel.from_alphabet() != source.alphabet())
        throw std::invalid_argument("TargetSpec: source and channel alphabets differ");
    std::vector<Alphabet> axes;
    axes.push_back(source.alphabet());
    for (const Alphabet& a : channel.to_axes()) axes.push_back(a);
    std::size_t row = channel.row_size();
    std::vector<double> table(source.size() * row);
    for (std::size_t x = 0; x < source.size(); ++x)
        for (std::size_t t = 0; t < row; ++t) table[x * row + t] = source.prob(x) * channel.row(x)[t];
    return JointPmf(std::move(axes), std::move(table));
}

double entropy(const Pmf& p) { return entropy_of(p.probs()); }

double entropy(const JointPmf& p) { return entropy_of(p.table()); }

double conditional_entropy(const JointPmf& joint,
                           const std::vector<std::size_t>& target_axes,
                           const std::vector<std::size_t>& given_axes) {
    check_axis_list(joint, target_axes, "conditional_entropy");
    check_axis_list(joint, given_axes, "conditional_entropy");
    check_disjoint(target_axes, given_axes, "conditional_entropy");
    double h = subset_entropy(joint, concat(target_axes, given_axes)) -
               subset_entropy(joint, given_axes);
    return std::max(h, 0.0);
}

double mutual_information(const JointPmf& joint,
                          const std::vector<std::size_t>& axes1,
                          const std::vector<std::size_t>& axes2,
                          const std::vector<std::size_t>& given_axes) {
    check_axis_list(joint, axes1, "mutual_information");
    check_axis_list(joint, axes2, "mutual_information");
    check_disjoint(axes1, axes2, "mutual_information");
    check_disjoint(axes1, given_axes, "mutual_information");
    check_disjoint(axes2, given_axes, "mutual_information");
    double i;
    if (given_axes.empty()) {
        i = subset_entropy(joint, axes1) + subset_entropy(joint, axes2) -
            subset_entropy(joint, concat(axes1, axes2));
    } else {
        check_axis_list(joint, given_axes, "mutual_information");
        i = subset_entropy(joint, concat(axes1, given_axes)) +
            subset_entropy(joint, concat(axes2, given_axes)) -
            subset_entropy(joint, concat(concat(axes1, axes2), given_axes)) -
            subset_entropy(joint, given_axes);
    }
    return std::max(i, 0.0);
}

double total_variation(const JointPmf& p, const JointPmf& q) {
    if (p.axes() != q.axes())
        throw std::invalid_argument("total_variation: distributions have different axes");
    double s = 0.0;
    for (std::size_t i = 0; i < p.table_size(); ++i)
        s += std::abs(p.at_flat(i) - q.at_flat(i));
    return 0.5 * s;
}

EmpiricalCounts empirical(const std::vector<Alphabet>& axes,
                          const std::vector<std::vector<int>>& sequences) {
    if (axes.size() != sequences.size())
        throw std::invalid_argument("empirical: one sequence per axis required");
    if (axes.empty()) throw std::invalid_argument("empirical: no axes");
    std::size_t n = sequences.front().size();
    if (n == 0) throw std::invalid_argument("empirical: empty sequences");
    std::size_t cells = 1;
    for (std::size_t a = 0; a < axes.size(); ++a) {
        if (sequences[a].size() != n)
            throw std::invalid_argument("empirical: sequence length mismatch");
        cells *= axes[a].size();
    }
    EmpiricalCounts out;
    out.axes = axes;
    out.counts.assign(cells, 0);
    out.n = static_cast<std::int64_t>(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t flat = 0;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            int s = sequences[a][t];
            if (s < 0 || static_cast<std::size_t>(s) >= axes[a].size())
                throw std::invalid_argument("empirical: symbol outside its alphabet");
            flat = flat * axes[a].size() + static_cast<std::size_t>(s);
        }
        ++out.counts[flat];
    }
    return out;
}

EmpiricalCounts empirical(const Alphabet& x_alphabet, const Alphabet& a_alphabet,
                          const Alphabet& b_alphabet, std::span<const int> xs,
                          std::span<const int> as, std::span<const int> bs) {
    std::vector<std::vector<int>> seqs = {std::vector<int>(xs.begin(), xs.end()),
                                          std::vector<int>(as.begin(), as.end()),
                                          std::vector<int>(bs.begin(), bs.end())};
    return empirical({x_alphabet, a_alphabet, b_alphabet}, seqs);
}

JointPmf marginalize(const JointPmf& joint, const std::vector<std::size_t>& keep_axes) {
    check_axis_list(joint, keep_axes, "marginalize");
    std::vector<Alphabet> axes;
    std::size_t cells = 1;
    for (std::size_t a : keep_axes) {
        axes.push_back(joint.axis(a));
        cells *= joint.axis(a).size();
    }
    std::vector<double> table(cells, 0.0);
    std::vector<std::size_t> idx(joint.axis_count());
    for (std::size_t flat = 0; flat < joint.table_size(); ++flat) {
        joint.unflatten(flat, idx);
        std::size_t m = 0;
        for (std::size_t a : keep_axes) m = m * joint.axis(a).size() + idx[a];
        table[m] += joint.at_flat(flat);
    }
    if (axes.size() == 1) {
        // JointPmf requires two or more axes; a single-axis marginal is
        // returned as a degenerate two-axis table over (axis, unit).
        axes.push_back(Alphabet({"*"}));
    }
    return JointPmf(std::move(axes), std::move(table));
}

JointPmf condition(const JointPmf& joint, std::size_t axis, std::size_t symbol) {
    if (axis >= joint.axis_count()) throw std::invalid_argument("condition: axis out of range");
    if (symbol >= joint.axis(axis).size())
        throw std::invalid_argument("condition: symbol out of range");
    std::vector<Alphabet> axes;
    std::size_t cells = 1;
    for (std::size_t a = 0; a < joint.axis_count(); ++a) {
        if (a == axis) continue;
        axes.push_back(joint.axis(a));
        cells *= joint.axis(a).size();
    }
    std::vector<double> table(cells, 0.0);
    std::vector<std::size_t> idx(joint.axis_count());
    double mass = 0.0;
    for (std::size_t flat = 0; flat < joint.table_size(); ++flat) {
        joint.unflatten(flat, idx);
        if (idx[axis] != symbol) continue;
        std::size_t m = 0;
        for (std::size_t a = 0; a < joint.axis_count(); ++a) {
            if (a == axis) continue;
            m = m * joint.axis(a).size() + idx[a];
        }
        table[m] += joint.at_flat(flat);
        mass += joint.at_flat(flat);
    }
    if (mass <= 0.0)
        throw ZeroProbabilityError("condition: conditioning event has probability zero");
    for (double& v : table) v /= mass;
    if (axes.size() == 1) axes.push_back(Alphabet({"*"}));
    return JointPmf(std::move(axes), std::move(table));
}

}  // namespace coordlab
