#include "weylhodge/partitions/partition.hpp"

#include "weylhodge/errors.hpp"
#include "weylhodge/exactlin/rational.hpp"

#include <sstream>

namespace weylhodge {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
        size_ += parts[i];
    }
    parts_ = std::move(parts);
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw InvalidArgument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(d, d, prefix, out);
    return out;
}

ColumnData column_data(const Partition& p) {
    const auto cols = p.column_lengths();
    return {cols.size() > 0 ? cols[0] : 0, cols.size() > 1 ? cols[1] : 0};
}

std::uint64_t count_standard_tableaux(const Partition& p) {
    const auto cols = p.column_lengths();
    BigInt hooks = 1;
    for (int i = 0; i < p.num_parts(); ++i)
        for (int j = 0; j < p[i]; ++j) hooks *= (p[i] - j - 1) + (cols[j] - i - 1) + 1;
    BigInt f = factorial(static_cast<unsigned long>(p.size())) / hooks;
    return static_cast<std::uint64_t>(to_int64(f));
}

} // namespace weylhodge
