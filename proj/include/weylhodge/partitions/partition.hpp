#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weylhodge {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws InvalidArgument if not a partition.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Sum of the parts, the number of boxes of the diagram.
    int size() const noexcept { return size_; }
    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    /// i-th part (0-based), zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    std::vector<int> column_lengths() const { return conjugate().parts(); }
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of d, reverse-lexicographic: (d), (d-1,1), ..., (1^d).
std::vector<Partition> enumerate_partitions(int d);

struct ColumnData {
    int first = 0;
    int second = 0;
};
ColumnData column_data(const Partition& p);

/// Number of standard Young tableaux of the given shape (hook length formula).
std::uint64_t count_standard_tableaux(const Partition& p);

} // namespace weylhodge
