#pragma once

#include "weylhodge/partitions/partition.hpp"

#include <vector>

namespace weylhodge {

/// Young diagram filled with 1..d, stored row by row.
class FilledTableau {
public:
    /// Throws InvalidArgument unless rows match a partition and the filling is
    /// a bijection onto 1..d.
    explicit FilledTableau(std::vector<std::vector<int>> rows);

    /// Canonical filling: 1..λ_1 along the first row, then the next row, etc.
    static FilledTableau row_major(const Partition& shape);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    std::vector<std::vector<int>> columns() const;
    int size() const noexcept { return shape_.size(); }

    /// Rows and columns strictly increasing.
    bool is_standard() const;

    friend bool operator==(const FilledTableau&, const FilledTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Every standard filling of the shape, by brute force over insertion order.
std::vector<FilledTableau> enumerate_standard_tableaux(const Partition& shape);

} // namespace weylhodge
