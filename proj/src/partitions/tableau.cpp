#include "weylhodge/partitions/tableau.hpp"

#include "weylhodge/errors.hpp"

namespace weylhodge {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

} // namespace

FilledTableau::FilledTableau(std::vector<std::vector<int>> rows) : shape_(shape_of(rows)) {
    if (static_cast<int>(rows.size()) != shape_.num_parts()) throw InvalidArgument("tableau has empty rows");
    const int d = shape_.size();
    std::vector<bool> seen(d + 1, false);
    for (const auto& r : rows)
        for (int x : r) {
            if (x < 1 || x > d || seen[x]) throw InvalidArgument("tableau filling is not a bijection onto 1..d");
            seen[x] = true;
        }
    rows_ = std::move(rows);
}

FilledTableau FilledTableau::row_major(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> r(len);
        for (auto& x : r) x = next++;
        rows.push_back(std::move(r));
    }
    return FilledTableau(std::move(rows));
}

std::vector<std::vector<int>> FilledTableau::columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
    for (const auto& r : rows_)
        for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
}

bool FilledTableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    return true;
}

namespace {

// Place d, d-1, ... into removable corners; every standard tableau arises once.
void fill_corners(std::vector<std::vector<int>>& rows, std::vector<int>& lengths, int next,
                  std::vector<FilledTableau>& out) {
    if (next == 0) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const int len = lengths[i];
        if (len == 0) continue;
        const bool corner = i + 1 == lengths.size() || lengths[i + 1] < len;
        if (!corner) continue;
        rows[i][len - 1] = next;
        --lengths[i];
        fill_corners(rows, lengths, next - 1, out);
        ++lengths[i];
    }
}

} // namespace

std::vector<FilledTableau> enumerate_standard_tableaux(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (int len : shape.parts()) rows.emplace_back(len, 0);
    std::vector<int> lengths = shape.parts();
    std::vector<FilledTableau> out;
    if (shape.size() == 0) {
        out.emplace_back(rows);
        return out;
    }
    fill_corners(rows, lengths, shape.size(), out);
    return out;
}

} // namespace weylhodge
