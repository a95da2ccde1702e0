#include "chipfire/difftable.hpp"

#include <algorithm>

namespace chipfire {

std::size_t DiffRow::left_half_size() const {
    // positions with 2y <= index
    const std::uint64_t y_last = index / 2;
    if (values.empty() || y_last < y_min) return 0;
    return static_cast<std::size_t>(std::min<std::uint64_t>(y_last - y_min + 1, values.size()));
}

namespace {

void fill_diff(const Row& prev, DiffRow& out, Kernel kernel) {
    out.index = prev.index + 1;
    out.y_min = prev.y_min;
    if (prev.empty()) {
        out.y_min = 0;
        out.values.clear();
        return;
    }
    out.values.resize(prev.size() + 1);
    kernels::diff(kernel, prev.values, out.values);
}

}  // namespace

DiffRow diff_row(const Row& prev, Kernel kernel) {
    DiffRow d;
    fill_diff(prev, d, kernel);
    return d;
}

DiffTableStream::DiffTableStream(unsigned n, Kernel kernel) : rows_(n, std::nullopt, kernel), kernel_(kernel) {}

const DiffRow* DiffTableStream::next() {
    if (done_) return nullptr;
    source_ = rows_.next();
    if (source_ == nullptr) {
        done_ = true;
        return nullptr;
    }
    fill_diff(*source_, current_, kernel_);
    return &current_;
}

std::vector<DiffRow> diff_table(unsigned n) {
    std::vector<DiffRow> out;
    DiffTableStream s(n);
    while (const DiffRow* d = s.next()) out.push_back(*d);
    return out;
}

ChipCount row_max_abs(const DiffRow& d) {
    ChipCount best;
    for (auto v : d.values) best = std::max(best, v.abs());
    return best;
}

bool unimodal_check(const DiffRow& d) {
    const std::size_t half = d.left_half_size();
    ChipDelta prev{0};
    bool falling = false;
    for (std::size_t k = 0; k < half; ++k) {
        const ChipDelta v = d.values[k];
        if (v < prev) {
            falling = true;
        } else if (v > prev && falling) {
            return false;
        }
        prev = v;
    }
    return true;
}

std::vector<Plateau> plateaus(const DiffRow& d) {
    std::vector<Plateau> runs;
    std::size_t k = 0;
    while (k < d.values.size()) {
        std::size_t e = k + 1;
        while (e < d.values.size() && d.values[e] == d.values[k]) ++e;
        if (e - k >= 2) runs.push_back({k, e - k, d.values[k]});
        k = e;
    }
    return runs;
}

std::vector<Sign> sign_row(const DiffRow& d) {
    std::vector<Sign> signs;
    if (d.values.size() < 2) return signs;
    signs.reserve(d.values.size() - 1);
    for (std::size_t k = 0; k + 1 < d.values.size(); ++k) {
        const auto a = d.values[k];
        const auto b = d.values[k + 1];
        signs.push_back(b > a ? Sign::plus : (b < a ? Sign::minus : Sign::zero));
    }
    return signs;
}

std::vector<std::vector<Sign>> sign_map(unsigned n) {
    std::vector<std::vector<Sign>> map;
    DiffTableStream s(n);
    while (const DiffRow* d = s.next()) map.push_back(sign_row(*d));
    return map;
}

std::string to_string(const std::vector<Sign>& signs) {
    std::string s;
    s.reserve(signs.size());
    for (auto c : signs) s.push_back(static_cast<char>(c));
    return s;
}

}  // namespace chipfire
