#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumset/pairwise.hpp"

namespace sumset {

// One head-of-list entry in the translated merge. Exhausted entries rank
// after every live one, standing in for a +inf sentinel since integer
// keys have no infinity.
template <key_type K>
struct merge_entry {
    K value{};
    std::uint32_t list_index = 0;
    std::uint64_t offset = 0;
    bool exhausted = true;
};

// n-leaf tournament tree caching the winning leaf per internal node.
// Replacing a leaf replays one root-to-leaf path: ceil(log2 n) metered
// comparisons, fewer once lists exhaust. Ties go to the smaller list
// index (the left subtree), which the <= play rule gives for free.
template <key_type K>
class winner_tree {
public:
    winner_tree(std::vector<merge_entry<K>> leaves, compare_meter& meter) : meter_(&meter) {
        std::size_t n = leaves.size();
        base_ = 1;
        while (base_ < n)
            base_ <<= 1;
        entries_ = std::move(leaves);
        entries_.resize(base_); // padding entries stay exhausted
        node_.assign(base_ > 1 ? base_ - 1 : 1, 0);
        if (base_ > 1)
            for (std::size_t v = base_ - 2; v + 1 > 0; --v)
                node_[v] = play(winner_of_child(2 * v + 1), winner_of_child(2 * v + 2));
    }

    const merge_entry<K>& min() const { return entries_[node_[0]]; }
    bool done() const { return min().exhausted; }

    void replace_min(const merge_entry<K>& e) {
        std::size_t leaf = node_[0];
        entries_[leaf] = e;
        std::size_t v = base_ - 1 + leaf;
        while (v > 0) {
            v = (v - 1) / 2;
            node_[v] = play(winner_of_child(2 * v + 1), winner_of_child(2 * v + 2));
        }
    }

private:
    std::size_t winner_of_child(std::size_t v) const {
        return v >= base_ - 1 ? v - (base_ - 1) : node_[v];
    }

    std::size_t play(std::size_t a, std::size_t b) {
        const auto& ea = entries_[a];
        const auto& eb = entries_[b];
        if (ea.exhausted)
            return b;
        if (eb.exhausted)
            return a;
        meter_->tick();
        return !(eb.value < ea.value) ? a : b;
    }

    std::size_t base_;
    std::vector<merge_entry<K>> entries_;
    std::vector<std::size_t> node_;
    compare_meter* meter_;
};

// Merges the n translated copies {z + x : z in Z_prev} for x in X_k into
// one sorted list of length |Z_prev| * n.
template <key_type K>
sorted_sequence<K> merge_translated(const sorted_sequence<K>& z_prev, const sorted_sequence<K>& x_k,
                                    compare_meter& meter) {
    if (z_prev.empty() || x_k.empty())
        raise(errc::empty_input, "translated merge requires non-empty inputs");

    const std::size_t n = x_k.size();
    const std::uint64_t len = z_prev.size();

    std::vector<merge_entry<K>> heads(n);
    for (std::size_t i = 0; i < n; ++i)
        heads[i] = {checked_sum(z_prev[0], x_k[i]), static_cast<std::uint32_t>(i), 0, false};
    winner_tree<K> tree(std::move(heads), meter);

    std::vector<K> out;
    out.reserve(len * n);
    for (std::uint64_t t = 0; t < len * n; ++t) {
        merge_entry<K> top = tree.min();
        out.push_back(top.value);
        if (top.offset + 1 < len) {
            ++top.offset;
            top.value = checked_sum(z_prev[top.offset], x_k[top.list_index]);
        } else {
            top.exhausted = true;
            ++top.offset;
        }
        tree.replace_min(top);
    }
    return sorted_sequence<K>(std::move(out), typename sorted_sequence<K>::presorted_tag{});
}

// Sorts the k-fold sumset: pairwise sort for the first two lists, then
// one translated merge per remaining list.
template <key_type K>
sorted_sequence<K> sort_kfold(std::span<const sorted_sequence<K>> lists, store_backend backend,
                              compare_meter& meter) {
    if (lists.size() < 2)
        raise(errc::arity_error, "k-fold sort requires k >= 2 lists");
    const std::size_t n = lists[0].size();
    for (const auto& l : lists)
        if (l.size() != n)
            raise(errc::length_mismatch, "k-fold sort requires equal-length lists");
    if (n == 0)
        raise(errc::empty_input, "k-fold sort requires non-empty lists");

    sorted_sequence<K> z = sort_sumset(lists[0], lists[1], backend, meter);
    for (std::size_t i = 2; i < lists.size(); ++i)
        z = merge_translated(z, lists[i], meter);
    return z;
}

} // namespace sumset
