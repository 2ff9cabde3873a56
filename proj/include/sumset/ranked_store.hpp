#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sumset/meter.hpp"
#include "sumset/sequence.hpp"

namespace sumset {

enum class store_backend { linked_blocks, contiguous };

// A store may remember one cursor position (the insertion pointer).
// cursor_at() resumes a remembered rank in O(1); any other rank costs a
// walk on the blocked backend. Inserting at or before the remembered
// rank drops the memo, never corrupts it.

// Growable sorted buffer backed by one contiguous vector. O(size) shift
// per insert, best locality.
template <key_type K>
class contiguous_store {
public:
    struct cursor {
        std::size_t rank;
    };

    std::size_t size() const noexcept { return v_.size(); }

    cursor cursor_at(std::size_t rank) const {
        if (rank > v_.size())
            raise(errc::rank_out_of_bounds, "cursor rank past end of store");
        return {rank};
    }

    bool at_end(cursor c) const noexcept { return c.rank == v_.size(); }
    K value_at(cursor c) const { return v_[c.rank]; }
    cursor next(cursor c) const noexcept { return {c.rank + 1}; }

    cursor insert_at(cursor c, K key) {
        if (c.rank > 0 && key < v_[c.rank - 1])
            raise(errc::order_violation, "insert would break store order (left neighbor)");
        if (c.rank < v_.size() && v_[c.rank] < key)
            raise(errc::order_violation, "insert would break store order (right neighbor)");
        v_.insert(v_.begin() + static_cast<std::ptrdiff_t>(c.rank), key);
        return c;
    }

    void remember(cursor) noexcept {}

    // First position at or after c whose element exceeds key. Positional
    // maintenance, not a metered operation.
    cursor seek_upper_bound(cursor c, K key) const {
        auto it = std::upper_bound(v_.begin() + static_cast<std::ptrdiff_t>(c.rank), v_.end(),
                                   key);
        return {static_cast<std::size_t>(it - v_.begin())};
    }

    sorted_sequence<K> export_sorted() const {
        return sorted_sequence<K>(v_, typename sorted_sequence<K>::presorted_tag{});
    }

private:
    std::vector<K> v_;
};

// Singly linked list of fixed-capacity blocks. Insert at a held cursor
// shifts at most one block; a full block splits in half.
template <key_type K>
class block_store {
public:
    static constexpr std::uint32_t block_cap = 64;

    struct block {
        K keys[block_cap];
        std::uint32_t count = 0;
        block* next = nullptr;
    };

    struct cursor {
        block* blk;
        std::uint32_t off;
        std::size_t rank;
    };

    block_store() = default;
    block_store(const block_store&) = delete;
    block_store& operator=(const block_store&) = delete;
    block_store(block_store&& other) noexcept { steal(other); }
    block_store& operator=(block_store&& other) noexcept {
        if (this != &other) {
            this->~block_store();
            steal(other);
        }
        return *this;
    }
    ~block_store() {
        block* b = head_;
        while (b) {
            block* nx = b->next;
            delete b;
            b = nx;
        }
    }

    std::size_t size() const noexcept { return size_; }

    cursor cursor_at(std::size_t rank) const {
        if (rank > size_)
            raise(errc::rank_out_of_bounds, "cursor rank past end of store");
        if (has_mark_ && mark_.rank == rank)
            return normalize(mark_);
        std::size_t seen = 0;
        for (block* b = head_; b; b = b->next) {
            if (rank < seen + b->count)
                return {b, static_cast<std::uint32_t>(rank - seen), rank};
            seen += b->count;
        }
        return end_cursor();
    }

    bool at_end(cursor c) const noexcept { return c.blk == nullptr; }
    K value_at(cursor c) const { return c.blk->keys[c.off]; }

    cursor next(cursor c) const noexcept {
        ++c.off;
        ++c.rank;
        return normalize(c);
    }

    cursor insert_at(cursor c, K key) {
        block* b;
        std::uint32_t off;
        if (c.blk == nullptr) {
            if (head_ == nullptr) {
                head_ = tail_ = new block();
                b = head_;
                off = 0;
            } else {
                b = tail_;
                off = b->count;
            }
        } else {
            b = c.blk;
            off = c.off;
        }

        if (off > 0 && key < b->keys[off - 1])
            raise(errc::order_violation, "insert would break store order (left neighbor)");
        if (off < b->count && b->keys[off] < key)
            raise(errc::order_violation, "insert would break store order (right neighbor)");

        if (has_mark_ && c.rank <= mark_.rank)
            has_mark_ = false;

        if (b->count == block_cap) {
            constexpr std::uint32_t half = block_cap / 2;
            block* nb = new block();
            for (std::uint32_t t = half; t < block_cap; ++t)
                nb->keys[t - half] = b->keys[t];
            nb->count = block_cap - half;
            b->count = half;
            nb->next = b->next;
            b->next = nb;
            if (tail_ == b)
                tail_ = nb;
            if (has_mark_ && mark_.blk == b && mark_.off >= half) {
                mark_.blk = nb;
                mark_.off -= half;
            }
            if (off >= half) {
                b = nb;
                off -= half;
            }
        }

        for (std::uint32_t t = b->count; t > off; --t)
            b->keys[t] = b->keys[t - 1];
        b->keys[off] = key;
        ++b->count;
        ++size_;
        return {b, off, c.rank};
    }

    void remember(cursor c) noexcept {
        mark_ = c;
        has_mark_ = (c.blk != nullptr);
    }

    // First position at or after c whose element exceeds key. Skips whole
    // blocks by their last key, then bisects within the stopping block.
    // Positional maintenance, not a metered operation.
    cursor seek_upper_bound(cursor c, K key) const {
        while (c.blk) {
            const block* b = c.blk;
            if (!(key < b->keys[b->count - 1])) {
                c.rank += b->count - c.off;
                c.blk = b->next;
                c.off = 0;
                continue;
            }
            const K* first = b->keys + c.off;
            const K* pos = std::upper_bound(first, b->keys + b->count, key);
            c.rank += static_cast<std::size_t>(pos - first);
            c.off += static_cast<std::uint32_t>(pos - first);
            return c;
        }
        return {nullptr, 0, c.rank};
    }

    sorted_sequence<K> export_sorted() const {
        std::vector<K> out;
        out.reserve(size_);
        for (block* b = head_; b; b = b->next)
            out.insert(out.end(), b->keys, b->keys + b->count);
        return sorted_sequence<K>(std::move(out), typename sorted_sequence<K>::presorted_tag{});
    }

private:
    void steal(block_store& other) noexcept {
        head_ = other.head_;
        tail_ = other.tail_;
        size_ = other.size_;
        mark_ = other.mark_;
        has_mark_ = other.has_mark_;
        other.head_ = other.tail_ = nullptr;
        other.size_ = 0;
        other.has_mark_ = false;
    }

    cursor end_cursor() const noexcept { return {nullptr, 0, size_}; }

    cursor normalize(cursor c) const noexcept {
        while (c.blk && c.off == c.blk->count) {
            c.blk = c.blk->next;
            c.off = 0;
        }
        if (c.blk == nullptr)
            return {nullptr, 0, c.rank};
        return c;
    }

    block* head_ = nullptr;
    block* tail_ = nullptr;
    std::size_t size_ = 0;
    cursor mark_{nullptr, 0, 0};
    bool has_mark_ = false;
};

// Scan forward past every element <= key. One meter tick per element
// examined, including the failing test; running off the end without an
// element test is free.
template <class Store, key_type K>
typename Store::cursor advance_while_leq(const Store& store, typename Store::cursor c, K key,
                                         compare_meter& meter) {
    while (!store.at_end(c)) {
        meter.tick();
        if (!(key < store.value_at(c)))
            c = store.next(c);
        else
            break;
    }
    return c;
}

} // namespace sumset
