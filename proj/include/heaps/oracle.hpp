#ifndef HEAPS_ORACLE_HPP
#define HEAPS_ORACLE_HPP

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heaps/core.hpp"
#include "heaps/validation.hpp"

namespace heaps {

/// Trivially-correct priority queue: an ordered map keyed by the same
/// (key, seq) total order the real heaps use, including the seq-offset rule
/// on union, so extraction order matches the subjects tie-for-tie.
/// Handles are stable ids; O(log n) everywhere and proud of it.
class OracleHeap {
public:
    using Handle = std::uint64_t;

    Handle insert(Key key) {
        Seq seq = next_seq_++;
        Handle id = seq;  // ids are insertion ordinals
        TotalKey tk{false, key, seq};
        ordered_.emplace(tk, id);
        by_id_.emplace(id, tk);
        return id;
    }

    std::optional<std::pair<Handle, Key>> find_min() const {
        if (ordered_.empty()) return std::nullopt;
        auto it = ordered_.begin();
        return std::make_pair(it->second, it->first.key);
    }

    std::optional<Key> extract_min() {
        if (ordered_.empty()) return std::nullopt;
        auto it = ordered_.begin();
        Key out = it->first.key;
        by_id_.erase(it->second);
        ordered_.erase(it);
        return out;
    }

    void decrease_key(Handle id, Key new_key) {
        TotalKey& tk = locate_(id);
        if (new_key > tk.key) {
            throw ContractViolation("oracle decrease_key: new key exceeds current key");
        }
        ordered_.erase(tk);
        tk.key = new_key;
        ordered_.emplace(tk, id);
    }

    void delete_node(Handle id) {
        TotalKey& tk = locate_(id);
        ordered_.erase(tk);
        by_id_.erase(id);
    }

    /// Mirrors the heaps' union: other's seqs (and ids, which track seqs)
    /// are offset by this oracle's next insertion ordinal. Returns old-id ->
    /// new-id pairs; other is left empty.
    std::vector<std::pair<Handle, Handle>> merge_from(OracleHeap& other) {
        Seq base = next_seq_;
        std::vector<std::pair<Handle, Handle>> remap;
        remap.reserve(other.by_id_.size());
        for (auto& [tk, id] : other.ordered_) {
            TotalKey moved{tk.neg_inf, tk.key, tk.seq + base};
            Handle new_id = id + base;
            ordered_.emplace(moved, new_id);
            by_id_.emplace(new_id, moved);
            remap.emplace_back(id, new_id);
        }
        next_seq_ = base + other.next_seq_;
        other.ordered_.clear();
        other.by_id_.clear();
        other.next_seq_ = 0;
        return remap;
    }

    std::uint64_t size() const { return ordered_.size(); }
    bool empty() const { return ordered_.empty(); }
    bool alive(Handle id) const { return by_id_.count(id) != 0; }

    MetricsRecord metrics() const { return MetricsRecord{}; }

    ValidationReport validate() const {
        ValidationReport rep;
        if (ordered_.size() != by_id_.size()) rep.fail("oracle index maps out of sync");
        return rep;
    }

private:
    TotalKey& locate_(Handle id) {
        auto it = by_id_.find(id);
        if (it == by_id_.end()) throw ContractViolation("oracle: unknown or dead handle");
        return it->second;
    }

    std::map<TotalKey, Handle> ordered_;
    std::unordered_map<Handle, TotalKey> by_id_;
    Seq next_seq_ = 0;
};

}  // namespace heaps

#endif  // HEAPS_ORACLE_HPP
