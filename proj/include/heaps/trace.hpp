#ifndef HEAPS_TRACE_HPP
#define HEAPS_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heaps/core.hpp"

namespace heaps {

struct TraceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One replayable heap operation. Ordinals refer to insertion order across
/// the whole trace, in file order, zero-based, counting inserts inside
/// nested union blocks.
struct TraceOp {
    enum class Kind { Insert, ExtractMin, DecreaseKey, Delete, Union };

    Kind kind = Kind::Insert;
    Key key = 0;               // Insert and DecreaseKey
    std::uint64_t ordinal = 0;  // DecreaseKey and Delete targets
    std::vector<TraceOp> block;  // Union: ops that build the heap to merge

    static TraceOp insert(Key k) { return {Kind::Insert, k, 0, {}}; }
    static TraceOp extract_min() { return {Kind::ExtractMin, 0, 0, {}}; }
    static TraceOp decrease_key(std::uint64_t ord, Key k) {
        return {Kind::DecreaseKey, k, ord, {}};
    }
    static TraceOp delete_node(std::uint64_t ord) { return {Kind::Delete, 0, ord, {}}; }
    static TraceOp union_block(std::vector<TraceOp> ops) {
        return {Kind::Union, 0, 0, std::move(ops)};
    }
};

/// A serialized operation sequence. Text form, one op per line:
///   i <key>            insert
///   x                  extract-min
///   d <ordinal> <key>  decrease-key
///   del <ordinal>      delete
///   u {                union: build a second heap from the block...
///   }                  ...then merge it into the current heap
/// Lines beginning with '#' are comments; integers are decimal.
struct OpTrace {
    std::vector<TraceOp> ops;

    std::string to_text() const;
    static OpTrace parse(const std::string& text);
    static OpTrace load_file(const std::string& path);

    /// Total ops including those nested in union blocks (the union op
    /// itself counts as one).
    std::size_t op_count() const;
    std::size_t insert_count() const;
    /// Keys of all inserts in file order — the input sequence the
    /// presortedness measures are computed on.
    std::vector<Key> insert_keys() const;
};

}  // namespace heaps

#endif  // HEAPS_TRACE_HPP
