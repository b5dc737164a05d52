#ifndef HEAPS_VALIDATION_HPP
#define HEAPS_VALIDATION_HPP

#include <string>

namespace heaps {

/// Outcome of a structure or property check. Violations are report contents,
/// never exceptions; only the first one is kept.
struct ValidationReport {
    bool ok = true;
    std::string first_violation;

    void fail(std::string where) {
        if (ok) {
            ok = false;
            first_violation = std::move(where);
        }
    }
    void merge(const ValidationReport& o) {
        if (!o.ok) fail(o.first_violation);
    }
    explicit operator bool() const { return ok; }
};

}  // namespace heaps

#endif  // HEAPS_VALIDATION_HPP
