#pragma once

namespace qcoinv::debug {

/// Negative-control switches. Each one corrupts a structural constant so the
/// verification suites must fail; they exist to prove the suites can fail.
/// Not for concurrent mutation: set before any computation starts.
struct Corruptions {
    bool flip_row_relation = false;   // uses q instead of q^-1 in the row/column swap
    bool flip_antipode_sign = false;  // uses (-q)^(j-i) instead of (-q)^(i-j)
};

Corruptions& corruptions();

}  // namespace qcoinv::debug
