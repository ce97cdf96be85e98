#pragma once

// Tunables shared by the numeric and enumeration routines.

#include <algorithm>
#include <thread>

#include "binform/arith/rat.hpp"

namespace binform {

struct Config {
    /// Starting precision for root isolation.
    long precision_bits = 128;
    /// Precision cap; exceeding it raises PrecisionExhausted.
    long max_precision_bits = 4096;
    /// Largest denominator accepted by rational reconstruction.
    Int denom_bound{1000000};
    /// Half-width of value-set boxes.
    long box = 50;
    /// Memory guard: largest number of lattice points in one value box.
    long max_box_points = 16'000'000;
    /// Worker threads for box enumeration.
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    /// Largest supported form degree for isomorphism search.
    int max_degree = 8;
    /// Structured (JSON) output instead of text.
    bool record = false;

    void validate() const {
        ensure(precision_bits >= 16, ErrorKind::BadParams, "precision_bits must be >= 16");
        ensure(precision_bits <= max_precision_bits, ErrorKind::BadParams,
               "precision_bits must not exceed max_precision_bits");
        ensure(denom_bound >= 1, ErrorKind::BadParams, "denom_bound must be >= 1");
        ensure(box >= 1, ErrorKind::BadParams, "box must be >= 1");
        ensure(max_box_points >= 1, ErrorKind::BadParams, "max_box_points must be >= 1");
        ensure(threads >= 1, ErrorKind::BadParams, "threads must be >= 1");
    }
};

} // namespace binform
