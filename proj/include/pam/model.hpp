#pragma once

#include <cstdint>
#include <stdexcept>

namespace pam {

// Model parameters (m, delta). tau and chi are derived on demand so there is
// a single source of truth.
struct ModelParams {
    int m;
    double delta;

    ModelParams(int m_, double delta_) : m(m_), delta(delta_) {
        if (m < 1)
            throw std::invalid_argument("ModelParams: m must be >= 1");
        if (!(delta > -static_cast<double>(m)))
            throw std::invalid_argument("ModelParams: delta must be > -m");
    }

    double tau() const { return 3.0 + delta / m; }
    double chi() const { return (m + delta) / (2.0 * m + delta); }
};

inline double derive_tau(const ModelParams& p) { return p.tau(); }
inline double derive_chi(const ModelParams& p) { return p.chi(); }

// Reproducible stream identifier: identical (value, stream) gives a
// bit-identical random sequence on every platform.
struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream = 0;
};

} // namespace pam
