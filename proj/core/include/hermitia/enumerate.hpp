#pragma once

#include <optional>
#include <vector>

#include "hermitia/qform.hpp"

namespace hermitia {

struct RepresentationWitness {
    i64 t = 0;
    std::vector<i64> vec;
};

/// Complete search for an integer vector attaining t. Bounds come from an
/// exact rational triangular decomposition of the Gram, so no attaining
/// vector lies outside the searched box. Requires a positive-definite form.
std::optional<RepresentationWitness> represents(const QuadraticForm& q, i64 t);

/// Membership mask over 0..B: mask[t] iff some integer vector attains t.
std::vector<bool> represented_set(const QuadraticForm& q, i64 B);

/// All vectors with 1 <= value <= B, one representative per +-v pair
/// (last nonzero coordinate positive), in deterministic order.
std::vector<RepresentationWitness> vectors_up_to(const QuadraticForm& q, i64 B);

struct TruantResult {
    bool exhausted = false;      // all of 1..cap represented
    i64 value = 0;               // smallest non-represented value when !exhausted
};
/// Accepts positive-semidefinite forms of any rank; degenerate input is
/// restricted to its nondegenerate part first.
TruantResult truant(const QuadraticForm& q, i64 cap = 1000);

/// Thread budget shared by the parallel sweeps (HERMITIA_THREADS, default all cores).
int thread_budget();

namespace detail {
/// Set inside worker threads to keep nested sweeps sequential.
extern thread_local bool force_sequential;
}

}  // namespace hermitia
