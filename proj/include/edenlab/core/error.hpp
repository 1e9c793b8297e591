#pragma once
// Error taxonomy for the growth laboratory.
//
// Every failure mode in the library maps onto one of four exception types so
// that callers (and the CLI) can translate outcomes into stable exit codes:
//
//   usage_error, limit_error  -> the request is at fault       (CLI exit 2)
//   tie_error, invariant_error -> the computation is at fault  (CLI exit 1)

#include <stdexcept>
#include <string>

namespace edenlab {

/// A malformed or unsupported request: bad graph descriptor, invalid flag
/// combination, unknown vertex id, pattern violating a hypothesis, and so on.
class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request that exceeds a documented resource cap (enumeration
/// budgets, dimension/degree caps). The message names the cap; the caller is
/// expected to shrink the request, not to retry.
class limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two stochastic event times coincided exactly. The affected trial is aborted
/// rather than resolved by an arbitrary tie-break, so downstream statistics are
/// never contaminated by an undocumented convention. (With 53-bit uniform
/// draws this has probability ~2^-53 per event; the code path exists so the
/// case is handled, not ignored.)
class tie_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant that must hold by construction failed: boundary
/// bookkeeping mismatch, subadditivity violation, replay divergence. Indicates
/// a bug or tampered input, never a statistical fluctuation.
class invariant_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace edenlab
