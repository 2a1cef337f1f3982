/*!
  \file pruning.hpp
  \brief Signature-based rejection of non-equivalent function pairs.

  Basic pruning compares sensitivity, exact average sensitivity, and the
  sensitivity histogram of a chosen polarity.  Advanced pruning walks the
  distinct sensitivity levels from the top and compares K-domain invariants.
  Both are sound for PN-equivalent inputs; output negation is handled by the
  minority-polarity normalization used in the wrappers below.
*/

#pragma once

#include "k_domain.hpp"
#include "sensitivity.hpp"

#include <optional>

namespace npnmatch {

enum class reject_reason : uint8_t
{
  minterm,
  sensitivity,
  average,
  osv,
  edge_count,
  hamming
};

char const* to_string( reject_reason r );

struct prune_verdict
{
  std::optional<reject_reason> reason; /*!< empty means Unknown */

  bool is_mismatch() const { return reason.has_value(); }

  static prune_verdict mismatch( reject_reason r ) { return {r}; }
  static prune_verdict unknown() { return {}; }
};

/*! How phases 2 and 3 select which signatures to compare.

  minority (the default) follows the overall matching algorithm: each
  function contributes its minority-count polarity, pairings cross over when
  an output negation is forced by the minterm counts, and balanced functions
  are compared under both pairings.  The polarity-selected stage compares the
  scalar signatures (max and exact sum); the unrestricted stage that follows
  compares the full histogram.  It never rejects an NPN-equivalent pair.

  onset_only / offset_only compare just that polarity of both functions with
  no unrestricted pass.  These are sound for PN equivalence only.
*/
enum class polarity_rule : uint8_t
{
  minority,
  onset_only,
  offset_only
};

struct prune_config
{
  int max_iter = 3; /*!< distinct sensitivity levels examined by advanced pruning */
  bool use_advanced = true;
  polarity_rule rule = polarity_rule::minority;
};

struct advanced_prune_stats
{
  uint32_t domains_built_f = 0;
  uint32_t domains_built_g = 0;
};

/*! \brief Basic sensitivity-signature comparison at one polarity.

  Mismatch when the selected s values, exact average-sensitivity sums, or
  sensitivity histograms differ.  Never mismatches PN-equivalent inputs.

  \throws std::invalid_argument on arity mismatch.
*/
prune_verdict basic_prune( sensitivity_profile const& pf, sensitivity_profile const& pg,
                           polarity pol );

/*! \brief Advanced K-domain comparison at one polarity.

  Requires a prior Unknown from basic_prune at the same polarity, so both
  sides enumerate the same descending sequence of sensitivity levels.  At
  most cfg.max_iter levels are examined; domains are built lazily, one level
  at a time.

  \throws std::invalid_argument on arity mismatch.
*/
prune_verdict advanced_prune( truth_table const& f, truth_table const& g,
                              sensitivity_profile const& pf, sensitivity_profile const& pg,
                              prune_config const& cfg, polarity pol,
                              advanced_prune_stats* stats = nullptr );

/*! \brief Phase-2 comparison under a polarity rule (normalization included). */
prune_verdict polarity_basic_prune( sensitivity_profile const& pf, sensitivity_profile const& pg,
                                    polarity_rule rule );

/*! \brief Phase-3 comparison under a polarity rule (normalization included). */
prune_verdict polarity_advanced_prune( truth_table const& f, truth_table const& g,
                                       sensitivity_profile const& pf,
                                       sensitivity_profile const& pg, prune_config const& cfg );

} // namespace npnmatch
