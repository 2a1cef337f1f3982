/*!
  \file matcher.hpp
  \brief The four-phase matching pipeline and batch classification.

  Phase 1 compares minterm counts, phase 2 basic sensitivity signatures,
  phase 3 (optional) advanced K-domain signatures, and phase 4 decides
  exactly through canonical forms, producing a witness transform for
  equivalent pairs.
*/

#pragma once

#include "canonical.hpp"
#include "pruning.hpp"

#include <array>
#include <unordered_map>

namespace npnmatch {

enum class match_phase : uint8_t
{
  p1,
  p2,
  p3,
  p4
};

char const* to_string( match_phase p );

struct match_outcome
{
  bool equivalent = false;
  std::optional<npn_transform> witness;      /*!< set iff equivalent */
  match_phase resolved_phase = match_phase::p4;
  std::optional<reject_reason> reject;       /*!< which signature fired, phases 1-3 */
  std::array<double, 4> phase_seconds{};
  bool collided_after_p2 = false; /*!< phases 1-2 both returned Unknown */
  bool collided_after_p3 = false; /*!< ... and phase 3 did not reject */
};

/*! Ablation switch: phase4_only skips all pruning phases. */
enum class pipeline_mode : uint8_t
{
  full,
  phase4_only
};

/*! \brief A matching context that caches per-function signatures.

  Profiles and canonical forms are computed lazily and cached by function, so
  streams of pairs drawn from a pool never recompute signatures.  Caching can
  be turned off for workloads where every function appears only once.
*/
class match_session
{
public:
  explicit match_session( prune_config cfg = {}, scan_width width = scan_width::w64,
                          pipeline_mode mode = pipeline_mode::full, bool cache = true )
      : cfg_( cfg ), width_( width ), mode_( mode ), cache_( cache )
  {
  }

  match_outcome match( truth_table const& f, truth_table const& g );

  sensitivity_profile const& profile_of( truth_table const& tt );
  canonical_form const& canon_of( truth_table const& tt );

  prune_config const& config() const { return cfg_; }

private:
  prune_config cfg_;
  scan_width width_;
  pipeline_mode mode_;
  bool cache_;
  std::unordered_map<truth_table, sensitivity_profile, truth_table_hash> profiles_;
  std::unordered_map<truth_table, canonical_form, truth_table_hash> canons_;
};

/*! \brief One-shot pair matching. */
match_outcome match_pair( truth_table const& f, truth_table const& g,
                          prune_config const& cfg = {} );

struct class_partition
{
  struct npn_class
  {
    truth_table canon;
    std::vector<size_t> members; /*!< indices into the input list */
  };

  std::vector<npn_class> classes;
  std::vector<size_t> class_of;        /*!< per input function */
  std::vector<npn_transform> to_canon; /*!< witness per input function */

  struct probe_stats
  {
    uint64_t pairs = 0;
    std::array<uint64_t, 4> rejected_at{}; /*!< by phase, cross-class probes */
  };
  probe_stats stats;
};

/*! \brief Buckets functions by canonical form.

  Also probes a sample of cross-class representative pairs through the
  pipeline and records which phase rejects them.

  \throws std::invalid_argument on mixed arity.
*/
class_partition classify( std::vector<truth_table> const& functions,
                          prune_config const& cfg = {} );

} // namespace npnmatch
