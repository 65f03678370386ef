#pragma once

// Sentence-level n-gram statistics summed over the corpus (single-pass GLEU).

#include <cstddef>
#include <string>
#include <vector>

#include "kagaskit/alignment.hpp"

namespace kagaskit::m2 {

inline constexpr double kGleuFloor = 1e-12;

struct GleuStats {
  std::size_t hyp_len = 0;
  std::size_t ref_len = 0;
  std::vector<double> numerators;    // per order, 1..max_n
  std::vector<double> denominators;
};

// Numerator for order n: matches against the reference minus the hypothesis
// n-grams that also occur in the source but not in the reference, floored at
// 0 per sentence. Denominator: max(hyp_len + 1 - n, 0).
GleuStats gleu_stats(const std::vector<align::Tokens>& sources,
                     const std::vector<align::Tokens>& references,
                     const std::vector<align::Tokens>& hypotheses, std::size_t max_n = 4);

double gleu_from_stats(const GleuStats& stats);

// Throws InputError (m2.hpp) on an empty corpus, mismatched sizes or max_n 0.
double gleu(const std::vector<align::Tokens>& sources,
            const std::vector<align::Tokens>& references,
            const std::vector<align::Tokens>& hypotheses, std::size_t max_n = 4);

}  // namespace kagaskit::m2
