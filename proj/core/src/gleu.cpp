#include "kagaskit/gleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kagaskit/m2.hpp"

namespace kagaskit::m2 {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const align::Tokens& toks, std::size_t n) {
  NgramCounts out;
  if (toks.size() < n) return out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    ++out[std::vector<std::string>(toks.begin() + static_cast<std::ptrdiff_t>(i),
                                   toks.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

std::size_t count_in(const NgramCounts& c, const std::vector<std::string>& g) {
  auto it = c.find(g);
  return it == c.end() ? 0 : it->second;
}

}  // namespace

GleuStats gleu_stats(const std::vector<align::Tokens>& sources,
                     const std::vector<align::Tokens>& references,
                     const std::vector<align::Tokens>& hypotheses, std::size_t max_n) {
  if (max_n == 0) throw InputError("gleu: max_n must be at least 1");
  if (hypotheses.empty()) throw InputError("gleu: empty corpus");
  if (sources.size() != hypotheses.size() || references.size() != hypotheses.size()) {
    throw InputError("gleu: source, reference and hypothesis counts differ");
  }
  GleuStats st;
  st.numerators.assign(max_n, 0.0);
  st.denominators.assign(max_n, 0.0);
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const auto& h = hypotheses[i];
    st.hyp_len += h.size();
    st.ref_len += references[i].size();
    for (std::size_t n = 1; n <= max_n; ++n) {
      const auto hc = ngrams(h, n);
      const auto rc = ngrams(references[i], n);
      const auto sc = ngrams(sources[i], n);
      double matched = 0.0;
      double penalty = 0.0;
      for (const auto& [g, cnt] : hc) {
        const std::size_t in_ref = count_in(rc, g);
        matched += static_cast<double>(std::min(cnt, in_ref));
        if (in_ref == 0) penalty += static_cast<double>(std::min(cnt, count_in(sc, g)));
      }
      st.numerators[n - 1] += std::max(0.0, matched - penalty);
      st.denominators[n - 1] +=
          h.size() + 1 > n ? static_cast<double>(h.size() + 1 - n) : 0.0;
    }
  }
  return st;
}

double gleu_from_stats(const GleuStats& st) {
  if (st.hyp_len == 0) return 0.0;
  double log_sum = 0.0;
  std::size_t orders = 0;
  for (std::size_t k = 0; k < st.numerators.size(); ++k) {
    // Orders longer than every hypothesis carry no evidence either way.
    if (st.denominators[k] == 0.0) continue;
    log_sum += std::log(std::max(st.numerators[k] / st.denominators[k], kGleuFloor));
    ++orders;
  }
  if (orders == 0) return 0.0;
  const double ratio = static_cast<double>(st.ref_len) / static_cast<double>(st.hyp_len);
  const double bp = std::exp(std::min(0.0, 1.0 - ratio));
  return bp * std::exp(log_sum / static_cast<double>(orders));
}

double gleu(const std::vector<align::Tokens>& sources,
            const std::vector<align::Tokens>& references,
            const std::vector<align::Tokens>& hypotheses, std::size_t max_n) {
  return gleu_from_stats(gleu_stats(sources, references, hypotheses, max_n));
}

}  // namespace kagaskit::m2
