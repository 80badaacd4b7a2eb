#include "desub/normalize.hpp"

#include <map>

namespace desub {

namespace {

KonigChain shift_chain(const KonigChain& chain, std::size_t k) {
    KonigChain out;
    out.letter_cycle = chain.letter_cycle;
    std::size_t e = chain.entry.size();
    if (k < e)
        out.entry.assign(chain.entry.begin() + static_cast<long>(k),
                         chain.entry.end());
    std::size_t rot = k < e ? 0 : (k - e) % chain.cycle.size();
    for (std::size_t j = 0; j < chain.cycle.size(); ++j)
        out.cycle.push_back(chain.cycle[(rot + j) % chain.cycle.size()]);
    return out;
}

bool is_single_letter_power(const LimitPoint& lp, Letter alpha) {
    if (!lp.is_periodic()) return false;
    EventuallyPeriodicWord norm = lp.periodic->normalized();
    return norm.preperiod().empty() && norm.period() == std::string(1, alpha);
}

} // namespace

Word NormalizationResult::normalized_tail_prefix(std::size_t n) const {
    std::size_t drop = pending_runs.back();
    Word w = deepest_view.prefix(n + drop);
    return w.substr(drop, n);
}

NormalizationResult normalize_directive(const DirectiveSpec& spec,
                                        std::size_t depth) {
    if (depth < 1) throw Error("normalize_directive: depth must be >= 1");
    for (std::size_t k = 0; k < spec.preperiod_size() + spec.period_size(); ++k) {
        auto tag = spec.name_at(k).tag;
        if (tag != GeneratorName::Tag::L && tag != GeneratorName::Tag::R)
            throw Error("normalize_directive handles only L and R generators; "
                        "found " + spec.name_at(k).token());
    }

    KonigChain chain = default_chain(spec);
    // Limit views of every level along the shifted chain; w_k = sigma_{k+1}(w_{k+1}).
    std::vector<LimitPoint> views;
    views.reserve(depth + 1);
    for (std::size_t k = 0; k <= depth; ++k)
        views.push_back(limit_point_of_chain(spec.suffix(k), shift_chain(chain, k)));

    NormalizationResult result;
    result.deepest_view = views[depth];

    std::size_t r = spec.preperiod_size();
    std::size_t c = chain.cycle.size();
    std::size_t stable_from = std::max(r, chain.entry.size());

    // Detect repetition of the rewriting state (level class, pending run).
    // When the level word is alpha^omega the pending run is immaterial and
    // is collapsed to keep the state space finite.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen_states;
    std::optional<std::pair<std::size_t, std::size_t>> cycle_marks; // k1 < k2

    std::size_t n = 0; // pending run at the current level
    result.pending_runs.push_back(n);
    for (std::size_t k = 0; k < depth; ++k) {
        Word head = views[k].prefix(n + 2);
        Letter alpha = head[0];
        Letter beta = head[n]; // first letter of w'_k
        result.witness_first_letters.push_back(beta);

        if (k >= stable_from && !cycle_marks) {
            std::size_t cls = (k - stable_from) % c;
            std::size_t run_key = is_single_letter_power(views[k], alpha) ? 0 : n;
            auto key = std::make_pair(cls, run_key);
            auto it = seen_states.find(key);
            if (it != seen_states.end())
                cycle_marks = std::make_pair(it->second, k);
            else
                seen_states[key] = k;
        }

        const GeneratorName& sigma = spec.name_at(k);
        bool is_L = sigma.tag == GeneratorName::Tag::L;
        Letter g = sigma.a;
        GeneratorName out = sigma;
        std::size_t n_next = 0;

        if (n == 0) {
            if (!is_L && g == alpha) {
                out = GeneratorName::L(alpha);
                n_next = 1;
            } else {
                out = sigma;
                n_next = 0;
            }
        } else if (is_L && g == alpha) {
            if (beta != alpha) {
                out = GeneratorName::R(alpha);
                n_next = n - 1;
            } else {
                out = GeneratorName::L(alpha);
                n_next = n;
            }
        } else if (is_L) {
            throw Error("normalize_directive: inconsistent witness (L_" +
                        std::string(1, g) + " applied to a word starting with " +
                        std::string(1, alpha) + ")");
        } else if (g != alpha) {
            // R_beta with beta != alpha forces a pending run of exactly 1.
            if (n != 1)
                throw Error("normalize_directive: inconsistent witness (run " +
                            std::to_string(n) + " before R_" + std::string(1, g) +
                            ")");
            out = GeneratorName::L(g);
            n_next = 1;
        } else {
            // R_alpha: the level below starts alpha^n beta' or alpha^{n+1}.
            Word below = views[k + 1].prefix(n + 1);
            if (below[n] == alpha) {
                out = GeneratorName::L(alpha);
                n_next = n + 1;
            } else {
                out = GeneratorName::R(alpha);
                n_next = n;
            }
        }
        result.normalized.push_back(out);
        n = n_next;
        result.pending_runs.push_back(n);
    }
    {
        Word head = views[depth].prefix(n + 1);
        result.witness_first_letters.push_back(head[n]);
    }

    if (cycle_marks) {
        std::size_t k1 = cycle_marks->first, k2 = cycle_marks->second;
        std::vector<GeneratorName> pre(result.normalized.begin(),
                                       result.normalized.begin() +
                                           static_cast<long>(k1));
        std::vector<GeneratorName> per(result.normalized.begin() +
                                           static_cast<long>(k1),
                                       result.normalized.begin() +
                                           static_cast<long>(k2));
        result.periodic_form =
            DirectiveSpec(spec.alphabet(), std::move(pre), std::move(per));
    }
    return result;
}

} // namespace desub
